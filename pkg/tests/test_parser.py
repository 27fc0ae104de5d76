"""Tests for the .mdx lexer, parser, printer and name checks."""

from fractions import Fraction

import pytest

from core.exceptions import ParseError
from dsl.parser import check_names, parse, tokenize
from dsl.syntax import (
    AmbientDecl,
    Assert,
    Binary,
    Call,
    ChartDecl,
    GraphDecl,
    Let,
    Name,
    Number,
    Print,
    Unary,
    Vector,
    format_expr,
    format_script,
)


def expr_of(source: str):
    """The expression of a single print statement."""
    (stmt,) = parse(f"print {source};").statements
    return stmt.expr


class TestLexer:
    def test_kinds_and_positions(self):
        tokens = list(tokenize("let a = 3/2 x**2;\n  print @x;"))
        kinds = [(t.kind, t.value) for t in tokens]
        assert kinds[:4] == [("keyword", "let"), ("ident", "a"), ("op", "="), ("number", "3")]
        assert ("op", "**") in kinds
        at = next(t for t in tokens if t.value == "@")
        assert (at.line, at.column) == (2, 9)
        assert tokens[-1].kind == "eof"

    def test_comments_skipped(self):
        tokens = list(tokenize("# header\nprint x; # trailing\n"))
        assert [t.value for t in tokens if t.kind != "eof"] == ["print", "x", ";"]

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as info:
            list(tokenize("print x $ y;"))
        assert (info.value.line, info.value.column) == (1, 9)


class TestStatements:
    def test_all_statement_kinds(self):
        script = parse(
            "chart x, y, z;\n"
            "ambient 2;\n"
            "let a = pair(@x; dy ^ dz);\n"
            "graph dx ^ dy ^ dz;\n"
            "assert cb(a, a) == zero(1);\n"
            "print a;\n"
        )
        kinds = [type(s) for s in script.statements]
        assert kinds == [ChartDecl, AmbientDecl, Let, GraphDecl, Assert, Print]
        chart, ambient, let = script.statements[:3]
        assert chart.names == ("x", "y", "z")
        assert ambient.n == 2
        assert let.name == "a"
        assert script.statements[4].line == 5

    def test_empty_script(self):
        assert parse("# nothing here\n").statements == ()


class TestExpressions:
    def test_rational_literal(self):
        assert expr_of("3/2").value == Fraction(3, 2)

    def test_juxtaposition_multiplies(self):
        e = expr_of("x dy")
        assert isinstance(e, Binary) and e.op == "*"
        assert e.left == Name("x", 1, 7)
        assert e.right.ident == "dy"

    def test_wedge_binds_tighter_than_product(self):
        e = expr_of("x dy ^ dz")
        assert e.op == "*"
        assert e.right.op == "^"

    def test_sum_loosest(self):
        e = expr_of("x + y ^ z")
        assert e.op == "+"
        assert e.right.op == "^"

    def test_left_associative(self):
        e = expr_of("x - y - z")
        assert e.op == "-"
        assert e.left.op == "-"

    def test_unary_minus(self):
        e = expr_of("-x**2")
        assert isinstance(e, Unary)
        assert e.operand.op == "**"

    def test_vector(self):
        assert isinstance(expr_of("@x"), Vector)

    def test_call_groups(self):
        e = expr_of("i(@x ^ @y; dx ^ dy)")
        assert isinstance(e, Call)
        assert len(e.groups) == 2
        assert len(e.args) == 2

    def test_variadic_call(self):
        assert len(expr_of("omegad(a, b, c, d)").args) == 4

    def test_non_function_name_before_paren_is_product(self):
        e = expr_of("x(y + z)")
        assert e.op == "*"
        assert e.right.op == "+"

    def test_nullary_call(self):
        assert expr_of("closed()").groups == ()


class TestErrors:
    def test_missing_semicolon(self):
        with pytest.raises(ParseError) as info:
            parse("print x")
        assert ";" in info.value.expected
        assert (info.value.line, info.value.column) == (1, 8)

    def test_missing_identifier(self):
        with pytest.raises(ParseError) as info:
            parse("let = 3;")
        assert info.value.column == 5
        assert info.value.expected == frozenset({"identifier"})

    def test_assert_needs_comparison(self):
        with pytest.raises(ParseError) as info:
            parse("assert x;")
        assert "==" in info.value.expected

    def test_not_a_statement(self):
        with pytest.raises(ParseError) as info:
            parse("x = 1;")
        assert "let" in info.value.expected

    def test_error_on_later_line(self):
        with pytest.raises(ParseError) as info:
            parse("chart x;\nprint (x + ;")
        assert info.value.line == 2
        assert info.value.column == 12
        assert "2:12" in str(info.value)

    @pytest.mark.parametrize("source", ["d(x, y)", "i(@x, dx)", "closed(x)", "td(a, b)", "pair(@x)"])
    def test_arity(self, source):
        with pytest.raises(ParseError, match="takes"):
            parse(f"print {source};")

    @pytest.mark.parametrize(
        "source, message",
        [
            ("d(x, y)", "d(_) takes 1 argument, got 2"),
            ("i(@x)", "i(_; _) takes 2 arguments separated by ';', got 1 as i(_)"),
            ("i(@x, dx)", "i(_; _) takes 2 arguments separated by ';', got 2 as i(_, _)"),
            ("sn(a)", "sn(_, _) takes 2 arguments, got 1"),
            ("closed(x)", "closed() takes no arguments, got 1 as closed(_)"),
            ("omegad()", "omegad(_, ...) takes one or more arguments, got 0 as omegad()"),
        ],
    )
    def test_arity_message(self, source, message):
        with pytest.raises(ParseError) as info:
            parse(f"print {source};")
        assert str(info.value) == f"1:7: {message}"

    def test_builtin_names_cannot_be_bound(self):
        with pytest.raises(ParseError, match="built-in"):
            parse("let d = 1;")

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="zero denominator"):
            parse("print 1/0;")


class TestFormatting:
    SOURCE = (
        "chart x, y, z;\n"
        "ambient 2;\n"
        "let a = pair(3/2 x**2 @y; -(x + y) dy ^ dz);\n"
        "assert pairp(a, a) == 0;\n"
        "print (x - (y - z)) dx;\n"
    )

    def test_canonical_text(self):
        assert format_expr(expr_of("x dy ^ dz")) == "x * dy ^ dz"
        assert format_expr(expr_of("(x + y) dz")) == "(x + y) * dz"
        assert format_expr(expr_of("x - (y - z)")) == "x - (y - z)"
        assert format_expr(expr_of("-x**2")) == "-x**2"

    def test_format_is_a_fixed_point(self):
        once = format_script(parse(self.SOURCE))
        assert format_script(parse(once)) == once

    def test_round_trip_preserves_structure(self):
        once = parse(format_script(parse(self.SOURCE)))
        assert [type(s) for s in once.statements] == [ChartDecl, AmbientDecl, Let, Assert, Print]
        assert once.statements[1] == AmbientDecl(2, 2, 1)

    def test_statement_forms(self):
        text = format_script(parse("graph dx^dy^dz; print closed();"))
        assert text == "graph dx ^ dy ^ dz;\nprint closed();\n"


class TestNames:
    def test_bound_names_pass(self):
        check_names(parse("chart x, y; let a = x dy; print a ^ dx; print @y;"))

    def test_no_chart(self):
        with pytest.raises(ParseError, match="no chart"):
            check_names(parse("print x;"))

    def test_unbound(self):
        with pytest.raises(ParseError, match="unbound name 'dz'") as info:
            check_names(parse("chart x, y;\nprint x dz;"))
        assert (info.value.line, info.value.column) == (2, 9)

    def test_unknown_vector(self):
        with pytest.raises(ParseError, match="@z"):
            check_names(parse("chart x, y; print @z;"))

    def test_use_before_let(self):
        with pytest.raises(ParseError, match="unbound"):
            check_names(parse("chart x; print a; let a = x;"))

    def test_chart_resets_bindings(self):
        with pytest.raises(ParseError, match="unbound name 'a'"):
            check_names(parse("chart x; let a = x; chart q, p; print a;"))

    def test_fragment_scope(self):
        check_names(parse("print a + dq;"), chart=("q", "p"), bound={"a"})


def test_number_node_positions():
    e = expr_of("x + 12")
    assert e.right == Number(Fraction(12), 1, 11)
