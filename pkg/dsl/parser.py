"""
Multi-Dirac Engine: Script Parser
==================================
Regex lexer and recursive-descent parser for .mdx scripts.

Grammar (loosest first):
    statement := 'chart' IDENT {',' IDENT} ';' | 'ambient' NUMBER ';'
               | 'let' IDENT '=' expr ';' | 'graph' expr ';'
               | 'assert' expr '==' expr ';' | 'print' expr ';'
    expr      := term {('+' | '-') term}
    term      := wedge {['*'] wedge}          juxtaposition multiplies
    wedge     := unary {'^' unary}
    unary     := '-' unary | power
    power     := primary ['**' NUMBER]
    primary   := NUMBER ['/' NUMBER] | '@' IDENT | '(' expr ')'
               | FUNC '(' [group {';' group}] ')' | IDENT
    group     := expr {',' expr}

Usage:
    script = parse(source)
    check_names(script)
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from core.exceptions import ParseError
from dsl.syntax import (
    KEYWORDS,
    AmbientDecl,
    Assert,
    Binary,
    Call,
    ChartDecl,
    Expr,
    GraphDecl,
    Let,
    Name,
    Number,
    Print,
    Script,
    Statement,
    Token,
    Unary,
    Vector,
)

logger = logging.getLogger("mdx.dsl.parser")

# name → accepted argument-group shapes; each shape lists the group sizes, -1 for "one or more"
FUNCTIONS: dict[str, tuple[tuple[int, ...], ...]] = {
    "d": ((1,),),
    "i": ((1, 1),),
    "L": ((1, 1),),
    "sn": ((2,),),
    "pairm": ((2,),),
    "pairp": ((2,),),
    "cb": ((2,),),
    "phi": ((1, 1),),
    "pair": ((1, 1),),
    "zero": ((1,),),
    "td": ((3,),),
    "tdx": ((3,),),
    "jac": ((3,),),
    "embed": ((1,),),
    "omegad": ((-1,),),
    "rho": ((1,),),
    "closed": ((),),
    "pb": ((2,),),
    "adm": ((1, 1),),
    "ham": ((1,),),
    "verify": ((1, 1),),
    "jd": ((3,),),
}

_TOKEN_SPEC = {
    "comment": r"#[^\n]*",
    "newline": r"\n",
    "skip": r"[ \t\r]+",
    "number": r"\d+",
    "ident": r"[A-Za-z_][A-Za-z0-9_]*",
    "op": r"\*\*|==|[-+*^/@(),;=]",
    "error": r".",
}
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKEN_SPEC.items()))

_PRIMARY_START = ("number", "identifier", "@", "(")


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

def tokenize(source: str) -> Iterator[Token]:
    line, line_start = 1, 0
    for mo in _TOKEN_RE.finditer(source):
        kind, value = mo.lastgroup, mo.group()
        column = mo.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, mo.end()
            continue
        if kind in ("skip", "comment"):
            continue
        if kind == "error":
            raise ParseError(f"unexpected character {value!r}", line, column)
        if kind == "ident" and value in KEYWORDS:
            kind = "keyword"
        yield Token(kind, value, line, column)
    yield Token("eof", "", line, len(source) - line_start + 1)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class Parser:
    """One-token-lookahead recursive descent over the token list."""

    def __init__(self, source: str):
        self.tokens = list(tokenize(source))
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "eof":
            self.pos += 1
        return token

    def at(self, value: str) -> bool:
        token = self.current
        return token.kind in ("op", "keyword") and token.value == value

    def fail(self, message: str, expected: Iterable[str] = ()) -> ParseError:
        token = self.current
        found = "end of input" if token.kind == "eof" else repr(token.value)
        return ParseError(f"{message}, found {found}", token.line, token.column, expected)

    def expect(self, value: str, *alternatives: str) -> Token:
        if not self.at(value):
            raise self.fail(f"expected {value!r}", (value, *alternatives))
        return self.advance()

    def expect_kind(self, kind: str, label: str) -> Token:
        if self.current.kind != kind:
            raise self.fail(f"expected {label}", (label,))
        return self.advance()

    # -- statements ----------------------------------------------------------

    def parse_script(self) -> Script:
        statements: list[Statement] = []
        while self.current.kind != "eof":
            statements.append(self.statement())
        return Script(tuple(statements))

    def statement(self) -> Statement:
        token = self.current
        if token.kind != "keyword":
            raise self.fail("expected a statement", sorted(KEYWORDS))
        self.advance()
        where = (token.line, token.column)
        if token.value == "chart":
            names = [self.expect_kind("ident", "identifier").value]
            while self.at(","):
                self.advance()
                names.append(self.expect_kind("ident", "identifier").value)
            self.end_statement(",")
            return ChartDecl(tuple(names), *where)
        if token.value == "ambient":
            n = int(self.expect_kind("number", "number").value)
            self.end_statement()
            return AmbientDecl(n, *where)
        if token.value == "let":
            name = self.expect_kind("ident", "identifier")
            if name.value in FUNCTIONS:
                raise ParseError(f"cannot bind built-in function name {name.value!r}", name.line, name.column)
            self.expect("=")
            expr = self.expr()
            self.end_statement()
            return Let(name.value, expr, *where)
        if token.value == "graph":
            expr = self.expr()
            self.end_statement()
            return GraphDecl(expr, *where)
        if token.value == "assert":
            left = self.expr()
            if not self.at("=="):
                raise self.fail("expected '=='", ("==", "+", "-", "*", "^"))
            self.advance()
            right = self.expr()
            self.end_statement()
            return Assert(left, right, *where)
        expr = self.expr()
        self.end_statement()
        return Print(expr, *where)

    def end_statement(self, *continuations: str) -> None:
        if not self.at(";"):
            after_expr = () if continuations else ("+", "-", "*", "^", "**")
            raise self.fail("expected ';'", (";", *continuations, *after_expr))
        self.advance()

    # -- expressions ---------------------------------------------------------

    def expr(self) -> Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            left = Binary(op.value, left, self.term(), op.line, op.column)
        return left

    def _starts_primary(self) -> bool:
        token = self.current
        return token.kind in ("number", "ident") or self.at("@") or self.at("(")

    def term(self) -> Expr:
        left = self.wedge()
        while True:
            if self.at("*"):
                op = self.advance()
            elif self._starts_primary():
                op = self.current
            else:
                return left
            left = Binary("*", left, self.wedge(), op.line, op.column)

    def wedge(self) -> Expr:
        left = self.unary()
        while self.at("^"):
            op = self.advance()
            left = Binary("^", left, self.unary(), op.line, op.column)
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            op = self.advance()
            return Unary("-", self.unary(), op.line, op.column)
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self.at("**"):
            op = self.advance()
            exponent = self.expect_kind("number", "number")
            base = Binary("**", base, Number(Fraction(int(exponent.value)), exponent.line, exponent.column),
                          op.line, op.column)
        return base

    def primary(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self.advance()
            value = Fraction(int(token.value))
            if self.at("/"):
                self.advance()
                denominator = self.expect_kind("number", "number")
                if int(denominator.value) == 0:
                    raise ParseError("zero denominator", denominator.line, denominator.column)
                value /= int(denominator.value)
            return Number(value, token.line, token.column)
        if self.at("@"):
            self.advance()
            name = self.expect_kind("ident", "identifier")
            return Vector(name.value, token.line, token.column)
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")", "+", "-", "*", "^")
            return inner
        if token.kind == "ident":
            self.advance()
            if token.value in FUNCTIONS and self.at("("):
                return self.call(token)
            return Name(token.value, token.line, token.column)
        raise self.fail("expected an expression", _PRIMARY_START + ("-",))

    def call(self, func: Token) -> Call:
        self.expect("(")
        groups: list[tuple[Expr, ...]] = []
        if not self.at(")"):
            while True:
                group = [self.expr()]
                while self.at(","):
                    self.advance()
                    group.append(self.expr())
                groups.append(tuple(group))
                if not self.at(";"):
                    break
                self.advance()
        self.expect(")", ",", ";")
        node = Call(func.value, tuple(groups), func.line, func.column)
        _check_arity(node)
        return node


def _check_arity(node: Call) -> None:
    shape = tuple(len(g) for g in node.groups)
    accepted = FUNCTIONS[node.func]
    for wanted in accepted:
        if len(wanted) == len(shape) and all(a == -1 or a == s for a, s in zip(wanted, shape)):
            return
    expected = " or ".join(f"{_signature(node.func, a)} takes {_describe(a)}" for a in accepted)
    got = f"got {sum(shape)}"
    if all(len(a) != len(shape) for a in accepted):
        got += f" as {_signature(node.func, shape)}"
    raise ParseError(f"{expected}, {got}", node.line, node.column)


def _signature(func: str, shape: tuple[int, ...]) -> str:
    """`i(_; _)`, `sn(_, _)`, `omegad(_, ...)`."""
    groups = ("_, ..." if n == -1 else ", ".join("_" * n) for n in shape)
    return f"{func}({'; '.join(groups)})"


def _describe(shape: tuple[int, ...]) -> str:
    if not shape:
        return "no arguments"
    if shape == (-1,):
        return "one or more arguments"
    total = sum(shape)
    text = f"{total} argument{'s' if total != 1 else ''}"
    if len(shape) > 1:
        text += " separated by ';'"
    return text


def parse(source: str) -> Script:
    """Parse a whole script; raises ParseError with line:column and the expected-token set."""
    script = Parser(source).parse_script()
    logger.debug("Parsed %d statements", len(script.statements))
    return script


# ---------------------------------------------------------------------------
# Name validation
# ---------------------------------------------------------------------------

def _expr_names(expr: Expr) -> Iterator[Name | Vector]:
    if isinstance(expr, (Name, Vector)):
        yield expr
    elif isinstance(expr, Unary):
        yield from _expr_names(expr.operand)
    elif isinstance(expr, Binary):
        yield from _expr_names(expr.left)
        yield from _expr_names(expr.right)
    elif isinstance(expr, Call):
        for arg in expr.args:
            yield from _expr_names(arg)


def _expressions(stmt: Statement) -> tuple[Expr, ...]:
    if isinstance(stmt, (Let, Print)):
        return (stmt.expr,)
    if isinstance(stmt, GraphDecl):
        return (stmt.omega,)
    if isinstance(stmt, Assert):
        return (stmt.left, stmt.right)
    return ()


def check_names(
    script: Script,
    chart: Optional[Iterable[str]] = None,
    bound: Iterable[str] = (),
) -> None:
    """
    Every name must be bound before use: a let binding, a chart variable x
    or its differential dx; @x needs x in the chart. `chart` and `bound`
    seed the scope when checking a fragment (the REPL).
    """
    variables = set(chart) if chart is not None else None
    bindings = set(bound)
    for stmt in script.statements:
        if isinstance(stmt, ChartDecl):
            variables, bindings = set(stmt.names), set()
            continue
        for expr in _expressions(stmt):
            for node in _expr_names(expr):
                if variables is None:
                    raise ParseError("no chart declared", node.line, node.column, ("chart",))
                if isinstance(node, Vector):
                    if node.ident not in variables:
                        raise ParseError(f"@{node.ident}: unknown chart variable", node.line, node.column)
                    continue
                ident = node.ident
                if ident in bindings or ident in variables:
                    continue
                if ident.startswith("d") and ident[1:] in variables:
                    continue
                raise ParseError(f"unbound name {ident!r}", node.line, node.column)
        if isinstance(stmt, Let):
            bindings.add(stmt.name)
