"""
Multi-Dirac Engine: Script Syntax
==================================
Tokens, the abstract syntax tree of .mdx scripts and a source printer.
format_script(parse(text)) is canonical text that parses back to an
equivalent script.

    chart x, y, z;
    ambient 2;
    let a = pair(@x; dy^dz);
    graph dx^dy^dz;
    assert cb(a, a) == zero(1);
    print i(@x ^ @y; dx ^ dy);
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from algebra.coeff_ring import format_rational

KEYWORDS = frozenset({"chart", "ambient", "let", "graph", "assert", "print"})

# binding strength, loosest first
PREC_SUM = 1
PREC_PRODUCT = 2
PREC_WEDGE = 3
PREC_UNARY = 4
PREC_POWER = 5
PREC_ATOM = 6

BINARY_PRECEDENCE = {"+": PREC_SUM, "-": PREC_SUM, "*": PREC_PRODUCT, "^": PREC_WEDGE, "**": PREC_POWER}


class Token(NamedTuple):
    kind: str            # number, ident, keyword, op, eof
    value: str
    line: int
    column: int


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Number:
    value: Fraction
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Name:
    """A let binding, a chart variable x or a differential dx."""
    ident: str
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Vector:
    """@x, the coordinate vector field ∂/∂x."""
    ident: str
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Call:
    """f(a, b; c): arguments in ';'-separated groups of ','-separated expressions."""
    func: str
    groups: tuple[tuple["Expr", ...], ...]
    line: int = 0
    column: int = 0

    @property
    def args(self) -> tuple["Expr", ...]:
        return tuple(arg for group in self.groups for arg in group)


Expr = Union[Number, Name, Vector, Unary, Binary, Call]


# ---------------------------------------------------------------------------
# Statements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChartDecl:
    names: tuple[str, ...]
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class AmbientDecl:
    n: int
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class GraphDecl:
    omega: Expr
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Assert:
    left: Expr
    right: Expr
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Print:
    expr: Expr
    line: int = 0
    column: int = 0


Statement = Union[ChartDecl, AmbientDecl, Let, GraphDecl, Assert, Print]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...] = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def _precedence(expr: Expr) -> int:
    if isinstance(expr, Binary):
        return BINARY_PRECEDENCE[expr.op]
    if isinstance(expr, Unary):
        return PREC_UNARY
    return PREC_ATOM


def _wrap(expr: Expr, minimum: int) -> str:
    text = format_expr(expr)
    return f"({text})" if _precedence(expr) < minimum else text


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Number):
        return format_rational(expr.value)
    if isinstance(expr, Name):
        return expr.ident
    if isinstance(expr, Vector):
        return f"@{expr.ident}"
    if isinstance(expr, Unary):
        return f"-{_wrap(expr.operand, PREC_UNARY)}"
    if isinstance(expr, Call):
        return f"{expr.func}({'; '.join(', '.join(format_expr(a) for a in g) for g in expr.groups)})"
    prec = BINARY_PRECEDENCE[expr.op]
    if expr.op == "**":
        return f"{_wrap(expr.left, PREC_ATOM)}**{format_expr(expr.right)}"
    # left-associative: the right operand needs strictly tighter binding
    left = _wrap(expr.left, prec)
    right = _wrap(expr.right, prec + 1)
    if expr.op == "^":
        return f"{left} ^ {right}"
    return f"{left} {expr.op} {right}"


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, ChartDecl):
        return f"chart {', '.join(stmt.names)};"
    if isinstance(stmt, AmbientDecl):
        return f"ambient {stmt.n};"
    if isinstance(stmt, Let):
        return f"let {stmt.name} = {format_expr(stmt.expr)};"
    if isinstance(stmt, GraphDecl):
        return f"graph {format_expr(stmt.omega)};"
    if isinstance(stmt, Assert):
        return f"assert {format_expr(stmt.left)} == {format_expr(stmt.right)};"
    return f"print {format_expr(stmt.expr)};"


def format_script(script: Script) -> str:
    """Canonical source text, one statement per line."""
    return "".join(format_statement(s) + "\n" for s in script.statements)
