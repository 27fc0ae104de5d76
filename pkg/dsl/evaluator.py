"""
Multi-Dirac Engine: Script Evaluator
=====================================
Evaluates parsed .mdx scripts against the engine. Values are rationals,
polynomials, multivectors, forms, graded pairs (homogeneous or not) and
admissible forms; `print` and `assert` statements produce Outcome records.

Usage:
    ev = Evaluator()
    for outcome in ev.run(parse(source)):
        print(outcome.text)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Union

from algebra.coeff_ring import Polynomial, format_rational
from algebra.exterior import (
    Chart,
    Form,
    GradedField,
    Multivector,
    contract,
    ext_deriv,
    lie_derivative,
    schouten,
    wedge,
)
from core.exceptions import EvaluationError, MdxError
from dsl.syntax import (
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
    Unary,
    Vector,
    format_expr,
)
from engine.graded_courant import (
    GradedContext,
    GradedPair,
    InhomogeneousSection,
    gauge_transform,
    multi_courant,
    pairing_minus,
    pairing_plus,
    section_wedge,
)
from engine.multidirac import (
    GraphMultiDirac,
    closedness_check,
    jacobiator,
    omega_from_d1,
    rho_project,
    t_d_direct,
    t_d_expanded,
)
from engine.multipoisson import (
    AdmissibleForm,
    hamiltonian_form,
    jacobi_defect,
    poisson_bracket,
    verify_admissible,
)

logger = logging.getLogger("mdx.dsl.evaluator")

Value = Union[Fraction, Polynomial, Multivector, Form, GradedPair, InhomogeneousSection, AdmissibleForm]
Section = Union[GradedPair, InhomogeneousSection]


@dataclass(frozen=True)
class Outcome:
    """Result of a `print` or `assert` statement."""
    kind: str                      # print | assert
    line: int
    text: str
    passed: bool = True
    source: str = ""


@dataclass
class ScriptResult:
    outcomes: list[Outcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> list[Outcome]:
        return [o for o in self.outcomes if not o.passed]


class Evaluator:
    """Script state: the chart, the ambient degree, the graph structure and the let bindings."""

    def __init__(self) -> None:
        self.chart: Optional[Chart] = None
        self.n: Optional[int] = None
        self.graph: Optional[GraphMultiDirac] = None
        self.bindings: dict[str, Value] = {}

    # -- state ---------------------------------------------------------------

    @property
    def context(self) -> GradedContext:
        chart = self.require_chart()
        n = self.n if self.n is not None else max(1, chart.dimension - 1)
        return GradedContext(chart, n)

    def require_chart(self, node: Optional[object] = None) -> Chart:
        if self.chart is None:
            raise self.error("no chart declared", node)
        return self.chart

    def require_graph(self, node: Optional[object] = None) -> GraphMultiDirac:
        if self.graph is None:
            raise self.error("no graph structure declared (use `graph OMEGA;`)", node)
        return self.graph

    @staticmethod
    def error(message: str, node: Optional[object] = None) -> EvaluationError:
        return EvaluationError(message, getattr(node, "line", 0), getattr(node, "column", 0))

    # -- statements ----------------------------------------------------------

    def run(self, script: Script) -> Iterator[Outcome]:
        for stmt in script.statements:
            outcome = self.execute(stmt)
            if outcome is not None:
                yield outcome

    def execute(self, stmt: Statement) -> Optional[Outcome]:
        if isinstance(stmt, ChartDecl):
            self.chart = Chart(stmt.names)
            self.n, self.graph = None, None
            self.bindings.clear()
            logger.debug("Chart %s", self.chart)
            return None
        if isinstance(stmt, AmbientDecl):
            chart = self.require_chart(stmt)
            if self.graph is not None:
                raise self.error("ambient must precede graph", stmt)
            if not 1 <= stmt.n <= chart.dimension:
                raise self.error(f"ambient degree must be in 1..{chart.dimension}, got {stmt.n}", stmt)
            self.n = stmt.n
            return None
        if isinstance(stmt, Let):
            self.bindings[stmt.name] = self.eval(stmt.expr)
            return None
        if isinstance(stmt, GraphDecl):
            omega = self.as_form(self.eval(stmt.omega), stmt.omega)
            self.graph = GraphMultiDirac(self.context, omega)
            logger.debug("Graph structure %s", self.graph)
            return None
        if isinstance(stmt, Assert):
            left, right = self.eval(stmt.left), self.eval(stmt.right)
            source = f"{format_expr(stmt.left)} == {format_expr(stmt.right)}"
            if self.equal(left, right):
                return Outcome("assert", stmt.line, f"ok: {source}", True, source)
            text = f"FAILED: {source}\n  left  = {self.render(left)}\n  right = {self.render(right)}"
            return Outcome("assert", stmt.line, text, False, source)
        value = self.eval(stmt.expr)
        return Outcome("print", stmt.line, self.render(value), True, format_expr(stmt.expr))

    # -- expressions ---------------------------------------------------------

    def eval(self, expr: Expr) -> Value:
        try:
            return self._eval(expr)
        except EvaluationError:
            raise
        except MdxError as e:
            e.add_note(f"in {format_expr(expr)} at {getattr(expr, 'line', 0)}:{getattr(expr, 'column', 0)}")
            raise

    def _eval(self, expr: Expr) -> Value:
        if isinstance(expr, Number):
            return expr.value
        if isinstance(expr, Name):
            return self.lookup(expr)
        if isinstance(expr, Vector):
            chart = self.require_chart(expr)
            return Multivector.basis(chart, [chart.index(expr.ident)])
        if isinstance(expr, Unary):
            return self.negate(self._eval(expr.operand), expr)
        if isinstance(expr, Binary):
            left = self._eval(expr.left)
            if expr.op == "**":
                return self.power(left, expr.right.value, expr)
            right = self._eval(expr.right)
            if expr.op == "+":
                return self.add(left, right, expr)
            if expr.op == "-":
                return self.add(left, self.negate(right, expr), expr)
            if expr.op == "*":
                return self.multiply(left, right, expr)
            return self.wedge(left, right, expr)
        builtin = BUILTINS.get(expr.func)
        if builtin is None:
            raise self.error(f"unknown function {expr.func!r}", expr)
        groups = [[self._eval(arg) for arg in group] for group in expr.groups]
        return builtin(self, expr, groups)

    def lookup(self, node: Name) -> Value:
        ident = node.ident
        if ident in self.bindings:
            return self.bindings[ident]
        chart = self.require_chart(node)
        names = chart.variable_names
        if ident in names:
            return chart.variable(ident)
        if ident.startswith("d") and ident[1:] in names:
            return Form.basis(chart, [chart.index(ident[1:])])
        raise self.error(f"unbound name {ident!r}", node)

    # -- coercions -----------------------------------------------------------

    def as_polynomial(self, value: Value, node: object = None) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, Fraction):
            return self.require_chart(node).constant(value)
        if isinstance(value, GradedField) and (value.degree == 0 or value.is_zero()):
            return value.as_function() if value.degree == 0 else value.chart.zero()
        raise self.error(f"expected a function, got {kind_of(value)}", node)

    def as_form(self, value: Value, node: object = None) -> Form:
        if isinstance(value, Form):
            return value
        if isinstance(value, AdmissibleForm):
            return value.sigma
        if isinstance(value, (Polynomial, Fraction)):
            return Form.function(self.require_chart(node), self.as_polynomial(value, node))
        raise self.error(f"expected a form, got {kind_of(value)}", node)

    def as_multivector(self, value: Value, node: object = None) -> Multivector:
        if isinstance(value, Multivector):
            return value
        if isinstance(value, (Polynomial, Fraction)):
            return Multivector.function(self.require_chart(node), self.as_polynomial(value, node))
        raise self.error(f"expected a multivector, got {kind_of(value)}", node)

    def as_section(self, value: Value, node: object = None) -> Section:
        if isinstance(value, (GradedPair, InhomogeneousSection)):
            return value
        raise self.error(f"expected a pair, got {kind_of(value)}", node)

    def as_pair(self, value: Value, node: object = None) -> GradedPair:
        if isinstance(value, GradedPair):
            return value
        if isinstance(value, InhomogeneousSection):
            if value.is_zero():
                raise self.error("the zero section has no degree; use zero(r)", node)
            if len(value.degrees()) == 1:
                return value.components()[0]
        raise self.error(f"expected a homogeneous pair, got {kind_of(value)}", node)

    def as_admissible(self, value: Value, node: object = None) -> AdmissibleForm:
        if isinstance(value, AdmissibleForm):
            return value
        raise self.error(f"expected an admissible form, got {kind_of(value)}", node)

    # -- arithmetic ----------------------------------------------------------

    def negate(self, value: Value, node: object) -> Value:
        if isinstance(value, AdmissibleForm):
            return AdmissibleForm(value.parent, -value.sigma, -value.gamma)
        return -value

    def add(self, left: Value, right: Value, node: object) -> Value:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left + right
        if is_scalar(left) and is_scalar(right):
            return self.as_polynomial(left, node) + self.as_polynomial(right, node)
        if isinstance(left, AdmissibleForm) and isinstance(right, AdmissibleForm):
            if left.parent != right.parent:
                raise self.error("admissible forms from different graph structures", node)
            return AdmissibleForm(left.parent, left.sigma + right.sigma, left.gamma + right.gamma)
        if isinstance(left, (GradedPair, InhomogeneousSection)) and isinstance(
            right, (GradedPair, InhomogeneousSection)
        ):
            if isinstance(left, GradedPair) and isinstance(right, GradedPair) and (
                left.r == right.r or left.is_zero() or right.is_zero()
            ):
                return left + right
            return InhomogeneousSection.of(left, right)
        if isinstance(left, Form) or isinstance(right, Form):
            return self.as_form(left, node) + self.as_form(right, node)
        if isinstance(left, Multivector) or isinstance(right, Multivector):
            return self.as_multivector(left, node) + self.as_multivector(right, node)
        raise self.error(f"cannot add {kind_of(left)} and {kind_of(right)}", node)

    def multiply(self, left: Value, right: Value, node: object) -> Value:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left * right
        if is_scalar(left) and is_scalar(right):
            return self.as_polynomial(left, node) * self.as_polynomial(right, node)
        if is_scalar(right) and not is_scalar(left):
            left, right = right, left
        if not is_scalar(left):
            raise self.error(f"cannot multiply {kind_of(left)} by {kind_of(right)}; use ^ to wedge", node)
        factor = self.as_polynomial(left, node)
        if isinstance(right, AdmissibleForm):
            return AdmissibleForm(right.parent, right.sigma.scale(factor), right.gamma.scale(factor))
        if isinstance(right, InhomogeneousSection):
            return InhomogeneousSection(right.context, [p.scale(factor) for p in right.components()])
        return right.scale(factor)

    def wedge(self, left: Value, right: Value, node: object) -> Value:
        if is_scalar(left) or is_scalar(right):
            return self.multiply(left, right, node)
        if isinstance(left, (GradedPair, InhomogeneousSection)) and isinstance(
            right, (GradedPair, InhomogeneousSection)
        ):
            if isinstance(left, GradedPair) and isinstance(right, GradedPair):
                return section_wedge(left, right)
            return InhomogeneousSection.of(left).wedge(right)
        if isinstance(left, AdmissibleForm) or isinstance(right, AdmissibleForm):
            left, right = self.as_form(left, node), self.as_form(right, node)
        return wedge(left, right)

    def power(self, base: Value, exponent: Fraction, node: object) -> Value:
        if exponent.denominator != 1 or exponent < 0:
            raise self.error(f"exponent must be a non-negative integer, got {format_rational(exponent)}", node)
        if isinstance(base, Fraction):
            return base ** int(exponent)
        return self.as_polynomial(base, node) ** int(exponent)

    # -- comparison and printing ---------------------------------------------

    def equal(self, left: Value, right: Value) -> bool:
        """Exact equality; a zero scalar equals any zero object, 0-forms compare with functions."""
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left == right
        for a, b in ((left, right), (right, left)):
            if is_scalar(a) and not is_scalar(b):
                if self.as_polynomial(a).is_zero() and is_zero(b):
                    return True
                if isinstance(b, GradedField) and b.degree == 0:
                    return self.as_polynomial(a) == b.as_function()
                if isinstance(b, AdmissibleForm) and b.sigma.degree == 0:
                    return self.as_polynomial(a) == b.sigma.as_function()
                return False
        if is_scalar(left):
            return self.as_polynomial(left) == self.as_polynomial(right)
        if isinstance(left, AdmissibleForm) != isinstance(right, AdmissibleForm):
            a, b = (left, right) if isinstance(left, AdmissibleForm) else (right, left)
            return isinstance(b, Form) and a.sigma == b
        if isinstance(left, GradedPair) and isinstance(right, InhomogeneousSection):
            return right == left
        return left == right

    def render(self, value: Value) -> str:
        if isinstance(value, Fraction):
            return format_rational(value)
        if isinstance(value, Polynomial):
            chart = self.require_chart()
            return value.to_source(chart.variable_names)
        if isinstance(value, AdmissibleForm) and not value.is_admissible:
            return f"{value.to_source()}  # not admissible, defect {value.defect.to_source()}"
        return value.to_source()


def is_scalar(value: object) -> bool:
    return isinstance(value, (Fraction, Polynomial))


def is_zero(value: object) -> bool:
    if isinstance(value, Fraction):
        return value == 0
    if isinstance(value, AdmissibleForm):
        return value.sigma.is_zero() and value.gamma.is_zero()
    return value.is_zero()


def kind_of(value: object) -> str:
    if isinstance(value, Fraction):
        return "number"
    if isinstance(value, Polynomial):
        return "polynomial"
    if isinstance(value, GradedField):
        return f"{value.degree}-{value.KIND}"
    if isinstance(value, GradedPair):
        return f"pair of degree {value.r}"
    if isinstance(value, InhomogeneousSection):
        return "inhomogeneous section"
    if isinstance(value, AdmissibleForm):
        return "admissible form"
    return type(value).__name__


# ---------------------------------------------------------------------------
# Built-in functions
# ---------------------------------------------------------------------------

Builtin = Callable[[Evaluator, Call, list[list[Value]]], Value]


def _d(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (value,), = groups
    if isinstance(value, AdmissibleForm):
        return ext_deriv(value.sigma)
    return ext_deriv(ev.as_form(value, node))


def _contract(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (gamma,), (alpha,) = groups
    return contract(ev.as_multivector(gamma, node), ev.as_form(alpha, node))


def _lie(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (gamma,), (alpha,) = groups
    return lie_derivative(ev.as_multivector(gamma, node), ev.as_form(alpha, node))


def _schouten(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (a, b), = groups
    return schouten(ev.as_multivector(a, node), ev.as_multivector(b, node))


def _pairing(which: str) -> Builtin:
    def pairing(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
        (a, b), = groups
        if isinstance(a, InhomogeneousSection) or isinstance(b, InhomogeneousSection):
            raise ev.error(f"{node.func} of an inhomogeneous section has mixed degrees; pair the components", node)
        fn = pairing_minus if which == "minus" else pairing_plus
        return fn(ev.as_pair(a, node), ev.as_pair(b, node))
    return pairing


def _courant(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (a, b), = groups
    a, b = ev.as_section(a, node), ev.as_section(b, node)
    if isinstance(a, GradedPair) and isinstance(b, GradedPair):
        return multi_courant(a, b)
    return InhomogeneousSection.of(a).bracket(b)


def _gauge(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (sigma,), (a,) = groups
    sigma = ev.as_form(sigma, node)
    a = ev.as_section(a, node)
    if isinstance(a, InhomogeneousSection):
        return InhomogeneousSection(a.context, [gauge_transform(sigma, p) for p in a.components()])
    return gauge_transform(sigma, a)


def _pair(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (gamma,), (sigma,) = groups
    return GradedPair(ev.context, ev.as_multivector(gamma, node), ev.as_form(sigma, node))


def _degree_argument(ev: Evaluator, value: Value, node: Call) -> int:
    if not isinstance(value, Fraction) or value.denominator != 1:
        raise ev.error(f"{node.func} expects an integer degree", node)
    return int(value)


def _zero(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (r,), = groups
    return GradedPair.zero(ev.context, _degree_argument(ev, r, node))


def _triple(fn) -> Builtin:
    def apply(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
        (a, b, c), = groups
        return fn(ev.as_pair(a, node), ev.as_pair(b, node), ev.as_pair(c, node))
    return apply


def _embed(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (gamma,), = groups
    return ev.require_graph(node).embed(ev.as_multivector(gamma, node))


def _omega_d(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (sections,) = groups
    return omega_from_d1([ev.as_pair(s, node) for s in sections])


def _rho(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (a,), = groups
    if isinstance(a, AdmissibleForm):
        return a.gamma
    return rho_project(ev.as_pair(a, node))


def _closed(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    return closedness_check(ev.require_graph(node))


def _poisson(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (a, b), = groups
    return poisson_bracket(ev.as_admissible(a, node), ev.as_admissible(b, node))


def _admissible(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (sigma,), (gamma,) = groups
    G = ev.require_graph(node)
    return AdmissibleForm.create(G, ev.as_form(sigma, node), ev.as_multivector(gamma, node))


def _hamiltonian(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (sigma,), = groups
    return hamiltonian_form(ev.require_graph(node), ev.as_form(sigma, node))


def _verify(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (sigma,), (gamma,) = groups
    G = ev.require_graph(node)
    return verify_admissible(G, ev.as_form(sigma, node), ev.as_multivector(gamma, node)).defect


def _jacobi_defect(ev: Evaluator, node: Call, groups: list[list[Value]]) -> Value:
    (a, b, c), = groups
    return jacobi_defect(ev.as_admissible(a, node), ev.as_admissible(b, node), ev.as_admissible(c, node))


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

BUILTINS: dict[str, Builtin] = {
    "d": _d,
    "i": _contract,
    "L": _lie,
    "sn": _schouten,
    "pairm": _pairing("minus"),
    "pairp": _pairing("plus"),
    "cb": _courant,
    "phi": _gauge,
    "pair": _pair,
    "zero": _zero,
    "td": _triple(t_d_direct),
    "tdx": _triple(t_d_expanded),
    "jac": _triple(jacobiator),
    "embed": _embed,
    "omegad": _omega_d,
    "rho": _rho,
    "closed": _closed,
    "pb": _poisson,
    "adm": _admissible,
    "ham": _hamiltonian,
    "verify": _verify,
    "jd": _jacobi_defect,
}


def evaluate_script(script: Script, evaluator: Optional[Evaluator] = None) -> ScriptResult:
    """Run every statement; raises on structural errors, reports assert failures as outcomes."""
    evaluator = evaluator or Evaluator()
    result = ScriptResult(list(evaluator.run(script)))
    logger.info("Script: %d outcomes, %d failed asserts", len(result.outcomes), len(result.failures))
    return result
