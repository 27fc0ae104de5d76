"""
Multi-Dirac Engine: Multi-Poisson Bracket
==========================================
Admissible forms of a graph structure, their grading, the graded Poisson
bracket and its Jacobi relation up to an explicit exact form.

An (n−r)-form Σ is admissible when some r-multivector Γ_Σ satisfies
i_{Γ_Σ} Ω = dΣ; its grade is |Σ| = n − deg Σ − 1 = r − 1.

    {Σ, Σ'} = −(−1)^k i_{Γ_Σ'} dΣ                    (k = |Σ|)
    witness of {Σ, Σ'} = (−1)^{k+l} [Γ_Σ, Γ_Σ']

For constant Ω the witness can be solved for: i_Γ Ω is linear in Γ's
coefficients with a constant matrix, so each monomial of dΣ gives one exact
rational system.

Usage:
    G = GraphMultiDirac(ctx, omega)
    A = hamiltonian_form(G, sigma)          # solves for the witness
    pb = poisson_bracket(A, B)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from algebra.coeff_ring import Monomial, Polynomial
from algebra.exterior import Form, Multivector, contract, ext_deriv, mask_of, schouten
from algebra.linsolve import fraction_matrix, nullspace, solve
from core.exceptions import (
    DegreeError,
    KindMismatchError,
    NotAdmissibleError,
    NoSolutionError,
    ParentMismatchError,
    UnsupportedInputError,
)
from engine.graded_courant import GradedPair
from engine.multidirac import DSection, GraphMultiDirac

logger = logging.getLogger("mdx.engine.multipoisson")


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# ---------------------------------------------------------------------------
# Admissibility
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibilityCheck:
    admissible: bool
    defect: Form

    def __bool__(self) -> bool:
        return self.admissible


def verify_admissible(G: GraphMultiDirac, sigma: Form, gamma: Multivector) -> AdmissibilityCheck:
    """Defect i_Γ Ω − dΣ; admissible iff it vanishes."""
    if not isinstance(sigma, Form) or not isinstance(gamma, Multivector):
        raise KindMismatchError("form; multivector", f"{sigma.KIND}; {gamma.KIND}")
    n = G.context.n
    if sigma.degree != n - gamma.degree:
        raise DegreeError(
            f"An admissible {sigma.degree}-form needs a witness of degree {n - sigma.degree}, got {gamma.degree}",
            gamma.degree,
        )
    defect = contract(gamma, G.omega) - ext_deriv(sigma)
    return AdmissibilityCheck(defect.is_zero(), defect)


@dataclass(frozen=True, eq=False)
class AdmissibleForm:
    """(Σ, Γ_Σ) with i_{Γ_Σ} Ω = dΣ. Bracket results on non-integrable graphs carry a nonzero defect."""
    parent: GraphMultiDirac
    sigma: Form
    gamma: Multivector
    defect: Optional[Form] = None

    def __post_init__(self) -> None:
        if self.defect is None:
            object.__setattr__(self, "defect", verify_admissible(self.parent, self.sigma, self.gamma).defect)

    @classmethod
    def create(cls, parent: GraphMultiDirac, sigma: Form, gamma: Multivector, strict: bool = True) -> "AdmissibleForm":
        n = parent.context.n
        if sigma.is_zero() and sigma.degree != n - gamma.degree:
            sigma = Form.zero(parent.chart, n - gamma.degree)
        if gamma.is_zero() and gamma.degree != n - sigma.degree:
            gamma = Multivector.zero(parent.chart, n - sigma.degree)
        check = verify_admissible(parent, sigma, gamma)
        if strict and not check.admissible:
            raise NotAdmissibleError(check.defect.to_source())
        return cls(parent, sigma, gamma, check.defect)

    @property
    def grade(self) -> int:
        """|Σ| = n − deg Σ − 1."""
        return self.parent.context.n - self.sigma.degree - 1

    @property
    def is_admissible(self) -> bool:
        return self.defect.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdmissibleForm):
            return NotImplemented
        return self.parent == other.parent and self.sigma == other.sigma and self.gamma == other.gamma

    def __hash__(self) -> int:
        return hash((self.parent, self.sigma, self.gamma))

    def to_source(self) -> str:
        return f"adm({self.sigma.to_source()}; {self.gamma.to_source()})"

    def __str__(self) -> str:
        return self.to_source()


def exact_admissible(G: GraphMultiDirac, tau: Form) -> AdmissibleForm:
    """dτ is admissible with witness 0."""
    sigma = ext_deriv(tau)
    return AdmissibleForm.create(G, sigma, Multivector.zero(G.chart, G.context.n - sigma.degree))


def differential_pair(A: AdmissibleForm) -> DSection:
    """(Γ_Σ, dΣ) as a graph section."""
    return A.parent.embed(A.gamma)


# ---------------------------------------------------------------------------
# Hamiltonian solver (constant Ω)
# ---------------------------------------------------------------------------

def _require_constant(G: GraphMultiDirac) -> None:
    if not G.omega.is_constant():
        raise UnsupportedInputError(
            f"Hamiltonian solver needs constant-coefficient Ω, got {G.omega.to_source()}; "
            "supply a witness and use verify_admissible"
        )


def _contraction_matrix(G: GraphMultiDirac, r: int):
    """Columns: r-subsets J; rows: (n+1−r)-subsets K; entry = coefficient of dx^K in i_{∂J} Ω."""
    chart = G.chart
    columns = [mask_of(c) for c in combinations(range(chart.dimension), r)]
    rows = [mask_of(c) for c in combinations(range(chart.dimension), G.context.n + 1 - r)]
    row_index = {m: i for i, m in enumerate(rows)}
    table = [[0] * len(columns) for _ in rows]
    for j, col in enumerate(columns):
        image = contract(Multivector._raw(chart, r, {col: chart.constant(1)}), G.omega)
        for mask, coeff in image.terms():
            table[row_index[mask]][j] = coeff.constant_value()
    return columns, rows, fraction_matrix(table) if rows else None


def solve_hamiltonian(G: GraphMultiDirac, sigma: Form) -> Optional[Multivector]:
    """A witness Γ with i_Γ Ω = dΣ, or None when none exists."""
    _require_constant(G)
    chart = G.chart
    r = G.context.n - sigma.degree
    if r < 0 or r > chart.dimension:
        raise DegreeError(f"No witness degree for a {sigma.degree}-form with n = {G.context.n}", sigma.degree)
    target = ext_deriv(sigma)
    if target.is_zero():
        return Multivector.zero(chart, r)
    columns, rows, matrix = _contraction_matrix(G, r)
    if matrix is None:
        return None

    # group dΣ by monomial: one linear system per monomial
    by_monomial: dict[Monomial, dict[int, object]] = {}
    for mask, coeff in target.terms():
        for mono, c in coeff.terms():
            by_monomial.setdefault(mono, {})[mask] = c

    result: dict[int, Polynomial] = {}
    for mono, rhs_map in by_monomial.items():
        rhs = [rhs_map.get(m, 0) for m in rows]
        x = solve(matrix, rhs)
        if x is None:
            logger.debug("No witness for %s (monomial %s)", sigma.to_source(), mono)
            return None
        for col, value in zip(columns, x):
            if value:
                term = Polynomial.monomial(mono, value)
                result[col] = result[col] + term if col in result else term
    return Multivector(chart, r, result)


def hamiltonian_kernel(G: GraphMultiDirac, r: int) -> list[Multivector]:
    """Constant r-multivectors Δ spanning {Δ : i_Δ Ω = 0}."""
    _require_constant(G)
    chart = G.chart
    columns, rows, matrix = _contraction_matrix(G, r)
    if matrix is None:
        return [Multivector._raw(chart, r, {col: chart.constant(1)}) for col in columns]
    return [
        Multivector(chart, r, {col: chart.constant(v) for col, v in zip(columns, vec) if v})
        for vec in nullspace(matrix)
    ]


def hamiltonian_form(G: GraphMultiDirac, sigma: Form) -> AdmissibleForm:
    """Σ paired with its solved witness; raises NoSolutionError when Σ is not admissible."""
    gamma = solve_hamiltonian(G, sigma)
    if gamma is None:
        raise NoSolutionError(sigma.to_source())
    return AdmissibleForm.create(G, sigma, gamma)


# ---------------------------------------------------------------------------
# Bracket and Jacobi relation
# ---------------------------------------------------------------------------

def _check_parent(*forms: AdmissibleForm) -> GraphMultiDirac:
    parent = forms[0].parent
    for f in forms[1:]:
        if f.parent != parent:
            raise ParentMismatchError("Admissible forms belong to different structures")
    return parent


def poisson_bracket(A: AdmissibleForm, B: AdmissibleForm) -> AdmissibleForm:
    """{Σ, Σ'} with witness (−1)^{k+l} [Γ_Σ, Γ_Σ']; flagged with its defect when not admissible."""
    parent = _check_parent(A, B)
    k, l = A.grade, B.grade
    n = parent.context.n
    if k + l > n - 1:
        # no admissible forms of grade ≥ n
        degree = A.gamma.degree + B.gamma.degree - 1
        return AdmissibleForm(parent, Form.zero(parent.chart, n - degree), Multivector.zero(parent.chart, degree))
    sigma = contract(B.gamma, ext_deriv(A.sigma)).scale(-_sign(k))
    gamma = schouten(A.gamma, B.gamma).scale(_sign(k + l))
    result = AdmissibleForm.create(parent, sigma, gamma, strict=False)
    if not result.is_admissible:
        logger.warning("Bracket result is not admissible (dΩ ≠ 0?): defect %s", result.defect.to_source())
    return result


def cyclic_sum(A: AdmissibleForm, B: AdmissibleForm, C: AdmissibleForm) -> Form:
    """(−1)^{km+m}{{Σ,Σ'},Σ''} + (−1)^{kl+k}{{Σ',Σ''},Σ} + (−1)^{lm+l}{{Σ'',Σ},Σ'}."""
    _check_parent(A, B, C)
    k, l, m = A.grade, B.grade, C.grade
    first = poisson_bracket(poisson_bracket(A, B), C).sigma.scale(_sign(k * m + m))
    second = poisson_bracket(poisson_bracket(B, C), A).sigma.scale(_sign(k * l + k))
    third = poisson_bracket(poisson_bracket(C, A), B).sigma.scale(_sign(l * m + l))
    return first + second + third


def jacobi_primitive(A: AdmissibleForm, B: AdmissibleForm, C: AdmissibleForm) -> Form:
    """The form whose d is the cyclic sum: (−1)^{m(k+l+1)} i_Γ' i_Γ'' dΣ."""
    _check_parent(A, B, C)
    k, l, m = A.grade, B.grade, C.grade
    return contract(B.gamma, contract(C.gamma, ext_deriv(A.sigma))).scale(_sign(m * (k + l + 1)))


def jacobi_defect(A: AdmissibleForm, B: AdmissibleForm, C: AdmissibleForm) -> Form:
    """Cyclic sum minus d of its explicit primitive; vanishes on integrable graphs."""
    return cyclic_sum(A, B, C) - ext_deriv(jacobi_primitive(A, B, C))


def bracket_of_differentials(A: AdmissibleForm, B: AdmissibleForm) -> GradedPair:
    """([Γ_Σ, Γ_Σ'], (−1)^{k+l} d{Σ, Σ'}), the expected value of [[(Γ_Σ, dΣ), (Γ_Σ', dΣ')]]."""
    parent = _check_parent(A, B)
    k, l = A.grade, B.grade
    degree = A.gamma.degree + B.gamma.degree - 1
    if degree > parent.context.n:
        return GradedPair.zero(parent.context, degree)
    bracket = poisson_bracket(A, B)
    return GradedPair(
        parent.context, schouten(A.gamma, B.gamma), ext_deriv(bracket.sigma).scale(_sign(k + l)), degree
    )
