"""
Multi-Dirac Engine: Multi-Dirac Structures
===========================================
Graph structures D_r = {(Γ, i_Γ Ω)} of an (n+1)-form Ω, generator-spanned
structures, the integrability tensor T_D (direct and expanded), the
Jacobiator, the pre-multisymplectic form of D_1 and the anchor ρ.

On graph sections, with μ = dΩ:
    [[(Γ, i_Γ Ω), (Γ', i_Γ' Ω)]] = ([Γ,Γ'], i_{[Γ,Γ']} Ω − (−1)^r i_{Γ∧Γ'} μ)
    T_D(a, b, c) = (−1)^{r+s} i_{Γ∧Γ'∧Γ''} μ
    jacobiator(a, b, c) = (0, −½ (−1)^{s+t} d T_D(a, b, c))

Usage:
    G = GraphMultiDirac(ctx, omega)
    a, b, c = G.embed(X), G.embed(Y), G.embed(Z)
    t_d_direct(a, b, c) == t_d_expanded(a, b, c)
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from algebra.coeff_ring import Polynomial
from algebra.exterior import Form, Multivector, contract, ext_deriv, lie_derivative, schouten, wedge_all
from core.exceptions import (
    ContextMismatchError,
    DegreeError,
    IsotropyError,
    KindMismatchError,
    StructuralError,
)
from engine.graded_courant import (
    GradedContext,
    GradedPair,
    check_context,
    multi_courant,
    pairing_minus,
)

logger = logging.getLogger("mdx.engine.multidirac")


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# ---------------------------------------------------------------------------
# Graph structures
# ---------------------------------------------------------------------------

class GraphMultiDirac:
    """The multi-Dirac structure presented as the graph of an (n+1)-form Ω."""

    __slots__ = ("context", "omega")

    def __init__(self, context: GradedContext, omega: Form):
        if not isinstance(omega, Form):
            raise KindMismatchError("form", omega.KIND)
        if omega.chart != context.chart:
            raise ContextMismatchError(f"Ω on {omega.chart}, context is {context}")
        if omega.is_zero():
            omega = Form.zero(context.chart, context.n + 1)
        if omega.degree != context.n + 1:
            raise DegreeError(f"Ω must have degree {context.n + 1}, got {omega.degree}", omega.degree)
        self.context = context
        self.omega = omega

    @property
    def chart(self):
        return self.context.chart

    def embed(self, gamma: Multivector) -> "DSection":
        return graph_embed(self, gamma)

    def contains(self, pair: GradedPair) -> bool:
        """True when the pair is a section of this graph."""
        return pair.context == self.context and pair.sigma == contract(pair.gamma, self.omega)

    def is_integrable(self) -> bool:
        return closedness_check(self).is_zero()

    def gauge(self, sigma: Form) -> "GraphMultiDirac":
        """Φ_σ maps this graph onto the graph of Ω + σ."""
        if sigma.degree != self.context.n + 1 and not sigma.is_zero():
            raise DegreeError(f"Gauge form must have degree {self.context.n + 1}, got {sigma.degree}", sigma.degree)
        return GraphMultiDirac(self.context, self.omega + sigma)

    def tensor(self, gamma: Multivector, gamma2: Multivector, gamma3: Multivector) -> Form:
        """T_D on the graph sections of three multivectors, in closed form."""
        r, s = gamma.degree, gamma2.degree
        value = contract(wedge_all(gamma, gamma2, gamma3), closedness_check(self))
        return value.scale(_sign(r + s))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphMultiDirac):
            return NotImplemented
        return self.context == other.context and self.omega == other.omega

    def __hash__(self) -> int:
        return hash((self.context, self.omega))

    def to_source(self) -> str:
        return f"graph {self.omega.to_source()}"

    def __repr__(self) -> str:
        return f"GraphMultiDirac({self.omega.to_source()}, n={self.context.n})"


class DSection(GradedPair):
    """A section (Γ, i_Γ Ω) of a graph structure."""

    __slots__ = ("parent",)

    def __init__(self, parent: GraphMultiDirac, gamma: Multivector):
        super().__init__(parent.context, gamma, contract(gamma, parent.omega), gamma.degree)
        self.parent = parent


def graph_embed(G: GraphMultiDirac, gamma: Multivector) -> DSection:
    """(Γ, i_Γ Ω) for 1 ≤ deg Γ ≤ n."""
    if not isinstance(gamma, Multivector):
        raise KindMismatchError("multivector", gamma.KIND)
    if gamma.chart != G.chart:
        raise ContextMismatchError(f"Multivector on {gamma.chart}, structure on {G.chart}")
    if not 1 <= gamma.degree <= G.context.n:
        raise DegreeError(f"Graph sections have degree 1..{G.context.n}, got {gamma.degree}", gamma.degree)
    return DSection(G, gamma)


def isotropy_defect(G: GraphMultiDirac, gamma: Multivector, gamma2: Multivector) -> Form:
    return pairing_minus(graph_embed(G, gamma), graph_embed(G, gamma2))


def closedness_check(G: GraphMultiDirac) -> Form:
    """dΩ; the graph is integrable iff this vanishes."""
    return ext_deriv(G.omega)


# ---------------------------------------------------------------------------
# Brackets on D and the integrability tensor
# ---------------------------------------------------------------------------

def simplified_bracket(a: GradedPair, b: GradedPair) -> GradedPair:
    """([Γ,Γ'], (−1)^{(r−1)s} £_Γ Σ' − i_Γ' dΣ); agrees with multi_courant on isotropic pairs."""
    context = check_context(a, b)
    r, s = a.r, b.r
    degree = r + s - 1
    if r + s > context.n + 1:
        return GradedPair.zero(context, degree)
    sigma = lie_derivative(a.gamma, b.sigma).scale(_sign((r - 1) * s)) - contract(b.gamma, ext_deriv(a.sigma))
    return GradedPair(context, schouten(a.gamma, b.gamma), sigma, degree)


def t_d_direct(a: GradedPair, b: GradedPair, c: GradedPair) -> Form:
    """T_D(a, b, c) = 2⟨⟨a, [[b, c]]⟩⟩_−."""
    check_context(a, b, c)
    return pairing_minus(a, multi_courant(b, c)).scale(2)


def t_d_expanded(a: GradedPair, b: GradedPair, c: GradedPair) -> Form:
    """
    T_D from Cartan calculus alone, valid for mutually isotropic a, b, c:

        −(−1)^{t(r−1)} [ −(−1)^{(r+s)t} d i_Γ' i_Γ'' Σ + (−1)^{s(t−1)} i_Γ' £_Γ Σ''
                        + (−1)^{r(s−1)} i_Γ £_Γ'' Σ' + (−1)^{t(r−1)} i_Γ'' £_Γ' Σ ]
    """
    context = check_context(a, b, c)
    r, s, t = a.r, b.r, c.r
    degree = context.n + 2 - r - s - t
    if degree < 0:
        return Form.zero(context.chart, degree)
    g1, s1 = a.gamma, a.sigma
    g2, s2 = b.gamma, b.sigma
    g3, s3 = c.gamma, c.sigma
    bracket = (
        ext_deriv(contract(g2, contract(g3, s1))).scale(-_sign((r + s) * t))
        + contract(g2, lie_derivative(g1, s3)).scale(_sign(s * (t - 1)))
        + contract(g1, lie_derivative(g3, s2)).scale(_sign(r * (s - 1)))
        + contract(g3, lie_derivative(g2, s1)).scale(_sign(t * (r - 1)))
    )
    result = bracket.scale(-_sign(t * (r - 1)))
    return result if not result.is_zero() else Form.zero(context.chart, degree)


def jacobiator(a: GradedPair, b: GradedPair, c: GradedPair) -> GradedPair:
    """[[a,[[b,c]]]] + (−1)^{(t−1)(r+s)} [[c,[[a,b]]]] + (−1)^{(r−1)(s+t)} [[b,[[c,a]]]]."""
    context = check_context(a, b, c)
    r, s, t = a.r, b.r, c.r
    first = multi_courant(a, multi_courant(b, c))
    second = multi_courant(c, multi_courant(a, b)).scale(_sign((t - 1) * (r + s)))
    third = multi_courant(b, multi_courant(c, a)).scale(_sign((r - 1) * (s + t)))
    total = first + second + third
    return total if not total.is_zero() else GradedPair.zero(context, r + s + t - 2)


def jacobiator_from_tensor(a: GradedPair, b: GradedPair, c: GradedPair) -> GradedPair:
    """(0, −½ (−1)^{s+t} d T_D(a, b, c)), the Jacobiator on any graph structure."""
    context = check_context(a, b, c)
    degree = a.r + b.r + c.r - 2
    sigma = ext_deriv(t_d_direct(a, b, c)).scale(Fraction(-_sign(b.r + c.r), 2))
    return GradedPair(context, Multivector.zero(context.chart, degree), sigma, degree)


# ---------------------------------------------------------------------------
# D_1 and the anchor
# ---------------------------------------------------------------------------

def omega_from_d1(sections: Sequence[GradedPair]) -> Polynomial:
    """
    Ω_D(v_1, …, v_{n+1}) = i_{v_n ∧ … ∧ v_1} α_{n+1} for degree-1 sections (v_i, α_i).

    Totally antisymmetric when the sections are mutually isotropic; on a
    graph structure it is i_{v_{n+1} ∧ … ∧ v_1} Ω.
    """
    if not sections:
        raise StructuralError("Ω_D needs n + 1 degree-1 sections, got none")
    context = check_context(*sections)
    if len(sections) != context.n + 1:
        raise StructuralError(f"Ω_D needs {context.n + 1} degree-1 sections, got {len(sections)}")
    for i, section in enumerate(sections):
        if section.r != 1:
            raise DegreeError(f"Ω_D argument {i + 1} has degree {section.r}, expected 1", section.r)
    vectors = [s.gamma for s in sections[:-1]]
    value = contract(wedge_all(*reversed(vectors)), sections[-1].sigma)
    return value.as_function() if not value.is_zero() else context.chart.zero()


def rho_project(a: GradedPair) -> Multivector:
    """The anchor ρ(Γ, Σ) = Γ."""
    return a.gamma


# ---------------------------------------------------------------------------
# Spanned structures
# ---------------------------------------------------------------------------

class SpannedStructure:
    """
    An isotropic structure given by finitely many generators of mixed degree.

    Only isotropy of the span is enforced; maximality is not checked.
    """

    def __init__(self, context: GradedContext, generators: Iterable[GradedPair]):
        self.context = context
        self.generators: tuple[GradedPair, ...] = tuple(generators)
        for g in self.generators:
            if g.context != context:
                raise ContextMismatchError(f"Generator from {g.context}, structure is {context}")
        for i, j in combinations_with_replacement(range(len(self.generators)), 2):
            a, b = self.generators[i], self.generators[j]
            if a.r + b.r > context.n + 1:
                continue
            defect = pairing_minus(a, b)
            if not defect.is_zero():
                raise IsotropyError(i, j, defect.to_source())
        logger.debug("Spanned structure with %d generators", len(self.generators))

    @classmethod
    def from_graph(cls, G: GraphMultiDirac, gammas: Iterable[Multivector]) -> "SpannedStructure":
        return cls(G.context, [G.embed(g) for g in gammas])

    def of_degree(self, r: int) -> list[GradedPair]:
        return [g for g in self.generators if g.r == r]

    def d1_component(self) -> list[GradedPair]:
        """Generators of D_1."""
        return self.of_degree(1)

    def tensor_on_generators(self) -> dict[tuple[int, int, int], Form]:
        """Nonzero values of T_D on generator triples."""
        out: dict[tuple[int, int, int], Form] = {}
        gens = self.generators
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                for k, c in enumerate(gens):
                    value = t_d_direct(a, b, c)
                    if not value.is_zero():
                        out[(i, j, k)] = value
        return out

    def omega_d(self, indices: Sequence[int]) -> Polynomial:
        return omega_from_d1([self.generators[i] for i in indices])

