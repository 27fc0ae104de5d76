"""
Multi-Dirac Engine: Graded Courant Bundle
==========================================
Sections of L = ⊕ L_r with L_r = Λ^r(TZ) × Λ^{n+1−r}(T*Z): the two
form-valued pairings, the section wedge, the multi-Courant bracket and the
gauge automorphisms Φ_σ.

Usage:
    ctx = GradedContext(Chart(("x", "y", "z")), 2)
    a = GradedPair(ctx, Multivector.basis(ctx.chart, [0]), Form.basis(ctx.chart, [1, 2]))
    multi_courant(a, a)          # zero pair of degree 1
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from algebra.coeff_ring import Polynomial
from algebra.exterior import (
    Chart,
    Coefficient,
    Form,
    Multivector,
    contract,
    ext_deriv,
    lie_bracket,
    lie_derivative,
    schouten,
    wedge,
)
from core.exceptions import ContextMismatchError, DegreeError, KindMismatchError

logger = logging.getLogger("mdx.engine.graded_courant")

HALF = Fraction(1, 2)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# ---------------------------------------------------------------------------
# Context and sections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedContext:
    """A chart together with the ambient degree n ≤ dim."""
    chart: Chart
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= self.chart.dimension:
            raise DegreeError(f"Ambient degree must be in 1..{self.chart.dimension}, got {self.n}", self.n)

    def form_degree(self, r: int) -> int:
        """Degree of the form component of L_r."""
        return self.n + 1 - r

    def __str__(self) -> str:
        return f"{self.chart}, n={self.n}"


class GradedPair:
    """A homogeneous section (Γ, Σ) of L_r. Zero pairs keep their formal degree."""

    __slots__ = ("context", "r", "gamma", "sigma")

    def __init__(self, context: GradedContext, gamma: Multivector, sigma: Form, r: Optional[int] = None):
        if not isinstance(gamma, Multivector) or not isinstance(sigma, Form):
            raise KindMismatchError("multivector; form", f"{gamma.KIND}; {sigma.KIND}")
        for part in (gamma, sigma):
            if part.chart != context.chart:
                raise ContextMismatchError(f"Pair component on {part.chart}, context is {context}")
        if r is None:
            if not gamma.is_zero():
                r = gamma.degree
            elif not sigma.is_zero():
                r = context.form_degree(sigma.degree)
            else:
                r = gamma.degree
        if not gamma.is_zero() and gamma.degree != r:
            raise DegreeError(f"Multivector of degree {gamma.degree} in L_{r}", gamma.degree)
        if not sigma.is_zero() and sigma.degree != context.form_degree(r):
            raise DegreeError(
                f"Form of degree {sigma.degree} in L_{r} (expected {context.form_degree(r)})", sigma.degree
            )
        nonzero = not (gamma.is_zero() and sigma.is_zero())
        if nonzero and not 1 <= r <= context.n:
            raise DegreeError(f"Nonzero sections live in L_1..L_{context.n}, got degree {r}", r)
        self.context = context
        self.r = r
        self.gamma = gamma if gamma.degree == r else Multivector.zero(context.chart, r)
        self.sigma = sigma if sigma.degree == context.form_degree(r) else Form.zero(
            context.chart, context.form_degree(r)
        )

    @classmethod
    def zero(cls, context: GradedContext, r: int) -> "GradedPair":
        return cls(context, Multivector.zero(context.chart, r), Form.zero(context.chart, context.form_degree(r)), r)

    @property
    def chart(self) -> Chart:
        return self.context.chart

    def is_zero(self) -> bool:
        return self.gamma.is_zero() and self.sigma.is_zero()

    def _check(self, other: "GradedPair") -> None:
        check_context(self, other)
        if not (self.is_zero() or other.is_zero()) and other.r != self.r:
            raise DegreeError(f"Cannot add sections of degree {self.r} and {other.r}")

    def __add__(self, other: "GradedPair") -> "GradedPair":
        if not isinstance(other, GradedPair):
            return NotImplemented
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return GradedPair(self.context, self.gamma + other.gamma, self.sigma + other.sigma, self.r)

    def __neg__(self) -> "GradedPair":
        return GradedPair(self.context, -self.gamma, -self.sigma, self.r)

    def __sub__(self, other: "GradedPair") -> "GradedPair":
        if not isinstance(other, GradedPair):
            return NotImplemented
        return self + (-other)

    def scale(self, f: Coefficient) -> "GradedPair":
        """f · (Γ, Σ) = (fΓ, fΣ)."""
        return GradedPair(self.context, self.gamma.scale(f), self.sigma.scale(f), self.r)

    def __mul__(self, f: object) -> "GradedPair":
        if isinstance(f, (Polynomial, int, Fraction)) and not isinstance(f, bool):
            return self.scale(f)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPair):
            return NotImplemented
        if other.context != self.context:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.r == other.r and self.gamma == other.gamma and self.sigma == other.sigma

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(("pair", self.context))
        return hash(("pair", self.context, self.r, self.gamma, self.sigma))

    def to_source(self) -> str:
        if self.is_zero():
            return f"zero({self.r})"
        return f"pair({self.gamma.to_source()}; {self.sigma.to_source()})"

    def __str__(self) -> str:
        return self.to_source()

    def __repr__(self) -> str:
        return f"GradedPair[{self.r}]({self.to_source()})"


def check_context(*pairs: GradedPair) -> GradedContext:
    context = pairs[0].context
    for p in pairs[1:]:
        if p.context != context:
            raise ContextMismatchError(f"Sections from different contexts: {context} vs {p.context}")
    return context


# ---------------------------------------------------------------------------
# Pairings and products
# ---------------------------------------------------------------------------

def pairing_minus(a: GradedPair, b: GradedPair) -> Form:
    """⟨⟨a, b⟩⟩_− = ½(i_Γ' Σ − (−1)^{rs} i_Γ Σ')."""
    return _pairing(a, b, -1)


def pairing_plus(a: GradedPair, b: GradedPair) -> Form:
    """⟨⟨a, b⟩⟩_+ = ½(i_Γ' Σ + (−1)^{rs} i_Γ Σ')."""
    return _pairing(a, b, 1)


def _pairing(a: GradedPair, b: GradedPair, sign: int) -> Form:
    context = check_context(a, b)
    r, s = a.r, b.r
    degree = context.n + 1 - r - s
    if degree < 0:
        return Form.zero(context.chart, degree)
    first = contract(b.gamma, a.sigma)
    second = contract(a.gamma, b.sigma)
    if sign * _sign(r * s) > 0:
        total = first + second
    else:
        total = first - second
    return total.scale(HALF) if not total.is_zero() else Form.zero(context.chart, degree)


def section_wedge(a: GradedPair, b: GradedPair) -> GradedPair:
    """(Γ ∧ Γ', ⟨⟨a, b⟩⟩_+), zero above degree n."""
    context = check_context(a, b)
    r = a.r + b.r
    if r > context.n:
        return GradedPair.zero(context, r)
    return GradedPair(context, wedge(a.gamma, b.gamma), pairing_plus(a, b), r)


def multi_courant(a: GradedPair, b: GradedPair) -> GradedPair:
    """
    [[a, b]] = ([Γ,Γ'], (−1)^{(r−1)s} £_Γ Σ' + (−1)^s £_Γ' Σ − (−1)^s d⟨⟨a, b⟩⟩_+),
    zero when r + s > n + 1.
    """
    context = check_context(a, b)
    r, s = a.r, b.r
    degree = r + s - 1
    if r + s > context.n + 1 or a.is_zero() or b.is_zero():
        return GradedPair.zero(context, degree)
    sigma = (
        lie_derivative(a.gamma, b.sigma).scale(_sign((r - 1) * s))
        + lie_derivative(b.gamma, a.sigma).scale(_sign(s))
        - ext_deriv(pairing_plus(a, b)).scale(_sign(s))
    )
    return GradedPair(context, schouten(a.gamma, b.gamma), sigma, degree)


def gauge_transform(sigma: Form, a: GradedPair) -> GradedPair:
    """Φ_σ(Γ, Σ) = (Γ, Σ + i_Γ σ) for an (n+1)-form σ."""
    context = a.context
    if not isinstance(sigma, Form):
        raise KindMismatchError("form", sigma.KIND)
    if sigma.chart != context.chart:
        raise ContextMismatchError(f"Gauge form on {sigma.chart}, section on {context.chart}")
    if sigma.degree != context.n + 1:
        raise DegreeError(f"Gauge form must have degree {context.n + 1}, got {sigma.degree}", sigma.degree)
    return GradedPair(context, a.gamma, a.sigma + contract(a.gamma, sigma), a.r)


def standard_courant(a: GradedPair, b: GradedPair) -> GradedPair:
    """Classical Courant bracket on L_1: ([X,Y], £_X β − £_Y α + ½ d(i_Y α − i_X β))."""
    context = check_context(a, b)
    if a.r != 1 or b.r != 1:
        raise DegreeError(f"Courant bracket is defined on L_1, got degrees {a.r} and {b.r}")
    x, alpha, y, beta = a.gamma, a.sigma, b.gamma, b.sigma
    sigma = (
        lie_derivative(x, beta)
        - lie_derivative(y, alpha)
        + ext_deriv(contract(y, alpha) - contract(x, beta)).scale(HALF)
    )
    return GradedPair(context, lie_bracket(x, y), sigma, 1)


# ---------------------------------------------------------------------------
# Inhomogeneous sections
# ---------------------------------------------------------------------------

class InhomogeneousSection:
    """A finite sum of homogeneous sections; operations extend bilinearly."""

    __slots__ = ("context", "_parts")

    def __init__(self, context: GradedContext, parts: Iterable[GradedPair] = ()):
        collected: dict[int, GradedPair] = {}
        for part in parts:
            if part.context != context:
                raise ContextMismatchError(f"Sections from different contexts: {context} vs {part.context}")
            if part.is_zero():
                continue
            collected[part.r] = collected[part.r] + part if part.r in collected else part
        self.context = context
        self._parts = {r: collected[r] for r in sorted(collected) if not collected[r].is_zero()}

    def component(self, r: int) -> GradedPair:
        return self._parts.get(r, GradedPair.zero(self.context, r))

    def components(self) -> list[GradedPair]:
        return list(self._parts.values())

    def degrees(self) -> list[int]:
        return list(self._parts)

    def is_zero(self) -> bool:
        return not self._parts

    @classmethod
    def of(cls, *parts: "GradedPair | InhomogeneousSection") -> "InhomogeneousSection":
        flat: list[GradedPair] = []
        for p in parts:
            flat.extend(p.components() if isinstance(p, InhomogeneousSection) else [p])
        return cls(flat[0].context, flat)

    def __add__(self, other: "GradedPair | InhomogeneousSection") -> "InhomogeneousSection":
        if not isinstance(other, (GradedPair, InhomogeneousSection)):
            return NotImplemented
        return InhomogeneousSection.of(self, other)

    __radd__ = __add__

    def __neg__(self) -> "InhomogeneousSection":
        return InhomogeneousSection(self.context, [-p for p in self.components()])

    def __sub__(self, other: "GradedPair | InhomogeneousSection") -> "InhomogeneousSection":
        return self + (-other)

    def _bilinear(self, other: "GradedPair | InhomogeneousSection", op) -> "InhomogeneousSection":
        other = other if isinstance(other, InhomogeneousSection) else InhomogeneousSection.of(other)
        return InhomogeneousSection(
            self.context, [op(a, b) for a in self.components() for b in other.components()]
        )

    def wedge(self, other: "GradedPair | InhomogeneousSection") -> "InhomogeneousSection":
        return self._bilinear(other, section_wedge)

    def bracket(self, other: "GradedPair | InhomogeneousSection") -> "InhomogeneousSection":
        return self._bilinear(other, multi_courant)

    def _pairings(self, other: "GradedPair | InhomogeneousSection", pairing) -> dict[int, Form]:
        other = other if isinstance(other, InhomogeneousSection) else InhomogeneousSection.of(other)
        out: dict[int, Form] = {}
        for a in self.components():
            for b in other.components():
                value = pairing(a, b)
                if value.is_zero():
                    continue
                out[value.degree] = out[value.degree] + value if value.degree in out else value
        return {k: v for k, v in sorted(out.items()) if not v.is_zero()}

    def pairing_minus(self, other: "GradedPair | InhomogeneousSection") -> dict[int, Form]:
        return self._pairings(other, pairing_minus)

    def pairing_plus(self, other: "GradedPair | InhomogeneousSection") -> dict[int, Form]:
        return self._pairings(other, pairing_plus)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedPair):
            other = InhomogeneousSection.of(other)
        if not isinstance(other, InhomogeneousSection):
            return NotImplemented
        return self.context == other.context and self._parts == other._parts

    def __hash__(self) -> int:
        return hash((self.context, tuple(self._parts.items())))

    def to_source(self) -> str:
        if not self._parts:
            return "0"
        return " + ".join(p.to_source() for p in self._parts.values())

    def __str__(self) -> str:
        return self.to_source()
