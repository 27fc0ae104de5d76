"""
Multi-Dirac Engine: Exterior Calculus
======================================
Multivector fields and differential forms on a single coordinate chart, with
wedge, interior product, exterior derivative, generalized Lie derivative and
the Schouten–Nijenhuis bracket.

Basis elements are bitmasks of variable indices; every stored key is read in
ascending index order and reordering signs live in the coefficients.

Sign conventions:
    i_{X1∧…∧Xk} α = i_{Xk} … i_{X1} α
    £_Γ α = d i_Γ α − (−1)^k i_Γ dα            (k = deg Γ)
    [X1∧…∧Xk, Y1∧…∧Yl] = Σ (−1)^{i+j} [Xi,Yj] ∧ X1…X̂i…Xk ∧ Y1…Ŷj…Yl

Usage:
    chart = Chart(("x", "y", "z"))
    dx, dy = Form.basis(chart, [0]), Form.basis(chart, [1])
    contract(Multivector.basis(chart, [0, 1]), wedge(dx, dy))    # 1
"""

from __future__ import annotations

import re
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence, Union

from algebra.coeff_ring import Polynomial, Scalar, as_rational, partial_derivative
from core.exceptions import (
    ChartMismatchError,
    DegreeError,
    IndexOutOfRangeError,
    KindMismatchError,
    StructuralError,
)

MAX_CHART_DIMENSION = 62
_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

_schouten_sign: ContextVar[int] = ContextVar("schouten_sign", default=1)


# ---------------------------------------------------------------------------
# Bit helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def basis_indices(mask: int) -> tuple[int, ...]:
    """Ascending variable indices of a basis bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def wedge_sign(left: int, right: int) -> int:
    """Sign of sorting the concatenation left‖right; 0 when they overlap."""
    if left & right:
        return 0
    swaps = 0
    for b in basis_indices(right):
        swaps += (left >> (b + 1)).bit_count()
    return -1 if swaps & 1 else 1


def _below(mask: int, j: int) -> int:
    """Parity sign of the number of indices in mask smaller than j."""
    return -1 if (mask & ((1 << j) - 1)).bit_count() & 1 else 1


def permutation_sign(indices: Sequence[int]) -> int:
    """Sign sorting an index list into ascending order; 0 on repeats."""
    if len(set(indices)) != len(indices):
        return 0
    sign = 1
    items = list(indices)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# Chart
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chart:
    """A single coordinate chart, named by its variables."""
    variable_names: tuple[str, ...]

    def __post_init__(self) -> None:
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not 1 <= len(names) <= MAX_CHART_DIMENSION:
            raise StructuralError(f"Chart dimension must be in 1..{MAX_CHART_DIMENSION}, got {len(names)}")
        if len(set(names)) != len(names):
            raise StructuralError(f"Chart variable names must be distinct: {names}")
        bad = [n for n in names if not _IDENTIFIER.match(n)]
        if bad:
            raise StructuralError(f"Chart variable names must be identifiers: {bad}")

    @classmethod
    def standard(cls, dimension: int, prefix: str = "x") -> "Chart":
        """x1, …, x_dim."""
        return cls(tuple(f"{prefix}{i + 1}" for i in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise StructuralError(f"Unknown chart variable: {name}") from None

    def check_index(self, i: int) -> int:
        if not 0 <= i < self.dimension:
            raise IndexOutOfRangeError(i, self.dimension)
        return i

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.dimension)

    def constant(self, value: Scalar) -> Polynomial:
        return Polynomial.constant(self.dimension, value)

    def variable(self, which: Union[int, str]) -> Polynomial:
        i = self.index(which) if isinstance(which, str) else which
        return Polynomial.variable(self.dimension, i)

    def __str__(self) -> str:
        return f"chart({', '.join(self.variable_names)})"


# ---------------------------------------------------------------------------
# Graded fields
# ---------------------------------------------------------------------------

Coefficient = Union[Polynomial, int, Fraction]


class GradedField:
    """Common sparse storage for multivectors and forms: bitmask → Polynomial."""

    __slots__ = ("chart", "degree", "_terms", "_hash")
    KIND = "field"
    BASIS_PREFIX = ""

    def __init__(self, chart: Chart, degree: int, terms: Mapping[int, Polynomial] | None = None):
        clean: dict[int, Polynomial] = {}
        for mask, coeff in (terms or {}).items():
            if mask < 0 or mask >> chart.dimension:
                raise StructuralError(f"Basis mask {mask:#b} outside chart of dimension {chart.dimension}")
            if mask.bit_count() != degree:
                raise DegreeError(f"Basis element {basis_indices(mask)} does not have degree {degree}", degree)
            coeff = _as_poly(chart, coeff)
            clean[mask] = clean[mask] + coeff if mask in clean else coeff
        self.chart = chart
        self.degree = degree
        self._terms = _canonical(clean)
        self._hash = None

    @classmethod
    def _raw(cls, chart: Chart, degree: int, terms: dict[int, Polynomial]):
        obj = object.__new__(cls)
        obj.chart = chart
        obj.degree = degree
        obj._terms = _canonical(terms)
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart, degree: int):
        return cls._raw(chart, degree, {})

    @classmethod
    def basis(cls, chart: Chart, indices: Sequence[int], coeff: Coefficient = 1):
        """coeff · e_{i1} ∧ … ∧ e_{ik}; unsorted indices are normalized with their sign."""
        for i in indices:
            chart.check_index(i)
        sign = permutation_sign(indices)
        if not sign:
            return cls.zero(chart, len(indices))
        poly = _as_poly(chart, coeff)
        return cls._raw(chart, len(indices), {mask_of(indices): poly.scale(sign)})

    @classmethod
    def function(cls, chart: Chart, f: Coefficient):
        """A degree-0 element."""
        return cls._raw(chart, 0, {0: _as_poly(chart, f)})

    # -- inspection ----------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, Polynomial]]:
        return iter(self._terms.items())

    def coefficient(self, indices: Sequence[int]) -> Polynomial:
        sign = permutation_sign(indices)
        poly = self._terms.get(mask_of(indices))
        if poly is None or not sign:
            return self.chart.zero()
        return poly.scale(sign)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self._terms.values())

    def max_poly_degree(self) -> int:
        return max((p.total_degree() for p in self._terms.values()), default=-1)

    def as_function(self) -> Polynomial:
        if self.degree != 0:
            raise DegreeError(f"Expected a degree-0 {self.KIND}, got degree {self.degree}", self.degree)
        return self._terms.get(0, self.chart.zero())

    # -- arithmetic ----------------------------------------------------------

    def _same(self, other: "GradedField") -> None:
        if type(other) is not type(self):
            raise KindMismatchError(self.KIND, getattr(other, "KIND", type(other).__name__))
        if other.chart != self.chart:
            raise ChartMismatchError(self.chart, other.chart)

    def __add__(self, other: "GradedField"):
        if not isinstance(other, GradedField):
            return NotImplemented
        self._same(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise DegreeError(f"Cannot add {self.KIND}s of degree {self.degree} and {other.degree}")
        out = dict(self._terms)
        for mask, coeff in other._terms.items():
            out[mask] = out[mask] + coeff if mask in out else coeff
        return type(self)._raw(self.chart, self.degree, out)

    def __neg__(self):
        return type(self)._raw(self.chart, self.degree, {m: -p for m, p in self._terms.items()})

    def __sub__(self, other: "GradedField"):
        if not isinstance(other, GradedField):
            return NotImplemented
        return self + (-other)

    def scale(self, f: Coefficient):
        """Multiply by a function (polynomial or rational)."""
        f = _as_poly(self.chart, f)
        if f.is_zero():
            return type(self).zero(self.chart, self.degree)
        return type(self)._raw(self.chart, self.degree, {m: p * f for m, p in self._terms.items()})

    def __mul__(self, f: object):
        if isinstance(f, (Polynomial, int, Fraction)) and not isinstance(f, bool):
            return self.scale(f)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedField):
            return NotImplemented
        if type(other) is not type(self) or other.chart != self.chart:
            return False
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            key = tuple(self._terms.items()) if self._terms else ()
            self._hash = hash((self.KIND, self.chart, self.degree if key else None, key))
        return self._hash

    # -- printing ------------------------------------------------------------

    def basis_source(self, mask: int) -> str:
        names = self.chart.variable_names
        return "^".join(f"{self.BASIS_PREFIX}{names[i]}" for i in basis_indices(mask))

    def to_source(self) -> str:
        """Canonical text that parses back to an equal object."""
        if not self._terms:
            return "0"
        names = self.chart.variable_names
        parts: list[str] = []
        for mask, poly in self._terms.items():
            if mask == 0:
                text = poly.to_source(names)
                negative = text.startswith("-") and len(poly) == 1
                body = text[1:] if negative else (text if len(poly) == 1 else f"({text})")
            else:
                basis = self.basis_source(mask)
                if len(poly) == 1:
                    text = poly.to_source(names)
                    negative = text.startswith("-")
                    text = text[1:] if negative else text
                    body = basis if text == "1" else f"{text} {basis}"
                else:
                    negative = False
                    body = f"({poly.to_source(names)}) {basis}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"{'-' if negative else '+'} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_source()

    def __repr__(self) -> str:
        return f"{type(self).__name__}[{self.degree}]({self.to_source()})"


class Multivector(GradedField):
    """Γ ∈ Λ^r(TZ); basis ∂_{i1}∧…∧∂_{ir}, written @x^@y in scripts."""
    __slots__ = ()
    KIND = "multivector"
    BASIS_PREFIX = "@"

    @classmethod
    def vector_field(cls, chart: Chart, components: Sequence[Coefficient]) -> "Multivector":
        if len(components) != chart.dimension:
            raise StructuralError(f"Vector field needs {chart.dimension} components, got {len(components)}")
        return cls._raw(chart, 1, {1 << i: _as_poly(chart, c) for i, c in enumerate(components)})

    def components(self) -> list[Polynomial]:
        """Components of a vector field."""
        if self.degree != 1:
            raise DegreeError(f"Expected a vector field, got degree {self.degree}", self.degree)
        return [self._terms.get(1 << i, self.chart.zero()) for i in range(self.chart.dimension)]


class Form(GradedField):
    """α ∈ Λ^k(T*Z); basis dx^{i1}∧…∧dx^{ik}, written dx^dy in scripts."""
    __slots__ = ()
    KIND = "form"
    BASIS_PREFIX = "d"


def _as_poly(chart: Chart, value: Coefficient) -> Polynomial:
    if isinstance(value, Polynomial):
        if value.nvars != chart.dimension:
            raise ChartMismatchError(f"{value.nvars} variables", chart)
        return value
    return Polynomial.constant(chart.dimension, as_rational(value))


def _canonical(terms: dict[int, Polynomial]) -> dict[int, Polynomial]:
    return {m: terms[m] for m in sorted(terms, key=basis_indices) if not terms[m].is_zero()}


def _check_chart(a: GradedField, b: GradedField) -> None:
    if a.chart != b.chart:
        raise ChartMismatchError(a.chart, b.chart)


def _accumulate(out: dict[int, Polynomial], mask: int, poly: Polynomial) -> None:
    if poly.is_zero():
        return
    out[mask] = out[mask] + poly if mask in out else poly


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def wedge(a: GradedField, b: GradedField) -> GradedField:
    """Graded-commutative product of two multivectors or two forms."""
    if type(a) is not type(b):
        raise KindMismatchError(a.KIND, b.KIND)
    _check_chart(a, b)
    degree = a.degree + b.degree
    out: dict[int, Polynomial] = {}
    if degree <= a.chart.dimension:
        for ma, pa in a.terms():
            for mb, pb in b.terms():
                sign = wedge_sign(ma, mb)
                if sign:
                    _accumulate(out, ma | mb, (pa * pb).scale(sign))
    return type(a)._raw(a.chart, degree, out)


def wedge_all(first: GradedField, *rest: GradedField) -> GradedField:
    result = first
    for item in rest:
        result = wedge(result, item)
    return result


def contract(gamma: Multivector, alpha: Form) -> Form:
    """Interior product i_Γ α, degree deg α − deg Γ."""
    if not isinstance(gamma, Multivector) or not isinstance(alpha, Form):
        raise KindMismatchError("multivector, form", f"{gamma.KIND}, {alpha.KIND}")
    _check_chart(gamma, alpha)
    degree = alpha.degree - gamma.degree
    out: dict[int, Polynomial] = {}
    if degree >= 0:
        for mj, g in gamma.terms():
            for mi, f in alpha.terms():
                if mi & mj != mj:
                    continue
                sign = 1
                rest = mi
                for j in basis_indices(mj):
                    sign *= _below(rest, j)
                    rest ^= 1 << j
                _accumulate(out, rest, (g * f).scale(sign))
    return Form._raw(alpha.chart, degree, out)


def ext_deriv(alpha: Form) -> Form:
    """Exterior derivative; d∘d = 0."""
    if not isinstance(alpha, Form):
        raise KindMismatchError("form", alpha.KIND)
    dim = alpha.chart.dimension
    out: dict[int, Polynomial] = {}
    for mask, f in alpha.terms():
        for j in range(dim):
            if mask >> j & 1:
                continue
            df = partial_derivative(f, j)
            if not df.is_zero():
                _accumulate(out, mask | 1 << j, df.scale(_below(mask, j)))
    return Form._raw(alpha.chart, alpha.degree + 1, out)


def lie_derivative(gamma: Multivector, alpha: Form) -> Form:
    """£_Γ α = d i_Γ α − (−1)^k i_Γ dα."""
    _check_chart(gamma, alpha)
    first = ext_deriv(contract(gamma, alpha))
    second = contract(gamma, ext_deriv(alpha))
    return first + second if gamma.degree % 2 else first - second


def lie_bracket(x: Multivector, y: Multivector) -> Multivector:
    """Lie bracket of vector fields from components: [X,Y]^j = X^i ∂_i Y^j − Y^i ∂_i X^j."""
    _check_chart(x, y)
    xs, ys = x.components(), y.components()
    dim = x.chart.dimension
    out: dict[int, Polynomial] = {}
    for j in range(dim):
        total = x.chart.zero()
        for i in range(dim):
            if not xs[i].is_zero():
                total = total + xs[i] * partial_derivative(ys[j], i)
            if not ys[i].is_zero():
                total = total - ys[i] * partial_derivative(xs[j], i)
        _accumulate(out, 1 << j, total)
    return Multivector._raw(x.chart, 1, out)


def schouten(a: Multivector, b: Multivector) -> Multivector:
    """Schouten–Nijenhuis bracket [Γ, Γ'] of degree k + l − 1."""
    if not isinstance(a, Multivector) or not isinstance(b, Multivector):
        raise KindMismatchError("multivector", f"{a.KIND}, {b.KIND}")
    _check_chart(a, b)
    k, l = a.degree, b.degree
    chart = a.chart
    out: dict[int, Polynomial] = {}

    if k == 0 and l == 0:
        pass
    elif k == 0:
        # [f, Y1∧…∧Yl] = Σ_b (−1)^b Y_b(f) Y1…Ŷb…Yl
        f = a.as_function()
        for mj, g in b.terms():
            for pos, j in enumerate(basis_indices(mj), 1):
                h = partial_derivative(f, j)
                if not h.is_zero():
                    _accumulate(out, mj ^ 1 << j, (g * h).scale(-1 if pos % 2 else 1))
    elif l == 0:
        # [X1∧…∧Xk, g] = Σ_b (−1)^{k+b} X_b(g) X1…X̂b…Xk
        g = b.as_function()
        for mi, f in a.terms():
            for pos, i in enumerate(basis_indices(mi), 1):
                h = partial_derivative(g, i)
                if not h.is_zero():
                    _accumulate(out, mi ^ 1 << i, (f * h).scale(-1 if (k + pos) % 2 else 1))
    else:
        for mi, f in a.terms():
            for mj, g in b.terms():
                _schouten_terms(out, mi, f, mj, g)

    if _schouten_sign.get() < 0:
        out = {m: -p for m, p in out.items()}
    return Multivector._raw(chart, k + l - 1, out)


def _schouten_terms(out: dict[int, Polynomial], mi: int, f: Polynomial, mj: int, g: Polynomial) -> None:
    # X1 = f ∂_{i1}, Xa = ∂_{ia}; Y1 = g ∂_{j1}, Yb = ∂_{jb}
    for a_pos, i in enumerate(basis_indices(mi), 1):
        rest_i = mi ^ 1 << i
        for b_pos, j in enumerate(basis_indices(mj), 1):
            rest_j = mj ^ 1 << j
            if rest_i & rest_j:
                continue
            if a_pos == 1 and b_pos == 1:
                bracket = [(j, f * partial_derivative(g, i)), (i, -(g * partial_derivative(f, j)))]
                factor = None
            elif a_pos == 1:
                bracket = [(i, -partial_derivative(f, j))]
                factor = g
            elif b_pos == 1:
                bracket = [(j, partial_derivative(g, i))]
                factor = f
            else:
                continue
            parity = -1 if (a_pos + b_pos) % 2 else 1
            rest = rest_i | rest_j
            for m, h in bracket:
                if h.is_zero() or rest >> m & 1:
                    continue
                sign = parity * wedge_sign(1 << m, rest_i) * wedge_sign(1 << m | rest_i, rest_j)
                coeff = h if factor is None else h * factor
                _accumulate(out, 1 << m | rest, coeff.scale(sign))


@contextmanager
def schouten_sign_flip(enabled: bool = True):
    """Debug mutation: negate every Schouten bracket inside the block."""
    token = _schouten_sign.set(-1 if enabled else 1)
    try:
        yield
    finally:
        _schouten_sign.reset(token)
