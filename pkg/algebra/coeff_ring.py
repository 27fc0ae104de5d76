"""
Multi-Dirac Engine: Coefficient Ring
=====================================
Exact rational scalars and sparse multivariate polynomials over the chart
variables. Every coefficient in the engine is a Polynomial; arithmetic is
exact so identities are checked by structural equality.

Usage:
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = poly_arith(x * x, y, PolyOp.MUL)        # x²y
    partial_derivative(p, 0)                     # 2xy
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from core.exceptions import DimensionMismatchError, IndexOutOfRangeError, StructuralError

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class PolyOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def as_rational(value: Union[int, Fraction, str]) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise StructuralError(f"Not a rational: {value!r}")
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise StructuralError(f"Not a rational: {value!r}") from e
    raise StructuralError(f"Not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _order_key(monomial: Monomial) -> tuple:
    # highest total degree first, then lexicographically larger exponents first
    return (-sum(monomial), tuple(-e for e in monomial))


class Polynomial:
    """
    Immutable sparse polynomial with Fraction coefficients.

    terms maps exponent tuples (one entry per chart variable) to nonzero
    coefficients, stored in canonical order.
    """

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        if nvars < 0:
            raise StructuralError(f"Negative variable count: {nvars}")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise DimensionMismatchError(len(mono), nvars)
            if any(e < 0 for e in mono):
                raise StructuralError(f"Negative exponent in {mono}")
            q = as_rational(coeff)
            if q:
                clean[mono] = clean.get(mono, Fraction(0)) + q
        self._nvars = nvars
        self._terms = _canonical(clean)
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: exponents valid, may still hold zeros
        p = object.__new__(cls)
        p._nvars = nvars
        p._terms = _canonical(terms)
        p._hash = None
        return p

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Polynomial":
        return cls._raw(nvars, {(0,) * nvars: as_rational(value)})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexOutOfRangeError(index, nvars)
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    # -- inspection ----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        """Constant term (the whole value when is_constant())."""
        return self._terms.get((0,) * self._nvars, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._nvars:
            raise DimensionMismatchError(len(point), self._nvars)
        values = [as_rational(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise DimensionMismatchError(self._nvars, other._nvars)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self._nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Polynomial._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial.zero(self._nvars)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Polynomial._raw(self._nvars, out)

    __rmul__ = __mul__

    def scale(self, q: Scalar) -> "Polynomial":
        q = as_rational(q)
        if not q:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(self._nvars, {m: c * q for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise StructuralError(f"Polynomial powers need a non-negative integer exponent, got {exponent!r}")
        if exponent == 0:
            return Polynomial.one(self._nvars)
        half = self ** (exponent // 2)
        return self * half * half if exponent % 2 else half * half

    # -- equality ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, tuple(self._terms.items())))
        return self._hash

    # -- printing ------------------------------------------------------------

    def to_source(self, names: Sequence[str] | None = None) -> str:
        """Canonical text, e.g. `3/2 x**2 y - z + 1`; parses back to the same polynomial."""
        if not self._terms:
            return "0"
        names = names or [f"x{i}" for i in range(self._nvars)]
        parts: list[str] = []
        for mono, coeff in self._terms.items():
            factors = [
                name if e == 1 else f"{name}**{e}"
                for name, e in zip(names, mono) if e
            ]
            mag = abs(coeff)
            if factors and mag == 1:
                body = " ".join(factors)
            else:
                body = " ".join([format_rational(mag)] + factors)
            sign = "-" if coeff < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_source()})"


def _canonical(terms: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    return {m: terms[m] for m in sorted(terms, key=_order_key) if terms[m]}


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def poly_arith(a: Polynomial, b: Polynomial, op: PolyOp | str) -> Polynomial:
    """Exact add / sub / mul of two polynomials over the same chart dimension."""
    if a.nvars != b.nvars:
        raise DimensionMismatchError(a.nvars, b.nvars)
    op = PolyOp(op)
    if op is PolyOp.ADD:
        return a + b
    if op is PolyOp.SUB:
        return a - b
    return a * b


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    """Formal ∂p/∂x_i."""
    if not 0 <= i < p.nvars:
        raise IndexOutOfRangeError(i, p.nvars)
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms():
        e = mono[i]
        if e:
            lowered = mono[:i] + (e - 1,) + mono[i + 1:]
            out[lowered] = out.get(lowered, Fraction(0)) + coeff * e
    return Polynomial._raw(p.nvars, out)


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    out: dict[Monomial, Fraction] = {}
    for p in polys:
        if p.nvars != nvars:
            raise DimensionMismatchError(nvars, p.nvars)
        for mono, coeff in p.terms():
            out[mono] = out.get(mono, Fraction(0)) + coeff
    return Polynomial._raw(nvars, out)
