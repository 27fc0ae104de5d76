"""
Multi-Dirac Engine: Poincaré Homotopy
Radial contraction to the origin on polynomial forms.

For a k-form α (k ≥ 1) and the Euler field E = Σ x^i ∂_i,

    H α (x) = ∫_0^1 t^{k-1} i_E α(tx) dt,

which on a monomial c x^e dx^I contributes c/(|e| + k) x^e i_E dx^I.
For closed α, d(Hα) = α.
"""

from __future__ import annotations

from fractions import Fraction

from algebra.coeff_ring import Polynomial
from algebra.exterior import Form, Multivector, basis_indices, contract, ext_deriv
from core.exceptions import DegreeError


def euler_field(chart) -> Multivector:
    return Multivector.vector_field(chart, [chart.variable(i) for i in range(chart.dimension)])


def poincare_primitive(alpha: Form) -> Form:
    """Hα, a (k−1)-form with d(Hα) = α whenever dα = 0."""
    k = alpha.degree
    if k < 1:
        raise DegreeError("Poincaré primitive needs a form of degree ≥ 1", k)
    chart = alpha.chart
    euler = euler_field(chart)
    result = Form.zero(chart, k - 1)
    for mask, coeff in alpha.terms():
        for mono, c in coeff.terms():
            scaled = Polynomial.monomial(mono, c * Fraction(1, sum(mono) + k))
            term = Form.basis(chart, basis_indices(mask), scaled)
            result = result + contract(euler, term)
    return result


def is_exact_primitive(primitive: Form, alpha: Form) -> bool:
    return ext_deriv(primitive) == alpha
