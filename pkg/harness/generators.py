"""
Multi-Dirac Engine: Random Generators
======================================
Deterministic random polynomials, multivectors, forms, graded pairs, closed
forms and admissible forms. Each trial draws from its own generator,
numpy.random.default_rng(SeedSequence(seed, spawn_key=(trial,))), so trials
are independent of execution order.

Usage:
    src = RandomSource(cfg, trial=7)
    chart = src.chart()
    gamma = src.multivector(chart, 2)
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

import numpy as np

from algebra.coeff_ring import Polynomial
from algebra.exterior import Chart, Form, Multivector, contract, ext_deriv, mask_of
from algebra.homotopy import poincare_primitive
from core.config import GeneratorConfig
from core.exceptions import GeneratorError, UnsupportedInputError
from core.models import ObjectKind
from engine.graded_courant import GradedContext, GradedPair
from engine.multidirac import GraphMultiDirac
from engine.multipoisson import AdmissibleForm, solve_hamiltonian

logger = logging.getLogger("mdx.harness.generators")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


class RandomSource:
    """Random algebraic objects bounded by a GeneratorConfig."""

    def __init__(self, cfg: GeneratorConfig, trial: int = 0):
        self.cfg = cfg
        self.trial = trial
        self.rng = trial_rng(cfg.seed, trial)

    # -- scalars -------------------------------------------------------------

    def integer(self, low: int, high: int) -> int:
        """Uniform in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def choice(self, items):
        return items[self.integer(0, len(items) - 1)]

    def coin(self) -> bool:
        return bool(self.integer(0, 1))

    def rational(self) -> Fraction:
        bound = self.cfg.numerator_bound
        num = self.integer(1, bound) * (1 if self.coin() else -1)
        return Fraction(num, self.integer(1, self.cfg.denominator_bound))

    # -- charts --------------------------------------------------------------

    def chart(self, dimension: Optional[int] = None) -> Chart:
        return Chart.standard(dimension or self.cfg.dimension)

    def context(self, dimension: Optional[int] = None, n: Optional[int] = None) -> GradedContext:
        return GradedContext(self.chart(dimension), n or self.cfg.ambient)

    # -- polynomials ---------------------------------------------------------

    def monomial(self, nvars: int, max_degree: Optional[int] = None) -> tuple[int, ...]:
        degree = self.integer(0, self.cfg.max_poly_degree if max_degree is None else max_degree)
        exps = [0] * nvars
        for _ in range(degree):
            exps[self.integer(0, nvars - 1)] += 1
        return tuple(exps)

    def polynomial(self, chart: Chart, max_degree: Optional[int] = None) -> Polynomial:
        """Nonzero polynomial with up to max_terms terms."""
        while True:
            terms: dict[tuple[int, ...], Fraction] = {}
            for _ in range(self.integer(1, self.cfg.max_terms)):
                mono = self.monomial(chart.dimension, max_degree)
                terms[mono] = terms.get(mono, Fraction(0)) + self.rational()
            p = Polynomial(chart.dimension, terms)
            if not p.is_zero():
                return p

    def constant(self, chart: Chart) -> Polynomial:
        return chart.constant(self.rational())

    # -- graded fields -------------------------------------------------------

    def _masks(self, chart: Chart, degree: int) -> list[int]:
        if not 0 <= degree <= chart.dimension:
            raise GeneratorError(f"Degree {degree} outside 0..{chart.dimension}")
        return [mask_of(c) for c in combinations(range(chart.dimension), degree)]

    def _field(self, cls, chart: Chart, degree: int, constant: bool,
               max_degree: Optional[int] = None) -> Union[Multivector, Form]:
        masks = self._masks(chart, degree)
        count = self.integer(1, min(self.cfg.max_basis_terms, len(masks)))
        picked = self.rng.choice(len(masks), size=count, replace=False)
        terms = {
            masks[int(i)]: self.constant(chart) if constant else self.polynomial(chart, max_degree)
            for i in sorted(picked)
        }
        return cls(chart, degree, terms)

    def multivector(self, chart: Chart, degree: int, constant: bool = False) -> Multivector:
        return self._field(Multivector, chart, degree, constant)

    def form(self, chart: Chart, degree: int, constant: bool = False) -> Form:
        return self._field(Form, chart, degree, constant)

    def function(self, chart: Chart) -> Polynomial:
        return self.polynomial(chart)

    def closed_form(self, chart: Chart, degree: int) -> Form:
        """d of a random (degree − 1)-form."""
        if degree == 0:
            raise GeneratorError("Closed 0-forms are constants; ask for a constant polynomial instead")
        if not 1 <= degree <= chart.dimension:
            raise GeneratorError(f"Closed form degree {degree} outside 1..{chart.dimension}")
        # τ one degree higher so dτ stays within max_poly_degree
        tau = self._field(Form, chart, degree - 1, False, self.cfg.max_poly_degree + 1)
        return ext_deriv(tau)

    def graded_pair(self, context: GradedContext, r: Optional[int] = None) -> GradedPair:
        r = r or self.integer(1, context.n)
        chart = context.chart
        return GradedPair(context, self.multivector(chart, r), self.form(chart, context.form_degree(r)), r)

    def degree(self, context: GradedContext) -> int:
        return self.integer(1, context.n)

    # -- structures ----------------------------------------------------------

    def omega(self, context: GradedContext, closed: Optional[bool] = None) -> Form:
        """Random (n+1)-form; closed=True gives dτ, closed=False a generic form, None picks."""
        chart = context.chart
        degree = context.n + 1
        if degree > chart.dimension:
            return Form.zero(chart, degree)
        if closed is None:
            closed = self.coin()
        if closed:
            return self.closed_form(chart, degree)
        return self.form(chart, degree)

    def graph(self, context: GradedContext, closed: Optional[bool] = None) -> GraphMultiDirac:
        return GraphMultiDirac(context, self.omega(context, closed))

    def graph_section(self, G: GraphMultiDirac, r: Optional[int] = None):
        r = r or self.integer(1, G.context.n)
        return G.embed(self.multivector(G.chart, r))

    # -- admissible forms ----------------------------------------------------

    def admissible(self, G: GraphMultiDirac, r: Optional[int] = None) -> AdmissibleForm:
        """
        An admissible (n−r)-form for constant Ω.

        Half the draws solve for the witness of a random Σ; the rest take a
        constant Γ and build Σ from the Poincaré primitive of i_Γ Ω plus an
        exact part. Both fall back to the primitive construction.
        """
        if not G.omega.is_constant():
            raise UnsupportedInputError("Admissible generation needs constant-coefficient Ω")
        n = G.context.n
        r = self.integer(1, n) if r is None else r
        if not 1 <= r <= n:
            raise GeneratorError(f"Witness degree {r} outside 1..{n}")
        chart = G.chart
        if self.coin():
            sigma = self.form(chart, n - r)
            gamma = solve_hamiltonian(G, sigma)
            if gamma is not None:
                return AdmissibleForm.create(G, sigma, gamma)
        gamma = self.multivector(chart, r, constant=True)
        target = contract(gamma, G.omega)
        sigma = poincare_primitive(target)
        if n - r >= 1:
            sigma = sigma + self.closed_form(chart, n - r)
        return AdmissibleForm.create(G, sigma, gamma)

    # -- dispatch ------------------------------------------------------------

    def random_object(self, kind: Union[ObjectKind, str], chart: Optional[Chart] = None, degree: int = 1,
                      structure: Optional[GraphMultiDirac] = None):
        kind = ObjectKind(kind)
        chart = chart or (structure.chart if structure else self.chart())
        if kind is ObjectKind.POLYNOMIAL:
            return self.polynomial(chart)
        if kind is ObjectKind.MULTIVECTOR:
            return self.multivector(chart, degree)
        if kind is ObjectKind.FORM:
            return self.form(chart, degree)
        if kind is ObjectKind.CLOSED_FORM:
            return self.closed_form(chart, degree)
        context = structure.context if structure else GradedContext(chart, min(self.cfg.ambient, chart.dimension))
        if kind is ObjectKind.GRADED_PAIR:
            return self.graded_pair(context, degree)
        if structure is None:
            raise GeneratorError("Admissible forms need a constant-coefficient graph structure")
        return self.admissible(structure, degree)


def random_object(kind: Union[ObjectKind, str], cfg: GeneratorConfig, trial: int = 0, **kwargs):
    """One random object of the given kind, deterministic in (cfg.seed, trial)."""
    return RandomSource(cfg, trial).random_object(kind, **kwargs)
