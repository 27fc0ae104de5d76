"""Tests for the deterministic random generators."""

import pytest

from algebra.coeff_ring import Polynomial
from algebra.exterior import Form, Multivector, ext_deriv
from core.config import GeneratorConfig
from core.exceptions import GeneratorError, UnsupportedInputError
from core.models import ObjectKind
from engine.graded_courant import GradedPair
from harness.generators import RandomSource, random_object


class TestDeterminism:
    def test_same_seed_same_objects(self, cfg):
        a, b = RandomSource(cfg, trial=3), RandomSource(cfg, trial=3)
        chart = a.chart()
        assert a.polynomial(chart) == b.polynomial(chart)
        assert a.multivector(chart, 2) == b.multivector(chart, 2)
        assert a.form(chart, 1) == b.form(chart, 1)

    def test_trials_independent_of_order(self, cfg):
        first = [RandomSource(cfg, t).polynomial(RandomSource(cfg, t).chart()) for t in range(5)]
        again = [RandomSource(cfg, t).polynomial(RandomSource(cfg, t).chart()) for t in reversed(range(5))]
        assert first == list(reversed(again))

    def test_module_level_helper(self, cfg):
        assert random_object("polynomial", cfg, trial=1) == random_object(ObjectKind.POLYNOMIAL, cfg, trial=1)


class TestBounds:
    @pytest.mark.parametrize("trial", range(20))
    def test_polynomial(self, cfg, trial):
        src = RandomSource(cfg, trial)
        p = src.polynomial(src.chart())
        assert not p.is_zero()
        assert p.total_degree() <= cfg.max_poly_degree
        assert len(p) <= cfg.max_terms

    @pytest.mark.parametrize("trial", range(20))
    def test_fields(self, cfg, trial):
        src = RandomSource(cfg, trial)
        chart = src.chart()
        gamma = src.multivector(chart, 2)
        alpha = src.form(chart, 1, constant=True)
        assert isinstance(gamma, Multivector) and gamma.degree == 2
        assert 1 <= len(gamma) <= cfg.max_basis_terms
        assert gamma.max_poly_degree() <= cfg.max_poly_degree
        assert isinstance(alpha, Form) and alpha.is_constant()

    def test_rationals_bounded(self, cfg):
        src = RandomSource(cfg)
        for _ in range(50):
            q = src.rational()
            assert q != 0
            assert abs(q.numerator) <= cfg.numerator_bound
            assert q.denominator <= cfg.denominator_bound

    def test_degree_out_of_range(self, cfg):
        src = RandomSource(cfg)
        with pytest.raises(GeneratorError):
            src.form(src.chart(), 4)


class TestClosedForms:
    @pytest.mark.parametrize("trial", range(10))
    def test_closed(self, cfg, trial):
        src = RandomSource(cfg, trial)
        alpha = src.closed_form(src.chart(), 2)
        assert alpha.degree == 2
        assert ext_deriv(alpha).is_zero()
        assert alpha.max_poly_degree() <= cfg.max_poly_degree

    def test_degree_zero_rejected(self, cfg):
        src = RandomSource(cfg)
        with pytest.raises(GeneratorError):
            src.closed_form(src.chart(), 0)

    @pytest.mark.parametrize("trial", range(10))
    def test_closed_omega(self, cfg, trial):
        src = RandomSource(cfg, trial)
        G = src.graph(src.context(dimension=4), closed=True)
        assert G.is_integrable()

    def test_omega_above_dimension_is_zero(self, cfg):
        src = RandomSource(cfg)
        assert src.omega(src.context(dimension=2, n=2)).is_zero()


class TestSections:
    @pytest.mark.parametrize("trial", range(10))
    def test_graded_pair(self, cfg, trial):
        src = RandomSource(cfg, trial)
        ctx = src.context()
        pair = src.graded_pair(ctx)
        assert isinstance(pair, GradedPair)
        assert 1 <= pair.r <= ctx.n
        assert pair.gamma.degree == pair.r
        assert pair.sigma.degree == ctx.n + 1 - pair.r

    @pytest.mark.parametrize("trial", range(10))
    def test_graph_section(self, cfg, trial, volume3):
        section = RandomSource(cfg, trial).graph_section(volume3)
        assert volume3.contains(section)


class TestAdmissible:
    @pytest.mark.parametrize("trial", range(20))
    def test_volume_form(self, cfg, trial, volume3):
        A = RandomSource(cfg, trial).admissible(volume3)
        assert A.is_admissible
        assert 0 <= A.grade <= 1

    @pytest.mark.parametrize("trial", range(10))
    def test_symplectic(self, cfg, trial, symplectic):
        A = RandomSource(cfg, trial).admissible(symplectic, 1)
        assert A.is_admissible
        assert A.sigma.degree == 0

    def test_nonconstant_omega(self, cfg, twisted):
        with pytest.raises(UnsupportedInputError):
            RandomSource(cfg).admissible(twisted)

    def test_witness_degree_checked(self, cfg, volume3):
        with pytest.raises(GeneratorError):
            RandomSource(cfg).admissible(volume3, 3)


class TestDispatch:
    def test_kinds(self, cfg, volume3):
        src = RandomSource(cfg)
        assert isinstance(src.random_object(ObjectKind.POLYNOMIAL), Polynomial)
        assert src.random_object("form", degree=2).degree == 2
        assert src.random_object(ObjectKind.CLOSED_FORM, degree=1).degree == 1
        assert isinstance(src.random_object(ObjectKind.GRADED_PAIR, degree=1), GradedPair)
        assert src.random_object(ObjectKind.ADMISSIBLE, degree=1, structure=volume3).is_admissible

    def test_admissible_needs_structure(self, cfg):
        with pytest.raises(GeneratorError):
            RandomSource(cfg).random_object(ObjectKind.ADMISSIBLE)

    def test_unknown_kind(self, cfg):
        with pytest.raises(ValueError):
            RandomSource(cfg).random_object("spinor")

    def test_small_chart_clamps_ambient(self):
        src = RandomSource(GeneratorConfig(seed=1, dimension=1, ambient=1))
        pair = src.random_object(ObjectKind.GRADED_PAIR, degree=1)
        assert pair.context.n == 1
