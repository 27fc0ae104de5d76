"""Tests for graph structures, the integrability tensor and Ω_D."""

from fractions import Fraction

import pytest

from algebra.exterior import Form, Multivector
from core.exceptions import DegreeError, IsotropyError, KindMismatchError, StructuralError
from engine.graded_courant import GradedPair, multi_courant
from engine.multidirac import (
    GraphMultiDirac,
    SpannedStructure,
    closedness_check,
    graph_embed,
    isotropy_defect,
    jacobiator,
    jacobiator_from_tensor,
    omega_from_d1,
    rho_project,
    simplified_bracket,
    t_d_direct,
    t_d_expanded,
)
from helpers import form, vec


class TestGraph:
    def test_embed(self, volume3):
        chart = volume3.chart
        section = volume3.embed(vec(chart, 0))
        assert section.gamma == vec(chart, 0)
        assert section.sigma == form(chart, 1, 2)
        assert section.parent is volume3
        assert volume3.contains(section)

    def test_contains_rejects_other_forms(self, volume3):
        chart = volume3.chart
        assert not volume3.contains(GradedPair(volume3.context, vec(chart, 0), form(chart, 0, 1)))

    def test_omega_degree_checked(self, ctx3):
        with pytest.raises(DegreeError):
            GraphMultiDirac(ctx3, form(ctx3.chart, 0, 1))

    def test_zero_omega(self, ctx3):
        G = GraphMultiDirac(ctx3, Form.zero(ctx3.chart, 1))
        assert G.omega.degree == 3
        assert G.embed(vec(ctx3.chart, 0)).sigma.is_zero()

    def test_embed_degree_checked(self, volume3):
        with pytest.raises(DegreeError):
            graph_embed(volume3, vec(volume3.chart, 0, 1, 2))

    def test_embed_kind_checked(self, volume3):
        with pytest.raises(KindMismatchError):
            graph_embed(volume3, form(volume3.chart, 0))

    def test_isotropic(self, volume3):
        chart = volume3.chart
        x = chart.variable("x")
        assert isotropy_defect(volume3, vec(chart, 1, coeff=x), vec(chart, 1, 2)).is_zero()

    def test_gauge_moves_graph(self, volume3):
        sigma = form(volume3.chart, 0, 1, 2, coeff=volume3.chart.variable("z"))
        assert volume3.gauge(sigma).omega == volume3.omega + sigma

    def test_integrability(self, volume3, twisted):
        assert volume3.is_integrable()
        assert not twisted.is_integrable()


class TestNonIntegrableWitness:
    """Ω = x4 dx1^dx2^dx3 on ℝ⁴ with n = 2."""

    @pytest.fixture
    def sections(self, twisted):
        chart = twisted.chart
        e1, e2, e4 = (twisted.embed(vec(chart, i)) for i in (0, 1, 3))
        e23 = twisted.embed(vec(chart, 1, 2))
        return e1, e2, e4, e23

    def test_closedness(self, twisted):
        assert closedness_check(twisted) == -form(twisted.chart, 0, 1, 2, 3)

    def test_tensor_values(self, twisted, sections):
        e1, e2, e4, e23 = sections
        dx3 = form(twisted.chart, 2)
        assert t_d_direct(e4, e1, e2) == dx3
        assert t_d_expanded(e4, e1, e2) == dx3
        assert t_d_direct(e4, e1, e23) == Form.function(twisted.chart, 1)
        assert twisted.tensor(vec(twisted.chart, 3), vec(twisted.chart, 0), vec(twisted.chart, 1)) == dx3

    def test_swap_last_two(self, twisted, sections):
        e1, e2, e4, _ = sections
        assert t_d_direct(e4, e2, e1) == -form(twisted.chart, 2)

    def test_graph_bracket(self, twisted, sections):
        e1, _, e4, _ = sections
        bracket = multi_courant(e4, e1)
        assert bracket.gamma.is_zero()
        assert bracket.sigma == form(twisted.chart, 1, 2)

    def test_simplified_bracket_on_graph(self, twisted):
        chart = twisted.chart
        x1, x4 = chart.variable(0), chart.variable(3)
        a = twisted.embed(vec(chart, 3, coeff=x1))
        b = twisted.embed(vec(chart, 0, 1, coeff=x4))
        assert simplified_bracket(a, b) == multi_courant(a, b)

    def test_jacobiator(self, twisted, sections):
        chart = twisted.chart
        e1, e2, _, _ = sections
        a = twisted.embed(vec(chart, 3, coeff=chart.variable(3)))
        expected = form(chart, 2, 3, coeff=Fraction(1, 2))
        assert jacobiator_from_tensor(a, e1, e2).sigma == expected
        assert jacobiator(a, e1, e2) == jacobiator_from_tensor(a, e1, e2)

    def test_closed_omega_has_vanishing_tensor(self, volume3):
        chart = volume3.chart
        x, y = chart.variable("x"), chart.variable("y")
        a = volume3.embed(vec(chart, 1, coeff=x))
        b = volume3.embed(vec(chart, 2, coeff=y))
        c = volume3.embed(vec(chart, 0))
        assert t_d_direct(a, b, c).is_zero()
        assert t_d_expanded(a, b, c).is_zero()


class TestOmegaD:
    def test_graph_values(self, volume3):
        chart = volume3.chart
        ex, ey, ez = (volume3.embed(vec(chart, i)) for i in range(3))
        assert omega_from_d1([ex, ey, ez]) == -1
        assert omega_from_d1([ey, ex, ez]) == 1
        assert omega_from_d1([ex, ex, ez]) == 0

    def test_argument_count(self, volume3):
        ex = volume3.embed(vec(volume3.chart, 0))
        with pytest.raises(StructuralError):
            omega_from_d1([ex, ex])
        with pytest.raises(StructuralError):
            omega_from_d1([])

    def test_degree_one_only(self, volume3):
        chart = volume3.chart
        ex = volume3.embed(vec(chart, 0))
        exy = volume3.embed(vec(chart, 0, 1))
        with pytest.raises(DegreeError):
            omega_from_d1([ex, exy, ex])

    def test_anchor(self, volume3):
        section = volume3.embed(vec(volume3.chart, 0, 2))
        assert rho_project(section) == vec(volume3.chart, 0, 2)


class TestSpanned:
    def test_from_graph(self, volume3):
        chart = volume3.chart
        spanned = SpannedStructure.from_graph(volume3, [vec(chart, i) for i in range(3)] + [vec(chart, 0, 1)])
        assert len(spanned.d1_component()) == 3
        assert len(spanned.of_degree(2)) == 1
        assert spanned.omega_d([0, 1, 2]) == -1
        assert spanned.tensor_on_generators() == {}

    def test_rejects_non_isotropic(self, ctx3):
        chart = ctx3.chart
        with pytest.raises(IsotropyError):
            SpannedStructure(ctx3, [GradedPair(ctx3, vec(chart, 0), form(chart, 0, 1))])

    def test_tensor_on_generators(self, twisted):
        chart = twisted.chart
        spanned = SpannedStructure.from_graph(twisted, [vec(chart, i) for i in (0, 1, 3)])
        values = spanned.tensor_on_generators()
        assert values[(2, 0, 1)] == form(chart, 2)
        assert values[(2, 1, 0)] == -form(chart, 2)

    def test_mixed_generators_need_isotropy(self, ctx3):
        chart = ctx3.chart
        good = [
            GradedPair(ctx3, vec(chart, 0), Form.zero(chart, 2)),
            GradedPair(ctx3, Multivector.zero(chart, 2), form(chart, 1)),
        ]
        SpannedStructure(ctx3, good)
        bad = good + [GradedPair(ctx3, Multivector.zero(chart, 2), form(chart, 0))]
        with pytest.raises(IsotropyError):
            SpannedStructure(ctx3, bad)
