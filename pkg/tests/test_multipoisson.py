"""Tests for admissible forms, the Hamiltonian solver and the multi-Poisson bracket."""

import pytest

from algebra.exterior import Chart, Form
from core.exceptions import (
    DegreeError,
    NoSolutionError,
    NotAdmissibleError,
    ParentMismatchError,
    UnsupportedInputError,
)
from engine.graded_courant import GradedContext, multi_courant
from engine.multidirac import GraphMultiDirac
from engine.multipoisson import (
    AdmissibleForm,
    bracket_of_differentials,
    cyclic_sum,
    differential_pair,
    exact_admissible,
    hamiltonian_form,
    hamiltonian_kernel,
    jacobi_defect,
    jacobi_primitive,
    poisson_bracket,
    solve_hamiltonian,
    verify_admissible,
)
from helpers import form, vec


@pytest.fixture
def canonical(symplectic):
    """Hamiltonian forms of q and p on dq^dp."""
    chart = symplectic.chart
    q = hamiltonian_form(symplectic, Form.function(chart, chart.variable("q")))
    p = hamiltonian_form(symplectic, Form.function(chart, chart.variable("p")))
    return q, p


@pytest.fixture
def volume_forms(volume3):
    """Hamiltonian forms of z dx, x dy and y dz on dx^dy^dz."""
    chart = volume3.chart
    x, y, z = (chart.variable(i) for i in range(3))
    return tuple(
        hamiltonian_form(volume3, form(chart, i, coeff=c)) for i, c in ((0, z), (1, x), (2, y))
    )


class TestAdmissibility:
    def test_verify_defect(self, volume3):
        chart = volume3.chart
        check = verify_admissible(volume3, form(chart, 0, coeff=chart.variable("z")), vec(chart, 0))
        assert not check
        assert check.defect == form(chart, 1, 2) + form(chart, 0, 2)

    def test_verify_degrees(self, volume3):
        chart = volume3.chart
        with pytest.raises(DegreeError):
            verify_admissible(volume3, form(chart, 0), vec(chart, 0, 1))

    def test_strict_create(self, volume3):
        chart = volume3.chart
        sigma = form(chart, 0, coeff=chart.variable("z"))
        with pytest.raises(NotAdmissibleError):
            AdmissibleForm.create(volume3, sigma, vec(chart, 0))
        loose = AdmissibleForm.create(volume3, sigma, vec(chart, 0), strict=False)
        assert not loose.is_admissible
        assert AdmissibleForm.create(volume3, sigma, vec(chart, 1)).is_admissible

    def test_exact_forms_are_admissible(self, volume3):
        chart = volume3.chart
        A = exact_admissible(volume3, Form.function(chart, chart.variable("x") * chart.variable("y")))
        assert A.is_admissible
        assert A.gamma.is_zero()
        assert A.grade == 0

    def test_source(self, volume_forms):
        assert volume_forms[0].to_source() == "adm(z dx; @y)"

    def test_differential_pair(self, volume3, volume_forms):
        A = volume_forms[0]
        pair = differential_pair(A)
        assert pair.gamma == A.gamma
        assert pair.sigma == -form(volume3.chart, 0, 2)


class TestSolver:
    def test_symplectic_witnesses(self, symplectic, canonical):
        q, p = canonical
        chart = symplectic.chart
        assert q.gamma == -vec(chart, 1)
        assert p.gamma == vec(chart, 0)
        assert q.grade == 0

    def test_volume_witnesses(self, volume3, volume_forms):
        chart = volume3.chart
        assert [A.gamma for A in volume_forms] == [vec(chart, 1), vec(chart, 2), vec(chart, 0)]

    def test_function_on_volume_form(self, volume3):
        chart = volume3.chart
        A = hamiltonian_form(volume3, Form.function(chart, chart.variable("x")))
        assert A.gamma == vec(chart, 1, 2)
        assert A.grade == 1

    def test_closed_form_has_zero_witness(self, volume3):
        chart = volume3.chart
        assert solve_hamiltonian(volume3, form(chart, 0)).is_zero()

    def test_degenerate_omega(self):
        chart = Chart.standard(4)
        G = GraphMultiDirac(GradedContext(chart, 2), form(chart, 0, 1, 2))
        assert solve_hamiltonian(G, form(chart, 0, coeff=chart.variable(3))) is None
        with pytest.raises(NoSolutionError):
            hamiltonian_form(G, form(chart, 0, coeff=chart.variable(3)))
        assert hamiltonian_kernel(G, 1) == [vec(chart, 3)]

    def test_nonconstant_omega_unsupported(self, twisted):
        with pytest.raises(UnsupportedInputError):
            solve_hamiltonian(twisted, form(twisted.chart, 0))
        with pytest.raises(UnsupportedInputError):
            hamiltonian_kernel(twisted, 1)

    def test_nondegenerate_kernel_is_empty(self, volume3):
        assert hamiltonian_kernel(volume3, 1) == []


class TestBracket:
    def test_canonical_pair(self, symplectic, canonical):
        q, p = canonical
        bracket = poisson_bracket(q, p)
        assert bracket.sigma == Form.function(symplectic.chart, -1)
        assert bracket.is_admissible
        assert poisson_bracket(p, q).sigma == Form.function(symplectic.chart, 1)

    def test_volume_bracket(self, volume3, volume_forms):
        z_dx, x_dy, _ = volume_forms
        dx = form(volume3.chart, 0)
        assert poisson_bracket(z_dx, x_dy).sigma == -dx
        assert poisson_bracket(x_dy, z_dx).sigma == dx
        assert poisson_bracket(z_dx, x_dy).is_admissible

    def test_grade_additivity(self, volume_forms):
        A, B, _ = volume_forms
        assert poisson_bracket(A, B).grade == A.grade + B.grade

    def test_grade_overflow_is_zero(self, volume3):
        chart = volume3.chart
        f = hamiltonian_form(volume3, Form.function(chart, chart.variable("x")))
        g = hamiltonian_form(volume3, Form.function(chart, chart.variable("y")))
        assert poisson_bracket(f, g).sigma.is_zero()

    def test_bracket_of_differentials(self, volume_forms):
        A, B, _ = volume_forms
        assert multi_courant(differential_pair(A), differential_pair(B)) == bracket_of_differentials(A, B)

    def test_parents_must_match(self, canonical, volume_forms):
        with pytest.raises(ParentMismatchError):
            poisson_bracket(canonical[0], volume_forms[0])

    def test_jacobi_on_integrable_graph(self, volume_forms):
        A, B, C = volume_forms
        assert cyclic_sum(A, B, C).is_zero()
        assert jacobi_defect(A, B, C).is_zero()

    def test_jacobi_with_polynomial_forms(self, symplectic):
        chart = symplectic.chart
        q, p = chart.variable("q"), chart.variable("p")
        A, B, C = (
            hamiltonian_form(symplectic, Form.function(chart, f)) for f in (q * q * p, p * p, q * p + q)
        )
        assert jacobi_defect(A, B, C).is_zero()

    def test_jacobi_primitive_on_four_volume(self):
        chart = Chart.standard(4)
        G = GraphMultiDirac(GradedContext(chart, 3), form(chart, 0, 1, 2, 3))
        x1, x2 = chart.variable(0), chart.variable(1)
        A = hamiltonian_form(G, form(chart, 1, 2, coeff=x1 * x1))
        B = hamiltonian_form(G, form(chart, 2, 3, coeff=-x1))
        C = hamiltonian_form(G, form(chart, 2, 3, coeff=x2))
        assert A.gamma == vec(chart, 3, coeff=x1).scale(-2)
        assert (B.gamma, C.gamma) == (vec(chart, 1), vec(chart, 0))
        primitive = jacobi_primitive(A, B, C)
        assert primitive == form(chart, 2, coeff=x1).scale(2)
        assert cyclic_sum(A, B, C) == form(chart, 0, 2).scale(2)
        assert jacobi_defect(A, B, C).is_zero()

    def test_kernel_shift_leaves_bracket(self):
        chart = Chart.standard(4)
        G = GraphMultiDirac(GradedContext(chart, 2), form(chart, 0, 1, 2))
        x1, x2 = chart.variable(0), chart.variable(1)
        A = hamiltonian_form(G, form(chart, 2, coeff=x1))
        B = hamiltonian_form(G, form(chart, 0, coeff=x2))
        shifted = AdmissibleForm.create(G, B.sigma, B.gamma + vec(chart, 3, coeff=x1))
        assert poisson_bracket(A, B).sigma == poisson_bracket(A, shifted).sigma

    def test_witness_degree_mismatch(self, volume3):
        chart = volume3.chart
        with pytest.raises(DegreeError):
            AdmissibleForm.create(volume3, form(chart, 0), vec(chart, 0, 1))
