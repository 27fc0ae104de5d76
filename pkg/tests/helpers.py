"""Small constructors shared by the test modules."""

from algebra.exterior import Chart, Form, Multivector


def vec(chart: Chart, *indices: int, coeff=1) -> Multivector:
    return Multivector.basis(chart, list(indices), coeff)


def form(chart: Chart, *indices: int, coeff=1) -> Form:
    return Form.basis(chart, list(indices), coeff)
