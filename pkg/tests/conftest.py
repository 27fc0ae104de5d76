"""Shared fixtures: charts, contexts and the canonical Ω's."""

from __future__ import annotations

import pytest

from algebra.exterior import Chart, Form
from core.config import GeneratorConfig
from engine.graded_courant import GradedContext
from engine.multidirac import GraphMultiDirac


@pytest.fixture
def xyz() -> Chart:
    return Chart(("x", "y", "z"))


@pytest.fixture
def ctx3(xyz) -> GradedContext:
    """ℝ³ with n = 2."""
    return GradedContext(xyz, 2)


@pytest.fixture
def volume3(ctx3) -> GraphMultiDirac:
    """Graph of dx^dy^dz."""
    return GraphMultiDirac(ctx3, Form.basis(ctx3.chart, [0, 1, 2]))


@pytest.fixture
def qp() -> Chart:
    return Chart(("q", "p"))


@pytest.fixture
def symplectic(qp) -> GraphMultiDirac:
    """Graph of dq^dp, n = 1."""
    return GraphMultiDirac(GradedContext(qp, 1), Form.basis(qp, [0, 1]))


@pytest.fixture
def r4() -> Chart:
    return Chart.standard(4)


@pytest.fixture
def twisted(r4) -> GraphMultiDirac:
    """Graph of x4 dx1^dx2^dx3 with n = 2; dΩ ≠ 0."""
    return GraphMultiDirac(GradedContext(r4, 2), Form.basis(r4, [0, 1, 2], r4.variable(3)))


@pytest.fixture
def cfg() -> GeneratorConfig:
    return GeneratorConfig(seed=42)

