"""
Multi-Dirac Engine: Identity Suites
====================================
Every theorem of the engine as an exactly checkable property. A suite's
trial function draws its inputs from a RandomSource and returns Checks; a
check passes iff its defect (left side minus right side) is exactly zero.

Usage:
    suite = SUITES["gerstenhaber"]
    checks = suite.trial(RandomSource(cfg, trial=3))
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional

from algebra.coeff_ring import Polynomial, partial_derivative
from algebra.exterior import (
    Chart,
    Form,
    Multivector,
    contract,
    ext_deriv,
    lie_bracket,
    lie_derivative,
    schouten,
    wedge,
    wedge_all,
)
from core.config import MAX_GENERATOR_DIMENSION, GeneratorConfig
from engine.graded_courant import (
    GradedContext,
    GradedPair,
    gauge_transform,
    multi_courant,
    pairing_minus,
    pairing_plus,
    section_wedge,
    standard_courant,
)
from engine.multidirac import (
    GraphMultiDirac,
    SpannedStructure,
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
from engine.multipoisson import (
    AdmissibleForm,
    bracket_of_differentials,
    differential_pair,
    hamiltonian_form,
    hamiltonian_kernel,
    jacobi_defect,
    poisson_bracket,
)
from harness.generators import RandomSource

logger = logging.getLogger("mdx.harness.suites")


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# ---------------------------------------------------------------------------
# Checks and suites
# ---------------------------------------------------------------------------

@dataclass
class Check:
    """One evaluated identity: passes iff the defect is exactly zero."""
    identity: str
    defect: Any
    inputs: Mapping[str, Any] = field(default_factory=dict)
    chart: Optional[Chart] = None

    @property
    def passed(self) -> bool:
        return self.defect is None or self.defect.is_zero()

    def render(self, obj: Any) -> str:
        if isinstance(obj, Polynomial):
            return obj.to_source(self.chart.variable_names if self.chart else None)
        if hasattr(obj, "to_source"):
            return obj.to_source()
        return str(obj)

    def rendered_inputs(self) -> dict[str, str]:
        return {name: self.render(value) for name, value in self.inputs.items()}

    def rendered_defect(self) -> str:
        return self.render(self.defect)


TrialFn = Callable[[RandomSource], list[Check]]


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    identities: tuple[str, ...]
    trial: TrialFn
    default_trials: int = 100


def bumped_dimension(cfg: GeneratorConfig) -> int:
    """Dimension with room for a non-closed (n+1)-form."""
    return min(max(cfg.dimension, cfg.ambient + 2), MAX_GENERATOR_DIMENSION)


def _bumped_context(src: RandomSource) -> GradedContext:
    return src.context(dimension=bumped_dimension(src.cfg))


def _pairable(src: RandomSource, n: int) -> tuple[int, int]:
    """Degrees r, s with r + s ≤ n + 1."""
    r = src.integer(1, n)
    return r, src.integer(1, n + 1 - r)


def _degrees(src: RandomSource, n: int, count: int) -> list[int]:
    return [src.integer(1, n) for _ in range(count)]


def _apply_vector(x: Multivector, f: Polynomial) -> Polynomial:
    total = Polynomial.zero(f.nvars)
    for i, component in enumerate(x.components()):
        if not component.is_zero():
            total = total + component * partial_derivative(f, i)
    return total


# ---------------------------------------------------------------------------
# Multivector calculus
# ---------------------------------------------------------------------------

def _schouten_axioms(src: RandomSource) -> list[Check]:
    chart = src.chart()
    top = min(chart.dimension, 3)
    f, g = src.function(chart), src.function(chart)
    F, G = Multivector.function(chart, f), Multivector.function(chart, g)
    X, Y = src.multivector(chart, 1), src.multivector(chart, 1)
    k, l, m = _degrees(src, top, 3)
    P, Q, R = src.multivector(chart, k), src.multivector(chart, l), src.multivector(chart, m)
    return [
        Check("vanishes-on-functions", schouten(F, G), {"f": f, "g": g}, chart),
        Check(
            "vector-on-function",
            schouten(X, F) - Multivector.function(chart, _apply_vector(X, f)),
            {"X": X, "f": f},
            chart,
        ),
        Check(
            "graded-anticommutativity",
            schouten(P, Q) + schouten(Q, P).scale(_sign((k - 1) * (l - 1))),
            {"P": P, "Q": Q},
        ),
        Check("lie-bracket-agreement", schouten(X, Y) - lie_bracket(X, Y), {"X": X, "Y": Y}),
        Check(
            "graded-leibniz",
            schouten(P, wedge(Q, R)) - wedge(schouten(P, Q), R) - wedge(Q, schouten(P, R)).scale(_sign((k - 1) * l)),
            {"P": P, "Q": Q, "R": R},
        ),
        Check(
            "graded-jacobi",
            schouten(P, schouten(Q, R)).scale(_sign((k - 1) * (m - 1)))
            + schouten(Q, schouten(R, P)).scale(_sign((l - 1) * (k - 1)))
            + schouten(R, schouten(P, Q)).scale(_sign((m - 1) * (l - 1))),
            {"P": P, "Q": Q, "R": R},
        ),
    ]


def _lie_derivative_identities(src: RandomSource) -> list[Check]:
    chart = src.chart()
    top = min(chart.dimension, 3)
    k, l = _degrees(src, top, 2)
    P, Q = src.multivector(chart, k), src.multivector(chart, l)
    alpha = src.form(chart, src.integer(0, chart.dimension))
    inputs = {"P": P, "Q": Q, "alpha": alpha}
    return [
        Check(
            "d-commutes-with-lie",
            ext_deriv(lie_derivative(P, alpha)) - lie_derivative(P, ext_deriv(alpha)).scale(_sign(k - 1)),
            {"P": P, "alpha": alpha},
        ),
        Check(
            "koszul",
            contract(schouten(P, Q), alpha)
            - lie_derivative(P, contract(Q, alpha)).scale(_sign((k - 1) * l))
            + contract(Q, lie_derivative(P, alpha)),
            inputs,
        ),
        Check(
            "lie-of-bracket",
            lie_derivative(schouten(P, Q), alpha)
            - lie_derivative(P, lie_derivative(Q, alpha)).scale(_sign((k - 1) * (l - 1)))
            + lie_derivative(Q, lie_derivative(P, alpha)),
            inputs,
        ),
        Check(
            "lie-of-wedge",
            lie_derivative(wedge(P, Q), alpha)
            - contract(Q, lie_derivative(P, alpha)).scale(_sign(l))
            - lie_derivative(Q, contract(P, alpha)),
            inputs,
        ),
        Check("contract-composition", contract(wedge(P, Q), alpha) - contract(Q, contract(P, alpha)), inputs),
        Check("d-squared", ext_deriv(ext_deriv(alpha)), {"alpha": alpha}),
    ]


# ---------------------------------------------------------------------------
# Graded Courant bundle
# ---------------------------------------------------------------------------

def _pairing_symmetry(src: RandomSource) -> list[Check]:
    ctx = src.context()
    r, s = _degrees(src, ctx.n, 2)
    a, b = src.graded_pair(ctx, r), src.graded_pair(ctx, s)
    f = src.function(ctx.chart)
    inputs = {"a": a, "b": b}
    return [
        Check("pairing-minus-symmetry", pairing_minus(a, b) + pairing_minus(b, a).scale(_sign(r * s)), inputs),
        Check("pairing-plus-symmetry", pairing_plus(a, b) - pairing_plus(b, a).scale(_sign(r * s)), inputs),
        Check("pairing-sum", pairing_minus(a, b) + pairing_plus(a, b) - contract(b.gamma, a.sigma), inputs),
        Check(
            "pairing-function-linearity",
            pairing_minus(a.scale(f), b) - pairing_minus(a, b).scale(f),
            {"a": a, "b": b, "f": f},
            ctx.chart,
        ),
        Check("wedge-graded-commutativity", section_wedge(a, b) - section_wedge(b, a).scale(_sign(r * s)), inputs),
        Check(
            "bracket-anticommutativity",
            multi_courant(a, b) + multi_courant(b, a).scale(_sign((r - 1) * (s - 1))),
            inputs,
        ),
    ]


def _gauge_automorphism(src: RandomSource) -> list[Check]:
    ctx = _bumped_context(src)
    chart = ctx.chart
    r, s = _pairable(src, ctx.n)
    a, b = src.graded_pair(ctx, r), src.graded_pair(ctx, s)
    closed = src.omega(ctx, closed=True)
    sigma = src.omega(ctx, closed=False)
    closed_a, closed_b = gauge_transform(closed, a), gauge_transform(closed, b)
    moved_a, moved_b = gauge_transform(sigma, a), gauge_transform(sigma, b)

    degree = r + s - 1
    expected = GradedPair(
        ctx,
        Multivector.zero(chart, degree),
        contract(wedge(a.gamma, b.gamma), ext_deriv(sigma)).scale(-_sign(r)),
        degree,
    )
    G = GraphMultiDirac(ctx, src.omega(ctx))
    inputs = {"sigma": sigma, "a": a, "b": b}
    return [
        Check(
            "closed-gauge-bracket-automorphism",
            gauge_transform(closed, multi_courant(a, b)) - multi_courant(closed_a, closed_b),
            {"sigma": closed, "a": a, "b": b},
        ),
        Check(
            "gauge-bracket-defect",
            multi_courant(moved_a, moved_b) - gauge_transform(sigma, multi_courant(a, b)) - expected,
            inputs,
        ),
        Check(
            "gauge-wedge-compatibility",
            gauge_transform(sigma, section_wedge(a, b)) - section_wedge(moved_a, moved_b),
            inputs,
        ),
        Check("gauge-pairing-invariance", pairing_minus(moved_a, moved_b) - pairing_minus(a, b), inputs),
        Check(
            "gauge-moves-graph",
            G.gauge(sigma).embed(a.gamma) - gauge_transform(sigma, G.embed(a.gamma)),
            {"omega": G.omega, "sigma": sigma, "gamma": a.gamma},
        ),
    ]


def _courant_degree1(src: RandomSource) -> list[Check]:
    chart = src.chart()
    checks: list[Check] = []
    for ctx in (GradedContext(chart, 1), src.context()):
        a, b = src.graded_pair(ctx, 1), src.graded_pair(ctx, 1)
        checks.append(
            Check(
                "classical-courant-n1" if ctx.n == 1 else "classical-courant-configured",
                multi_courant(a, b) - standard_courant(a, b),
                {"a": a, "b": b},
            )
        )
    return checks


# ---------------------------------------------------------------------------
# Multi-Dirac structures
# ---------------------------------------------------------------------------

def _graph_isotropy(src: RandomSource) -> list[Check]:
    ctx = src.context()
    G = src.graph(ctx)
    r, s = _pairable(src, ctx.n)
    X, Y = src.multivector(ctx.chart, r), src.multivector(ctx.chart, s)
    f = src.function(ctx.chart)
    inputs = {"omega": G.omega, "X": X, "Y": Y}
    checks = [
        Check("graph-isotropy", isotropy_defect(G, X, Y), inputs),
        Check(
            "graph-isotropy-function-multiple",
            isotropy_defect(G, X.scale(f), Y),
            {"omega": G.omega, "X": X, "Y": Y, "f": f},
            ctx.chart,
        ),
    ]
    if r + s <= ctx.n:
        checks.append(
            Check(
                "graph-wedge-closure",
                section_wedge(G.embed(X), G.embed(Y)) - graph_embed(G, wedge(X, Y)),
                inputs,
            )
        )
    return checks


def _dircourant_simplify(src: RandomSource) -> list[Check]:
    ctx = _bumped_context(src)
    G = src.graph(ctx)
    r, s = _pairable(src, ctx.n)
    X, Y = src.multivector(ctx.chart, r), src.multivector(ctx.chart, s)
    a, b = G.embed(X), G.embed(Y)
    bracket = multi_courant(a, b)
    gamma = schouten(X, Y)
    expected = GradedPair(
        ctx,
        gamma,
        contract(gamma, G.omega) - contract(wedge(X, Y), ext_deriv(G.omega)).scale(_sign(r)),
        r + s - 1,
    )
    inputs = {"omega": G.omega, "X": X, "Y": Y}
    checks = [
        Check("simplified-bracket", simplified_bracket(a, b) - bracket, inputs),
        Check("graph-bracket-formula", bracket - expected, inputs),
    ]
    if G.is_integrable():
        checks.append(Check("closed-graph-closure", bracket.sigma - contract(bracket.gamma, G.omega), inputs))
    return checks


def _nonintegrable_witness() -> list[Check]:
    """Ω = x4 dx1^dx2^dx3 on a 4-chart with n = 2."""
    chart = Chart.standard(4)
    ctx = GradedContext(chart, 2)
    G = GraphMultiDirac(ctx, Form.basis(chart, [0, 1, 2], chart.variable(3)))
    e1, e2, e4 = (G.embed(Multivector.basis(chart, [i])) for i in (0, 1, 3))
    e23 = G.embed(Multivector.basis(chart, [1, 2]))
    dx3 = Form.basis(chart, [2])
    one = Form.function(chart, 1)
    inputs = {"omega": G.omega}
    return [
        Check("nonintegrable-witness-direct", t_d_direct(e4, e1, e2) - dx3, inputs),
        Check("nonintegrable-witness-expanded", t_d_expanded(e4, e1, e2) - dx3, inputs),
        Check("nonintegrable-witness-bivector", t_d_direct(e4, e1, e23) - one, inputs),
    ]


def _td_cross_oracle(src: RandomSource) -> list[Check]:
    ctx = _bumped_context(src)
    G = src.graph(ctx)
    closed = src.graph(ctx, closed=True)
    r, s, t = _degrees(src, ctx.n, 3)
    X, Y, Z = (src.multivector(ctx.chart, d) for d in (r, s, t))
    a, b, c = G.embed(X), G.embed(Y), G.embed(Z)
    direct = t_d_direct(a, b, c)
    inputs = {"omega": G.omega, "X": X, "Y": Y, "Z": Z}
    checks = [
        Check("direct-vs-expanded", direct - t_d_expanded(a, b, c), inputs),
        Check("direct-vs-closed-form", direct - G.tensor(X, Y, Z), inputs),
        Check(
            "closed-omega-integrable",
            t_d_direct(closed.embed(X), closed.embed(Y), closed.embed(Z)),
            {"omega": closed.omega, "X": X, "Y": Y, "Z": Z},
        ),
    ]
    if src.trial == 0:
        checks.extend(_nonintegrable_witness())
    return checks


def _jacobiator_td(src: RandomSource) -> list[Check]:
    ctx = _bumped_context(src)
    G = src.graph(ctx, closed=False)
    r, s, t = _degrees(src, ctx.n, 3)
    X, Y, Z = (src.multivector(ctx.chart, d) for d in (r, s, t))
    a, b, c = G.embed(X), G.embed(Y), G.embed(Z)
    return [
        Check(
            "jacobiator-from-tensor",
            jacobiator(a, b, c) - jacobiator_from_tensor(a, b, c),
            {"omega": G.omega, "X": X, "Y": Y, "Z": Z},
        )
    ]


def _gerstenhaber(src: RandomSource) -> list[Check]:
    ctx = src.context()
    G = src.graph(ctx, closed=True)
    r, s, t = _degrees(src, ctx.n, 3)
    X, Y, Z = (src.multivector(ctx.chart, d) for d in (r, s, t))
    a, b, c = G.embed(X), G.embed(Y), G.embed(Z)
    pair_inputs = {"omega": G.omega, "X": X, "Y": Y}
    triple_inputs = {"omega": G.omega, "X": X, "Y": Y, "Z": Z}
    checks = [
        Check(
            "anticommutativity",
            multi_courant(a, b) + multi_courant(b, a).scale(_sign((r - 1) * (s - 1))),
            pair_inputs,
        ),
        Check(
            "leibniz",
            multi_courant(a, section_wedge(b, c))
            - section_wedge(multi_courant(a, b), c)
            - section_wedge(b, multi_courant(a, c)).scale(_sign((r - 1) * s)),
            triple_inputs,
        ),
        Check(
            "jacobi",
            multi_courant(a, multi_courant(b, c)).scale(_sign((r - 1) * (t - 1)))
            + multi_courant(b, multi_courant(c, a)).scale(_sign((s - 1) * (r - 1)))
            + multi_courant(c, multi_courant(a, b)).scale(_sign((t - 1) * (s - 1))),
            triple_inputs,
        ),
    ]
    if r + s <= ctx.n + 1:
        bracket = multi_courant(a, b)
        checks.append(Check("closure", bracket.sigma - contract(bracket.gamma, G.omega), pair_inputs))
        checks.append(Check("anchor-bracket", rho_project(bracket) - schouten(X, Y), pair_inputs))
    if r + s <= ctx.n:
        checks.append(Check("anchor-wedge", rho_project(section_wedge(a, b)) - wedge(X, Y), pair_inputs))
    return checks


def _tensor_symmetry(src: RandomSource) -> list[Check]:
    ctx = _bumped_context(src)
    G = src.graph(ctx, closed=False)
    r, s, t = _degrees(src, ctx.n, 3)
    X, Y, Z = (src.multivector(ctx.chart, d) for d in (r, s, t))
    a, b, c = G.embed(X), G.embed(Y), G.embed(Z)
    f = src.function(ctx.chart)
    value = t_d_direct(a, b, c)
    inputs = {"omega": G.omega, "X": X, "Y": Y, "Z": Z, "f": f}
    return [
        Check("linear-in-first", t_d_direct(a.scale(f), b, c) - value.scale(f), inputs, ctx.chart),
        Check("linear-in-second", t_d_direct(a, b.scale(f), c) - value.scale(f), inputs, ctx.chart),
        Check("linear-in-third", t_d_direct(a, b, c.scale(f)) - value.scale(f), inputs, ctx.chart),
        Check(
            "swap-last-two",
            t_d_direct(a, c, b) + value.scale(_sign((s - 1) * (t - 1))),
            {"omega": G.omega, "X": X, "Y": Y, "Z": Z},
        ),
    ]


def _omega_d_antisym(src: RandomSource) -> list[Check]:
    ctx = src.context()
    G = src.graph(ctx)
    n = ctx.n
    vectors = [src.multivector(ctx.chart, 1) for _ in range(n + 1)]
    sections = [G.embed(v) for v in vectors]
    value = omega_from_d1(sections)
    inputs = {"omega": G.omega, **{f"v{i + 1}": v for i, v in enumerate(vectors)}}
    checks: list[Check] = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            swapped = list(sections)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            swap = {**inputs, "swap": f"{i + 1}<->{j + 1}"}
            checks.append(Check("transposition", omega_from_d1(swapped) + value, swap, ctx.chart))
    repeated = [sections[0], *sections[:n]]
    checks.append(Check("repeated-argument", omega_from_d1(repeated), inputs, ctx.chart))
    on_graph = contract(wedge_all(*reversed(vectors)), G.omega).as_function()
    checks.append(Check("graph-formula", value - on_graph, inputs, ctx.chart))
    spanned = SpannedStructure.from_graph(G, vectors)
    checks.append(Check("spanned-generators", spanned.omega_d(range(n + 1)) - value, inputs, ctx.chart))
    return checks


# ---------------------------------------------------------------------------
# Multi-Poisson bracket
# ---------------------------------------------------------------------------

def poisson_structure(src: RandomSource) -> GraphMultiDirac:
    """Cycles through dq^dp (n = 1), dx^dy^dz (n = 2) and dx1^dx2^dx3^dx4 (n = 3) by trial."""
    if src.trial % 3 == 0:
        chart = Chart(("q", "p"))
        return GraphMultiDirac(GradedContext(chart, 1), Form.basis(chart, [0, 1]))
    if src.trial % 3 == 1:
        chart = Chart(("x", "y", "z"))
        return GraphMultiDirac(GradedContext(chart, 2), Form.basis(chart, [0, 1, 2]))
    chart = Chart.standard(4)
    return GraphMultiDirac(GradedContext(chart, 3), Form.basis(chart, [0, 1, 2, 3]))


def _fixed_brackets() -> list[Check]:
    qp = Chart(("q", "p"))
    G1 = GraphMultiDirac(GradedContext(qp, 1), Form.basis(qp, [0, 1]))
    q = hamiltonian_form(G1, Form.function(qp, qp.variable("q")))
    p = hamiltonian_form(G1, Form.function(qp, qp.variable("p")))
    xyz = Chart(("x", "y", "z"))
    G2 = GraphMultiDirac(GradedContext(xyz, 2), Form.basis(xyz, [0, 1, 2]))
    z_dx = hamiltonian_form(G2, Form.basis(xyz, [0], xyz.variable("z")))
    x_dy = hamiltonian_form(G2, Form.basis(xyz, [1], xyz.variable("x")))
    return [
        Check("bracket-q-p", poisson_bracket(q, p).sigma - Form.function(qp, -1), {"A": q, "B": p}),
        Check("bracket-zdx-xdy", poisson_bracket(z_dx, x_dy).sigma + Form.basis(xyz, [0]), {"A": z_dx, "B": x_dy}),
    ]


def _poisson_anticomm(src: RandomSource) -> list[Check]:
    G = poisson_structure(src)
    r, s = _pairable(src, G.context.n)
    A, B = src.admissible(G, r), src.admissible(G, s)
    k, l = A.grade, B.grade
    bracket = poisson_bracket(A, B)
    inputs = {"A": A, "B": B}
    checks = [
        Check("anticommutativity", bracket.sigma + poisson_bracket(B, A).sigma.scale(_sign(k * l)), inputs),
        Check("grade-additivity", G.chart.constant(bracket.grade - k - l), inputs, G.chart),
        Check("bracket-of-differentials",
              multi_courant(differential_pair(A), differential_pair(B)) - bracket_of_differentials(A, B), inputs),
        Check("bracket-admissible", bracket.defect, inputs),
    ]
    if src.trial == 0:
        checks.extend(_fixed_brackets())
    return checks


def _poisson_welldef(src: RandomSource) -> list[Check]:
    n = min(src.cfg.ambient, MAX_GENERATOR_DIMENSION - 2)
    chart = Chart.standard(n + 2)
    # Ω misses the last coordinate, so every witness has a kernel direction
    omega = Form.basis(chart, list(range(n + 1)), src.rational())
    G = GraphMultiDirac(GradedContext(chart, n), omega)
    r, s = _pairable(src, n)
    A, B = src.admissible(G, r), src.admissible(G, s)
    kernel = hamiltonian_kernel(G, s)
    delta = src.choice(kernel).scale(src.function(chart))
    shifted = AdmissibleForm.create(G, B.sigma, B.gamma + delta)
    inputs = {"omega": omega, "A": A, "B": B, "delta": delta}
    return [
        Check("kernel-direction", contract(delta, omega), {"omega": omega, "delta": delta}),
        Check("witness-independence", poisson_bracket(A, B).sigma - poisson_bracket(A, shifted).sigma, inputs),
    ]


def _poisson_jacobi(src: RandomSource) -> list[Check]:
    G = poisson_structure(src)
    A, B, C = (src.admissible(G) for _ in range(3))
    return [Check("jacobi-up-to-exact", jacobi_defect(A, B, C), {"A": A, "B": B, "C": C})]


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite(
            "schouten-axioms",
            "Schouten bracket axioms: vanishing on functions, graded anticommutativity, "
            "agreement with the Lie bracket, graded Leibniz rule and graded Jacobi identity",
            ("vanishes-on-functions", "vector-on-function", "graded-anticommutativity",
             "lie-bracket-agreement", "graded-leibniz", "graded-jacobi"),
            _schouten_axioms,
            200,
        ),
        Suite(
            "prop-a3",
            "Generalized Lie derivative identities: d£ = (−1)^{k−1} £d, the Koszul identity, "
            "£ of a bracket, £ of a wedge; contraction of a wedge and d² = 0",
            ("d-commutes-with-lie", "koszul", "lie-of-bracket", "lie-of-wedge", "contract-composition", "d-squared"),
            _lie_derivative_identities,
            200,
        ),
        Suite(
            "pairing-symmetry",
            "Graded symmetry of both pairings, the section wedge and the multi-Courant bracket on all of L",
            ("pairing-minus-symmetry", "pairing-plus-symmetry", "pairing-sum", "pairing-function-linearity",
             "wedge-graded-commutativity", "bracket-anticommutativity"),
            _pairing_symmetry,
        ),
        Suite(
            "gauge-automorphism",
            "Gauge transformations: automorphisms of the bracket for closed σ, "
            "the −(−1)^r i_{Γ∧Γ'} dσ defect otherwise, and compatibility with the wedge and the pairing",
            ("closed-gauge-bracket-automorphism", "gauge-bracket-defect", "gauge-wedge-compatibility",
             "gauge-pairing-invariance", "gauge-moves-graph"),
            _gauge_automorphism,
        ),
        Suite(
            "graph-isotropy",
            "The graph of any (n+1)-form is isotropic and closed under the section wedge",
            ("graph-isotropy", "graph-isotropy-function-multiple", "graph-wedge-closure"),
            _graph_isotropy,
            200,
        ),
        Suite(
            "dircourant-simplify",
            "The bracket on isotropic sections reduces to ([Γ,Γ'], (−1)^{(r−1)s} £_Γ Σ' − i_Γ' dΣ); "
            "on graphs it is ([Γ,Γ'], i_{[Γ,Γ']}Ω − (−1)^r i_{Γ∧Γ'} dΩ)",
            ("simplified-bracket", "graph-bracket-formula", "closed-graph-closure"),
            _dircourant_simplify,
        ),
        Suite(
            "td-cross-oracle",
            "Integrability tensor: bracket form, Cartan expansion and (−1)^{r+s} i_{Γ∧Γ'∧Γ''} dΩ agree; "
            "it vanishes for closed Ω and not for x4 dx1^dx2^dx3",
            ("direct-vs-expanded", "direct-vs-closed-form", "closed-omega-integrable",
             "nonintegrable-witness-direct", "nonintegrable-witness-expanded", "nonintegrable-witness-bivector"),
            _td_cross_oracle,
            200,
        ),
        Suite(
            "jacobiator-td",
            "The Jacobiator on graph sections of any Ω equals (0, −½ (−1)^{s+t} d T_D)",
            ("jacobiator-from-tensor",),
            _jacobiator_td,
        ),
        Suite(
            "gerstenhaber",
            "Sections of an integrable graph form a Gerstenhaber algebra and the anchor is a homomorphism",
            ("anticommutativity", "leibniz", "jacobi", "closure", "anchor-bracket", "anchor-wedge"),
            _gerstenhaber,
        ),
        Suite(
            "appendix-b",
            "T_D is function-linear in each argument and T(a,c,b) = −(−1)^{(s−1)(t−1)} T(a,b,c)",
            ("linear-in-first", "linear-in-second", "linear-in-third", "swap-last-two"),
            _tensor_symmetry,
        ),
        Suite(
            "poisson-anticomm",
            "Multi-Poisson bracket: {q,p} = −1, {z dx, x dy} = −dx, graded anticommutativity, grade "
            "additivity, the bracket of differentials and admissibility of the result",
            ("anticommutativity", "grade-additivity", "bracket-of-differentials", "bracket-admissible",
             "bracket-q-p", "bracket-zdx-xdy"),
            _poisson_anticomm,
        ),
        Suite(
            "poisson-welldef",
            "The bracket does not depend on the witness: shifting Γ_Σ' by a kernel direction of Ω leaves it fixed",
            ("kernel-direction", "witness-independence"),
            _poisson_welldef,
        ),
        Suite(
            "poisson-jacobi",
            "Graded Jacobi identity of the multi-Poisson bracket up to the exact form "
            "(−1)^{m(k+l+1)} d i_Γ' i_Γ'' dΣ",
            ("jacobi-up-to-exact",),
            _poisson_jacobi,
        ),
        Suite(
            "courant-degree1",
            "On L_1 the multi-Courant bracket is the classical Courant bracket, for n = 1 and the configured n",
            ("classical-courant-n1", "classical-courant-configured"),
            _courant_degree1,
        ),
        Suite(
            "omega-d-antisym",
            "The (n+1)-form Ω_D induced on D_1 is totally antisymmetric "
            "and equals i_{v_{n+1}∧…∧v_1} Ω on graphs",
            ("transposition", "repeated-argument", "graph-formula", "spanned-generators"),
            _omega_d_antisym,
        ),
    )
}

ALL = "all"


def suite_names() -> list[str]:
    return [*SUITES, ALL]
