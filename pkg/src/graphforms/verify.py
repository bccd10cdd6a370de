"""Built-in verification suite: worked-example golden data plus randomized
algebraic property checks.

Six worked examples pin the quotient calculi, connections and curvatures of
small graphs; the ``complete`` group pins the closed-form/composition
agreement of the curvature tables on complete graphs; the ``metric`` group
pins the compatibility verdicts; the ``props`` group runs the randomized
identity suites (nilpotency, Leibniz laws, associativity, kernel closure,
splitting, factorization, linearity of torsion, bilinearity of the
projected curvatures).

One published table entry is corrected here: for the five-arrow graph on
three vertices, the second-variant raw curvature of the arrow (3, 2) has
coefficient g*(g-2) on the path (3,2,1,2).  The value is forced by the
consistency identity relating the two curvature variants through the
quotient torsion (checked below as ``example6.variant_identity``) and is
confirmed by direct composition; see the engine's decision notes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .calculus import CalculusTower, Digraph
from .connection import (
    CompleteConnection,
    ConnectionParams,
    InducedConnection,
    Metric,
    bilinearize,
)
from .elements import Element
from .reduction import echelonize, in_span
from .scalars import GammaPoly
from .universal import UniversalAlgebra

G = GammaPoly.GAMMA
M = Element.monomial

SELECTIONS = ("all", "1", "2", "3", "4", "5", "6", "props")


@dataclass
class CheckResult:
    name: str
    group: str
    passed: bool
    detail: str = ""


@dataclass
class _Suite:
    seed: int = 20260810
    cases: int = 120
    results: list[CheckResult] = field(default_factory=list)

    def check(self, group: str, name: str, fn) -> None:
        try:
            detail = fn()
            self.results.append(CheckResult(name, group, True, detail or ""))
        except AssertionError as exc:
            self.results.append(CheckResult(name, group, False, str(exc)))
        except Exception as exc:  # structural failure counts as a failure
            self.results.append(CheckResult(name, group, False, f"error: {exc!r}"))

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _el(degree: int, data: dict) -> Element:
    return Element(degree, data)


def _graphs() -> dict[str, Digraph]:
    return {
        "example1": Digraph(3, [(1, 2), (2, 3), (1, 3)]),
        "example2": Digraph(
            4,
            [
                (i, j)
                for i in range(1, 5)
                for j in range(1, 5)
                if i != j and (i, j) not in {(1, 4), (4, 1)}
            ],
        ),
        "example3": Digraph(3, [(1, 2), (2, 3), (3, 1)]),
        "example5": Digraph(3, [(1, 2), (2, 1), (2, 3), (3, 2)]),
        "example6": Digraph(3, [(1, 2), (2, 1), (2, 3), (3, 1), (3, 2)]),
        "single_edge": Digraph(2, [(1, 2)]),
        "complete2": Digraph.complete(2),
        "complete3": Digraph.complete(3),
        "complete4": Digraph.complete(4),
    }


def _towers() -> dict[str, CalculusTower]:
    towers = {}
    for name, graph in _graphs().items():
        depth = 3 if graph.n_points >= 4 else 4
        towers[name] = CalculusTower(graph, depth)
    return towers


# ---------------------------------------------------------------------------
# golden data for the worked examples
# ---------------------------------------------------------------------------

EXAMPLE5_DELTA = {
    (1, 2): _el(2, {(1, 2, 1): 1, (2, 1, 2): 1}),
    (2, 1): _el(2, {(1, 2, 1): 1, (2, 1, 2): 1}),
    (2, 3): _el(2, {(2, 3, 2): 1, (3, 2, 3): 1}),
    (3, 2): _el(2, {(2, 3, 2): 1, (3, 2, 3): 1}),
}

EXAMPLE5_NABLA = {
    (1, 2): _el(2, {(1, 2, 1): 1, (1, 2, 3): 1, (2, 1, 2): 1}),
    (2, 1): _el(2, {(1, 2, 1): 1, (2, 1, 2): 1, (3, 2, 1): 1}),
    (2, 3): _el(2, {(1, 2, 3): 1, (2, 3, 2): 1, (3, 2, 3): 1}),
    (3, 2): _el(2, {(2, 3, 2): 1, (3, 2, 1): 1, (3, 2, 3): 1}),
}

EXAMPLE5_RAW1 = {
    (1, 2): _el(3, {}),
    (2, 1): _el(3, {(2, 3, 2, 1): 1, (2, 1, 2, 3): -1}),
    (2, 3): _el(3, {(2, 1, 2, 3): 1, (2, 3, 2, 1): -1}),
    (3, 2): _el(3, {}),
}

EXAMPLE5_NABLA2 = {
    (1, 2): _el(3, {(1, 2, 3, 2): -1, (3, 2, 1, 2): 1}),
    (2, 1): _el(3, {(2, 1, 2, 3): -1, (2, 3, 2, 1): 1}),
    (2, 3): _el(3, {(2, 1, 2, 3): 1, (2, 3, 2, 1): -1}),
    (3, 2): _el(3, {(1, 2, 3, 2): 1, (3, 2, 1, 2): -1}),
}

EXAMPLE5_CURV = {
    1: {
        (1, 2): _el(3, {}),
        (2, 1): M((2, 3, 2, 1)),
        (2, 3): M((2, 1, 2, 3)),
        (3, 2): _el(3, {}),
    },
    2: {
        (1, 2): _el(3, {}),
        (2, 1): M((2, 3, 2, 1)),
        (2, 3): M((2, 1, 2, 3)),
        (3, 2): _el(3, {}),
    },
}

EXAMPLE6_DELTA = {
    (1, 2): _el(2, {(1, 2, 1): 1, (2, 1, 2): 1, (3, 1, 2): 1}),
    (2, 1): _el(2, {(1, 2, 1): 1, (3, 2, 1): 1, (2, 3, 1): -1, (2, 1, 2): 1}),
    (2, 3): _el(2, {(3, 2, 3): 1, (2, 3, 1): 1, (2, 3, 2): 1}),
    (3, 1): _el(2, {(2, 3, 1): 1, (3, 2, 1): -1, (3, 1, 2): 1}),
    (3, 2): _el(2, {(2, 3, 2): 1, (3, 1, 2): -1, (3, 2, 1): 1, (3, 2, 3): 1}),
}

EXAMPLE6_NABLA = {
    (1, 2): _el(2, {(2, 1, 2): 1, (3, 1, 2): 1, (1, 2, 1): 1, (1, 2, 3): 1}),
    (2, 1): _el(2, {(1, 2, 1): 1, (3, 2, 1): 1, (2, 1, 2): 1, (2, 3, 1): G - 1}),
    (2, 3): _el(2, {(1, 2, 3): 1, (3, 2, 3): 1, (2, 3, 2): 1, (2, 3, 1): 1}),
    (3, 1): _el(2, {(2, 3, 1): 1, (3, 2, 1): G - 1, (3, 1, 2): 1}),
    (3, 2): _el(2, {(2, 3, 2): 1, (3, 2, 1): 1, (3, 2, 3): 1, (3, 1, 2): G - 1}),
}

EXAMPLE6_RAW1 = {
    (1, 2): _el(3, {}),
    (2, 1): _el(3, {(2, 1, 2, 3): -1, (2, 3, 1, 2): -G, (2, 3, 2, 1): G * (2 - G)}),
    (2, 3): _el(3, {(2, 1, 2, 3): 1, (2, 3, 1, 2): -G, (2, 3, 2, 1): -G}),
    (3, 1): _el(
        3,
        {
            (3, 1, 2, 3): -1,
            (3, 1, 2, 1): -G,
            (3, 2, 3, 1): G * (2 - G),
            (3, 2, 1, 2): -G,
        },
    ),
    (3, 2): _el(
        3,
        {(3, 2, 3, 1): -G, (3, 2, 1, 2): -G, (3, 1, 2, 1): -G, (3, 1, 2, 3): -G},
    ),
}

# The (3, 2) coefficient on (3,2,1,2) is the corrected value g*(g-2); the
# published table's -g is inconsistent with the variant identity below.
EXAMPLE6_NABLA2 = {
    (1, 2): _el(
        3, {(1, 2, 3, 2): -1, (2, 3, 1, 2): G, (3, 2, 1, 2): G, (1, 2, 3, 1): -G}
    ),
    (2, 1): _el(3, {(2, 1, 2, 3): -1, (3, 1, 2, 1): G, (2, 3, 2, 1): G * (2 - G)}),
    (2, 3): _el(
        3, {(2, 1, 2, 3): 1, (3, 1, 2, 3): G, (2, 3, 1, 2): -G, (2, 3, 2, 1): -G}
    ),
    (3, 1): _el(
        3,
        {
            (1, 2, 3, 1): 1,
            (3, 1, 2, 3): -1,
            (3, 1, 2, 1): G * (G - 2),
            (3, 2, 3, 1): G * (2 - G),
        },
    ),
    (3, 2): _el(3, {(1, 2, 3, 2): 1, (3, 2, 3, 1): -G, (3, 2, 1, 2): G * (G - 2)}),
}

EXAMPLE6_CURV = {
    1: {
        (1, 2): _el(3, {}),
        (2, 1): M((2, 3, 2, 1), G * (2 - G)),
        (2, 3): M((2, 1, 2, 3)),
        (3, 1): _el(3, {(3, 1, 2, 1): -G, (3, 2, 3, 1): G * (2 - G)}),
        (3, 2): M((3, 2, 1, 2), -G),
    },
    2: {
        (1, 2): _el(3, {}),
        (2, 1): M((2, 3, 2, 1), G * (2 - G)),
        (2, 3): M((2, 1, 2, 3)),
        (3, 1): _el(3, {(3, 1, 2, 1): G * (G - 2), (3, 2, 3, 1): G * (2 - G)}),
        (3, 2): M((3, 2, 1, 2), G * (G - 2)),
    },
}

EXAMPLE2_KERNEL2 = [
    M((1, 4, 1)),
    M((1, 4, 2)),
    M((1, 4, 3)),
    M((2, 1, 4)),
    M((2, 4, 1)),
    M((3, 1, 4)),
    M((3, 4, 1)),
    M((4, 1, 2)),
    M((4, 1, 3)),
    M((4, 1, 4)),
    _el(2, {(1, 2, 4): 1, (1, 3, 4): 1}),
    _el(2, {(4, 2, 1): 1, (4, 3, 1): 1}),
]


# ---------------------------------------------------------------------------
# worked-example checks
# ---------------------------------------------------------------------------


def _check_example1(suite: _Suite, towers) -> None:
    tower = towers["example1"]

    def dims():
        assert tower.kernel(1).rank == 3
        assert tower.dim_quotient(2) == 1, tower.dim_quotient(2)
        assert tower.quotient_basis(2) == ((1, 2, 3),)
        assert tower.dim_quotient(3) == 0 and tower.dim_quotient(4) == 0

    def projection():
        assert tower.project(M((1, 2, 3))) == M((1, 2, 3))
        assert not in_span(M((1, 2, 3)), tower.kernel(2))
        for row in tower.kernel(2).rows:
            assert tower.project(row).is_zero()

    suite.check("1", "example1.dims", dims)
    suite.check("1", "example1.projection", projection)


def _check_example2(suite: _Suite, towers) -> None:
    tower = towers["example2"]

    def kernel_span():
        computed = tower.kernel(2)
        assert computed.rank == 12, computed.rank
        listed = echelonize(EXAMPLE2_KERNEL2, degree=2)
        for gen in EXAMPLE2_KERNEL2:
            assert in_span(gen, computed), gen
        for row in computed.rows:
            assert in_span(row, listed), row
        assert tower.dim_quotient(2) == 24

    def representative():
        assert tower.project(M((1, 2, 4))) == M((1, 3, 4), -1)
        assert tower.project(_el(2, {(1, 2, 4): 1, (1, 3, 4): 1})).is_zero()

    suite.check("2", "example2.kernel_span", kernel_span)
    suite.check("2", "example2.representative", representative)


def _check_example3(suite: _Suite, towers) -> None:
    tower = towers["example3"]

    def collapse():
        assert tower.kernel(2).rank == 12
        assert tower.dim_quotient(2) == 0
        for n in (2, 3, 4):
            assert tower.dim_quotient(n) == 0

    def product_vanishes():
        assert not (M((1, 2)) * M((2, 3))).is_zero()
        assert tower.product(M((1, 2)), M((2, 3))).is_zero()

    suite.check("3", "example3.collapse", collapse)
    suite.check("3", "example3.product_vanishes", product_vanishes)


def _check_example4(suite: _Suite, towers) -> None:
    params = ConnectionParams.symmetric()

    def complete_two_flat():
        conn = CompleteConnection(UniversalAlgebra(2), params)
        for which in (1, 2):
            for (i, j) in ((1, 2), (2, 1)):
                assert conn.curvature_report(which, i, j).raw.is_zero()

    def single_edge_trivial():
        tower = towers["single_edge"]
        induced = InducedConnection(tower, params)
        assert induced.on_edge(1, 2).is_zero()
        for which in (1, 2):
            assert induced.curvature_report(which, 1, 2).raw.is_zero()
        assert induced.torsion_edge(1, 2) == tower.delta(M((1, 2)))

    suite.check("4", "example4.complete_two_flat", complete_two_flat)
    suite.check("4", "example4.single_edge_trivial", single_edge_trivial)


def _check_example5(suite: _Suite, towers) -> None:
    tower = towers["example5"]
    induced = InducedConnection(tower, ConnectionParams.symmetric())

    def quotient():
        support = {p for row in tower.kernel(2).rows for p in row.support()}
        assert support == {
            (1, 2, 3),
            (1, 3, 1),
            (1, 3, 2),
            (2, 1, 3),
            (2, 3, 1),
            (3, 1, 2),
            (3, 1, 3),
            (3, 2, 1),
        }, support
        assert set(tower.quotient_basis(2)) == {
            (1, 2, 1),
            (2, 1, 2),
            (2, 3, 2),
            (3, 2, 3),
        }

    def delta_values():
        for edge, expect in EXAMPLE5_DELTA.items():
            assert tower.delta(M(edge)) == expect, edge

    def nabla_values():
        for edge, expect in EXAMPLE5_NABLA.items():
            assert induced.on_edge(*edge) == expect, edge

    def raw_curvatures():
        for edge, expect in EXAMPLE5_RAW1.items():
            assert induced.extend_first(induced.on_edge(*edge)) == expect, edge
        for edge, expect in EXAMPLE5_NABLA2.items():
            assert induced.extend_second(induced.on_edge(*edge)) == expect, edge

    def bilinear_curvatures():
        for which in (1, 2):
            for edge, expect in EXAMPLE5_CURV[which].items():
                assert induced.curvature_report(which, *edge).bilinear == expect, (
                    which,
                    edge,
                )

    def quotient_torsion():
        for edge in tower.graph.sorted_edges():
            assert induced.torsion_edge(*edge).is_zero(), edge

    def product_value():
        assert tower.product(M((1, 2)), M((2, 1))) == M((1, 2, 1))

    suite.check("5", "example5.quotient", quotient)
    suite.check("5", "example5.delta", delta_values)
    suite.check("5", "example5.nabla", nabla_values)
    suite.check("5", "example5.raw_curvatures", raw_curvatures)
    suite.check("5", "example5.bilinear_curvatures", bilinear_curvatures)
    suite.check("5", "example5.quotient_torsion", quotient_torsion)
    suite.check("5", "example5.product", product_value)


def _check_example6(suite: _Suite, towers) -> None:
    tower = towers["example6"]
    induced = InducedConnection(tower, ConnectionParams.symmetric())

    def quotient():
        support = {p for row in tower.kernel(2).rows for p in row.support()}
        assert support == {(1, 2, 3), (1, 3, 1), (1, 3, 2), (2, 1, 3), (3, 1, 3)}
        assert set(tower.quotient_basis(2)) == {
            (1, 2, 1),
            (2, 1, 2),
            (2, 3, 1),
            (2, 3, 2),
            (3, 1, 2),
            (3, 2, 1),
            (3, 2, 3),
        }

    def delta_values():
        for edge, expect in EXAMPLE6_DELTA.items():
            assert tower.delta(M(edge)) == expect, edge

    def nabla_values():
        for edge, expect in EXAMPLE6_NABLA.items():
            assert induced.on_edge(*edge) == expect, edge

    def raw_curvatures():
        for edge, expect in EXAMPLE6_RAW1.items():
            assert induced.extend_first(induced.on_edge(*edge)) == expect, edge
        for edge, expect in EXAMPLE6_NABLA2.items():
            assert induced.extend_second(induced.on_edge(*edge)) == expect, edge

    def bilinear_curvatures():
        for which in (1, 2):
            for edge, expect in EXAMPLE6_CURV[which].items():
                assert induced.curvature_report(which, *edge).bilinear == expect, (
                    which,
                    edge,
                )

    def variant_identity():
        # first variant equals head-compressed second variant plus the
        # quotient torsion applied to the leading leg; this pins the
        # corrected (3,2) coefficient
        for edge in tower.graph.sorted_edges():
            base = induced.on_edge(*edge)
            lhs = induced.extend_first(base)
            rhs = induced.compress_head(induced.extend_second(base))
            for (a, b, c), coeff in base.terms.items():
                rhs = rhs + (induced.torsion_edge(a, b) * M((b, c))).scale(coeff)
            assert lhs == rhs, edge

    def gamma_one_coincidence():
        special = InducedConnection(tower, ConnectionParams.symmetric(1))
        for edge in tower.graph.sorted_edges():
            one = special.curvature_report(1, *edge).bilinear
            two = special.curvature_report(2, *edge).bilinear
            assert one == two, edge

    suite.check("6", "example6.quotient", quotient)
    suite.check("6", "example6.delta", delta_values)
    suite.check("6", "example6.nabla", nabla_values)
    suite.check("6", "example6.raw_curvatures", raw_curvatures)
    suite.check("6", "example6.bilinear_curvatures", bilinear_curvatures)
    suite.check("6", "example6.variant_identity", variant_identity)
    suite.check("6", "example6.gamma_one_coincidence", gamma_one_coincidence)


# ---------------------------------------------------------------------------
# complete-graph closed forms and the metric verdicts
# ---------------------------------------------------------------------------


def _check_complete(suite: _Suite) -> None:
    params = ConnectionParams.symmetric()

    def lemma_forms():
        for n in (3, 4):
            omega = UniversalAlgebra(n)
            conn = CompleteConnection(omega, params)
            for i in omega.vertices():
                for j in omega.vertices():
                    if i == j:
                        continue
                    middles = [a for a in omega.vertices() if a not in (i, j)]
                    expected = omega.d_path((i, j))
                    torsion = Element.zero(2)
                    for a in middles:
                        expected = expected + M((i, a, j), G)
                        torsion = torsion - M((i, a, j), G)
                    assert conn.on_edge(i, j) == expected, (n, i, j)
                    assert conn.torsion_edge(i, j) == torsion, (n, i, j)
                    assert conn.torsion_edge(i, j) == omega.d_path((i, j)) - conn.on_edge(i, j)

    def torsion_zero_iff():
        for n in (3, 4):
            omega = UniversalAlgebra(n)
            assert all(
                CompleteConnection(omega, ConnectionParams.symmetric(0))
                .torsion_edge(i, j)
                .is_zero()
                for i in omega.vertices()
                for j in omega.vertices()
                if i != j
            )
            conn = CompleteConnection(omega, params)
            assert all(
                not conn.torsion_edge(i, j).is_zero()
                for i in omega.vertices()
                for j in omega.vertices()
                if i != j
            )

    def closed_equals_composed():
        count = 0
        for n in (3, 4):
            omega = UniversalAlgebra(n)
            conn = CompleteConnection(omega, params)
            for which in (1, 2):
                for i in omega.vertices():
                    for j in omega.vertices():
                        if i == j:
                            continue
                        closed = conn.curvature_closed(which, i, j)
                        composed = conn.curvature_composed(which, i, j)
                        assert closed == composed, (n, which, i, j)
                        count += 1
        return f"{count} arrow/variant pairs"

    def variant_difference():
        for n in (3, 4):
            omega = UniversalAlgebra(n)
            conn = CompleteConnection(omega, params)
            for i in omega.vertices():
                for j in omega.vertices():
                    if i == j:
                        continue
                    shift = Element.zero(3)
                    for (a, b, c), coeff in conn.on_edge(i, j).terms.items():
                        shift = shift + (
                            conn.torsion_edge(a, b) * M((b, c))
                        ).scale(coeff)
                    assert conn.curvature_composed(1, i, j) == conn.curvature_composed(
                        2, i, j
                    ) + shift, (n, i, j)

    def flat_when_untwisted():
        for n in (3, 4):
            conn = CompleteConnection(
                UniversalAlgebra(n), ConnectionParams.symmetric(0)
            )
            for which in (1, 2):
                for i in conn.omega.vertices():
                    for j in conn.omega.vertices():
                        if i != j:
                            assert conn.curvature_composed(which, i, j).is_zero()

    def gamma_one_coincidence():
        for n in (3, 4):
            conn = CompleteConnection(
                UniversalAlgebra(n), ConnectionParams.symmetric(1)
            )
            for i in conn.omega.vertices():
                for j in conn.omega.vertices():
                    if i == j:
                        continue
                    one = conn.curvature_report(1, i, j).bilinear
                    two = conn.curvature_report(2, i, j).bilinear
                    assert one == two, (n, i, j)

    def raw_not_bilinear():
        # with a twisted connection the raw curvature leaves the arrow block
        for n in (3, 4):
            conn = CompleteConnection(UniversalAlgebra(n), params)
            for i in conn.omega.vertices():
                for j in conn.omega.vertices():
                    if i == j:
                        continue
                    report = conn.curvature_report(1, i, j)
                    assert not report.dropped.is_zero(), (n, i, j)

    suite.check("complete", "complete.connection_forms", lemma_forms)
    suite.check("complete", "complete.torsion_zero_iff", torsion_zero_iff)
    suite.check("complete", "complete.closed_equals_composed", closed_equals_composed)
    suite.check("complete", "complete.variant_difference", variant_difference)
    suite.check("complete", "complete.flat_when_untwisted", flat_when_untwisted)
    suite.check("complete", "complete.gamma_one_coincidence", gamma_one_coincidence)
    suite.check("complete", "complete.raw_not_bilinear", raw_not_bilinear)


def _check_metric(suite: _Suite) -> None:
    params = ConnectionParams.symmetric()

    def two_points_compatible():
        conn = CompleteConnection(UniversalAlgebra(2), params)
        report = conn.metric_report(Metric(1))
        assert all(v.is_zero() for v in report.values()), report

    def larger_incompatible():
        for n in (3, 4):
            conn = CompleteConnection(UniversalAlgebra(n), params)
            report = conn.metric_report(Metric(1))
            assert any(not v.is_zero() for v in report.values()), n

    def scale_invariance():
        conn = CompleteConnection(UniversalAlgebra(3), params)
        base = conn.metric_report(Metric(1))
        scaled = conn.metric_report(Metric(Fraction(5, 7)))
        for key, value in base.items():
            assert scaled[key] == value.scale(Fraction(5, 7)), key

    suite.check("metric", "metric.two_points_compatible", two_points_compatible)
    suite.check("metric", "metric.larger_incompatible", larger_incompatible)
    suite.check("metric", "metric.scale_invariance", scale_invariance)


# ---------------------------------------------------------------------------
# randomized property suites
# ---------------------------------------------------------------------------


def _random_poly(rng: random.Random) -> GammaPoly:
    return GammaPoly((rng.randint(-3, 3), rng.randint(-1, 1)))


def _random_element(
    rng: random.Random, omega: UniversalAlgebra, degree: int, symbolic: bool = False
) -> Element:
    paths = omega.basis(degree)
    picks = rng.sample(paths, rng.randint(1, min(4, len(paths))))
    terms = {}
    for p in picks:
        coeff = _random_poly(rng) if symbolic else GammaPoly.const(rng.randint(-3, 3))
        if coeff:
            terms[p] = coeff
    return Element(degree, terms)


def _random_function(rng: random.Random, omega: UniversalAlgebra) -> Element:
    return omega.function(
        {i: rng.randint(-3, 3) for i in omega.vertices() if rng.random() < 0.8}
    )


def _random_quotient_rep(
    rng: random.Random, tower: CalculusTower, degree: int
) -> Element:
    if degree == 0:
        return _random_function(rng, tower.omega)
    basis = tower.quotient_basis(degree)
    if not basis:
        return Element.zero(degree)
    picks = rng.sample(basis, rng.randint(1, min(3, len(basis))))
    return Element(degree, {p: rng.randint(-3, 3) or 1 for p in picks})


def _random_kernel_element(
    rng: random.Random, tower: CalculusTower, degree: int
) -> Element:
    rows = tower.kernel(degree).rows
    if not rows:
        return Element.zero(degree)
    out = Element.zero(degree)
    for row in rng.sample(rows, rng.randint(1, min(3, len(rows)))):
        out = out + row.scale(rng.randint(-3, 3) or 1)
    return out


def _check_props(suite: _Suite, towers) -> None:
    cases = suite.cases
    algebras = {n: UniversalAlgebra(n, 5) for n in (2, 3, 4)}
    quotient_towers = [
        towers[name]
        for name in (
            "example1",
            "example2",
            "example3",
            "example5",
            "example6",
            "single_edge",
            "complete3",
        )
    ]

    def d_squared():
        count = 0
        for omega in algebras.values():
            for degree in range(0, 4):
                for path in omega.basis(degree):
                    assert omega.d(omega.d_path(path)).is_zero(), path
                    count += 1
        return f"{count} basis monomials"

    def d_leibniz():
        rng = suite.rng()
        for _ in range(cases):
            omega = algebras[rng.choice((2, 3, 4))]
            n = rng.randint(0, 2)
            m = rng.randint(0, 2 - n) if n < 2 else 0
            x = _random_element(rng, omega, n, symbolic=True)
            y = _random_element(rng, omega, m, symbolic=True)
            lhs = omega.d(x * y)
            rhs = omega.d(x) * y + (x * omega.d(y)).scale((-1) ** n)
            assert lhs == rhs
        return f"{cases} cases"

    def multiplication_associative():
        rng = suite.rng()
        for _ in range(cases):
            omega = algebras[rng.choice((2, 3, 4))]
            degrees = rng.choice([(0, 1, 1), (1, 1, 1), (1, 0, 2), (2, 1, 0), (1, 2, 1)])
            x, y, z = (
                _random_element(rng, omega, deg, symbolic=True) for deg in degrees
            )
            assert (x * y) * z == x * (y * z)
        return f"{cases} cases"

    def bimodule_compatibility():
        rng = suite.rng()
        for _ in range(cases):
            omega = algebras[rng.choice((2, 3, 4))]
            x = _random_element(rng, omega, rng.randint(1, 3))
            a = rng.choice(list(omega.vertices()))
            b = rng.choice(list(omega.vertices()))
            assert x.act_left(a).act_right(b) == x.act_right(b).act_left(a)
            assert (omega.point(a) * x) * omega.point(b) == omega.point(a) * (
                x * omega.point(b)
            )
        return f"{cases} cases"

    def dimension_counts():
        for n, omega in algebras.items():
            for degree in range(0, 5):
                assert len(omega.basis(degree)) == n * (n - 1) ** degree
        return "degrees 0..4 for 2..4 points"

    def delta_squared():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            degree = rng.randint(0, tower.max_degree - 2)
            v = _random_quotient_rep(rng, tower, degree)
            assert tower.delta(tower.delta(v)).is_zero()
        return f"{cases} cases"

    def delta_leibniz():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            n = rng.randint(0, 2)
            m = rng.randint(0, min(2 - n, tower.max_degree - 1 - n))
            v = _random_quotient_rep(rng, tower, n)
            w = _random_quotient_rep(rng, tower, m)
            lhs = tower.delta(tower.product(v, w))
            rhs = tower.product(tower.delta(v), w) + tower.product(
                v, tower.delta(w)
            ).scale((-1) ** n)
            assert lhs == rhs
        return f"{cases} cases"

    def quotient_product_associative():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            degrees = rng.choice([(1, 1, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0), (0, 2, 1)])
            if sum(degrees) > tower.max_degree:
                degrees = (1, 1, 1)
            u, v, w = (_random_quotient_rep(rng, tower, deg) for deg in degrees)
            assert tower.product(tower.product(u, v), w) == tower.product(
                u, tower.product(v, w)
            )
        return f"{cases} cases"

    def kernel_closure():
        rng = suite.rng()
        checked = 0
        while checked < cases:
            tower = rng.choice(quotient_towers)
            n = rng.randint(1, tower.max_degree - 1)
            u = _random_kernel_element(rng, tower, n)
            if u.is_zero():
                continue
            m = rng.randint(0, tower.max_degree - n)
            x = _random_element(rng, tower.omega, m)
            assert tower.project(x * u).is_zero()
            assert tower.project(u * x).is_zero()
            checked += 1
        return f"{cases} cases"

    def projection_bimodule():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            degree = rng.randint(1, tower.max_degree)
            x = _random_element(rng, tower.omega, degree, symbolic=True)
            a = rng.choice(list(tower.omega.vertices()))
            b = rng.choice(list(tower.omega.vertices()))
            assert tower.project(x.block(a, b)) == tower.project(x).block(a, b)
        return f"{cases} cases"

    def projection_factorizes():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            n = rng.randint(1, tower.max_degree - 1)
            m = rng.randint(1, tower.max_degree - n)
            alpha = _random_element(rng, tower.omega, n)
            beta = _random_element(rng, tower.omega, m)
            lhs = tower.project(alpha * beta)
            rhs = tower.product(tower.project(alpha), tower.project(beta))
            assert lhs == rhs
        return f"{cases} cases"

    def projection_commutes_with_d():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            n = rng.randint(0, tower.max_degree - 1)
            x = _random_element(rng, tower.omega, n, symbolic=True)
            assert tower.project(tower.omega.d(x)) == tower.delta(tower.project(x))
        return f"{cases} cases"

    def delta_generates_next_level():
        checked = []
        for tower in quotient_towers:
            top = 2 if tower.graph.n_points >= 4 else 3
            for n in range(1, top + 1):
                target = tower.quotient_basis(n + 1)
                generated = []
                for path in tower.quotient_basis(n):
                    image = tower.delta(M(path))
                    generated.extend(image.blocks().values())
                span = echelonize(generated, degree=n + 1)
                assert span.rank == len(target), (tower.graph, n)
                for path in target:
                    assert in_span(M(path), span), (tower.graph, n, path)
                checked.append((tower.graph.n_points, n))
        return f"{len(checked)} graph/degree pairs"

    def torsion_right_linear():
        rng = suite.rng()
        for _ in range(cases):
            omega = algebras[rng.choice((2, 3, 4))]
            conn = CompleteConnection(omega, ConnectionParams.symmetric())
            x = _random_element(rng, omega, 1, symbolic=True)
            f = _random_function(rng, omega)
            assert conn.torsion(x * f) == conn.torsion(x) * f
        return f"{cases} cases"

    def connection_leibniz():
        rng = suite.rng()
        for _ in range(cases):
            omega = algebras[rng.choice((2, 3, 4))]
            conn = CompleteConnection(omega, ConnectionParams.symmetric())
            x = _random_element(rng, omega, 1, symbolic=True)
            f = _random_function(rng, omega)
            assert conn.apply(f * x) == omega.d(f) * x + f * conn.apply(x)
            assert conn.apply(x * f) == conn.apply(x) * f - x * omega.d(f)
        return f"{cases} cases"

    def induced_leibniz():
        rng = suite.rng()
        usable = [t for t in quotient_towers]
        for _ in range(cases):
            tower = rng.choice(usable)
            induced = InducedConnection(tower, ConnectionParams.symmetric())
            x = _random_quotient_rep(rng, tower, 1)
            f = _random_function(rng, tower.omega)
            delta_f = tower.project(tower.omega.d(f))
            assert induced.apply(f * x) == delta_f * x + f * induced.apply(x)
            assert induced.apply(x * f) == induced.apply(x) * f - x * delta_f
        return f"{cases} cases"

    def induced_torsion_right_linear():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            induced = InducedConnection(tower, ConnectionParams.symmetric())
            x = _random_quotient_rep(rng, tower, 1)
            f = _random_function(rng, tower.omega)

            def torsion_of(y):
                out = Element.zero(2)
                for (i, j), coeff in y.terms.items():
                    out = out + induced.torsion_edge(i, j).scale(coeff)
                return out

            assert torsion_of(x * f) == torsion_of(x) * f
        return f"{cases} cases"

    def curvature_bilinear():
        rng = suite.rng()
        for _ in range(cases):
            tower = rng.choice(quotient_towers)
            induced = InducedConnection(tower, ConnectionParams.symmetric())
            x = _random_quotient_rep(rng, tower, 1)
            which = rng.choice((1, 2))

            def curv_of(y):
                out = Element.zero(3)
                for (i, j), coeff in y.terms.items():
                    out = out + induced.curvature_report(which, i, j).bilinear.scale(
                        coeff
                    )
                return out

            a = rng.choice(list(tower.omega.vertices()))
            b = rng.choice(list(tower.omega.vertices()))
            filtered = x.block(a, b)
            assert curv_of(filtered) == curv_of(x).block(a, b)
        return f"{cases} cases"

    suite.check("props", "props.d_squared", d_squared)
    suite.check("props", "props.d_leibniz", d_leibniz)
    suite.check("props", "props.multiplication_associative", multiplication_associative)
    suite.check("props", "props.bimodule_compatibility", bimodule_compatibility)
    suite.check("props", "props.dimension_counts", dimension_counts)
    suite.check("props", "props.delta_squared", delta_squared)
    suite.check("props", "props.delta_leibniz", delta_leibniz)
    suite.check(
        "props", "props.quotient_product_associative", quotient_product_associative
    )
    suite.check("props", "props.kernel_closure", kernel_closure)
    suite.check("props", "props.projection_bimodule", projection_bimodule)
    suite.check("props", "props.projection_factorizes", projection_factorizes)
    suite.check(
        "props", "props.projection_commutes_with_d", projection_commutes_with_d
    )
    suite.check(
        "props", "props.delta_generates_next_level", delta_generates_next_level
    )
    suite.check("props", "props.torsion_right_linear", torsion_right_linear)
    suite.check("props", "props.connection_leibniz", connection_leibniz)
    suite.check("props", "props.induced_leibniz", induced_leibniz)
    suite.check(
        "props", "props.induced_torsion_right_linear", induced_torsion_right_linear
    )
    suite.check("props", "props.curvature_bilinear", curvature_bilinear)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def run_checks(
    selection: str = "all", seed: int = 20260810, cases: int = 120
) -> list[CheckResult]:
    """Run the requested check group ('all', '1'..'6' or 'props')."""
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection {selection!r}; expected one of {SELECTIONS}")
    suite = _Suite(seed=seed, cases=cases)
    towers = _towers()
    if selection in ("all", "1"):
        _check_example1(suite, towers)
    if selection in ("all", "2"):
        _check_example2(suite, towers)
    if selection in ("all", "3"):
        _check_example3(suite, towers)
    if selection in ("all", "4"):
        _check_example4(suite, towers)
    if selection in ("all", "5"):
        _check_example5(suite, towers)
    if selection in ("all", "6"):
        _check_example6(suite, towers)
    if selection == "all":
        _check_complete(suite)
        _check_metric(suite)
    if selection in ("all", "props"):
        _check_props(suite, towers)
    return suite.results
