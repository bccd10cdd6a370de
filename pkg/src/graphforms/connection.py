"""Linear connections, torsion and curvature on complete graphs, and the
induced connections on arbitrary subgraphs.

On the complete symmetric graph a linear connection sends each arrow form
to a degree-2 element; the two Leibniz laws force all structure
coefficients except the middle-insertion ones, which remain free.  The
engine stores the free data as the *shifted* coefficient (one plus the raw
structure constant), written ``g`` in the symmetric one-parameter family.

Two extensions of the connection raise the degree by one; composing either
with the connection itself gives a raw curvature, computed here both from
the closed-form coefficient tables and by direct composition (the two must
agree identically as polynomials).  Raw curvatures are not right-linear
over the function algebra unless the torsion vanishes; projecting onto the
block of paths that start and end at the arrow's endpoints (the
"bilinearization") restores bilinearity.

Subgraph connections are obtained by compressing the complete-graph
connection with the quotient projections of a calculus tower; torsion and
the two curvatures follow the same pattern one level up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .calculus import CalculusTower, Digraph
from .elements import Element, TermAccumulator
from .scalars import GammaPoly, ScalarLike, as_poly
from .universal import UniversalAlgebra


class EdgeNotInGraphError(ValueError):
    """A subgraph operation was asked for an arrow the graph lacks."""


class DegenerateMetricError(ValueError):
    """The metric scale must be nonzero."""


class ConnectionParams:
    """Free part of a linear connection on the complete graph.

    For every arrow (i, j) and middle vertex a distinct from both, the
    stored value is the shifted coefficient 1 + (structure constant of the
    middle insertion).  The symmetric mode uses a single polynomial for all
    triples, which is the permutation-invariant one-parameter family; the
    general mode takes an explicit table (missing entries default to zero,
    i.e. the torsion-free choice on that triple).
    """

    __slots__ = ("_table", "_symmetric")

    def __init__(
        self,
        table: Mapping[tuple[int, int, int], ScalarLike] | None,
        symmetric: GammaPoly | None,
    ):
        self._symmetric = symmetric
        self._table = (
            None
            if table is None
            else {key: as_poly(value) for key, value in table.items()}
        )

    @classmethod
    def symmetric(cls, gamma: ScalarLike = GammaPoly.GAMMA) -> "ConnectionParams":
        return cls(None, as_poly(gamma))

    @classmethod
    def general(
        cls, table: Mapping[tuple[int, int, int], ScalarLike]
    ) -> "ConnectionParams":
        for i, j, a in table:
            if i == j or a == i or a == j:
                raise ValueError(f"invalid coefficient triple ({i}, {j}, {a})")
        return cls(table, None)

    @property
    def is_symmetric(self) -> bool:
        return self._symmetric is not None

    @property
    def gamma(self) -> GammaPoly:
        if self._symmetric is None:
            raise ValueError("general-mode parameters have no single value")
        return self._symmetric

    def coeff(self, i: int, j: int, a: int) -> GammaPoly:
        """The shifted free coefficient for arrow (i, j) with middle a."""
        if i == j or a == i or a == j:
            raise ValueError(f"invalid coefficient triple ({i}, {j}, {a})")
        if self._symmetric is not None:
            return self._symmetric
        return self._table.get((i, j, a), GammaPoly.ZERO)

    def raw(self, i: int, j: int, a: int) -> GammaPoly:
        """The unshifted structure constant for the middle insertion."""
        return self.coeff(i, j, a) - GammaPoly.ONE


@dataclass(frozen=True)
class Metric:
    """Arrow pairing with a single nonzero rational scale."""

    mu: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.mu == 0:
            raise DegenerateMetricError("metric scale must be nonzero")


@dataclass(frozen=True)
class CurvatureReport:
    """Raw curvature of one arrow and its block split."""

    edge: tuple[int, int]
    raw: Element
    bilinear: Element
    dropped: Element


def bilinearize(x: Element, i: int, j: int) -> tuple[Element, Element]:
    """Split off the component supported on paths from i to j."""
    kept = x.block(i, j)
    return kept, x - kept


class CompleteConnection:
    """A linear connection on the complete symmetric graph of N points."""

    def __init__(self, omega: UniversalAlgebra, params: ConnectionParams):
        self.omega = omega
        self.params = params

    # -- the connection and its torsion ----------------------------------------

    def on_edge(self, i: int, j: int) -> Element:
        """Image of one arrow: differential expansion plus the free middle
        insertions."""
        if i == j:
            raise IndexError(f"arrow endpoints must differ, got ({i}, {j})")
        omega = self.omega
        acc = TermAccumulator(2)
        acc.add_element(omega.d_path((i, j)))
        for a in omega.vertices():
            if a != i and a != j:
                acc.add((i, a, j), self.params.coeff(i, j, a))
        return acc.element()

    def apply(self, x: Element) -> Element:
        """Linear extension over arrow monomials."""
        if x.degree != 1:
            raise ValueError(f"expected a degree-1 element, got degree {x.degree}")
        acc = TermAccumulator(2)
        for (i, j), coeff in x.terms.items():
            acc.add_element(self.on_edge(i, j), coeff)
        return acc.element()

    def torsion_edge(self, i: int, j: int) -> Element:
        if i == j:
            raise IndexError(f"arrow endpoints must differ, got ({i}, {j})")
        acc = TermAccumulator(2)
        for a in self.omega.vertices():
            if a != i and a != j:
                acc.add((i, a, j), -self.params.coeff(i, j, a))
        return acc.element()

    def torsion(self, x: Element) -> Element:
        if x.degree != 1:
            raise ValueError(f"expected a degree-1 element, got degree {x.degree}")
        acc = TermAccumulator(2)
        for (i, j), coeff in x.terms.items():
            acc.add_element(self.torsion_edge(i, j), coeff)
        return acc.element()

    # -- degree-raising extensions -----------------------------------------------

    def extend_first(self, x: Element) -> Element:
        """First extension on degree-2 elements: differentiate the leading
        arrow, minus the trailing arrow's connection image."""
        if x.degree != 2:
            raise ValueError(f"expected a degree-2 element, got degree {x.degree}")
        omega = self.omega
        acc = TermAccumulator(3)
        for (a, b, c), coeff in x.terms.items():
            piece = omega.d_path((a, b)) * omega.edge(b, c)
            piece = piece - omega.edge(a, b) * self.on_edge(b, c)
            acc.add_element(piece, coeff)
        return acc.element()

    def extend_second(self, x: Element) -> Element:
        """Second extension: connection image of the leading arrow, minus the
        trailing arrow's."""
        if x.degree != 2:
            raise ValueError(f"expected a degree-2 element, got degree {x.degree}")
        omega = self.omega
        acc = TermAccumulator(3)
        for (a, b, c), coeff in x.terms.items():
            piece = self.on_edge(a, b) * omega.edge(b, c)
            piece = piece - omega.edge(a, b) * self.on_edge(b, c)
            acc.add_element(piece, coeff)
        return acc.element()

    # -- curvature ------------------------------------------------------------------

    def curvature_composed(self, which: int, i: int, j: int) -> Element:
        """Raw curvature by direct composition through the extensions."""
        base = self.on_edge(i, j)
        if which == 1:
            return self.extend_first(base)
        if which == 2:
            return self.extend_second(base)
        raise ValueError(f"which must be 1 or 2, got {which}")

    def curvature_closed(self, which: int, i: int, j: int) -> Element:
        """Raw curvature from the closed-form coefficient tables."""
        if i == j:
            raise IndexError(f"arrow endpoints must differ, got ({i}, {j})")
        if which not in (1, 2):
            raise ValueError(f"which must be 1 or 2, got {which}")
        coeff = self.params.coeff
        raw = self.params.raw
        vertices = self.omega.vertices()
        acc = TermAccumulator(3)
        others = [v for v in vertices if v != i and v != j]
        if which == 1:
            for l in others:
                acc.add((i, j, l, j), -coeff(i, j, l))
                acc.add((i, l, i, j), 1 - raw(i, j, l) * raw(l, j, i))
            for l in others:
                for m in others:
                    if l != m:
                        acc.add(
                            (i, l, m, j),
                            -(raw(i, j, m) + raw(i, j, l) * raw(l, j, m)),
                        )
            for l in vertices:
                if l == j:
                    continue
                for m in vertices:
                    if m != j and m != l:
                        acc.add((i, j, l, m), -coeff(j, m, l))
            for l in others:
                for m in vertices:
                    if m != j:
                        acc.add((i, l, j, m), -coeff(i, j, l))
        else:
            for l in others:
                acc.add((i, j, l, j), -(1 - raw(i, j, l) * raw(i, l, j)))
                acc.add((i, l, i, j), 1 - raw(i, j, l) * raw(l, j, i))
            for l in others:
                for m in others:
                    if l != m:
                        acc.add(
                            (i, l, m, j),
                            raw(i, j, m) * raw(i, m, l) - raw(i, j, l) * raw(l, j, m),
                        )
            for l in vertices:
                if l == j:
                    continue
                for m in vertices:
                    if m != j and m != l:
                        acc.add((i, j, l, m), -coeff(j, m, l))
            for l in vertices:
                if l == i:
                    continue
                for m in vertices:
                    if m != i and m != l:
                        acc.add((l, m, i, j), coeff(l, i, m))
        return acc.element()

    def curvature_report(self, which: int, i: int, j: int) -> CurvatureReport:
        """Closed-form raw curvature, cross-checked against composition."""
        closed = self.curvature_closed(which, i, j)
        composed = self.curvature_composed(which, i, j)
        if closed != composed:
            raise ArithmeticError(
                f"curvature cross-check failed for arrow ({i}, {j}), "
                f"variant {which}: closed form and composition disagree"
            )
        kept, dropped = bilinearize(closed, i, j)
        return CurvatureReport((i, j), closed, kept, dropped)

    # -- metric compatibility ----------------------------------------------------------

    def pair(self, metric: Metric, x: Element) -> Element:
        """Arrow pairing on degree-2 elements: a path contributes its start
        indicator when it returns to it."""
        if x.degree != 2:
            raise ValueError(f"expected a degree-2 element, got degree {x.degree}")
        acc = TermAccumulator(0)
        for (p, q, r), coeff in x.terms.items():
            if p == r:
                acc.add((p,), coeff * metric.mu)
        return acc.element()

    def pair_tail(self, metric: Metric, x: Element) -> Element:
        """Apply the pairing to the trailing two arrows of a degree-3 element."""
        if x.degree != 3:
            raise ValueError(f"expected a degree-3 element, got degree {x.degree}")
        acc = TermAccumulator(1)
        for (p, q, r, s), coeff in x.terms.items():
            if q == s:
                acc.add((p, q), coeff * metric.mu)
        return acc.element()

    def metric_discrepancy(self, metric: Metric, i: int, j: int) -> Element:
        """Defect of the compatibility law on the round trip through (i, j)."""
        if i == j:
            raise IndexError(f"arrow endpoints must differ, got ({i}, {j})")
        round_trip = Element.monomial((i, j, i))
        lhs = self.omega.d(self.pair(metric, round_trip))
        rhs = self.pair_tail(metric, self.extend_second(round_trip))
        return lhs - rhs

    def metric_report(self, metric: Metric) -> dict[tuple[int, int], Element]:
        """Discrepancy per ordered vertex pair; all-zero means compatible."""
        out: dict[tuple[int, int], Element] = {}
        for i in self.omega.vertices():
            for j in self.omega.vertices():
                if i != j:
                    out[(i, j)] = self.metric_discrepancy(metric, i, j)
        return out


class InducedConnection:
    """The connection a subgraph inherits from the complete graph, obtained
    by compressing with the quotient projections of its calculus tower."""

    def __init__(self, tower: CalculusTower, params: ConnectionParams):
        if tower.max_degree < 2:
            raise ValueError("the tower must be built to degree 2 at least")
        self.tower = tower
        self.params = params
        self.ambient = CompleteConnection(tower.omega, params)

    @property
    def graph(self) -> Digraph:
        return self.tower.graph

    # -- the induced connection ---------------------------------------------------

    def on_edge(self, i: int, j: int) -> Element:
        """Arrow image with both tensor legs compressed to graph arrows."""
        if not self.graph.has_edge(i, j):
            raise EdgeNotInGraphError(f"({i}, {j}) is not an arrow of the graph")
        return self._edge_steps_only(self.ambient.on_edge(i, j))

    def apply(self, x: Element) -> Element:
        """Linear extension over the graph's arrows; non-arrow components
        of the input represent zero classes and are discarded."""
        if x.degree != 1:
            raise ValueError(f"expected a degree-1 element, got degree {x.degree}")
        acc = TermAccumulator(2)
        for (i, j), coeff in x.terms.items():
            if self.graph.has_edge(i, j):
                acc.add_element(self.on_edge(i, j), coeff)
        return acc.element()

    def _edge_steps_only(self, x: Element) -> Element:
        """Keep the paths all of whose consecutive steps are graph arrows."""
        acc = TermAccumulator(x.degree)
        for path, coeff in x.terms.items():
            if all(
                self.graph.has_edge(path[k], path[k + 1])
                for k in range(len(path) - 1)
            ):
                acc.add(path, coeff)
        return acc.element()

    # -- torsion and curvature ---------------------------------------------------------

    def torsion_edge(self, i: int, j: int) -> Element:
        """Quotient torsion: quotient differential minus the projected
        product of the two connection legs."""
        if not self.graph.has_edge(i, j):
            raise EdgeNotInGraphError(f"({i}, {j}) is not an arrow of the graph")
        edge = Element.monomial((i, j))
        return self.tower.delta(edge) - self.tower.project(self.on_edge(i, j))

    def compress_head(self, x: Element) -> Element:
        """Project the leading two steps of a degree-3 element to the
        degree-2 quotient, keeping the trailing arrow."""
        if x.degree != 3:
            raise ValueError(f"expected a degree-3 element, got degree {x.degree}")
        acc = TermAccumulator(3)
        for (p, q, r, s), coeff in x.terms.items():
            head = self.tower.project(Element.monomial((p, q, r)))
            acc.add_element(head * Element.monomial((r, s)), coeff)
        return acc.element()

    def extend_first(self, x: Element) -> Element:
        """First extension on compressed degree-2 elements."""
        if x.degree != 2:
            raise ValueError(f"expected a degree-2 element, got degree {x.degree}")
        acc = TermAccumulator(3)
        for (a, b, c), coeff in x.terms.items():
            edge_ab = Element.monomial((a, b))
            edge_bc = Element.monomial((b, c))
            piece = self.tower.delta(edge_ab) * edge_bc
            piece = piece - self.compress_head(edge_ab * self.on_edge(b, c))
            acc.add_element(piece, coeff)
        return acc.element()

    def extend_second(self, x: Element) -> Element:
        """Second extension on compressed degree-2 elements."""
        if x.degree != 2:
            raise ValueError(f"expected a degree-2 element, got degree {x.degree}")
        acc = TermAccumulator(3)
        for (a, b, c), coeff in x.terms.items():
            edge_ab = Element.monomial((a, b))
            edge_bc = Element.monomial((b, c))
            piece = self.on_edge(a, b) * edge_bc
            piece = piece - edge_ab * self.on_edge(b, c)
            acc.add_element(piece, coeff)
        return acc.element()

    def curvature_report(self, which: int, i: int, j: int) -> CurvatureReport:
        """Raw curvature of one arrow (the second variant is pushed through
        the head compression) plus its block split."""
        base = self.on_edge(i, j)
        if which == 1:
            raw = self.extend_first(base)
        elif which == 2:
            raw = self.compress_head(self.extend_second(base))
        else:
            raise ValueError(f"which must be 1 or 2, got {which}")
        kept, dropped = bilinearize(raw, i, j)
        return CurvatureReport((i, j), raw, kept, dropped)
