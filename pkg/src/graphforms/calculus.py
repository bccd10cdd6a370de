"""Differential calculus of a directed graph as a quotient of the universal
calculus.

A digraph selects a sub-bimodule of the degree-1 forms (the arrows).  In
degree 1 the kernel of the quotient map is spanned by the missing arrows;
in each higher degree it is the bimodule generated by the differential of
the previous kernel, i.e. the span of all two-sided vertex truncations of
those differentials.  Since every generator starts and ends at a fixed
vertex pair, echelonizing them never mixes (start, end) blocks, so the
complement spanned by the non-pivot path monomials is itself a bimodule
and the induced splitting respects both module actions.

Quotient classes are always handled through their canonical representatives:
the unique member supported away from the kernel pivots, produced by
:func:`graphforms.reduction.reduce_mod`.
"""

from __future__ import annotations

import warnings
from typing import Iterable

from .elements import Element, Path
from .reduction import Echelon, echelonize, reduce_mod
from .universal import UniversalAlgebra


class Digraph:
    """A loop-free directed graph on vertices 1..N."""

    __slots__ = ("n_points", "edges")

    def __init__(self, n_points: int, edges: Iterable[tuple[int, int]]):
        if n_points < 2:
            raise ValueError(f"need at least 2 vertices, got {n_points}")
        edge_set = set()
        for edge in edges:
            i, j = edge
            if i == j:
                raise ValueError(f"loop edge ({i}, {j}) is not allowed")
            if not (1 <= i <= n_points and 1 <= j <= n_points):
                raise ValueError(f"edge ({i}, {j}) out of range 1..{n_points}")
            edge_set.add((i, j))
        self.n_points = n_points
        self.edges = frozenset(edge_set)
        if edge_set and not self._connected():
            warnings.warn(
                f"digraph on {n_points} vertices is not connected "
                "(as an undirected graph)",
                stacklevel=2,
            )

    @classmethod
    def complete(cls, n_points: int) -> "Digraph":
        return cls(
            n_points,
            [
                (i, j)
                for i in range(1, n_points + 1)
                for j in range(1, n_points + 1)
                if i != j
            ],
        )

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.n_points * (self.n_points - 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def _connected(self) -> bool:
        touched = {v for e in self.edges for v in e}
        if touched != set(range(1, self.n_points + 1)):
            return False
        adjacency: dict[int, set[int]] = {v: set() for v in touched}
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        seen = {min(touched)}
        frontier = [min(touched)]
        while frontier:
            for w in adjacency[frontier.pop()]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return seen == touched

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n_points == other.n_points and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Digraph({self.n_points}, {self.sorted_edges()!r})"


class _Level:
    __slots__ = ("kernel", "quotient_paths")

    def __init__(self, kernel: Echelon, quotient_paths: tuple[Path, ...]):
        self.kernel = kernel
        self.quotient_paths = quotient_paths


class CalculusTower:
    """Per-degree kernels, quotient bases and quotient calculus of a digraph."""

    def __init__(
        self,
        graph: Digraph,
        max_degree: int = 4,
        omega: UniversalAlgebra | None = None,
    ):
        if max_degree < 1:
            raise ValueError(f"max_degree must be >= 1, got {max_degree}")
        if not graph.edges:
            raise ValueError("digraph has no edges: the calculus is zero")
        if omega is None:
            omega = UniversalAlgebra(graph.n_points, max_degree)
        elif omega.n_points != graph.n_points:
            raise ValueError("vertex count mismatch between graph and algebra")
        elif omega.max_degree < max_degree:
            raise ValueError("ambient algebra degree cap is too small")
        self.graph = graph
        self.omega = omega
        self.max_degree = max_degree
        self._levels: dict[int, _Level] = {}
        self._build()

    def _build(self) -> None:
        omega = self.omega
        missing = [
            Element.monomial(path)
            for path in omega.basis(1)
            if path not in self.graph.edges
        ]
        kernel = echelonize(missing, degree=1)
        self._levels[1] = _Level(kernel, self._complement(1, kernel))
        for n in range(2, self.max_degree + 1):
            generators = []
            for row in self._levels[n - 1].kernel.rows:
                image = omega.d(row)
                for piece in image.blocks().values():
                    generators.append(piece)
            kernel = echelonize(generators, degree=n)
            self._levels[n] = _Level(kernel, self._complement(n, kernel))

    def _complement(self, degree: int, kernel: Echelon) -> tuple[Path, ...]:
        return tuple(
            path for path in self.omega.basis(degree) if not kernel.is_pivot(path)
        )

    # -- structure queries -----------------------------------------------------

    def kernel(self, degree: int) -> Echelon:
        self._check_degree(degree)
        return self._levels[degree].kernel

    def quotient_basis(self, degree: int) -> tuple[Path, ...]:
        """Paths spanning the chosen complement: the quotient representatives."""
        self._check_degree(degree)
        return self._levels[degree].quotient_paths

    def dim_quotient(self, degree: int) -> int:
        if degree == 0:
            return self.graph.n_points
        return len(self.quotient_basis(degree))

    def dims(self) -> list[dict[str, int]]:
        """Per-degree dimension table for degrees 1..max_degree."""
        table = []
        for n in range(1, self.max_degree + 1):
            table.append(
                {
                    "degree": n,
                    "dim_omega": self.omega.dim(n),
                    "dim_kernel": self.kernel(n).rank,
                    "dim_quotient": self.dim_quotient(n),
                }
            )
        return table

    # -- quotient calculus -------------------------------------------------------

    def project(self, x: Element) -> Element:
        """Canonical quotient representative: reduce modulo the kernel.

        Polynomial coefficients are handled layer by layer automatically,
        because the kernel basis has constant coefficients.
        """
        if x.degree == 0:
            return x
        self._check_degree(x.degree)
        return reduce_mod(x, self.kernel(x.degree))

    def delta(self, x: Element) -> Element:
        """Quotient differential: differentiate a representative, project."""
        return self.project(self.omega.d(self.project(x)))

    def product(self, x: Element, y: Element) -> Element:
        """Quotient product of two representatives (associative and
        independent of the representatives chosen)."""
        return self.project(x * y)

    def _check_degree(self, degree: int) -> None:
        if not 1 <= degree <= self.max_degree:
            raise ValueError(
                f"degree {degree} outside the built range 1..{self.max_degree}"
            )
