"""Universal differential calculus over the functions on a finite vertex set.

The function algebra on N vertices is spanned by the vertex indicator
functions, which are orthogonal idempotents summing to one.  Its universal
differential algebra has, in each degree n, the path monomials of length
n+1 with no repeated consecutive vertex as a basis (dimension N*(N-1)^n).
The differential inserts the unit, expanded as the sum of all indicators,
into every slot of a path with alternating signs; insertions that collide
with a neighbouring vertex vanish.  The graded product is the concatenation
product from :mod:`graphforms.elements`.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .elements import Element, Path, TermAccumulator
from .scalars import ScalarLike


class UniversalAlgebra:
    """Forms on N points, with a configurable degree cap for enumeration.

    The cap only guards basis enumeration (the curvature computations live
    in degree 3; one extra degree covers the nilpotency checks).
    """

    def __init__(self, n_points: int, max_degree: int = 4):
        if n_points < 2:
            raise ValueError(
                f"need at least 2 points, got {n_points}: "
                "a single point has no nonzero forms"
            )
        if max_degree < 1:
            raise ValueError(f"max_degree must be >= 1, got {max_degree}")
        self.n_points = n_points
        self.max_degree = max_degree

    # -- bases ---------------------------------------------------------------

    def vertices(self) -> range:
        return range(1, self.n_points + 1)

    def basis(self, degree: int) -> list[Path]:
        """All degree-n path monomials in lexicographic order."""
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        if degree > self.max_degree:
            raise ValueError(
                f"degree {degree} exceeds the cap {self.max_degree}"
            )
        paths = []
        for path in product(self.vertices(), repeat=degree + 1):
            if all(path[k] != path[k + 1] for k in range(degree)):
                paths.append(path)
        return paths

    def dim(self, degree: int) -> int:
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        return self.n_points * (self.n_points - 1) ** degree

    # -- element constructors --------------------------------------------------

    def point(self, i: int) -> Element:
        """Indicator function of one vertex as a degree-0 element."""
        self._check_vertex(i)
        return Element.monomial((i,))

    def edge(self, i: int, j: int) -> Element:
        """The degree-1 basis monomial for the arrow i -> j."""
        self._check_vertex(i)
        self._check_vertex(j)
        return Element.monomial((i, j))

    def one(self) -> Element:
        """The unit function: sum of all vertex indicators."""
        return Element(0, {(i,): 1 for i in self.vertices()})

    def function(self, values: dict[int, ScalarLike]) -> Element:
        """The function taking the given value at each listed vertex."""
        for i in values:
            self._check_vertex(i)
        return Element(0, {(i,): v for i, v in values.items()})

    # -- the differential -------------------------------------------------------

    def d(self, x: Element) -> Element:
        """Universal differential: signed unit insertion into every slot."""
        if x.max_vertex() > self.n_points:
            raise ValueError(
                f"element mentions vertex {x.max_vertex()} > {self.n_points}"
            )
        acc = TermAccumulator(x.degree + 1)
        for path, coeff in x.terms.items():
            for slot in range(len(path) + 1):
                signed = -coeff if slot % 2 else coeff
                for k in self.vertices():
                    acc.add(path[:slot] + (k,) + path[slot:], signed)
        return acc.element()

    def d_path(self, path: Iterable[int]) -> Element:
        return self.d(Element.monomial(path))

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n_points:
            raise ValueError(f"vertex {i} out of range 1..{self.n_points}")
