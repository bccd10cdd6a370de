"""Sparse homogeneous elements over path-monomial bases.

A degree-n element is a finite linear combination of vertex paths: the path
(i1, ..., i_{n+1}) stands for the basis form obtained from the indicator
function of i1 followed by n differentials.  A path with a repeated
consecutive vertex denotes the zero form; explicit constructors reject such
paths, while the term accumulators used by the algebra operations silently
drop them, which is exactly the vanishing convention.

The concatenation product implements the graded multiplication of forms:
two paths compose iff the last vertex of the first equals the first vertex
of the second, in which case they merge at the junction.  Degree-0 elements
act as the function algebra, so left/right module actions are plain
products with degree-0 monomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalars import GammaPoly, ScalarLike, as_poly

Path = tuple[int, ...]


def is_valid_path(path: Path) -> bool:
    """True for a nonempty 1-based path with no repeated consecutive vertex."""
    if len(path) < 1:
        return False
    prev = 0
    for v in path:
        if not isinstance(v, int) or v < 1 or v == prev:
            return False
        prev = v
    return True


def path_label(path: Path) -> str:
    """Render a path as e_121 style (dot-separated above 9 vertices)."""
    if all(v <= 9 for v in path):
        return "e_" + "".join(str(v) for v in path)
    return "e_" + ".".join(str(v) for v in path)


class Element:
    """Degree-homogeneous sparse linear combination of path monomials."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Path, ScalarLike] | None = None):
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        clean: dict[Path, GammaPoly] = {}
        for path, coeff in (terms or {}).items():
            path = tuple(path)
            if len(path) != degree + 1:
                raise ValueError(f"path {path} has wrong length for degree {degree}")
            if not is_valid_path(path):
                raise ValueError(f"invalid path {path}")
            poly = as_poly(coeff)
            if poly:
                clean[path] = poly
        self.degree = degree
        self.terms = clean

    @classmethod
    def zero(cls, degree: int) -> "Element":
        return cls(degree)

    @classmethod
    def monomial(cls, path: Iterable[int], coeff: ScalarLike = 1) -> "Element":
        path = tuple(path)
        return cls(len(path) - 1, {path: coeff})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, path: Iterable[int]) -> GammaPoly:
        return self.terms.get(tuple(path), GammaPoly.ZERO)

    def support(self) -> list[Path]:
        return sorted(self.terms)

    def items(self) -> list[tuple[Path, GammaPoly]]:
        """Terms in lexicographic path order."""
        return sorted(self.terms.items())

    def max_vertex(self) -> int:
        return max((max(p) for p in self.terms), default=0)

    def has_constant_coefficients(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        acc = dict(self.terms)
        for path, coeff in other.terms.items():
            s = acc.get(path, GammaPoly.ZERO) + coeff
            if s:
                acc[path] = s
            else:
                acc.pop(path, None)
        return _raw(self.degree, acc)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return _raw(self.degree, {p: -c for p, c in self.terms.items()})

    def scale(self, coeff: ScalarLike) -> "Element":
        poly = as_poly(coeff)
        if not poly:
            return Element.zero(self.degree)
        return _raw(self.degree, {p: c * poly for p, c in self.terms.items()})

    def subs_gamma(self, value: ScalarLike) -> "Element":
        """Specialize the connection parameter to a concrete rational."""
        x = Fraction(value)
        acc: dict[Path, GammaPoly] = {}
        for path, coeff in self.terms.items():
            v = coeff(x)
            if v:
                acc[path] = GammaPoly.const(v)
        return _raw(self.degree, acc)

    # -- multiplicative structure -------------------------------------------

    def __mul__(self, other: "Element") -> "Element":
        """Concatenation product: paths merge when the endpoints match."""
        if not isinstance(other, Element):
            return NotImplemented
        acc: dict[Path, GammaPoly] = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                if p[-1] != q[0]:
                    continue
                merged = p + q[1:]
                c = cp * cq
                s = acc.get(merged, GammaPoly.ZERO) + c
                if s:
                    acc[merged] = s
                else:
                    acc.pop(merged, None)
        return _raw(self.degree + other.degree, acc)

    def act_left(self, vertex: int) -> "Element":
        """Left action of the indicator function of a vertex."""
        return _raw(
            self.degree, {p: c for p, c in self.terms.items() if p[0] == vertex}
        )

    def act_right(self, vertex: int) -> "Element":
        """Right action of the indicator function of a vertex."""
        return _raw(
            self.degree, {p: c for p, c in self.terms.items() if p[-1] == vertex}
        )

    def block(self, first: int, last: int) -> "Element":
        """The component supported on paths from ``first`` to ``last``."""
        return _raw(
            self.degree,
            {p: c for p, c in self.terms.items() if p[0] == first and p[-1] == last},
        )

    def blocks(self) -> dict[tuple[int, int], "Element"]:
        """Decomposition by (start, end) vertex pair; zero blocks omitted."""
        out: dict[tuple[int, int], dict[Path, GammaPoly]] = {}
        for p, c in self.terms.items():
            out.setdefault((p[0], p[-1]), {})[p] = c
        return {key: _raw(self.degree, acc) for key, acc in sorted(out.items())}

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered = []
        for path, coeff in self.items():
            sign, body = _term_text(path, coeff)
            rendered.append((sign, body))
        sign, body = rendered[0]
        text = ("-" if sign < 0 else "") + body
        for sign, body in rendered[1:]:
            text += (" - " if sign < 0 else " + ") + body
        return text

    def __repr__(self) -> str:
        return f"Element(degree={self.degree}, {dict(self.items())!r})"


def _term_text(path: Path, coeff: GammaPoly) -> tuple[int, str]:
    """(sign, body) for one rendered term; multi-term coefficients keep
    their own signs inside parentheses."""
    label = path_label(path)
    nonzero = [c for c in coeff.coeffs if c]
    if len(nonzero) == 1:
        power = max(k for k, c in enumerate(coeff.coeffs) if c)
        c = nonzero[0]
        sign = -1 if c < 0 else 1
        mag = abs(c)
        if power == 0:
            prefix = "" if mag == 1 else f"{mag}*"
        else:
            sym = "g" if power == 1 else f"g^{power}"
            prefix = f"{sym}*" if mag == 1 else f"{mag}*{sym}*"
        return sign, prefix + label
    return 1, f"({coeff})*{label}"


def _raw(degree: int, terms: dict[Path, GammaPoly]) -> Element:
    """Internal constructor for terms already known to be canonical."""
    el = Element.__new__(Element)
    el.degree = degree
    el.terms = terms
    return el


class TermAccumulator:
    """Collects (path, coefficient) contributions with the zero-path
    convention: paths with a repeated consecutive vertex are dropped."""

    __slots__ = ("degree", "_acc")

    def __init__(self, degree: int):
        self.degree = degree
        self._acc: dict[Path, GammaPoly] = {}

    def add(self, path: Path, coeff: ScalarLike) -> None:
        if not is_valid_path(path):
            return
        if len(path) != self.degree + 1:
            raise ValueError(f"path {path} has wrong length for degree {self.degree}")
        poly = as_poly(coeff)
        s = self._acc.get(path, GammaPoly.ZERO) + poly
        if s:
            self._acc[path] = s
        else:
            self._acc.pop(path, None)

    def add_element(self, element: Element, scale: ScalarLike = 1) -> None:
        poly = as_poly(scale)
        if not poly:
            return
        for path, coeff in element.terms.items():
            self.add(path, coeff * poly)

    def element(self) -> Element:
        out = _raw(self.degree, self._acc)
        self._acc = {}
        return out
