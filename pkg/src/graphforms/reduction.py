"""Exact row reduction of elements over their path-monomial basis.

Rows are reduced to a unique reduced echelon basis with respect to the
lexicographic order on paths: each basis row has a unit leading coefficient
on its pivot path, pivots are eliminated from every other row, and rows are
sorted by pivot.  Reduced echelon form of a span is unique, so the result
is deterministic and re-echelonizing is the identity.

Kernel computations only ever produce constant coefficients, so reduction
of a *basis* is restricted to constant rows; reducing an element *against*
a basis works for arbitrary polynomial coefficients (the basis matrix is
constant, so each power of the parameter reduces independently).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .elements import Element, Path, _raw
from .scalars import GammaPoly


class NonConstantCoefficientError(ValueError):
    """Row reduction requires coefficients free of the connection symbol."""


class Echelon:
    """A reduced echelon basis of a span of same-degree elements."""

    __slots__ = ("degree", "rows", "pivots", "_pivot_set")

    def __init__(self, degree: int, rows: Sequence[Element], pivots: Sequence[Path]):
        self.degree = degree
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        self._pivot_set = frozenset(pivots)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_pivot(self, path: Path) -> bool:
        return tuple(path) in self._pivot_set

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self) -> str:
        return f"Echelon(degree={self.degree}, rank={self.rank})"


def _as_constant_dict(row: Element) -> dict[Path, Fraction]:
    out = {}
    for path, coeff in row.terms.items():
        if not coeff.is_constant():
            raise NonConstantCoefficientError(
                f"coefficient {coeff} of {path} depends on the connection symbol"
            )
        out[path] = coeff.constant_value()
    return out


def echelonize(rows: Iterable[Element], *, degree: int | None = None) -> Echelon:
    """Reduced echelon basis of the span of constant-coefficient rows."""
    basis: list[tuple[Path, dict[Path, Fraction]]] = []
    for row in rows:
        if degree is None:
            degree = row.degree
        elif row.degree != degree:
            raise ValueError(f"degree mismatch: {row.degree} vs {degree}")
        work = _as_constant_dict(row)
        for pivot, base in basis:
            c = work.get(pivot)
            if c:
                for p, v in base.items():
                    s = work.get(p, Fraction(0)) - c * v
                    if s:
                        work[p] = s
                    else:
                        work.pop(p, None)
        if not work:
            continue
        pivot = min(work)
        inv = 1 / work[pivot]
        work = {p: v * inv for p, v in work.items()}
        for k, (bp, base) in enumerate(basis):
            c = base.get(pivot)
            if c:
                for p, v in work.items():
                    s = base.get(p, Fraction(0)) - c * v
                    if s:
                        base[p] = s
                    else:
                        base.pop(p, None)
                basis[k] = (bp, base)
        basis.append((pivot, work))
    if degree is None:
        raise ValueError("cannot echelonize an empty list without a degree")
    basis.sort(key=lambda item: item[0])
    elements = [
        _raw(degree, {p: GammaPoly.const(v) for p, v in row.items()})
        for _, row in basis
    ]
    return Echelon(degree, elements, [pivot for pivot, _ in basis])


def reduce_mod(x: Element, basis: Echelon) -> Element:
    """Canonical representative of x modulo the span: the unique element of
    x + span supported away from the pivot paths."""
    if x.degree != basis.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {basis.degree}")
    out = x
    for pivot, row in zip(basis.pivots, basis.rows):
        c = out.coefficient(pivot)
        if c:
            out = out - row.scale(c)
    return out


def in_span(x: Element, basis: Echelon) -> bool:
    """True iff a constant-coefficient element reduces to zero."""
    _as_constant_dict(x)
    return reduce_mod(x, basis).is_zero()
