"""Exact scalar arithmetic for the engine: rationals and polynomials in the
connection parameter.

Every coefficient in the engine lives in Q[g], the ring of univariate
polynomials in the formal connection parameter g with exact rational
coefficients.  A polynomial is stored as a tuple of ``Fraction`` values in
ascending powers with no trailing zeros; the zero polynomial is the empty
tuple.  No floating point enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

ScalarLike = Union["GammaPoly", Fraction, int, str]


class GammaPoly:
    """Univariate polynomial in the connection symbol over exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, value: ScalarLike) -> "GammaPoly":
        return cls((Fraction(value),))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        """The value of a degree <= 0 polynomial as a Fraction."""
        if len(self.coeffs) > 1:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GammaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == GammaPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "GammaPoly":
        return GammaPoly(-c for c in self.coeffs)

    def __add__(self, other: ScalarLike) -> "GammaPoly":
        other = as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return GammaPoly(
            self.coefficient(k) + other.coefficient(k) for k in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GammaPoly":
        return self + (-as_poly(other))

    def __rsub__(self, other: ScalarLike) -> "GammaPoly":
        return as_poly(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "GammaPoly":
        other = as_poly(other)
        if not self.coeffs or not other.coeffs:
            return GammaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return GammaPoly(out)

    __rmul__ = __mul__

    def __call__(self, value: ScalarLike) -> Fraction:
        """Evaluate at a concrete parameter value (Horner scheme, exact)."""
        x = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(c)
            else:
                sym = "g" if k == 1 else f"g^{k}"
                if c == 1:
                    body = sym
                elif c == -1:
                    body = "-" + sym
                else:
                    body = f"{c}*{sym}"
            parts.append(body)
        text = parts[0]
        for body in parts[1:]:
            if body.startswith("-"):
                text += " - " + body[1:]
            else:
                text += " + " + body
        return text

    def __repr__(self) -> str:
        return f"GammaPoly({list(self.coeffs)!r})"


GammaPoly.ZERO = GammaPoly()
GammaPoly.ONE = GammaPoly((1,))
GammaPoly.GAMMA = GammaPoly((0, 1))

GAMMA = GammaPoly.GAMMA


def as_poly(value: ScalarLike) -> GammaPoly:
    """Coerce an int, Fraction or 'p/q' string into a constant polynomial."""
    if isinstance(value, GammaPoly):
        return value
    return GammaPoly.const(Fraction(value))
