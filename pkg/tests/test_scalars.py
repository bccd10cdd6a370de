import random
from fractions import Fraction

import pytest

from graphforms import GAMMA, GammaPoly
from graphforms.scalars import as_poly


def test_ring_examples():
    assert GAMMA * (2 - GAMMA) == GammaPoly((0, 2, -1))
    assert GammaPoly.ZERO + GAMMA * (2 - GAMMA) == GAMMA * (2 - GAMMA)
    assert (1 - GAMMA) * (1 + GAMMA) == GammaPoly((1, 0, -1))


def test_evaluate_examples():
    p = GAMMA * (2 - GAMMA)
    assert p(1) == 1
    assert p(0) == 0
    assert p(2) == 0
    assert p(Fraction(1, 2)) == Fraction(3, 4)


def test_normalization():
    assert GammaPoly((1, 0, 0)).coeffs == (Fraction(1),)
    assert GammaPoly((0, 0)).is_zero()
    assert GammaPoly(()).degree == -1
    assert (GAMMA - GAMMA).is_zero()
    assert GammaPoly((0, 1)).degree == 1


def test_constant_value():
    assert GammaPoly.const(Fraction(2, 3)).constant_value() == Fraction(2, 3)
    assert GammaPoly.ZERO.constant_value() == 0
    with pytest.raises(ValueError):
        GAMMA.constant_value()


def test_coercion():
    assert as_poly("2/3") == GammaPoly.const(Fraction(2, 3))
    assert as_poly(5) == GammaPoly((5,))
    assert as_poly(GAMMA) is GAMMA
    assert 2 * GAMMA == GAMMA + GAMMA


def test_str_forms():
    assert str(GammaPoly.ZERO) == "0"
    assert str(GAMMA) == "g"
    assert str(-GAMMA) == "-g"
    assert str(2 * GAMMA - GAMMA * GAMMA) == "2*g - g^2"
    assert str(GammaPoly((Fraction(-1, 2), 0, 1))) == "-1/2 + g^2"


def test_rational_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        a = Fraction(rng.randint(-40, 40) or 1, rng.randint(1, 40))
        b = Fraction(rng.randint(-40, 40) or 1, rng.randint(1, 40))
        assert (a / b) * (b / a) == 1


def test_ring_axioms_randomized():
    rng = random.Random(11)

    def poly():
        return GammaPoly(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, 4)))

    for _ in range(150):
        p, q, r = poly(), poly(), poly()
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) * r == p * r + q * r
        assert (p * q) * r == p * (q * r)
        x = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)
