import random

import pytest

from graphforms import Element, GammaPoly, UniversalAlgebra

M = Element.monomial


def test_basis_counts():
    assert len(UniversalAlgebra(3).basis(1)) == 6
    assert UniversalAlgebra(2).basis(0) == [(1,), (2,)]
    assert len(UniversalAlgebra(4).basis(2)) == 36
    omega = UniversalAlgebra(3)
    for n in range(0, 4):
        assert len(omega.basis(n)) == omega.dim(n) == 3 * 2**n


def test_basis_is_lexicographic():
    omega = UniversalAlgebra(3)
    basis = omega.basis(2)
    assert basis == sorted(basis)
    assert basis[0] == (1, 2, 1)


def test_single_point_rejected():
    with pytest.raises(ValueError):
        UniversalAlgebra(1)


def test_degree_cap():
    omega = UniversalAlgebra(3, max_degree=2)
    omega.basis(2)
    with pytest.raises(ValueError):
        omega.basis(3)


def test_differential_examples():
    omega = UniversalAlgebra(3)
    assert omega.d_path((1, 2)) == Element(
        2, {(3, 1, 2): 1, (1, 3, 2): -1, (1, 2, 3): 1, (1, 2, 1): 1, (2, 1, 2): 1}
    )
    assert omega.d(omega.one()).is_zero()
    # the differential of an indicator is the signed sum of its stars
    assert omega.d(omega.point(1)) == Element(
        1, {(2, 1): 1, (3, 1): 1, (1, 2): -1, (1, 3): -1}
    )
    # sum of all indicator differentials vanishes
    total = Element.zero(1)
    for i in omega.vertices():
        total = total + omega.d(omega.point(i))
    assert total.is_zero()


def test_multiplication_examples():
    omega = UniversalAlgebra(3)
    assert M((1, 2)) * M((2, 3)) == M((1, 2, 3))
    assert (M((1, 2)) * M((1, 3))).is_zero()
    # picking a block of a differential via both-sided action
    d12 = omega.d_path((1, 2))
    assert omega.point(1) * d12 * omega.point(2) == Element(
        2, {(1, 3, 2): -1}
    )


def test_d_squared_is_zero():
    for n_points in (2, 3, 4):
        omega = UniversalAlgebra(n_points)
        for degree in range(0, 4):
            for path in omega.basis(degree):
                assert omega.d(omega.d_path(path)).is_zero()


def test_graded_leibniz_randomized():
    rng = random.Random(29)
    algebras = {n: UniversalAlgebra(n) for n in (2, 3, 4)}
    for _ in range(150):
        omega = algebras[rng.choice((2, 3, 4))]
        n = rng.randint(0, 2)
        m = rng.randint(0, 2 - n)
        x = _random_element(rng, omega, n)
        y = _random_element(rng, omega, m)
        assert omega.d(x * y) == omega.d(x) * y + (x * omega.d(y)).scale((-1) ** n)


def test_associativity_randomized():
    rng = random.Random(31)
    omega = UniversalAlgebra(4)
    for _ in range(150):
        degrees = rng.choice([(1, 1, 1), (0, 1, 2), (2, 1, 0), (1, 2, 1)])
        x, y, z = (_random_element(rng, omega, d) for d in degrees)
        assert (x * y) * z == x * (y * z)


def test_bimodule_compatibility_randomized():
    rng = random.Random(37)
    omega = UniversalAlgebra(3)
    for _ in range(150):
        x = _random_element(rng, omega, rng.randint(1, 3))
        a, b = rng.choice(list(omega.vertices())), rng.choice(list(omega.vertices()))
        assert (omega.point(a) * x) * omega.point(b) == omega.point(a) * (
            x * omega.point(b)
        )


def _random_element(rng, omega, degree):
    paths = omega.basis(degree)
    picks = rng.sample(paths, rng.randint(1, min(4, len(paths))))
    return Element(
        degree,
        {p: GammaPoly((rng.randint(-3, 3), rng.randint(-1, 1))) for p in picks},
    )
