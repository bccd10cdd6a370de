import random

import pytest

from graphforms import (
    GAMMA,
    Element,
    NonConstantCoefficientError,
    echelonize,
    in_span,
    reduce_mod,
)

M = Element.monomial


def test_rank_and_pivot_examples():
    basis = echelonize([Element(2, {(1, 2, 4): 1, (1, 3, 4): 1})])
    assert basis.rank == 1
    assert basis.pivots == ((1, 2, 4),)

    basis = echelonize([M((1, 2, 1)), M((1, 2, 1), 2)])
    assert basis.rank == 1

    basis = echelonize([Element(2, {(1, 2, 3): 1, (1, 4, 3): -1}), M((1, 4, 3))])
    assert basis.rank == 2
    assert basis.pivots == ((1, 2, 3), (1, 4, 3))


def test_membership_examples(tower_example1, tower_example2):
    assert in_span(Element(2, {(1, 2, 4): 1, (1, 3, 4): 1}), tower_example2.kernel(2))
    assert in_span(Element.zero(2), tower_example2.kernel(2))
    assert not in_span(M((1, 2, 3)), tower_example1.kernel(2))


def test_symbolic_rows_rejected():
    with pytest.raises(NonConstantCoefficientError):
        echelonize([M((1, 2), GAMMA)])
    with pytest.raises(NonConstantCoefficientError):
        in_span(M((1, 2), GAMMA), echelonize([M((1, 2))]))


def test_reduce_handles_symbolic_layers(tower_example2):
    kernel = tower_example2.kernel(2)
    # each power of the parameter reduces against the same constant matrix
    x = Element(2, {(1, 2, 4): GAMMA, (1, 3, 4): GAMMA, (2, 1, 3): 1})
    assert reduce_mod(x, kernel) == M((2, 1, 3))


def test_echelonize_idempotent():
    rng = random.Random(3)
    paths = [(i, j, k) for i in range(1, 4) for j in range(1, 4) for k in range(1, 4)
             if i != j and j != k]
    for _ in range(100):
        rows = []
        for _ in range(rng.randint(1, 6)):
            picks = rng.sample(paths, rng.randint(1, 4))
            row = Element(2, {p: rng.randint(-3, 3) for p in picks})
            rows.append(row)
        basis = echelonize(rows, degree=2)
        again = echelonize(basis.rows, degree=2)
        assert again.pivots == basis.pivots
        assert list(again.rows) == list(basis.rows)


def test_span_invariance_under_combinations():
    rng = random.Random(5)
    paths = [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j]
    for _ in range(100):
        rows = [
            Element(1, {p: rng.randint(-2, 2) for p in rng.sample(paths, 3)})
            for _ in range(3)
        ]
        base = echelonize(rows, degree=1)
        combo = Element.zero(1)
        for row in rows:
            combo = combo + row.scale(rng.randint(-3, 3))
        extended = echelonize(rows + [combo], degree=1)
        assert extended.rank == base.rank
        # scaling preserves membership
        if not combo.is_zero():
            assert in_span(combo, base)
            assert in_span(combo.scale(7), base)


def test_empty_input_needs_degree():
    with pytest.raises(ValueError):
        echelonize([])
    assert echelonize([], degree=2).rank == 0
