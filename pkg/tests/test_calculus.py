import random
import warnings

import pytest

from graphforms import (
    CalculusTower,
    Digraph,
    Element,
    GammaPoly,
    echelonize,
    in_span,
)

M = Element.monomial


def test_digraph_validation():
    with pytest.raises(ValueError):
        Digraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Digraph(3, [(1, 4)])
    with pytest.raises(ValueError):
        Digraph(1, [])
    assert Digraph.complete(3).is_complete
    assert not Digraph(3, [(1, 2), (2, 3), (1, 3)]).is_complete


def test_disconnected_graph_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        Digraph(4, [(1, 2), (2, 1), (3, 4), (4, 3)])
    assert any("not connected" in str(w.message) for w in caught)
    # connected graphs stay silent
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        Digraph(3, [(1, 2), (2, 3), (1, 3)])
    assert not caught


def test_empty_graph_rejected_by_build():
    with pytest.raises(ValueError):
        CalculusTower(Digraph(3, []), 2)


def test_example1_tower(tower_example1):
    tower = tower_example1
    assert tower.kernel(1).pivots == ((2, 1), (3, 1), (3, 2))
    assert tower.quotient_basis(2) == ((1, 2, 3),)
    assert tower.dim_quotient(3) == 0
    assert tower.dim_quotient(4) == 0
    assert tower.dims()[1] == {
        "degree": 2,
        "dim_omega": 12,
        "dim_kernel": 11,
        "dim_quotient": 1,
    }


def test_example1_projection(tower_example1):
    tower = tower_example1
    assert tower.project(M((1, 2, 3))) == M((1, 2, 3))
    for row in tower.kernel(2).rows:
        assert tower.project(row).is_zero()


def test_example3_tower(tower_example3):
    tower = tower_example3
    assert tower.kernel(2).rank == 12
    for n in (2, 3, 4):
        assert tower.dim_quotient(n) == 0
    assert tower.product(M((1, 2)), M((2, 3))).is_zero()
    assert not (M((1, 2)) * M((2, 3))).is_zero()


def test_example2_kernel(tower_example2):
    tower = tower_example2
    listed = [
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
        Element(2, {(1, 2, 4): 1, (1, 3, 4): 1}),
        Element(2, {(4, 2, 1): 1, (4, 3, 1): 1}),
    ]
    computed = tower.kernel(2)
    assert computed.rank == 12
    assert tower.dim_quotient(2) == 24
    span_of_listed = echelonize(listed, degree=2)
    for generator in listed:
        assert in_span(generator, computed)
    for row in computed.rows:
        assert in_span(row, span_of_listed)
    assert tower.project(M((1, 2, 4))) == M((1, 3, 4), -1)


def test_kernel_generators_stay_in_one_block(tower_example1, tower_example2, tower_example5):
    # every echelon row starts and ends at a single vertex pair
    for tower in (tower_example1, tower_example2, tower_example5):
        for n in range(1, tower.max_degree + 1):
            for row in tower.kernel(n).rows:
                starts = {p[0] for p in row.support()}
                ends = {p[-1] for p in row.support()}
                assert len(starts) == 1 and len(ends) == 1


def test_delta_examples(tower_example5, tower_example6):
    assert tower_example5.delta(M((1, 2))) == Element(2, {(1, 2, 1): 1, (2, 1, 2): 1})
    assert tower_example5.delta(M((2, 1))) == Element(2, {(1, 2, 1): 1, (2, 1, 2): 1})
    assert tower_example6.delta(M((3, 1))) == Element(
        2, {(2, 3, 1): 1, (3, 2, 1): -1, (3, 1, 2): 1}
    )
    # the quotient differential of the unit vanishes
    one = tower_example5.omega.one()
    assert tower_example5.delta(one).is_zero()


def test_product_examples(tower_example3, tower_example5):
    assert tower_example3.product(M((1, 2)), M((2, 3))).is_zero()
    assert tower_example5.product(M((1, 2)), M((2, 1))) == M((1, 2, 1))
    assert tower_example5.product(Element.zero(1), M((1, 2))).is_zero()


def test_complete_graph_has_trivial_kernels():
    tower = CalculusTower(Digraph.complete(3), 4)
    for n in range(1, 5):
        assert tower.kernel(n).rank == 0
        assert tower.dim_quotient(n) == tower.omega.dim(n)


def test_projection_idempotent_and_symbolic(tower_example2):
    tower = tower_example2
    gamma = GammaPoly.GAMMA
    x = Element(2, {(1, 2, 4): gamma, (2, 1, 3): 1 - gamma, (1, 3, 4): 2})
    once = tower.project(x)
    assert tower.project(once) == once
    # layerwise: substituting first or projecting first agree
    for value in (0, 1, 2):
        assert once.subs_gamma(value) == tower.project(x.subs_gamma(value))


def _random_rep(rng, tower, degree):
    if degree == 0:
        return tower.omega.function({i: rng.randint(-3, 3) for i in tower.omega.vertices()})
    basis = tower.quotient_basis(degree)
    if not basis:
        return Element.zero(degree)
    picks = rng.sample(basis, rng.randint(1, min(3, len(basis))))
    return Element(degree, {p: rng.randint(-3, 3) or 1 for p in picks})


def _random_omega(rng, tower, degree):
    paths = tower.omega.basis(degree)
    picks = rng.sample(paths, rng.randint(1, min(4, len(paths))))
    return Element(degree, {p: rng.randint(-3, 3) or 1 for p in picks})


def test_delta_nilpotent(tower_example1, tower_example5, tower_example6):
    rng = random.Random(41)
    towers = (tower_example1, tower_example5, tower_example6)
    for _ in range(120):
        tower = rng.choice(towers)
        v = _random_rep(rng, tower, rng.randint(0, 2))
        assert tower.delta(tower.delta(v)).is_zero()


def test_delta_leibniz(tower_example5, tower_example6):
    rng = random.Random(43)
    towers = (tower_example5, tower_example6)
    for _ in range(120):
        tower = rng.choice(towers)
        n = rng.randint(0, 2)
        m = rng.randint(0, 2 - n)
        v = _random_rep(rng, tower, n)
        w = _random_rep(rng, tower, m)
        lhs = tower.delta(tower.product(v, w))
        rhs = tower.product(tower.delta(v), w) + tower.product(v, tower.delta(w)).scale(
            (-1) ** n
        )
        assert lhs == rhs


def test_kernel_closure(tower_example2, tower_example5):
    rng = random.Random(47)
    for tower in (tower_example2, tower_example5):
        for _ in range(60):
            n = rng.randint(1, tower.max_degree - 1)
            rows = tower.kernel(n).rows
            if not rows:
                continue
            u = Element.zero(n)
            for row in rng.sample(rows, rng.randint(1, min(3, len(rows)))):
                u = u + row.scale(rng.randint(-2, 2) or 1)
            m = rng.randint(0, tower.max_degree - n)
            x = _random_omega(rng, tower, m)
            assert tower.project(x * u).is_zero()
            assert tower.project(u * x).is_zero()


def test_projection_is_bimodule_map(tower_example2, tower_example6):
    rng = random.Random(53)
    for tower in (tower_example2, tower_example6):
        for _ in range(60):
            degree = rng.randint(1, tower.max_degree)
            x = _random_omega(rng, tower, degree)
            a = rng.choice(list(tower.omega.vertices()))
            b = rng.choice(list(tower.omega.vertices()))
            assert tower.project(x.block(a, b)) == tower.project(x).block(a, b)


def test_projection_factorizes_through_product(tower_example2, tower_example5):
    rng = random.Random(59)
    for tower in (tower_example2, tower_example5):
        for _ in range(60):
            n = rng.randint(1, tower.max_degree - 1)
            m = rng.randint(1, tower.max_degree - n)
            alpha = _random_omega(rng, tower, n)
            beta = _random_omega(rng, tower, m)
            assert tower.project(alpha * beta) == tower.product(
                tower.project(alpha), tower.project(beta)
            )


def test_projection_commutes_with_differential(tower_example5, tower_example6):
    rng = random.Random(61)
    for tower in (tower_example5, tower_example6):
        for _ in range(60):
            n = rng.randint(0, tower.max_degree - 1)
            x = _random_omega(rng, tower, n) if n else tower.omega.function(
                {i: rng.randint(-3, 3) for i in tower.omega.vertices()}
            )
            assert tower.project(tower.omega.d(x)) == tower.delta(tower.project(x))


def test_delta_images_span_next_level(tower_example1, tower_example5, tower_example6):
    for tower in (tower_example1, tower_example5, tower_example6):
        for n in range(1, tower.max_degree):
            generated = []
            for path in tower.quotient_basis(n):
                for piece in tower.delta(M(path)).blocks().values():
                    generated.append(piece)
            span = echelonize(generated, degree=n + 1)
            target = tower.quotient_basis(n + 1)
            assert span.rank == len(target)
            for path in target:
                assert in_span(M(path), span)
