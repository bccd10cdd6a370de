import pytest

from graphforms import GAMMA, Element, GammaPoly, is_valid_path

M = Element.monomial


def test_path_validation():
    assert is_valid_path((1, 2, 1))
    assert not is_valid_path((1, 1, 2))
    assert not is_valid_path((0, 1))
    assert not is_valid_path(())
    with pytest.raises(ValueError):
        M((1, 1))
    with pytest.raises(ValueError):
        Element(2, {(1, 2): 1})


def test_zero_coefficients_dropped():
    x = Element(1, {(1, 2): 0, (2, 1): 3})
    assert x.support() == [(2, 1)]
    assert (x - x).is_zero()


def test_concatenation_product():
    assert M((1, 2)) * M((2, 3)) == M((1, 2, 3))
    assert (M((1, 2)) * M((1, 3))).is_zero()
    assert (Element(1, {(1, 2): 1, (1, 3): 1}) * M((3, 2))) == M((1, 3, 2))
    # degree-0 elements act as the function algebra
    assert M((2,)) * Element(2, {(1, 2, 3): 1, (2, 1, 3): 1}) == M((2, 1, 3))
    assert M((1, 2, 3)) * M((3,)) == M((1, 2, 3))


def test_module_actions():
    x = Element(2, {(1, 2, 3): 1, (2, 1, 3): 1})
    assert x.act_left(2) == M((2, 1, 3))
    assert x.act_right(3) == x
    assert x.block(1, 3) == M((1, 2, 3))
    assert set(x.blocks()) == {(1, 3), (2, 3)}


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        M((1, 2)) + M((1, 2, 3))


def test_scale_and_substitute():
    x = M((1, 2), GAMMA) + M((2, 1), 1 - GAMMA)
    assert x.scale(2).coefficient((1, 2)) == 2 * GAMMA
    assert x.subs_gamma(1) == M((1, 2))
    assert x.subs_gamma(0) == M((2, 1))
    assert x.scale(0).is_zero()


def test_homogeneity_preserved():
    x = M((1, 2)) + M((2, 3))
    y = x.scale(GAMMA) - x.scale(GAMMA)
    assert y.degree == 1 and y.is_zero()


def test_rendering():
    assert str(Element.zero(2)) == "0"
    x = Element(2, {(1, 2, 1): 1, (2, 1, 2): -1})
    assert str(x) == "e_121 - e_212"
    y = Element(3, {(2, 3, 2, 1): GAMMA * (2 - GAMMA), (3, 1, 2, 1): -GAMMA})
    assert str(y) == "(2*g - g^2)*e_2321 - g*e_3121"
    assert str(M((1, 2), GammaPoly.const(2))) == "2*e_12"
