"""Tests for Laurent polynomial arithmetic and the self-dual splits."""

import pytest

from blobkl.errors import DecompositionError
from blobkl.laurent import (
    LaurentPoly,
    add,
    bar,
    mul,
    split_selfdual_seeded,
    split_selfdual_strict,
)

V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


def test_zero_coefficients_are_dropped():
    poly = LaurentPoly({0: 1, 2: 0, -1: 3})
    assert poly.to_json() == [[-1, 3], [0, 1]]
    assert LaurentPoly({1: 1, 2: -1}) + LaurentPoly({2: 1}) == V


def test_equal_polynomials_hash_alike():
    a = LaurentPoly([(1, 2), (0, 1)])
    b = LaurentPoly({0: 1, 1: 2})
    assert a == b
    assert len({a, b}) == 1


def test_non_integer_terms_are_rejected():
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})


def test_arithmetic_with_integers():
    assert LaurentPoly.one() + 1 == LaurentPoly({0: 2})
    assert 1 - V == LaurentPoly({0: 1, 1: -1})
    assert V * V_INV == LaurentPoly.one()
    assert mul(V + 1, V - 1) == LaurentPoly({2: 1, 0: -1})
    assert add(V, V) == LaurentPoly({1: 2})
    assert (V + 1).shift(2) == LaurentPoly({3: 1, 2: 1})


def test_bar_reverses_exponents():
    poly = LaurentPoly({1: 1, 2: 2})
    assert bar(poly) == LaurentPoly({-1: 1, -2: 2})
    assert (V + V_INV).is_bar_invariant()
    assert not V.is_bar_invariant()


def test_accessors():
    poly = LaurentPoly({-1: 1, 0: 2, 3: -4})
    assert poly.valuation() == -1
    assert poly.degree() == 3
    assert poly.constant_term() == 2
    assert poly.at_one() == -1
    assert poly.coefficient(5) == 0
    assert LaurentPoly.zero().valuation() is None
    assert not LaurentPoly.zero()


def test_positive_and_polynomial_parts():
    assert (V + V * V).in_positive_part()
    assert not (V + 1).in_positive_part()
    assert (V + 1).in_polynomial_part()
    assert not V_INV.in_polynomial_part()


def test_plain_and_tex_rendering():
    poly = LaurentPoly({-1: 1, 0: 2, 1: 1})
    assert poly.fmt() == "v^-1 + 2 + v"
    assert poly.fmt("tex") == "v^{-1}+2+v"
    assert LaurentPoly({0: -1, 2: -3}).fmt() == "-1 - 3v^2"
    assert LaurentPoly.zero().fmt() == "0"
    with pytest.raises(ValueError):
        poly.fmt("html")


def test_json_round_trip_is_sorted():
    poly = LaurentPoly.from_json([[1, 2], [0, 1]])
    assert poly.to_json() == [[0, 1], [1, 2]]


def test_strict_split():
    f = LaurentPoly({-1: 1, 0: 3, 1: 2, 2: 1})
    g, h = split_selfdual_strict(f)
    assert g == LaurentPoly({-1: 1, 0: 3, 1: 1})
    assert h == LaurentPoly({1: 1, 2: 1})
    assert g.is_bar_invariant()
    assert h.in_positive_part()


def test_strict_split_rejects_negative_remainder():
    f = V_INV + 1
    with pytest.raises(DecompositionError) as info:
        split_selfdual_strict(f)
    assert info.value.instance["rule"] == "strict"
    assert info.value.instance["h"] == [[1, -1]]

    g, h = split_selfdual_strict(f, require_nonnegative=False)
    assert g == LaurentPoly({-1: 1, 0: 1, 1: 1})
    assert h == LaurentPoly({1: -1})


def test_seeded_split_keeps_constant_term():
    f = LaurentPoly({-1: 1, 0: 2, 1: 1})
    g, h = split_selfdual_seeded(f, 1)
    assert g == LaurentPoly({-1: 1, 0: 1, 1: 1})
    assert h == LaurentPoly.one()


def test_seeded_split_with_too_large_seed():
    g, h = split_selfdual_seeded(LaurentPoly.one(), 2, require_nonnegative=False)
    assert (g, h) == (LaurentPoly({0: -1}), LaurentPoly({0: 2}))
    with pytest.raises(DecompositionError):
        split_selfdual_seeded(LaurentPoly.one(), 2)
