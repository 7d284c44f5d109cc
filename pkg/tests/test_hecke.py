"""Tests for Bott-Samelson expansions and (p-)Kazhdan-Lusztig tables."""

import itertools

import pytest

from blobkl import hecke
from blobkl.affine_weyl import DihedralForm, evaluate_word, from_dihedral, identity
from blobkl.errors import InvalidParameters, LevelMismatch, UnsupportedError
from blobkl.hecke import (
    HeckeElement,
    _bar,
    bott_samelson,
    bott_samelson_bruteforce,
    cache_size,
    clear_cache,
    f_p,
    is_prime,
    kl_char0,
    kl_table,
    mult_right_barred,
    pkl_constant_terms,
    pkl_dihedral,
    resubstituted_coefficients,
)
from blobkl.laurent import LaurentPoly


def poly(**terms):
    """poly(c0=1, c2=3) is 1 + 3v^2."""
    return LaurentPoly({int(key[1:].replace("m", "-")): value for key, value in terms.items()})


def d(name):
    return from_dihedral(DihedralForm.parse(name))


def test_is_prime():
    assert [p for p in range(12) if is_prime(p)] == [2, 3, 5, 7, 11]


def test_f_p_digit_containment():
    assert f_p(4, 1, 2) == 1
    assert f_p(4, 2, 2) == 0
    assert f_p(2, 1, 2) == 1
    assert f_p(7, 3, 3) == 0
    assert f_p(5, 3, 3) == 0
    assert f_p(4, -1, 2) == 0
    assert f_p(4, 0, 2) == 1
    assert f_p(4, 0, 2, zero_value=0) == 0
    with pytest.raises(InvalidParameters):
        f_p(4, 1, 4)


def test_mult_right_barred_up_and_down():
    s = d("1s")
    up = mult_right_barred(HeckeElement.basis(identity(2)), 1)
    assert up.coefficient(s) == LaurentPoly.one()
    assert up.coefficient(identity(2)) == LaurentPoly.monomial(1)

    down = mult_right_barred(HeckeElement.basis(s), 1)
    assert down.coefficient(identity(2)) == LaurentPoly.one()
    assert down.coefficient(s) == LaurentPoly.monomial(-1)


def test_bott_samelson_of_one_letter():
    s = evaluate_word((1,), 2)
    product = bott_samelson((1,), 2)
    assert product.coefficient(s) == LaurentPoly.one()
    assert product.coefficient(identity(2)) == LaurentPoly.monomial(1)


def test_bott_samelson_of_ststs():
    product = bott_samelson((1, 0, 1, 0, 1), 2)
    assert product.coefficient(d("5s")) == LaurentPoly.one()
    assert product.coefficient(d("1s")) == poly(c0=2, c2=3, c4=1)
    assert len(product) == 10


@pytest.mark.parametrize(
    "length",
    [*range(9), pytest.param(9, marks=pytest.mark.slow), pytest.param(10, marks=pytest.mark.slow)],
)
def test_bott_samelson_matches_subsequence_sum_on_every_level_two_word(length):
    for word in itertools.product((0, 1), repeat=length):
        assert bott_samelson(word, 2) == bott_samelson_bruteforce(word, 2)


def test_bott_samelson_matches_subsequence_sum_in_level_three():
    for word in ((1, 2, 1, 0), (0, 1, 0, 2, 1), (1, 1, 2)):
        assert bott_samelson(word, 3) == bott_samelson_bruteforce(word, 3)


def test_hecke_element_level_is_checked():
    with pytest.raises(LevelMismatch):
        HeckeElement({identity(3): LaurentPoly.one()}, level=2)
    with pytest.raises(LevelMismatch):
        bott_samelson((1,), 2) + bott_samelson((1,), 3)


def test_char0_dihedral_polynomials_are_monomials():
    table = kl_char0(d("5s"))
    assert len(table.rows) == 10
    for x, h in table.rows.items():
        assert h == LaurentPoly.monomial(5 - x.length())
    aux = [(str(y), c.to_json()) for y, c in table.sorted_aux()]
    assert aux == [("5s", [[0, 1]]), ("3s", [[0, 3]]), ("1s", [[0, 2]])]
    assert resubstituted_coefficients(table) == dict(bott_samelson((1, 0, 1, 0, 1), 2).items())
    assert [str(x) for x, _ in table.sorted_rows()][:3] == ["5s", "4t", "4s"]


def test_char0_table_is_bar_invariant():
    for w in (evaluate_word((1, 2, 1), 3), evaluate_word((0, 1, 2, 0), 3), d("4t")):
        table = kl_char0(w)
        element = HeckeElement(table.rows, level=w.level)
        assert _bar(element) == element
        for x, h in table.rows.items():
            if x != w:
                assert h.in_positive_part()


def test_given_word_must_be_reduced_for_w():
    with pytest.raises(InvalidParameters):
        kl_char0(identity(2), word=(1, 1))
    with pytest.raises(InvalidParameters):
        kl_char0(d("2s"), word=(0, 1))


def test_pkl_three_s_in_characteristic_two():
    table = pkl_dihedral(DihedralForm("s", 3), 2)
    assert table.h(d("1s")) == poly(c0=1, c2=1)
    assert table.h(d("1t")) == poly(c2=1)
    assert table.h(identity(2)) == poly(c1=1, c3=1)
    assert table.aux[d("1s")] == LaurentPoly.zero()


def test_pkl_constant_terms():
    terms = pkl_constant_terms(DihedralForm("s", 5), 2)
    assert terms == {DihedralForm("s", 5): 1, DihedralForm("s", 3): 1, DihedralForm("s", 1): 0}
    with pytest.raises(InvalidParameters):
        pkl_constant_terms(DihedralForm("e", 0), 2)


def test_pkl_in_large_characteristic_matches_char0():
    w = d("6t")
    assert pkl_dihedral(w, 7).rows == kl_char0(w).rows
    assert pkl_dihedral(w, 0).rows == kl_char0(w).rows


def test_pkl_needs_level_two_and_a_prime():
    with pytest.raises(UnsupportedError):
        pkl_dihedral(evaluate_word((1, 2), 3), 2)
    with pytest.raises(UnsupportedError):
        kl_table(evaluate_word((1, 2), 3), 3)
    with pytest.raises(InvalidParameters):
        pkl_dihedral(d("3s"), 4)


def test_resubstitution_reproduces_bott_samelson():
    for table in (pkl_dihedral(d("5s"), 2), kl_char0(evaluate_word((0, 1, 2, 1), 3))):
        expected = dict(bott_samelson(table.word, table.w.level).items())
        assert resubstituted_coefficients(table) == expected


def test_char0_table_does_not_depend_on_the_reduced_word():
    cases = [
        ((1, 2, 1), (2, 1, 2), 3),
        ((0, 1, 0, 2), (1, 0, 1, 2), 3),
        ((1, 3, 0, 2, 3, 2), (3, 1, 0, 2, 3, 2), 4),
    ]
    for first, second, l in cases:
        w = evaluate_word(first, l)
        assert evaluate_word(second, l) == w
        assert w.length() == len(first)
        one, other = kl_char0(w, first), kl_char0(w, second)
        assert one.rows == other.rows
        assert one.rows == kl_char0(w).rows


def test_cache_returns_the_same_table():
    clear_cache()
    first = kl_table(d("4s"), 3)
    assert kl_table(d("4s"), 3) is first
    clear_cache()
    assert kl_table(d("4s"), 3) is not first


def test_cache_is_bounded(monkeypatch):
    clear_cache()
    expected = kl_table(d("5s"), 3).rows
    clear_cache()
    monkeypatch.setattr(hecke, "CACHE_LIMIT", 3)
    for name in ("1s", "2s", "3s", "4s", "5s"):
        kl_table(d(name), 3)
    assert 0 < cache_size() <= 3
    assert kl_table(d("5s"), 3).rows == expected
    clear_cache()
    assert cache_size() == 0
