"""Tests for the affine Weyl group in window notation."""

import itertools

import pytest

from blobkl.affine_weyl import (
    AffineElement,
    DihedralForm,
    bruhat_leq,
    dihedral_form,
    evaluate_word,
    format_word,
    from_dihedral,
    identity,
    mult,
    parse_element,
    parse_word,
    simple,
)
from blobkl.errors import InvalidParameters, LevelMismatch


def _elements(l, max_length):
    seen = {identity(l)}
    frontier = [identity(l)]
    for _ in range(max_length):
        frontier = [x.rmul_simple(i) for x in frontier for i in range(l)]
        frontier = [x for x in frontier if x not in seen]
        seen.update(frontier)
    return sorted(seen, key=lambda x: (x.length(), x.window))


def _subword_leq(x, w):
    word = w.reduced_word()
    for mask in itertools.product((0, 1), repeat=len(word)):
        sub = [letter for letter, bit in zip(word, mask) if bit]
        if evaluate_word(sub, w.level) == x:
            return True
    return False


def test_simple_reflections():
    assert identity(3).window == (1, 2, 3)
    assert simple(1, 3).window == (2, 1, 3)
    assert simple(0, 3).window == (0, 2, 4)
    for i in range(3):
        s = simple(i, 3)
        assert s.length() == 1
        assert (s * s).is_identity()


def test_unknown_generator_is_an_index_error():
    with pytest.raises(IndexError):
        simple(3, 3)
    with pytest.raises(IndexError):
        identity(2).rmul_simple(2)


def test_invalid_windows():
    with pytest.raises(InvalidParameters):
        AffineElement((1, 1))
    with pytest.raises(InvalidParameters):
        AffineElement((0, 3, 3))
    with pytest.raises(InvalidParameters):
        AffineElement(())


def test_braid_relations_in_level_three():
    for i, j in ((1, 2), (0, 1), (0, 2)):
        assert evaluate_word((i, j, i), 3) == evaluate_word((j, i, j), 3)


def test_level_two_is_infinite_dihedral():
    for k in range(1, 9):
        word = tuple(1 if index % 2 == 0 else 0 for index in range(k))
        assert evaluate_word(word, 2).length() == k


def test_inverse_and_multiplication():
    x = evaluate_word((1, 0, 2, 1), 3)
    assert (x * x.inverse()).is_identity()
    assert mult(x.inverse(), x).is_identity()
    with pytest.raises(LevelMismatch):
        mult(x, identity(2))


def test_reduced_word_round_trip():
    for x in _elements(3, 4):
        word = x.reduced_word()
        assert len(word) == x.length()
        assert evaluate_word(word, 3) == x


def test_descents_lower_the_length():
    x = evaluate_word((1, 2, 0, 1), 3)
    for i in x.right_descents():
        assert x.rmul_simple(i).length() == x.length() - 1
    for i in x.left_descents():
        assert x.lmul_simple(i).length() == x.length() - 1


def test_dihedral_forms():
    x = evaluate_word((1, 0, 1, 0, 1), 2)
    assert dihedral_form(x) == DihedralForm("s", 5)
    assert str(dihedral_form(x)) == "5s"
    assert str(x) == "5s"
    assert from_dihedral(DihedralForm.parse("4t")).length() == 4
    assert DihedralForm.parse("e") == DihedralForm("e", 0)
    assert DihedralForm("t", 3).word() == (0, 1, 0)
    with pytest.raises(InvalidParameters):
        DihedralForm("s", 0)
    with pytest.raises(InvalidParameters):
        DihedralForm.parse("3u")
    with pytest.raises(LevelMismatch):
        dihedral_form(identity(3))


def test_parse_word_forms():
    assert parse_word("s1 s3 s0 s2 s3 s2", 4) == (1, 3, 0, 2, 3, 2)
    assert parse_word("130232", 4) == (1, 3, 0, 2, 3, 2)
    assert parse_word("ststs", 2) == (1, 0, 1, 0, 1)
    assert parse_word("e", 3) == ()
    assert format_word((1, 3, 0)) == "s1 s3 s0"
    with pytest.raises(InvalidParameters):
        parse_word("s4", 4)
    with pytest.raises(InvalidParameters):
        parse_word("s1 x", 3)


def test_parse_element_forms():
    assert parse_element("[2,1]", 2) == simple(1, 2)
    assert parse_element("5s", 2) == evaluate_word((1, 0, 1, 0, 1), 2)
    assert parse_element("s0 s1", 3) == evaluate_word((0, 1), 3)
    with pytest.raises(LevelMismatch):
        parse_element("[1,2,3]", 2)


@pytest.mark.parametrize("text", ["[a,b,c]", "[1,2]x", "[1,,2]", "[]"])
def test_parse_element_rejects_malformed_windows(text):
    with pytest.raises(InvalidParameters) as info:
        parse_element(text, 3)
    assert text in str(info.value)


def test_dihedral_bruhat_rule_matches_subwords():
    elements = _elements(2, 6)
    for x in elements:
        for w in elements:
            assert bruhat_leq(x, w) == _subword_leq(x, w), (x, w)


def test_generic_bruhat_matches_subwords_in_level_three():
    elements = _elements(3, 3)
    for x in elements:
        for w in elements:
            assert bruhat_leq(x, w) == _subword_leq(x, w), (x, w)


def test_bruhat_needs_a_common_level():
    with pytest.raises(LevelMismatch):
        bruhat_leq(identity(2), identity(3))
