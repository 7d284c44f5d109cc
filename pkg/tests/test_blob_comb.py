"""Tests for one-column multipartitions, tableaux and graded dimensions."""

import pytest

from blobkl.blob_comb import (
    BlobParams,
    ColumnTableau,
    OneColMultipartition,
    addable_residue,
    count_std_same_residue,
    dominance_leq,
    dominant_tableau,
    dominates,
    enumerate_std_same_residue,
    graded_cell_dim,
    graded_cell_dims,
    removable_residue,
    residue,
    residue_sequence,
    tableau_degree,
    truncation_graded_dim,
)
from blobkl.errors import CapExceeded, InvalidParameters, LevelMismatch, SizeMismatch
from blobkl.laurent import LaurentPoly

LEVEL4 = BlobParams(8, 4, (0, 2, 4, 6))
LAM4 = OneColMultipartition((1, 13, 1, 8))
LEVEL2 = BlobParams(5, 2, (1, 4))


def test_params_validation():
    with pytest.raises(InvalidParameters):
        BlobParams(8, 4, (0, 1, 4, 6))
    with pytest.raises(InvalidParameters):
        BlobParams(8, 2, (0, 7))
    with pytest.raises(InvalidParameters):
        BlobParams(5, 2, (4, 1))
    with pytest.raises(InvalidParameters):
        BlobParams(5, 3, (0, 2, 4))
    with pytest.raises(InvalidParameters):
        BlobParams(5, 2, (1, 5))
    with pytest.raises(InvalidParameters):
        BlobParams(5, 1, (1,))


def test_multipartition_basics():
    lam = OneColMultipartition.parse("2, 0,3")
    assert lam.heights == (2, 0, 3)
    assert (lam.n, lam.l) == (5, 3)
    assert str(lam) == "(2,0,3)"
    assert list(OneColMultipartition((2, 1)).boxes()) == [(1, 1), (2, 1), (1, 2)]
    with pytest.raises(InvalidParameters):
        OneColMultipartition((1, -1))
    with pytest.raises(InvalidParameters):
        OneColMultipartition.parse("1,x")


def test_tableau_basics():
    t = ColumnTableau((1, 2, 1), 2)
    assert t.shape() == OneColMultipartition((2, 1))
    assert t.boxes() == [(1, 1), (1, 2), (2, 1)]
    assert list(t.prefix_heights()) == [(0, 0), (1, 0), (1, 1), (2, 1)]
    assert str(t) == "1,2,1"
    with pytest.raises(InvalidParameters):
        ColumnTableau((1, 3), 2)


def test_residues_of_boxes():
    assert residue(1, 1, LEVEL2) == 1
    assert residue(3, 1, LEVEL2) == 4
    assert addable_residue((0, 0), 2, LEVEL2) == 4
    assert removable_residue((0, 1), 2, LEVEL2) == 4
    with pytest.raises(InvalidParameters):
        residue(0, 1, LEVEL2)


def test_box_dominance():
    assert dominates((1, 2), (2, 1))
    assert dominates((1, 1), (1, 2))
    assert not dominates((1, 2), (1, 1))
    assert not dominates((1, 1), (1, 1))


def test_dominant_tableau_fills_rows():
    assert dominant_tableau(OneColMultipartition((2, 1))).components == (1, 2, 1)
    assert dominant_tableau(OneColMultipartition((0, 3))).components == (2, 2, 2)


def test_residue_sequences_of_the_level_four_example():
    i_lam = residue_sequence(dominant_tableau(LAM4), LEVEL4)
    assert i_lam == (0, 2, 4, 6, 1, 5, 0, 4, 7, 3, 6, 2, 5, 1, 4, 0, 3, 7, 2, 1, 0, 7, 6)
    mu = OneColMultipartition((5, 5, 6, 7))
    i_mu = residue_sequence(dominant_tableau(mu), LEVEL4)
    assert i_mu == (0, 2, 4, 6, 7, 1, 3, 5, 6, 0, 2, 4, 5, 7, 1, 3, 4, 6, 0, 2, 7, 1, 0)


def test_enumeration_of_the_level_four_example():
    tableaux = enumerate_std_same_residue(LAM4, LEVEL4)
    assert len(tableaux) == 64
    assert count_std_same_residue(LAM4, LEVEL4) == 64
    assert dominant_tableau(LAM4) in tableaux
    target = residue_sequence(dominant_tableau(LAM4), LEVEL4)
    assert all(residue_sequence(t, LEVEL4) == target for t in tableaux)
    assert [t.components for t in tableaux] == sorted(t.components for t in tableaux)


def test_degree_of_the_displayed_tableau():
    word = (1, 2, 3, 4, 2, 4, 2, 4, 1, 3, 1, 3, 1, 3, 1, 3, 4, 2, 4, 4, 4, 3, 2)
    t = ColumnTableau(word, 4)
    assert t.shape() == OneColMultipartition((5, 5, 6, 7))
    assert t in enumerate_std_same_residue(LAM4, LEVEL4)
    assert tableau_degree(t, LEVEL4) == 6


def test_degrees_in_a_small_level_two_case():
    lam = OneColMultipartition((0, 4))
    assert tableau_degree(dominant_tableau(lam), LEVEL2) == 0
    assert tableau_degree(ColumnTableau((2, 2, 2, 1), 2), LEVEL2) == 1
    mu = OneColMultipartition((1, 3))
    assert graded_cell_dim(lam, mu, LEVEL2) == LaurentPoly.monomial(1)
    assert graded_cell_dim(lam, lam, LEVEL2) == LaurentPoly.one()
    assert graded_cell_dims(lam, LEVEL2) == {
        lam: LaurentPoly.one(),
        mu: LaurentPoly.monomial(1),
    }


def test_graded_cell_dim_sums_to_the_count():
    dims = graded_cell_dims(LAM4, LEVEL4)
    assert sum(dim.at_one() for dim in dims.values()) == 64
    assert dims[LAM4] == LaurentPoly.one()


def test_truncation_dimension_constant_term_is_catalan():
    lam = OneColMultipartition((2, 28))
    total = truncation_graded_dim(lam, LEVEL2)
    assert total.constant_term() == 14
    assert total.in_polynomial_part()


def test_cap_is_enforced():
    with pytest.raises(CapExceeded) as info:
        enumerate_std_same_residue(LAM4, LEVEL4, cap=10)
    assert info.value.cap == 10


def test_level_and_size_mismatches():
    with pytest.raises(LevelMismatch):
        enumerate_std_same_residue(OneColMultipartition((1, 2, 3)), LEVEL2)
    with pytest.raises(LevelMismatch):
        tableau_degree(ColumnTableau((1,), 3), LEVEL2)
    with pytest.raises(SizeMismatch):
        graded_cell_dim(OneColMultipartition((0, 4)), OneColMultipartition((1, 1)), LEVEL2)


def test_dominance_order():
    assert dominance_leq(OneColMultipartition((1, 3)), OneColMultipartition((2, 2)))
    assert not dominance_leq(OneColMultipartition((2, 2)), OneColMultipartition((1, 3)))
    assert dominance_leq(OneColMultipartition((2, 2)), OneColMultipartition((2, 2)))
