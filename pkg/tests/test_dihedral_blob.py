"""Tests for the level-2 blob combinatorics and decomposition numbers."""

import itertools

import pytest

from blobkl.affine_weyl import DihedralForm
from blobkl.alcove import is_regular
from blobkl.blob_comb import (
    BlobParams,
    ColumnTableau,
    OneColMultipartition,
    dominant_tableau,
    enumerate_std_same_residue,
    residue_sequence,
    tableau_degree,
)
from blobkl.dihedral_blob import (
    STRATEGIES,
    TwoColPartition,
    blob_graded_decomposition,
    blob_vs_soergel,
    catalan,
    clear_cache,
    d_tableau_word,
    degree_zero_cells,
    dt_permutation,
    f_lambda,
    fast_degree,
    inversions,
    pascal_path,
    tl_decomposition,
    tl_parameter,
    two_col_partitions,
    two_col_tableaux,
    underlined_levels,
    wall_to_wall_check,
)
from blobkl.errors import (
    InvalidParameters,
    LevelMismatch,
    NotApplicable,
    ResidueMismatch,
    ShapeMismatch,
    TooShort,
)
from blobkl.laurent import LaurentPoly

PARAMS = BlobParams(5, 2, (1, 4))
LAM = OneColMultipartition((2, 28))
SMALL = OneColMultipartition((0, 4))
BLUE = ColumnTableau((1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 1, 2), 2)


def test_pascal_path():
    path = pascal_path(ColumnTableau((1, 1, 2), 2))
    assert str(path) == "RRL"
    assert path.weights() == [0, 1, 2, 1]
    assert path.weight() == 1
    with pytest.raises(LevelMismatch):
        pascal_path(ColumnTableau((1, 3), 3))


def test_first_wall_and_underlined_levels():
    assert f_lambda(LAM, PARAMS) == 7
    assert underlined_levels(LAM, PARAMS) == [12, 17, 22]


def test_f_lambda_needs_a_wall():
    inside = OneColMultipartition((1, 0))
    with pytest.raises(NotApplicable):
        f_lambda(inside, PARAMS)
    with pytest.raises(TooShort):
        degree_zero_cells(inside, PARAMS)
    with pytest.raises(LevelMismatch):
        f_lambda(OneColMultipartition((1, 1, 1, 1)), BlobParams(8, 4, (0, 2, 4, 6)))


def test_fast_degree_agrees_with_tableau_degree():
    tableaux = enumerate_std_same_residue(LAM, PARAMS)
    for t in tableaux:
        assert wall_to_wall_check(t, LAM, PARAMS)
        assert fast_degree(t, LAM, PARAMS) == tableau_degree(t, PARAMS)
    for t in enumerate_std_same_residue(SMALL, PARAMS):
        assert fast_degree(t, SMALL, PARAMS) == tableau_degree(t, PARAMS)


def test_fast_degree_rejects_foreign_tableaux():
    foreign = ColumnTableau((1, 2, 1, 2), 2)
    assert not wall_to_wall_check(foreign, SMALL, PARAMS)
    with pytest.raises(ResidueMismatch):
        fast_degree(foreign, SMALL, PARAMS)
    assert not wall_to_wall_check(ColumnTableau((1, 2), 2), SMALL, PARAMS)


@pytest.mark.parametrize("n", [9, 10])
def test_wall_to_wall_check_is_residue_equality(n):
    for a in range(n + 1):
        lam = OneColMultipartition((a, n - a))
        if not is_regular(lam, PARAMS):
            continue
        target = residue_sequence(dominant_tableau(lam), PARAMS)
        for word in itertools.product((1, 2), repeat=n):
            t = ColumnTableau(word, 2)
            same = residue_sequence(t, PARAMS) == target
            assert wall_to_wall_check(t, lam, PARAMS) == same, (lam, word)


def test_degree_zero_cells_of_the_five_s_example():
    cells = degree_zero_cells(LAM, PARAMS)
    counts = {str(cell.w): cell.count for cell in cells.values()}
    assert counts == {"5s": 1, "3s": 3, "1s": 2}
    assert cells[OneColMultipartition((7, 23))].w == DihedralForm("s", 3)
    assert cells[OneColMultipartition((12, 18))].w == DihedralForm("s", 1)
    assert sum(cell.count**2 for cell in cells.values()) == catalan(4) == 14
    for cell in cells.values():
        assert cell.two_col.n == 4
        assert sorted(cell.std_images) == sorted(two_col_tableaux(cell.two_col))
        assert all(tableau_degree(t, PARAMS) == 0 for t in cell.tableaux)


def test_blue_tableau_words():
    lam = OneColMultipartition((4, 8))
    highest = d_tableau_word(BLUE, lam, PARAMS, "highest")
    lowest = d_tableau_word(BLUE, lam, PARAMS, "lowest")
    assert highest == (10, 9, 8, 7, 3, 4, 2)
    assert lowest == (3, 2, 4, 10, 9, 8, 7)
    assert dt_permutation(highest, 12) == dt_permutation(lowest, 12)
    assert inversions(dt_permutation(highest, 12)) == 7


def test_d_tableau_word_of_a_dominant_tableau_is_empty():
    t = ColumnTableau((1, 2, 1, 2), 2)
    assert d_tableau_word(t, OneColMultipartition((2, 2)), PARAMS) == ()


def test_d_tableau_word_arguments():
    assert STRATEGIES == ("highest", "lowest")
    with pytest.raises(InvalidParameters):
        d_tableau_word(BLUE, OneColMultipartition((4, 8)), PARAMS, "middle")
    with pytest.raises(ShapeMismatch):
        d_tableau_word(ColumnTableau((1, 1, 1, 1), 2), SMALL, PARAMS)
    with pytest.raises(ShapeMismatch):
        d_tableau_word(ColumnTableau((1, 2, 1), 2), SMALL, PARAMS)


def test_permutations():
    assert dt_permutation((), 3) == (1, 2, 3)
    assert dt_permutation((1,), 3) == (2, 1, 3)
    assert inversions((3, 1, 2)) == 2


def test_two_column_partitions_and_tableaux():
    assert [str(p) for p in two_col_partitions(4)] == ["(1^4)", "(2^1,1^2)", "(2^2)"]
    assert two_col_tableaux(TwoColPartition(2, 0)) == [(1, 1, 2, 2), (1, 2, 1, 2)]
    assert len(two_col_tableaux(TwoColPartition(1, 2))) == 3
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    with pytest.raises(InvalidParameters):
        TwoColPartition(-1, 2)


def test_temperley_lieb_parameter():
    assert tl_parameter(5) == 1
    assert tl_parameter(8) == -1


def test_temperley_lieb_decomposition_in_characteristic_two():
    table = tl_decomposition(4, 2)
    p0, p1, p2 = table.partitions()
    assert [table.d(p, p) for p in (p0, p1, p2)] == [1, 1, 1]
    assert table.d(p1, p0) == 1
    assert table.d(p2, p0) == 0
    assert table.d(p2, p1) == 1
    assert table.d(p0, p1) == 0
    with pytest.raises(InvalidParameters):
        tl_decomposition(4, 0)


def test_temperley_lieb_decomposition_is_trivial_in_large_characteristic():
    for n in range(1, 10):
        for p in (2, 3, 5, 7, 11, 13):
            if p <= n + 1:
                continue
            table = tl_decomposition(n, p)
            for lam in table.partitions():
                for mu in table.partitions():
                    assert table.d(lam, mu) == int(lam == mu)


def test_small_decomposition():
    table = blob_graded_decomposition(SMALL, PARAMS, 2)
    mu = OneColMultipartition((1, 3))
    assert table.order == [SMALL, mu]
    assert table.d(SMALL) == LaurentPoly.one()
    assert table.d(mu) == LaurentPoly.monomial(1)
    assert table.simple_dims[mu] == LaurentPoly.zero()
    assert table.resubstituted(mu) == table.cell_dims[mu]


@pytest.mark.parametrize("p", [0, 3, 5, 7])
def test_blob_matches_p_kl_away_from_two(p):
    verdicts = blob_vs_soergel(LAM, PARAMS, p)
    assert len(verdicts) == 10
    assert all(verdict.equal for verdict in verdicts)


def test_decomposition_numbers_are_positive_and_simple_dims_self_dual():
    table = blob_graded_decomposition(LAM, PARAMS, 3)
    for mu in table.order:
        assert table.d(mu).has_nonnegative_coefficients()
        assert table.d(mu).in_polynomial_part()
        assert table.simple_dims[mu].is_bar_invariant()
        assert table.resubstituted(mu) == table.cell_dims[mu]


def test_degree_zero_cells_need_length_two():
    with pytest.raises(TooShort):
        degree_zero_cells(SMALL, PARAMS)


def test_decomposition_cache_can_be_cleared():
    first = blob_graded_decomposition(SMALL, PARAMS, 3)
    assert blob_graded_decomposition(SMALL, PARAMS, 3) is first
    clear_cache()
    second = blob_graded_decomposition(SMALL, PARAMS, 3)
    assert second is not first
    assert second.order == first.order
    assert [second.d(mu) for mu in second.order] == [first.d(mu) for mu in first.order]


def test_decomposition_rejects_composite_characteristic():
    with pytest.raises(InvalidParameters):
        blob_graded_decomposition(LAM, PARAMS, 4)
