"""One-column multipartition combinatorics.

A one-column ``l``-multipartition is its tuple of column heights
``(a_1, ..., a_l)``. The box in row ``r`` of component ``m`` has residue
``kappa_m + 1 - r`` mod ``e``. Boxes are ordered by dominance::

    (r, m) dominates (r', m')  iff  r < r'  or  (r == r' and m < m')

so the dominant tableau ``t^lambda`` fills rows top to bottom, components
left to right.

A standard tableau of one-column shape is exactly its component word
``c(1..n)``: entry ``k`` sits at the bottom of column ``c(k)`` after the
first ``k`` entries are placed. All tableau routines work on that word and
keep running column heights, so addable and removable boxes are read in O(l)
per step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from blobkl.errors import CapExceeded, InvalidParameters, LevelMismatch, SizeMismatch
from blobkl.laurent import LaurentPoly

__all__ = [
    "DEFAULT_CAP",
    "BlobParams",
    "OneColMultipartition",
    "ColumnTableau",
    "residue",
    "addable_residue",
    "removable_residue",
    "dominates",
    "dominant_tableau",
    "residue_sequence",
    "enumerate_std_same_residue",
    "count_std_same_residue",
    "tableau_degree",
    "graded_cell_dim",
    "graded_cell_dims",
    "truncation_graded_dim",
    "dominance_leq",
]

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2**20

Box = Tuple[int, int]


@dataclass(frozen=True)
class BlobParams:
    """Quantum characteristic ``e``, level ``l`` and multicharge ``kappa``.

    ``kappa`` lists residues ``0 <= kappa_1 < ... < kappa_l < e`` and must be
    adjacency-free: no two entries equal or differ by one modulo ``e``.
    """

    e: int
    l: int
    kappa: Tuple[int, ...]

    def __post_init__(self) -> None:
        kappa = tuple(self.kappa)
        object.__setattr__(self, "kappa", kappa)
        if self.l < 2:
            raise InvalidParameters(f"level l must be at least 2, got {self.l}")
        if self.e < 2:
            raise InvalidParameters(f"quantum characteristic e must be at least 2, got {self.e}")
        if len(kappa) != self.l:
            raise InvalidParameters(f"kappa {list(kappa)} must have l = {self.l} entries")
        if self.e < 2 * self.l:
            raise InvalidParameters(
                f"an adjacency-free multicharge needs e >= 2l, got e = {self.e}, l = {self.l}"
            )
        if any(not 0 <= k < self.e for k in kappa):
            raise InvalidParameters(f"kappa {list(kappa)} must use residues 0..{self.e - 1}")
        if any(a >= b for a, b in zip(kappa, kappa[1:])):
            raise InvalidParameters(f"kappa {list(kappa)} must be strictly increasing")
        for i in range(self.l):
            for j in range(i + 1, self.l):
                if (kappa[i] - kappa[j]) % self.e in (0, 1, self.e - 1):
                    raise InvalidParameters(
                        f"kappa {list(kappa)} is not adjacency-free: "
                        f"kappa_{i + 1} = {kappa[i]} and kappa_{j + 1} = {kappa[j]}"
                    )


@dataclass(frozen=True)
class OneColMultipartition:
    heights: Tuple[int, ...]

    def __post_init__(self) -> None:
        heights = tuple(self.heights)
        object.__setattr__(self, "heights", heights)
        if any(h < 0 for h in heights):
            raise InvalidParameters(f"heights {list(heights)} must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "OneColMultipartition":
        try:
            return cls(tuple(int(tok) for tok in text.split(",") if tok.strip()))
        except ValueError as exc:
            raise InvalidParameters(f"cannot parse multipartition {text!r}") from exc

    @property
    def n(self) -> int:
        return sum(self.heights)

    @property
    def l(self) -> int:
        return len(self.heights)

    def boxes(self) -> Iterator[Box]:
        for m, height in enumerate(self.heights, start=1):
            for r in range(1, height + 1):
                yield (r, m)

    def fmt(self) -> str:
        return ",".join(str(h) for h in self.heights)

    def __str__(self) -> str:
        return "(" + self.fmt() + ")"


@dataclass(frozen=True)
class ColumnTableau:
    components: Tuple[int, ...]
    level: int

    def __post_init__(self) -> None:
        components = tuple(self.components)
        object.__setattr__(self, "components", components)
        for c in components:
            if not 1 <= c <= self.level:
                raise InvalidParameters(f"component {c} out of range 1..{self.level}")

    @property
    def n(self) -> int:
        return len(self.components)

    def shape(self) -> OneColMultipartition:
        heights = [0] * self.level
        for c in self.components:
            heights[c - 1] += 1
        return OneColMultipartition(tuple(heights))

    def boxes(self) -> List[Box]:
        """The box receiving each entry, in entry order."""
        heights = [0] * self.level
        out: List[Box] = []
        for c in self.components:
            heights[c - 1] += 1
            out.append((heights[c - 1], c))
        return out

    def prefix_heights(self) -> Iterator[Tuple[int, ...]]:
        """Shapes of ``t`` restricted to ``1..k`` for ``k = 0..n``."""
        heights = [0] * self.level
        yield tuple(heights)
        for c in self.components:
            heights[c - 1] += 1
            yield tuple(heights)

    def fmt(self) -> str:
        return ",".join(str(c) for c in self.components)

    def __str__(self) -> str:
        return self.fmt()


# ----------------------------------------------------------------------
# Residues and boxes
# ----------------------------------------------------------------------
def residue(r: int, m: int, params: BlobParams) -> int:
    if r < 1 or not 1 <= m <= params.l:
        raise InvalidParameters(f"box ({r}, {m}) is outside a level-{params.l} shape")
    return (params.kappa[m - 1] + 1 - r) % params.e


def addable_residue(heights: Sequence[int], m: int, params: BlobParams) -> int:
    return (params.kappa[m - 1] - heights[m - 1]) % params.e


def removable_residue(heights: Sequence[int], m: int, params: BlobParams) -> int:
    return (params.kappa[m - 1] + 1 - heights[m - 1]) % params.e


def dominates(a: Box, b: Box) -> bool:
    """Strict dominance ``a |> b`` of boxes ``(row, component)``."""
    return a[0] < b[0] or (a[0] == b[0] and a[1] < b[1])


def _check_level(lam: OneColMultipartition, params: BlobParams) -> None:
    if lam.l != params.l:
        raise LevelMismatch(f"multipartition {lam} has {lam.l} components, expected {params.l}")


def dominant_tableau(lam: OneColMultipartition) -> ColumnTableau:
    word: List[int] = []
    top = max(lam.heights, default=0)
    for r in range(1, top + 1):
        for m, height in enumerate(lam.heights, start=1):
            if height >= r:
                word.append(m)
    return ColumnTableau(tuple(word), lam.l)


def residue_sequence(t: ColumnTableau, params: BlobParams) -> Tuple[int, ...]:
    if t.level != params.l:
        raise LevelMismatch(f"tableau has level {t.level}, expected {params.l}")
    return tuple(residue(r, m, params) for r, m in t.boxes())


# ----------------------------------------------------------------------
# Enumeration
# ----------------------------------------------------------------------
def enumerate_std_same_residue(
    lam: OneColMultipartition, params: BlobParams, *, cap: int = DEFAULT_CAP
) -> List[ColumnTableau]:
    """All tableaux ``t`` of size ``n`` with ``i^t = i^lambda``.

    Depth-first over the branching tree, smaller components first, so the
    output is in lexicographic order of component words.
    """
    _check_level(lam, params)
    target = residue_sequence(dominant_tableau(lam), params)
    n = lam.n
    results: List[ColumnTableau] = []
    stack: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = [(tuple([0] * params.l), ())]
    while stack:
        heights, word = stack.pop()
        k = len(word)
        if k == n:
            results.append(ColumnTableau(word, params.l))
            if len(results) > cap:
                raise CapExceeded(
                    f"more than {cap} tableaux share the residue sequence of {lam}", cap=cap
                )
            continue
        choices = [
            m
            for m in range(1, params.l + 1)
            if addable_residue(heights, m, params) == target[k]
        ]
        for m in reversed(choices):
            grown = list(heights)
            grown[m - 1] += 1
            stack.append((tuple(grown), word + (m,)))
    logger.debug("lambda=%s: %d tableaux with the dominant residue sequence", lam, len(results))
    return results


def count_std_same_residue(lam: OneColMultipartition, params: BlobParams) -> int:
    """Count of ``enumerate_std_same_residue`` without building tableaux."""
    _check_level(lam, params)
    target = residue_sequence(dominant_tableau(lam), params)
    frontier: Dict[Tuple[int, ...], int] = {tuple([0] * params.l): 1}
    for res in target:
        grown: Dict[Tuple[int, ...], int] = {}
        for heights, count in frontier.items():
            for m in range(1, params.l + 1):
                if addable_residue(heights, m, params) == res:
                    nxt = list(heights)
                    nxt[m - 1] += 1
                    key = tuple(nxt)
                    grown[key] = grown.get(key, 0) + count
        frontier = grown
    return sum(frontier.values())


# ----------------------------------------------------------------------
# Degrees and graded dimensions
# ----------------------------------------------------------------------
def tableau_degree(t: ColumnTableau, params: BlobParams) -> int:
    """Sum over ``k`` of addable minus removable boxes of residue ``i_k``
    that the box of ``k`` dominates, in the shape of ``t`` restricted to
    ``1..k`` (the box of ``k`` itself excluded)."""
    if t.level != params.l:
        raise LevelMismatch(f"tableau has level {t.level}, expected {params.l}")
    heights = [0] * params.l
    degree = 0
    for c in t.components:
        heights[c - 1] += 1
        box = (heights[c - 1], c)
        res = residue(box[0], box[1], params)
        for m in range(1, params.l + 1):
            h = heights[m - 1]
            if addable_residue(heights, m, params) == res and dominates(box, (h + 1, m)):
                degree += 1
            if (
                h >= 1
                and m != c
                and removable_residue(heights, m, params) == res
                and dominates(box, (h, m))
            ):
                degree -= 1
    return degree


def graded_cell_dims(
    lam: OneColMultipartition, params: BlobParams, *, cap: int = DEFAULT_CAP
) -> Dict[OneColMultipartition, LaurentPoly]:
    """``gdim Delta_lambda(mu)`` for every ``mu`` with a nonzero value."""
    acc: Dict[OneColMultipartition, Dict[int, int]] = {}
    for t in enumerate_std_same_residue(lam, params, cap=cap):
        bucket = acc.setdefault(t.shape(), {})
        deg = tableau_degree(t, params)
        bucket[deg] = bucket.get(deg, 0) + 1
    return {mu: LaurentPoly(terms) for mu, terms in acc.items()}


def graded_cell_dim(
    lam: OneColMultipartition,
    mu: OneColMultipartition,
    params: BlobParams,
    *,
    cap: int = DEFAULT_CAP,
) -> LaurentPoly:
    if lam.n != mu.n:
        raise SizeMismatch(f"|lambda| = {lam.n} differs from |mu| = {mu.n}")
    _check_level(mu, params)
    return graded_cell_dims(lam, params, cap=cap).get(mu, LaurentPoly.zero())


def truncation_graded_dim(
    lam: OneColMultipartition, params: BlobParams, *, cap: int = DEFAULT_CAP
) -> LaurentPoly:
    """Graded dimension of ``e(i^lambda) B e(i^lambda)``: the sum of squares."""
    total = LaurentPoly.zero()
    for dim in graded_cell_dims(lam, params, cap=cap).values():
        total = total + dim * dim
    return total


# ----------------------------------------------------------------------
# Dominance order
# ----------------------------------------------------------------------
def _dominating_count(heights: Sequence[int], box: Box) -> int:
    r, m = box
    above = sum(min(h, r - 1) for h in heights)
    left = sum(1 for index, h in enumerate(heights, start=1) if index < m and h >= r)
    return above + left


def _positions(heights: Iterable[int], l: int) -> Iterator[Box]:
    top = max(heights, default=0)
    for r in range(1, top + 2):
        for m in range(1, l + 1):
            yield (r, m)


def dominance_leq(
    lam: OneColMultipartition, mu: OneColMultipartition, params: Optional[BlobParams] = None
) -> bool:
    """``lambda <| mu``: at every position ``mu`` has at least as many
    dominating boxes as ``lambda``."""
    if lam.l != mu.l:
        raise LevelMismatch(f"{lam} and {mu} have different levels")
    if params is not None:
        _check_level(lam, params)
    if lam.n != mu.n:
        raise SizeMismatch(f"|lambda| = {lam.n} differs from |mu| = {mu.n}")
    heights = list(lam.heights) + list(mu.heights)
    return all(
        _dominating_count(mu.heights, box) >= _dominating_count(lam.heights, box)
        for box in _positions(heights, lam.l)
    )
