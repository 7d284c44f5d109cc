"""Alcove geometry of one-column multipartitions.

A multipartition ``lambda`` is the integer point ``Y`` with
``y_i = a_i - kappa_i``, extended by ``Y(i + l) = Y(i) - e``. The hyperplane
``h^m_{ij}`` (``i < j``) is ``y_i - y_j = m e`` and the fundamental alcove is

    A_0 = { y_1 > y_2 > ... > y_l > y_1 - e }

which contains the empty multipartition. ``W_l`` acts by ``g . Y = Y o g^-1``
on window positions; ``s_i`` swaps ``y_i, y_{i+1}`` and ``s_0`` maps
``(y_1, y_l)`` to ``(y_l + e, y_1 - e)``.

Two routes reach ``w_lambda``. Folding the point into ``A_0`` records the
walls crossed, whose product is ``w_lambda``. Walking the dominant path of
``t^lambda`` records the hyperplanes it newly touches; conjugating those
reflections back to walls of ``A_0`` yields the principal reduced word.

Orthogonal hits (consecutive hyperplanes sharing the touching vertex) need no
special case: the conjugation formula covers them, and the adjacency check on
the alcove path catches any ordering mistake.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Callable, List, Optional, Set, Tuple

from blobkl.affine_weyl import (
    AffineElement,
    Word,
    bruhat_leq,
    evaluate_word,
    identity,
    simple,
)
from blobkl.blob_comb import (
    DEFAULT_CAP,
    BlobParams,
    OneColMultipartition,
    dominant_tableau,
    enumerate_std_same_residue,
    graded_cell_dims,
)
from blobkl.errors import (
    AlcoveAdjacencyError,
    LevelMismatch,
    MultipleNewHyperplanes,
    NotRegular,
    SizeMismatch,
)
from blobkl.hecke import bott_samelson
from blobkl.laurent import LaurentPoly

__all__ = [
    "Hyperplane",
    "HyperplaneSequence",
    "AlcovePath",
    "GradedDimReport",
    "point",
    "is_regular",
    "dominant_path",
    "hyperplane_sequence",
    "reflection",
    "principal_word",
    "alcove_path",
    "fold_to_fundamental",
    "w_of",
    "same_orbit",
    "separating_hyperplanes",
    "verify_graded_dim_theorem",
    "graded_dim_reports",
    "truncation_set",
    "orbit_leq",
    "act",
]

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Hyperplane:
    i: int
    j: int
    m: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"hyperplane needs 1 <= i < j, got i = {self.i}, j = {self.j}")

    def contains(self, y: Point, e: int) -> bool:
        return y[self.i - 1] - y[self.j - 1] == self.m * e

    def fmt(self, style: str = "plain") -> str:
        if style == "tex":
            return f"\\mathfrak{{h}}^{{{self.m}}}_{{{self.i},{self.j}}}"
        return f"h^{self.m}_{self.i}{self.j}"

    def __str__(self) -> str:
        return self.fmt()


@dataclass(frozen=True)
class HyperplaneSequence:
    entries: Tuple[Tuple[Hyperplane, int], ...]

    @property
    def hyperplanes(self) -> Tuple[Hyperplane, ...]:
        return tuple(h for h, _ in self.entries)

    @property
    def levels(self) -> Tuple[int, ...]:
        return tuple(k for _, k in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class AlcovePath:
    alcoves: Tuple[AffineElement, ...]
    word: Word

    @property
    def end(self) -> AffineElement:
        return self.alcoves[-1]


@dataclass(frozen=True)
class GradedDimReport:
    lam: OneColMultipartition
    mu: OneColMultipartition
    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


# ----------------------------------------------------------------------
# Points
# ----------------------------------------------------------------------
def _check_level(lam: OneColMultipartition, params: BlobParams) -> None:
    if lam.l != params.l:
        raise LevelMismatch(f"multipartition {lam} has {lam.l} components, expected {params.l}")


def point(lam: OneColMultipartition, params: BlobParams) -> Point:
    _check_level(lam, params)
    return tuple(a - k for a, k in zip(lam.heights, params.kappa))


def _on_some_hyperplane(y: Point, e: int) -> bool:
    l = len(y)
    return any((y[i] - y[j]) % e == 0 for i in range(l) for j in range(i + 1, l))


def is_regular(lam: OneColMultipartition, params: BlobParams) -> bool:
    return not _on_some_hyperplane(point(lam, params), params.e)


def _require_regular(lam: OneColMultipartition, params: BlobParams) -> None:
    if not is_regular(lam, params):
        raise NotRegular(f"multipartition {lam} lies on a hyperplane for kappa {params.kappa}")


def act(g: AffineElement, y: Point, e: int) -> Point:
    """``g . Y = Y o g^-1`` with ``Y(i + l) = Y(i) - e``."""
    l = len(y)
    inv = g.inverse()
    out = []
    for i in range(1, l + 1):
        q, r = divmod(inv(i) - 1, l)
        out.append(y[r] - q * e)
    return tuple(out)


# ----------------------------------------------------------------------
# Dominant path and hyperplanes
# ----------------------------------------------------------------------
def dominant_path(lam: OneColMultipartition) -> List[Tuple[int, ...]]:
    """Prefix shapes of ``t^lambda``: ``p(0), ..., p(n)``."""
    return list(dominant_tableau(lam).prefix_heights())


def hyperplane_sequence(lam: OneColMultipartition, params: BlobParams) -> HyperplaneSequence:
    _require_regular(lam, params)
    path = dominant_path(lam)
    kappa = params.kappa
    entries: List[Tuple[Hyperplane, int]] = []
    for k in range(1, len(path)):
        before = tuple(a - c for a, c in zip(path[k - 1], kappa))
        after = tuple(a - c for a, c in zip(path[k], kappa))
        new: List[Hyperplane] = []
        for i in range(params.l):
            for j in range(i + 1, params.l):
                diff = after[i] - after[j]
                if diff % params.e:
                    continue
                plane = Hyperplane(i + 1, j + 1, diff // params.e)
                if not plane.contains(before, params.e):
                    new.append(plane)
        if len(new) > 1:
            raise MultipleNewHyperplanes(
                f"level {k} of the dominant path of {lam} touches {len(new)} new hyperplanes",
                instance={
                    "lambda": list(lam.heights),
                    "e": params.e,
                    "kappa": list(kappa),
                    "level": k,
                    "hyperplanes": [str(h) for h in new],
                },
            )
        if new:
            entries.append((new[0], k))
    logger.debug("lambda=%s hyperplane sequence %s", lam, [(str(h), k) for h, k in entries])
    return HyperplaneSequence(tuple(entries))


def reflection(h: Hyperplane, l: int) -> AffineElement:
    """Affine transposition fixing ``h``: positions ``i`` and ``j - m l`` swap."""
    if h.j > l:
        raise LevelMismatch(f"hyperplane {h} does not exist in level {l}")
    window = list(range(1, l + 1))
    window[h.i - 1] = h.j - h.m * l
    window[h.j - 1] = h.i + h.m * l
    return AffineElement(tuple(window))


def _as_simple(element: AffineElement) -> Optional[int]:
    for i in range(element.level):
        if element == simple(i, element.level):
            return i
    return None


def principal_word(lam: OneColMultipartition, params: BlobParams) -> Word:
    """Reduced word ``s_{i_1} ... s_{i_r}`` with
    ``s_{i_j} = rho_1 ... rho_{j-1} rho_j rho_{j-1} ... rho_1``."""
    sequence = hyperplane_sequence(lam, params)
    l = params.l
    prefix = identity(l)  # rho_{j-1} ... rho_1
    letters: List[int] = []
    for index, h in enumerate(sequence.hyperplanes, start=1):
        rho = reflection(h, l)
        conj = prefix.inverse() * rho * prefix
        letter = _as_simple(conj)
        if letter is None:
            raise AlcoveAdjacencyError(
                f"hyperplane {h} (position {index}) is not a wall of the current alcove",
                instance={
                    "lambda": list(lam.heights),
                    "e": params.e,
                    "kappa": list(params.kappa),
                    "position": index,
                },
            )
        letters.append(letter)
        prefix = rho * prefix
    return tuple(letters)


def alcove_path(lam: OneColMultipartition, params: BlobParams) -> AlcovePath:
    word = principal_word(lam, params)
    current = identity(params.l)
    alcoves = [current]
    for step, letter in enumerate(word, start=1):
        nxt = current.rmul_simple(letter)
        if nxt.length() != current.length() + 1:
            raise AlcoveAdjacencyError(
                f"alcove walk of {lam} is not reduced at step {step}",
                instance={
                    "lambda": list(lam.heights),
                    "e": params.e,
                    "kappa": list(params.kappa),
                    "word": list(word),
                },
            )
        alcoves.append(nxt)
        current = nxt
    return AlcovePath(tuple(alcoves), word)


# ----------------------------------------------------------------------
# Folding and orbits
# ----------------------------------------------------------------------
def _fold_point(y: Point, e: int) -> Tuple[Point, List[int]]:
    current = list(y)
    l = len(current)
    letters: List[int] = []
    while True:
        for i in range(l - 1):
            if current[i] < current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                letters.append(i + 1)
                break
        else:
            if current[0] - current[-1] > e:
                first, last = current[0], current[-1]
                current[0], current[-1] = last + e, first - e
                letters.append(0)
                continue
            return tuple(current), letters


def fold_to_fundamental(lam: OneColMultipartition, params: BlobParams) -> Tuple[Point, Word]:
    """Point of the closed ``A_0`` in the orbit of ``lambda`` and the walls
    crossed on the way, so ``lambda = s_{a_1} ... s_{a_r} . folded``."""
    folded, letters = _fold_point(point(lam, params), params.e)
    return folded, tuple(letters)


def w_of(lam: OneColMultipartition, params: BlobParams) -> AffineElement:
    _require_regular(lam, params)
    _, letters = fold_to_fundamental(lam, params)
    return evaluate_word(letters, params.l)


def same_orbit(
    lam: OneColMultipartition, mu: OneColMultipartition, params: BlobParams
) -> bool:
    if lam.n != mu.n:
        raise SizeMismatch(f"|lambda| = {lam.n} differs from |mu| = {mu.n}")
    return fold_to_fundamental(lam, params)[0] == fold_to_fundamental(mu, params)[0]


def separating_hyperplanes(lam: OneColMultipartition, params: BlobParams) -> Set[Hyperplane]:
    """Hyperplanes strictly between ``lambda`` and an interior point of ``A_0``."""
    y = point(lam, params)
    e, l = params.e, params.l
    inner = [Fraction(-(2 * i - 1) * e, 2 * l) for i in range(1, l + 1)]
    found: Set[Hyperplane] = set()
    for i in range(l):
        for j in range(i + 1, l):
            d_lam = y[i] - y[j]
            d_in = inner[i] - inner[j]
            low = floor(min(d_lam, d_in) / e)
            high = ceil(max(d_lam, d_in) / e)
            for m in range(low, high + 1):
                if (m * e - d_in) * (m * e - d_lam) < 0:
                    found.add(Hyperplane(i + 1, j + 1, m))
    return found


# ----------------------------------------------------------------------
# Graded dimension theorem
# ----------------------------------------------------------------------
def _report(
    lam: OneColMultipartition,
    mu: OneColMultipartition,
    params: BlobParams,
    lhs: LaurentPoly,
    bs_coefficient: Callable[[AffineElement], LaurentPoly],
) -> GradedDimReport:
    if same_orbit(lam, mu, params):
        rhs = bs_coefficient(w_of(mu, params))
    else:
        rhs = LaurentPoly.zero()
    return GradedDimReport(lam, mu, lhs, rhs)


def verify_graded_dim_theorem(
    lam: OneColMultipartition,
    mu: OneColMultipartition,
    params: BlobParams,
    *,
    cap: int = DEFAULT_CAP,
) -> GradedDimReport:
    """Compare ``gdim Delta_lambda(mu)`` with the ``H_{w_mu}`` coefficient of
    the Bott-Samelson element of the principal word of ``lambda``."""
    _require_regular(lam, params)
    if lam.n != mu.n:
        raise SizeMismatch(f"|lambda| = {lam.n} differs from |mu| = {mu.n}")
    _check_level(mu, params)
    lhs = graded_cell_dims(lam, params, cap=cap).get(mu, LaurentPoly.zero())
    bs = bott_samelson(principal_word(lam, params), params.l)
    return _report(lam, mu, params, lhs, bs.coefficient)


def graded_dim_reports(
    lam: OneColMultipartition, params: BlobParams, *, cap: int = DEFAULT_CAP
) -> List[GradedDimReport]:
    """One report per ``mu`` in the truncation set of ``lambda``."""
    _require_regular(lam, params)
    dims = graded_cell_dims(lam, params, cap=cap)
    bs = bott_samelson(principal_word(lam, params), params.l)
    reports = [_report(lam, mu, params, dim, bs.coefficient) for mu, dim in dims.items()]
    reports.sort(key=lambda report: report.mu.heights)
    return reports


def truncation_set(
    lam: OneColMultipartition, params: BlobParams, *, cap: int = DEFAULT_CAP
) -> List[OneColMultipartition]:
    """Shapes ``mu`` with ``Std_lambda(mu)`` nonempty, by decreasing ``l(w_mu)``."""
    shapes = {t.shape() for t in enumerate_std_same_residue(lam, params, cap=cap)}
    return sorted(shapes, key=lambda mu: (-w_of(mu, params).length(), mu.heights))


def orbit_leq(
    mu: OneColMultipartition, lam: OneColMultipartition, params: BlobParams
) -> bool:
    """``mu`` in the orbit of ``lambda`` with ``w_mu <= w_lambda``.

    For regular ``lambda`` this holds exactly when ``Std_lambda(mu)`` is nonempty.
    """
    return same_orbit(lam, mu, params) and bruhat_leq(w_of(mu, params), w_of(lam, params))
