"""Level-2 blob combinatorics.

For ``l = 2`` a tableau is a path in the Pascal triangle: step ``R`` adds a
box to component 1, step ``L`` to component 2, and the weight of a prefix is
``#R - #L``. Hyperplanes become walls at weights ``kappa_1 - kappa_2 + m e``
and the fundamental alcove is the open interval between the walls ``m = 0``
(reflection ``s``) and ``m = 1`` (reflection ``t``). It always contains the
weight 0.

With ``i^t = i^lambda`` a path copies the dominant path until it first
touches a wall at level ``f_lambda``, then makes straight wall-to-wall runs of
``e`` steps, and finishes with a straight run. ``fast_degree`` reads the
degree off those runs; ``degree_zero_cells`` maps the degree-zero paths onto
standard two-column tableaux, which is how Temperley-Lieb decomposition
numbers seed the graded decomposition recursion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

from blobkl.affine_weyl import AffineElement, DihedralForm, Word, dihedral_form
from blobkl.alcove import same_orbit, truncation_set, w_of
from blobkl.blob_comb import (
    DEFAULT_CAP,
    BlobParams,
    ColumnTableau,
    OneColMultipartition,
    dominant_tableau,
    enumerate_std_same_residue,
    graded_cell_dims,
    tableau_degree,
)
from blobkl.errors import (
    DecompositionError,
    InvalidParameters,
    LevelMismatch,
    NotApplicable,
    ResidueMismatch,
    ShapeMismatch,
    TooShort,
)
from blobkl.hecke import f_p, is_prime, pkl_dihedral
from blobkl.laurent import LaurentPoly, split_selfdual_seeded

__all__ = [
    "PascalPath",
    "TwoColPartition",
    "TLDecompTable",
    "DegreeZeroCell",
    "BlobDecompTable",
    "Verdict",
    "pascal_path",
    "f_lambda",
    "underlined_levels",
    "wall_to_wall_check",
    "d_tableau_word",
    "dt_permutation",
    "inversions",
    "fast_degree",
    "degree_zero_cells",
    "catalan",
    "two_col_partitions",
    "two_col_tableaux",
    "tl_parameter",
    "tl_decomposition",
    "blob_graded_decomposition",
    "blob_vs_soergel",
    "clear_cache",
]

logger = logging.getLogger(__name__)

STRATEGIES = ("highest", "lowest")


# ----------------------------------------------------------------------
# Types
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PascalPath:
    steps: Tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.steps)

    def weights(self) -> List[int]:
        """Weight after ``k`` steps for ``k = 0..n``."""
        out = [0]
        for step in self.steps:
            out.append(out[-1] + (1 if step == "R" else -1))
        return out

    def weight(self) -> int:
        return self.weights()[-1]

    def __str__(self) -> str:
        return "".join(self.steps)


@dataclass(frozen=True, order=True)
class TwoColPartition:
    """The partition ``(2^j, 1^rest)``."""

    j: int
    rest: int

    def __post_init__(self) -> None:
        if self.j < 0 or self.rest < 0:
            raise InvalidParameters(f"two-column partition (2^{self.j}, 1^{self.rest}) is invalid")

    @property
    def n(self) -> int:
        return 2 * self.j + self.rest

    def __str__(self) -> str:
        parts = []
        if self.j:
            parts.append(f"2^{self.j}")
        if self.rest or not self.j:
            parts.append(f"1^{self.rest}")
        return "(" + ",".join(parts) + ")"


@dataclass
class TLDecompTable:
    n: int
    p: int
    entries: Dict[Tuple[TwoColPartition, TwoColPartition], int] = field(default_factory=dict)

    def d(self, lam: TwoColPartition, mu: TwoColPartition) -> int:
        return self.entries.get((lam, mu), 0)

    def partitions(self) -> List[TwoColPartition]:
        return two_col_partitions(self.n)


@dataclass(frozen=True)
class DegreeZeroCell:
    mu: OneColMultipartition
    w: DihedralForm
    two_col: TwoColPartition
    tableaux: Tuple[ColumnTableau, ...]
    std_images: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.tableaux)


@dataclass
class BlobDecompTable:
    """Graded decomposition numbers ``d_{mu,lambda}`` and simple dimensions
    ``gdim L_lambda(mu)`` for ``mu`` in the truncation set, top-down."""

    lam: OneColMultipartition
    params: BlobParams
    p: int
    cap: int = DEFAULT_CAP
    order: List[OneColMultipartition] = field(default_factory=list)
    w: Dict[OneColMultipartition, AffineElement] = field(default_factory=dict)
    cell_dims: Dict[OneColMultipartition, LaurentPoly] = field(default_factory=dict)
    decomp: Dict[OneColMultipartition, LaurentPoly] = field(default_factory=dict)
    simple_dims: Dict[OneColMultipartition, LaurentPoly] = field(default_factory=dict)

    def d(self, mu: OneColMultipartition) -> LaurentPoly:
        return self.decomp.get(mu, LaurentPoly.zero())

    def matrix(self) -> Dict[Tuple[OneColMultipartition, OneColMultipartition], LaurentPoly]:
        """Every ``d_{mu,nu}`` with ``mu, nu`` in the truncation set."""
        out: Dict[Tuple[OneColMultipartition, OneColMultipartition], LaurentPoly] = {}
        for nu in self.order:
            column = self if nu == self.lam else _decomposition(nu, self.params, self.p, self.cap)
            for mu in self.order:
                value = column.d(mu)
                if value:
                    out[(mu, nu)] = value
        return out

    def resubstituted(self, mu: OneColMultipartition) -> LaurentPoly:
        """``sum_nu d_{mu,nu} gdim L_lambda(nu)``."""
        matrix = self.matrix()
        total = LaurentPoly.zero()
        for nu in self.order:
            total = total + matrix.get((mu, nu), LaurentPoly.zero()) * self.simple_dims[nu]
        return total


@dataclass(frozen=True)
class Verdict:
    mu: OneColMultipartition
    w: DihedralForm
    blob: LaurentPoly
    soergel: LaurentPoly

    @property
    def equal(self) -> bool:
        return self.blob == self.soergel


# ----------------------------------------------------------------------
# Paths and walls
# ----------------------------------------------------------------------
def _require_level_two(params: BlobParams) -> None:
    if params.l != 2:
        raise LevelMismatch(f"dihedral blob combinatorics need l = 2, got l = {params.l}")


def pascal_path(t: ColumnTableau) -> PascalPath:
    if t.level != 2:
        raise LevelMismatch(f"Pascal paths need a level-2 tableau, got level {t.level}")
    return PascalPath(tuple("R" if c == 1 else "L" for c in t.components))


def _walls(params: BlobParams) -> Tuple[int, int]:
    """Weights of the ``s`` and ``t`` walls of the fundamental alcove."""
    base = params.kappa[0] - params.kappa[1]
    return base, base + params.e


def _length(lam: OneColMultipartition, params: BlobParams) -> int:
    return w_of(lam, params).length()


def f_lambda(lam: OneColMultipartition, params: BlobParams) -> int:
    """Level at which the dominant path first touches a wall."""
    _require_level_two(params)
    if _length(lam, params) == 0:
        raise NotApplicable(f"{lam} lies in the fundamental alcove")
    a1, a2 = lam.heights
    m = min(a1, a2)
    shift = params.kappa[0] - params.kappa[1]
    if m == a1:
        return 2 * m - shift
    return 2 * m + shift + params.e


def underlined_levels(lam: OneColMultipartition, params: BlobParams) -> List[int]:
    """Interior wall levels ``f_lambda + j e`` for ``1 <= j < l(w_lambda) - 1``."""
    f = f_lambda(lam, params)
    k = _length(lam, params)
    return [f + j * params.e for j in range(1, k - 1)]


def _blocks(lam: OneColMultipartition, params: BlobParams) -> Tuple[int, int, int]:
    """``(f, k, n)`` where the runs are ``(f + (j-1) e, f + j e]``."""
    return f_lambda(lam, params), _length(lam, params), lam.n


def _straight(components: Sequence[int]) -> bool:
    return len(set(components)) <= 1


def wall_to_wall_check(t: ColumnTableau, lam: OneColMultipartition, params: BlobParams) -> bool:
    _require_level_two(params)
    if t.level != 2 or t.n != lam.n:
        return False
    dominant = dominant_tableau(lam).components
    if _length(lam, params) == 0:
        return t.components == dominant
    f, k, n = _blocks(lam, params)
    word = t.components
    if word[:f] != dominant[:f]:
        return False
    e = params.e
    for j in range(1, k):
        if not _straight(word[f + (j - 1) * e : f + j * e]):
            return False
    return _straight(word[f + (k - 1) * e : n])


def _runs(
    t: ColumnTableau, lam: OneColMultipartition, params: BlobParams
) -> List[Tuple[int, int]]:
    """``(start weight, direction)`` of every run after the first contact."""
    f, k, n = _blocks(lam, params)
    weights = pascal_path(t).weights()
    e = params.e
    out = []
    for j in range(1, k + 1):
        start = f + (j - 1) * e
        direction = 1 if t.components[start] == 1 else -1
        out.append((weights[start], direction))
    return out


# ----------------------------------------------------------------------
# Degrees
# ----------------------------------------------------------------------
def fast_degree(t: ColumnTableau, lam: OneColMultipartition, params: BlobParams) -> int:
    """Runs crossing the fundamental alcove, plus one if the final run points
    towards the weight-0 axis."""
    _require_level_two(params)
    if not wall_to_wall_check(t, lam, params):
        raise ResidueMismatch(f"tableau {t} does not share the residue sequence of {lam}")
    if _length(lam, params) == 0:
        return 0
    s_wall, _ = _walls(params)
    runs = _runs(t, lam, params)
    e = params.e
    crossings = sum(1 for start, d in runs[:-1] if min(start, start + d * e) == s_wall)
    start, d = runs[-1]
    return crossings + (1 if d * start < 0 else 0)


# ----------------------------------------------------------------------
# Hook algorithm
# ----------------------------------------------------------------------
def _prefix_counts(word: Sequence[int]) -> List[int]:
    out = [0]
    for c in word:
        out.append(out[-1] + (1 if c == 1 else 0))
    return out


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def _apply(word: Word, components: Sequence[int]) -> Tuple[int, ...]:
    current = list(components)
    for letter in reversed(word):
        current[letter - 1], current[letter] = current[letter], current[letter - 1]
    return tuple(current)


def dt_permutation(word: Word, n: int) -> Tuple[int, ...]:
    """One-line notation of ``s_{a_1} ... s_{a_r}`` in the symmetric group."""
    out = []
    for x in range(1, n + 1):
        y = x
        for letter in reversed(word):
            if y == letter:
                y = letter + 1
            elif y == letter + 1:
                y = letter
        out.append(y)
    return tuple(out)


def d_tableau_word(
    t: ColumnTableau,
    lam: OneColMultipartition,
    params: BlobParams,
    strategy: str = "highest",
) -> Word:
    """Reduced word for ``d_t`` with ``d_t . t^mu = t``, ``mu`` the shape of ``t``.

    Starting from the path of ``t``, each step makes a hook at a level ``k``
    whose swap ``s_k`` brings the path closer to the dominant one; the
    ``strategy`` picks the highest or the lowest such level.
    """
    _require_level_two(params)
    if strategy not in STRATEGIES:
        raise InvalidParameters(
            f"strategy must be one of {', '.join(STRATEGIES)}, got {strategy!r}"
        )
    if t.level != 2 or t.n != lam.n or not same_orbit(lam, t.shape(), params):
        raise ShapeMismatch(f"tableau {t} has no shape in the orbit of {lam}")
    target = dominant_tableau(t.shape()).components
    goal = _prefix_counts(target)
    current = list(t.components)
    letters: List[int] = []
    while tuple(current) != target:
        counts = _prefix_counts(current)
        candidates = []
        for k in range(1, t.n):
            if current[k - 1] == current[k]:
                continue
            if counts[k] < goal[k] and current[k - 1] == 2:
                candidates.append(k)
            elif counts[k] > goal[k] and current[k - 1] == 1:
                candidates.append(k)
        if not candidates:  # pragma: no cover - area argument
            raise ShapeMismatch(f"no area-reducing hook for {t}")
        k = candidates[-1] if strategy == "highest" else candidates[0]
        current[k - 1], current[k] = current[k], current[k - 1]
        letters.append(k)
    word = tuple(letters)
    if _apply(word, target) != t.components:
        raise ShapeMismatch(f"word {list(word)} does not carry t^mu to {t}")
    if inversions(dt_permutation(word, t.n)) != len(word):
        raise ShapeMismatch(f"word {list(word)} is not reduced")
    return word


# ----------------------------------------------------------------------
# Temperley-Lieb side
# ----------------------------------------------------------------------
def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def tl_parameter(e: int) -> int:
    """``q`` such that ``U_i^2 = -(q + q^-1) U_i`` after degree-zero reduction."""
    return 1 if e % 2 else -1


def two_col_partitions(n: int) -> List[TwoColPartition]:
    return [TwoColPartition(j, n - 2 * j) for j in range(n // 2 + 1)]


def two_col_tableaux(shape: TwoColPartition) -> List[Tuple[int, ...]]:
    """Standard tableaux as column words: entry ``i`` sits in column ``word[i-1]``."""
    out: List[Tuple[int, ...]] = []

    def grow(word: Tuple[int, ...], first: int, second: int) -> None:
        if len(word) == shape.n:
            out.append(word)
            return
        if first < shape.j + shape.rest:
            grow(word + (1,), first + 1, second)
        if second < shape.j and second < first:
            grow(word + (2,), first, second + 1)

    grow((), 0, 0)
    return out


def tl_decomposition(n: int, p: int) -> TLDecompTable:
    """``d[lambda_j, mu_k] = f_p(n - 2k, j - k)``."""
    if not is_prime(p):
        raise InvalidParameters(f"Temperley-Lieb decomposition numbers need a prime, got p = {p}")
    table = TLDecompTable(n=n, p=p)
    for lam in two_col_partitions(n):
        for mu in two_col_partitions(n):
            table.entries[(lam, mu)] = f_p(n - 2 * mu.j, lam.j - mu.j, p)
    return table


# ----------------------------------------------------------------------
# Degree-zero cells
# ----------------------------------------------------------------------
def degree_zero_cells(
    lam: OneColMultipartition, params: BlobParams, *, cap: int = DEFAULT_CAP
) -> Dict[OneColMultipartition, DegreeZeroCell]:
    """``P^0(lambda)`` with its degree-zero tableaux and their two-column images.

    Run ``j`` goes to the second column exactly when it points towards the
    weight-0 axis.
    """
    _require_level_two(params)
    k = _length(lam, params)
    if k < 2:
        raise TooShort(f"degree-zero cells need l(w_lambda) >= 2, {lam} has length {k}")
    side = dihedral_form(w_of(lam, params)).side
    grouped: Dict[OneColMultipartition, List[Tuple[ColumnTableau, Tuple[int, ...]]]] = {}
    for t in enumerate_std_same_residue(lam, params, cap=cap):
        if tableau_degree(t, params) != 0:
            continue
        runs = _runs(t, lam, params)[:-1]
        image = tuple(2 if d * start < 0 else 1 for start, d in runs)
        grouped.setdefault(t.shape(), []).append((t, image))
    cells: Dict[OneColMultipartition, DegreeZeroCell] = {}
    for mu, members in grouped.items():
        j = sum(1 for c in members[0][1] if c == 2)
        shape = TwoColPartition(j, k - 1 - 2 * j)
        cells[mu] = DegreeZeroCell(
            mu=mu,
            w=DihedralForm(side, k - 2 * j),
            two_col=shape,
            tableaux=tuple(t for t, _ in members),
            std_images=tuple(image for _, image in members),
        )
        logger.debug("lambda=%s: P^0 cell %s -> %s with %d tableaux", lam, mu, shape, len(members))
    return cells


# ----------------------------------------------------------------------
# Graded decomposition numbers
# ----------------------------------------------------------------------
def _seeds(
    lam: OneColMultipartition, params: BlobParams, p: int, cap: int
) -> Dict[OneColMultipartition, int]:
    """``d_{mu,lambda}(0)`` through the Temperley-Lieb numbers."""
    if _length(lam, params) == 0:
        return {lam: 1}
    cells = degree_zero_cells(lam, params, cap=cap)
    seeds: Dict[OneColMultipartition, int] = {}
    for mu, cell in cells.items():
        if mu == lam:
            seeds[mu] = 1
        elif p == 0:
            seeds[mu] = 0
        else:
            seeds[mu] = f_p(cell.two_col.n, cell.two_col.j, p)
    return seeds


@lru_cache(maxsize=128)
def _decomposition(
    lam: OneColMultipartition, params: BlobParams, p: int, cap: int
) -> BlobDecompTable:
    table = BlobDecompTable(lam=lam, params=params, p=p, cap=cap)
    table.order = truncation_set(lam, params, cap=cap)
    table.cell_dims = graded_cell_dims(lam, params, cap=cap)
    table.w = {mu: w_of(mu, params) for mu in table.order}
    seeds = _seeds(lam, params, p, cap)
    for mu in table.order:
        if mu == lam:
            table.decomp[mu] = LaurentPoly.one()
            table.simple_dims[mu] = LaurentPoly.one()
            continue
        residual = table.cell_dims[mu]
        length_mu = table.w[mu].length()
        for nu in table.order:
            if nu == lam or table.w[nu].length() <= length_mu:
                continue
            d_mu_nu = _decomposition(nu, params, p, cap).d(mu)
            if d_mu_nu:
                residual = residual - d_mu_nu * table.simple_dims[nu]
        try:
            g, h = split_selfdual_seeded(residual, seeds.get(mu, 0), require_nonnegative=True)
        except DecompositionError as exc:
            raise DecompositionError(
                f"decomposition of {lam} fails at mu = {mu}: {exc}",
                instance={
                    "lambda": list(lam.heights),
                    "mu": list(mu.heights),
                    "e": params.e,
                    "kappa": list(params.kappa),
                    "p": p,
                    "residual": residual.to_json(),
                    "seed": seeds.get(mu, 0),
                },
            ) from exc
        table.simple_dims[mu] = g
        if h:
            table.decomp[mu] = h
    logger.info("decomposition of %s at p=%d: %d shapes", lam, p, len(table.order))
    return table


def clear_cache() -> None:
    """Drop memoised decomposition tables."""
    _decomposition.cache_clear()


def blob_graded_decomposition(
    lam: OneColMultipartition, params: BlobParams, p: int, *, cap: int = DEFAULT_CAP
) -> BlobDecompTable:
    """Top-down recursion over the truncation set by decreasing ``l(w_mu)``.

    At each ``mu`` the residual ``gdim Delta_lambda(mu)`` minus the
    contributions of shapes already processed equals
    ``gdim L_lambda(mu) + d_{mu,lambda}``; the seeded split separates the two
    using the Temperley-Lieb constant term. ``p = 0`` seeds every
    off-diagonal constant term with 0.
    """
    _require_level_two(params)
    if p != 0 and not is_prime(p):
        raise InvalidParameters(f"p must be prime or 0, got {p}")
    w_of(lam, params)
    return _decomposition(lam, params, p, cap)


def blob_vs_soergel(
    lam: OneColMultipartition, params: BlobParams, p: int, *, cap: int = DEFAULT_CAP
) -> List[Verdict]:
    """Compare ``d_{mu,lambda}`` with ``h^p_{w_mu, w_lambda}`` for every ``mu``."""
    table = blob_graded_decomposition(lam, params, p, cap=cap)
    kl = pkl_dihedral(w_of(lam, params), p)
    verdicts = [
        Verdict(mu, dihedral_form(table.w[mu]), table.d(mu), kl.h(table.w[mu]))
        for mu in table.order
    ]
    for verdict in verdicts:
        if not verdict.equal:
            logger.warning(
                "lambda=%s mu=%s p=%d: blob %s differs from p-KL %s",
                lam,
                verdict.mu,
                p,
                verdict.blob,
                verdict.soergel,
            )
    return verdicts
