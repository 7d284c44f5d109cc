"""Hecke algebra computations in the standard basis.

Conventions: ``H_x`` is the standard basis, ``Hb_s = H_s + v`` the
Kazhdan-Lusztig generator, and the quadratic relation is
``(H_s + v)(H_s - v^-1) = 0``. Right multiplication by ``Hb_s`` therefore
reads::

    H_x Hb_s = H_{xs} + v H_x        if xs > x
    H_x Hb_s = H_{xs} + v^-1 H_x     if xs < x

The Bott-Samelson element of a word is the ordered product of its ``Hb_s``.
Expanding it as ``sum_y aux_y * sum_x h_{x,y} H_x`` and peeling elements by
decreasing length recovers both the (p-)KL polynomials ``h_{x,w}`` and the
graded ranks ``aux_y``: at each ``x`` the residual
``bs_x - sum_{x<y<w} aux_y h_{x,y}`` equals ``aux_x + h_{x,w}`` and is split
into its bar-invariant part and its positive part.

For characteristic ``p > 0`` only the dihedral case (level 2) is supported,
where the constant terms of ``h^p_{x,w}`` are known in closed form from the
base-p containment function ``f_p``.

Tables are memoized per ``(w, p)``; the cache takes a lock for insertion so
worker threads only ever observe complete tables.
"""

from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass, field
from math import ceil
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from blobkl.affine_weyl import (
    AffineElement,
    DihedralForm,
    Word,
    common_level,
    dihedral_form,
    evaluate_word,
    from_dihedral,
    identity,
    sort_key,
)
from blobkl.errors import InvalidParameters, LevelMismatch, UnsupportedError
from blobkl.laurent import LaurentPoly, split_selfdual_seeded, split_selfdual_strict

__all__ = [
    "HeckeElement",
    "KLTable",
    "BasePParams",
    "is_prime",
    "mult_right_barred",
    "bott_samelson",
    "bott_samelson_bruteforce",
    "kl_char0",
    "f_p",
    "pkl_constant_terms",
    "pkl_dihedral",
    "kl_table",
    "resubstituted_coefficients",
    "clear_cache",
    "cache_size",
]

logger = logging.getLogger(__name__)

V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class BasePParams:
    """Characteristic of the coefficient field: 0 or a prime."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p != 0 and not is_prime(self.p):
            raise InvalidParameters(f"p must be 0 or a prime, got {self.p}")


class HeckeElement:
    """Finitely supported map ``AffineElement -> LaurentPoly`` (standard basis)."""

    __slots__ = ("_support", "level")

    def __init__(self, support: Optional[Dict[AffineElement, LaurentPoly]] = None, *, level: int):
        cleaned = {x: c for x, c in (support or {}).items() if c}
        found = common_level(cleaned)
        if found is not None and found != level:
            raise LevelMismatch(f"Hecke element of level {level} has keys of level {found}")
        self._support: Dict[AffineElement, LaurentPoly] = cleaned
        self.level = level

    @classmethod
    def basis(cls, x: AffineElement, coef: Optional[LaurentPoly] = None) -> "HeckeElement":
        return cls({x: coef if coef is not None else LaurentPoly.one()}, level=x.level)

    def coefficient(self, x: AffineElement) -> LaurentPoly:
        return self._support.get(x, LaurentPoly.zero())

    def support(self) -> List[AffineElement]:
        return sorted(self._support, key=sort_key)

    def items(self) -> Iterator[Tuple[AffineElement, LaurentPoly]]:
        for x in self.support():
            yield x, self._support[x]

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.level != other.level:
            raise LevelMismatch(f"cannot add Hecke elements of levels {self.level}, {other.level}")
        acc = dict(self._support)
        for x, coef in other._support.items():
            acc[x] = acc.get(x, LaurentPoly.zero()) + coef
        return HeckeElement(acc, level=self.level)

    def scale(self, coef: LaurentPoly) -> "HeckeElement":
        return HeckeElement({x: c * coef for x, c in self._support.items()}, level=self.level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.level == other.level and self._support == other._support

    def __len__(self) -> int:
        return len(self._support)

    def __repr__(self) -> str:
        body = " + ".join(f"({c.fmt()})H[{x.fmt()}]" for x, c in self.items()) or "0"
        return f"HeckeElement({body})"


@dataclass
class KLTable:
    """``rows[x] = h_{x,w}`` and ``aux[y]`` (the graded ranks) for one ``w``."""

    w: AffineElement
    p: int
    word: Word
    rows: Dict[AffineElement, LaurentPoly] = field(default_factory=dict)
    aux: Dict[AffineElement, LaurentPoly] = field(default_factory=dict)

    def h(self, x: AffineElement) -> LaurentPoly:
        return self.rows.get(x, LaurentPoly.zero())

    def sorted_rows(self) -> List[Tuple[AffineElement, LaurentPoly]]:
        return sorted(self.rows.items(), key=lambda item: sort_key(item[0]), reverse=True)

    def sorted_aux(self) -> List[Tuple[AffineElement, LaurentPoly]]:
        return [
            (y, c)
            for y, c in sorted(self.aux.items(), key=lambda item: sort_key(item[0]), reverse=True)
            if c
        ]


# ----------------------------------------------------------------------
# Bott-Samelson expansions
# ----------------------------------------------------------------------
def mult_right_barred(h: HeckeElement, i: int) -> HeckeElement:
    """Return ``h * (H_{s_i} + v)``."""
    acc: Dict[AffineElement, LaurentPoly] = {}
    zero = LaurentPoly.zero()
    for x, coef in h.items():
        xs = x.rmul_simple(i)
        up = xs.length() > x.length()
        acc[xs] = acc.get(xs, zero) + coef
        acc[x] = acc.get(x, zero) + coef * (V if up else V_INV)
    return HeckeElement(acc, level=h.level)


def bott_samelson(word: Sequence[int], l: int) -> HeckeElement:
    element = HeckeElement.basis(identity(l))
    for letter in word:
        element = mult_right_barred(element, letter)
    return element


def bott_samelson_bruteforce(word: Sequence[int], l: int) -> HeckeElement:
    """Sum ``v^deg H_end`` over all 01-sequences of the word.

    A 1 multiplies the running element by the letter; a 0 keeps it and
    contributes ``+1`` to the degree when the letter would go up, ``-1``
    otherwise.
    """
    acc: Dict[AffineElement, Dict[int, int]] = {}
    for bits in itertools.product((0, 1), repeat=len(word)):
        x = identity(l)
        degree = 0
        for letter, bit in zip(word, bits):
            xs = x.rmul_simple(letter)
            if bit:
                x = xs
            else:
                degree += 1 if xs.length() > x.length() else -1
        bucket = acc.setdefault(x, {})
        bucket[degree] = bucket.get(degree, 0) + 1
    return HeckeElement({x: LaurentPoly(terms) for x, terms in acc.items()}, level=l)


def _bar(h: HeckeElement) -> HeckeElement:
    """Bar involution on the standard basis, used by invariance checks."""
    # bar(H_x) = H_{s_a}^-1 ... H_{s_r}^-1 with H_s^-1 = H_s + v - v^-1
    shift = V - V_INV
    result = HeckeElement({}, level=h.level)
    for x, coef in h.items():
        image = HeckeElement.basis(identity(h.level))
        for letter in x.reduced_word():
            acc: Dict[AffineElement, LaurentPoly] = {}
            zero = LaurentPoly.zero()
            for y, c in image.items():
                ys = y.rmul_simple(letter)
                acc[ys] = acc.get(ys, zero) + c
                if ys.length() < y.length():
                    acc[y] = acc.get(y, zero) + c * (V_INV - V)
                acc[y] = acc.get(y, zero) + c * shift
            image = HeckeElement(acc, level=h.level)
        result = result + image.scale(coef.bar())
    return result


# ----------------------------------------------------------------------
# Base-p containment
# ----------------------------------------------------------------------
def _digits(n: int, p: int) -> List[int]:
    out: List[int] = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out


def f_p(a: int, b: int, p: int, *, zero_value: int = 1) -> int:
    """1 when ``a + 1`` contains ``b`` to base ``p``, else 0.

    Writing ``a + 1 = sum A_i p^i`` with top index ``r`` and
    ``b = sum b_i p^i`` with top index ``s``, containment means ``s < r`` and
    every ``b_i`` is ``0`` or ``A_i``. ``b = 0`` returns ``zero_value``.
    """
    if not is_prime(p):
        raise InvalidParameters(f"f_p needs a prime, got p = {p}")
    if b < 0 or a < 0:
        return 0
    if b == 0:
        return zero_value
    big = _digits(a + 1, p)
    small = _digits(b, p)
    if len(small) >= len(big):
        return 0
    return int(all(digit in (0, big[i]) for i, digit in enumerate(small)))


def _as_dihedral(w: Union[DihedralForm, AffineElement]) -> DihedralForm:
    if isinstance(w, DihedralForm):
        return w
    return dihedral_form(w)


def pkl_constant_terms(w: Union[DihedralForm, AffineElement], p: int) -> Dict[DihedralForm, int]:
    """Constant terms ``h^p_{x,w}(0)`` for ``x = (k - 2j)_side``; zero elsewhere."""
    d = _as_dihedral(w)
    if d.k < 1:
        raise InvalidParameters("p-KL constant terms need an element of length at least 1")
    out: Dict[DihedralForm, int] = {}
    for j in range(0, ceil((d.k - 2) / 2) + 1):
        out[DihedralForm(d.side, d.k - 2 * j)] = f_p(d.k - 1, j, p)
    return out


# ----------------------------------------------------------------------
# KL recursions
# ----------------------------------------------------------------------
_CACHE: Dict[Tuple[AffineElement, int], KLTable] = {}
_CACHE_LOCK = threading.Lock()
# Oldest tables are evicted first; an evicted table is recomputed on demand.
CACHE_LIMIT = 2048


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def _cached(w: AffineElement, p: int) -> Optional[KLTable]:
    return _CACHE.get((w, p))


def _store(table: KLTable) -> KLTable:
    with _CACHE_LOCK:
        key = (table.w, table.p)
        if key not in _CACHE:
            while len(_CACHE) >= CACHE_LIMIT:
                del _CACHE[next(iter(_CACHE))]
        return _CACHE.setdefault(key, table)


def cache_size() -> int:
    return len(_CACHE)


def _recurse(
    w: AffineElement,
    p: int,
    word: Word,
    seeds: Optional[Dict[AffineElement, int]],
) -> KLTable:
    bs = bott_samelson(word, w.level)
    top = bs.coefficient(w)
    if top != LaurentPoly.one():
        raise InvalidParameters(f"word {list(word)} is not a reduced word for {w.fmt()}")
    table = KLTable(w=w, p=p, word=tuple(word))
    table.rows[w] = LaurentPoly.one()
    table.aux[w] = LaurentPoly.one()
    lower = [x for x in bs.support() if x != w]
    lower.sort(key=sort_key, reverse=True)
    for x in lower:
        residual = bs.coefficient(x)
        for y, grk in table.aux.items():
            if y == w or not grk or y.length() <= x.length():
                continue
            residual = residual - grk * kl_table(y, p).h(x)
        if seeds is None:
            g, h = split_selfdual_strict(residual, require_nonnegative=True)
        else:
            g, h = split_selfdual_seeded(residual, seeds.get(x, 0), require_nonnegative=True)
        logger.debug("w=%s x=%s residual=%s aux=%s h=%s", w.fmt(), x.fmt(), residual, g, h)
        table.aux[x] = g
        if h:
            table.rows[x] = h
    logger.info("KL table for w=%s p=%d: %d rows", w.fmt(), p, len(table.rows))
    return table


def kl_char0(w: AffineElement, word: Optional[Sequence[int]] = None) -> KLTable:
    """Characteristic-zero KL table of ``w``.

    ``word`` must be reduced for ``w``; by default the greedy reduced word is
    used. The polynomials do not depend on the choice.
    """
    if word is None:
        cached = _cached(w, 0)
        if cached is not None:
            return cached
        return _store(_recurse(w, 0, w.reduced_word(), None))
    if evaluate_word(word, w.level) != w:
        raise InvalidParameters(f"word {list(word)} does not evaluate to {w.fmt()}")
    return _recurse(w, 0, tuple(word), None)


def pkl_dihedral(w: Union[DihedralForm, AffineElement], p: int) -> KLTable:
    """p-KL table in level 2, seeded by ``pkl_constant_terms``."""
    if isinstance(w, AffineElement) and w.level != 2:
        raise UnsupportedError(f"p-canonical tables exist only for level 2, got level {w.level}")
    element = w if isinstance(w, AffineElement) else from_dihedral(w)
    if p == 0:
        return kl_char0(element)
    BasePParams(p)
    if element.is_identity():
        return kl_char0(element)
    cached = _cached(element, p)
    if cached is not None:
        return cached
    seeds = {from_dihedral(d): value for d, value in pkl_constant_terms(element, p).items()}
    table = _recurse(element, p, element.reduced_word(), seeds)
    return _store(table)


def kl_table(w: AffineElement, p: int = 0) -> KLTable:
    """Dispatch to ``kl_char0`` or ``pkl_dihedral``."""
    if p == 0:
        return kl_char0(w)
    if w.level != 2:
        raise UnsupportedError(
            f"p-canonical tables for level {w.level} have no seed formula; use p = 0"
        )
    return pkl_dihedral(w, p)


def resubstituted_coefficients(table: KLTable) -> Dict[AffineElement, LaurentPoly]:
    """``sum_{x<=y<=w} aux_y h_{x,y}`` for every ``x`` in the table."""
    out: Dict[AffineElement, LaurentPoly] = {}
    zero = LaurentPoly.zero()
    for y, grk in table.aux.items():
        if not grk:
            continue
        inner = table if y == table.w else kl_table(y, table.p)
        for x, h in inner.rows.items():
            out[x] = out.get(x, zero) + grk * h
    return {x: c for x, c in out.items() if c}
