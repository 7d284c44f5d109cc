"""Affine Weyl group of type A~_{l-1} in window notation.

An element is the affine permutation ``w`` of the integers with
``w(i + l) = w(i) + l``, stored as its window ``(w(1), ..., w(l))``. The
window sums to ``l(l+1)/2`` and its residues mod ``l`` are a permutation.

Generators: ``s_i`` for ``1 <= i < l`` swaps ``i`` and ``i+1``; ``s_0`` sends
``1 -> 0`` and ``l -> l+1``. Right multiplication by ``s_i`` swaps window
positions, so words are evaluated left to right by successive swaps.

For ``l = 2`` the letters ``s = s_1`` and ``t = s_0`` give every element a
unique alternating reduced word. ``DihedralForm`` records it as
``(side, k)``; ``k_s`` starts with ``s`` on the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from blobkl.errors import InvalidParameters, LevelMismatch

__all__ = [
    "AffineElement",
    "DihedralForm",
    "Word",
    "simple",
    "identity",
    "mult",
    "length",
    "bruhat_leq",
    "dihedral_form",
    "from_dihedral",
    "evaluate_word",
    "parse_word",
    "format_word",
    "parse_element",
    "sort_key",
    "common_level",
]

Word = Tuple[int, ...]


@dataclass(frozen=True)
class AffineElement:
    window: Tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        l = len(window)
        if l < 1:
            raise InvalidParameters("AffineElement window cannot be empty")
        if sum(window) != l * (l + 1) // 2:
            raise InvalidParameters(f"window {list(window)} does not sum to {l * (l + 1) // 2}")
        if sorted(value % l for value in window) != list(range(l)):
            raise InvalidParameters(f"window {list(window)} is not a permutation mod {l}")

    # ------------------------------------------------------------------
    # Basic structure
    # ------------------------------------------------------------------
    @property
    def level(self) -> int:
        return len(self.window)

    def __call__(self, j: int) -> int:
        q, r = divmod(j - 1, self.level)
        return self.window[r] + q * self.level

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return mult(self, other)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.level + 1))

    def inverse(self) -> "AffineElement":
        l = self.level
        inv = [0] * l
        for i, value in enumerate(self.window, start=1):
            q, r = divmod(value - 1, l)
            inv[r] = i - q * l
        return AffineElement(tuple(inv))

    def length(self) -> int:
        l = self.level
        w = self.window
        total = 0
        for i in range(l):
            for j in range(i + 1, l):
                total += abs((w[j] - w[i]) // l)
        return total

    # ------------------------------------------------------------------
    # Descents and multiplication by generators
    # ------------------------------------------------------------------
    def _check_generator(self, i: int) -> None:
        if not 0 <= i < self.level:
            raise IndexError(f"generator s{i} does not exist in level {self.level}")

    def is_right_descent(self, i: int) -> bool:
        self._check_generator(i)
        if i == 0:
            return self(0) > self(1)
        return self(i) > self(i + 1)

    def is_left_descent(self, i: int) -> bool:
        return self.inverse().is_right_descent(i)

    def right_descents(self) -> List[int]:
        return [i for i in range(self.level) if self.is_right_descent(i)]

    def left_descents(self) -> List[int]:
        inv = self.inverse()
        return [i for i in range(self.level) if inv.is_right_descent(i)]

    def rmul_simple(self, i: int) -> "AffineElement":
        """Return ``w s_i``."""
        self._check_generator(i)
        l = self.level
        window = list(self.window)
        if i == 0:
            first, last = window[0], window[-1]
            window[0] = last - l
            window[-1] = first + l
        else:
            window[i - 1], window[i] = window[i], window[i - 1]
        return AffineElement(tuple(window))

    def lmul_simple(self, i: int) -> "AffineElement":
        """Return ``s_i w``."""
        return mult(simple(i, self.level), self)

    def reduced_word(self) -> Word:
        """Greedy reduced word, peeling the smallest right descent each step."""
        letters: List[int] = []
        current = self
        while not current.is_identity():
            i = current.right_descents()[0]
            letters.append(i)
            current = current.rmul_simple(i)
        return tuple(reversed(letters))

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------
    def fmt(self) -> str:
        if self.level == 2:
            return str(dihedral_form(self))
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def __str__(self) -> str:
        return self.fmt()


@dataclass(frozen=True)
class DihedralForm:
    side: str
    k: int

    def __post_init__(self) -> None:
        if self.side not in ("s", "t", "e"):
            raise InvalidParameters(f"dihedral side must be s, t or e, got {self.side!r}")
        if self.k < 0:
            raise InvalidParameters(f"dihedral length must be nonnegative, got {self.k}")
        if (self.k == 0) != (self.side == "e"):
            raise InvalidParameters(f"dihedral form ({self.side}, {self.k}) is inconsistent")

    @classmethod
    def parse(cls, text: str) -> "DihedralForm":
        text = text.strip()
        if text == "e":
            return cls("e", 0)
        match = re.fullmatch(r"(\d+)([st])", text)
        if not match:
            raise InvalidParameters(f"cannot parse dihedral element {text!r}")
        k = int(match.group(1))
        return cls(match.group(2) if k else "e", k)

    def word(self) -> Word:
        if self.k == 0:
            return ()
        first = 1 if self.side == "s" else 0
        return tuple(first if index % 2 == 0 else 1 - first for index in range(self.k))

    def __str__(self) -> str:
        return "e" if self.k == 0 else f"{self.k}{self.side}"


# ----------------------------------------------------------------------
# Functional surface
# ----------------------------------------------------------------------
def identity(l: int) -> AffineElement:
    return AffineElement(tuple(range(1, l + 1)))


def simple(i: int, l: int) -> AffineElement:
    if not 0 <= i < l:
        raise IndexError(f"generator s{i} does not exist in level {l}")
    return identity(l).rmul_simple(i)


def mult(a: AffineElement, b: AffineElement) -> AffineElement:
    if a.level != b.level:
        raise LevelMismatch(f"cannot multiply elements of levels {a.level} and {b.level}")
    return AffineElement(tuple(a(b(i)) for i in range(1, a.level + 1)))


def length(x: AffineElement) -> int:
    return x.length()


def evaluate_word(word: Iterable[int], l: int) -> AffineElement:
    element = identity(l)
    for letter in word:
        element = element.rmul_simple(letter)
    return element


@lru_cache(maxsize=8192)
def _bruhat_leq_generic(x: AffineElement, w: AffineElement) -> bool:
    if x == w:
        return True
    lx, lw = x.length(), w.length()
    if lx >= lw:
        return False
    if lx == 0:
        return True
    s = w.left_descents()[0]
    sw = w.lmul_simple(s)
    sx = x.lmul_simple(s)
    if sx.length() < lx:
        return _bruhat_leq_generic(sx, sw)
    return _bruhat_leq_generic(x, sw)


def bruhat_leq(x: AffineElement, w: AffineElement) -> bool:
    """Bruhat comparison ``x <= w``; level 2 uses the closed dihedral rule."""
    if x.level != w.level:
        raise LevelMismatch(f"cannot compare elements of levels {x.level} and {w.level}")
    if x.level == 2:
        dx, dw = dihedral_form(x), dihedral_form(w)
        return dx.k < dw.k or (dx.k == dw.k and dx.side == dw.side)
    return _bruhat_leq_generic(x, w)


def dihedral_form(x: AffineElement) -> DihedralForm:
    if x.level != 2:
        raise LevelMismatch(f"dihedral form needs level 2, got level {x.level}")
    k = x.length()
    if k == 0:
        return DihedralForm("e", 0)
    return DihedralForm("s" if x.is_left_descent(1) else "t", k)


def from_dihedral(d: DihedralForm) -> AffineElement:
    return evaluate_word(d.word(), 2)


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------
def parse_word(text: str, l: int) -> Word:
    """Parse ``"s1 s3 s0"``, compact ``"130"`` or, for level 2, ``"sts"``."""
    text = text.strip()
    if not text or text == "e":
        return ()
    if l == 2 and re.fullmatch(r"[st]+", text):
        letters = [1 if ch == "s" else 0 for ch in text]
    elif re.fullmatch(r"(s\d+[\s,]*)+", text):
        letters = [int(tok) for tok in re.findall(r"s(\d+)", text)]
    elif re.fullmatch(r"\d+", text):
        letters = [int(ch) for ch in text]
    else:
        raise InvalidParameters(f"cannot parse word {text!r}")
    for letter in letters:
        if letter >= l:
            raise InvalidParameters(f"letter s{letter} does not exist in level {l}")
    return tuple(letters)


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{letter}" for letter in word)


def parse_element(text: str, l: int) -> AffineElement:
    """Parse a dihedral name (``5s``, ``e``), a window ``[2,1,3,4]`` or a word."""
    text = text.strip()
    if text.startswith("["):
        if not re.fullmatch(r"\[\s*-?\d+(\s*,\s*-?\d+)*\s*\]", text):
            raise InvalidParameters(f"--w {text!r} is not a window of integers like [2,1,3]")
        values = [int(tok) for tok in text[1:-1].split(",")]
        if len(values) != l:
            raise LevelMismatch(f"window {text} has {len(values)} entries, expected {l}")
        return AffineElement(tuple(values))
    if l == 2 and re.fullmatch(r"\d+[st]|e", text):
        return from_dihedral(DihedralForm.parse(text))
    return evaluate_word(parse_word(text, l), l)


def sort_key(x: AffineElement) -> Tuple[int, str]:
    return (x.length(), x.fmt())


def common_level(elements: Iterable[AffineElement]) -> Optional[int]:
    levels = {el.level for el in elements}
    if len(levels) > 1:
        raise LevelMismatch(f"elements span several levels: {sorted(levels)}")
    return levels.pop() if levels else None
