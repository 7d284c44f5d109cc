"""Sparse Laurent polynomials in ``v`` with exact integer coefficients.

``LaurentPoly`` is immutable and canonical: zero coefficients are never
stored, so structural equality is polynomial equality and instances hash.
Python integers are unbounded, which keeps Bott-Samelson coefficients exact
however large they grow.

The two split helpers peel a bar-invariant part ``g`` off a polynomial ``f``
and return the remainder ``h = f - g``:

- ``split_selfdual_strict`` reads ``g`` off the non-positive exponents, so
  ``h`` lives in ``v Z[v]``. This is the characteristic-zero rule.
- ``split_selfdual_seeded`` reads ``g`` off the negative exponents and
  ``f_0 - c``, so ``h`` lives in ``Z[v]`` with constant term ``c``.

Both rules are total. With ``require_nonnegative=True`` a negative
coefficient in ``g`` or ``h`` raises ``DecompositionError``; the KL and
decomposition recursions always pass it.

Serialization is a JSON array of ``[exponent, coefficient]`` pairs sorted by
exponent; ``fmt("tex")`` renders ``v^{-1}+2+v``.
"""

from __future__ import annotations

from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from blobkl.errors import DecompositionError

__all__ = [
    "LaurentPoly",
    "add",
    "mul",
    "bar",
    "split_selfdual_strict",
    "split_selfdual_seeded",
]

Terms = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


class LaurentPoly:
    """Element of ``Z[v, v^-1]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Terms] = None) -> None:
        acc: Dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coef in items:
                if not isinstance(exp, int) or not isinstance(coef, int):
                    raise TypeError(f"LaurentPoly terms must be integers, got {exp!r}: {coef!r}")
                acc[exp] = acc.get(exp, 0) + coef
        self._terms: Tuple[Tuple[int, int], ...] = tuple(
            sorted((exp, coef) for exp, coef in acc.items() if coef != 0)
        )
        self._hash = hash(self._terms)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp: coef})

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        pairs: List[Tuple[int, int]] = []
        for pair in data:
            exp, coef = pair
            pairs.append((int(exp), int(coef)))
        return cls(pairs)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def coefficient(self, exp: int) -> int:
        for key, coef in self._terms:
            if key == exp:
                return coef
        return 0

    def constant_term(self) -> int:
        """Evaluation at ``v = 0`` for polynomials in ``Z[v]``."""
        return self.coefficient(0)

    def at_one(self) -> int:
        """Evaluation at ``v = 1``."""
        return sum(coef for _, coef in self._terms)

    def valuation(self) -> Optional[int]:
        return self._terms[0][0] if self._terms else None

    def degree(self) -> Optional[int]:
        return self._terms[-1][0] if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def has_nonnegative_coefficients(self) -> bool:
        return all(coef >= 0 for _, coef in self._terms)

    def in_positive_part(self) -> bool:
        """True when every exponent is at least one (``v Z[v]``)."""
        return all(exp >= 1 for exp, _ in self._terms)

    def in_polynomial_part(self) -> bool:
        return all(exp >= 0 for exp, _ in self._terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other: Any) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return LaurentPoly(self._terms + rhs._terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((exp, -coef) for exp, coef in self._terms)

    def __sub__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in rhs._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v^k``."""
        return LaurentPoly((exp + k, coef) for exp, coef in self._terms)

    def bar(self) -> "LaurentPoly":
        return LaurentPoly((-exp, coef) for exp, coef in self._terms)

    # ------------------------------------------------------------------
    # Protocols
    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == LaurentPoly({0: other})._terms
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.fmt()!r})"

    def __str__(self) -> str:
        return self.fmt()

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------
    def to_json(self) -> List[List[int]]:
        return [[exp, coef] for exp, coef in self._terms]

    def fmt(self, style: str = "plain") -> str:
        """Render ascending by exponent in ``plain`` or ``tex`` style."""
        if style not in ("plain", "tex"):
            raise ValueError(f"Unknown LaurentPoly format: {style!r}")
        if not self._terms:
            return "0"
        tex = style == "tex"
        joiner_plus, joiner_minus = ("+", "-") if tex else (" + ", " - ")
        out: List[str] = []
        for index, (exp, coef) in enumerate(self._terms):
            magnitude = abs(coef)
            if exp == 0:
                body = str(magnitude)
            else:
                if exp == 1:
                    power = "v"
                elif tex:
                    power = f"v^{{{exp}}}"
                else:
                    power = f"v^{exp}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if index == 0:
                out.append(f"-{body}" if coef < 0 else body)
            else:
                out.append((joiner_minus if coef < 0 else joiner_plus) + body)
        return "".join(out)


# ----------------------------------------------------------------------
# Functional surface
# ----------------------------------------------------------------------
def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def _mirror(lower: Mapping[int, int]) -> LaurentPoly:
    terms: Dict[int, int] = {}
    for exp, coef in lower.items():
        terms[exp] = coef
        if exp != 0:
            terms[-exp] = coef
    return LaurentPoly(terms)


def _check_nonnegative(f: LaurentPoly, g: LaurentPoly, h: LaurentPoly, rule: str) -> None:
    if g.has_nonnegative_coefficients() and h.has_nonnegative_coefficients():
        return
    raise DecompositionError(
        f"{rule} split of {f.fmt()} gives g = {g.fmt()}, h = {h.fmt()} with a negative coefficient",
        instance={"f": f.to_json(), "g": g.to_json(), "h": h.to_json(), "rule": rule},
    )


def split_selfdual_strict(
    f: LaurentPoly, *, require_nonnegative: bool = True
) -> Tuple[LaurentPoly, LaurentPoly]:
    """Split ``f = g + h`` with ``g`` bar-invariant and ``h`` in ``v Z[v]``.

    A negative coefficient in ``g`` or ``h`` raises ``DecompositionError``
    unless ``require_nonnegative=False``.
    """
    g = _mirror({exp: coef for exp, coef in f.items() if exp <= 0})
    h = f - g
    if not h.in_positive_part():  # pragma: no cover - guaranteed by construction
        raise DecompositionError(
            f"strict split of {f.fmt()} left {h.fmt()} outside vZ[v]",
            instance={"f": f.to_json()},
        )
    if require_nonnegative:
        _check_nonnegative(f, g, h, "strict")
    return g, h


def split_selfdual_seeded(
    f: LaurentPoly, c: int, *, require_nonnegative: bool = True
) -> Tuple[LaurentPoly, LaurentPoly]:
    """Split ``f = g + h`` with ``g`` bar-invariant, ``h`` in ``Z[v]`` and ``h(0) = c``."""
    lower = {exp: coef for exp, coef in f.items() if exp < 0}
    lower[0] = f.constant_term() - c
    g = _mirror(lower)
    h = f - g
    if not h.in_polynomial_part() or h.constant_term() != c:  # pragma: no cover
        raise DecompositionError(
            f"seeded split of {f.fmt()} with c = {c} left {h.fmt()}",
            instance={"f": f.to_json(), "c": c},
        )
    if require_nonnegative:
        _check_nonnegative(f, g, h, "seeded")
    return g, h
