"""Truth-value lattices: complete Heyting algebras on linear carriers.

Three instances are provided, all linearly ordered: the two-element
Boolean algebra, the three-valued chain bot < u < top, and the unit
interval under min/max.  Every value is held as an exact ``Fraction``
so equality and order are decidable; interval values parsed from
decimal strings stay exact.

On a chain, meet and join are min and max, and the residuum of meet is

    a -> b  =  1  if a <= b,  else  b

which is the greatest c with meet(a, c) <= b.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .errors import CarrierError, LatticeMismatchError

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)
_ONE = Fraction(1)


class LatticeId(Enum):
    """Selects one of the built-in truth-value lattices."""

    BOOL2 = "bool2"
    LUKASIEWICZ3 = "lukasiewicz3"
    GODEL = "godel"

    @classmethod
    def from_name(cls, name: str) -> "LatticeId":
        for member in cls:
            if member.value == name:
                return member
        raise CarrierError(f"unknown lattice {name!r}")


@dataclass(frozen=True, slots=True)
class LatticeElem:
    """A truth value tagged with the lattice it belongs to."""

    lattice: LatticeId
    value: Fraction

    def __post_init__(self):
        v = self.value
        if not isinstance(v, Fraction):
            raise CarrierError(f"lattice values must be exact rationals, got {v!r}")
        if self.lattice is LatticeId.BOOL2:
            if v != _ZERO and v != _ONE:
                raise CarrierError(f"{_fraction_text(v)!r} is not a Boolean value")
        elif self.lattice is LatticeId.LUKASIEWICZ3:
            if v not in (_ZERO, _HALF, _ONE):
                raise CarrierError(
                    f"{_fraction_text(v)!r} is not one of bot, u, top"
                )
        elif not (_ZERO <= v <= _ONE):
            raise CarrierError(f"{_fraction_text(v)} lies outside [0, 1]")

    def __repr__(self):
        return f"<{self.lattice.value}:{elem_to_text(self)}>"


ElemLike = Union[LatticeElem, Fraction, int, str]

# Text spellings accepted for the bounds in every lattice.
_BOUND_TEXT = {"bot": _ZERO, "top": _ONE, "⊥": _ZERO, "⊤": _ONE}


def elem(lattice: LatticeId, value: ElemLike) -> LatticeElem:
    """Build an element from text, an int, or an exact rational."""
    if isinstance(value, LatticeElem):
        if value.lattice is not lattice:
            raise LatticeMismatchError(
                f"{value!r} does not belong to {lattice.value}"
            )
        return value
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, float):
        raise CarrierError(
            f"refusing inexact float {value!r}; pass a decimal string instead"
        )
    if isinstance(value, str):
        return _elem_from_text(lattice, value)
    return LatticeElem(lattice, Fraction(value))


def _elem_from_text(lattice: LatticeId, text: str) -> LatticeElem:
    text = text.strip()
    if text in _BOUND_TEXT:
        return LatticeElem(lattice, _BOUND_TEXT[text])
    if lattice is LatticeId.BOOL2:
        if text in ("0", "1"):
            return LatticeElem(lattice, Fraction(int(text)))
        raise CarrierError(f"{text!r} is not a Boolean value (use 0 or 1)")
    if lattice is LatticeId.LUKASIEWICZ3:
        if text == "u":
            return LatticeElem(lattice, _HALF)
        raise CarrierError(f"{text!r} is not one of bot, u, top")
    try:
        return LatticeElem(lattice, Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise CarrierError(f"{text!r} is not a decimal or rational in [0, 1]") from exc


_BOTTOMS = {lid: LatticeElem(lid, _ZERO) for lid in LatticeId}
_TOPS = {lid: LatticeElem(lid, _ONE) for lid in LatticeId}


def bottom(lattice: LatticeId) -> LatticeElem:
    return _BOTTOMS[lattice]


def top(lattice: LatticeId) -> LatticeElem:
    return _TOPS[lattice]


def carrier(lattice: LatticeId) -> tuple[LatticeElem, ...]:
    """All elements of a finite lattice, in ascending order."""
    if lattice is LatticeId.BOOL2:
        return (bottom(lattice), top(lattice))
    if lattice is LatticeId.LUKASIEWICZ3:
        return (bottom(lattice), LatticeElem(lattice, _HALF), top(lattice))
    raise CarrierError("the interval lattice has no finite carrier; pick a grid")


def _require_same(a: LatticeElem, b: LatticeElem) -> None:
    if a.lattice is not b.lattice:
        raise LatticeMismatchError(
            f"cannot combine {a.lattice.value} with {b.lattice.value}"
        )


def meet(a: LatticeElem, b: LatticeElem) -> LatticeElem:
    """Greatest lower bound (min on the chain)."""
    _require_same(a, b)
    return a if a.value <= b.value else b


def join(a: LatticeElem, b: LatticeElem) -> LatticeElem:
    """Least upper bound (max on the chain)."""
    _require_same(a, b)
    return b if a.value <= b.value else a


def leq(a: LatticeElem, b: LatticeElem) -> bool:
    _require_same(a, b)
    return a.value <= b.value


def implies(a: LatticeElem, b: LatticeElem) -> LatticeElem:
    """Residuum of meet: the greatest c with meet(a, c) <= b."""
    _require_same(a, b)
    return top(a.lattice) if a.value <= b.value else b


def big_join(lattice: LatticeId, elems: Iterable[LatticeElem]) -> LatticeElem:
    """Supremum of a finite set; empty set gives the bottom."""
    out = bottom(lattice)
    for e in elems:
        out = join(out, e)
    return out


def big_meet(lattice: LatticeId, elems: Iterable[LatticeElem]) -> LatticeElem:
    """Infimum of a finite set; empty set gives the top."""
    out = top(lattice)
    for e in elems:
        out = meet(out, e)
    return out


def _fraction_text(q: Fraction) -> str:
    """Exact decimal when the denominator divides a power of ten, else n/d."""
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    k = max(twos, fives)
    digits = str(q.numerator * 10**k // q.denominator).rjust(k + 1, "0")
    return digits if k == 0 else f"{digits[:-k]}.{digits[-k:]}"


def elem_to_text(e: LatticeElem, unicode: bool = False) -> str:
    if e.lattice is LatticeId.BOOL2:
        return "1" if e.value == _ONE else "0"
    if e.lattice is LatticeId.LUKASIEWICZ3:
        if e.value == _HALF:
            return "u"
        if e.value == _ONE:
            return "⊤" if unicode else "top"
        return "⊥" if unicode else "bot"
    return _fraction_text(e.value)


def elem_to_json(e: LatticeElem) -> int | str:
    """JSON form: Boolean values as 0/1 numbers, everything else as text."""
    if e.lattice is LatticeId.BOOL2:
        return int(e.value)
    return elem_to_text(e)
