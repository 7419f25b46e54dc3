"""Evidence pairs over a truth-value lattice.

A weight couples evidence for (``tt``) and evidence against (``ff``) an
assertion or a transition.  Pairs are ordered by

    (a, a') <= (b, b')   iff   a <= b  and  a' >= b'

(more support, less opposition).  Join and meet act componentwise, with
the against-side handled dually, and the involution swaps the two
components.  TOP = (1, 0) and BOT = (0, 1) bound the order.

The two evidences are independent: comparing their sum with 1 places a
pair on the vagueness/inconsistency square.  Complementary evidence
(sum exactly 1) is consistent; missing evidence (sum below 1) is vague;
contradicting evidence (sum above 1) is inconsistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import LatticeMismatchError
from .lattice import (
    ElemLike,
    LatticeElem,
    LatticeId,
    bottom,
    elem,
    elem_to_json,
    elem_to_text,
    join,
    leq,
    meet,
    top,
)


@dataclass(frozen=True, slots=True)
class Weight:
    """Evidence for and against, drawn from one lattice."""

    tt: LatticeElem
    ff: LatticeElem

    def __post_init__(self):
        if self.tt.lattice is not self.ff.lattice:
            raise LatticeMismatchError(
                "both components of a weight must share a lattice"
            )

    @property
    def lattice(self) -> LatticeId:
        return self.tt.lattice

    def __repr__(self):
        return f"<{format_weight(self)}>"


class ConsistencyClass(Enum):
    CONSISTENT = "consistent"
    VAGUE = "vague"
    INCONSISTENT = "inconsistent"
    UNCLASSIFIED = "unclassified"


def weight(lattice: LatticeId, tt: ElemLike, ff: ElemLike) -> Weight:
    return Weight(elem(lattice, tt), elem(lattice, ff))


def wtop(lattice: LatticeId) -> Weight:
    """Full evidence for, none against: the greatest weight."""
    return Weight(top(lattice), bottom(lattice))


def wbot(lattice: LatticeId) -> Weight:
    """No evidence for, full evidence against: the least weight."""
    return Weight(bottom(lattice), top(lattice))


def _require_same(x: Weight, y: Weight) -> None:
    if x.lattice is not y.lattice:
        raise LatticeMismatchError(
            f"cannot combine {x.lattice.value} with {y.lattice.value} weights"
        )


def wjoin(x: Weight, y: Weight) -> Weight:
    """Componentwise: join the support, meet the opposition."""
    _require_same(x, y)
    return Weight(join(x.tt, y.tt), meet(x.ff, y.ff))


def wmeet(x: Weight, y: Weight) -> Weight:
    """Componentwise: meet the support, join the opposition."""
    _require_same(x, y)
    return Weight(meet(x.tt, y.tt), join(x.ff, y.ff))


def negate(x: Weight) -> Weight:
    """Swap evidence for with evidence against (an involution)."""
    return Weight(x.ff, x.tt)


def wleq(x: Weight, y: Weight) -> bool:
    _require_same(x, y)
    return leq(x.tt, y.tt) and leq(y.ff, x.ff)


def big_wjoin(lattice: LatticeId, weights: Iterable[Weight]) -> Weight:
    out = wbot(lattice)
    for w in weights:
        out = wjoin(out, w)
    return out


def classify(x: Weight) -> ConsistencyClass:
    """Place a weight on the vagueness/inconsistency square.

    All built-in lattices embed into [0, 1] (the chain as 0, 1/2, 1),
    so the classification compares tt + ff with 1.  Weights from a
    lattice without such an embedding would be unclassified.
    """
    if x.lattice not in LatticeId:
        return ConsistencyClass.UNCLASSIFIED
    total = x.tt.value + x.ff.value
    if total > 1:
        return ConsistencyClass.INCONSISTENT
    if total < 1:
        return ConsistencyClass.VAGUE
    return ConsistencyClass.CONSISTENT


def format_weight(x: Weight, unicode: bool = False) -> str:
    return f"({elem_to_text(x.tt, unicode)},{elem_to_text(x.ff, unicode)})"


def weight_to_json(x: Weight) -> list:
    return [elem_to_json(x.tt), elem_to_json(x.ff)]


def weight_from_json(lattice: LatticeId, value) -> Weight:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise LatticeMismatchError(
            f"a weight is a two-element [tt, ff] array, got {value!r}"
        )
    return weight(lattice, value[0], value[1])
