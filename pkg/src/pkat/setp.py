"""Pointwise algebra of weighted sets: one weight per state.

Sum and product are the pair-join and pair-meet applied pointwise, and
the complement swaps each pair.  Because pair-meet is idempotent, every
power of a set beyond the zeroth collapses onto the set itself, so the
star of any set is the constant-TOP set; the closed form is used
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import ShapeError
from .lattice import LatticeId
from .twist import (
    Weight,
    negate,
    wbot,
    weight_from_json,
    weight_to_json,
    wjoin,
    wleq,
    wmeet,
    wtop,
)


@dataclass(frozen=True, slots=True)
class PSet:
    """A total map state -> Weight, aligned with ``states``."""

    lattice: LatticeId
    states: tuple[str, ...]
    weights: tuple[Weight, ...]

    def __post_init__(self):
        if not self.states:
            raise ShapeError("a weighted set needs a nonempty state set")
        if len(set(self.states)) != len(self.states):
            raise ShapeError("duplicate state name")
        if len(self.weights) != len(self.states):
            raise ShapeError("one weight per state required")
        for w in self.weights:
            if w.lattice is not self.lattice:
                raise ShapeError("entry weight from a different lattice")

    def value(self, state: str) -> Weight:
        try:
            return self.weights[self.states.index(state)]
        except ValueError as exc:
            raise ShapeError(f"unknown state {state!r}") from exc


def from_values(
    lattice: LatticeId, states: tuple[str, ...], values: Mapping[str, Weight]
) -> PSet:
    """Total set from a sparse map; missing states get BOT."""
    known = set(states)
    for u in values:
        if u not in known:
            raise ShapeError(f"value names unknown state {u!r}")
    default = wbot(lattice)
    return PSet(
        lattice, tuple(states), tuple(values.get(u, default) for u in states)
    )


def oslash(lattice: LatticeId, states: tuple[str, ...]) -> PSet:
    """The constant-BOT set (the least element)."""
    return PSet(lattice, tuple(states), (wbot(lattice),) * len(states))


def upsilon(lattice: LatticeId, states: tuple[str, ...]) -> PSet:
    """The constant-TOP set (the greatest element)."""
    return PSet(lattice, tuple(states), (wtop(lattice),) * len(states))


def _require_compat(a: PSet, b: PSet) -> None:
    if a.lattice is not b.lattice:
        raise ShapeError(
            f"cannot combine {a.lattice.value} with {b.lattice.value} sets"
        )
    if a.states != b.states:
        raise ShapeError("sets range over different state spaces")


def s_plus(a: PSet, b: PSet) -> PSet:
    _require_compat(a, b)
    return PSet(
        a.lattice, a.states, tuple(wjoin(x, y) for x, y in zip(a.weights, b.weights))
    )


def s_dot(a: PSet, b: PSet) -> PSet:
    _require_compat(a, b)
    return PSet(
        a.lattice, a.states, tuple(wmeet(x, y) for x, y in zip(a.weights, b.weights))
    )


def s_complement(a: PSet) -> PSet:
    return PSet(a.lattice, a.states, tuple(negate(w) for w in a.weights))


def s_star(a: PSet) -> PSet:
    # The zeroth power is the constant-TOP set and TOP absorbs joins.
    return upsilon(a.lattice, a.states)


def s_subset(a: PSet, b: PSet) -> bool:
    _require_compat(a, b)
    return all(wleq(x, y) for x, y in zip(a.weights, b.weights))


def pset_to_json(a: PSet) -> dict:
    """Same shape as a test valuation in the model file format."""
    return {s: weight_to_json(w) for s, w in zip(a.states, a.weights)}


def pset_from_json(lattice: LatticeId, states: tuple[str, ...], obj) -> PSet:
    if not isinstance(obj, dict):
        raise ShapeError(f"expected a state-to-weight map, got {obj!r}")
    return from_values(
        lattice, states, {s: weight_from_json(lattice, pair) for s, pair in obj.items()}
    )
