"""Weight matrices over a state space: the relational program algebra.

A relation assigns a weight to every ordered pair of states (stored
row-major).  Addition is entrywise pair-join; composition aggregates
pair-meets over intermediate states; star is the least solution of
``S = 1 + R.S``, reached by iteration from the identity in at most
|W| + 1 rounds -- a longer path only loses evidence, so matrix powers
beyond |W| add nothing to the join.

Tests are the subidentity matrices: everything off the diagonal is the
least weight.  Complementing a test swaps evidence on the diagonal
only, which keeps the result subidentity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .errors import ShapeError, SortError
from .lattice import LatticeId
from .twist import Weight, format_weight, negate, weight_to_json, wbot, wjoin, wleq, wmeet, wtop


@dataclass(frozen=True, slots=True)
class PRel:
    """A total map (state, state) -> Weight, row-major over ``states``."""

    lattice: LatticeId
    states: tuple[str, ...]
    weights: tuple[Weight, ...]

    def __post_init__(self):
        n = len(self.states)
        if n == 0:
            raise ShapeError("a relation needs a nonempty state set")
        if len(set(self.states)) != n:
            raise ShapeError("duplicate state name")
        if len(self.weights) != n * n:
            raise ShapeError(
                f"expected {n * n} entries for {n} states, got {len(self.weights)}"
            )
        for w in self.weights:
            if w.lattice is not self.lattice:
                raise ShapeError("entry weight from a different lattice")

    def entry(self, u: str, v: str) -> Weight:
        n = len(self.states)
        try:
            i = self.states.index(u)
            j = self.states.index(v)
        except ValueError as exc:
            raise ShapeError(f"unknown state in ({u!r}, {v!r})") from exc
        return self.weights[i * n + j]

    def pairs(self) -> Iterator[tuple[tuple[str, str], Weight]]:
        n = len(self.states)
        for i, u in enumerate(self.states):
            for j, v in enumerate(self.states):
                yield (u, v), self.weights[i * n + j]


def build(
    lattice: LatticeId, states: tuple[str, ...], fn: Callable[[str, str], Weight]
) -> PRel:
    return PRel(
        lattice, tuple(states), tuple(fn(u, v) for u in states for v in states)
    )


def from_entries(
    lattice: LatticeId,
    states: tuple[str, ...],
    entries: Mapping[tuple[str, str], Weight],
) -> PRel:
    """Total relation from a sparse entry map; missing pairs get BOT."""
    known = set(states)
    for u, v in entries:
        if u not in known or v not in known:
            raise ShapeError(f"entry ({u!r}, {v!r}) names an unknown state")
    default = wbot(lattice)
    return build(lattice, tuple(states), lambda u, v: entries.get((u, v), default))


def identity(lattice: LatticeId, states: tuple[str, ...]) -> PRel:
    t, b = wtop(lattice), wbot(lattice)
    return build(lattice, tuple(states), lambda u, v: t if u == v else b)


def zero(lattice: LatticeId, states: tuple[str, ...]) -> PRel:
    b = wbot(lattice)
    return build(lattice, tuple(states), lambda u, v: b)


def _require_compat(r: PRel, s: PRel) -> None:
    if r.lattice is not s.lattice:
        raise ShapeError(
            f"cannot combine {r.lattice.value} with {s.lattice.value} relations"
        )
    if r.states != s.states:
        raise ShapeError("relations range over different state spaces")


def r_plus(r: PRel, s: PRel) -> PRel:
    _require_compat(r, s)
    return PRel(
        r.lattice, r.states, tuple(wjoin(x, y) for x, y in zip(r.weights, s.weights))
    )


def r_dot(r: PRel, s: PRel) -> PRel:
    _require_compat(r, s)
    n = len(r.states)
    rw, sw = r.weights, s.weights
    b = wbot(r.lattice)
    out = []
    for i in range(n):
        row = i * n
        for j in range(n):
            acc = b
            for k in range(n):
                acc = wjoin(acc, wmeet(rw[row + k], sw[k * n + j]))
            out.append(acc)
    return PRel(r.lattice, r.states, tuple(out))


def r_star(r: PRel) -> PRel:
    result, _ = r_star_steps(r)
    return result


def r_star_steps(r: PRel) -> tuple[PRel, int]:
    """Star together with the number of fixpoint rounds taken."""
    ident = identity(r.lattice, r.states)
    current = ident
    for step in range(1, len(r.states) + 2):
        nxt = r_plus(ident, r_dot(r, current))
        if nxt == current:
            return current, step
        current = nxt
    raise RuntimeError(
        "star iteration failed to stabilize within |W| + 1 rounds"
    )


def r_leq(r: PRel, s: PRel) -> bool:
    _require_compat(r, s)
    return all(wleq(x, y) for x, y in zip(r.weights, s.weights))


def is_test(r: PRel) -> bool:
    """True when every off-diagonal entry is the least weight."""
    n = len(r.states)
    b = wbot(r.lattice)
    return all(
        r.weights[i * n + j] == b for i in range(n) for j in range(n) if i != j
    )


def t_complement(t: PRel) -> PRel:
    """Swap evidence on the diagonal; off-diagonal entries stay BOT."""
    if not is_test(t):
        raise SortError("complement is defined on tests (subidentity relations)")
    n = len(t.states)
    out = list(t.weights)
    for i in range(n):
        out[i * n + i] = negate(out[i * n + i])
    return PRel(t.lattice, t.states, tuple(out))


def from_diagonal(
    lattice: LatticeId, states: tuple[str, ...], diagonal: Mapping[str, Weight]
) -> PRel:
    known = set(states)
    for u in diagonal:
        if u not in known:
            raise ShapeError(f"diagonal entry names unknown state {u!r}")
    b = wbot(lattice)
    return build(
        lattice,
        tuple(states),
        lambda u, v: diagonal.get(u, b) if u == v else b,
    )


def prel_to_entries(r: PRel) -> list[list]:
    """Every entry as [u, v, tt, ff], row-major (defaults made explicit)."""
    return [[u, v, *weight_to_json(w)] for (u, v), w in r.pairs()]


def format_prel(r: PRel, unicode: bool = False) -> str:
    """Aligned matrix with one weight pair per entry."""
    n = len(r.states)
    cells = [format_weight(w, unicode) for w in r.weights]
    widths = [
        max(len(r.states[j]), max(len(cells[i * n + j]) for i in range(n)))
        for j in range(n)
    ]
    label = max(len(s) for s in r.states)
    lines = [
        " " * label
        + "  "
        + "  ".join(s.ljust(widths[j]) for j, s in enumerate(r.states))
    ]
    for i, u in enumerate(r.states):
        row = "  ".join(cells[i * n + j].ljust(widths[j]) for j in range(n))
        lines.append(u.ljust(label) + "  " + row)
    return "\n".join(line.rstrip() for line in lines)
