"""Shared test fixtures: value shortcuts, independent oracles, generators.

Oracles here are written from the definitions (dict matrices, plain
set relations, pointwise folds) so library shortcuts are checked
against a second route.
"""

from __future__ import annotations

import random
from fractions import Fraction

from pkat.lattice import LatticeId, elem
from pkat.syntax import Atom, Dot, Not, One, Plus, Star, Term, Zero
from pkat.twist import Weight, weight, wbot, wjoin, wmeet, wtop

L3 = LatticeId.LUKASIEWICZ3
B2 = LatticeId.BOOL2
GD = LatticeId.GODEL

BOT = elem(L3, "bot")
U = elem(L3, "u")
TOP = elem(L3, "top")

LUKA_ELEMS = (BOT, U, TOP)
LUKA_WEIGHTS = tuple(Weight(t, f) for t in LUKA_ELEMS for f in LUKA_ELEMS)


def lw(tt: str, ff: str) -> Weight:
    return weight(L3, tt, ff)


def gw(tt, ff) -> Weight:
    return weight(GD, tt, ff)


def random_godel_elem(rng: random.Random, max_denominator: int = 16):
    d = rng.randint(1, max_denominator)
    return elem(GD, Fraction(rng.randint(0, d), d))


# --- dict-matrix oracle (independent of the PRel composition path) ---------


def dict_matrix(rel) -> dict:
    return {pair: w for pair, w in rel.pairs()}


def oracle_dot(states, a: dict, b: dict, lattice) -> dict:
    out = {}
    for u in states:
        for v in states:
            acc = wbot(lattice)
            for w in states:
                acc = wjoin(acc, wmeet(a[(u, w)], b[(w, v)]))
            out[(u, v)] = acc
    return out


def oracle_identity(states, lattice) -> dict:
    t, b = wtop(lattice), wbot(lattice)
    return {(u, v): t if u == v else b for u in states for v in states}


def oracle_star(states, a: dict, lattice, max_power: int) -> dict:
    """Join of matrix powers 0..max_power, straight from the definition."""
    acc = oracle_identity(states, lattice)
    power = oracle_identity(states, lattice)
    for _ in range(max_power):
        power = oracle_dot(states, a, power, lattice)
        acc = {k: wjoin(acc[k], power[k]) for k in acc}
    return acc


# --- ordinary binary-relation oracle (classical embedding) ------------------


def classical_eval(term: Term, states, programs: dict, tests: dict) -> frozenset:
    """Evaluate with plain set relations: union / composition / closure.

    programs: name -> set of (u, v); tests: name -> set of satisfying
    states.  Returns a set of pairs.
    """
    full_identity = frozenset((u, u) for u in states)

    def walk(t):
        match t:
            case Zero():
                return frozenset()
            case One():
                return full_identity
            case Atom(name):
                if name in programs:
                    return frozenset(programs[name])
                return frozenset((u, u) for u in tests[name])
            case Plus(left, right):
                return walk(left) | walk(right)
            case Dot(left, right):
                lhs, rhs = walk(left), walk(right)
                return frozenset(
                    (u, w) for (u, v1) in lhs for (v2, w) in rhs if v1 == v2
                )
            case Star(inner):
                base = walk(inner)
                closure = full_identity
                while True:
                    step = frozenset(
                        (u, w)
                        for (u, v1) in closure
                        for (v2, w) in base
                        if v1 == v2
                    )
                    nxt = closure | step
                    if nxt == closure:
                        return closure
                    closure = nxt
            case Not(inner):
                return full_identity - walk(inner)

    return walk(term)


def prel_to_set(rel) -> frozenset:
    """Classical relation of a {TOP, BOT}-valued matrix."""
    t, b = wtop(rel.lattice), wbot(rel.lattice)
    out = set()
    for (u, v), w in rel.pairs():
        assert w in (t, b), f"non-classical entry {w!r}"
        if w == t:
            out.add((u, v))
    return frozenset(out)


# --- random term generators --------------------------------------------------


def random_any_term(rng: random.Random, depth: int, names=("p", "q", "a", "b")) -> Term:
    """Arbitrary tree (sorts ignored); used for parser round-trips."""
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(
            [Zero(), One()] + [Atom(n) for n in names]
        )
    kind = rng.randrange(4)
    if kind == 0:
        return Plus(random_any_term(rng, depth - 1, names), random_any_term(rng, depth - 1, names))
    if kind == 1:
        return Dot(random_any_term(rng, depth - 1, names), random_any_term(rng, depth - 1, names))
    if kind == 2:
        return Star(random_any_term(rng, depth - 1, names))
    return Not(random_any_term(rng, depth - 1, names))


def random_sorted_term(
    rng: random.Random, depth: int, programs, tests, want_test: bool = False
) -> Term:
    """Well-sorted tree: negation only ever wraps test-sorted subterms."""
    if depth == 0 or rng.random() < 0.3:
        pool = [Zero(), One()] + [Atom(n) for n in tests]
        if not want_test:
            pool += [Atom(n) for n in programs]
        return rng.choice(pool)
    kind = rng.randrange(4)
    if kind == 0:
        return Plus(
            random_sorted_term(rng, depth - 1, programs, tests, want_test),
            random_sorted_term(rng, depth - 1, programs, tests, want_test),
        )
    if kind == 1:
        return Dot(
            random_sorted_term(rng, depth - 1, programs, tests, want_test),
            random_sorted_term(rng, depth - 1, programs, tests, want_test),
        )
    if kind == 2 and not want_test:
        return Star(random_sorted_term(rng, depth - 1, programs, tests, False))
    return Not(random_sorted_term(rng, depth - 1, programs, tests, True))
