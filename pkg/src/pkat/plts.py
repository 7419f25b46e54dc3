"""Transition models over a truth-value lattice, and their file format.

A model fixes a lattice, an ordered nonempty set of states, named
program relations (total weight matrices) and named tests (one weight
per state).  A test name used inside a term denotes the subidentity
matrix carrying its per-state weights on the diagonal.  The document
format::

    {"lattice": "lukasiewicz3",
     "states": ["w1", "w2"],
     "programs": {"r": [["w1", "w2", "top", "bot"],
                        ["w2", "w1", "top", "u"]]},
     "tests": {"p": {"w1": ["top", "bot"], "w2": ["u", "bot"]}}}

Unlisted program entries and unlisted test states default to the least
weight (0, 1).  A test may also be written in the program entry form
``[u, v, tt, ff]`` provided u = v.  Interval-lattice weights are
decimal strings ("0.25").  Unknown fields and duplicate keys are
rejected.  An optional ``"test_carrier"`` field lists the values test
weights may draw from (it must include bot and top).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import CarrierError, LatticeMismatchError, ModelError
from .lattice import LatticeElem, LatticeId, bottom, elem, elem_to_json, top
from .relp import PRel, from_entries, from_diagonal
from .twist import Weight, wbot, weight_from_json, weight_to_json

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Model:
    lattice: LatticeId
    states: tuple[str, ...]
    programs: dict[str, PRel] = field(default_factory=dict)
    tests: dict[str, dict[str, Weight]] = field(default_factory=dict)
    test_carrier: tuple[LatticeElem, ...] | None = None


def valuation(m: Model, prop: str, state: str) -> Weight:
    """The stored (for, against) pair of a test at a state."""
    if prop not in m.tests:
        raise ModelError(f"unknown proposition {prop!r}")
    if state not in m.states:
        raise ModelError(f"unknown state {state!r}")
    return m.tests[prop][state]


def program_relation(m: Model, name: str) -> PRel:
    if name not in m.programs:
        raise ModelError(f"unknown program {name!r}")
    return m.programs[name]


def diagonal_relation(m: Model, name: str) -> PRel:
    """The subidentity matrix of a test."""
    if name not in m.tests:
        raise ModelError(f"unknown test {name!r}")
    return from_diagonal(m.lattice, m.states, m.tests[name])


def load_model(document: str | bytes) -> Model:
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    try:
        raw = json.loads(document, object_pairs_hook=_checked_pairs)
    except json.JSONDecodeError as exc:
        raise ModelError(f"invalid JSON: {exc}") from exc
    return model_from_dict(raw)


def _checked_pairs(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ModelError(f"duplicate key {key!r}")
        out[key] = value
    return out


def model_from_dict(raw) -> Model:
    if not isinstance(raw, dict):
        raise ModelError("a model document must be a JSON object")
    unknown = set(raw) - {"lattice", "states", "programs", "tests", "test_carrier"}
    if unknown:
        raise ModelError(f"unknown field {sorted(unknown)[0]!r}")
    if "lattice" not in raw:
        raise ModelError("missing field 'lattice'")
    if not isinstance(raw["lattice"], str):
        raise ModelError("'lattice' must be a string")
    try:
        lattice = LatticeId.from_name(raw["lattice"])
    except CarrierError as exc:
        raise ModelError(str(exc)) from exc

    states = _read_states(raw.get("states"))
    carrier = _read_test_carrier(lattice, raw.get("test_carrier"))

    programs: dict[str, PRel] = {}
    for name, entries in _named_section(raw.get("programs"), "programs").items():
        _check_name(name, programs, {})
        programs[name] = _read_program(lattice, states, name, entries)

    tests: dict[str, dict[str, Weight]] = {}
    for name, body in _named_section(raw.get("tests"), "tests").items():
        _check_name(name, programs, tests)
        tests[name] = _read_test(lattice, states, name, body, carrier)

    return Model(lattice, states, programs, tests, carrier)


def _read_states(value) -> tuple[str, ...]:
    if not isinstance(value, list) or not value:
        raise ModelError("'states' must be a nonempty array")
    seen = set()
    for s in value:
        if not isinstance(s, str) or not s:
            raise ModelError(f"state names must be nonempty strings, got {s!r}")
        if s in seen:
            raise ModelError(f"duplicate state {s!r}")
        seen.add(s)
    return tuple(value)


def _read_test_carrier(lattice, value):
    if value is None:
        return None
    if not isinstance(value, list) or not value:
        raise ModelError("'test_carrier' must be a nonempty array")
    out = []
    for item in value:
        try:
            out.append(elem(lattice, item))
        except (CarrierError, LatticeMismatchError) as exc:
            raise ModelError(f"test_carrier: {exc}") from exc
    if bottom(lattice) not in out or top(lattice) not in out:
        raise ModelError("'test_carrier' must contain bot and top")
    return tuple(out)


def _named_section(value, label) -> dict:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ModelError(f"'{label}' must be an object of named entries")
    return value


def _check_name(name, programs, tests) -> None:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ModelError(f"{name!r} is not a valid atom name")
    if name in programs or name in tests:
        raise ModelError(f"name {name!r} declared twice")


def _read_quad(lattice, states, owner, item) -> tuple[str, str, Weight]:
    if not isinstance(item, list) or len(item) != 4:
        raise ModelError(f"{owner}: entries are [from, to, tt, ff], got {item!r}")
    u, v = item[0], item[1]
    for s in (u, v):
        if s not in states:
            raise ModelError(f"{owner}: unknown state {s!r}")
    try:
        w = weight_from_json(lattice, item[2:])
    except (CarrierError, LatticeMismatchError) as exc:
        raise ModelError(f"{owner}: {exc}") from exc
    return u, v, w


def _read_program(lattice, states, name, entries) -> PRel:
    if not isinstance(entries, list):
        raise ModelError(f"program {name!r}: expected an array of entries")
    table: dict[tuple[str, str], Weight] = {}
    for item in entries:
        u, v, w = _read_quad(lattice, states, f"program {name!r}", item)
        if (u, v) in table:
            raise ModelError(f"program {name!r}: duplicate entry ({u!r}, {v!r})")
        table[(u, v)] = w
    return from_entries(lattice, states, table)


def _read_test(lattice, states, name, body, carrier) -> dict[str, Weight]:
    owner = f"test {name!r}"
    table: dict[str, Weight] = {}
    if isinstance(body, dict):
        for state, pair in body.items():
            if state not in states:
                raise ModelError(f"{owner}: unknown state {state!r}")
            try:
                table[state] = weight_from_json(lattice, pair)
            except (CarrierError, LatticeMismatchError) as exc:
                raise ModelError(f"{owner}: {exc}") from exc
    elif isinstance(body, list):
        for item in body:
            u, v, w = _read_quad(lattice, states, owner, item)
            if u != v:
                raise ModelError(
                    f"{owner}: entry ({u!r}, {v!r}) is off the diagonal"
                )
            if u in table:
                raise ModelError(f"{owner}: duplicate entry for state {u!r}")
            table[u] = w
    else:
        raise ModelError(f"{owner}: expected a state map or an entry array")
    default = wbot(lattice)
    full = {s: table.get(s, default) for s in states}
    if carrier is not None:
        for state, w in full.items():
            if w.tt not in carrier or w.ff not in carrier:
                raise ModelError(
                    f"{owner}: weight at {state!r} outside the declared test carrier"
                )
    return full


def model_to_dict(m: Model) -> dict:
    """Canonical document form with all defaults made explicit."""
    out = {
        "lattice": m.lattice.value,
        "states": list(m.states),
        "programs": {
            name: [[u, v, *weight_to_json(w)] for (u, v), w in rel.pairs()]
            for name, rel in m.programs.items()
        },
        "tests": {
            name: {s: weight_to_json(diag[s]) for s in m.states}
            for name, diag in m.tests.items()
        },
    }
    if m.test_carrier is not None:
        out["test_carrier"] = [elem_to_json(e) for e in m.test_carrier]
    return out


def model_to_text(m: Model) -> str:
    return json.dumps(model_to_dict(m), indent=2)
