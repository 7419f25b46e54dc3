"""Command-line front end: evaluate terms, check axioms, compare programs.

Exit codes: 0 success / property holds, 1 a checked property fails
(witness printed), 2 usage or term error, 3 model or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .engine import (
    BOOLEAN_AXIOMS,
    CORE_AXIOMS,
    Status,
    Verdict,
    axiom_formula,
    check_axiom,
    equiv,
    equiv_random,
    evaluate,
    find_boolean_witness,
    hoare_check,
    verdict_to_dict,
)
from .errors import (
    CarrierError,
    EngineError,
    LatticeMismatchError,
    ModelError,
    ParseError,
    ShapeError,
    SortError,
)
from .lattice import LatticeId
from .plts import diagonal_relation, load_model, model_to_dict, program_relation
from .relp import PRel, format_prel, prel_to_entries, r_star_steps
from .syntax import parse, pretty
from .twist import classify, format_weight


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        return _fail(f"term error: {exc}", 2)
    except SortError as exc:
        return _fail(f"sort error: {exc}", 2)
    except EngineError as exc:
        return _fail(f"engine error: {exc}", 2)
    except (ModelError, CarrierError, ShapeError, LatticeMismatchError) as exc:
        return _fail(f"model error: {exc}", 3)
    except OSError as exc:
        return _fail(f"model error: {exc}", 3)


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pkat",
        description="Evaluate and verify guarded programs weighted by "
        "evidence pairs over a truth-value lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--unicode", action="store_true", help="print top/bot as symbols")

    p = sub.add_parser("eval", help="interpret a term over a model")
    p.add_argument("--model", required=True)
    p.add_argument("--term", required=True)
    common(p)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("star", help="star of a named program relation")
    p.add_argument("--model", required=True)
    p.add_argument("--program", required=True)
    common(p)
    p.set_defaults(handler=_cmd_star)

    p = sub.add_parser("equiv", help="compare two terms")
    p.add_argument("--model")
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.add_argument("--lattice", choices=[l.value for l in LatticeId])
    p.add_argument("--states", type=int)
    p.add_argument("--random", type=int, metavar="SAMPLES")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tests", default="", metavar="NAMES",
                   help="comma-separated atoms to treat as tests (random mode)")
    p.add_argument("--godel-grid", metavar="VALUES")
    common(p)
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("axioms", help="run the axiom suite over a lattice")
    p.add_argument("--lattice", required=True, choices=[l.value for l in LatticeId])
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--godel-grid", metavar="VALUES")
    common(p)
    p.set_defaults(handler=_cmd_axioms)

    p = sub.add_parser("classify", help="consistency class of each entry")
    p.add_argument("--model", required=True)
    p.add_argument("--name", required=True)
    common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("hoare", help="check a triple {pre} prog {post}")
    p.add_argument("--model", required=True)
    p.add_argument("--pre", required=True)
    p.add_argument("--prog", required=True)
    p.add_argument("--post", required=True)
    common(p)
    p.set_defaults(handler=_cmd_hoare)

    return parser


def _read_model(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return load_model(handle.read())


def _parse_grid(text: str | None):
    if text is None:
        return None
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise EngineError(f"bad --godel-grid value: {exc}") from exc


def _named_relation(model, name: str) -> PRel:
    if name in model.programs:
        return program_relation(model, name)
    if name in model.tests:
        return diagonal_relation(model, name)
    raise ModelError(f"unknown relation {name!r}")


def _class_grid(rel: PRel) -> str:
    n = len(rel.states)
    cells = [classify(w).value for w in rel.weights]
    widths = [
        max(len(rel.states[j]), max(len(cells[i * n + j]) for i in range(n)))
        for j in range(n)
    ]
    label = max(len(s) for s in rel.states)
    lines = [
        " " * label
        + "  "
        + "  ".join(s.ljust(widths[j]) for j, s in enumerate(rel.states))
    ]
    for i, u in enumerate(rel.states):
        row = "  ".join(cells[i * n + j].ljust(widths[j]) for j in range(n))
        lines.append(u.ljust(label) + "  " + row)
    return "\n".join(line.rstrip() for line in lines)


def _classification(rel: PRel) -> list[list[str]]:
    return [[u, v, classify(w).value] for (u, v), w in rel.pairs()]


def _cmd_eval(args) -> int:
    model = _read_model(args.model)
    term = parse(args.term)
    rel = evaluate(term, model)
    if args.json:
        payload = {
            "term": pretty(term),
            "lattice": model.lattice.value,
            "states": list(model.states),
            "entries": prel_to_entries(rel),
            "classification": _classification(rel),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"term: {pretty(term)}")
    print(f"lattice: {model.lattice.value}")
    print(format_prel(rel, args.unicode))
    print("classification:")
    print(_class_grid(rel))
    return 0


def _cmd_star(args) -> int:
    model = _read_model(args.model)
    rel, steps = r_star_steps(program_relation(model, args.program))
    if args.json:
        payload = {
            "program": args.program,
            "lattice": model.lattice.value,
            "states": list(model.states),
            "entries": prel_to_entries(rel),
            "iterations": steps,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"star of {args.program}:")
    print(format_prel(rel, args.unicode))
    print(f"iterations: {steps}")
    return 0


def _describe_witness(verdict: Verdict, unicode: bool) -> list[str]:
    w = verdict.witness
    lines = []
    for name, rel in w.assignment.items():
        shown = ", ".join(
            f"({u},{v}): {format_weight(value, unicode)}"
            for (u, v), value in rel.pairs()
        )
        lines.append(f"  {name} = {{{shown}}}")
    u, v = w.entry
    lines.append(
        f"  at ({u},{v}): lhs={format_weight(w.lhs, unicode)} "
        f"rhs={format_weight(w.rhs, unicode)}"
    )
    return lines


def _print_verdict(verdict: Verdict, args, lead: list[str]) -> int:
    if args.json:
        print(json.dumps(verdict_to_dict(verdict), indent=2))
        return 0 if verdict.status is Status.HOLDS else 1
    for line in lead:
        print(line)
    if verdict.status is Status.HOLDS:
        if verdict.mode == "random":
            print(f"status: holds (no countermodel found in {verdict.samples} samples)")
        else:
            print("status: holds")
        return 0
    print("status: fails")
    for line in _describe_witness(verdict, args.unicode):
        print(line)
    if verdict.witness.model is not None and verdict.mode == "random":
        print("countermodel: " + json.dumps(model_to_dict(verdict.witness.model)))
    return 1


def _cmd_equiv(args) -> int:
    t1, t2 = parse(args.t1), parse(args.t2)
    lead = [f"t1: {pretty(t1)}", f"t2: {pretty(t2)}"]
    if args.model:
        model = _read_model(args.model)
        verdict = equiv(t1, t2, model)
        return _print_verdict(verdict, args, lead)
    if not args.lattice or not args.states or not args.random:
        raise EngineError("random mode needs --lattice, --states and --random")
    tests = {name.strip() for name in args.tests.split(",") if name.strip()}
    verdict = equiv_random(
        t1,
        t2,
        LatticeId.from_name(args.lattice),
        args.states,
        args.random,
        args.seed,
        test_names=tests,
        godel_grid=_parse_grid(args.godel_grid),
    )
    return _print_verdict(verdict, args, lead)


def _axiom_row(verdict: Verdict, unicode: bool) -> str:
    ax = verdict.axiom
    row = (
        f"({ax.value:>3}) {ax.slug:<20} {axiom_formula(ax):<28} "
        f"{verdict.status.value:<5} checked={verdict.samples}"
    )
    if verdict.status is Status.FAILS:
        w = verdict.witness
        parts = []
        for name, rel in w.assignment.items():
            cells = ", ".join(
                f"({u},{v}): {format_weight(weight, unicode)}"
                for (u, v), weight in rel.pairs()
            )
            parts.append(f"{name}={{{cells}}}")
        u, v = w.entry
        row += (
            f"  witness {' '.join(parts)} at ({u},{v}): "
            f"lhs={format_weight(w.lhs, unicode)} rhs={format_weight(w.rhs, unicode)}"
        )
    return row


def _cmd_axioms(args) -> int:
    lattice = LatticeId.from_name(args.lattice)
    grid = _parse_grid(args.godel_grid)
    if args.samples:
        mode, extra = "random", {"samples": args.samples, "seed": args.seed}
    else:
        mode, extra = "exhaustive", {}
    verdicts = [
        check_axiom(ax, lattice, args.states, mode, godel_grid=grid, **extra)
        for ax in CORE_AXIOMS
    ]
    boolean = find_boolean_witness(lattice, args.states, godel_grid=grid)
    if args.json:
        payload = {
            "lattice": lattice.value,
            "states": args.states,
            "mode": mode,
            "axioms": [verdict_to_dict(v) for v in verdicts]
            + [verdict_to_dict(boolean[ax]) for ax in BOOLEAN_AXIOMS],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"axiom suite: lattice={lattice.value} states={args.states} mode={mode}")
        for verdict in verdicts:
            print(_axiom_row(verdict, args.unicode))
        for ax in BOOLEAN_AXIOMS:
            print(_axiom_row(boolean[ax], args.unicode))
        core_ok = all(v.status is Status.HOLDS for v in verdicts)
        refuted = [
            str(ax.value)
            for ax in BOOLEAN_AXIOMS
            if boolean[ax].status is Status.FAILS
        ]
        print(
            "core axioms: "
            + ("all hold" if core_ok else "FAILURES above")
            + "; boolean axioms refuted: "
            + (",".join(refuted) if refuted else "none")
        )
    return 0 if all(v.status is Status.HOLDS for v in verdicts) else 1


def _cmd_classify(args) -> int:
    model = _read_model(args.model)
    rel = _named_relation(model, args.name)
    if args.json:
        payload = {
            "name": args.name,
            "lattice": model.lattice.value,
            "states": list(model.states),
            "classification": _classification(rel),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"classification of {args.name}:")
    print(_class_grid(rel))
    return 0


def _cmd_hoare(args) -> int:
    model = _read_model(args.model)
    pre, prog, post = parse(args.pre), parse(args.prog), parse(args.post)
    verdict = hoare_check(pre, prog, post, model)
    lead = [f"triple: {{{pretty(pre)}}} {pretty(prog)} {{{pretty(post)}}}"]
    return _print_verdict(verdict, args, lead)


if __name__ == "__main__":
    sys.exit(main())
