"""Command-line interface.

Exit status: 0 ok, 1 verification mismatch, 2 bad input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any

from .core import (
    GenSet,
    GroupElement,
    Word,
    cursor_of_word,
    evaluate,
    from_normal_form,
    invert,
    multiply,
    parse_bulbs,
    to_normal_form,
)
from .metrics import (
    BudgetExceededError,
    DEFAULT_COUNT_BUDGET,
    automata_length,
    build_geodesic,
    check_left_light,
    count_geodesics,
    length,
    wreath_length,
)
from .oracle import ResourceLimitError, build_ball, write_sphere_csv
from .phenomena import dead_end_depth, seesaw_like_check, seesaw_scan

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(ValueError):
    pass


def _element_json(e: GroupElement) -> dict[str, Any]:
    return {"bulbs": list(e.bulbs), "cursor": e.cursor, "literal": e.literal()}


def _element_from_args(args) -> GroupElement:
    given = [
        args.element is not None,
        args.word is not None,
        args.bulbs is not None or args.cursor is not None,
    ]
    if sum(given) > 1:
        raise UsageError("give the element once: --element, --word, or --bulbs/--cursor")
    if args.element is not None:
        return GroupElement.parse(args.element)
    if args.word is not None:
        return evaluate(Word.parse(args.word, args.gens))
    return GroupElement(parse_bulbs(args.bulbs or "none"), args.cursor or 0)


def cmd_length(args) -> tuple[int, dict]:
    e = _element_from_args(args)
    chosen = length(e, args.gens)
    wr, au = wreath_length(e), automata_length(e)
    return 0, {
        "length": chosen.value,
        "branch": str(chosen.branch),
        "wreath_length": wr.value,
        "wreath_branch": str(wr.branch),
        "automata_length": au.value,
        "automata_branch": str(au.branch),
        "_element": e,
        "method": "closed-form",
    }


def cmd_geodesic(args) -> tuple[int, dict]:
    e = _element_from_args(args)
    word = build_geodesic(e, args.gens)
    return 0, {"word": str(word), "length": len(word), "_element": e, "method": "closed-form"}


def cmd_count(args) -> tuple[int, dict]:
    e = _element_from_args(args)
    rep = count_geodesics(e, args.gens, budget=args.budget)
    return 0, {
        "count": rep.count,
        "u": rep.u,
        "cursor_at_origin": rep.cursor_at_origin,
        "_element": e,
        "method": "closed-form-guided recursion",
    }


def cmd_deadend(args) -> tuple[int, dict]:
    e = _element_from_args(args)
    rep = dead_end_depth(e, args.gens)
    return 0, {
        "is_dead_end": rep.is_dead_end,
        "length": rep.length,
        "depth": rep.depth,
        "closed_form_depth": rep.closed_form_depth,
        "_element": e,
        "method": "escape BFS",
    }


def cmd_seesaw_scan(args) -> tuple[int, dict]:
    reports = seesaw_scan(args.gens, args.radius, args.min_swing)
    found = [
        {"element": r.element.literal(), "generator": r.generator.letter, "swing": r.swing}
        for r in reports
    ]
    return 0, {
        "radius": args.radius,
        "min_swing": args.min_swing,
        "count": len(found),
        "seesaws": found,
        "method": "oracle ball scan",
    }


def cmd_seesaw_like(args) -> tuple[int, dict]:
    rep = seesaw_like_check(args.k)
    return 0, {
        "k": rep.k,
        "condition1": rep.condition1,
        "condition2": rep.condition2,
        "condition3": rep.condition3,
        "holds": rep.holds,
        "details": rep.details,
        "divergence": [list(p) for p in rep.divergence],
        "divergence_ok": rep.divergence_ok,
        "method": "closed-form",
    }


def cmd_verify(args) -> tuple[int, dict]:
    ball = build_ball(args.gens, args.radius)
    checked = mismatches = 0
    first = None
    for e, d, _ in ball.elements():
        checked += 1
        value = length(e, args.gens).value
        if value != d:
            mismatches += 1
            if first is None:
                first = {"element": e.literal(), "closed_form": value, "oracle": d}
    return (EXIT_MISMATCH if mismatches else 0), {
        "summary": f"{mismatches} mismatches",
        "radius": args.radius,
        "checked": checked,
        "mismatches": mismatches,
        "first_counterexample": first,
        "method": "closed-form vs oracle",
    }


def cmd_sphere(args) -> tuple[int, dict]:
    ball = build_ball(args.gens, args.radius)
    return 0, {"radius": args.radius, "spheres": ball.spheres, "_ball": ball, "method": "oracle"}


def cmd_properties(args) -> tuple[int, dict]:
    """Randomized algebraic checks on seeded words."""
    rng = random.Random(args.seed)
    gs = GenSet(args.gens)
    letters = gs.letters
    failures: dict[str, int] = {}

    def fail(name):
        failures[name] = failures.get(name, 0) + 1

    for _ in range(args.samples):
        u = Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, args.max_length))), gs)
        v = Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, args.max_length))), gs)
        x, y = evaluate(u), evaluate(v)
        if evaluate(u + v) != multiply(x, y):
            fail("homomorphism")
        if multiply(x, invert(x)) != GroupElement.identity():
            fail("inverse")
        if from_normal_form(to_normal_form(x)) != x:
            fail("normal-form round trip")
        if cursor_of_word(u) != x.cursor:
            fail("exponent sum")
        if gs is GenSet.AUTOMATA and not check_left_light(u):
            fail("left light")
    total = sum(failures.values())
    return (EXIT_MISMATCH if total else 0), {
        "seed": args.seed,
        "samples": args.samples,
        "failures": failures,
        "method": "randomized",
    }


def _add_element_args(p):
    p.add_argument("--bulbs", help='comma-separated lit positions, or "none"')
    p.add_argument("--cursor", type=int)
    p.add_argument("--element", help="literal bulbs=...;cursor=...")
    p.add_argument("--word", help="word over the compact alphabet (a t T r R)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gens", choices=[g.value for g in GenSet], default="automata")
    common.add_argument("--format", choices=["text", "json", "csv"], default=None)
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="lamplighter", description="Word metrics of the lamplighter group."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("length", parents=[common], help="closed-form word lengths")
    _add_element_args(p)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("geodesic", parents=[common], help="canonical geodesic word")
    _add_element_args(p)
    p.set_defaults(func=cmd_geodesic)

    p = sub.add_parser("count-geodesics", parents=[common], help="exact geodesic count")
    _add_element_args(p)
    p.add_argument("--budget", type=int, default=DEFAULT_COUNT_BUDGET)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("deadend", parents=[common], help="dead-end flag and depth")
    _add_element_args(p)
    p.set_defaults(func=cmd_deadend)

    p = sub.add_parser("seesaw-scan", parents=[common], help="seesaw elements in a ball")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--min-swing", type=int, default=1)
    p.set_defaults(func=cmd_seesaw_scan)

    p = sub.add_parser("seesaw-like", parents=[common], help="check the w_k family")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_seesaw_like)

    p = sub.add_parser("verify", parents=[common], help="closed form vs BFS over a ball")
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sphere", parents=[common], help="sphere sizes as CSV")
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_sphere)

    p = sub.add_parser("properties", parents=[common], help="randomized algebraic checks")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-length", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_properties)
    return parser


def _render(args, payload: dict) -> str:
    element = payload.pop("_element", None)
    ball = payload.pop("_ball", None)
    if args.format == "csv":
        if ball is None:
            raise UsageError("--format csv is only supported by the sphere command")
        return write_sphere_csv(ball)
    if args.format == "json":
        doc = {"command": args.command, "genset": args.gens}
        if element is not None:
            doc["input"] = _element_json(element)
        doc.update(payload)
        return json.dumps(doc, sort_keys=True) + "\n"
    lines = []
    if element is not None:
        lines.append(f"element: {element.literal()}")
    lines.append(f"genset: {args.gens}")
    for key, value in payload.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "sphere" else "text"
    try:
        status, payload = args.func(args)
        text = _render(args, payload)
    except (UsageError, ValueError) as exc:
        print(f"lamplighter: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, BudgetExceededError) as exc:
        print(f"lamplighter: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status == EXIT_MISMATCH and payload.get("mismatches"):
        print(f"first counterexample: {payload['first_counterexample']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
