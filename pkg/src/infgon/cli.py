"""Command-line front end.

Structured JSON goes to stdout (sorted keys, so repeated runs are byte
identical); ``--pretty`` switches to aligned key/value lines.  Exit codes:
0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import acceptance
from .arcs import Arc, ArcClass, classify, cross_transverse, format_arc, parse_arc
from .homs import (
    ExtCase,
    ext_case,
    ext_dim,
    ext_dim_oracle,
    factors_over,
    hom_dim,
)
from .mutation import (
    UNDEFINED,
    MutabilityError,
    approximate,
    flip,
    mutability_report,
    quad_frame,
    right_module_generators,
    NotFinitelyGenerated,
)
from .render import RenderSpec, render_svg
from .surface import format_point, parse_point, parse_surface
from .triangulation import (
    IntRange,
    Family,
    Moving,
    Side,
    Triangulation,
    Window,
    build_fountain,
    canonical_zigzag,
    detect_leapfrog,
    limit_of_family,
    triangulation_from_json,
    triangulation_to_json,
    validate_non_crossing,
    window_arcs,
    window_brute_force,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_CASE_NAMES = {
    ExtCase.CROSSING: "TransverseCross",
    ExtCase.CLOCKWISE_AT_ACCUMULATION: "ClockwiseAtAccumulation",
    ExtCase.DOUBLE_ACCUMULATION_SELF: "DoubleAccumulationSelf",
    ExtCase.NONE: "NoExt",
}

_FAMILY_NAMES = {"all": None, "collapsing": ArcClass.COLLAPSING, "persistent": ArcClass.PERSISTENT}


class UsageError(Exception):
    pass


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        width = max((len(k) for k in payload), default=0)
        for k in sorted(payload):
            print(f"{k.ljust(width)}  {payload[k]}")
    else:
        print(json.dumps(payload, sort_keys=True))


_FOUNTAIN_RE = re.compile(r"^fountain\((completed:\d+|uncompleted:\d+)\s*,\s*([^)]+)\)$")
_ZIGZAG_RE = re.compile(r"^zigzag\((completed:\d+)\)$")


def _load_triangulation(token: str) -> Triangulation:
    m = _FOUNTAIN_RE.match(token.strip())
    if m:
        surface = parse_surface(m.group(1))
        return build_fountain(surface, parse_point(surface, m.group(2).strip()))
    m = _ZIGZAG_RE.match(token.strip())
    if m:
        return canonical_zigzag(parse_surface(m.group(1)))
    try:
        with open(token, "r", encoding="utf-8") as fh:
            return triangulation_from_json(json.load(fh))
    except FileNotFoundError:
        raise UsageError(f"triangulation {token!r}: no such file and not an inline builder spec")


def _arc_pair(args) -> tuple[Arc, Arc]:
    surface = parse_surface(args.surface)
    return parse_arc(surface, args.src), parse_arc(surface, args.dst)


def _cmd_hom(args) -> int:
    g, d = _arc_pair(args)
    _emit({"dim": hom_dim(g, d)}, args.pretty)
    return EXIT_OK


def _cmd_ext(args) -> int:
    g, d = _arc_pair(args)
    _emit({"dim": ext_dim(g, d), "case": _CASE_NAMES[ext_case(g, d)]}, args.pretty)
    return EXIT_OK


def _cmd_ext_oracle(args) -> int:
    g, d = _arc_pair(args)
    _emit({"dim": ext_dim_oracle(g, d)}, args.pretty)
    return EXIT_OK


def _cmd_cross(args) -> int:
    g, d = _arc_pair(args)
    _emit({"cross": cross_transverse(g, d)}, args.pretty)
    return EXIT_OK


def _cmd_factor(args) -> int:
    g, d = _arc_pair(args)
    fam = _FAMILY_NAMES[args.family]
    _emit({"factors": factors_over(g, d, fam), "family": args.family}, args.pretty)
    return EXIT_OK


def _cmd_classify(args) -> int:
    surface = parse_surface(args.surface)
    arc = parse_arc(surface, args.arc)
    _emit({"class": classify(arc).value}, args.pretty)
    return EXIT_OK


def _cmd_validate(args) -> int:
    t = _load_triangulation(args.triangulation)
    report = validate_non_crossing(t)
    payload = {"ok": report.ok}
    if report.witness:
        payload["witness"] = [format_arc(a) for a in report.witness]
    _emit(payload, args.pretty)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_window_ct(args) -> int:
    surface = parse_surface(args.surface)
    window = Window.symmetric(surface, args.bound, include_accumulation=not args.no_accumulation)
    sets = window_brute_force(window)
    arcs = window_arcs(window)
    weak_ct = 0
    for T in sets:
        right = {x for x in arcs if all(ext_dim(x, t) == 0 for t in T)}
        left = {x for x in arcs if all(ext_dim(t, x) == 0 for t in T)}
        if right == set(T) == left:
            weak_ct += 1
    payload = {
        "points": len(window.points),
        "maximal_non_crossing": len(sets),
        "weak_cluster_tilting": weak_ct,
        "match": weak_ct == len(sets),
    }
    _emit(payload, args.pretty)
    return EXIT_OK if payload["match"] else EXIT_VERIFY_FAILED


def _cmd_leapfrog(args) -> int:
    t = _load_triangulation(args.triangulation)
    w = detect_leapfrog(t)
    if w is None:
        _emit({"leapfrog": False}, args.pretty)
    else:
        _emit(
            {
                "leapfrog": True,
                "offset": w.offset,
                "direction": w.direction,
                "curve_ends": list(w.curve_ends),
            },
            args.pretty,
        )
    return EXIT_OK


def _cmd_limit(args) -> int:
    surface = parse_surface(args.surface)
    fixed = parse_point(surface, args.fixed)
    lo = None if args.lo is None else int(args.lo)
    hi = None if args.hi is None else int(args.hi)
    fam = Family(fixed, Moving(args.interval, args.base, args.stride), IntRange(lo, hi))
    res = limit_of_family(surface, fam, end=args.end)
    payload = {"kind": res.kind.value}
    if res.arc is not None:
        payload["arc"] = format_arc(res.arc)
    if res.point is not None:
        payload["point"] = format_point(res.point)
    _emit(payload, args.pretty)
    return EXIT_OK


def _frame_cell(entry) -> str:
    return "undefined" if entry is UNDEFINED else format_point(entry)


def _cmd_frame(args) -> int:
    t = _load_triangulation(args.triangulation)
    a = parse_arc(t.surface, args.arc)
    f = quad_frame(t, a)
    _emit(
        {
            "u": format_point(f.u),
            "v": format_point(f.v),
            "u_left": _frame_cell(f.u_left),
            "u_right": _frame_cell(f.u_right),
            "v_left": _frame_cell(f.v_left),
            "v_right": _frame_cell(f.v_right),
        },
        args.pretty,
    )
    return EXIT_OK


def _cmd_approx(args) -> int:
    t = _load_triangulation(args.triangulation)
    a = parse_arc(t.surface, args.arc)
    side = Side.LEFT if args.side == "left" else Side.RIGHT
    res = approximate(t, a, side)
    if res.exists:
        _emit({"exists": True, "summands": [format_arc(s) for s in res.summands]}, args.pretty)
    else:
        scan = res.failed_scan
        witness = [format_point(p) for p in scan.singles] + [
            f"{pr.interval}:{pr.base}{'+' if pr.stride > 0 else ''}{pr.stride}t" for pr in scan.progressions
        ]
        _emit({"exists": False, "reason": "NoExtremum", "witness": witness}, args.pretty)
    return EXIT_OK


def _cmd_mutable(args) -> int:
    t = _load_triangulation(args.triangulation)
    a = parse_arc(t.surface, args.arc)
    ok, reason, _frame = mutability_report(t, a)
    payload = {"mutable": ok}
    if reason:
        payload["reason"] = reason
    _emit(payload, args.pretty)
    return EXIT_OK


def _cmd_flip(args) -> int:
    t = _load_triangulation(args.triangulation)
    a = parse_arc(t.surface, args.arc)
    try:
        res = flip(t, a)
    except MutabilityError as exc:
        _emit({"flipped": False, "reason": exc.reason}, args.pretty)
        return EXIT_VERIFY_FAILED
    payload = {
        "flipped": True,
        "new_arc": format_arc(res.new_arc),
        "conflations": [
            {
                "start": format_arc(c.start),
                "middle": [None if m is None else format_arc(m) for m in c.middle],
                "end": format_arc(c.end),
            }
            for c in res.conflations
        ],
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(triangulation_to_json(res.new_triangulation), fh, sort_keys=True, indent=1)
        payload["written"] = args.out
    _emit(payload, args.pretty)
    return EXIT_OK


def _cmd_approx_object(args) -> int:
    t = _load_triangulation(args.triangulation)
    g = parse_arc(t.surface, args.arc)
    res = right_module_generators(t, g)
    if isinstance(res, NotFinitelyGenerated):
        _emit({"finite": False, "witness": res.description}, args.pretty)
    else:
        _emit({"finite": True, "generators": [format_arc(a) for a in res]}, args.pretty)
    return EXIT_OK


def _cmd_render(args) -> int:
    spec = RenderSpec(radius=args.radius, highlight=())
    if args.triangulation:
        subject = _load_triangulation(args.triangulation)
        surface = subject.surface
    elif args.surface is None:
        raise UsageError("render needs --triangulation, or --surface with --arcs")
    else:
        surface = parse_surface(args.surface)
        subject = [parse_arc(surface, tok) for tok in args.arcs]
    if args.highlight:
        spec = RenderSpec(radius=args.radius, highlight=tuple(parse_arc(surface, h) for h in args.highlight))
    svg = render_svg(subject, spec, surface=surface)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    _emit(
        {
            "written": args.out,
            "points": svg.count('class="pt"') + svg.count('class="acc"'),
            "arcs": svg.count('class="arc'),
        },
        args.pretty,
    )
    return EXIT_OK


def _cmd_verify_suite(args) -> int:
    results = acceptance.run_all(args.level)
    for r in results:
        print(r.line())
    passed = sum(1 for r in results if r.passed)
    payload = {"passed": passed, "failed": len(results) - passed, "level": args.level}
    _emit(payload, args.pretty)
    return EXIT_OK if passed == len(results) else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="infgon", description=__doc__)
    ap.add_argument("--pretty", action="store_true", help="aligned key/value output instead of JSON")
    sub = ap.add_subparsers(dest="verb", required=True)

    def pair(p):
        p.add_argument("--surface", required=True)
        p.add_argument("--from", dest="src", required=True, help="first arc, e.g. 1:0-2:3")
        p.add_argument("--to", dest="dst", required=True, help="second arc")

    p = sub.add_parser("hom", help="morphism space dimension between two arcs")
    pair(p)
    p.set_defaults(run=_cmd_hom)

    p = sub.add_parser("ext", help="restricted extension dimension and its case")
    pair(p)
    p.set_defaults(run=_cmd_ext)

    p = sub.add_parser("ext-oracle", help="extension dimension recomputed from the factorization oracle")
    pair(p)
    p.set_defaults(run=_cmd_ext_oracle)

    p = sub.add_parser("cross", help="transverse crossing of two arcs")
    pair(p)
    p.set_defaults(run=_cmd_cross)

    p = sub.add_parser("factor", help="does a nonzero map factor through an arc class")
    pair(p)
    p.add_argument("--family", choices=sorted(_FAMILY_NAMES), default="all")
    p.set_defaults(run=_cmd_factor)

    p = sub.add_parser("classify", help="squeeze behaviour of an uncompleted arc")
    p.add_argument("--surface", required=True)
    p.add_argument("--arc", required=True)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("validate", help="check a triangulation file for crossings")
    p.add_argument("--triangulation", required=True)
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("window-ct", help="compare maximal non-crossing sets with weak cluster-tilting sets")
    p.add_argument("--surface", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--no-accumulation", action="store_true")
    p.set_defaults(run=_cmd_window_ct)

    p = sub.add_parser("leapfrog", help="detect an infinite leapfrog in a triangulation")
    p.add_argument("--triangulation", required=True)
    p.set_defaults(run=_cmd_leapfrog)

    p = sub.add_parser("limit", help="limit of a fan family")
    p.add_argument("--surface", required=True)
    p.add_argument("--fixed", required=True, help="fixed endpoint, e.g. 1:0 or a1")
    p.add_argument("--interval", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--stride", type=int, required=True)
    p.add_argument("--lo", default=None)
    p.add_argument("--hi", default=None)
    p.add_argument("--end", type=int, choices=(1, -1), default=None)
    p.set_defaults(run=_cmd_limit)

    p = sub.add_parser("frame", help="quadrilateral frame of an arc in a triangulation")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--arc", required=True)
    p.set_defaults(run=_cmd_frame)

    p = sub.add_parser("approx", help="one-sided approximation of an arc")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--arc", required=True)
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.set_defaults(run=_cmd_approx)

    p = sub.add_parser("mutable", help="is an arc flippable in a triangulation")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--arc", required=True)
    p.set_defaults(run=_cmd_mutable)

    p = sub.add_parser("flip", help="flip an arc, reporting the exchange conflations")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--arc", required=True)
    p.add_argument("--out", default=None, help="write the flipped triangulation JSON here")
    p.set_defaults(run=_cmd_flip)

    p = sub.add_parser("approx-object", help="generators of incoming morphisms into a shifted arc")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--arc", required=True)
    p.set_defaults(run=_cmd_approx_object)

    p = sub.add_parser("render", help="draw arcs or a triangulation as SVG")
    p.add_argument("--triangulation", default=None)
    p.add_argument("--surface", default=None)
    p.add_argument("--arcs", nargs="*", default=[])
    p.add_argument("--highlight", nargs="*", default=[])
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("--out", required=True)
    p.set_defaults(run=_cmd_render)

    p = sub.add_parser("verify-suite", help="run the verification batteries")
    p.add_argument("--level", choices=("desk", "smoke"), default="desk")
    p.set_defaults(run=_cmd_verify_suite)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.run(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
