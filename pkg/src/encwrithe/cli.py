"""Command line interface.

Exit codes: 0 success / all verifications pass, 1 verification failure,
2 input or validation error, 3 genericity sampling exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .curves import Link, sample_random_curve, validate_link
from .errors import (
    EncwritheError,
    InvalidInput,
    ParseError,
    SamplingExhausted,
    ValidationError,
)
from .fileio import CurveFamily, parse_curve_file, write_link_file
from .projection import ProjectionCenter, sample_generic_center
from .rationals import rat, rat_str
from .verify import (
    scan_family,
    verify_center_independence,
    verify_isotopy_invariance,
)
from .writhe import build_diagram, writhe_report

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_SAMPLING = 3


def _parse_center(text: str) -> ProjectionCenter:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 4:
        raise InvalidInput("center must be four rationals, e.g. '0,0,1,0'")
    return ProjectionCenter.of([rat(p) for p in parts])


def _load_link(path: str) -> Link:
    parsed = parse_curve_file(path)
    if isinstance(parsed, CurveFamily):
        raise InvalidInput(
            "family file given where a single link is required; use 'verify'"
        )
    report = validate_link(parsed)
    report.raise_for_failure()
    return parsed


def cmd_writhe(args) -> int:
    parsed = parse_curve_file(args.file)
    if isinstance(parsed, CurveFamily):
        center = parsed.center
        scan = scan_family(parsed.instantiate, parsed.grid, center=center)
        print(f"family scan over {parsed.parameter} ({len(scan.members)} members):")
        for member in scan.members:
            if member.singular:
                print(f"  {parsed.parameter} = {member.tau}: {member.status} ({member.note})")
            else:
                print(f"  {parsed.parameter} = {member.tau}: Cw = {member.writhe}")
        return EXIT_OK
    report = validate_link(parsed)
    report.raise_for_failure()
    center = _parse_center(args.center) if args.center else None
    result = writhe_report(parsed, center=center, seed=args.seed)
    print(f"Cw = {result.unoriented}")
    if result.oriented is not None:
        print(f"Cw (oriented) = {result.oriented}")
        n = len(result.linking)
        for i in range(n):
            for j in range(i + 1, n):
                print(f"lk[{i}][{j}] = {result.linking[i][j]}")
    print(f"center: ({', '.join(rat_str(Fraction(c)) for c in result.center)})")
    crossings = sum(1 for desc, _ in result.loci if "crossing" in desc)
    solitaries = sum(1 for desc, _ in result.loci if "solitary" in desc)
    print(f"double points: {crossings} crossing(s), {solitaries} solitary")
    for desc, sign in result.loci:
        print(f"  [{sign:+d}] {desc}")
    print(f"complex double points per component: {result.counts}")
    if args.json:
        payload = {
            "unoriented": result.unoriented,
            "oriented": result.oriented,
            "linking": [[rat_str(v) for v in row] for row in result.linking]
            if result.linking
            else None,
            "center": [rat_str(Fraction(c)) for c in result.center],
            "loci": [{"description": d, "sign": s} for d, s in result.loci],
            "complex_counts": result.counts,
        }
        Path(args.json).write_text(json.dumps(payload, indent=1) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    parsed = parse_curve_file(args.file)
    runs = []
    ok = True
    if isinstance(parsed, CurveFamily):
        scan = scan_family(parsed.instantiate, parsed.grid, center=parsed.center)
        print(f"family scan over {parsed.parameter}:")
        for member in scan.members:
            status = member.status if member.singular else f"Cw = {member.writhe}"
            print(f"  {parsed.parameter} = {member.tau}: {status}")
        constant = scan.constant_between_walls()
        print(f"constant between walls: {'pass' if constant else 'FAIL'}")
        for a, b, jump in scan.wall_jumps():
            print(f"wall between {a} and {b}: jump {jump:+d}")
        payload = {
            "members": [
                {
                    "tau": rat_str(m.tau),
                    "status": m.status,
                    "writhe": m.writhe,
                }
                for m in scan.members
            ],
            "constant_between_walls": constant,
            "wall_jumps": [
                {"from": rat_str(a), "to": rat_str(b), "jump": jump}
                for a, b, jump in scan.wall_jumps()
            ],
        }
        ok = constant
    else:
        report = validate_link(parsed)
        report.raise_for_failure()
        run_c = verify_center_independence(parsed, args.centers, args.seed)
        run_i = verify_isotopy_invariance(parsed, args.isotopies, args.seed)
        runs = [run_c, run_i]
        for run in runs:
            verdict = "pass" if run.passed else "FAIL"
            print(f"{run.property_name}: {verdict} ({len(run.trials)} trials) {run.detail}")
        ok = all(run.passed for run in runs)
        payload = {"runs": [run.to_json() for run in runs]}
    if args.json:
        payload["passed"] = ok
        Path(args.json).write_text(json.dumps(payload, indent=1) + "\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_sample(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        curve = sample_random_curve(args.degree, seed=args.seed * 1000 + k)
        link = Link([curve])
        path = out_dir / f"curve_d{args.degree}_s{args.seed}_{k:03d}.jsonl"
        write_link_file(link, path)
        print(path)
    return EXIT_OK


def cmd_diagram(args) -> int:
    from .svg import render_diagram_svg

    link = _load_link(args.file)
    center = _parse_center(args.center) if args.center else None
    if center is None:
        center = sample_generic_center(link, seed=args.seed)
    diagram = build_diagram(link, center)
    render_diagram_svg(diagram, out_path=args.out)
    print(args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="encwrithe",
        description="Exact encomplexed writhe of real rational space curves and links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("writhe", help="compute the invariant of a link file")
    p.add_argument("file")
    p.add_argument("--center", help="projection center 'a,b,c,d' (default: sampled)")
    p.add_argument("--seed", type=int, default=0, help="seed for center sampling")
    p.add_argument("--json", help="also write a machine-readable report here")
    p.set_defaults(func=cmd_writhe)

    p = sub.add_parser("verify", help="run invariance verifications")
    p.add_argument("file")
    p.add_argument("--centers", type=int, default=20, metavar="N")
    p.add_argument("--isotopies", type=int, default=20, metavar="M")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--json", help="also write a machine-readable report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="write random validated curve files")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("diagram", help="render the diagram of a link file as SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--center", help="projection center 'a,b,c,d'")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SamplingExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SAMPLING
    except (ParseError, ValidationError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EncwritheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
