"""Command line front end: construct, verify, sweep, render.

Exit codes: 0 success (construct found a witness / verify said Richardson),
1 negative outcome (no witness within budget / not Richardson), 2 parse or
validation error, 3 matrix outside the nilradical (verify only).  All JSON
output is emitted with sorted keys and sorted lists, so identical inputs
produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .algebra import AlgebraKind, ExactMatrix, SpecError, sl, so, sp, validate_spec
from .diagram import (
    DiagramError,
    diagram_from_json,
    diagram_to_json_obj,
    render_ascii,
    render_dot,
)
from .nilpotent import centralizer_dimension_direct
from .richardson import (
    Exhausted,
    classify_simple,
    is_richardson,
    levi_dimension,
    minimality_probe,
    richardson_element,
    sweep,
)

_ALGEBRA_RE = re.compile(r"^(sl|sp|so)(\d+)$")


def parse_algebra(token: str) -> AlgebraKind:
    """Parse a family token immediately followed by the size, e.g. 'sp6'."""
    match = _ALGEBRA_RE.match(token.strip())
    if not match:
        raise SpecError(f"cannot parse algebra {token!r} (expected e.g. sl9, sp6, so8)")
    family, size = match.group(1), int(match.group(2))
    return {"sl": sl, "sp": sp, "so": so}[family](size)


def parse_blocks(token: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in token.split(","))
    except ValueError:
        raise SpecError(f"cannot parse blocks {token!r} (expected e.g. 3,1,2,3)") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _report_text(report) -> str:
    lines = [render_ascii(report.diagram).rstrip("\n")]
    entries = " ".join(f"E[{i},{j}]={v}" for (i, j), v in sorted(report.matrix.entries.items()))
    lines.append(f"matrix: {entries if entries else '0'}")
    lines.append(f"partition: {report.partition}")
    lines.append(f"dual: {report.dual}")
    lines.append(f"dim g^X: {report.dim_centralizer_direct}")
    lines.append(f"dim m: {report.dim_levi}")
    lines.append(f"simple case: {report.simple_case}")
    lines.append(f"s bound: {report.s_bound}  max grade: {report.support.max_grade}")
    lines.append(f"label: {report.bala_carter if report.bala_carter else '-'}")
    lines.append(f"Richardson: {'true' if report.is_richardson else 'false'}")
    return "\n".join(lines)


def cmd_construct(args) -> int:
    kind = parse_algebra(args.algebra)
    spec = validate_spec(kind, parse_blocks(args.blocks))
    report = richardson_element(spec, budget=args.budget)
    if args.probe:
        ok = minimality_probe(report.matrix, spec, count=args.probe,
                              seed=args.seed, method="formula")
        probe_note = f"minimality probe: {'ok' if ok else 'FAILED'} ({args.probe} samples)"
    else:
        probe_note = None
    if args.format == "json":
        obj = report.to_json_obj()
        if probe_note is not None:
            obj["minimality_probe"] = probe_note
        print(_dump(obj))
    elif args.format == "dot":
        print(render_dot(report.diagram), end="")
    else:
        print(_report_text(report))
        if probe_note is not None:
            print(probe_note)
    return 0 if report.is_richardson else 1


def cmd_verify(args) -> int:
    kind = parse_algebra(args.algebra)
    spec = validate_spec(kind, parse_blocks(args.blocks))
    with open(args.matrix, "r", encoding="utf-8") as handle:
        obj = json.load(handle)
    matrix = ExactMatrix.from_json_obj(obj)
    from .algebra import in_nilradical

    if not in_nilradical(spec, matrix):
        print(f"matrix is not in the nilradical of {spec}", file=sys.stderr)
        return 3
    verdict = is_richardson(matrix, spec)
    dims = (centralizer_dimension_direct(matrix, kind), levi_dimension(spec))
    print(f"richardson: {'true' if verdict else 'false'}")
    print(f"dim g^X = {dims[0]}")
    print(f"dim m = {dims[1]}")
    return 0 if verdict else 1


def _sweep_csv(rows) -> str:
    header = ("algebra,blocks,case,partition,dual,dim_formula,dim_direct,"
              "dim_levi,richardson,label,s_bound,max_grade,status")
    out = [header]
    for row in rows:
        spec = row.spec
        case = classify_simple(spec).tag
        if row.report is None:
            body = ["-"] * 8
        else:
            rep = row.report
            body = [
                "-".join(map(str, rep.partition.parts)),
                "-".join(map(str, rep.dual.parts)),
                str(rep.dim_centralizer_formula),
                str(rep.dim_centralizer_direct),
                str(rep.dim_levi),
                "true" if rep.is_richardson else "false",
                rep.bala_carter if rep.bala_carter else "-",
                f"{rep.s_bound}",
            ]
        max_grade = "-" if row.report is None else str(row.report.support.max_grade)
        out.append(",".join([
            spec.kind.name,
            "-".join(map(str, spec.blocks)),
            case,
            *body,
            max_grade,
            row.status,
        ]))
    return "\n".join(out)


def cmd_sweep(args) -> int:
    rows = sweep(args.family, args.max, budget=args.budget)
    if args.format == "json":
        payload = []
        for row in rows:
            entry = {
                "algebra": row.spec.kind.name,
                "blocks": list(row.spec.blocks),
                "status": row.status,
            }
            if row.report is not None:
                entry["report"] = row.report.to_json_obj()
            if row.error:
                entry["error"] = row.error
            payload.append(entry)
        print(_dump(payload))
    else:
        print(_sweep_csv(rows))
    return 0


def cmd_render(args) -> int:
    with open(args.diagram, "r", encoding="utf-8") as handle:
        diagram = diagram_from_json(handle.read())
    if args.format == "dot":
        print(render_dot(diagram), end="")
    else:
        print(render_ascii(diagram), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richline",
        description="Richardson elements for parabolic subalgebras of the "
                    "classical Lie algebras, from line diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build and verify a witness")
    construct.add_argument("--algebra", required=True, help="e.g. sl9, sp6, so8")
    construct.add_argument("--blocks", required=True, help="comma list, e.g. 3,1,2,3")
    construct.add_argument("--format", choices=("json", "ascii", "dot"), default="ascii")
    construct.add_argument("--budget", type=int, default=3,
                           help="branch search bound (extra line classes)")
    construct.add_argument("--seed", type=int, default=0,
                           help="seed for the minimality probe")
    construct.add_argument("--probe", type=int, default=0,
                           help="run a minimality probe with this many samples")
    construct.set_defaults(func=cmd_construct)

    verify = sub.add_parser("verify", help="test a user matrix for Richardson-ness")
    verify.add_argument("matrix", help="path to a matrix JSON file")
    verify.add_argument("--algebra", required=True)
    verify.add_argument("--blocks", required=True)
    verify.set_defaults(func=cmd_verify)

    swp = sub.add_parser("sweep", help="run all specs of a family")
    swp.add_argument("--family", choices=("sl", "sp", "so"), required=True)
    swp.add_argument("--max", type=int, required=True, help="largest matrix size")
    swp.add_argument("--budget", type=int, default=3)
    swp.add_argument("--format", choices=("csv", "json"), default="csv")
    swp.set_defaults(func=cmd_sweep)

    render = sub.add_parser("render", help="render a diagram JSON file")
    render.add_argument("diagram", help="path to a diagram JSON file")
    render.add_argument("--format", choices=("ascii", "dot"), default="ascii")
    render.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exhausted as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (SpecError, DiagramError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
