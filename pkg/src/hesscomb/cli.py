"""Command line surface for the package.

Subcommands expose the main computations with text, JSON, or CSV output:

    poincare       Poincare polynomial of a Hessenberg variety
    springer       Springer fiber cells of a nilpotent shape
    schubert-point Schubert point of a flag in a Springer fiber
    union          compare the variety with its Schubert union
    components     candidate irreducible components
    verify         run the exhaustive check harness
    census         dump ground truth rows for a degree

Exit statuses: 0 success, 1 domain error (one line diagnostic on stderr),
2 usage error, 3 when verify finds a failing check.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
from collections.abc import Sequence

from .components import component_candidates
from .harness import census, rows_to_csv, rows_to_json, run_checks
from .hessvar import (
    HessenbergFunction,
    h_from_parabolic,
    is_parabolic_function,
    parabolic_from_h,
    poincare_hessenberg,
)
from .nilpotent import Partition, springer_cell_dim, springer_contains
from .schubert import compare_with_schubert_union, schubert_point
from .symgroup import ParabolicData, Permutation, enumerate_sn, perm_from_word


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma separated integers, got {text!r}") from None


def _hessenberg_space(
    args: argparse.Namespace, n: int
) -> tuple[ParabolicData | None, HessenbergFunction]:
    """The Hessenberg function named by the flags, with its J when parabolic."""
    if args.parabolic is not None:
        p = ParabolicData.from_iterable(n, _parse_ints(args.parabolic))
        return p, h_from_parabolic(p)
    h = HessenbergFunction(_parse_ints(args.hessenberg))
    if h.n != n:
        raise ValueError(f"hessenberg function has degree {h.n}, partition has {n}")
    if is_parabolic_function(h):
        return parabolic_from_h(h), h
    return None, h


def _parabolic_space(args: argparse.Namespace, n: int) -> ParabolicData:
    """Like _hessenberg_space but the command only accepts parabolic spaces."""
    p, _ = _hessenberg_space(args, n)
    if p is None:
        h = HessenbergFunction(_parse_ints(args.hessenberg))
        raise ValueError(f"is_parabolic_function fails for h = {h}")
    return p


def _word_text(word: tuple[int, ...]) -> str:
    return " ".join(f"s{letter}" for letter in word) if word else "e"


def _cmd_poincare(args: argparse.Namespace) -> tuple[str, int]:
    shape = Partition.from_string(args.partition)
    p, h = _hessenberg_space(args, shape.n)
    poly = poincare_hessenberg(shape, h)
    if args.format == "json":
        payload = {
            "lambda": list(shape.parts),
            "J": None if p is None else list(p.sorted_j()),
            "h": list(h.values),
            "poincare": list(poly.coeffs),
        }
        return json.dumps(payload, indent=2) + "\n", 0
    return str(poly) + "\n", 0


def _cmd_springer(args: argparse.Namespace) -> tuple[str, int]:
    shape = Partition.from_string(args.partition)
    cells = []
    for w in enumerate_sn(shape.n):
        if not springer_contains(w, shape):
            continue
        cells.append(
            {
                "w": w.one_line(),
                "dim": springer_cell_dim(w, shape),
                "schubert_point": schubert_point(w, shape).point.one_line(),
            }
        )
    poly = poincare_hessenberg(shape, HessenbergFunction.identity(shape.n))
    if args.format == "json":
        payload = {
            "lambda": list(shape.parts),
            "poincare": list(poly.coeffs),
            "cells": cells,
        }
        return json.dumps(payload, indent=2) + "\n", 0
    if args.format == "csv":
        lines = ["w,dim,schubert_point"]
        lines += [f"\"{c['w']}\",{c['dim']},\"{c['schubert_point']}\"" for c in cells]
        return "\n".join(lines) + "\n", 0
    return str(poly) + "\n", 0


def _cmd_schubert_point(args: argparse.Namespace) -> tuple[str, int]:
    shape = Partition.from_string(args.partition)
    if args.perm is not None:
        w = Permutation(_parse_ints(args.perm))
        if w.n != shape.n:
            raise ValueError(f"permutation has degree {w.n}, partition has {shape.n}")
    else:
        w = perm_from_word(_parse_ints(args.word), shape.n)
    point = schubert_point(w, shape)
    if args.format == "json":
        payload = {
            "lambda": list(shape.parts),
            "source": list(point.source.images),
            "tableau": [list(row) for row in point.tableau.rows],
            "string_lengths": list(point.string_lengths),
            "word": list(point.word()),
            "point": list(point.point.images),
        }
        return json.dumps(payload, indent=2) + "\n", 0
    return f"{_word_text(point.word())}\n{point.point.one_line()}\n", 0


def _cmd_union(args: argparse.Namespace) -> tuple[str, int]:
    shape = Partition.from_string(args.partition)
    p = _parabolic_space(args, shape.n)
    report = compare_with_schubert_union(shape, p)
    if args.format == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n", 0
    lines = [
        f"hessenberg:     {report.hessenberg_poly}",
        f"schubert union: {report.schubert_union_poly}",
        f"equal:          {'true' if report.equal else 'false'}",
        f"in hypothesis:  {'true' if report.in_hypothesis else 'false'}",
        "tops:           " + "  ".join(t.one_line() for t in report.tops),
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_components(args: argparse.Namespace) -> tuple[str, int]:
    shape = Partition.from_string(args.partition)
    p = _parabolic_space(args, shape.n)
    candidates = component_candidates(shape, p)
    if args.format == "json":
        return json.dumps([c.to_json_dict() for c in candidates], indent=2) + "\n", 0
    lines = []
    for c in candidates:
        lines.append(
            f"v={c.v.one_line()}  top={c.top_cell.one_line()}  "
            f"schubert_top={c.schubert_top.one_line()}  dim={c.cell_dim}  "
            f"full_cell={'true' if c.full_cell else 'false'}  "
            f"heuristic_maximal={'true' if c.bruhat_maximal else 'false'}"
        )
    return "\n".join(lines) + "\n", 0


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    checks = None if args.checks is None else [c for c in args.checks.split(",") if c]
    reports = run_checks(args.n, checks)
    status = 3 if any(not r.passed for r in reports) else 0
    if args.format == "json":
        return json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n", status
    lines = []
    for r in reports:
        mark = "ok  " if r.passed else "FAIL"
        line = f"{mark}  {r.check_id:<20}  n={r.n}  cases={r.cases_run}  {r.elapsed:.2f}s"
        if not r.passed:
            line += f"  failures={len(r.failures)}"
        lines.append(line)
        for f in r.failures[:5]:
            shape = "-" if f.shape is None else ",".join(str(x) for x in f.shape)
            j = "-" if f.j is None else (",".join(str(x) for x in f.j) or "empty")
            lines.append(f"      lambda={shape}  J={j}  witness={f.witness or '-'}")
    return "\n".join(lines) + "\n", status


def _cmd_census(args: argparse.Namespace) -> tuple[str, int]:
    rows = census(args.n, args.granularity)
    if args.format == "json":
        return rows_to_json(rows), 0
    return rows_to_csv(rows, args.granularity), 0


def _add_output_flags(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--out", default=None, help="write output to this file")


def _add_space_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--parabolic", help='subset J, e.g. "1,3" (empty string for J = {})')
    group.add_argument("--hessenberg", help='Hessenberg function values, e.g. "2,2,4,4"')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesscomb",
        description="Cells, dimensions, and Betti numbers of nilpotent Hessenberg varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poincare = sub.add_parser("poincare", help="Poincare polynomial of a Hessenberg variety")
    poincare.add_argument("--partition", required=True, help='nilpotent shape, e.g. "2,2"')
    _add_space_flags(poincare)
    _add_output_flags(poincare, ("text", "json"))
    poincare.set_defaults(handler=_cmd_poincare)

    springer = sub.add_parser("springer", help="Springer fiber cells of a shape")
    springer.add_argument("--partition", required=True)
    _add_output_flags(springer, ("text", "json", "csv"))
    springer.set_defaults(handler=_cmd_springer)

    point = sub.add_parser("schubert-point", help="Schubert point of a Springer fiber flag")
    point.add_argument("--partition", required=True)
    flag = point.add_mutually_exclusive_group(required=True)
    flag.add_argument("--perm", help='one line form, e.g. "3,4,1,2"')
    flag.add_argument("--word", help='reduced word letters, e.g. "2,1,3,2"')
    _add_output_flags(point, ("text", "json"))
    point.set_defaults(handler=_cmd_schubert_point)

    union = sub.add_parser("union", help="compare the variety with its Schubert union")
    union.add_argument("--partition", required=True)
    _add_space_flags(union)
    _add_output_flags(union, ("text", "json"))
    union.set_defaults(handler=_cmd_union)

    components = sub.add_parser("components", help="candidate irreducible components")
    components.add_argument("--partition", required=True)
    _add_space_flags(components)
    _add_output_flags(components, ("text", "json"))
    components.set_defaults(handler=_cmd_components)

    verify = sub.add_parser("verify", help="run the exhaustive check harness")
    verify.add_argument("--n", type=int, required=True, help="largest degree to sweep")
    verify.add_argument("--checks", default=None, help="comma separated check ids (default: all)")
    _add_output_flags(verify, ("text", "json"))
    verify.set_defaults(handler=_cmd_verify)

    census_cmd = sub.add_parser("census", help="dump ground truth rows for one degree")
    census_cmd.add_argument("--n", type=int, required=True)
    census_cmd.add_argument(
        "--granularity", choices=("cells", "summaries"), default="summaries"
    )
    _add_output_flags(census_cmd, ("csv", "json"))
    census_cmd.set_defaults(handler=_cmd_census)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        output, status = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(output)
    else:
        pathlib.Path(args.out).write_text(output, encoding="utf-8")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
