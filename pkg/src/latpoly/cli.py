"""Command-line interface.

Exit codes: 0 ok, 1 bad input, 2 internal consistency failure, 3 scan cell
limit exceeded, 4 triplet outside the range covered by the known families.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from .castelnuovo import (
    realization_plan,
    realize_triplet,
    scan,
    scott_triplets_d2,
    write_scan_csv,
    write_scan_jsonl,
)
from .core import (
    BoxLimitError,
    InternalConsistencyError,
    LatticeError,
    LatticePolytope,
    NotRealizableError,
    polytope_to_dict,
    read_polytope,
    write_polytope,
)
from .counting import ehrhart_values, interior_via_reciprocity, normalized_volume, profile
from .families import FAMILIES, FamilyPrediction, build_family
from .triangulate import (
    bipyramid_triangulation,
    decomposition_to_dict,
    prism_zero_triangulation,
    verify_decomposition,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONSISTENCY = 2
EXIT_LIMIT = 3
EXIT_OUT_OF_RANGE = 4

OUT_OF_RANGE_MESSAGE = (
    "outside the range proven Castelnuovo by the known families; "
    "conjectured impossible for c >= 2"
)


@dataclass
class Report:
    dim: int
    vertex_count: int
    b: int
    c: int
    nvol: int
    lower_bound: int | None
    castelnuovo: bool | None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def verdict(self) -> str:
        return "undefined" if self.castelnuovo is None else str(self.castelnuovo).lower()

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "vertex_count": self.vertex_count,
            "b": self.b,
            "c": self.c,
            "nvol": self.nvol,
            "lower_bound": self.lower_bound,
            "castelnuovo": self.verdict(),
            "checks": {k: "pass" if v else "fail" for k, v in self.checks.items()},
        }

    def format(self) -> str:
        lines = [
            f"dim={self.dim} vertices={self.vertex_count}",
            f"b={self.b} c={self.c} nvol={self.nvol}",
            f"lower_bound={'undefined' if self.lower_bound is None else self.lower_bound}",
            f"castelnuovo={self.verdict()}",
        ]
        lines += [f"check {k}: {'pass' if v else 'fail'}" for k, v in self.checks.items()]
        return "\n".join(lines)


def build_report(p: LatticePolytope, prediction: FamilyPrediction | None = None) -> Report:
    prof = profile(p)
    checks = {"reciprocity": interior_via_reciprocity(p) == prof.c}
    if prediction is not None:
        checks["prediction"] = prediction.as_tuple() == prof.as_tuple()
    return Report(
        dim=p.dim,
        vertex_count=len(p.points),
        b=prof.b,
        c=prof.c,
        nvol=prof.nvol,
        lower_bound=prof.lower_bound,
        castelnuovo=prof.castelnuovo,
        checks=checks,
    )


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_family(args) -> int:
    params = {k: getattr(args, k) for k in ("c", "d", "n", "j")}
    poly, pred = build_family(args.family, **params)
    if args.out:
        write_polytope(poly, args.out)
    report = build_report(poly, pred)
    payload = {"family": args.family, "polytope": polytope_to_dict(poly), **report.to_dict()}
    if pred is not None:
        payload["prediction"] = {"b": pred.b_pred, "c": pred.c_pred, "nvol": pred.nvol_pred}
    _emit(args, payload, f"family={args.family}\n{report.format()}")
    return EXIT_OK if report.ok else EXIT_CONSISTENCY


def cmd_verify(args) -> int:
    poly = read_polytope(args.input)
    report = build_report(poly)
    _emit(args, report.to_dict(), report.format())
    return EXIT_OK if report.ok else EXIT_CONSISTENCY


def cmd_realize(args) -> int:
    try:
        tag, params = realization_plan(args.b, args.c, args.d)
    except NotRealizableError as exc:
        print(f"({args.b}, {args.c}, {args.d}) is {OUT_OF_RANGE_MESSAGE}: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_RANGE
    poly, _ = realize_triplet(args.b, args.c, args.d)
    if args.out:
        write_polytope(poly, args.out)
    report = build_report(poly)
    report.checks["request"] = (report.b, report.c) == (args.b, args.c) and bool(report.castelnuovo)
    payload = {"family": tag, "params": params, "polytope": polytope_to_dict(poly), **report.to_dict()}
    param_text = ", ".join(f"{k}={v}" for k, v in params.items())
    _emit(args, payload, f"family={tag}({param_text})\n{report.format()}")
    return EXIT_OK if report.ok else EXIT_CONSISTENCY


def cmd_scott(args) -> int:
    triplets = scott_triplets_d2(args.c_max)
    payload = {"triplets": [[t.b, t.c, t.d] for t in triplets]}
    _emit(args, payload, "\n".join(f"{t.b} {t.c} {t.d}" for t in triplets))
    return EXIT_OK


def cmd_scan(args) -> int:
    records = scan(args.d, args.box, args.samples, args.seed)
    fmt = args.format
    if fmt is None:
        fmt = "jsonl" if args.out and args.out.endswith(".jsonl") else "csv"
    writer = write_scan_jsonl if fmt == "jsonl" else write_scan_csv
    found = [r for r in records if r.castelnuovo]
    beyond = [r for r in found if r.beyond_known_range]
    summary = {
        "samples": args.samples,
        "records": len(records),
        "castelnuovo": len(found),
        "undefined": sum(r.castelnuovo is None for r in records),
        "beyond_known_range": len(beyond),
    }
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer(records, fh)
        _emit(args, summary, " ".join(f"{k}={v}" for k, v in summary.items()))
    else:
        writer(records, sys.stdout)
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if beyond:
        print(f"WARNING: {len(beyond)} Castelnuovo polytopes beyond the known range", file=sys.stderr)
    return EXIT_OK


def cmd_triangulate(args) -> int:
    if args.family == "bipyramid":
        _need(args, "c", "d", "n")
        dec = bipyramid_triangulation(args.c, args.d, args.n)
    else:
        _need(args, "d", "j")
        dec = prism_zero_triangulation(args.d, args.j)
    ok = verify_decomposition(dec)
    payload = decomposition_to_dict(dec, ok)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
    text = "\n".join(
        [f"{nv} {json.dumps([list(v) for v in s])}" for s, nv in dec.simplices]
        + [f"total_nvol={dec.total_nvol} verified={str(ok).lower()}"]
    )
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_CONSISTENCY


def cmd_ehrhart(args) -> int:
    poly = read_polytope(args.input)
    values = ehrhart_values(poly, args.T)
    nvol = normalized_volume(poly)
    _emit(args, {"values": values, "nvol": nvol}, f"{' '.join(map(str, values))}\nnvol={nvol}")
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise LatticeError(f"missing parameters: {', '.join('--' + m for m in missing)}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    parser = argparse.ArgumentParser(
        prog="latpoly", description="Lattice polytope profiles and the minimal-volume equality."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="construct a family member and report")
    p.add_argument("family", choices=sorted(FAMILIES))
    for name in ("c", "d", "n", "j"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out", help="write the polytope JSON here")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="profile a polytope JSON file")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realize", parents=[common], help="witness polytope for a triplet (b, c, d)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("scott", parents=[common], help="list the planar triplets")
    p.add_argument("--c-max", type=int, required=True)
    p.set_defaults(func=cmd_scott)

    p = sub.add_parser("scan", parents=[common], help="profile random lattice polytopes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "jsonl"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("triangulate", parents=[common], help="explicit decomposition with verdict")
    p.add_argument("family", choices=("bipyramid", "prism-zero"))
    for name in ("c", "d", "n", "j"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("ehrhart", parents=[common], help="dilation counts L(0..T)")
    p.add_argument("input")
    p.add_argument("--T", type=int, required=True)
    p.set_defaults(func=cmd_ehrhart)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except BoxLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (LatticeError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
