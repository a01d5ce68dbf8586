"""Command line interface.

    rattetra report <file> [--json]
    rattetra verify <file> [--json]
    rattetra fuzz --field rational|prime:<p> --count N --seed S [--coord-bound B] [--denom-bound D] [--json]
    rattetra oracle <file> [--json]

Exit status is 0 on success, 1 when a check fails, 2 for usage errors and
the error's ``exit_code`` (see :mod:`rattetra.errors`) otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import fuzz, instance
from .circum import circumcentre
from .errors import DegenerateTetrahedron, RatTetraError
from .field import FieldSpec
from .oracle import TOLERANCE, euclidean_crosscheck
from .tetra import EDGES, TRIANGLES, Tetrahedron, metric_report
from .theorems import m_via_archimedes, n_value, verify_all

NULL_FACE = "null-face"
DEGENERATE = "degenerate"


def _name(idx) -> str:
    return "".join(map(str, idx))


def _s(x) -> Optional[str]:
    return None if x is None else str(x)


def _show(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(v) for v in x) + ")"
    return str(x)


def report_data(T: Tetrahedron) -> dict:
    rep = metric_report(T)
    data = {
        "field": str(T.spec),
        "Q": {_name(e): str(rep.Q[e]) for e in EDGES},
        "A": {_name(t): str(rep.A[t]) for t in TRIANGLES},
        "V": str(rep.V),
        "E": {_name(e): _s(rep.E[e]) for e in EDGES},
        "circumcentre": None,
        "R": None,
        "M": None,
        "N": str(n_value(rep.Q)),
        "K": None,
        "P^2 M": None,
        "1024 V^5 R": None,
    }
    if rep.V != 0:
        c = circumcentre(T)
        data["circumcentre"] = [str(x) for x in c.centre]
        data["R"] = str(c.circumquadrance)
    if rep.spreads_complete:
        M = m_via_archimedes(rep.E)
        data["M"] = str(M)
        P = rep.A[0, 1, 2] * rep.A[0, 1, 3] * rep.A[0, 2, 3] * rep.A[1, 2, 3]
        if P != 0:
            data["K"] = str(16 * rep.V * rep.V / P)
            data["P^2 M"] = str(P * P * M)
            if rep.V != 0:
                data["1024 V^5 R"] = str(1024 * rep.V**5 * c.circumquadrance)
    return data


def render_report(data: dict) -> str:
    lines = [f"field: {data['field']}", "quadrances"]
    lines += [f"  Q{k} = {v}" for k, v in data["Q"].items()]
    lines.append("quadreas")
    lines += [f"  A{k} = {v}" for k, v in data["A"].items()]
    lines.append("quadrume")
    lines.append(f"  V = {data['V']}")
    lines.append("dihedral spreads")
    lines += [f"  E{k} = {NULL_FACE if v is None else v}" for k, v in data["E"].items()]
    centre = data["circumcentre"]
    lines.append("circumcentre")
    lines.append(f"  C = [{', '.join(centre)}]" if centre else f"  C = {DEGENERATE}")
    lines.append("circumquadrance")
    lines.append(f"  R = {data['R'] or DEGENERATE}")
    lines.append("derived")
    for key in ("M", "N", "K", "P^2 M", "1024 V^5 R"):
        value = data[key]
        lines.append(f"  {key} = {value if value is not None else NULL_FACE}")
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    T = instance.load(args.file)
    data = report_data(T)
    _emit(args, data, render_report(data))
    if data["circumcentre"] is None:
        raise DegenerateTetrahedron("quadrume is zero; circumcentre undefined")
    return 0


def cmd_verify(args) -> int:
    T = instance.load(args.file)
    rep = verify_all(T)
    if args.json:
        data = {
            "identities": [
                {"name": i.name, "lhs": _show(i.lhs), "rhs": _show(i.rhs), "pass": i.passed}
                for i in rep.identities
            ],
            "M": str(rep.M),
            "N": str(rep.N),
            "K": str(rep.K),
            "R": str(rep.R),
            "pass": rep.passed,
        }
        text = ""
    else:
        data = None
        lines = [
            f"{'PASS' if i.passed else 'FAIL'}  {i.name}: lhs={_show(i.lhs)} rhs={_show(i.rhs)}"
            for i in rep.identities
        ]
        lines.append(f"M = {rep.M}, N = {rep.N}, K = {rep.K}, R = {rep.R}")
        text = "\n".join(lines) + "\n"
    _emit(args, data, text)
    return 0 if rep.passed else 1


def cmd_fuzz(args) -> int:
    spec = FieldSpec.from_text(args.field)
    summary = fuzz.run(spec, args.count, args.seed, args.coord_bound, args.denom_bound)
    if args.json:
        data = {
            "field": str(spec),
            "count": summary.count,
            "seed": summary.seed,
            "coord_bound": summary.coord_bound,
            "denom_bound": summary.denom_bound,
            "trials": summary.trials,
            "skipped": summary.skipped,
            "failures": [
                {
                    "trial": f.trial,
                    "check": f.check,
                    "lhs": f.lhs,
                    "rhs": f.rhs,
                    "instance": instance.to_dict(f.instance),
                }
                for f in summary.failures
            ],
        }
        text = ""
    else:
        data = None
        lines = [
            f"fuzz field={spec} count={summary.count} seed={summary.seed} "
            f"coord-bound={summary.coord_bound} denom-bound={summary.denom_bound}",
            f"trials run: {summary.trials}",
            f"skipped (degenerate after {fuzz.RETRY_CAP} draws): {summary.skipped}",
            f"failures: {len(summary.failures)}",
        ]
        for f in summary.failures:
            lines.append(f"FAIL trial {f.trial}: {f.check}: lhs={f.lhs} rhs={f.rhs}")
            lines.append(instance.dumps(f.instance).rstrip("\n"))
        text = "\n".join(lines) + "\n"
    _emit(args, data, text)
    return 1 if summary.failures else 0


def cmd_oracle(args) -> int:
    T = instance.load(args.file)
    rep = euclidean_crosscheck(T)
    if args.json:
        data = {
            "comparisons": [
                {
                    "quantity": c.quantity,
                    "exact": c.exact,
                    "classical": c.classical,
                    "deviation": c.deviation,
                    "pass": c.passed,
                }
                for c in rep.comparisons
            ],
            "max_deviation": rep.max_deviation,
            "tolerance": TOLERANCE,
            "pass": rep.passed,
        }
        text = ""
    else:
        data = None
        width = max(len(c.quantity) for c in rep.comparisons)
        lines = [f"{'quantity':<{width}}  {'exact':>24}  {'classical':>24}  deviation"]
        for c in rep.comparisons:
            lines.append(f"{c.quantity:<{width}}  {c.exact!r:>24}  {c.classical!r:>24}  {c.deviation:.3e}")
        lines.append(f"max deviation: {rep.max_deviation:.3e} (tolerance {TOLERANCE:g} relative)")
        lines.append("PASS" if rep.passed else "FAIL")
        text = "\n".join(lines) + "\n"
    _emit(args, data, text)
    return 0 if rep.passed else 1


def _emit(args, data, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    parser = argparse.ArgumentParser(
        prog="rattetra", description="Exact rational trigonometry of tetrahedra under a bilinear form."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common], help="print all invariants of an instance")
    p.add_argument("file")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", parents=[common], help="check the circumquadrance identities")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", parents=[common], help="check the identities on random instances")
    p.add_argument("--field", required=True, help="rational or prime:<p>")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--coord-bound", type=int, default=5)
    p.add_argument("--denom-bound", type=int, default=5)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("oracle", parents=[common], help="compare with floating-point Euclidean geometry")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "fuzz" and min(args.count, args.coord_bound, args.denom_bound) < 1:
        parser.error("--count, --coord-bound and --denom-bound must be at least 1")
    try:
        return args.func(args)
    except RatTetraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
