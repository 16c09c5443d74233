"""Command-line front end.

Subcommands drive the verification suites and the curvature decomposition,
emitting deterministic JSON (or text) reports: byte-identical output for
identical flags.  Exit status: 0 when every check passed (or was vacuous),
1 when some check failed, 2 for malformed configuration or input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .curvature import (
    InvalidCurvatureError,
    curvature_from_json,
    curvature_to_json,
    is_ricci_type,
    random_ricci_type,
    ricci_contract,
    ricci_to_json,
    sigma_tilde,
    weyl_part,
)
from .scalars import Scalar
from .suites import run_decompose, run_project, run_relations
from .symbols import check_complex, check_exactness
from .symplectic import Covector, canonical_covector, standard_space

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _parse_xi(sp, text):
    if text == "canonical":
        return canonical_covector(sp), "canonical"
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != sp.dim:
        raise ValueError(f"--xi needs {sp.dim} comma-separated components or 'canonical'")
    comps = tuple(Scalar(Fraction(p)) for p in parts)
    xi = Covector(comps)
    if xi.is_zero():
        raise ValueError("--xi must be nonzero")
    return xi, [str(c) for c in comps]


def _emit(report, args) -> None:
    if args.format == "json":
        payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        _render_text(report, lines, "")
        payload = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _render_text(node, lines, indent):
    if isinstance(node, dict):
        for key in sorted(node):
            val = node[key]
            if isinstance(val, (dict, list)):
                lines.append(f"{indent}{key}:")
                _render_text(val, lines, indent + "  ")
            else:
                lines.append(f"{indent}{key}: {val}")
    elif isinstance(node, list):
        for item in node:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}-")
                _render_text(item, lines, indent + "  ")
            else:
                lines.append(f"{indent}- {item}")


def _report_passed(report) -> bool:
    status = report.get("status")
    return status in ("pass", "vacuous")


def _add_common(p, slack=False, xi=False, seed=False):
    p.add_argument("--l", type=int, default=2, help="half-dimension (default 2)")
    p.add_argument("--degree", type=int, default=2, help="spinor degree bound D (default 2)")
    if slack:
        p.add_argument("--slack", type=int, default=4, help="extra degree room for preimages (default 4)")
    if xi:
        p.add_argument("--xi", default="canonical", help="'canonical' or 2l comma-separated rationals")
    if seed:
        p.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="symtwist",
        description="Exact verification of the symplectic spinor operator algebra, "
        "twistor symbol sequences and curvature decomposition.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relations", help="commutation-relation identity suite")
    _add_common(p)

    p = sub.add_parser("decompose", help="triangle decomposition, scalar table and chain model suite")
    _add_common(p)

    p = sub.add_parser("project", help="closed-form edge-projection equivalence suite")
    _add_common(p)

    p = sub.add_parser("symbol-check", help="symbol complex and exactness checks")
    _add_common(p, slack=True, xi=True)

    p = sub.add_parser("curvature", help="decompose a curvature tensor file")
    p.add_argument("--input", required=True, help="JSON file holding the tensor")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("gen-curvature", help="deterministic random Ricci-type tensor")
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return ap


def _cmd_suite(args, runner):
    if args.l < 1 or args.degree < 0:
        raise ValueError("need --l >= 1 and --degree >= 0")
    sp = standard_space(args.l)
    report = runner(sp, args.degree)
    _emit(report, args)
    return EXIT_OK if _report_passed(report) else EXIT_CHECK_FAILED


def _cmd_symbol_check(args):
    if args.l < 1 or args.degree < 0 or args.slack < 0:
        raise ValueError("need --l >= 1, --degree >= 0 and --slack >= 0")
    sp = standard_space(args.l)
    xi, label = _parse_xi(sp, args.xi)
    cache = {}
    complex_report = check_complex(sp, args.degree, xi, xi_label=label, _cache=cache)
    exact_report = check_exactness(
        sp, args.degree, xi, args.slack, xi_label=label, _cache=cache
    )
    report = {
        "suite": "symbol-check",
        "complex": complex_report,
        "exactness": exact_report,
        "status": "pass"
        if _report_passed(complex_report) and _report_passed(exact_report)
        else "fail",
    }
    _emit(report, args)
    return EXIT_OK if report["status"] == "pass" else EXIT_CHECK_FAILED


def _cmd_curvature(args):
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        R = curvature_from_json(obj)
    except (OSError, json.JSONDecodeError, KeyError, IndexError, TypeError, ValueError) as exc:
        raise ValueError(f"cannot read curvature tensor from {args.input}: {exc}") from None
    sp = standard_space(R.l)
    try:
        sigma = ricci_contract(sp, R)
    except InvalidCurvatureError as exc:
        report = {
            "suite": "curvature",
            "l": R.l,
            "status": "fail",
            "diagnosis": str(exc),
        }
        _emit(report, args)
        return EXIT_CHECK_FAILED
    st = sigma_tilde(sp, sigma)
    W = weyl_part(sp, R)
    report = {
        "suite": "curvature",
        "l": R.l,
        "ricci": ricci_to_json(sigma),
        "ricci_type_part": curvature_to_json(st),
        "weyl": curvature_to_json(W),
        "is_ricci_type": is_ricci_type(sp, R),
        "status": "pass",
    }
    _emit(report, args)
    return EXIT_OK


def _cmd_gen_curvature(args):
    if args.l < 1:
        raise ValueError("need --l >= 1")
    sp = standard_space(args.l)
    R = random_ricci_type(sp, args.seed)
    _emit(curvature_to_json(R), args)
    return EXIT_OK


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "relations":
            return _cmd_suite(args, run_relations)
        if args.command == "decompose":
            return _cmd_suite(args, run_decompose)
        if args.command == "project":
            return _cmd_suite(args, run_project)
        if args.command == "symbol-check":
            return _cmd_symbol_check(args)
        if args.command == "curvature":
            return _cmd_curvature(args)
        if args.command == "gen-curvature":
            return _cmd_gen_curvature(args)
        raise ValueError(f"unknown command {args.command}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
