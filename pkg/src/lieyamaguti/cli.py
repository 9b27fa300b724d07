"""Command-line front end.

Every invocation runs exactly one command, writes a JSON report to --out or
stdout, and exits with a stable code:

    0  pass (checks clean / computation done)
    1  checks failed (violations found)
    2  usage or input error (bad JSON, parse error, unknown example, ...)
    3  internal size cap exceeded

The ``examples`` command emits the bare fixture JSON (byte-stable) instead of
a report envelope so its output is directly usable as an input file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algebra as alg
from . import bundle as bnd
from . import cohomology as coh
from . import representation as rep
from .errors import (
    CocycleCheckFailed,
    LieYamagutiError,
    ShapeMismatch,
    SizeCapExceeded,
)
from .fixtures import FIXTURES, fixture, render
from .linalg import Matrix
from .schemas import (
    algebra_from_json,
    algebra_to_json,
    cochain_pair_from_json,
    matrix_to_json,
    representation_from_json,
    vec_to_json,
)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _resolve_rep(selector: str, a: alg.LYAlgebra, rep_dim: int) -> rep.Representation:
    if selector == "adjoint":
        return rep.adjoint(a)
    if selector == "trivial":
        return rep.trivial_rep(a, rep_dim)
    return representation_from_json(_load_json(selector), a.dim)


def _axiom_report_json(report: alg.AxiomReport) -> dict:
    return {
        "ok": report.ok,
        "violations": {
            ax: [
                {"tuple": [i + 1 for i in tup], "defect": vec_to_json(defect)}
                for tup, defect in entries
            ]
            for ax, entries in report.violations.items()
            if entries
        },
    }


def _rep_report_json(report: rep.RepReport) -> dict:
    return {
        "ok": report.ok,
        "violations": {
            cond: [
                {"tuple": [i + 1 for i in tup], "defect": matrix_to_json(defect)}
                for tup, defect in entries
            ]
            for cond, entries in report.violations.items()
            if entries
        },
        "rlyb7_ok": not report.rlyb7_violations,
    }


def _cocycle_report_json(report: bnd.CocycleReport) -> dict:
    def norm_json(n):
        if n is None:
            return None
        if isinstance(n, Fraction):
            return f"{n.numerator}/{n.denominator}" if n.denominator != 1 else str(n.numerator)
        return n

    def point_json(p):
        if p is None:
            return None
        if p and isinstance(p[0], tuple):
            return [vec_to_json(q) for q in p]
        return vec_to_json(p)

    return {
        "ok": report.ok,
        "mode": report.mode.kind,
        "tolerance": report.mode.tol if report.mode.kind == "float" else None,
        "checks": report.checks,
        "failures": [
            {
                "kind": f.kind,
                "where": f.where,
                "point": point_json(f.point),
                "defect_norm": norm_json(f.defect_norm),
                "detail": f.detail,
            }
            for f in report.failures
        ],
    }


def _parse_mode(args) -> bnd.EvalMode:
    tol = 1e-9
    if getattr(args, "tol", None):
        try:
            tol = float(Fraction(args.tol))
        except ValueError:
            tol = float(args.tol)
    return bnd.EvalMode(getattr(args, "mode", "exact"), tol)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lieyamaguti",
        description="Exact checks and cohomology for Lie-Yamaguti algebras and sampled bundles",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write the JSON report to this path instead of stdout")

    def add_rep(p):
        p.add_argument(
            "--rep",
            default="adjoint",
            help="coefficient representation: adjoint | trivial | PATH to a representation JSON",
        )
        p.add_argument(
            "--rep-dim",
            type=int,
            default=1,
            help="module dimension for --rep trivial (default 1)",
        )

    p = sub.add_parser("check", help="validate LY1..LY6 for an algebra file")
    p.add_argument("input")
    add_out(p)

    p = sub.add_parser("derivations", help="basis of the derivation algebra")
    p.add_argument("input")
    add_out(p)

    p = sub.add_parser("cohomology", help="H^(2,3) / H^(2p,2p+1) dimensions")
    p.add_argument("input")
    p.add_argument("--p", type=int, default=1, dest="level", help="cochain level p (default 1)")
    p.add_argument("--cap", type=int, default=coh.DEFAULT_SIZE_CAP, help="cochain size cap")
    add_rep(p)
    add_out(p)

    p = sub.add_parser("rep-check", help="validate RLYB1..RLYB6 for a representation")
    p.add_argument("input")
    add_rep(p)
    add_out(p)

    p = sub.add_parser("semidirect", help="semi-direct product algebra g ⋉ V")
    p.add_argument("input")
    add_rep(p)
    add_out(p)

    p = sub.add_parser("twist", help="twisted semi-direct product by a (2,3)-cochain")
    p.add_argument("input")
    add_rep(p)
    p.add_argument("--tau", help="path to a (2,3)-cochain pair JSON")
    p.add_argument(
        "--tau-cocycle",
        type=int,
        default=None,
        help="use the k-th basis cocycle of Z^(2,3) instead of --tau",
    )
    add_out(p)

    p = sub.add_parser("bundle-check", help="cocycle/automorphism verification for a bundle")
    p.add_argument("input")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", help="absolute entrywise tolerance for float mode (default 1e-9)")
    add_out(p)

    p = sub.add_parser("bundle-cohomology", help="fibrewise cohomology dims over all samples")
    p.add_argument("input")
    p.add_argument("--which", choices=("h1", "h23", "upper", "der"), default="h1")
    p.add_argument("--p", type=int, default=2, dest="level", help="level for --which upper")
    p.add_argument("--cap", type=int, default=coh.DEFAULT_SIZE_CAP)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", help="absolute entrywise tolerance for float mode")
    add_out(p)

    p = sub.add_parser("examples", help="emit a bundled fixture JSON")
    p.add_argument("name", choices=sorted(FIXTURES))
    add_out(p)
    return ap


def _emit(args, report: dict) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(command: str, status: str, payload: dict, diagnostics: list[str]) -> dict:
    return {"command": command, "status": status, "payload": payload, "diagnostics": diagnostics}


def _cmd_check(args) -> int:
    a = algebra_from_json(_load_json(args.input))
    report = alg.check_axioms(a)
    payload = {"dim": a.dim, "name": a.name, "axioms": _axiom_report_json(report)}
    diags = [] if report.ok else [report.summary()]
    _emit(args, _report("check", "pass" if report.ok else "fail", payload, diags))
    return 0 if report.ok else 1


def _cmd_derivations(args) -> int:
    a = algebra_from_json(_load_json(args.input))
    basis = alg.derivations(a)
    payload = {
        "dim": basis.dim,
        "basis": [matrix_to_json(Matrix(a.dim, a.dim, v)) for v in basis.vectors],
    }
    _emit(args, _report("derivations", "pass", payload, []))
    return 0


def _cmd_cohomology(args) -> int:
    a = algebra_from_json(_load_json(args.input))
    r = _resolve_rep(args.rep, a, args.rep_dim)
    if args.level < 1:
        raise ShapeMismatch("--p must be >= 1")
    if args.level == 1:
        res = coh.h23(a, r)
        dim_h1, _ = coh.h1(a, r)
        payload = {
            "p": 1,
            "dimZ": res.dim_z,
            "dimB": res.dim_b,
            "dimH": res.dim,
            "dimH23": res.dim,
            "dimH1": dim_h1,
            "delta_squared_zero": True,
            "reading": res.reading,
        }
    else:
        res = coh.h_upper(a, r, args.level, cap=args.cap)
        payload = {
            "p": res.p,
            "dimZ": res.dim_z,
            "dimB": res.dim_b,
            "dimH": res.dim,
            "delta_squared_zero": res.delta_squared_zero,
        }
    _emit(args, _report("cohomology", "pass", payload, []))
    return 0


def _cmd_rep_check(args) -> int:
    a = algebra_from_json(_load_json(args.input))
    r = _resolve_rep(args.rep, a, args.rep_dim)
    report = rep.check_representation(a, r)
    payload = _rep_report_json(report)
    diags = [] if report.ok else [f"violated: {', '.join(report.violated())}"]
    _emit(args, _report("rep-check", "pass" if report.ok else "fail", payload, diags))
    return 0 if report.ok else 1


def _cmd_semidirect(args) -> int:
    a = algebra_from_json(_load_json(args.input))
    r = _resolve_rep(args.rep, a, args.rep_dim)
    product = rep.semidirect(a, r)
    report = alg.check_axioms(product)
    payload = {
        "algebra": algebra_to_json(product),
        "axioms_ok": report.ok,
        "violated_axioms": report.violated_axioms(),
    }
    diags = [] if report.ok else [report.summary()]
    _emit(args, _report("semidirect", "pass" if report.ok else "fail", payload, diags))
    return 0 if report.ok else 1


def _cmd_twist(args) -> int:
    a = algebra_from_json(_load_json(args.input))
    r = _resolve_rep(args.rep, a, args.rep_dim)
    if (args.tau is None) == (args.tau_cocycle is None):
        raise ShapeMismatch("twist needs exactly one of --tau PATH or --tau-cocycle K")
    if args.tau is not None:
        tau = cochain_pair_from_json(_load_json(args.tau), a.dim, r.e)
    else:
        res = coh.h23(a, r)
        k = args.tau_cocycle
        if not 0 <= k < res.z_basis.dim:
            raise ShapeMismatch(
                f"--tau-cocycle index {k} out of range (dim Z = {res.z_basis.dim})"
            )
        tau = coh.CochainPair.from_flat(1, a.dim, r.e, list(res.z_basis.vectors[k]))
    is_cocycle = coh.delta(a, r, tau).is_zero() and all(
        c.is_zero() for c in coh.delta_star(a, r, tau)
    )
    product = rep.twisted_semidirect(a, r, tau)
    report = alg.check_axioms(product)
    payload = {
        "algebra": algebra_to_json(product),
        "axioms_ok": report.ok,
        "violated_axioms": report.violated_axioms(),
        "tau_is_cocycle": is_cocycle,
    }
    diags = [] if report.ok else [report.summary()]
    _emit(args, _report("twist", "pass" if report.ok else "fail", payload, diags))
    return 0 if report.ok else 1


def _cmd_bundle_check(args) -> int:
    from .schemas import bundle_from_json

    b = bundle_from_json(_load_json(args.input))
    report = bnd.check_cocycle(b, _parse_mode(args))
    payload = _cocycle_report_json(report)
    diags = [] if report.ok else [f"{len(report.failures)} failures"]
    _emit(args, _report("bundle-check", "pass" if report.ok else "fail", payload, diags))
    return 0 if report.ok else 1


def _cmd_bundle_cohomology(args) -> int:
    from .schemas import bundle_from_json

    b = bundle_from_json(_load_json(args.input))
    mode = _parse_mode(args)
    try:
        if args.which == "der":
            res = bnd.der_bundle_dims(b, mode)
            payload = {
                "which": "der",
                "per_point": [
                    {"chart": x.chart, "point": vec_to_json(x.point), **x.dims} for x in res.dims
                ],
                "constant": res.constant,
                "conjugation_ok": res.ok,
                "conjugation_failures": [
                    {
                        "where": f.where,
                        "point": vec_to_json(f.point) if f.point else None,
                        "detail": f.detail,
                    }
                    for f in res.conjugation_failures
                ],
            }
            ok = res.ok
        else:
            res = bnd.bundle_cohomology(b, args.which, args.level, mode, cap=args.cap)
            payload = {
                "which": res.which,
                "p": res.p,
                "per_point": [
                    {"chart": x.chart, "point": vec_to_json(x.point), **x.dims} for x in res.points
                ],
                "constant": res.constant,
            }
            ok = True
    except CocycleCheckFailed as exc:
        payload = {"cocycle": _cocycle_report_json(exc.report)}
        _emit(args, _report("bundle-cohomology", "fail", payload, [str(exc)]))
        return 1
    _emit(args, _report("bundle-cohomology", "pass" if ok else "fail", payload, []))
    return 0 if ok else 1


def _cmd_examples(args) -> int:
    text = render(fixture(args.name))
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_HANDLERS = {
    "check": _cmd_check,
    "derivations": _cmd_derivations,
    "cohomology": _cmd_cohomology,
    "rep-check": _cmd_rep_check,
    "semidirect": _cmd_semidirect,
    "twist": _cmd_twist,
    "bundle-check": _cmd_bundle_check,
    "bundle-cohomology": _cmd_bundle_cohomology,
    "examples": _cmd_examples,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run one command, return the exit code (never raises)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _HANDLERS[args.command](args)
    except SizeCapExceeded as exc:
        _emit_error(args, str(exc))
        return 3
    except LieYamagutiError as exc:
        _emit_error(args, str(exc))
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        _emit_error(args, f"{type(exc).__name__}: {exc}")
        return 2


def _emit_error(args, message: str) -> None:
    _emit(args, _report(getattr(args, "command", "?"), "error", {}, [message]))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
