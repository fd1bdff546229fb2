"""Command-line front end: level tables, method comparisons, integral and
reduction queries, fine-structure reports.

Exit codes: 0 success, 2 usage error, 3 tolerance failure in ``compare``,
4 computation error.  Output is JSON (default) or CSV on stdout; numbers
serialize in shortest round-trip decimal form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import fine_structure as fs
from . import integrals
from . import nikiforov_uvarov as nu
from . import numerov as nv
from . import phase
from . import spectra
from .errors import SpectraLabError
from .potentials import PotentialKind, build_model

__all__ = ["LevelComparison", "main", "run"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_COMPUTE = 4

_METHODS = ("exact", "wkb_closed", "wkb_numeric", "numerov")
_CSV_COLUMNS = (
    "n_r",
    "angular",
    "e_exact",
    "e_wkb_closed",
    "e_wkb_numeric",
    "e_numerov",
    "abs_dev",
    "rel_dev",
    "within_tol",
)


class _UsageError(Exception):
    pass


@dataclass
class LevelComparison:
    """One spectral line computed by up to four methods."""

    n_r: int
    angular: float
    e_exact: Optional[float] = None
    e_wkb_closed: Optional[float] = None
    e_wkb_numeric: Optional[float] = None
    e_numerov: Optional[float] = None
    abs_dev: Optional[float] = None
    rel_dev: Optional[float] = None
    within_tol: Optional[bool] = None

    def finalize(self, tol: float) -> "LevelComparison":
        values = [
            v
            for v in (self.e_exact, self.e_wkb_closed, self.e_wkb_numeric, self.e_numerov)
            if v is not None
        ]
        if len(values) < 2:
            self.abs_dev = self.rel_dev = None
            self.within_tol = True
            return self
        self.abs_dev = max(abs(a - b) for i, a in enumerate(values) for b in values[i + 1 :])
        ref = max(abs(v) for v in values)
        if ref < 1e-14:
            self.rel_dev = self.abs_dev
            self.within_tol = self.abs_dev <= tol
        else:
            self.rel_dev = self.abs_dev / ref
            self.within_tol = self.rel_dev <= tol
        return self

    def as_row(self) -> dict:
        return {c: getattr(self, c) for c in _CSV_COLUMNS}


_KIND_FLAGS = {
    PotentialKind.COULOMB: ("Z", "l"),
    PotentialKind.KEPLER_ND: ("Z", "l"),
    PotentialKind.RELATIVISTIC_KG: ("mu", "l"),
    PotentialKind.DIRAC: ("mu", "j"),
    PotentialKind.KRATZER: ("gamma2", "l"),
    PotentialKind.OSCILLATOR_ND: ("l",),
    PotentialKind.POSCHL_TELLER: ("a", "b"),
    PotentialKind.MODIFIED_POSCHL_TELLER: ("V0",),
}
_OPTIONAL_FLAGS = {
    PotentialKind.POSCHL_TELLER: ("alpha", "V0"),
    PotentialKind.MODIFIED_POSCHL_TELLER: ("alpha",),
    PotentialKind.DIRAC: ("nu_sign",),
}


def _collect_model(args) -> dict:
    kind = PotentialKind(args.model)
    params = {}
    for name in _KIND_FLAGS[kind]:
        value = getattr(args, name, None)
        if value is None:
            raise _UsageError(f"--{name} is required for model {kind.value}")
        params[name] = value
    for name in _OPTIONAL_FLAGS.get(kind, ()):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    if "l" in params:
        params["l"] = int(params["l"])
    if "nu_sign" in params:
        params["nu_sign"] = int(params["nu_sign"])
    return {"kind": kind, "dim": args.dim, "params": params}


def _parse_range(text: str) -> list:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise _UsageError(f"cannot parse level range {text!r} (use e.g. 0..3 or 0,2)")


def _parse_methods(items) -> list:
    chosen = []
    for item in items:
        for name in item.split(","):
            name = name.strip()
            if name == "all":
                chosen.extend(_METHODS)
            elif name in _METHODS:
                chosen.append(name)
            else:
                raise _UsageError(f"unknown method {name!r}")
    out = []
    for name in chosen:
        if name not in out:
            out.append(name)
    return out


def _compute_rows(spec: dict, n_values, methods, tol: float) -> list:
    kind, dim, params = spec["kind"], spec["dim"], spec["params"]
    wkb_model = build_model(kind, dim=dim, langer=True, **params)
    rows = []
    for n_r in sorted(n_values):
        state = spectra._model_state(wkb_model, n_r)
        row = LevelComparison(n_r=n_r, angular=state.j if state.j is not None else state.l)
        for method in methods:
            if method == "exact":
                row.e_exact = spectra.exact_level(wkb_model, n_r).value
            elif method == "wkb_closed":
                row.e_wkb_closed = spectra.wkb_closed_level(wkb_model, n_r).value
            elif method == "wkb_numeric":
                row.e_wkb_numeric = phase.quantize_level(wkb_model, n_r).value
            else:
                res = nv.solve_eigenvalue(wkb_model.with_langer(False), n_r, tol=1e-9)
                row.e_numerov = res.energy
        rows.append(row.finalize(tol))
    return rows


def _model_block(spec: dict) -> dict:
    model = build_model(spec["kind"], dim=spec["dim"], **spec["params"])
    return {
        "kind": model.kind.value,
        "params": model.params,
        "dim": model.dim,
        "units": model.units,
    }


def _emit_table(args, spec, rows, tol) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                ["" if v is None else (repr(v) if isinstance(v, float) else v) for v in row.as_row().values()]
            )
        sys.stdout.write(buf.getvalue())
    else:
        payload = {
            "schema_version": "1",
            "model": _model_block(spec),
            "tolerance": tol,
            "rows": [row.as_row() for row in rows],
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _emit_flat(args, payload: dict) -> None:
    if getattr(args, "format", "json") == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = list(payload)
        writer.writerow(keys)
        writer.writerow(
            [repr(payload[k]) if isinstance(payload[k], float) else payload[k] for k in keys]
        )
        sys.stdout.write(buf.getvalue())
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _cmd_list(args) -> int:
    entries = []
    for kind in PotentialKind:
        entries.append(
            {
                "kind": kind.value,
                "required": list(_KIND_FLAGS[kind]),
                "optional": list(_OPTIONAL_FLAGS.get(kind, ())),
                "dim": "1..n" if kind.value.endswith("_nd") else ("1" if "poschl" in kind.value else "3"),
            }
        )
    json.dump({"models": entries}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def _cmd_levels(args) -> int:
    spec = _collect_model(args)
    methods = _parse_methods(args.method or ["exact"])
    if not methods:
        raise _UsageError("at least one --method is required")
    rows = _compute_rows(spec, _parse_range(args.nr), methods, args.tol)
    _emit_table(args, spec, rows, args.tol)
    return EXIT_OK


def _cmd_compare(args) -> int:
    spec = _collect_model(args)
    methods = _parse_methods(args.method or ["exact", "wkb_numeric"])
    if len(methods) < 2:
        raise _UsageError("compare needs at least two methods")
    rows = _compute_rows(spec, _parse_range(args.nr), methods, args.tol)
    _emit_table(args, spec, rows, args.tol)
    return EXIT_OK if all(r.within_tol for r in rows) else EXIT_TOLERANCE


def _cmd_integral(args) -> int:
    if args.family == "sommerfeld":
        value = integrals.sommerfeld_integral(args.A, args.B, args.C)
        payload = {"family": "sommerfeld", "A": args.A, "B": args.B, "C": args.C, "value": value}
    elif args.family == "trig":
        value = integrals.trig_integral(args.A, args.B, args.C)
        payload = {"family": "trig", "A": args.A, "B": args.B, "C": args.C, "value": value}
    else:
        value = integrals.hyperbolic_integral(args.eps)
        payload = {"family": "hyperbolic", "eps": args.eps, "value": value}
    _emit_flat(args, payload)
    return EXIT_OK


def _parse_poly(text: str) -> tuple:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse polynomial coefficients {text!r}")


def _cmd_nu_reduce(args) -> int:
    coeffs = nu.HypergeometricCoefficients(
        sigma=_parse_poly(args.sigma),
        tau_tilde=_parse_poly(args.tau_tilde),
        sigma_tilde=_parse_poly(args.sigma_tilde),
    )
    reductions = nu.reduce_hypergeometric(coeffs)
    payload = {
        "sigma": list(coeffs.sigma),
        "tau_tilde": list(coeffs.tau_tilde),
        "sigma_tilde": list(coeffs.sigma_tilde),
        "reductions": [
            {
                "k": r.k,
                "pi": list(r.pi_poly),
                "tau": list(r.tau_poly),
                "lambda": r.lam,
                "branch": {"k_root": r.branch[0], "sign": r.branch[1]},
                "square_residual": r.square_residual,
            }
            for r in reductions
        ],
    }
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "pi0", "pi1", "tau0", "tau1", "lambda", "k_root", "sign"])
        for r in reductions:
            writer.writerow(
                [repr(r.k), repr(r.pi_poly[0]), repr(r.pi_poly[1]), repr(r.tau_poly[0]),
                 repr(r.tau_poly[1]), repr(r.lam), r.branch[0], r.branch[1]]
            )
        sys.stdout.write(buf.getvalue())
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_finestructure(args) -> int:
    ratio = fs.spread_ratio(args.n, args.mu)
    payload = {
        "n": args.n,
        "mu": args.mu,
        "spread_kg": fs.level_spread("kg", args.n, args.mu),
        "spread_dirac": fs.level_spread("dirac", args.n, args.mu),
        "ratio": ratio,
        "ratio_limit": 4.0 * args.n / (2.0 * args.n - 1.0),
    }
    _emit_flat(args, payload)
    return EXIT_OK


def _add_model_flags(parser) -> None:
    parser.add_argument("--model", required=True, choices=[k.value for k in PotentialKind])
    parser.add_argument("--Z", type=float)
    parser.add_argument("--l", type=int)
    parser.add_argument("--mu", type=float)
    parser.add_argument("--j", type=float)
    parser.add_argument("--gamma2", type=float)
    parser.add_argument("--a", type=float)
    parser.add_argument("--b", type=float)
    parser.add_argument("--V0", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--nu-sign", dest="nu_sign", type=int, choices=(-1, 1))
    parser.add_argument("--dim", type=int, default=None)
    parser.add_argument("--nr", default="0", help="level range, e.g. 0..3 or 0,2,5")
    parser.add_argument("--method", action="append", help="exact|wkb_closed|wkb_numeric|numerov|all")
    parser.add_argument("--tol", type=float, default=1e-8, help="relative comparison tolerance")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectralab",
        description="Bound-state spectra of exactly solvable wells by closed form, "
        "semiclassical quadrature and Numerov shooting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def subparser(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("csv", "json"), default="json")
        return p

    subparser("list", help="catalog of potential kinds and their flags")

    p_levels = subparser("levels", help="energy levels by one or more methods")
    _add_model_flags(p_levels)

    p_cmp = subparser("compare", help="cross-method comparison (exit 3 on mismatch)")
    _add_model_flags(p_cmp)

    p_int = subparser("integral", help="closed-form action integrals")
    p_int.add_argument("family", choices=("sommerfeld", "trig", "hyperbolic"))
    p_int.add_argument("--A", type=float)
    p_int.add_argument("--B", type=float)
    p_int.add_argument("--C", type=float)
    p_int.add_argument("--eps", type=float)

    p_nu = subparser("nu-reduce", help="completed-square reductions of a hypergeometric form")
    p_nu.add_argument("--sigma", required=True, help="ascending coefficients, e.g. 0,1")
    p_nu.add_argument("--tau-tilde", dest="tau_tilde", required=True)
    p_nu.add_argument("--sigma-tilde", dest="sigma_tilde", required=True)

    p_fs = subparser("finestructure", help="fine-structure spread ratio report")
    p_fs.add_argument("--n", type=int, required=True)
    p_fs.add_argument("--mu", type=float, required=True)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    handlers = {
        "list": _cmd_list,
        "levels": _cmd_levels,
        "compare": _cmd_compare,
        "integral": _cmd_integral,
        "nu-reduce": _cmd_nu_reduce,
        "finestructure": _cmd_finestructure,
    }
    try:
        if args.command == "integral":
            if args.family in ("sommerfeld", "trig") and None in (args.A, args.B, args.C):
                raise _UsageError(f"--A/--B/--C are required for {args.family}")
            if args.family == "hyperbolic" and args.eps is None:
                raise _UsageError("--eps is required for hyperbolic")
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpectraLabError as exc:
        print(f"computation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
