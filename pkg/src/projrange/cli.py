"""Command-line front end.

Exit codes: 0 ok, 2 bad input, 3 numerical inconsistency, 4 domain error,
5 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema
import numpy as np

from . import __version__
from .alternating import alternating_iterate, top_start_vector
from .ellipse import hull_support, uniform_angles
from .errors import (ConsistencyError, DimensionBudgetExceeded, IndexOutOfRange, OutOfDomain,
                     PreconditionError, SpectrumWithoutZero, ZeroInitialVector)
from .fourier import annihilation_check
from .io import (ANNIHILATION_SCHEMA, ITERATE_SCHEMA, RANGE_SCHEMA, RECOVER_SCHEMA, SCHEMA_VERSION,
                 dumps, format_float, load_pair, pair_document, spectrum_document, validate)
from .numrange import predicted_closure, rectangle_check, sector_angle, support_values, trace_boundary
from .pairs import make_rng
from .recovery import full_recovery, radii_report
from .spectral import construct_pair, friedrichs_cosine, product_spectrum

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY, EXIT_DOMAIN, EXIT_IO = 0, 2, 3, 4, 5

AGREEMENT_TOL = 1e-8


class InputError(Exception):
    pass


def _read_json(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _seed_of(doc: dict, seed: int | None):
    gen = doc.get("generator") or {}
    return seed if seed is not None else gen.get("seed")


def range_document(doc: dict, grid: int, seed: int | None = None) -> dict:
    pair = load_pair(doc)
    t = pair.product
    spec = product_spectrum(pair)
    hull = predicted_closure(spec)
    alphas = uniform_angles(grid)
    gap = float(np.max(np.abs(support_values(t, alphas) - hull_support(hull, alphas))))
    if gap > AGREEMENT_TOL:
        raise ConsistencyError(f"direct and predicted support functions differ by {gap:.3e}")
    boundary = trace_boundary(t, grid)
    radii = radii_report(pair, grid)
    out = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "seed": _seed_of(doc, seed),
        "spectrum": spectrum_document(spec),
        "identity_pair": hull.identity,
        "hull_lambdas": list(hull.lambdas),
        "boundary": [[a, z.real, z.imag] for a, z in zip(boundary.alphas, boundary.points)],
        "radii": {k: float(v) if not isinstance(v, bool) else v for k, v in radii.as_dict().items()},
        "sector_angle": sector_angle(pair),
        "rectangle_check": rectangle_check(boundary),
        "friedrichs_cosine": friedrichs_cosine(pair),
        "support_agreement": gap,
    }
    return validate(out, RANGE_SCHEMA)


def recover_document(doc: dict, grid: int, tol: float) -> tuple[dict, bool]:
    pair = load_pair(doc)
    recovered = full_recovery(pair, grid=grid, tol=tol)
    truth = product_spectrum(pair)
    diff = [v for v in recovered.values if not truth.contains(v, tol)]
    diff += [v for v in truth.values if not recovered.contains(v, tol)]
    out = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "recovered": list(recovered.values),
        "truth": spectrum_document(truth),
        "symmetric_difference": sorted(diff),
        "tol": tol,
    }
    return validate(out, RECOVER_SCHEMA), not diff


def iterate_rows(doc: dict, n: int, start: str, seed: int | None) -> list[tuple[int, float, float]]:
    pair = load_pair(doc)
    if start == "top":
        x0 = top_start_vector(pair)
    else:
        rng = make_rng(0 if seed is None else seed)
        x0 = rng.standard_normal(pair.dim) + 1j * rng.standard_normal(pair.dim)
    run = alternating_iterate(pair, x0, n)
    return [(k, err, run.bound(k)) for k, err in run.iterates]


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"not a comma-separated list of numbers: {text!r}") from exc


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"not a comma-separated list of integers: {text!r}") from exc


def cmd_range(args) -> int:
    doc = range_document(_read_json(args.input), args.grid, args.seed)
    _emit(dumps(doc), args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    k = _parse_floats(args.k)
    pair = construct_pair(k, args.dim)
    _emit(dumps(pair_document(pair)), args.out)
    return EXIT_OK


def cmd_recover(args) -> int:
    doc, ok = recover_document(_read_json(args.input), args.grid, args.tol)
    _emit(dumps(doc), args.out)
    if not ok:
        print(f"recovered spectrum differs from the eigensolver: {doc['symmetric_difference']}",
              file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def cmd_iterate(args) -> int:
    rows = iterate_rows(_read_json(args.input), args.n, args.start, args.seed)
    if args.format == "json":
        text = dumps(validate({"schema_version": SCHEMA_VERSION, "rows": [list(r) for r in rows]},
                              ITERATE_SCHEMA))
    else:
        lines = ["n,error,bound"] + [f"{k},{format_float(e)},{format_float(b)}" for k, e, b in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_annihilate(args) -> int:
    rep = annihilation_check(_parse_ints(args.s), _parse_ints(args.sigma), args.N, tol=args.tol)
    doc = {"schema_version": SCHEMA_VERSION, "tool_version": __version__, **rep.as_dict()}
    _emit(dumps(validate(doc, ANNIHILATION_SCHEMA)), args.out)
    return EXIT_OK if rep.consistent else EXIT_CONSISTENCY


def cmd_figures(args) -> int:
    from .figures import write_figures
    for path in write_figures(args.out or "figures"):
        print(path)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import run_all
    selected = _parse_ints(args.only) if args.only else None
    if selected and any(not 1 <= i <= 11 for i in selected):
        raise InputError("criteria are numbered 1 to 11")
    results = run_all(selected)
    text = "\n".join(r.line() for r in results) + "\n"
    text += f"{sum(r.passed for r in results)}/{len(results)} criteria passed\n"
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CONSISTENCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projrange",
                                     description="Numerical range of a product of two orthogonal projections.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=True, tol=None):
        p.add_argument("--out", help="output path (default: stdout)")
        if grid:
            p.add_argument("--grid", type=int, default=1024, help="angle grid size (default 1024)")
        if tol is not None:
            p.add_argument("--tol", type=float, default=tol, help=f"tolerance (default {tol:g})")
        p.add_argument("--seed", type=int, default=None, help="seed recorded in outputs / used for random starts")
        p.add_argument("--format", choices=("json", "csv"), default=None, help="output format")

    p = sub.add_parser("range", help="closure of W(P2P1) with spectrum, radii and localization")
    p.add_argument("input", help="pair specification (JSON file, '-' for stdin)")
    common(p)
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("construct", help="pair whose product has a prescribed spectrum")
    p.add_argument("k", help="comma-separated spectral values, e.g. 0,0.25,1")
    p.add_argument("--dim", type=int, default=None, help="ambient dimension (default 2 per nonzero value)")
    common(p, grid=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("recover", help="recover the spectrum from numerical ranges")
    p.add_argument("input")
    common(p, tol=1e-6)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("iterate", help="alternating projections error trace (CSV)")
    p.add_argument("input")
    p.add_argument("-n", type=int, default=50, help="number of iterations (default 50)")
    p.add_argument("--start", choices=("top", "random"), default="top",
                   help="initial vector: slowest direction or seeded random (default top)")
    common(p, grid=False)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("annihilate", help="strong annihilating pair check for the N-point DFT")
    p.add_argument("N", type=int)
    p.add_argument("s", help="comma-separated indices of S (may be empty: '')")
    p.add_argument("sigma", help="comma-separated indices of Sigma")
    common(p, grid=False, tol=1e-9)
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("figures", help="write the ellipse and full-region SVG figures")
    common(p, grid=False)
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers")
    common(p, grid=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "grid", 1024) is not None and getattr(args, "grid", 1024) < 16:
        print("error: --grid must be at least 16", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, jsonschema.ValidationError, ZeroInitialVector) as exc:
        msg = exc.message if isinstance(exc, jsonschema.ValidationError) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (SpectrumWithoutZero, DimensionBudgetExceeded, OutOfDomain, IndexOutOfRange,
            PreconditionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
