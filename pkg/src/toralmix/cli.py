"""Command-line front end: reproducible analyses with JSON/CSV artifacts.

Subcommands: analyze, cohomology, resonances, spectrum, correlate, ulam.
Every run with an identical configuration (including seed) writes
byte-identical artifacts; reports embed the tool version, a config echo and
the matrix hash.

Matrix input: a plain-text file (first line d, then d rows of d integers) or
an inline JSON array of arrays passed directly on the command line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bounds import degree_bounds, resonance_report, toral_gap_check
from .cohomology import induced_action
from .core import parse_matrix_text, validate_automorphism
from .correlation import (
    TrigObservable,
    correlate_exact,
    correlate_mc,
    fit_rate,
    default_noise_floor,
)
from .errors import (
    CapExceeded,
    DegreeOutOfRange,
    IllConditioned,
    InsufficientData,
    NotHyperbolic,
    NotSquare,
    NotUnimodular,
    ToralmixError,
)
from .serialize import (
    action_to_dict,
    automorphism_to_dict,
    dumps,
    fmt_float,
    gap_to_dict,
    matrix_sha256,
    report_to_dict,
    series_rows,
    write_csv,
)
from .transfer import (
    export_coordinate_text,
    linear_torus_map,
    perturbed_cat_map,
    pushforward_matrix,
    stochastic_spectrum,
    ulam_discretize,
)

_VALIDATION_ERRORS = (NotSquare, NotUnimodular, NotHyperbolic, DegreeOutOfRange,
                      IllConditioned, ValueError)


def _read_matrix(spec: str):
    text = spec.strip()
    if text.startswith("["):
        return json.loads(text)
    with open(spec, "r", encoding="utf-8") as fh:
        content = fh.read()
    if content.lstrip().startswith("["):
        return json.loads(content)
    return parse_matrix_text(content)


def _parse_observable(spec: str) -> TrigObservable:
    """Observable spec: 'cos:k1,k2,...', 'sin:...', or inline JSON
    [{"k": [...], "re": ..., "im": ...}, ...]."""
    if spec.startswith("cos:"):
        return TrigObservable.cosine([int(x) for x in spec[4:].split(",")])
    if spec.startswith("sin:"):
        return TrigObservable.sine([int(x) for x in spec[4:].split(",")])
    if spec.strip().startswith("["):
        terms = json.loads(spec)
        return TrigObservable.from_terms(
            (tuple(t["k"]), complex(t.get("re", 0.0), t.get("im", 0.0))) for t in terms
        )
    raise ValueError(f"cannot parse observable {spec!r}")


def _meta(args, matrix) -> dict:
    echo = {}
    for k, v in sorted(vars(args).items()):
        if k in ("func",):
            continue
        echo[k] = v if not isinstance(v, float) else float(v)
    return {
        "tool": "toralmix",
        "version": __version__,
        "command": args.command,
        "config": echo,
        "matrix_sha256": matrix_sha256(matrix),
    }


def _outpath(args, name: str) -> str:
    os.makedirs(args.output_dir, exist_ok=True)
    return os.path.join(args.output_dir, name)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {path}")


def _cmd_analyze(args) -> int:
    m = _read_matrix(args.matrix)
    t = validate_automorphism(m, tol=args.tol_unit)
    doc = {"meta": _meta(args, t.matrix), "automorphism": automorphism_to_dict(t)}
    _write(_outpath(args, "analyze.json"), dumps(doc))
    print(f"d_s={t.d_s} d_u={t.d_u} lambda={fmt_float(t.lam)} h_top={fmt_float(t.h_top)}")
    return 0


def _cmd_cohomology(args) -> int:
    m = _read_matrix(args.matrix)
    t = validate_automorphism(m, tol=args.tol_unit)
    degrees = [args.degree] if args.degree is not None else list(range(t.dim + 1))
    for l in degrees:
        act = induced_action(t, l, rank_tol=args.tol_rank)
        doc = {"meta": _meta(args, t.matrix), "action": action_to_dict(act)}
        _write(_outpath(args, f"cohomology_l{l}.json"), dumps(doc))
    return 0


def _cmd_resonances(args) -> int:
    m = _read_matrix(args.matrix)
    t = validate_automorphism(m, tol=args.tol_unit)
    rep = resonance_report(t, rank_tol=args.tol_rank)
    gap = toral_gap_check(t)
    doc = {
        "meta": _meta(args, t.matrix),
        "report": report_to_dict(rep),
        "gap_certificate": gap_to_dict(gap),
        "degree_bounds": [
            {"degree": r.degree, "dim": r.dim, "bound": r.bound,
             "max_modulus": r.max_modulus}
            for r in degree_bounds(t)
        ],
    }
    _write(_outpath(args, "resonances.json"), dumps(doc))
    _print_resonance_table(rep)
    if args.plot:
        _plot_resonances(t, rep, _outpath(args, "resonances.png"))
    return 0


def _print_resonance_table(rep) -> None:
    print(f"h_top = {fmt_float(rep.h_top)}   lambda = {fmt_float(rep.lam)}   "
          f"annulus inner radius = {fmt_float(rep.annulus_inner)}")
    print("  i  Lambda_i (re, im)                        |Lambda_i|           N_i  rescaled |.|")
    for i, ((z, n), w) in enumerate(zip(rep.resonances, rep.rescaled), start=1):
        print(f"  {i:<3}({fmt_float(z.real)}, {fmt_float(z.imag)})"
              f"  {fmt_float(abs(z)):<20} {n:<4} {fmt_float(abs(w))}")
    print(f"nu = {fmt_float(rep.nu)}   decay_rate_bound = {fmt_float(rep.decay_rate_bound)}")


def _plot_resonances(t, rep, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import math

    import matplotlib.pyplot as plt
    import numpy as np

    spec = induced_action(t, t.d_s).spectrum
    fig, ax = plt.subplots(figsize=(5, 5))
    th = np.linspace(0, 2 * np.pi, 256)
    for radius, style in ((math.exp(rep.h_top), "-"), (rep.annulus_inner, "--")):
        ax.plot(radius * np.cos(th), radius * np.sin(th), style, color="gray", lw=1)
    ax.scatter([z.real for z in spec], [z.imag for z in spec], s=25, color="crimson")
    ax.set_aspect("equal")
    ax.set_title("degree-d_s spectrum vs resonance annulus")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    print(f"wrote {path}")


def _cmd_spectrum(args) -> int:
    m = _read_matrix(args.matrix)
    t = validate_automorphism(m, tol=args.tol_unit)
    op = pushforward_matrix(t, args.cutoff, cap=args.cap)
    rows = [[float(z.real), float(z.imag), float(abs(z))] for z in op.spectrum]
    write_csv(_outpath(args, f"spectrum_K{args.cutoff}.csv"), ["re", "im", "modulus"], rows)
    print(f"wrote {_outpath(args, f'spectrum_K{args.cutoff}.csv')}")
    print(f"dim={op.dim} escaped={op.escaped_modes} nilpotency_index={op.nilpotency_index} "
          f"eigenvalues_above_floor={len(op.spectrum)}")
    if args.export_matrix:
        _write(_outpath(args, f"pushforward_K{args.cutoff}.txt"), export_coordinate_text(op))
    return 0


def _cmd_correlate(args) -> int:
    m = _read_matrix(args.matrix)
    t = validate_automorphism(m, tol=args.tol_unit)
    phi = _parse_observable(args.phi)
    psi = _parse_observable(args.psi)
    bound = resonance_report(t).decay_rate_bound
    if args.samples:
        series = correlate_mc(linear_torus_map(t.matrix), phi, psi, args.nmax,
                              args.samples, args.seed, dim=t.dim, bound_rate=bound)
        name = "correlate_mc.csv"
    else:
        series = correlate_exact(t, phi, psi, args.nmax, bound_rate=bound)
        name = "correlate_exact.csv"
    write_csv(_outpath(args, name), ["n", "re", "im", "stderr"], series_rows(series))
    print(f"wrote {_outpath(args, name)}")
    fit_doc = {"bound_rate": bound, "floor": None, "fitted_rate": None,
               "prefactor": None, "n_used": [], "note": ""}
    floor = args.floor if args.floor is not None else default_noise_floor(series)
    fit_doc["floor"] = floor
    try:
        fit = fit_rate(series, floor)
        fit_doc.update(fitted_rate=fit.rate, prefactor=fit.prefactor,
                       n_used=list(fit.n_used))
    except InsufficientData as exc:
        fit_doc["note"] = str(exc)
    if series.decorrelation_time is not None:
        fit_doc["decorrelation_time"] = series.decorrelation_time
    doc = {"meta": _meta(args, t.matrix), "fit": fit_doc}
    _write(_outpath(args, "correlate_fit.json"), dumps(doc))
    return 0


def _cmd_ulam(args) -> int:
    m = _read_matrix(args.matrix)
    t = validate_automorphism(m, tol=args.tol_unit)
    if args.epsilon:
        map_fn = perturbed_cat_map(t.matrix, args.epsilon)
    else:
        map_fn = linear_torus_map(t.matrix)
    p = ulam_discretize(map_fn, args.grid, args.samples_per_cell, args.seed, dim=t.dim)
    eigs = stochastic_spectrum(p, k=args.top)
    rows = [[float(z.real), float(z.imag), float(abs(z))] for z in eigs]
    write_csv(_outpath(args, f"ulam_N{args.grid}.csv"), ["re", "im", "modulus"], rows)
    print(f"wrote {_outpath(args, f'ulam_N{args.grid}.csv')}")
    print(f"leading eigenvalue modulus = {fmt_float(abs(eigs[0]))}; "
          f"second = {fmt_float(abs(eigs[1])) if len(eigs) > 1 else 'n/a'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="toralmix",
        description="Resonances and mixing bounds of hyperbolic toral automorphisms",
    )
    ap.add_argument("--version", action="version", version=f"toralmix {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--matrix", required=True,
                       help="matrix file (text or JSON) or inline JSON array")
        p.add_argument("--output-dir", default=os.environ.get("TORALMIX_OUTPUT_DIR", "."),
                       help="artifact directory (env TORALMIX_OUTPUT_DIR)")
        p.add_argument("--tol-unit", type=float, default=1e-8,
                       help="unit-circle tolerance for the hyperbolicity test")
        p.add_argument("--tol-rank", type=float, default=1e-9,
                       help="relative rank tolerance for Jordan detection")

    p = sub.add_parser("analyze", help="validate a matrix and report its constants")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("cohomology", help="compound matrices and their spectra")
    common(p)
    p.add_argument("--degree", type=int, default=None, help="single degree l (default: all)")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("resonances", help="resonance report, gap certificate, degree bounds")
    common(p)
    p.add_argument("--plot", action="store_true", help="write a spectrum/annulus png")
    p.set_defaults(func=_cmd_resonances)

    p = sub.add_parser("spectrum", help="truncated pushforward spectrum on Fourier modes")
    common(p)
    p.add_argument("--cutoff", type=int, required=True, help="max |k|_inf of retained modes")
    p.add_argument("--cap", type=int, default=1_000_000, help="max truncation dimension")
    p.add_argument("--export-matrix", action="store_true",
                   help="also write the sparse matrix in coordinate text form")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("correlate", help="correlation series, exact or Monte-Carlo")
    common(p)
    p.add_argument("--phi", required=True, help="observable, e.g. cos:1,0")
    p.add_argument("--psi", required=True, help="observable, e.g. cos:2,1")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--samples", type=int, default=0,
                   help="Monte-Carlo sample count (0 = exact mode-matching)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--floor", type=float, default=None,
                   help="noise floor for rate fitting (default 5x max stderr)")
    p.set_defaults(func=_cmd_correlate)

    p = sub.add_parser("ulam", help="Ulam stochastic matrix spectrum (exploratory)")
    common(p)
    p.add_argument("--grid", type=int, default=32, help="cells per axis")
    p.add_argument("--samples-per-cell", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.0,
                   help="strength of the built-in sin perturbation (0 = linear)")
    p.add_argument("--top", type=int, default=6, help="number of leading eigenvalues")
    p.set_defaults(func=_cmd_ulam)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (CapExceeded, OSError, json.JSONDecodeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ToralmixError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
