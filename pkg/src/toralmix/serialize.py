"""Deterministic JSON/CSV serialization for report artifacts.

All floats are rendered with %.17g (lossless for doubles and byte-stable
across runs), complex values as {re, im} pairs, rationals as exact "p/q"
strings. Every emitter has a parser that reconstructs the originating type
field for field.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .bounds import GapCertificate, ResonanceReport
from .cohomology import CohomologyAction
from .core import ToralAutomorphism, matrix_to_text, validate_automorphism


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _emit(obj, indent: int, out: list) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(obj.items()):
            out.append(f'{pad}  "{k}": ')
            _emit(v, indent + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad + "  ")
            _emit(v, indent + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif obj is None:
        out.append("null")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps(obj) -> str:
    """Deterministic JSON with fixed key order and %.17g floats."""
    out: list = []
    _emit(obj, 0, out)
    out.append("\n")
    return "".join(out)


def complex_pair(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def matrix_sha256(matrix) -> str:
    return hashlib.sha256(matrix_to_text(matrix).encode()).hexdigest()


def write_csv(path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for v in row:
            if v is None or v == "":
                cells.append("")
            elif isinstance(v, float):
                cells.append(fmt_float(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Type <-> JSON dictionaries


def automorphism_to_dict(t: ToralAutomorphism) -> dict:
    return {
        "dim": t.dim,
        "matrix": [list(r) for r in t.matrix],
        "det": t.det,
        "eigenvalues": [complex_pair(z) for z in t.eigenvalues],
        "moduli": [abs(z) for z in t.eigenvalues],
        "d_s": t.d_s,
        "d_u": t.d_u,
        "lambda": t.lam,
        "h_top": t.h_top,
        "orientation_caveat": t.orientation_caveat,
        "unit_circle_tol": t.unit_circle_tol,
    }


def automorphism_from_dict(d: dict) -> ToralAutomorphism:
    t = validate_automorphism(d["matrix"], tol=d["unit_circle_tol"])
    return t


def action_to_dict(a: CohomologyAction) -> dict:
    return {
        "degree": a.degree,
        "matrix": [[str(x) for x in row] for row in a.matrix],
        "spectrum": [complex_pair(z) for z in a.spectrum],
        "jordan_blocks": [
            {"re": float(z.real), "im": float(z.imag), "size": n}
            for z, n in a.jordan_blocks
        ],
    }


def action_from_dict(d: dict) -> CohomologyAction:
    return CohomologyAction(
        degree=d["degree"],
        matrix=tuple(tuple(Fraction(x) for x in row) for row in d["matrix"]),
        spectrum=tuple(complex(p["re"], p["im"]) for p in d["spectrum"]),
        jordan_blocks=tuple(
            (complex(b["re"], b["im"]), b["size"]) for b in d["jordan_blocks"]
        ),
    )


def report_to_dict(r: ResonanceReport) -> dict:
    return {
        "h_top": r.h_top,
        "lambda": r.lam,
        "annulus_inner": r.annulus_inner,
        "resonances": [
            {"re": float(z.real), "im": float(z.imag), "modulus": abs(z), "jordan_size": n}
            for z, n in r.resonances
        ],
        "rescaled": [complex_pair(z) for z in r.rescaled],
        "nu": r.nu,
        "decay_rate_bound": r.decay_rate_bound,
        "asymptotics_terms": [
            {"re": float(z.real), "im": float(z.imag), "max_power": k}
            for z, k in r.asymptotics_terms
        ],
        "lambda2_modulus": r.lambda2_modulus,
    }


def report_from_dict(d: dict) -> ResonanceReport:
    return ResonanceReport(
        h_top=d["h_top"],
        lam=d["lambda"],
        annulus_inner=d["annulus_inner"],
        resonances=tuple(
            (complex(b["re"], b["im"]), b["jordan_size"]) for b in d["resonances"]
        ),
        rescaled=tuple(complex(p["re"], p["im"]) for p in d["rescaled"]),
        nu=d["nu"],
        decay_rate_bound=d["decay_rate_bound"],
        asymptotics_terms=tuple(
            (complex(b["re"], b["im"]), b["max_power"]) for b in d["asymptotics_terms"]
        ),
        lambda2_modulus=d["lambda2_modulus"],
    )


def gap_to_dict(g: GapCertificate) -> dict:
    return {
        "lambda2_modulus": g.lambda2_modulus,
        "tau_below": g.tau_below,
        "tau_above": g.tau_above,
        "annulus_inner": g.annulus_inner,
        "passed": g.passed,
    }


def series_rows(series) -> list:
    """CSV rows (n, re, im, stderr) for a CorrelationSeries."""
    rows = []
    for p in series.values:
        rows.append([p.n, float(p.value.real), float(p.value.imag),
                     p.stderr if p.stderr is not None else ""])
    return rows
