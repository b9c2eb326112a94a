"""Serialization of verification reports, spectral curves, and grid data.

All exact quantities cross the boundary as "num/den" strings; floats appear
only in grid CSV files.  JSON output is key-sorted so that identical inputs
produce byte-identical reports (elapsed_ms aside).
"""

from __future__ import annotations

import io
import json
from fractions import Fraction

import numpy as np

from .curves import SpectralCurve
from .numeric import GridFunction
from .verify import VerificationReport

TOOL_VERSION = "0.1.0"

CSV_HEADER = "x,phi_re,phi_im,psi_re,psi_im,residual"


def _rat(q: Fraction) -> str:
    return str(Fraction(q))


def report_dict(report: VerificationReport, seed=None) -> dict:
    return {
        "identity_id": report.identity_id,
        "mode": report.mode,
        "params": dict(report.params),
        "remainder_is_zero": report.remainder_is_zero,
        "witness_order": report.witness_order,
        "elapsed_ms": int(round(report.elapsed_s * 1000)),
        "tool_version": TOOL_VERSION,
        "seed": seed,
    }


def curve_dict(curve: SpectralCurve) -> dict:
    out = {}
    for (i, j), c in curve.terms.items():
        key = "*".join(([f"z^{i}"] if i else []) + ([f"w^{j}"] if j else [])) or "1"
        out[key] = _rat(c)
    return out


def parse_curve(data: dict) -> SpectralCurve:
    """Inverse of :func:`curve_dict`; round-trips exactly."""
    terms = {}
    for key, val in data.items():
        i = j = 0
        if key != "1":
            for part in key.split("*"):
                name, _, exp = part.partition("^")
                if name == "z":
                    i = int(exp)
                elif name == "w":
                    j = int(exp)
                else:
                    raise ValueError(f"unknown monomial part {part!r}")
        terms[(i, j)] = Fraction(val)
    return SpectralCurve(terms)


def grid_csv(grid: GridFunction, psi=None, residual=None) -> bytes:
    """Grid data as CSV with the normative header; missing columns are 0/nan."""
    n = len(grid.x)
    psi = np.zeros(n, dtype=complex) if psi is None else np.asarray(psi, dtype=complex)
    residual = np.full(n, np.nan) if residual is None else np.asarray(residual, dtype=float)
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    phi = np.asarray(grid.phi, dtype=complex)
    for k in range(n):
        buf.write(
            f"{grid.x[k]:.16g},{phi[k].real:.16g},{phi[k].imag:.16g},"
            f"{psi[k].real:.16g},{psi[k].imag:.16g},{residual[k]:.16g}\n"
        )
    return buf.getvalue().encode()


def emit_report(obj, format: str = "json", seed=None) -> bytes:
    """Serialize a report-like object; see the field lists in the docstrings.

    ``format`` is one of json, csv (grids only), text.
    """
    if format == "csv":
        if not isinstance(obj, GridFunction):
            raise TypeError("csv output is defined for grid data only")
        return grid_csv(obj)
    if isinstance(obj, VerificationReport):
        payload = report_dict(obj, seed=seed)
    elif isinstance(obj, SpectralCurve):
        payload = curve_dict(obj)
    elif isinstance(obj, GridFunction):
        payload = {"meta": {k: str(v) for k, v in obj.meta.items()}, "n_points": len(obj.x)}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    if format == "json":
        return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()
    if format == "text":
        lines = [f"{k}: {v}" for k, v in sorted(payload.items())]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {format!r}")
