"""
Grid scans and their tabular output
===================================

Each scan returns a ``Table``: a metadata dict, column names and rows in
grid order. Tables are written either as CSV (metadata as ``# key: <json>``
comment lines, then a header row, floats in ``%.16e``) or as a single JSON
document; both formats read back losslessly with ``read_table``. Files are
written to a temporary sibling and moved into place, so a failed run never
leaves partial output behind.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .amplitude import (ScatterKinematics, central_amplitude, cross_section, off_center_amplitude,
                        vortex_amplitude)
from .beam import BeamParameters, Displacement, LGMode, aperture_profile, lg_weight
from .errors import DomainError
from .potential import ScreenedPotential
from .units import kv_to_kz

UNITS = "Hartree atomic units (hbar = m_e = e = 1): momenta 1/a0, lengths a0, amplitudes a0, cross sections a0^2/sr, angles rad"


@dataclass
class Table:
    metadata: dict[str, Any]
    columns: list[str]
    rows: list[tuple] = field(default_factory=list)

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]


def _base_metadata(mode: str, parameters: dict, screening: str | None = None) -> dict:
    meta = {"mode": mode, "units": UNITS, "version": __version__, "parameters": parameters}
    if screening is not None:
        meta["screening"] = screening
    return meta


def angle_grid(theta_min: float, theta_max: float, points: int) -> np.ndarray:
    if points < 2:
        raise DomainError(f"points must be >= 2, got points={points}")
    if not 0.0 <= theta_min < theta_max <= math.pi:
        raise DomainError(f"theta range must satisfy 0 <= theta_min < theta_max <= pi, got [{theta_min}, {theta_max}]")
    return np.linspace(theta_min, theta_max, points)


def _potential_parameters(potential: ScreenedPotential) -> dict:
    return {"v0": potential.v0, "mu": potential.mu}


def theta_scan(potential: ScreenedPotential, beams: Sequence[BeamParameters], thetas: Sequence[float],
               phi_prime: float = 0.0, mode: str = "theta-scan", screening: str | None = None) -> Table:
    """Amplitude versus scattering angle for each beam, beams in the order given."""
    table = Table(
        _base_metadata(mode, {
            **_potential_parameters(potential),
            "beams": [{"k_z": b.k_z, "kappa": b.kappa, "ell": b.ell} for b in beams],
            "phi_prime": phi_prime,
            "theta": [float(thetas[0]), float(thetas[-1]), len(thetas)],
        }, screening),
        ["ell", "kappa", "k_z", "theta", "theta_deg", "re_f", "im_f", "abs_f2"],
    )
    for beam in beams:
        for theta in thetas:
            f = vortex_amplitude(potential, ScatterKinematics(beam, float(theta), phi_prime))
            table.rows.append((int(beam.ell), float(beam.kappa), float(beam.k_z), float(theta), math.degrees(theta),
                               f.real, f.imag, cross_section(f)))
    return table


def off_center_scan(potential: ScreenedPotential, beam: BeamParameters, displacements: Sequence[Displacement],
                    thetas: Sequence[float], phi_prime: float = 0.0, truncation_tol: float = 1e-14,
                    screening: str | None = None) -> Table:
    """Amplitude of a displaced beam versus angle, one block per displacement."""
    table = Table(
        _base_metadata("off-center-scan", {
            **_potential_parameters(potential),
            "beam": {"k_z": beam.k_z, "kappa": beam.kappa, "ell": beam.ell},
            "displacements": [{"r0": d.r0, "phi0": d.phi0} for d in displacements],
            "phi_prime": phi_prime,
            "truncation_tol": truncation_tol,
            "theta": [float(thetas[0]), float(thetas[-1]), len(thetas)],
        }, screening),
        ["r0", "phi0", "theta", "theta_deg", "re_f", "im_f", "abs_f2"],
    )
    for disp in displacements:
        for theta in thetas:
            f = off_center_amplitude(potential, ScatterKinematics(beam, float(theta), phi_prime), disp, truncation_tol)
            table.rows.append((float(disp.r0), float(disp.phi0), float(theta), math.degrees(theta),
                               f.real, f.imag, cross_section(f)))
    return table


def forward_scan(potential: ScreenedPotential, beam: BeamParameters, r0_values: Sequence[float], phi0: float = 0.0,
                 truncation_tol: float = 1e-14, screening: str | None = None) -> Table:
    """Forward (theta = 0) amplitude of a displaced beam versus displacement."""
    table = Table(
        _base_metadata("forward-amplitude", {
            **_potential_parameters(potential),
            "beam": {"k_z": beam.k_z, "kappa": beam.kappa, "ell": beam.ell},
            "phi0": phi0,
            "truncation_tol": truncation_tol,
            "centered_l0_amplitude": central_amplitude(potential, beam.with_ell(0)).real,
            "r0": [float(r0_values[0]), float(r0_values[-1]), len(r0_values)],
        }, screening),
        ["r0", "re_f", "im_f", "abs_f2"],
    )
    for r0 in r0_values:
        kin = ScatterKinematics(beam, 0.0, 0.0)
        f = off_center_amplitude(potential, kin, Displacement(float(r0), phi0), truncation_tol)
        table.rows.append((float(r0), f.real, f.imag, cross_section(f)))
    return table


def lg_weight_table(mode: LGMode, kappas: Sequence[float]) -> Table:
    table = Table(
        _base_metadata("lg-weights", {"ell": mode.ell, "n": mode.n, "w": mode.w,
                                      "kappa": [float(kappas[0]), float(kappas[-1]), len(kappas)]}),
        ["kappa", "g"],
    )
    values = lg_weight(mode, np.asarray(kappas, dtype=float))
    table.rows.extend((float(k), float(g)) for k, g in zip(kappas, values))
    return table


def aperture_table(kappa_min: float, kappa_max: float, radii: Sequence[float]) -> Table:
    table = Table(
        _base_metadata("aperture-profile", {"kappa_min": kappa_min, "kappa_max": kappa_max,
                                            "r": [float(radii[0]), float(radii[-1]), len(radii)]}),
        ["r", "psi"],
    )
    table.rows.extend((float(r), float(aperture_profile(kappa_min, kappa_max, float(r)))) for r in radii)
    return table


def kv_table(voltages_kv: Sequence[float]) -> Table:
    table = Table(_base_metadata("convert-kv", {"kv": list(voltages_kv)}), ["kv", "k_a0inv"])
    table.rows.extend((float(v), kv_to_kz(float(v))) for v in voltages_kv)
    return table


# =============================================================================
# Serialisation
# =============================================================================

def _format_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.16e}"


def table_to_csv(table: Table) -> str:
    buf = io.StringIO()
    for key, value in table.metadata.items():
        buf.write(f"# {key}: {json.dumps(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_format_cell(v) for v in row])
    return buf.getvalue()


def table_to_json(table: Table) -> str:
    rows = [[int(v) if isinstance(v, (int, np.integer)) else float(v) for v in row] for row in table.rows]
    return json.dumps({"metadata": table.metadata, "columns": table.columns, "rows": rows}, indent=1)


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        return table_to_csv(table)
    if fmt == "json":
        return table_to_json(table)
    raise DomainError(f"unknown output format {fmt!r} (use csv or json)")


def write_table(table: Table, path: str | Path, fmt: str = "csv") -> None:
    """Write atomically: the target either gets the full table or is left untouched."""
    text = render(table, fmt)
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_cell(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_table(text: str) -> Table:
    """Inverse of ``render`` for either format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        return Table(doc["metadata"], doc["columns"], [tuple(r) for r in doc["rows"]])
    metadata: dict[str, Any] = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(": ")
            metadata[key] = json.loads(value)
        elif line.strip():
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = [tuple(_parse_cell(c) for c in row) for row in reader]
    return Table(metadata, columns, rows)


def read_table(path: str | Path) -> Table:
    return parse_table(Path(path).read_text(encoding="utf-8"))
