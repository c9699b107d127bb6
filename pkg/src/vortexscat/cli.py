"""Command-line interface.

Usage examples:
  # iron, 300 kV, kappa = 25/a0: |f|^2 versus theta for ell = 0..3
  vortexscat scan-theta --ell 0 1 2 3 --kappa 25 --Z 26 --kv 300 --points 500 --output fig3.csv

  # kappa family for ell = 0 with explicit potential
  vortexscat scan-kappa --ell 0 --kappa 1 5 10 20 25 --v0 -26 --mu 3.3463 --format json

  # forward amplitude of a displaced ell = 1 beam versus displacement
  vortexscat forward --ell 1 --kappa 5 --r0-max 3 --points 200
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .beam import BeamParameters, Displacement, LGMode
from .errors import ConvergenceError, DomainError, MissingDataError
from .potential import ScreenedPotential, ScreeningModel
from .scan import (Table, angle_grid, aperture_table, forward_scan, kv_table, lg_weight_table, off_center_scan,
                   render, theta_scan, write_table)
from .units import kv_to_kz

DEFAULT_KZ = 169.0
DEFAULT_Z = 26


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")


def _add_momentum(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--kz", type=float, default=None, help=f"longitudinal momentum in 1/a0 (default {DEFAULT_KZ})")
    g.add_argument("--kv", type=float, default=None, help="acceleration voltage in kV (sets k_z)")


def _add_potential(p: argparse.ArgumentParser) -> None:
    p.add_argument("--Z", type=int, default=None, help=f"atomic number (default {DEFAULT_Z} unless --v0/--mu given)")
    p.add_argument("--v0", type=float, default=None, help="Yukawa strength in Hartree*a0")
    p.add_argument("--mu", type=float, default=None, help="screening parameter in 1/a0")
    p.add_argument("--screening-table", default=None, help="file with 'Z mu_inf' rows")
    p.add_argument("--repulsive", action="store_true", help="positive V0 for --Z")


def _add_theta(p: argparse.ArgumentParser, theta_max: float = 0.35) -> None:
    p.add_argument("--theta-min", type=float, default=0.0)
    p.add_argument("--theta-max", type=float, default=theta_max)
    p.add_argument("--points", type=int, default=500)
    p.add_argument("--phi-prime", type=float, default=0.0, help="azimuth of the outgoing direction (rad)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vortexscat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, ells, kappas in (("scan-theta", [0, 1, 2, 3], [25.0]), ("scan-kappa", [0], [1.0, 5.0, 10.0, 20.0, 25.0])):
        p = sub.add_parser(name, help="amplitude versus scattering angle for a family of beams")
        p.add_argument("--ell", type=int, nargs="+", default=ells)
        p.add_argument("--kappa", type=float, nargs="+", default=kappas)
        _add_momentum(p)
        _add_potential(p)
        _add_theta(p)
        _add_output(p)

    p = sub.add_parser("off-center", help="amplitude of a displaced beam versus scattering angle")
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--kappa", type=float, default=5.0)
    p.add_argument("--r0", type=float, nargs="+", required=True, help="displacement(s) in a0")
    p.add_argument("--phi0", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-14, help="drop addition-theorem terms with |J_m| below this")
    _add_momentum(p)
    _add_potential(p)
    _add_theta(p)
    _add_output(p)

    p = sub.add_parser("forward", help="forward amplitude of a displaced beam versus displacement")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--kappa", type=float, default=5.0)
    p.add_argument("--phi0", type=float, default=0.0)
    p.add_argument("--r0-min", type=float, default=0.0)
    p.add_argument("--r0-max", type=float, default=3.0)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-14)
    _add_momentum(p)
    _add_potential(p)
    _add_output(p)

    p = sub.add_parser("lg-weights", help="Bessel-basis weight g(kappa) of a Laguerre-Gaussian mode")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--waist", type=float, default=1.0, help="waist w in a0")
    p.add_argument("--kappa-min", type=float, default=0.0)
    p.add_argument("--kappa-max", type=float, default=None, help="default 8/w")
    p.add_argument("--points", type=int, default=200)
    _add_output(p)

    p = sub.add_parser("aperture", help="far-field radial profile of an annular aperture")
    p.add_argument("--kappa-min", type=float, default=0.0)
    p.add_argument("--kappa-max", type=float, required=True)
    p.add_argument("--r-max", type=float, default=10.0)
    p.add_argument("--points", type=int, default=200)
    _add_output(p)

    p = sub.add_parser("convert-kv", help="electron wave number for an acceleration voltage")
    p.add_argument("--kv", type=float, nargs="+", required=True)
    _add_output(p)
    return parser


def _k_z(args) -> float:
    if args.kv is not None:
        return kv_to_kz(args.kv)
    return DEFAULT_KZ if args.kz is None else args.kz


def _potential(args) -> tuple[ScreenedPotential, str]:
    explicit = args.v0 is not None or args.mu is not None
    if explicit:
        if args.Z is not None or args.screening_table is not None:
            raise DomainError("give either --Z [--screening-table] or --v0/--mu, not both")
        if args.v0 is None or args.mu is None:
            raise DomainError("--v0 and --mu must be given together")
        return ScreenedPotential(args.v0, args.mu), "explicit --v0/--mu"
    model = ScreeningModel.from_file(args.screening_table) if args.screening_table else ScreeningModel()
    Z = DEFAULT_Z if args.Z is None else args.Z
    return ScreenedPotential.for_atom(Z, model, attractive=not args.repulsive), f"Z={Z}, {model.provenance}"


def _grid(lo: float, hi: float, points: int, name: str) -> np.ndarray:
    if points < 2:
        raise DomainError(f"--points must be >= 2, got {points}")
    if not lo < hi:
        raise DomainError(f"{name} range is empty: [{lo}, {hi}]")
    return np.linspace(lo, hi, points)


def run(args) -> Table:
    cmd = args.command
    if cmd in ("scan-theta", "scan-kappa"):
        potential, screening = _potential(args)
        k_z = _k_z(args)
        beams = [BeamParameters(k_z, kappa, ell) for ell in args.ell for kappa in args.kappa]
        thetas = angle_grid(args.theta_min, args.theta_max, args.points)
        mode = "theta-scan" if cmd == "scan-theta" else "kappa-scan"
        return theta_scan(potential, beams, thetas, args.phi_prime, mode=mode, screening=screening)
    if cmd == "off-center":
        potential, screening = _potential(args)
        beam = BeamParameters(_k_z(args), args.kappa, args.ell)
        disps = [Displacement(r0, args.phi0) for r0 in args.r0]
        thetas = angle_grid(args.theta_min, args.theta_max, args.points)
        return off_center_scan(potential, beam, disps, thetas, args.phi_prime, args.tol, screening)
    if cmd == "forward":
        potential, screening = _potential(args)
        beam = BeamParameters(_k_z(args), args.kappa, args.ell)
        r0 = _grid(args.r0_min, args.r0_max, args.points, "--r0")
        if r0[0] < 0:
            raise DomainError(f"--r0-min must be >= 0, got {args.r0_min}")
        return forward_scan(potential, beam, r0, args.phi0, args.tol, screening)
    if cmd == "lg-weights":
        mode = LGMode(args.ell, args.n, args.waist)
        hi = 8.0 / args.waist if args.kappa_max is None else args.kappa_max
        return lg_weight_table(mode, _grid(args.kappa_min, hi, args.points, "--kappa"))
    if cmd == "aperture":
        if not 0 <= args.kappa_min < args.kappa_max:
            raise DomainError(f"need 0 <= --kappa-min < --kappa-max, got {args.kappa_min}, {args.kappa_max}")
        return aperture_table(args.kappa_min, args.kappa_max, _grid(0.0, args.r_max, args.points, "--r"))
    if cmd == "convert-kv":
        return kv_table(args.kv)
    raise DomainError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        table = run(args)
        if args.output:
            write_table(table, args.output, args.format)
        else:
            sys.stdout.write(render(table, args.format))
    except (DomainError, MissingDataError, ConvergenceError, OSError) as exc:
        print(f"vortexscat {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
