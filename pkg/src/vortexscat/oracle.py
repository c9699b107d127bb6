"""
Brute-force reference values by direct quadrature
=================================================

Independent of ``amplitude``: nothing here uses the closed forms. The Bessel
beam is written as a ring of plane waves, the spatial integral of each
plane wave against the Yukawa potential is the textbook 4 pi V0/(q^2 + mu^2),
and what is left is one integral over the azimuth phi of the ring:

    f = -((-i)^ell V0 / pi) int_0^{2pi} dphi e^{i ell phi} S(phi) /
        ((kappa cos phi - kx')^2 + (kappa sin phi - ky')^2 + chi^2)

with kx' = kp cos phi', ky' = kp sin phi' and S = 1 for a centred beam.
Shifting the beam axis by r0 multiplies every plane wave by
S(phi) = exp(-i kappa r0 cos(phi - phi0)).

The integrand is smooth and 2 pi periodic, so the trapezoid rule converges
geometrically; ``integrate_periodic`` doubles the grid until two levels
agree. For |ell| > 0 the result is a small Fourier harmonic of a nearly
constant function, so the integrand and the sums are carried in extended
precision (``np.longdouble``); in double precision the roundoff of 1/denominator
alone limits the relative accuracy to ~1e-8 at wide angles.

``yukawa_fourier_quadrature`` checks the plane-wave kernel itself by doing
the radial Fourier integral of V(r) numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .amplitude import ScatterKinematics
from .beam import Displacement
from .errors import ConvergenceError, DomainError
from .potential import ScreenedPotential
from .specfun import QuadratureSpec, integrate, integrate_periodic

TWO_PI = 2.0 * math.pi
_TWO_PI_EXT = 2 * np.arccos(np.longdouble(-1))


@dataclass(frozen=True)
class OracleConfig:
    quad: QuadratureSpec = field(default_factory=lambda: QuadratureSpec(abs_tol=1e-300, rel_tol=1e-12,
                                                                        max_subdivisions=1 << 16))
    displaced: bool = False


def _extended_integrand(potential: ScreenedPotential, kin: ScatterKinematics, disp: Displacement | None):
    beam = kin.beam
    ell = beam.ell
    ext = np.longdouble
    kp = kin.k * math.sin(kin.theta)
    kx, ky = ext(kp * math.cos(kin.phi_prime)), ext(kp * math.sin(kin.phi_prime))
    q_z = beam.k_z - kin.k * math.cos(kin.theta)
    chi2 = ext(q_z * q_z + potential.mu ** 2)
    kappa = ext(beam.kappa)
    shift = ext(0.0 if disp is None else disp.r0)
    phi0 = ext(0.0 if disp is None else disp.phi0)

    def integrand(phi):
        c, s = np.cos(phi), np.sin(phi)
        denominator = (kappa * c - kx) ** 2 + (kappa * s - ky) ** 2 + chi2
        angle = ell * phi
        if shift:
            angle = angle - kappa * shift * np.cos(phi - phi0)
        return (np.cos(angle) + 1j * np.sin(angle)) / denominator

    return integrand


def ring_integrand(potential: ScreenedPotential, kin: ScatterKinematics, disp: Displacement | None = None):
    """
    The azimuthal integrand as a vectorised function of phi.

    phi is reduced modulo 2 pi before evaluation, so the values at 0 and
    2 pi coincide exactly.
    """
    h = _extended_integrand(potential, kin, disp)
    return lambda phi: h(np.mod(np.asarray(phi, dtype=float), TWO_PI).astype(np.longdouble))


def _ring_amplitude(potential, kin, disp, cfg) -> tuple[complex, float]:
    if not kin.chi_squared(potential.mu) > 0:
        raise DomainError("chi^2 must be > 0")
    h = _extended_integrand(potential, kin, disp)
    # Nodes are exact binary fractions of the period; phi itself is formed
    # in extended precision. Rounding phi to double would jitter the nodes
    # by ~1e-16, which is amplified by |integrand| / |result| for high |ell|.
    result = integrate_periodic(lambda t: h(_TWO_PI_EXT * np.asarray(t, dtype=np.longdouble)), 0.0, 1.0, cfg.quad)
    prefactor = -((-1j) ** (kin.beam.ell % 4)) * potential.v0 / math.pi * TWO_PI
    return prefactor * result.value, abs(prefactor) * result.error


def vortex_amplitude_quadrature(potential: ScreenedPotential, kin: ScatterKinematics,
                                cfg: OracleConfig = OracleConfig()) -> complex:
    """Bessel-beam amplitude by trapezoid quadrature over the plane-wave ring."""
    return _ring_amplitude(potential, kin, None, cfg)[0]


def vortex_amplitude_with_error(potential: ScreenedPotential, kin: ScatterKinematics,
                                cfg: OracleConfig = OracleConfig()) -> tuple[complex, float]:
    """Like ``vortex_amplitude_quadrature`` but also returns the error estimate."""
    return _ring_amplitude(potential, kin, None, cfg)


def displaced_amplitude_quadrature(potential: ScreenedPotential, kin: ScatterKinematics, disp: Displacement,
                                   cfg: OracleConfig = OracleConfig(displaced=True)) -> complex:
    """Amplitude of a Bessel beam whose axis is shifted by ``disp``, by direct quadrature."""
    return _ring_amplitude(potential, kin, disp, cfg)[0]


def yukawa_fourier_quadrature(potential: ScreenedPotential, q: float,
                              cfg: OracleConfig = OracleConfig()) -> float:
    """
    Fourier transform of the Yukawa potential at momentum transfer ``q``,

        (4 pi / q) int_0^inf r V(r) sin(q r) dr,

    integrated up to r_max = 50/mu. The neglected tail is bounded by
    4 pi |V0| exp(-50) min(1/(q mu), (r_max + 1/mu)/mu) and must be below the tolerance.

    For q >> mu the result is a small remainder of an oscillating integrand,
    so the absolute tolerance is floored at 1e-13 times the a-priori bound
    |V0| min(1/(q mu), 1/mu^2) on the integral of |integrand|; the relative
    accuracy then degrades gracefully like 1e-13 q/mu.
    """
    if not q > 0:
        raise DomainError(f"momentum transfer q must be > 0, got q={q}")
    mu = potential.mu
    r_max = 50.0 / mu
    scale = abs(potential.v0) * min(1.0 / (q * mu), 1.0 / mu ** 2)
    spec = QuadratureSpec(abs_tol=max(cfg.quad.abs_tol, 1e-13 * scale), rel_tol=max(cfg.quad.rel_tol, 1e-13),
                          max_subdivisions=cfg.quad.max_subdivisions)
    # sin(qr)/q is written out so q -> 0 stays well conditioned
    result = integrate(lambda r: r * potential(r) * np.sin(q * r) / q, 0.0, r_max, spec)
    value = 4.0 * math.pi * result.value.real
    tail = 4.0 * math.pi * abs(potential.v0) * math.exp(-mu * r_max) * min(1.0 / (q * mu), r_max / mu + 1.0 / mu ** 2)
    if tail > spec.target(value, abs(value)):
        raise ConvergenceError("Yukawa tail beyond r_max exceeds tolerance", value, tail)
    return value
