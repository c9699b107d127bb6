"""
First-Born elastic amplitudes for plane waves and Bessel beams
==============================================================

Everything is in Hartree atomic units, where the prefactor 2 m_e V0 / hbar^2
reduces to 2 V0 and amplitudes come out in a0.

Plane wave (screened Rutherford):

    f = -2 V0 / (4 k^2 sin^2(theta/2) + mu^2)

Bessel beam (k_z, kappa, ell) scattered into (theta, phi'):

    f = -2 V0 i^ell e^{i ell phi'} b^|ell| / sqrt(D)

    D = kappa^4 + (kp^2 + chi^2)^2 - 2 (kp^2 - chi^2) kappa^2
    b = (kp^2 + chi^2 + kappa^2 - sqrt(D)) / (-2 kappa kp)

with kp = k sin(theta), q_z = k_z - k cos(theta), chi^2 = q_z^2 + mu^2 and
k = sqrt(k_z^2 + kappa^2). The base b is negative with |b| < 1; it is
evaluated as -2 kappa kp / (A + sqrt(D)), A = kp^2 + chi^2 + kappa^2, which
is the same number without the cancellation in A - sqrt(D). D is evaluated
as (kappa^2 - kp^2)^2 + chi^2 (chi^2 + 2 kp^2 + 2 kappa^2), a sum of
non-negative terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .beam import BeamParameters, Displacement, displaced_expansion
from .errors import DomainError
from .potential import ScreenedPotential

# Below this k_perp'/k the base b is replaced by its limit 0.
_AXIS_EPS = 1e-12


@dataclass(frozen=True)
class ScatterKinematics:
    """Outgoing direction (theta, phi_prime) for an incoming Bessel beam."""

    beam: BeamParameters
    theta: float
    phi_prime: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"scattering angle theta must lie in [0, pi], got theta={self.theta}")

    @property
    def k(self) -> float:
        return self.beam.k

    @property
    def k_z_out(self) -> float:
        return self.k * math.cos(self.theta)

    @property
    def k_perp_out(self) -> float:
        return self.k * math.sin(self.theta)

    @property
    def q_z(self) -> float:
        return self.beam.k_z - self.k_z_out

    def chi_squared(self, mu: float) -> float:
        return self.q_z ** 2 + mu ** 2

    def with_ell(self, ell: int) -> ScatterKinematics:
        return ScatterKinematics(self.beam.with_ell(ell), self.theta, self.phi_prime)


def rutherford(potential: ScreenedPotential, k: float, theta: float) -> complex:
    """Plane-wave first-Born amplitude on a screened Coulomb potential."""
    if not k > 0:
        raise DomainError(f"momentum k must be > 0, got k={k}")
    s = math.sin(0.5 * theta)
    return complex(-2.0 * potential.v0 / (4.0 * k * k * s * s + potential.mu ** 2))


def _discriminant(kp2: float, kappa2: float, chi2: float) -> float:
    return (kappa2 - kp2) ** 2 + chi2 * (chi2 + 2.0 * kp2 + 2.0 * kappa2)


def vortex_amplitude(potential: ScreenedPotential, kin: ScatterKinematics) -> complex:
    """
    First-Born amplitude of a Bessel beam on a screened Coulomb potential.

    On the axis (k_perp' below 1e-12 k) beams with ell != 0 return exactly 0;
    kappa = 0 with ell = 0 returns the Rutherford amplitude at k = k_z.
    """
    beam = kin.beam
    ell = beam.ell
    if beam.kappa == 0:
        if ell != 0:
            raise DomainError(f"kappa=0 requires ell=0 (no OAM without transverse momentum), got ell={ell}")
        return rutherford(potential, beam.k_z, kin.theta)

    kp = kin.k_perp_out
    if ell != 0 and kp < _AXIS_EPS * kin.k:
        return 0j
    kappa = beam.kappa
    chi2 = kin.chi_squared(potential.mu)
    kp2, kappa2 = kp * kp, kappa * kappa
    root = math.sqrt(_discriminant(kp2, kappa2, chi2))
    a = abs(ell)
    if a:
        magnitude = (2.0 * kappa * kp / (kp2 + chi2 + kappa2 + root)) ** a
        base_power = -magnitude if a % 2 else magnitude
    else:
        base_power = 1.0
    phase = 1j ** (ell % 4) * np.exp(1j * ell * kin.phi_prime)
    return complex(-2.0 * potential.v0 * phase * base_power / root)


def central_amplitude(potential: ScreenedPotential, beam: BeamParameters) -> complex:
    """
    Forward (theta = 0) amplitude, -2 V0 / ((k - k_z)^2 + kappa^2 + mu^2).

    Identically zero for ell != 0.
    """
    if beam.ell != 0:
        return 0j
    return complex(-2.0 * potential.v0 / ((beam.k - beam.k_z) ** 2 + beam.kappa ** 2 + potential.mu ** 2))


def off_center_amplitude(potential: ScreenedPotential, kin: ScatterKinematics, disp: Displacement,
                         truncation_tol: float = 1e-14) -> complex:
    """Coherent sum over the co-axial components of a displaced Bessel beam."""
    total = 0j
    for m, coefficient in displaced_expansion(kin.beam, disp, truncation_tol):
        total += coefficient * vortex_amplitude(potential, kin.with_ell(kin.beam.ell + m))
    return total


def cross_section(amp: complex) -> float:
    """Differential cross section |f|^2 in a0^2/sr."""
    return abs(amp) ** 2


def sqrt_argument_sign(k_perp_prime, kappa, chi):
    """
    2 (kp^2 - chi^2) kappa^2 - kappa^4 - (kp^2 + chi^2)^2.

    This is the radicand of the pole positions in the half-angle
    substitution; it is never positive for positive arguments, so the
    poles come as a complex-conjugate pair. Evaluated term by term as
    written, with no rearrangement.
    """
    kp2 = np.square(k_perp_prime)
    k2 = np.square(kappa)
    c2 = np.square(chi)
    return 2.0 * (kp2 - c2) * k2 - k2 * k2 - (kp2 + c2) ** 2
