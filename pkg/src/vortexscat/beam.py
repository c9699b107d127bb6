"""
Bessel beam states and their superpositions
===========================================

A Bessel beam with longitudinal momentum k_z, transverse momentum kappa and
OAM index ell has the transverse profile

    <r|kappa, ell> = J_ell(kappa r) exp(i ell phi) / (2 pi)

and the common longitudinal factor exp(i k_z z) / sqrt(2 pi), which is a
pure phase in a fixed plane and is kept separate (``longitudinal_phase``).
Equivalently, it is a ring of plane waves with |k_perp| = kappa whose
Fourier coefficient carries (-i)^ell exp(i ell phi_k).

Localised beams are superpositions over kappa with a weight g(kappa):

    Psi(r, phi) = int_0^inf dkappa kappa g(kappa) <r|kappa, ell>

Two weights are built in: a uniform annular aperture (step function) and a
Laguerre-Gaussian waist-plane mode. A transverse shift of the beam axis by
(r0, phi0) re-expands a single Bessel state into co-axial states of OAM
ell + m with coefficients exp(-i m phi0) J_m(kappa r0).

Units: momenta in 1/a0, lengths in a0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .specfun import QuadratureSpec, bessel_j, bessel_j_orders, integrate, laguerre


@dataclass(frozen=True)
class BeamParameters:
    """Quantum numbers of an incoming Bessel beam."""

    k_z: float
    kappa: float
    ell: int = 0

    def __post_init__(self):
        if not self.k_z > 0:
            raise DomainError(f"k_z must be > 0, got k_z={self.k_z}")
        if not self.kappa >= 0:
            raise DomainError(f"kappa must be >= 0, got kappa={self.kappa}")
        if self.kappa == 0 and self.ell != 0:
            raise DomainError(f"kappa=0 requires ell=0 (no OAM without transverse momentum), got ell={self.ell}")

    @property
    def k(self) -> float:
        """Total momentum, conserved in elastic scattering."""
        return math.hypot(self.k_z, self.kappa)

    @property
    def energy(self) -> float:
        """Kinetic energy in Hartree."""
        return 0.5 * (self.k_z ** 2 + self.kappa ** 2)

    @property
    def convergence_angle(self) -> float:
        """Half-angle of the plane-wave cone, atan(kappa / k_z)."""
        return math.atan2(self.kappa, self.k_z)

    def with_ell(self, ell: int) -> BeamParameters:
        return BeamParameters(self.k_z, self.kappa, ell)


@dataclass(frozen=True)
class LGMode:
    """Laguerre-Gaussian waist-plane mode with OAM ``ell``, radial index ``n`` and waist ``w``."""

    ell: int
    n: int
    w: float

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"LG radial index n must be >= 0, got n={self.n}")
        if not self.w > 0:
            raise DomainError(f"LG waist w must be > 0, got w={self.w}")

    @property
    def normalization(self) -> float:
        a = abs(self.ell)
        return math.sqrt(2.0 / math.pi * math.factorial(self.n) / math.factorial(self.n + a))


@dataclass(frozen=True)
class Displacement:
    """Transverse offset of the beam axis from the scatterer, in polar form."""

    r0: float
    phi0: float = 0.0

    def __post_init__(self):
        if not self.r0 >= 0:
            raise DomainError(f"displacement r0 must be >= 0, got r0={self.r0}")
        object.__setattr__(self, "phi0", math.fmod(self.phi0, 2 * math.pi) % (2 * math.pi))


@dataclass(frozen=True)
class SpectralWeight:
    """
    Weight g(kappa) on [kappa_min, kappa_max] for superposing Bessel states.

    ``evaluate`` must accept numpy arrays.
    """

    evaluate: Callable[[np.ndarray], np.ndarray]
    kappa_min: float
    kappa_max: float

    def __post_init__(self):
        if not 0 <= self.kappa_min < self.kappa_max:
            raise DomainError(f"need 0 <= kappa_min < kappa_max, got [{self.kappa_min}, {self.kappa_max}]")

    def __call__(self, kappa):
        kappa = np.asarray(kappa, dtype=float)
        inside = (kappa >= self.kappa_min) & (kappa <= self.kappa_max)
        return np.where(inside, self.evaluate(np.where(inside, kappa, self.kappa_min)), 0.0)

    def norm_squared(self, spec: QuadratureSpec = QuadratureSpec(1e-14, 1e-10)) -> float:
        """int kappa g(kappa)^2 dkappa over the support; finite for square-integrable weights."""
        hi = self.kappa_max
        if math.isinf(hi):
            raise DomainError("norm_squared needs a finite upper support bound")
        return integrate(lambda k: k * self(k) ** 2, self.kappa_min, hi, spec).value.real


# =============================================================================
# Profiles
# =============================================================================

def longitudinal_phase(beam: BeamParameters, z: float) -> complex:
    """The factor exp(i k_z z) / sqrt(2 pi) kept out of the transverse profiles."""
    return complex(np.exp(1j * beam.k_z * z) / math.sqrt(2 * math.pi))


def bessel_transverse_profile(beam: BeamParameters, r, phi):
    """J_ell(kappa r) exp(i ell phi) / (2 pi)."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise DomainError("radius r must be >= 0")
    value = bessel_j(beam.ell, beam.kappa * r) * np.exp(1j * beam.ell * np.asarray(phi)) / (2 * math.pi)
    return complex(value) if np.ndim(value) == 0 else value


def lg_profile(mode: LGMode, r, phi):
    """
    Normalised Laguerre-Gaussian wave function in the waist plane.

        Psi = (N / w) exp(i ell phi) (r sqrt2 / w)^|ell| L_n^|ell|(2 r^2 / w^2) exp(-r^2 / w^2)

    with N = sqrt(2/pi * n! / (n + |ell|)!), so that the integral of
    |Psi|^2 over the plane is 1.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise DomainError("radius r must be >= 0")
    a = abs(mode.ell)
    rho2 = 2.0 * r ** 2 / mode.w ** 2
    radial = (mode.normalization / mode.w) * np.sqrt(rho2) ** a * laguerre(mode.n, a, rho2) * np.exp(-0.5 * rho2)
    value = radial * np.exp(1j * mode.ell * np.asarray(phi))
    return complex(value) if np.ndim(value) == 0 else value


def lg_weight(mode: LGMode, kappa):
    """
    Bessel-basis weight g(kappa) of an LG mode.

    The Hankel transform of the waist-plane mode is again Laguerre-Gaussian,

        g(kappa) = s pi N w (kappa w / sqrt2)^|ell| L_n^|ell|(kappa^2 w^2 / 2) exp(-kappa^2 w^2 / 4)

    with s = (-1)^n for ell >= 0 and an extra (-1)^ell for ell < 0 (from
    J_-a = (-1)^a J_a). Superposing Bessel states with this weight
    reproduces ``lg_profile`` exactly.
    """
    kappa = np.asarray(kappa, dtype=float)
    if np.any(kappa < 0):
        raise DomainError("kappa must be >= 0 for lg_weight")
    a = abs(mode.ell)
    sign = (-1) ** mode.n * ((-1) ** a if mode.ell < 0 else 1)
    x2 = 0.5 * (kappa * mode.w) ** 2
    value = sign * math.pi * mode.normalization * mode.w * np.sqrt(x2) ** a * laguerre(mode.n, a, x2) * np.exp(-0.5 * x2)
    return float(value) if np.ndim(value) == 0 else value


def lg_spectral_weight(mode: LGMode, cutoff: float = 40.0) -> SpectralWeight:
    """``lg_weight`` as a SpectralWeight truncated where the Gaussian drops below exp(-cutoff)."""
    kappa_max = 2.0 * math.sqrt(cutoff + 2 * mode.n + abs(mode.ell)) / mode.w
    weight = SpectralWeight(lambda k: lg_weight(mode, k), 0.0, kappa_max)
    norm2 = weight.norm_squared()
    if not math.isfinite(norm2):
        raise DomainError(f"LG weight for {mode} is not square integrable")
    return weight


def aperture_weight(kappa_min: float, kappa_max: float) -> SpectralWeight:
    """Uniformly illuminated (annular) aperture: g = 1 on [kappa_min, kappa_max]."""
    return SpectralWeight(lambda k: np.ones_like(k), kappa_min, kappa_max)


def superpose(weight: SpectralWeight, ell: int, r: float, phi: float = 0.0,
              spec: QuadratureSpec = QuadratureSpec(1e-14, 1e-12)) -> complex:
    """int dkappa kappa g(kappa) <r|kappa, ell> by adaptive quadrature."""
    if r < 0:
        raise DomainError("radius r must be >= 0")
    hi = weight.kappa_max
    if math.isinf(hi):
        raise DomainError("superpose needs a finite upper support bound")
    radial = integrate(lambda k: k * weight(k) * bessel_j(ell, k * r), weight.kappa_min, hi, spec).value.real
    return complex(radial * np.exp(1j * ell * phi) / (2 * math.pi))


def aperture_profile(kappa_min: float, kappa_max: float, r: float) -> float:
    """
    Far field of a uniform annular aperture, int_{kmin}^{kmax} kappa J_0(kappa r) dkappa.

    Closed form (kmax J_1(kmax r) - kmin J_1(kmin r)) / r; at r = 0 it is
    (kmax^2 - kmin^2) / 2.
    """
    if not 0 <= kappa_min < kappa_max:
        raise DomainError(f"need 0 <= kappa_min < kappa_max, got kappa_min={kappa_min}, kappa_max={kappa_max}")
    if r < 0:
        raise DomainError(f"radius r must be >= 0, got r={r}")
    # series J_1(x)/x = 1/2 - x^2/16 + ... avoids 0/0 for tiny r
    if kappa_max * r < 1e-6:
        return 0.5 * (kappa_max ** 2 - kappa_min ** 2) - (kappa_max ** 4 - kappa_min ** 4) * r ** 2 / 16.0
    return (kappa_max * bessel_j(1, kappa_max * r) - kappa_min * bessel_j(1, kappa_min * r)) / r


# =============================================================================
# Displaced beams
# =============================================================================

def expansion_order_limit(x: float) -> int:
    """Largest |m| kept before tolerance filtering, for J_m(x) with x = kappa r0."""
    return math.ceil(x + 8.0 * (x + 1.0) ** (1.0 / 3.0) + 10.0)


def displaced_expansion(beam: BeamParameters, disp: Displacement,
                        truncation_tol: float = 1e-14) -> list[tuple[int, complex]]:
    """
    Coefficients of a displaced Bessel state in the co-axial basis.

    Returns ``(m, exp(-i m phi0) J_m(kappa r0))`` for every m in the
    symmetric range |m| <= M whose Bessel factor is at least
    ``truncation_tol`` in magnitude, sorted by m. The state with index m
    carries OAM ell + m.
    """
    if not truncation_tol > 0:
        raise DomainError(f"truncation_tol must be > 0, got {truncation_tol}")
    x = beam.kappa * disp.r0
    if x == 0:
        return [(0, 1 + 0j)]
    M = expansion_order_limit(x)
    jm = bessel_j_orders(M, x)
    terms = []
    for m in range(-M, M + 1):
        j = jm[abs(m)] * (-1) ** (m % 2) if m < 0 else jm[m]
        if abs(j) >= truncation_tol:
            terms.append((m, complex(np.exp(-1j * m * disp.phi0) * j)))
    return terms


def mean_oam(ell: int, expansion: list[tuple[int, complex]]) -> float:
    """Weighted mean OAM index sum (ell+m)|c_m|^2 / sum |c_m|^2."""
    weights = np.array([abs(c) ** 2 for _, c in expansion])
    orders = np.array([ell + m for m, _ in expansion], dtype=float)
    return float(np.dot(orders, weights) / weights.sum())
