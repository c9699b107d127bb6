"""Conversions between laboratory units and Hartree atomic units (CODATA via scipy.constants)."""

from __future__ import annotations

import math

from scipy import constants as C

from .errors import DomainError

BOHR_RADIUS_M = C.physical_constants["Bohr radius"][0]


def kv_to_kz(voltage_kv: float) -> float:
    """
    Electron wave number k = 2 pi / lambda in 1/a0 for an acceleration voltage in kV.

    Uses the relativistically corrected de Broglie wavelength
    lambda = h / sqrt(2 m e U (1 + e U / (2 m c^2))).
    """
    if not voltage_kv > 0:
        raise DomainError(f"acceleration voltage must be > 0 kV, got {voltage_kv}")
    energy = C.e * voltage_kv * 1e3
    momentum = math.sqrt(2.0 * C.m_e * energy * (1.0 + energy / (2.0 * C.m_e * C.c ** 2)))
    wavelength = C.h / momentum
    return 2.0 * math.pi / wavelength * BOHR_RADIUS_M

