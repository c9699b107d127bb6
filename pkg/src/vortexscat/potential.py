"""
Screened Coulomb (Yukawa) potential and atomic screening
========================================================

    V(r) = V0 exp(-mu r) / r

Hartree atomic units throughout: V0 in Hartree * a0, mu in 1/a0. For a
nucleus of charge Z, |V0| = Z and the screening parameter follows the
Thomas-Fermi-type scaling

    mu(Z) = mu_inf(Z) * Z^(1/3) / 0.8853

where mu_inf(Z) is a per-element correction factor. The default model sets
mu_inf = 1 for every Z; tabulated values can be loaded from a two-column
text file ("Z mu_inf", '#' comments).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import DomainError, MissingDataError

THOMAS_FERMI_CONSTANT = 0.8853


@dataclass(frozen=True)
class ScreenedPotential:
    """Yukawa potential strength ``v0`` (Hartree*a0) and inverse screening length ``mu`` (1/a0)."""

    v0: float
    mu: float

    def __post_init__(self):
        if not self.mu > 0:
            raise DomainError(f"mu must be > 0 (unscreened Coulomb is excluded), got mu={self.mu}")
        if self.v0 == 0:
            raise DomainError("v0 must be nonzero")

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        return self.v0 * np.exp(-self.mu * r) / r

    @classmethod
    def for_atom(cls, Z: int, model: ScreeningModel | None = None, attractive: bool = True) -> ScreenedPotential:
        """Potential of a screened nucleus of charge ``Z``."""
        return cls(coulomb_strength(Z, attractive), screening_mu(Z, model))


@dataclass(frozen=True)
class ScreeningModel:
    """
    Source of the correction factor mu_inf(Z).

    With ``table=None`` every element gets ``default``. With a table, only
    the listed Z are available; anything else raises MissingDataError.
    """

    table: Mapping[int, float] | None = None
    default: float = 1.0
    provenance: str = "constant mu_inf = 1 (Thomas-Fermi)"
    _frozen_table: Mapping[int, float] | None = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        if self.table is not None:
            bad = {z: v for z, v in self.table.items() if not v > 0 or int(z) < 1}
            if bad:
                raise DomainError(f"screening table entries must have Z >= 1 and mu_inf > 0: {bad}")
            object.__setattr__(self, "_frozen_table",
                               MappingProxyType({int(z): float(v) for z, v in self.table.items()}))
        elif not self.default > 0:
            raise DomainError(f"default mu_inf must be > 0, got {self.default}")

    def mu_infinity(self, Z: int) -> float:
        if self._frozen_table is None:
            return self.default
        try:
            return self._frozen_table[Z]
        except KeyError:
            raise MissingDataError(f"no mu_inf entry for Z={Z} in screening table ({self.provenance})") from None

    @classmethod
    def from_file(cls, path: str | Path) -> ScreeningModel:
        """Read a whitespace-separated "Z mu_inf" table; '#' starts a comment."""
        path = Path(path)
        table: dict[int, float] = {}
        for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise DomainError(f"{path}:{lineno}: expected 'Z mu_inf', got {raw!r}")
            try:
                z, mu_inf = int(parts[0]), float(parts[1])
            except ValueError:
                raise DomainError(f"{path}:{lineno}: cannot parse {raw!r}") from None
            if z in table:
                raise DomainError(f"{path}:{lineno}: duplicate entry for Z={z}")
            table[z] = mu_inf
        if not table:
            raise DomainError(f"{path}: screening table is empty")
        return cls(table=table, provenance=f"table file {path}")


DEFAULT_SCREENING = ScreeningModel()


def screening_mu(Z: int, model: ScreeningModel | None = None) -> float:
    """Screening parameter mu(Z) = mu_inf(Z) Z^(1/3) / 0.8853 in 1/a0."""
    if Z < 1:
        raise DomainError(f"atomic number Z must be >= 1, got Z={Z}")
    model = DEFAULT_SCREENING if model is None else model
    return float(model.mu_infinity(Z) * np.cbrt(Z) / THOMAS_FERMI_CONSTANT)


def coulomb_strength(Z: int, attractive: bool = True) -> float:
    """V0 for a bare charge Z in Hartree*a0; negative when attractive."""
    if Z < 1:
        raise DomainError(f"atomic number Z must be >= 1, got Z={Z}")
    return -float(Z) if attractive else float(Z)
