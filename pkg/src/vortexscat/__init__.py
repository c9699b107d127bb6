"""First-Born scattering of electron Bessel (vortex) beams on screened Coulomb potentials."""

__version__ = "0.1.0"

from .amplitude import (ScatterKinematics, central_amplitude, cross_section, off_center_amplitude, rutherford,
                        sqrt_argument_sign, vortex_amplitude)
from .beam import (BeamParameters, Displacement, LGMode, SpectralWeight, aperture_profile, aperture_weight,
                   bessel_transverse_profile, displaced_expansion, lg_profile, lg_spectral_weight, lg_weight,
                   mean_oam, superpose)
from .errors import ConvergenceError, DomainError, MissingDataError
from .potential import ScreenedPotential, ScreeningModel, coulomb_strength, screening_mu
from .units import kv_to_kz

__all__ = [
    "BeamParameters", "ConvergenceError", "Displacement", "DomainError", "LGMode", "MissingDataError",
    "ScatterKinematics", "ScreenedPotential", "ScreeningModel", "SpectralWeight", "aperture_profile",
    "aperture_weight", "bessel_transverse_profile", "central_amplitude", "coulomb_strength", "cross_section",
    "displaced_expansion", "kv_to_kz", "lg_profile", "lg_spectral_weight", "lg_weight", "mean_oam",
    "off_center_amplitude", "rutherford", "screening_mu", "sqrt_argument_sign", "superpose", "vortex_amplitude",
]
