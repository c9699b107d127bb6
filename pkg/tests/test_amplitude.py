import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings, strategies as st

from vortexscat import (BeamParameters, Displacement, ScatterKinematics, ScreenedPotential, central_amplitude,
                        cross_section, off_center_amplitude, rutherford, sqrt_argument_sign, vortex_amplitude)
from vortexscat.errors import DomainError
from vortexscat.oracle import (displaced_amplitude_quadrature, vortex_amplitude_quadrature,
                               yukawa_fourier_quadrature)

UNIT = ScreenedPotential(-1.0, 1.0)


class TestKinematics:
    def test_components(self):
        kin = ScatterKinematics(BeamParameters(3.0, 4.0, 1), math.pi / 2)
        assert kin.k == 5.0
        assert kin.k_z_out == pytest.approx(0.0, abs=1e-15)
        assert kin.k_perp_out == 5.0
        assert kin.q_z == pytest.approx(3.0)
        assert kin.chi_squared(2.0) == pytest.approx(13.0)

    @pytest.mark.parametrize("theta", [-0.1, math.pi + 1e-9, math.nan])
    def test_angle_range(self, theta):
        with pytest.raises(DomainError):
            ScatterKinematics(BeamParameters(1.0, 1.0), theta)


class TestRutherford:
    def test_forward(self):
        for k in (0.1, 1.0, 169.0):
            assert rutherford(UNIT, k, 0.0) == 2.0

    def test_backward(self):
        assert rutherford(UNIT, 1.0, math.pi) == pytest.approx(0.4, rel=1e-15)

    def test_matches_fourier_transform(self, iron_potential):
        k, theta = 169.0, 0.05
        q = 2 * k * math.sin(theta / 2)
        born = -yukawa_fourier_quadrature(iron_potential, q) / (2 * math.pi)
        assert rutherford(iron_potential, k, theta) == pytest.approx(born, rel=1e-10)


class TestVortexAmplitude:
    def test_dark_center(self):
        for ell in (1, -1, 2, 5):
            assert vortex_amplitude(UNIT, ScatterKinematics(BeamParameters(10.0, 3.0, ell), 0.0)) == 0

    def test_kappa_zero_is_rutherford(self):
        kin = ScatterKinematics(BeamParameters(10.0, 0.0, 0), 0.4)
        assert vortex_amplitude(UNIT, kin) == rutherford(UNIT, 10.0, 0.4)

    def test_small_kappa_is_rutherford(self, iron_potential):
        kin = ScatterKinematics(BeamParameters(169.0, 1e-6, 0), 0.1)
        assert vortex_amplitude(iron_potential, kin) == pytest.approx(rutherford(iron_potential, 169.0, 0.1),
                                                                       rel=1e-9)

    def test_matches_oracle(self, iron_potential):
        kin = ScatterKinematics(BeamParameters(169.0, 25.0, 2), 0.2, 1.0)
        closed = vortex_amplitude(iron_potential, kin)
        assert closed == pytest.approx(vortex_amplitude_quadrature(iron_potential, kin), rel=1e-8)

    def test_backscattering_finite(self):
        f = vortex_amplitude(UNIT, ScatterKinematics(BeamParameters(5.0, 2.0, 3), math.pi))
        assert f == 0

    @settings(max_examples=200, deadline=None)
    @given(ell=st.integers(1, 8), kappa=st.floats(0.01, 60.0), k_z=st.floats(1.0, 300.0),
           theta=st.floats(1e-4, math.pi - 1e-4), phi=st.floats(0.0, 2 * math.pi), delta=st.floats(0.0, 2 * math.pi))
    def test_symmetries(self, ell, kappa, k_z, theta, phi, delta):
        pot = ScreenedPotential(-26.0, 3.3)
        f = vortex_amplitude(pot, ScatterKinematics(BeamParameters(k_z, kappa, ell), theta, phi))
        g = vortex_amplitude(pot, ScatterKinematics(BeamParameters(k_z, kappa, -ell), theta, phi))
        h = vortex_amplitude(pot, ScatterKinematics(BeamParameters(k_z, kappa, ell), theta, phi + delta))
        assert abs(g) == pytest.approx(abs(f), rel=1e-12, abs=1e-300)
        assert h == pytest.approx(np.exp(1j * ell * delta) * f, rel=1e-12, abs=1e-300)

    def test_magnitude_bounded_by_plane_wave_peak(self):
        # |b| < 1 and sqrt(D) >= chi^2 give |f| <= 2|V0|/mu^2.
        rng = np.random.default_rng(7)
        for _ in range(500):
            ell = int(rng.integers(-6, 7))
            kin = ScatterKinematics(BeamParameters(rng.uniform(1, 200), rng.uniform(0.1, 50), ell),
                                    rng.uniform(0, math.pi), rng.uniform(0, 6))
            assert abs(vortex_amplitude(UNIT, kin)) <= 2.0 + 1e-12


class TestCentralAmplitude:
    def test_plane_wave_limit(self):
        pot = ScreenedPotential(-3.0, 1.5)
        assert central_amplitude(pot, BeamParameters(7.0, 0.0)) == pytest.approx(6.0 / 1.5 ** 2)

    def test_unit_example(self):
        # -2 V0 / ((k - k_z)^2 + kappa^2 + mu^2) with k = sqrt(2)
        expected = 2.0 / ((math.sqrt(2) - 1) ** 2 + 2)
        assert central_amplitude(UNIT, BeamParameters(1.0, 1.0)) == pytest.approx(expected, rel=1e-15)
        assert expected == pytest.approx(0.920991, abs=1e-6)

    def test_decreasing(self):
        assert abs(central_amplitude(UNIT, BeamParameters(1.0, 2.0))) < abs(central_amplitude(UNIT, BeamParameters(1.0, 1.0)))

    def test_matches_vortex_amplitude_on_axis(self, iron_potential):
        for kappa in (0.5, 3.0, 25.0):
            beam = BeamParameters(169.0, kappa)
            assert central_amplitude(iron_potential, beam) == pytest.approx(
                vortex_amplitude(iron_potential, ScatterKinematics(beam, 0.0)), rel=1e-13)

    def test_vortex_forward_zero(self):
        assert central_amplitude(UNIT, BeamParameters(1.0, 1.0, 2)) == 0


class TestOffCenter:
    def test_no_shift(self, iron_potential):
        kin = ScatterKinematics(BeamParameters(169.0, 25.0, 1), 0.13, 2.0)
        assert off_center_amplitude(iron_potential, kin, Displacement(0.0, 1.0)) == vortex_amplitude(iron_potential, kin)

    @pytest.mark.parametrize("r0, phi0", [(0.1, 0.0), (0.4, 1.2), (1.3, 5.0)])
    def test_forward_reduction(self, iron_potential, r0, phi0):
        beam = BeamParameters(169.0, 5.0, 1)
        f = off_center_amplitude(iron_potential, ScatterKinematics(beam, 0.0), Displacement(r0, phi0))
        expected = -np.exp(1j * phi0) * scipy.special.jv(1, 5.0 * r0) * central_amplitude(iron_potential, beam.with_ell(0))
        assert f == pytest.approx(expected, rel=1e-12)

    def test_matches_displaced_oracle(self, iron_potential):
        kin = ScatterKinematics(BeamParameters(169.0, 5.0, 0), 0.1, 0.0)
        disp = Displacement(0.5, math.pi / 3)
        assert off_center_amplitude(iron_potential, kin, disp) == pytest.approx(
            displaced_amplitude_quadrature(iron_potential, kin, disp), rel=1e-7)


class TestCrossSection:
    def test_values(self):
        assert cross_section(0j) == 0
        assert cross_section(3 + 4j) == 25
        assert cross_section(rutherford(UNIT, 1.0, 0.0)) == 4


class TestSqrtArgumentSign:
    def test_unit_triple(self):
        assert sqrt_argument_sign(1.0, 1.0, 1.0) == -5.0

    def test_boundary(self):
        for kappa in (0.5, 2.0, 30.0):
            assert sqrt_argument_sign(kappa, kappa, 0.0) == pytest.approx(0.0, abs=1e-12 * kappa ** 4)
            assert sqrt_argument_sign(kappa, kappa, 1e-3) < 0

    def test_vectorized(self):
        rng = np.random.default_rng(3)
        kp, kappa, chi = rng.uniform(0.01, 10, (3, 1000))
        assert np.all(sqrt_argument_sign(kp, kappa, chi) <= 0)
