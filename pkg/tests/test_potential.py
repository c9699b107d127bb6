import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vortexscat import (BeamParameters, ScatterKinematics, ScreenedPotential, ScreeningModel, coulomb_strength,
                        cross_section, screening_mu, vortex_amplitude)
from vortexscat.errors import DomainError, MissingDataError


class TestScreeningMu:
    def test_iron_default(self):
        assert screening_mu(26) == pytest.approx(26 ** (1 / 3) / 0.8853, rel=1e-15)
        assert screening_mu(26) == pytest.approx(3.3463, abs=5e-5)

    def test_hydrogen_default(self):
        assert screening_mu(1) == pytest.approx(1.12956, abs=5e-6)

    def test_constants_cancel(self):
        assert screening_mu(1, ScreeningModel(table={1: 0.8853})) == 1.0

    def test_table_never_extrapolates(self):
        model = ScreeningModel(table={1: 0.9, 6: 1.1})
        with pytest.raises(MissingDataError):
            screening_mu(26, model)

    @pytest.mark.parametrize("Z", [0, -3])
    def test_nonpositive_Z(self, Z):
        with pytest.raises(DomainError):
            screening_mu(Z)

    def test_strictly_increasing_in_Z(self):
        values = [screening_mu(z) for z in range(1, 119)]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestTableFile:
    def test_parse(self, tmp_path):
        path = tmp_path / "mu.txt"
        path.write_text("# Z  mu_inf\n1 0.8853\n\n26 1.25  # iron\n")
        model = ScreeningModel.from_file(path)
        assert screening_mu(1, model) == 1.0
        assert screening_mu(26, model) == pytest.approx(1.25 * 26 ** (1 / 3) / 0.8853)
        assert str(path) in model.provenance

    @pytest.mark.parametrize("text", ["", "# only comments\n", "1 0.9\n1 1.0\n", "1\n", "one 0.9\n", "2 -1\n"])
    def test_malformed(self, tmp_path, text):
        path = tmp_path / "bad.txt"
        path.write_text(text)
        with pytest.raises(DomainError):
            ScreeningModel.from_file(path)


class TestPotential:
    def test_coulomb_strength(self):
        assert coulomb_strength(1) == -1.0
        assert coulomb_strength(26) == -26.0
        assert coulomb_strength(26, attractive=False) == 26.0

    def test_for_atom(self):
        pot = ScreenedPotential.for_atom(26)
        assert pot.v0 == -26.0 and pot.mu == screening_mu(26)

    def test_evaluation(self):
        pot = ScreenedPotential(-2.0, 0.5)
        assert pot(2.0) == pytest.approx(-math.exp(-1.0))

    @pytest.mark.parametrize("v0, mu", [(1.0, 0.0), (1.0, -1.0), (0.0, 1.0)])
    def test_invalid(self, v0, mu):
        with pytest.raises(DomainError):
            ScreenedPotential(v0, mu)

    @settings(max_examples=100, deadline=None)
    @given(v0=st.floats(0.1, 100.0), mu=st.floats(0.1, 10.0), ell=st.integers(-4, 4),
           kappa=st.floats(0.1, 40.0), theta=st.floats(0.0, math.pi))
    def test_cross_section_invariant_under_sign_of_v0(self, v0, mu, ell, kappa, theta):
        kin = ScatterKinematics(BeamParameters(169.0, kappa, ell), theta, 0.3)
        a = cross_section(vortex_amplitude(ScreenedPotential(v0, mu), kin))
        b = cross_section(vortex_amplitude(ScreenedPotential(-v0, mu), kin))
        assert a == b

    def test_vectorized_call(self):
        r = np.array([0.5, 1.0, 2.0])
        np.testing.assert_allclose(ScreenedPotential(1.0, 1.0)(r), np.exp(-r) / r)
