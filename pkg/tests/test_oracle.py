"""Tests for the boundary-matching scattering solver."""

import math

import numpy as np
import pytest

from src.core.exceptions import (
    POINT_ERRORS,
    ConservationError,
    InvalidParameterError,
    SingularSystemError,
)
from src.gates.algebra import fidelity_up_to_phase
from src.ring import oracle
from src.ring.closed_form import transmission
from src.ring.oracle import (
    LOWER_COLS,
    N_UNKNOWNS,
    SPIN_DOWN,
    SPIN_UP,
    assemble_system,
    solve_scattering,
)
from src.ring.spin_core import RingConfig


@pytest.fixture
def generic_cfg():
    return RingConfig(ka=20.4, x=1.0, gamma=1.3)


def random_unitary(rng, n=4):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class TestAssembleSystem:
    """Test assembly of the matching system."""

    def test_shape(self, generic_cfg):
        """Test a 12x12 matrix with a length-12 right-hand side."""
        M, rhs = assemble_system(generic_cfg, SPIN_UP)
        assert M.shape == (N_UNKNOWNS, N_UNKNOWNS)
        assert rhs.shape == (N_UNKNOWNS,)

    def test_incident_enters_input_rows_only(self, generic_cfg):
        """Test the source term lives in input-junction rows 0-3 and 8-9."""
        for spinor in (SPIN_UP, SPIN_DOWN, np.array([1.0, 1.0j]) / math.sqrt(2)):
            _, rhs = assemble_system(generic_cfg, spinor)
            assert np.all(rhs[4:8] == 0)
            assert np.all(rhs[10:12] == 0)
            np.testing.assert_allclose(rhs[0:2], -spinor)
            np.testing.assert_allclose(rhs[2:4], -spinor)
            np.testing.assert_allclose(rhs[8:10], generic_cfg.ka * spinor)

    def test_matrix_independent_of_incident_spin(self, generic_cfg):
        """Test only the right-hand side depends on the incident spinor."""
        M_up, _ = assemble_system(generic_cfg, SPIN_UP)
        M_down, _ = assemble_system(generic_cfg, SPIN_DOWN)
        np.testing.assert_array_equal(M_up, M_down)

    def test_spin_blocks_decouple_without_coupling(self):
        """Test x = 0 splits the system into identical spin-up and spin-down blocks."""
        M, _ = assemble_system(RingConfig(ka=20.4, x=0.0, gamma=1.3), SPIN_UP)
        up_rows, down_rows = np.arange(0, 12, 2), np.arange(1, 12, 2)
        up_cols = [0, 2, 3, 6, 7, 10]
        down_cols = [1, 4, 5, 8, 9, 11]

        assert np.all(M[np.ix_(up_rows, down_cols)] == 0)
        assert np.all(M[np.ix_(down_rows, up_cols)] == 0)

        # mu=-1 states run kappa in the opposite sense, so j=1 and j=2 swap roles
        up_block = M[np.ix_(up_rows, up_cols)]
        down_block = M[np.ix_(down_rows, [1, 5, 4, 9, 8, 11])]
        np.testing.assert_allclose(up_block, down_block, atol=1e-12)

    def test_invalid_spinor(self, generic_cfg):
        """Test unnormalized and wrongly shaped spinors are rejected."""
        with pytest.raises(InvalidParameterError):
            assemble_system(generic_cfg, [1.0, 1.0])
        with pytest.raises(InvalidParameterError):
            assemble_system(generic_cfg, [1.0, 0.0, 0.0])

    def test_invalid_mixing(self, generic_cfg):
        """Test a basis mixing matrix must be 4x4."""
        with pytest.raises(InvalidParameterError):
            assemble_system(generic_cfg, SPIN_UP, basis_mixing=np.eye(3))


class TestSolveScattering:
    """Test oracle solutions."""

    def test_flux_conservation(self, random_configs):
        """Test |t|^2 + |r|^2 = 1 for both incident spins over 1000 configurations."""
        solved = 0
        for cfg in random_configs(1000):
            try:
                sol = solve_scattering(cfg)
            except POINT_ERRORS:
                continue
            solved += 1
            assert sol.conservation_defect < 1e-10
            assert sol.residual < 1e-8
        assert solved >= 990

    def test_agrees_with_closed_form(self, random_configs):
        """Test oracle and closed-form transmission matrices coincide over 1000 configurations."""
        compared = 0
        for cfg in random_configs(1000):
            try:
                sol = solve_scattering(cfg)
                dec = transmission(cfg)
            except POINT_ERRORS:
                continue
            assert fidelity_up_to_phase(sol.Tmat, dec.T) >= 1 - 1e-8
            assert np.max(np.abs(sol.Tmat - dec.T)) <= 1e-8
            assert sol.efficiency == pytest.approx(dec.t_mag, abs=1e-8)
            compared += 1
        assert compared >= 990

    def test_reflection_is_spin_diagonal(self, generic_cfg):
        """Test R is proportional to the identity and |T|^2 + |rho|^2 = 1."""
        sol = solve_scattering(generic_cfg)
        rho = sol.Rmat[0, 0]
        np.testing.assert_allclose(sol.Rmat, rho * np.eye(2), atol=1e-10)
        assert sol.efficiency ** 2 + sol.reflection_norm ** 2 == pytest.approx(1.0, abs=1e-10)

    def test_basis_mixing_invariance(self, generic_cfg, rng):
        """Test physical results do not depend on the arm basis."""
        plain = solve_scattering(generic_cfg)
        for _ in range(3):
            mixed = solve_scattering(generic_cfg, basis_mixing=random_unitary(rng))
            np.testing.assert_allclose(mixed.Tmat, plain.Tmat, atol=1e-9)
            np.testing.assert_allclose(mixed.Rmat, plain.Rmat, atol=1e-9)

    def test_bound_state_is_singular(self):
        """Test a bound state in the continuum raises SingularSystemError."""
        with pytest.raises(SingularSystemError) as exc_info:
            solve_scattering(RingConfig(ka=20.0, x=0.0, gamma=math.pi))
        assert exc_info.value.condition_number > 1e12

    def test_broken_flux_signs_detected(self, generic_cfg, monkeypatch):
        """Test a sign error in the output flux row is reported as ConservationError."""
        original = oracle.assemble_system

        def flipped(cfg, incident, basis_mixing=None):
            M, rhs = original(cfg, incident, basis_mixing)
            M[10:12, LOWER_COLS] *= -1
            return M, rhs

        monkeypatch.setattr(oracle, "assemble_system", flipped)
        with pytest.raises(ConservationError) as exc_info:
            solve_scattering(generic_cfg)
        assert exc_info.value.defect > 1e-8
