"""Class which tests the Measurement util class."""
import math

import numpy as np
import pytest

from seqrsp.protocol.measurement import Measurement, UnsharpEffect
from seqrsp.protocol.states import BellKind, BlochCircleState, NonMaximal, Outcome, StateFactory, StateInspector, Werner
from seqrsp.util.exceptions import DimensionError, PSDViolationError, UndefinedConditionalStateError, ValidationError
from seqrsp.util.linalg import LinAlg


def effect_of(lam, theta, phi, sign):
    """Effect of the outcome sign for a measurement along (theta, phi)."""
    return UnsharpEffect(lam, BlochCircleState(theta, phi), sign)


class TestMeasurement:
    """Class which tests the Measurement util class."""

    def test_effects_complete(self):
        """Test that the two effects sum to the identity."""
        up = Measurement.effect(effect_of(0.6, 1.0, 2.0, Outcome.UP))
        down = Measurement.effect(effect_of(0.6, 1.0, 2.0, Outcome.DOWN))
        assert np.allclose(up + down, np.eye(2))

    @pytest.mark.parametrize("lam", [0.0, 0.3, 0.8, 1.0])
    def test_sqrt_effect(self, lam):
        """Test that the closed-form square root squares to the effect."""
        e = effect_of(lam, 0.9, 4.0, Outcome.DOWN)
        root = Measurement.sqrt_effect(e)
        assert np.allclose(root @ root, Measurement.effect(e))
        assert np.allclose(root, LinAlg.sqrt_psd(Measurement.effect(e)))

    def test_effect_eigenvalues(self):
        """Test that the effect has eigenvalues (1 - lambda) / 2 and (1 + lambda) / 2."""
        e = Measurement.effect(effect_of(0.4, 0.5, 0.1, Outcome.UP))
        assert np.allclose(LinAlg.eigvals_hermitian(e), [0.3, 0.7])

    def test_sharpness_range(self):
        """Test that a sharpness above 1 is rejected."""
        with pytest.raises(ValidationError):
            effect_of(1.2, 0.5, 0.1, Outcome.UP)

    def test_selective_update_singlet(self):
        """Test that a sharp measurement on the singlet leaves Alice in the opposite state."""
        rho = StateFactory.bell_state(BellKind.PSI_MINUS)
        alice, probability = Measurement.conditional_state(rho, effect_of(1.0, 0.0, 0.0, Outcome.UP))
        assert np.isclose(probability, 0.5)
        assert np.allclose(alice, np.diag([0, 1]))

    def test_selective_update_undefined(self):
        """Test that conditioning on an impossible outcome raises."""
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0
        with pytest.raises(UndefinedConditionalStateError):
            Measurement.selective_update(rho, effect_of(1.0, 0.0, 0.0, Outcome.DOWN))

    def test_selective_update_checks_state(self):
        """Test that only two-qubit density matrices are measured."""
        with pytest.raises(PSDViolationError):
            Measurement.selective_update(np.diag([1.5, -0.5, 0.0, 0.0]), effect_of(1.0, 0.0, 0.0, Outcome.UP))
        with pytest.raises(DimensionError):
            Measurement.selective_update(np.eye(2) / 2, effect_of(1.0, 0.0, 0.0, Outcome.UP))

    @pytest.mark.parametrize("theta", [0.0, 0.6, math.pi / 2, 2.2])
    def test_averaged_channel_damping(self, theta):
        """Test that the averaged channel scales Bob's components by the closed-form factors."""
        rho = StateFactory.make_initial(NonMaximal(0.4))
        lam = 0.7
        after = Measurement.phi_averaged_channel(rho, lam, theta, nodes=64)
        factors = Measurement.bob_side_damping(lam, theta)
        before_t = StateInspector.correlation_matrix(rho)
        assert np.allclose(StateInspector.correlation_matrix(after), before_t * factors[None, :], atol=1e-12)
        alice_before, bob_before = StateInspector.local_bloch_vectors(rho)
        alice_after, bob_after = StateInspector.local_bloch_vectors(after)
        assert np.allclose(alice_after, alice_before)
        assert np.isclose(bob_after[2], bob_before[2] * factors[2])

    def test_averaged_channel_trivial(self):
        """Test that lambda = 0 leaves the state unchanged."""
        rho = StateFactory.make_initial(Werner(0.6))
        assert np.allclose(Measurement.phi_averaged_channel(rho, 0.0, 1.0, nodes=16), rho)

    def test_averaged_channel_nodes(self):
        """Test that fewer than 16 nodes are rejected."""
        with pytest.raises(ValidationError):
            Measurement.phi_averaged_channel(np.eye(4) / 4, 0.5, 1.0, nodes=8)

    def test_damping_equator(self):
        """Test the damping factors on the equator."""
        s = math.sqrt(1 - 0.6**2)
        assert np.allclose(Measurement.bob_side_damping(0.6, math.pi / 2), [(1 + s) / 2, (1 + s) / 2, s])
