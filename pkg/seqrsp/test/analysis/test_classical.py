"""Class which tests the ClassicalBaseline util class."""
import math

import numpy as np
import pytest

from seqrsp.analysis.classical import ClassicalBaseline, ClassicalStrategy
from seqrsp.util.exceptions import ValidationError

ANGLES = [0.0, 0.3, math.pi / 4, 1.2, math.pi / 2, 2.0, 2.9, math.pi]


class TestClassicalBaseline:
    """Class which tests the ClassicalBaseline util class."""

    def test_bound_on_equator(self):
        """Test the classical bound 3/4 on the equator."""
        assert ClassicalBaseline.classical_bound(math.pi / 2) == pytest.approx(0.75)

    def test_bound_at_poles(self):
        """Test that the poles are prepared perfectly without entanglement."""
        assert ClassicalBaseline.classical_bound(0.0) == pytest.approx(1.0)
        assert ClassicalBaseline.classical_bound(math.pi) == pytest.approx(1.0)

    def test_bound_symmetric(self):
        """Test that the bound is symmetric about the equator."""
        for theta in ANGLES:
            assert ClassicalBaseline.classical_bound(theta) == pytest.approx(
                ClassicalBaseline.classical_bound(math.pi - theta)
            )

    def test_bound_range(self):
        """Test that an angle outside [0, pi] is rejected."""
        with pytest.raises(ValidationError):
            ClassicalBaseline.classical_bound(-0.1)

    @pytest.mark.parametrize("theta", ANGLES)
    def test_optimum_matches_bound(self, theta):
        """Test that optimising over both strategy cases reaches the closed-form bound."""
        value, strategy = ClassicalBaseline.optimize_classical(theta)
        assert value == pytest.approx(ClassicalBaseline.classical_bound(theta), abs=1e-9)
        assert ClassicalBaseline.classical_fidelity(theta, strategy) == pytest.approx(value)

    @pytest.mark.parametrize("case", [1, 2])
    @pytest.mark.parametrize("theta", [0.4, math.pi / 2, 2.5])
    def test_closed_form_matches_quadrature(self, case, theta):
        """Test the closed-form fidelity of a strategy against quadrature over the target azimuth."""
        strategy = ClassicalStrategy(1.1, 0.7, 2.0, 4.5, case)
        assert ClassicalBaseline.integrate_classical_fidelity(theta, strategy, nodes=32) == pytest.approx(
            ClassicalBaseline.classical_fidelity(theta, strategy), abs=1e-12
        )

    def test_optimal_strategy_quadrature(self):
        """Test that the optimal strategy on the equator reaches 3/4 by quadrature."""
        _, strategy = ClassicalBaseline.optimize_classical(math.pi / 2)
        assert ClassicalBaseline.integrate_classical_fidelity(math.pi / 2, strategy, nodes=32) == pytest.approx(
            0.75, abs=1e-9
        )

    def test_unsharp_classical_measurement(self):
        """Test that an unsharp measurement cannot improve the classical fidelity."""
        _, strategy = ClassicalBaseline.optimize_classical(1.0)
        sharp = ClassicalBaseline.integrate_classical_fidelity(1.0, strategy, nodes=32)
        unsharp = ClassicalBaseline.integrate_classical_fidelity(1.0, strategy, nodes=32, sharpness=0.5)
        assert unsharp <= sharp + 1e-12

    def test_random_strategies_below_bound(self):
        """Test that random classical strategies never beat the bound on twenty circles."""
        rng = np.random.default_rng(99)
        for theta in np.linspace(0.0, math.pi, 20):
            bound = ClassicalBaseline.classical_bound(float(theta))
            for _ in range(500):
                theta_b, phi_b, phi_p1, phi_p2 = rng.uniform(0.0, [math.pi, 2 * math.pi, 2 * math.pi, 2 * math.pi])
                strategy = ClassicalStrategy(theta_b, phi_b, phi_p1, phi_p2, int(rng.integers(1, 3)))
                assert ClassicalBaseline.classical_fidelity(float(theta), strategy) <= bound + 1e-12

    @pytest.mark.parametrize("theta", ANGLES)
    def test_communication_helps(self, theta):
        """Test that one bit of communication never does worse than a fixed guess."""
        assert ClassicalBaseline.no_communication_fidelity(theta) <= ClassicalBaseline.classical_bound(theta) + 1e-12

    def test_strategy_case(self):
        """Test that only the two strategy cases exist."""
        with pytest.raises(ValidationError):
            ClassicalStrategy(1.0, 0.0, 0.0, 0.0, case=3)
