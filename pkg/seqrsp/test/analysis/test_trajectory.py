"""Class which tests the TrajectoryOracle util class."""
import math

import pytest

from seqrsp.analysis.trajectory import BobEstimate, TrajectoryOracle
from seqrsp.protocol.cascade import ProtocolConfig, Target
from seqrsp.protocol.states import NonMaximal, Singlet, Werner
from seqrsp.util.exceptions import ValidationError

EQUATOR = ProtocolConfig(Singlet())


class TestTrajectoryOracle:
    """Class which tests the TrajectoryOracle util class."""

    def test_deterministic_preparation(self):
        """Test that every trajectory scores 1 for a sharp measurement on the singlet."""
        run = TrajectoryOracle.simulate(EQUATOR, (1.0,), trials=2000, seed=1)
        estimate = run.estimates[0]
        assert estimate.mean == pytest.approx(1.0)
        assert estimate.standard_error < 1e-6
        assert abs(estimate.z_score) < 4

    @pytest.mark.parametrize(
        "config, chain",
        [
            (EQUATOR, (0.6, 1.0)),
            (ProtocolConfig(Werner(0.7)), (1.0,)),
            (ProtocolConfig(NonMaximal(0.5), theta=1.0), (0.7, 0.9)),
            (ProtocolConfig(NonMaximal(1.2), theta=2.0, target=Target.PSI_PERP), (0.9, 0.6)),
        ],
    )
    def test_agrees_with_closed_form(self, config, chain):
        """Test that the empirical means lie within four standard errors of the closed forms."""
        run = TrajectoryOracle.simulate(config, chain, trials=20000, seed=20240611, batch_size=5000)
        assert run.max_abs_z < 4
        assert len(run.estimates) == len(chain)

    def test_outcome_frequency(self):
        """Test the empirical up frequency on a general circle."""
        config = ProtocolConfig(NonMaximal(0.3), theta=1.0)
        run = TrajectoryOracle.simulate(config, (0.8,), trials=20000, seed=5)
        expected = (1 + 0.8 * -math.cos(0.6) * math.cos(1.0)) / 2
        assert run.estimates[0].p_up == pytest.approx(expected, abs=0.02)

    def test_same_seed_same_result(self):
        """Test that a seed fixes the result."""
        first = TrajectoryOracle.simulate(EQUATOR, (0.5, 0.7), trials=3000, seed=11, batch_size=1000)
        second = TrajectoryOracle.simulate(EQUATOR, (0.5, 0.7), trials=3000, seed=11, batch_size=1000)
        assert first.to_dict() == second.to_dict()

    def test_different_seed(self):
        """Test that different seeds give different samples of a Bob whose scores vary."""
        first = TrajectoryOracle.simulate(EQUATOR, (0.5, 0.7), trials=3000, seed=1)
        second = TrajectoryOracle.simulate(EQUATOR, (0.5, 0.7), trials=3000, seed=2)
        assert first.estimates[1].mean != second.estimates[1].mean
        assert first.estimates[1].standard_error > 0.0

    def test_constant_score(self):
        """Test that the first Bob on the singlet scores (1 + lambda) / 2 in every trajectory."""
        first = TrajectoryOracle.simulate(EQUATOR, (0.5,), trials=3000, seed=1)
        second = TrajectoryOracle.simulate(EQUATOR, (0.5,), trials=3000, seed=2)
        assert first.estimates[0].mean == pytest.approx(0.75)
        assert second.estimates[0].mean == pytest.approx(0.75)

    def test_seed_drawn_when_missing(self):
        """Test that a missing seed is drawn and reported."""
        run = TrajectoryOracle.simulate(EQUATOR, (1.0,), trials=1000)
        assert isinstance(run.seed, int)

    def test_too_few_trials(self):
        """Test that fewer than 1000 trials are rejected."""
        with pytest.raises(ValidationError):
            TrajectoryOracle.simulate(EQUATOR, (1.0,), trials=999, seed=1)

    def test_empty_chain(self):
        """Test that an empty chain is rejected."""
        with pytest.raises(ValidationError):
            TrajectoryOracle.simulate(EQUATOR, (), trials=1000, seed=1)

    def test_panel(self):
        """Test that every configuration of the regression panel agrees with the closed forms."""
        runs = TrajectoryOracle.run_panel(trials=20000, seed=7)
        assert len(runs) == len(TrajectoryOracle.regression_panel()) == 20
        assert max(run.max_abs_z for run in runs) < 4


class TestBobEstimate:
    """Class which tests the BobEstimate class."""

    def test_z_score(self):
        """Test the z-score in standard errors."""
        assert BobEstimate(1, 0.52, 0.01, 0.5, 0.5).z_score == pytest.approx(2.0)

    def test_exact_mismatch(self):
        """Test that a zero standard error with a wrong mean gives an infinite z-score."""
        assert BobEstimate(1, 0.9, 0.0, 0.5, 1.0).z_score == math.inf
