"""Monte-Carlo trajectories of the cascade, used as an independent check of the closed forms."""
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from seqrsp.analysis.classical import ClassicalBaseline
from seqrsp.protocol.cascade import CascadeProtocol, ProtocolConfig, SharpnessChain, Target
from seqrsp.protocol.measurement import MIN_PROBABILITY, Measurement
from seqrsp.protocol.states import (
    REJECT,
    BellDiagonal,
    BellDiagonalCoeffs,
    BellKind,
    BellState,
    NonMaximal,
    Outcome,
    Singlet,
    StateFactory,
    Werner,
)
from seqrsp.util.config import Config
from seqrsp.util.exceptions import ValidationError
from seqrsp.util.linalg import LinAlg

logger = logging.getLogger(__name__)

MIN_TRIALS = 1000
EXACT_SE = 1e-12
EXACT_MATCH = 1e-9


@dataclass(frozen=True)
class BobEstimate:
    """Empirical fidelity of one Bob next to its analytic value."""

    index: int
    mean: float
    standard_error: float
    p_up: float
    analytic: float

    @property
    def z_score(self) -> float:
        """Distance to the analytic value in standard errors."""
        if self.standard_error < EXACT_SE:
            return 0.0 if abs(self.mean - self.analytic) < EXACT_MATCH else math.inf
        return (self.mean - self.analytic) / self.standard_error

    def to_dict(self) -> Dict[str, Any]:
        """Plain representation used in output records."""
        return {
            "index": self.index,
            "mean": self.mean,
            "standard_error": self.standard_error,
            "p_up": self.p_up,
            "analytic": self.analytic,
            "z": self.z_score,
        }


@dataclass(frozen=True)
class TrajectoryRun:
    """Result of simulating one configuration."""

    config: ProtocolConfig
    chain: SharpnessChain
    seed: int
    trials: int
    estimates: Tuple[BobEstimate, ...]

    @property
    def max_abs_z(self) -> float:
        """Largest absolute z-score over all Bobs."""
        return max(abs(estimate.z_score) for estimate in self.estimates)

    def to_dict(self) -> Dict[str, Any]:
        """Plain representation used in output records."""
        return {
            "config": self.config.describe(),
            "chain": list(self.chain),
            "seed": self.seed,
            "trials": self.trials,
            "bobs": [estimate.to_dict() for estimate in self.estimates],
        }


class TrajectoryOracle:
    """Utility class sampling measurement trajectories of the cascade."""

    @staticmethod
    def fresh_seed() -> int:
        """Draw a 64-bit seed from operating-system entropy."""
        return int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])

    @staticmethod
    def _simulate_batch(
        config: ProtocolConfig, chain: SharpnessChain, trials: int, rng: np.random.Generator
    ) -> np.ndarray:
        """
        Simulate one batch of trajectories.

        Per Bob all azimuth draws are consumed before all outcome draws.

        :return: Array of shape (len(chain), 3) with the sum of scores, the sum of squared scores and
        the number of up outcomes of every Bob.
        """
        rho = np.broadcast_to(StateFactory.make_initial(config.family), (trials, 4, 4)).copy()
        f_classical = ClassicalBaseline.classical_bound(config.theta)
        sums = np.zeros((len(chain), 3))
        for index, lam in enumerate(chain):
            phis = rng.uniform(0.0, 2 * math.pi, trials)
            draws = rng.random(trials)

            plus, minus = Measurement.sqrt_effects(lam, config.theta, phis)
            states = {}
            for outcome, root in ((Outcome.UP, plus), (Outcome.DOWN, minus)):
                kraus = LinAlg.kron_identity_batch(root)
                states[outcome] = np.einsum("nij,njk,nkl->nil", kraus, rho, kraus)
            p_up = np.trace(states[Outcome.UP], axis1=1, axis2=2).real
            up = draws < p_up

            chosen = np.where(up[:, None, None], states[Outcome.UP], states[Outcome.DOWN])
            probability = np.where(up, p_up, 1 - p_up)
            rho = chosen / np.maximum(probability, MIN_PROBABILITY)[:, None, None]
            alice = LinAlg.partial_trace_second(rho)

            targets = StateFactory.pure_states(config.theta, phis, complement=config.target is Target.PSI_PERP)
            scores = np.empty(trials)
            for outcome, mask in ((Outcome.UP, up), (Outcome.DOWN, ~up)):
                correction = CascadeProtocol.correction(config, outcome)
                if correction is REJECT:
                    scores[mask] = f_classical
                    continue
                corrected = correction @ alice[mask] @ correction.conj().T
                scores[mask] = np.einsum("ni,nij,nj->n", targets[mask].conj(), corrected, targets[mask]).real

            sums[index] = (scores.sum(), np.square(scores).sum(), up.sum())
        return sums

    @staticmethod
    def simulate(
        config: ProtocolConfig,
        chain: Sequence[float],
        trials: Optional[int] = None,
        seed: Optional[int] = None,
        batch_size: Optional[int] = None,
    ) -> TrajectoryRun:
        """
        Estimate every Bob's average fidelity from sampled trajectories.

        Each trial draws a measurement azimuth and an outcome for every Bob, updates the shared state
        selectively and scores Alice's corrected state against the target (the classical bound when
        she rejects it). Batches use generators spawned from one seed sequence and are reduced in order.

        :param config: Protocol configuration.
        :param chain: Sharpness chain.
        :param trials: Number of trajectories; the configured default when omitted.
        :param seed: Seed of the generator; drawn from the operating system when omitted.
        :param batch_size: Trajectories per batch; the configured default when omitted.
        :return: Estimates for every Bob of the chain.
        """
        chain = CascadeProtocol.check_chain(chain)
        if not chain:
            raise ValidationError("The sharpness chain is empty.", "lambdas")
        trials = Config.get("trials") if trials is None else trials
        if trials < MIN_TRIALS:
            raise ValidationError("At least {} trials are needed, got {}.".format(MIN_TRIALS, trials), "trials")
        batch_size = Config.get("batch_size") if batch_size is None else batch_size
        if seed is None:
            seed = TrajectoryOracle.fresh_seed()
            logger.info("No seed given, using %d.", seed)

        sizes = [batch_size] * (trials // batch_size) + ([trials % batch_size] if trials % batch_size else [])
        children = np.random.SeedSequence(seed).spawn(len(sizes))
        totals = np.zeros((len(chain), 3))
        for number, (size, child) in enumerate(zip(sizes, children)):
            totals += TrajectoryOracle._simulate_batch(config, chain, size, np.random.default_rng(child))
            logger.debug("Finished batch %d of %d (%d trials).", number + 1, len(sizes), size)

        estimates = []
        for index, (total, squares, ups) in enumerate(totals):
            mean = total / trials
            variance = max(0.0, (squares - trials * mean**2) / (trials - 1))
            estimates.append(
                BobEstimate(
                    index=index + 1,
                    mean=float(mean),
                    standard_error=math.sqrt(variance / trials),
                    p_up=float(ups / trials),
                    analytic=CascadeProtocol.average_fidelity(config, chain, index + 1),
                )
            )
        return TrajectoryRun(config, chain, int(seed), trials, tuple(estimates))

    @staticmethod
    def regression_panel() -> List[Tuple[ProtocolConfig, SharpnessChain]]:
        """Fixed set of configurations covering every family, circle regime and target."""
        quarter = math.pi / 4
        magic = math.atan(math.sqrt(2))
        return [
            (ProtocolConfig(Singlet()), (1.0,)),
            (ProtocolConfig(Singlet()), (0.6, 1.0)),
            (ProtocolConfig(Werner(0.7)), (1.0,)),
            (ProtocolConfig(Singlet()), (0.5, 0.536, 0.582, 0.641, 0.726, 0.859, 1.0)),
            (ProtocolConfig(Singlet(), theta=quarter), (0.7, 0.8, 1.0)),
            (ProtocolConfig(Singlet(), theta=magic), (0.605, 0.701, 0.866, 1.0)),
            (ProtocolConfig(Singlet(), theta=0.0), (0.5, 1.0)),
            (ProtocolConfig(Singlet(), theta=math.pi), (0.3,)),
            (ProtocolConfig(NonMaximal(math.pi / 6)), (0.7, 0.8)),
            (ProtocolConfig(NonMaximal(math.pi / 8), theta=math.pi / 3), (0.9,)),
            (ProtocolConfig(Werner(0.9), theta=math.pi / 3), (0.8, 0.9)),
            (ProtocolConfig(BellDiagonal(BellDiagonalCoeffs(-0.8, -0.6, -0.4))), (0.7, 1.0)),
            (ProtocolConfig(BellState(BellKind.PSI_PLUS)), (0.6, 1.0)),
            (ProtocolConfig(BellState(BellKind.PHI_PLUS), theta=1.0), (0.8, 0.9)),
            (ProtocolConfig(BellState(BellKind.PHI_MINUS)), (0.5, 0.7, 1.0)),
            (ProtocolConfig(Singlet(), theta=2.5, target=Target.PSI_PERP), (0.75, 1.0)),
            (ProtocolConfig(NonMaximal(1.2), theta=2.0, target=Target.PSI_PERP), (0.9, 0.6)),
            (ProtocolConfig(Werner(0.5)), (0.3, 0.3, 0.3)),
            (ProtocolConfig(Singlet()), (0.2, 0.4, 0.6, 0.8, 1.0)),
            (ProtocolConfig(BellDiagonal(BellDiagonalCoeffs(0.3, -0.4, -0.2)), theta=0.8), (0.9, 1.0)),
        ]

    @staticmethod
    def run_panel(trials: Optional[int] = None, seed: Optional[int] = None) -> List[TrajectoryRun]:
        """
        Simulate every configuration of the regression panel.

        Configuration k uses the k-th child of the seed sequence of the given seed.

        :param trials: Trajectories per configuration.
        :param seed: Seed of the whole panel; drawn from the operating system when omitted.
        :return: One run per configuration, in panel order.
        """
        if seed is None:
            seed = TrajectoryOracle.fresh_seed()
            logger.info("No seed given, using %d.", seed)
        panel = TrajectoryOracle.regression_panel()
        children = np.random.SeedSequence(seed).spawn(len(panel))
        runs = []
        for (config, chain), child in zip(panel, children):
            child_seed = int(child.generate_state(1, dtype=np.uint64)[0])
            runs.append(TrajectoryOracle.simulate(config, chain, trials, child_seed))
        return runs
