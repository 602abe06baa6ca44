"""The multi-Bob cascade: shared states before each Bob and their average preparation fidelities."""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from seqrsp.analysis.classical import ClassicalBaseline
from seqrsp.protocol.measurement import MIN_PROBABILITY, Measurement, check_sharpness
from seqrsp.protocol.states import (
    REJECT,
    Circle,
    CorrelationProfile,
    InitialFamily,
    Outcome,
    Rejection,
    StateFactory,
    check_theta,
)
from seqrsp.util.config import Config
from seqrsp.util.exceptions import ProtocolError, UndefinedConditionalStateError, ValidationError
from seqrsp.util.linalg import LinAlg

logger = logging.getLogger(__name__)

SharpnessChain = Tuple[float, ...]


class Target(Enum):
    """Which of the two complementary states Bob asks Alice to prepare."""

    PSI = "psi"
    PSI_PERP = "psi_perp"


@dataclass(frozen=True)
class ProtocolConfig:
    """Initial state family, circle of the target states and target choice."""

    family: InitialFamily
    theta: float = math.pi / 2
    target: Target = Target.PSI

    def __post_init__(self):
        check_theta(self.theta)

    @property
    def circle(self) -> Circle:
        """Regime of the target circle."""
        return Circle.classify(self.theta)

    def describe(self) -> Dict[str, Any]:
        """Plain representation used in output records."""
        return {"family": self.family.label(), "theta": self.theta, "target": self.target.value}


@dataclass(frozen=True)
class BobReport:
    """What one Bob of the cascade achieves."""

    # pylint: disable=too-many-instance-attributes

    index: int
    sharpness: float
    average_fidelity: float
    postselected_fidelity: float
    classical_bound: float
    beats_classical: bool
    p_up: float
    lambda_min: float
    coefficients: Tuple[float, float, float]
    discord: float
    concurrence: float
    linear_entropy: float

    def to_dict(self) -> Dict[str, Any]:
        """Plain representation used in output records."""
        return {
            "index": self.index,
            "lambda": self.sharpness,
            "f_av": self.average_fidelity,
            "f_postselected": self.postselected_fidelity,
            "f_classical": self.classical_bound,
            "beats_classical": self.beats_classical,
            "p_up": self.p_up,
            "lambda_min": self.lambda_min,
            "c1": self.coefficients[0],
            "c2": self.coefficients[1],
            "c3": self.coefficients[2],
            "discord": self.discord,
            "concurrence": self.concurrence,
            "linear_entropy": self.linear_entropy,
        }


@dataclass(frozen=True)
class CascadeReport:
    """Per-Bob results of one configuration and sharpness chain."""

    config: ProtocolConfig
    chain: SharpnessChain
    bobs: Tuple[BobReport, ...] = field(default_factory=tuple)

    @property
    def successful_bobs(self) -> int:
        """Number of leading Bobs who beat the classical bound."""
        count = 0
        for bob in self.bobs:
            if not bob.beats_classical:
                break
            count += 1
        return count

    def to_dict(self) -> Dict[str, Any]:
        """Plain representation used in output records."""
        return {
            "config": self.config.describe(),
            "chain": list(self.chain),
            "successful_bobs": self.successful_bobs,
            "bobs": [bob.to_dict() for bob in self.bobs],
        }


class CascadeProtocol:
    """Utility class evaluating the cascade in closed form and by numerical averaging."""

    @staticmethod
    def check_chain(chain: Sequence[float]) -> SharpnessChain:
        """
        Check a sharpness chain.

        :param chain: Sharpness of each Bob in order.
        :return: The chain as a tuple of floats.
        """
        if len(chain) > Config.max_chain():
            raise ProtocolError("Chains are limited to {} Bobs, got {}.".format(Config.max_chain(), len(chain)))
        return tuple(check_sharpness(float(lam), "lambdas", index) for index, lam in enumerate(chain))

    @staticmethod
    def _checked(chain: Sequence[float], i: int, own: bool) -> SharpnessChain:
        """Check the chain and that it reaches Bob i (or his predecessor when own is False)."""
        chain = CascadeProtocol.check_chain(chain)
        if i < 1:
            raise ValidationError("Bob index must be at least 1, got {}.".format(i), "i")
        needed = i if own else i - 1
        if len(chain) < needed:
            raise ProtocolError("Bob {} needs {} sharpness values, the chain has {}.".format(i, needed, len(chain)))
        return chain

    @staticmethod
    def profile(config: ProtocolConfig, chain: Sequence[float], i: int) -> CorrelationProfile:
        """
        Bloch data of the state Bob i shares with Alice, in the singlet frame.

        :param config: Protocol configuration.
        :param chain: Sharpness chain; only the first i - 1 entries are used.
        :param i: Bob index, starting at 1.
        :return: The profile of the shared state.
        """
        chain = CascadeProtocol._checked(chain, i, own=False)
        profile = config.family.profile()
        for lam in chain[: i - 1]:
            profile = profile.damped(Measurement.bob_side_damping(lam, config.theta))
        return profile

    @staticmethod
    def shared_state_coefficients(
        config: ProtocolConfig, chain: Sequence[float], i: int
    ) -> Tuple[float, float, float]:
        """
        Diagonal of the correlation matrix of the state Bob i shares with Alice, in the lab frame.

        :param config: Protocol configuration.
        :param chain: Sharpness chain.
        :param i: Bob index.
        :return: (c1, c2, c3).
        """
        return CascadeProtocol.profile(config, chain, i).lab_coefficients()

    @staticmethod
    def shared_state(config: ProtocolConfig, chain: Sequence[float], i: int, nodes: Optional[int] = None) -> np.ndarray:
        """
        State Bob i shares with Alice, obtained by applying every predecessor's averaged channel.

        :param config: Protocol configuration.
        :param chain: Sharpness chain.
        :param i: Bob index.
        :param nodes: Quadrature nodes per channel.
        :return: 4x4 density matrix.
        """
        chain = CascadeProtocol._checked(chain, i, own=False)
        rho = StateFactory.make_initial(config.family)
        for lam in chain[: i - 1]:
            rho = Measurement.phi_averaged_channel(rho, lam, config.theta, nodes)
        return rho

    @staticmethod
    def outcome_probability(config: ProtocolConfig, chain: Sequence[float], i: int) -> float:
        """
        Probability of the up outcome at Bob i, averaged over his measurement azimuth.

        :param config: Protocol configuration.
        :param chain: Sharpness chain.
        :param i: Bob index.
        :return: (1 + lambda_i b_z cos theta) / 2.
        """
        chain = CascadeProtocol._checked(chain, i, own=True)
        profile = CascadeProtocol.profile(config, chain, i)
        return (1 + chain[i - 1] * profile.bob_z * math.cos(config.theta)) / 2

    @staticmethod
    def _fidelity_parts(config: ProtocolConfig, chain: Sequence[float], i: int) -> Tuple[float, float]:
        """
        Weighted fidelity of the kept branches and probability of the rejected branch.

        :return: Sum over kept outcomes of p_a <target|rho_A|a|target>, and the rejection probability.
        """
        chain = CascadeProtocol._checked(chain, i, own=True)
        profile = CascadeProtocol.profile(config, chain, i)
        lam = chain[i - 1]
        circle = config.circle
        if circle is Circle.EQUATOR:
            return 0.5 - lam * profile.t_perp / 2, 0.0
        if circle is Circle.POLE:
            return 0.5 - lam * profile.t_z / 2, 0.0

        cos_theta = math.cos(config.theta)
        sign = 1 if config.target is Target.PSI else -1
        local = sign * cos_theta * (profile.alice_z - lam * profile.bob_z)
        transverse = profile.t_perp * math.sin(config.theta) ** 2 + profile.t_z * cos_theta**2
        kept = (1 + local - lam * transverse) / 4
        rejected = (1 + sign * lam * profile.bob_z * cos_theta) / 2
        return kept, rejected

    @staticmethod
    def average_fidelity(config: ProtocolConfig, chain: Sequence[float], i: int) -> float:
        """
        Average fidelity of the state Alice holds after Bob i, in closed form.

        Rejected branches are scored with the classical bound of the circle.

        :param config: Protocol configuration.
        :param chain: Sharpness chain, at least i entries.
        :param i: Bob index.
        :return: Average fidelity.
        """
        kept, rejected = CascadeProtocol._fidelity_parts(config, chain, i)
        return ClassicalBaseline.classical_bound(config.theta) * rejected + kept

    @staticmethod
    def postselected_fidelity(config: ProtocolConfig, chain: Sequence[float], i: int) -> float:
        """
        Average fidelity of the kept branch alone.

        :param config: Protocol configuration.
        :param chain: Sharpness chain, at least i entries.
        :param i: Bob index.
        :return: Fidelity conditioned on Alice keeping the state.
        """
        kept, rejected = CascadeProtocol._fidelity_parts(config, chain, i)
        if 1 - rejected < MIN_PROBABILITY:
            raise UndefinedConditionalStateError("Alice never keeps the state of Bob {}.".format(i))
        return kept / (1 - rejected)

    @staticmethod
    def correction(config: ProtocolConfig, outcome: Outcome) -> Union[np.ndarray, Rejection]:
        """
        Alice's operation for an outcome of the last Bob.

        For the complementary target the roles of the outcomes are swapped.

        :param config: Protocol configuration.
        :param outcome: Outcome communicated by the Bob.
        :return: 2x2 unitary, or REJECT.
        """
        rule = outcome if config.target is Target.PSI else outcome.opposite()
        return StateFactory.correction_unitary(config.family.frame, rule, config.theta)

    @staticmethod
    def numeric_average_fidelity(
        config: ProtocolConfig, chain: Sequence[float], i: int, nodes: Optional[int] = None
    ) -> float:
        """
        Average fidelity after Bob i from explicit states, effects and corrections.

        :param config: Protocol configuration.
        :param chain: Sharpness chain, at least i entries.
        :param i: Bob index.
        :param nodes: Quadrature nodes per azimuthal average.
        :return: Average fidelity.
        """
        chain = CascadeProtocol._checked(chain, i, own=True)
        nodes = Config.quad_nodes() if nodes is None else nodes
        rho = CascadeProtocol.shared_state(config, chain, i, nodes)

        phis = 2 * math.pi * np.arange(nodes) / nodes
        targets = StateFactory.pure_states(config.theta, phis, complement=config.target is Target.PSI_PERP)
        roots = dict(zip((Outcome.UP, Outcome.DOWN), Measurement.sqrt_effects(chain[i - 1], config.theta, phis)))

        total = np.zeros(nodes)
        for outcome, root in roots.items():
            kraus = LinAlg.kron_identity_batch(root)
            alice = LinAlg.partial_trace_second(np.einsum("nij,jk,nkl->nil", kraus, rho, kraus))
            correction = CascadeProtocol.correction(config, outcome)
            if correction is REJECT:
                probability = np.trace(alice, axis1=1, axis2=2).real
                total += ClassicalBaseline.classical_bound(config.theta) * probability
            else:
                corrected = correction @ alice @ correction.conj().T
                total += np.einsum("ni,nij,nj->n", targets.conj(), corrected, targets).real
        logger.debug("Numeric fidelity of Bob %d for %s over %d nodes.", i, config.describe(), nodes)
        return float(total.mean())
