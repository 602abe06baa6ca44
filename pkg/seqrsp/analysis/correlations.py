"""Quantum resources left in the shared state: geometric discord and concurrence."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np

from seqrsp.analysis.solver import SharpnessSolver
from seqrsp.protocol.cascade import CascadeProtocol, ProtocolConfig, SharpnessChain
from seqrsp.protocol.states import BellDiagonalCoeffs, CorrelationProfile, Singlet, StateFactory, StateInspector
from seqrsp.util.exceptions import ProtocolError, ValidationError
from seqrsp.util.linalg import SIGMA_Y, LinAlg

logger = logging.getLogger(__name__)

MAX_RESOURCE_INDEX = 8
BELL_DIAGONAL_TOL = 1e-12

SINGLET_EQUATOR = ProtocolConfig(Singlet())


class Measure(Enum):
    """Resource measures available."""

    DISCORD = "discord"
    CONCURRENCE = "concurrence"


@dataclass(frozen=True)
class ResourceReport:
    """Largest amount of resource Bob i can still find in his shared state."""

    bob_index: int
    measure: Measure
    max_discord: float
    max_concurrence: float
    achieving_chain: SharpnessChain
    feasible: bool = True
    own_sharpness: float = math.nan
    discord_after: float = math.nan
    concurrence_after: float = math.nan

    @property
    def value(self) -> float:
        """Value of the requested measure."""
        return self.max_discord if self.measure is Measure.DISCORD else self.max_concurrence

    def to_dict(self) -> Dict[str, Any]:
        """Plain representation used in output records."""
        return {
            "bob": self.bob_index,
            "measure": self.measure.value,
            "max_discord": self.max_discord,
            "max_concurrence": self.max_concurrence,
            "chain": list(self.achieving_chain),
            "feasible": self.feasible,
            "own_lambda": self.own_sharpness,
            "discord_after": self.discord_after,
            "concurrence_after": self.concurrence_after,
        }


class ResourceMeasures:
    """Utility class computing discord and concurrence of shared states."""

    @staticmethod
    def geometric_discord(c: Union[BellDiagonalCoeffs, Sequence[float]]) -> float:
        """
        Geometric discord of a Bell-diagonal state.

        :param c: Coefficients (c1, c2, c3).
        :return: (c1^2 + c2^2 + c3^2 - max c_j^2) / 2.
        """
        values = np.square(c.as_tuple() if isinstance(c, BellDiagonalCoeffs) else np.asarray(c, dtype=float))
        return float((values.sum() - values.max()) / 2)

    @staticmethod
    def geometric_discord_of_state(rho: np.ndarray) -> float:
        """
        Geometric discord of a two-qubit state with respect to measurements on Bob's side.

        :param rho: 4x4 density matrix.
        :return: (|b|^2 + |T|^2 - k_max) / 2 with k_max the largest eigenvalue of b b^T + T^T T.
        """
        correlations = StateInspector.correlation_matrix(rho)
        _, bob = StateInspector.local_bloch_vectors(rho)
        matrix = np.outer(bob, bob) + correlations.T @ correlations
        k_max = float(np.linalg.eigvalsh(matrix)[-1])
        return max(0.0, float(bob @ bob + np.sum(correlations**2) - k_max) / 2)

    @staticmethod
    def discord_of_profile(profile: CorrelationProfile) -> float:
        """
        Geometric discord of a state given by its Bloch data.

        :param profile: Bloch data with a diagonal correlation matrix.
        :return: The discord; frame rotations on Alice's side leave it unchanged.
        """
        squares = np.array([profile.t_x**2, profile.t_y**2, profile.t_z**2 + profile.bob_z**2])
        return max(0.0, float(squares.sum() - squares.max()) / 2)

    @staticmethod
    def wootters_concurrence(rho: np.ndarray) -> float:
        """
        Concurrence from the spectrum of rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y).

        :param rho: 4x4 density matrix.
        :return: Concurrence in [0, 1].
        """
        LinAlg.check_shape(rho, (4,))
        flip = np.kron(SIGMA_Y, SIGMA_Y)
        spectrum = np.linalg.eigvals(rho @ flip @ rho.conj() @ flip).real
        roots = np.sort(np.sqrt(np.clip(spectrum, 0.0, None)))[::-1]
        return max(0.0, float(roots[0] - roots[1:].sum()))

    @staticmethod
    def concurrence(rho: np.ndarray) -> float:
        """
        Concurrence of a two-qubit state.

        Bell-diagonal states use max(0, 2 tau - 1) with tau their largest eigenvalue.

        :param rho: 4x4 density matrix.
        :return: Concurrence in [0, 1].
        """
        alice, bob = StateInspector.local_bloch_vectors(rho)
        correlations = StateInspector.correlation_matrix(rho)
        off_diagonal = correlations - np.diag(np.diag(correlations))
        if max(np.abs(alice).max(), np.abs(bob).max(), np.abs(off_diagonal).max()) < BELL_DIAGONAL_TOL:
            tau = float(LinAlg.eigvals_hermitian(rho)[-1])
            return max(0.0, 2 * tau - 1)
        return ResourceMeasures.wootters_concurrence(rho)

    @staticmethod
    def tau(chain: Sequence[float], i: int) -> float:
        """
        Largest eigenvalue of the state Bob i shares with Alice, singlet on the equator.

        :param chain: Sharpness chain, at least i - 1 entries.
        :param i: Bob index.
        :return: (1 + prod s_k + prod (1 + s_k) / 2^(i-2)) / 4 with s_k = sqrt(1 - lambda_k^2).
        """
        if i < 1:
            raise ValidationError("Bob index must be at least 1, got {}.".format(i), "i")
        chain = CascadeProtocol.check_chain(chain)
        if len(chain) < i - 1:
            raise ProtocolError("Bob {} needs {} sharpness values, the chain has {}.".format(i, i - 1, len(chain)))
        roots = np.sqrt(1 - np.square(np.asarray(chain[: i - 1], dtype=float)))
        return float((1 + np.prod(roots) + np.prod(1 + roots) / 2 ** (i - 2)) / 4)

    @staticmethod
    def resources_at(config: ProtocolConfig, chain: Sequence[float], i: int) -> Tuple[float, float]:
        """
        Discord and concurrence of the state Bob i shares with Alice.

        :param config: Protocol configuration.
        :param chain: Sharpness chain, at least i - 1 entries.
        :param i: Bob index.
        :return: Discord and concurrence.
        """
        profile = CascadeProtocol.profile(config, chain, i)
        rho = StateFactory.from_profile(profile, config.family.frame)
        return ResourceMeasures.discord_of_profile(profile), ResourceMeasures.concurrence(rho)

    @staticmethod
    def max_remaining_resource(
        i: int, measure: Measure = Measure.DISCORD, config: ProtocolConfig = SINGLET_EQUATOR
    ) -> ResourceReport:
        """
        Largest resource Bob i can find when every predecessor beat the classical bound.

        Both measures decrease with every predecessor's sharpness, so the infimum chain attains the
        supremum over the closure of the feasible region.

        The report also gives what is left once Bob i has measured with the least sharpness he can be
        assigned: his own requirement when it is below 1, otherwise that of his predecessor, since the
        requirements grow along the chain. A first Bob who cannot beat the bound measures sharply.

        :param i: Bob index, 1 to 8.
        :param measure: Measure of interest.
        :param config: Protocol configuration.
        :return: The report; feasible is False when some predecessor cannot beat the bound at all.
        """
        if not 1 <= i <= MAX_RESOURCE_INDEX:
            raise ValidationError("Bob index must lie in [1, {}], got {}.".format(MAX_RESOURCE_INDEX, i), "i")
        result = SharpnessSolver.min_chain(config, max_i=i)
        if result.n_max < i - 1:
            logger.info("Bob %d is out of reach: %s", i, result.lambda_mins)
            return ResourceReport(i, measure, math.nan, math.nan, result.lambda_mins, feasible=False)

        chain = result.lambda_mins[: i - 1]
        if result.n_max >= i:
            own = result.lambda_mins[i - 1]
        else:
            own = chain[-1] if chain else 1.0
        discord, concurrence = ResourceMeasures.resources_at(config, chain, i)
        discord_after, concurrence_after = ResourceMeasures.resources_at(config, chain + (own,), i + 1)
        logger.debug("Bob %d at sharpness %.6f leaves discord %.6f", i, own, discord_after)
        return ResourceReport(i, measure, discord, concurrence, chain, True, own, discord_after, concurrence_after)

    @staticmethod
    def grid_search_resource(
        i: int, measure: Measure = Measure.DISCORD, points: int = 5, config: ProtocolConfig = SINGLET_EQUATOR
    ) -> Tuple[float, SharpnessChain]:
        """
        Search the closure of the feasible chains of Bob i's predecessors on a grid.

        Each predecessor k takes points values between his minimum sharpness given the earlier grid
        values and 1; branches in which some predecessor cannot beat the bound are dropped.

        :param i: Bob index.
        :param measure: Measure to maximise.
        :param points: Grid values per predecessor.
        :param config: Protocol configuration.
        :return: Best value and the chain reaching it.
        """
        if points < 2:
            raise ValidationError("At least 2 grid points are needed, got {}.".format(points), "points")
        best: List[Any] = [-math.inf, ()]

        def visit(prefix: SharpnessChain):
            if len(prefix) == i - 1:
                value = ResourceMeasures.resources_at(config, prefix, i)[0 if measure is Measure.DISCORD else 1]
                if value > best[0]:
                    best[0], best[1] = value, prefix
                return
            lower = SharpnessSolver.lambda_min(config, len(prefix) + 1, prefix)
            if lower >= 1.0:
                return
            for lam in np.linspace(lower, 1.0, points):
                visit(prefix + (float(lam),))

        visit(())
        logger.debug("Grid search for Bob %d found %s at %s", i, best[0], best[1])
        return best[0], best[1]
