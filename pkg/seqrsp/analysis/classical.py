"""Fidelity of remote state preparation with one classical bit and no shared quantum resource."""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from seqrsp.protocol.states import StateFactory, check_theta
from seqrsp.util.config import Config
from seqrsp.util.exceptions import ValidationError

logger = logging.getLogger(__name__)

GRID_POINTS = 33


@dataclass(frozen=True)
class ClassicalStrategy:
    """
    Bob measures along (theta_b, phi_b) and sends his outcome; Alice prepares a state on the target circle.

    In case 1 Alice prepares the state with azimuth phi_p2 on the down outcome and its sigma_z rotation on
    the up outcome. In case 2 she prepares azimuth phi_p1 on up and phi_p2 on down.
    """

    theta_b: float
    phi_b: float
    phi_p1: float
    phi_p2: float
    case: int = 2

    def __post_init__(self):
        check_theta(self.theta_b, "theta_b")
        if self.case not in (1, 2):
            raise ValidationError("Strategy case must be 1 or 2, got {}.".format(self.case), "case")

    def prepared_vectors(self, theta: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        Bloch vectors Alice prepares on the up and on the down outcome.

        :param theta: Polar angle of the target circle.
        :return: The two Bloch vectors.
        """
        down = StateFactory.bloch_vector(theta, self.phi_p2)
        if self.case == 1:
            return StateFactory.bloch_vector(theta, self.phi_p2 + math.pi), down
        return StateFactory.bloch_vector(theta, self.phi_p1), down


class ClassicalBaseline:
    """Utility class for the classical fidelity bound and its numerical verification."""

    @staticmethod
    def classical_bound(theta: float) -> float:
        """
        Best average fidelity reachable classically on the circle with polar angle theta.

        :param theta: Polar angle in radians.
        :return: 3/4 + (cos 2 theta + sin^3 theta) / 4.
        """
        check_theta(theta)
        return 0.75 + (math.cos(2 * theta) + math.sin(theta) ** 3) / 4

    @staticmethod
    def classical_fidelity(theta: float, s: ClassicalStrategy) -> float:
        """
        Average fidelity of a classical strategy, in closed form.

        :param theta: Polar angle of the target circle.
        :param s: The strategy.
        :return: Average fidelity.
        """
        check_theta(theta)
        sin3 = math.sin(theta) ** 3 * math.sin(s.theta_b)
        if s.case == 1:
            return 0.75 + (math.cos(2 * theta) - math.cos(s.phi_b - s.phi_p2) * sin3) / 4
        return (
            0.75
            + math.cos(2 * theta) / 4
            + sin3 / 8 * (math.cos(s.phi_b - s.phi_p1) - math.cos(s.phi_b - s.phi_p2))
        )

    @staticmethod
    def integrate_classical_fidelity(
        theta: float, strategy: ClassicalStrategy, nodes: Optional[int] = None, sharpness: float = 1.0
    ) -> float:
        """
        Average fidelity of a classical strategy by quadrature over the target azimuth.

        :param theta: Polar angle of the target circle.
        :param strategy: The strategy.
        :param nodes: Number of trapezoid nodes; taken from the configuration when omitted.
        :param sharpness: Sharpness of Bob's measurement; 1 is projective.
        :return: Average fidelity.
        """
        check_theta(theta)
        nodes = Config.quad_nodes() if nodes is None else nodes
        direction = sharpness * StateFactory.bloch_vector(strategy.theta_b, strategy.phi_b)
        up, down = strategy.prepared_vectors(theta)

        phis = 2 * math.pi * np.arange(nodes) / nodes
        targets = np.stack(
            [math.sin(theta) * np.cos(phis), math.sin(theta) * np.sin(phis), np.full(nodes, math.cos(theta))], axis=1
        )
        p_up = (1 + targets @ direction) / 2
        fidelity = p_up * (1 + targets @ up) / 2 + (1 - p_up) * (1 + targets @ down) / 2
        return float(fidelity.mean())

    @staticmethod
    def no_communication_fidelity(theta: float) -> float:
        """
        Fidelity of a fixed guess on the target circle, without any communication.

        :param theta: Polar angle of the target circle.
        :return: (1 + cos^2 theta) / 2.
        """
        check_theta(theta)
        return (1 + math.cos(theta) ** 2) / 2

    @staticmethod
    def optimize_classical(theta: float) -> Tuple[float, ClassicalStrategy]:
        """
        Maximise the classical fidelity over both strategy cases.

        A coarse grid over theta_b and the two azimuth differences seeds a local refinement.

        :param theta: Polar angle of the target circle.
        :return: Best fidelity and a strategy reaching it.
        """
        check_theta(theta)

        def strategy(x: np.ndarray, case: int) -> ClassicalStrategy:
            theta_b = min(max(float(x[0]), 0.0), math.pi)
            return ClassicalStrategy(theta_b, 0.0, -float(x[1]), -float(x[2]), case)

        def objective(x: np.ndarray, case: int) -> float:
            return -ClassicalBaseline.classical_fidelity(theta, strategy(x, case))

        theta_b, delta_1, delta_2 = np.meshgrid(
            np.linspace(0.0, math.pi, GRID_POINTS),
            np.linspace(0.0, 2 * math.pi, GRID_POINTS),
            np.linspace(0.0, 2 * math.pi, GRID_POINTS),
            indexing="ij",
        )
        sin3 = math.sin(theta) ** 3 * np.sin(theta_b)
        grids = {
            1: 0.75 + (math.cos(2 * theta) - np.cos(delta_2) * sin3) / 4,
            2: 0.75 + math.cos(2 * theta) / 4 + sin3 / 8 * (np.cos(delta_1) - np.cos(delta_2)),
        }

        best_value, best = -math.inf, None
        for case, values in grids.items():
            index = np.unravel_index(np.argmax(values), values.shape)
            start = np.array([theta_b[index], delta_1[index], delta_2[index]])
            result = minimize(
                objective,
                start,
                args=(case,),
                method="L-BFGS-B",
                bounds=[(0.0, math.pi), (-math.pi, 3 * math.pi), (-math.pi, 3 * math.pi)],
                options={"ftol": 1e-14, "gtol": 1e-10},
            )
            value = -float(result.fun)
            logger.debug("Classical optimum for case %d at theta=%s: %.12f", case, theta, value)
            if value > best_value:
                best_value, best = value, strategy(result.x, case)
        return best_value, best
