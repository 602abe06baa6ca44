"""Unsharp two-outcome measurements on Bob's qubit and the channels they induce."""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from seqrsp.protocol.states import BlochCircleState, Outcome
from seqrsp.util.config import Config
from seqrsp.util.exceptions import UndefinedConditionalStateError, ValidationError
from seqrsp.util.linalg import IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z, LinAlg

logger = logging.getLogger(__name__)

MIN_PROBABILITY = 1e-14


def check_sharpness(lam: float, field: str = "lambda", index: Optional[int] = None) -> float:
    """
    Check a sharpness parameter.

    :param lam: Sharpness.
    :param field: Parameter name used in the error.
    :param index: Position of the value in a chain, if any.
    :return: The sharpness as float.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValidationError("Sharpness must lie in [0, 1], got {}.".format(lam), field, index)
    return float(lam)


@dataclass(frozen=True)
class UnsharpEffect:
    """Effect E = (1 + sign * lambda n.sigma) / 2 along the Bloch vector n of basis."""

    lam: float
    basis: BlochCircleState
    sign: Outcome

    def __post_init__(self):
        check_sharpness(self.lam)


class Measurement:
    """Utility class for unsharp measurements acting on the second qubit."""

    @staticmethod
    def _n_sigma(theta: float, phis: np.ndarray) -> np.ndarray:
        """Stack of n.sigma for the directions (theta, phi)."""
        phis = np.asarray(phis, dtype=float)
        return (
            np.multiply.outer(math.sin(theta) * np.cos(phis), SIGMA_X)
            + np.multiply.outer(math.sin(theta) * np.sin(phis), SIGMA_Y)
            + np.multiply.outer(np.full(phis.shape, math.cos(theta)), SIGMA_Z)
        )

    @staticmethod
    def effect(e: UnsharpEffect) -> np.ndarray:
        """
        Effect operator lambda P + (1 - lambda) 1/2.

        :param e: The effect.
        :return: 2x2 Hermitian PSD operator.
        """
        n_sigma = Measurement._n_sigma(e.basis.theta, np.array([e.basis.phi]))[0]
        return (IDENTITY_2 + e.sign.value * e.lam * n_sigma) / 2

    @staticmethod
    def sqrt_effect(e: UnsharpEffect) -> np.ndarray:
        """
        Square root of an effect operator, in closed form.

        :param e: The effect.
        :return: 2x2 Hermitian PSD operator.
        """
        plus, minus = Measurement.sqrt_effects(e.lam, e.basis.theta, np.array([e.basis.phi]))
        return plus[0] if e.sign is Outcome.UP else minus[0]

    @staticmethod
    def sqrt_effects(lam: float, theta: float, phis: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Square roots of both effects for many azimuths of the measurement direction.

        With P+ and P- the projectors along n and -n, sqrt(E+-) = sqrt((1 +- lambda)/2) P+ + sqrt((1 -+ lambda)/2) P-.

        :param lam: Sharpness.
        :param theta: Polar angle of the direction.
        :param phis: Azimuths, shape (n,).
        :return: Stacks of sqrt(E+) and sqrt(E-), each of shape (n, 2, 2).
        """
        check_sharpness(lam)
        n_sigma = Measurement._n_sigma(theta, phis)
        p_plus = (IDENTITY_2 + n_sigma) / 2
        p_minus = (IDENTITY_2 - n_sigma) / 2
        strong = math.sqrt((1 + lam) / 2)
        weak = math.sqrt((1 - lam) / 2)
        return strong * p_plus + weak * p_minus, weak * p_plus + strong * p_minus

    @staticmethod
    def selective_update(rho: np.ndarray, e: UnsharpEffect) -> Tuple[np.ndarray, float]:
        """
        Lueders update of a two-qubit state after Bob obtains an outcome.

        :param rho: 4x4 density matrix.
        :param e: Effect of the obtained outcome.
        :return: The normalised post-measurement state and the outcome probability.
        """
        LinAlg.check_shape(rho, (4,))
        LinAlg.check_density_matrix(rho)
        kraus = LinAlg.kron(IDENTITY_2, Measurement.sqrt_effect(e))
        updated = kraus @ rho @ kraus
        probability = float(np.trace(updated).real)
        if probability < MIN_PROBABILITY:
            raise UndefinedConditionalStateError(
                "Outcome {} has probability {:.3e}.".format(e.sign.name.lower(), probability)
            )
        return updated / probability, probability

    @staticmethod
    def conditional_state(rho: np.ndarray, e: UnsharpEffect) -> Tuple[np.ndarray, float]:
        """
        Alice's normalised state conditioned on Bob's outcome.

        :param rho: 4x4 density matrix.
        :param e: Effect of the obtained outcome.
        :return: Alice's 2x2 state and the outcome probability.
        """
        updated, probability = Measurement.selective_update(rho, e)
        return LinAlg.partial_trace_second(updated), probability

    @staticmethod
    def phi_averaged_channel(rho: np.ndarray, lam: float, theta: float, nodes: Optional[int] = None) -> np.ndarray:
        """
        Non-selective Lueders channel averaged over the azimuth of Bob's measurement direction.

        :param rho: 4x4 density matrix.
        :param lam: Sharpness.
        :param theta: Polar angle of the measured circle.
        :param nodes: Number of trapezoid nodes; taken from the configuration when omitted.
        :return: 4x4 density matrix.
        """
        nodes = Config.quad_nodes() if nodes is None else nodes
        if nodes < 16:
            raise ValidationError("At least 16 quadrature nodes are needed, got {}.".format(nodes), "nodes")
        LinAlg.check_shape(rho, (4,))

        phis = 2 * math.pi * np.arange(nodes) / nodes
        result = np.zeros((4, 4), dtype=complex)
        for roots in Measurement.sqrt_effects(lam, theta, phis):
            kraus = LinAlg.kron_identity_batch(roots)
            result = result + np.einsum("nij,jk,nkl->il", kraus, rho, kraus)
        logger.debug("Averaged channel with lambda=%s, theta=%s over %d nodes.", lam, theta, nodes)
        return result / nodes

    @staticmethod
    def bob_side_damping(lam: float, theta: float) -> np.ndarray:
        """
        Factors by which the averaged channel scales Bob's x, y and z Pauli components.

        :param lam: Sharpness.
        :param theta: Polar angle of the measured circle.
        :return: Array (d_perp, d_perp, d_z).
        """
        s = math.sqrt(1 - check_sharpness(lam) ** 2)
        d_perp = s + (1 - s) * math.sin(theta) ** 2 / 2
        d_z = s + (1 - s) * math.cos(theta) ** 2
        return np.array([d_perp, d_perp, d_z])
