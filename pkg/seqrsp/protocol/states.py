"""Initial state families, pure states on a Bloch-sphere circle and correlation extraction."""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

import numpy as np

from seqrsp.util.exceptions import PSDViolationError, ValidationError
from seqrsp.util.linalg import IDENTITY_2, PAULIS, SIGMA_X, SIGMA_Y, SIGMA_Z, LinAlg

CIRCLE_TOL = 1e-12


class BellKind(Enum):
    """The four Bell states, named as on the command line."""

    PSI_MINUS = "psi-"
    PSI_PLUS = "psi+"
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"


class Outcome(Enum):
    """Outcome of a two-outcome measurement on Bob's side."""

    UP = 1
    DOWN = -1

    def opposite(self) -> "Outcome":
        """The other outcome."""
        return Outcome.DOWN if self is Outcome.UP else Outcome.UP


class Circle(Enum):
    """Regimes of the circle of latitude the target states are drawn from."""

    EQUATOR = "equator"
    POLE = "pole"
    GENERAL = "general"

    @staticmethod
    def classify(theta: float) -> "Circle":
        """
        Classify a polar angle.

        :param theta: Polar angle in radians.
        :return: The regime the angle belongs to.
        """
        if abs(theta - math.pi / 2) < CIRCLE_TOL:
            return Circle.EQUATOR
        if theta < CIRCLE_TOL or math.pi - theta < CIRCLE_TOL:
            return Circle.POLE
        return Circle.GENERAL


class Rejection:
    """Marker returned in place of a unitary when Alice discards the branch."""

    # pylint: disable=too-few-public-methods

    def __repr__(self):
        return "REJECT"


REJECT = Rejection()


def check_theta(theta: float, field: str = "theta") -> float:
    """
    Check a polar angle.

    :param theta: Angle in radians.
    :param field: Parameter name used in the error.
    :return: The angle as float.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValidationError("{} must lie in [0, pi], got {}.".format(field, theta), field)
    return float(theta)


@dataclass(frozen=True)
class BlochCircleState:
    """Pure qubit state with polar angle theta and azimuth phi."""

    theta: float
    phi: float

    def __post_init__(self):
        check_theta(self.theta)
        if not 0.0 <= self.phi <= 2 * math.pi:
            raise ValidationError("phi must lie in [0, 2 pi], got {}.".format(self.phi), "phi")


@dataclass(frozen=True)
class CorrelationProfile:
    """
    Bloch data of a two-qubit state whose correlation matrix is diagonal.

    alice_z and bob_z are the z components of the local Bloch vectors, t_x, t_y and t_z the diagonal
    of the correlation matrix. The values are expressed in the singlet frame, i.e. after Alice's
    frame unitary; frame_signs turn the diagonal into the lab-frame coefficients.
    """

    alice_z: float
    bob_z: float
    t_x: float
    t_y: float
    t_z: float
    frame_signs: Tuple[int, int, int] = (1, 1, 1)

    @property
    def t_perp(self) -> float:
        """Mean of the two transverse correlations."""
        return (self.t_x + self.t_y) / 2

    def damped(self, factors: np.ndarray) -> "CorrelationProfile":
        """
        Apply a channel on Bob's side which scales his Pauli components.

        :param factors: Scaling of Bob's x, y and z components.
        :return: The profile after the channel.
        """
        return CorrelationProfile(
            alice_z=self.alice_z,
            bob_z=self.bob_z * float(factors[2]),
            t_x=self.t_x * float(factors[0]),
            t_y=self.t_y * float(factors[1]),
            t_z=self.t_z * float(factors[2]),
            frame_signs=self.frame_signs,
        )

    def lab_coefficients(self) -> Tuple[float, float, float]:
        """Diagonal of the correlation matrix in the lab frame."""
        signs = self.frame_signs
        return (signs[0] * self.t_x, signs[1] * self.t_y, signs[2] * self.t_z)


@dataclass(frozen=True)
class BellDiagonalCoeffs:
    """Coefficients c1, c2, c3 of a Bell-diagonal state."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for index, value in enumerate(self.as_tuple()):
            if not -1.0 <= value <= 1.0:
                message = "Coefficient c{} must lie in [-1, 1], got {}.".format(index + 1, value)
                raise ValidationError(message, "c", index)
        if min(self.weights()) < -1e-12:
            raise PSDViolationError("Coefficients {} do not describe a positive state.".format(self.as_tuple()))

    def as_tuple(self) -> Tuple[float, float, float]:
        """The coefficients as a tuple."""
        return (self.c1, self.c2, self.c3)

    def weights(self) -> Tuple[float, float, float, float]:
        """
        Eigenvalues of the state, i.e. its weights on psi-, phi-, phi+ and psi+.

        :return: The four weights in that order.
        """
        c1, c2, c3 = self.as_tuple()
        return (
            (1 - c1 - c2 - c3) / 4,
            (1 - c1 + c2 + c3) / 4,
            (1 + c1 - c2 + c3) / 4,
            (1 + c1 + c2 - c3) / 4,
        )


# Lab-frame correlation diagonal of each Bell state. The singlet frame has (-1, -1, -1).
_BELL_CORRELATIONS = {
    BellKind.PSI_MINUS: (-1, -1, -1),
    BellKind.PSI_PLUS: (1, 1, -1),
    BellKind.PHI_PLUS: (1, -1, 1),
    BellKind.PHI_MINUS: (-1, 1, 1),
}


@dataclass(frozen=True)
class Singlet:
    """The singlet state psi-."""

    @property
    def frame(self) -> BellKind:
        """Bell state whose correction rules apply."""
        return BellKind.PSI_MINUS

    def profile(self) -> CorrelationProfile:
        """Bloch data in the singlet frame."""
        return CorrelationProfile(0.0, 0.0, -1.0, -1.0, -1.0)

    def label(self) -> str:
        """Family in command-line syntax."""
        return "singlet"


@dataclass(frozen=True)
class NonMaximal:
    """The pure state cos(xi)|01> - sin(xi)|10>."""

    xi: float

    def __post_init__(self):
        if not 0.0 <= self.xi <= math.pi / 2:
            raise ValidationError("xi must lie in [0, pi/2], got {}.".format(self.xi), "xi")

    @property
    def frame(self) -> BellKind:
        """Bell state whose correction rules apply."""
        return BellKind.PSI_MINUS

    def profile(self) -> CorrelationProfile:
        """Bloch data in the singlet frame."""
        cos_2xi = math.cos(2 * self.xi)
        sin_2xi = math.sin(2 * self.xi)
        return CorrelationProfile(cos_2xi, -cos_2xi, -sin_2xi, -sin_2xi, -1.0)

    def label(self) -> str:
        """Family in command-line syntax."""
        return "nonmax:{!r}".format(self.xi)


@dataclass(frozen=True)
class Werner:
    """The Werner state c |psi-><psi-| + (1 - c) 1/4."""

    c: float

    def __post_init__(self):
        if not 0.0 <= self.c <= 1.0:
            raise ValidationError("c must lie in [0, 1], got {}.".format(self.c), "c")

    @property
    def frame(self) -> BellKind:
        """Bell state whose correction rules apply."""
        return BellKind.PSI_MINUS

    def profile(self) -> CorrelationProfile:
        """Bloch data in the singlet frame."""
        return CorrelationProfile(0.0, 0.0, -self.c, -self.c, -self.c)

    def label(self) -> str:
        """Family in command-line syntax."""
        return "werner:{!r}".format(self.c)


@dataclass(frozen=True)
class BellDiagonal:
    """A Bell-diagonal state, corrected with the singlet rules."""

    coeffs: BellDiagonalCoeffs

    @property
    def frame(self) -> BellKind:
        """Bell state whose correction rules apply."""
        return BellKind.PSI_MINUS

    def profile(self) -> CorrelationProfile:
        """Bloch data in the singlet frame."""
        return CorrelationProfile(0.0, 0.0, *self.coeffs.as_tuple())

    def label(self) -> str:
        """Family in command-line syntax."""
        return "bd:{!r},{!r},{!r}".format(*self.coeffs.as_tuple())


@dataclass(frozen=True)
class BellState:
    """One of the four Bell states, corrected with its own frame unitary."""

    kind: BellKind

    @property
    def frame(self) -> BellKind:
        """Bell state whose correction rules apply."""
        return self.kind

    def profile(self) -> CorrelationProfile:
        """Bloch data in the singlet frame."""
        signs = tuple(-value for value in _BELL_CORRELATIONS[self.kind])
        return CorrelationProfile(0.0, 0.0, -1.0, -1.0, -1.0, frame_signs=signs)

    def label(self) -> str:
        """Family in command-line syntax."""
        return "bell:{}".format(self.kind.value)


InitialFamily = Union[Singlet, NonMaximal, Werner, BellDiagonal, BellState]


class StateFactory:
    """Utility class constructing pure states, initial states and Alice's unitaries."""

    @staticmethod
    def bloch_vector(theta: float, phi: float) -> np.ndarray:
        """
        Bloch vector of the pure state with polar angle theta and azimuth phi.

        :param theta: Polar angle in radians.
        :param phi: Azimuth in radians.
        :return: Unit vector (x, y, z).
        """
        return np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)])

    @staticmethod
    def pure_state(s: BlochCircleState, complement: bool = False) -> np.ndarray:
        """
        State vector of a point on the Bloch sphere or of its antipode.

        The |0> amplitude is kept real and non-negative.

        :param s: The point on the sphere.
        :param complement: Return the orthogonal state instead.
        :return: Normalised 2-component complex vector.
        """
        return StateFactory.pure_states(s.theta, np.array([s.phi]), complement)[0]

    @staticmethod
    def pure_states(theta: float, phis: np.ndarray, complement: bool = False) -> np.ndarray:
        """
        Batched version of pure_state for one circle and many azimuths.

        :param theta: Polar angle in radians.
        :param phis: Azimuths, shape (n,).
        :param complement: Return the orthogonal states instead.
        :return: Array of shape (n, 2).
        """
        phase = np.exp(1j * np.asarray(phis, dtype=float))
        half = theta / 2
        if complement:
            return np.stack([np.full(phase.shape, math.sin(half), dtype=complex), -phase * math.cos(half)], axis=1)
        return np.stack([np.full(phase.shape, math.cos(half), dtype=complex), phase * math.sin(half)], axis=1)

    @staticmethod
    def bell_state(kind: BellKind) -> np.ndarray:
        """
        Projector onto a Bell state.

        :param kind: Which Bell state.
        :return: 4x4 density matrix.
        """
        vectors = {
            BellKind.PSI_MINUS: [0, 1, -1, 0],
            BellKind.PSI_PLUS: [0, 1, 1, 0],
            BellKind.PHI_PLUS: [1, 0, 0, 1],
            BellKind.PHI_MINUS: [1, 0, 0, -1],
        }
        return LinAlg.projector(np.array(vectors[kind], dtype=complex))

    @staticmethod
    def frame_unitary(kind: BellKind) -> np.ndarray:
        """
        Local unitary on Alice's side which maps a Bell state onto the singlet (up to a phase).

        :param kind: Which Bell state.
        :return: 2x2 unitary.
        """
        return {
            BellKind.PSI_MINUS: IDENTITY_2,
            BellKind.PSI_PLUS: SIGMA_Z,
            BellKind.PHI_PLUS: 1j * SIGMA_Y,
            BellKind.PHI_MINUS: SIGMA_X,
        }[kind]

    @staticmethod
    def correction_unitary(kind: BellKind, outcome: Outcome, theta: float) -> Union[np.ndarray, Rejection]:
        """
        Alice's operation after Bob communicates his outcome.

        On the equator the singlet rule is sigma_z for up and identity for down. At the poles the
        up outcome is corrected with a NOT gate. Elsewhere the down branch is kept as it is and the
        up branch is rejected. The rule is composed with the frame unitary of the Bell state.

        :param kind: Bell state shared initially.
        :param outcome: Outcome communicated by Bob.
        :param theta: Polar angle of the target circle.
        :return: 2x2 unitary, or REJECT.
        """
        frame = StateFactory.frame_unitary(kind)
        if outcome is Outcome.DOWN:
            return frame
        circle = Circle.classify(check_theta(theta))
        if circle is Circle.EQUATOR:
            return SIGMA_Z @ frame
        if circle is Circle.POLE:
            return SIGMA_X @ frame
        return REJECT

    @staticmethod
    def make_initial(family: InitialFamily) -> np.ndarray:
        """
        Density matrix of an initial state family.

        :param family: The family with its parameters.
        :return: 4x4 density matrix.
        """
        if isinstance(family, Singlet):
            return StateFactory.bell_state(BellKind.PSI_MINUS)
        if isinstance(family, BellState):
            return StateFactory.bell_state(family.kind)
        if isinstance(family, NonMaximal):
            return LinAlg.projector(np.array([0, math.cos(family.xi), -math.sin(family.xi), 0], dtype=complex))
        if isinstance(family, Werner):
            return family.c * StateFactory.bell_state(BellKind.PSI_MINUS) + (1 - family.c) * np.eye(4) / 4
        if isinstance(family, BellDiagonal):
            rho = np.eye(4, dtype=complex)
            for coefficient, pauli in zip(family.coeffs.as_tuple(), PAULIS):
                rho = rho + coefficient * np.kron(pauli, pauli)
            return rho / 4
        raise ValidationError("Unknown state family {!r}.".format(family), "family")

    @staticmethod
    def from_profile(profile: CorrelationProfile, frame: BellKind = BellKind.PSI_MINUS) -> np.ndarray:
        """
        Density matrix with the given Bloch data, rotated from the singlet frame into the lab frame.

        :param profile: Bloch data in the singlet frame.
        :param frame: Bell state defining the frame.
        :return: 4x4 density matrix.
        """
        rho = np.eye(4, dtype=complex)
        rho = rho + profile.alice_z * np.kron(SIGMA_Z, IDENTITY_2) + profile.bob_z * np.kron(IDENTITY_2, SIGMA_Z)
        for coefficient, pauli in zip((profile.t_x, profile.t_y, profile.t_z), PAULIS):
            rho = rho + coefficient * np.kron(pauli, pauli)
        rotation = np.kron(StateFactory.frame_unitary(frame).conj().T, IDENTITY_2)
        return rotation @ (rho / 4) @ rotation.conj().T


class StateInspector:
    """Utility class reading Bloch data off density matrices."""

    @staticmethod
    def correlation_matrix(rho: np.ndarray) -> np.ndarray:
        """
        Correlation matrix M_pq = Tr[(sigma_p x sigma_q) rho].

        :param rho: 4x4 density matrix.
        :return: Real 3x3 matrix, rows for Alice and columns for Bob.
        """
        LinAlg.check_shape(rho, (4,))
        return np.array([[np.trace(np.kron(p, q) @ rho).real for q in PAULIS] for p in PAULIS])

    @staticmethod
    def local_bloch_vectors(rho: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Local Bloch vectors of both parties.

        :param rho: 4x4 density matrix.
        :return: Alice's vector and Bob's vector.
        """
        LinAlg.check_shape(rho, (4,))
        alice = np.array([np.trace(np.kron(p, IDENTITY_2) @ rho).real for p in PAULIS])
        bob = np.array([np.trace(np.kron(IDENTITY_2, p) @ rho).real for p in PAULIS])
        return alice, bob

    @staticmethod
    def linear_entropy(rho: np.ndarray) -> float:
        """
        Normalised linear entropy 4/3 (1 - Tr rho^2) of a two-qubit state.

        :param rho: 4x4 density matrix.
        :return: Value in [0, 1].
        """
        LinAlg.check_shape(rho, (4,))
        return float(4 / 3 * (1 - np.trace(rho @ rho).real))
