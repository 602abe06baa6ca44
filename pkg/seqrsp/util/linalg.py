"""Utility module for dense complex linear algebra on one- and two-qubit operators."""
import numpy as np

from seqrsp.util.exceptions import DimensionError, NotHermitianError, PSDViolationError

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class LinAlg:
    """
    Utility class for 2x2 and 4x4 complex matrices.

    Two-qubit operators use the basis |00>, |01>, |10>, |11> with Alice as the first factor and
    Bob as the second one, so the row index of a tensor product is 2 * i_alice + i_bob.
    """

    @staticmethod
    def check_shape(m: np.ndarray, dims=(2, 4)) -> int:
        """
        Check that a matrix is square with an allowed dimension.

        :param m: Matrix to check.
        :param dims: Allowed dimensions.
        :return: The dimension of the matrix.
        """
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in dims:
            raise DimensionError("Expected a square matrix of dimension {}, got shape {}.".format(dims, m.shape))
        return m.shape[0]

    @staticmethod
    def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
        """
        Evaluate whether a matrix is Hermitian.

        :param m: Matrix to check.
        :param tol: Elementwise tolerance.
        :return: True when m equals its conjugate transpose within tol.
        """
        return bool(np.allclose(m, m.conj().T, rtol=0.0, atol=tol))

    @staticmethod
    def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """
        Tensor product of two single-qubit operators.

        :param a: 2x2 operator on Alice's qubit.
        :param b: 2x2 operator on Bob's qubit.
        :return: 4x4 operator a (x) b.
        """
        LinAlg.check_shape(a, (2,))
        LinAlg.check_shape(b, (2,))
        return np.kron(a, b)

    @staticmethod
    def kron_identity_batch(b: np.ndarray) -> np.ndarray:
        """
        Tensor products 1 (x) b for a stack of single-qubit operators.

        :param b: Array of shape (n, 2, 2).
        :return: Array of shape (n, 4, 4).
        """
        if b.ndim != 3 or b.shape[1:] != (2, 2):
            raise DimensionError("Expected a stack of 2x2 matrices, got shape {}.".format(b.shape))
        return np.einsum("ij,nkl->nikjl", IDENTITY_2, b).reshape(b.shape[0], 4, 4)

    @staticmethod
    def partial_trace_second(rho: np.ndarray) -> np.ndarray:
        """
        Trace out the second (Bob's) qubit.

        :param rho: 4x4 operator, or a stack of them with shape (n, 4, 4).
        :return: 2x2 operator on Alice's qubit (or the corresponding stack).
        """
        if rho.ndim == 2:
            LinAlg.check_shape(rho, (4,))
            return np.einsum("ijkj->ik", rho.reshape(2, 2, 2, 2))
        if rho.ndim != 3 or rho.shape[1:] != (4, 4):
            raise DimensionError("Expected a 4x4 operator, got shape {}.".format(rho.shape))
        return np.einsum("nijkj->nik", rho.reshape(rho.shape[0], 2, 2, 2, 2))

    @staticmethod
    def eigvals_hermitian(m: np.ndarray) -> np.ndarray:
        """
        Eigenvalues of a Hermitian matrix.

        :param m: Hermitian matrix.
        :return: Real eigenvalues in ascending order.
        """
        LinAlg.check_shape(m)
        if not LinAlg.is_hermitian(m):
            raise NotHermitianError("Eigenvalues requested for a non-Hermitian matrix.")
        return np.linalg.eigvalsh(m)

    @staticmethod
    def sqrt_psd(m: np.ndarray) -> np.ndarray:
        """
        Principal square root of a positive semi-definite matrix.

        :param m: Hermitian PSD matrix.
        :return: Hermitian PSD matrix r with r @ r == m.
        """
        LinAlg.check_shape(m)
        if not LinAlg.is_hermitian(m):
            raise NotHermitianError("Square root requested for a non-Hermitian matrix.")
        values, vectors = np.linalg.eigh(m)
        if values[0] < -PSD_TOL:
            raise PSDViolationError("Matrix has eigenvalue {:.3e} below {}.".format(values[0], -PSD_TOL))
        # Eigenvalues within the tolerance below zero are rounding noise.
        roots = np.sqrt(np.clip(values, 0.0, None))
        return (vectors * roots) @ vectors.conj().T

    @staticmethod
    def check_density_matrix(rho: np.ndarray) -> None:
        """
        Check that a matrix is a valid density matrix: Hermitian, PSD and of unit trace.

        :param rho: Matrix to check.
        """
        LinAlg.check_shape(rho)
        if not LinAlg.is_hermitian(rho):
            raise NotHermitianError("Density matrix is not Hermitian.")
        if abs(np.trace(rho) - 1.0) > PSD_TOL:
            raise PSDViolationError("Density matrix has trace {:.12f}.".format(np.trace(rho).real))
        if np.linalg.eigvalsh(rho)[0] < -PSD_TOL:
            raise PSDViolationError("Density matrix has a negative eigenvalue.")

    @staticmethod
    def projector(vector: np.ndarray) -> np.ndarray:
        """
        Projector onto a (not necessarily normalised) pure state.

        :param vector: State vector.
        :return: |v><v| / <v|v>.
        """
        return np.outer(vector, vector.conj()) / np.vdot(vector, vector).real
