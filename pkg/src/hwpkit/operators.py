"""Dense operators on H(d) in the centered position basis.

Row/column ``i`` corresponds to the position state ``|X; i - (d-1)/2>``.
Displacement-type operators are assembled column by column from their
closed-form action on basis kets, so every entry is a single exact root
of unity regardless of how large the displacement is.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

from .ring import check_dim, centered, omega_table

__all__ = [
    "NotUnitaryError", "NotDensityMatrixError", "TOL",
    "position_ket", "momentum_ket", "fourier", "clock_z", "shift_x",
    "position_op", "momentum_op", "displacement", "parity", "parity_projectors",
    "parity_expectation", "displaced_parity", "dp_operator", "dp_action",
    "dp_action_momentum",
    "principal_log_hamiltonian", "is_unitary", "is_hermitian", "max_abs_diff",
]

TOL = 1e-10


class NotUnitaryError(ValueError):
    pass


class NotDensityMatrixError(ValueError):
    pass


def max_abs_diff(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def is_unitary(U, tol: float = TOL) -> bool:
    U = np.asarray(U)
    return max_abs_diff(U.conj().T @ U, np.eye(U.shape[0])) <= tol


def is_hermitian(A, tol: float = TOL) -> bool:
    A = np.asarray(A)
    return max_abs_diff(A, A.conj().T) <= tol


def _idx(j: int, d: int) -> int:
    return (j + (d - 1) // 2) % d


def position_ket(d: int, j: int) -> np.ndarray:
    d = check_dim(d)
    v = np.zeros(d, dtype=complex)
    v[_idx(j, d)] = 1.0
    return v


def momentum_ket(d: int, j: int) -> np.ndarray:
    """``|P; j> = F |X; j>``."""
    return fourier(d) @ position_ket(d, j)


def fourier(d: int) -> np.ndarray:
    d = check_dim(d)
    w = omega_table(d)
    j = np.array([centered(i - (d - 1) // 2, d) for i in range(d)])
    return w[np.outer(j, j) % d] / np.sqrt(d)


def clock_z(d: int, alpha: int = 1) -> np.ndarray:
    """``Z**alpha = sum_j omega(alpha*j) |X;j><X;j|``."""
    d = check_dim(d)
    w = omega_table(d)
    j = np.arange(d) - (d - 1) // 2
    return np.diag(w[(int(alpha) * j) % d])


def shift_x(d: int, beta: int = 1) -> np.ndarray:
    """``X**beta |X;j> = |X;j+beta>``."""
    d = check_dim(d)
    return np.roll(np.eye(d, dtype=complex), int(beta), axis=0)


def position_op(d: int) -> np.ndarray:
    d = check_dim(d)
    return np.diag(np.arange(d) - (d - 1) // 2).astype(complex)


def momentum_op(d: int) -> np.ndarray:
    F = fourier(d)
    return F @ position_op(d) @ F.conj().T


def dp_action(d: int, alpha: int, beta: int, gamma: int, nu: int, j: int) -> tuple[int, int]:
    """Closed-form action of the displacement-parity operator on ``|X;j>``.

    Returns ``(phase_exponent, target)`` meaning
    ``D(alpha, beta, gamma, nu)|X;j> = omega(phase_exponent)|X;target>``,
    both reduced mod d.
    """
    h = (d + 1) // 2
    s = -1 if nu % 2 else 1
    phase = (h * alpha * beta + s * alpha * j + gamma) % d
    return phase, (s * j + beta) % d


def dp_action_momentum(d: int, alpha: int, beta: int, gamma: int, nu: int, j: int) -> tuple[int, int]:
    """Same as :func:`dp_action` for the momentum ket ``|P;j>``."""
    h = (d + 1) // 2
    s = -1 if nu % 2 else 1
    phase = (-h * alpha * beta - s * beta * j + gamma) % d
    return phase, (s * j + alpha) % d


def dp_operator(d: int, alpha: int, beta: int, gamma: int = 0, nu: int = 0) -> np.ndarray:
    """The displacement-parity operator ``D(alpha, beta, gamma) P**nu``."""
    d = check_dim(d)
    alpha, beta, gamma, nu = int(alpha), int(beta), int(gamma), int(nu) % 2
    w = omega_table(d)
    M = np.zeros((d, d), dtype=complex)
    for col in range(d):
        j = col - (d - 1) // 2
        phase, target = dp_action(d, alpha, beta, gamma, nu, j)
        M[_idx(target, d), col] = w[phase]
    return M


def displacement(d: int, alpha: int, beta: int, gamma: int = 0) -> np.ndarray:
    """``D(alpha, beta, gamma) = Z**alpha X**beta omega(gamma - alpha*beta/2)``."""
    return dp_operator(d, alpha, beta, gamma, 0)


def parity(d: int) -> np.ndarray:
    """``P = F**2``, sending ``|X;j>`` to ``|X;-j>``."""
    return dp_operator(d, 0, 0, 0, 1)


def parity_projectors(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Projectors onto the +1 and -1 eigenspaces of the parity operator."""
    P = parity(d)
    one = np.eye(P.shape[0], dtype=complex)
    return (one + P) / 2, (one - P) / 2


def displaced_parity(d: int, alpha: int, beta: int) -> np.ndarray:
    """Parity about the phase-space point ``(alpha, beta)``: ``D(2a, 2b, 0) P``."""
    return dp_operator(d, 2 * int(alpha), 2 * int(beta), 0, 1)


def parity_expectation(rho, tol: float = TOL) -> float:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotDensityMatrixError("density matrix must be square")
    d = check_dim(rho.shape[0])
    if not is_hermitian(rho, tol):
        raise NotDensityMatrixError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise NotDensityMatrixError(f"trace is {np.trace(rho).real:.6g}, not 1")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise NotDensityMatrixError("density matrix is not positive semidefinite")
    return float(np.real(np.trace(parity(d) @ rho)))


def principal_log_hamiltonian(U, tol: float = TOL) -> np.ndarray:
    """Hermitian ``h = d/(2*pi*i) log U`` on the principal branch.

    Eigenphases are taken in ``(-pi, pi]``; a phase at ``-pi`` (up to
    ``1e-9``) is moved to ``+pi``.  ``expm(2j*pi*h/d)`` reproduces ``U``.
    """
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise NotUnitaryError("operator must be square")
    if not is_unitary(U, tol):
        raise NotUnitaryError("operator is not unitary")
    d = U.shape[0]
    # complex Schur form of a normal matrix is diagonal with unitary vectors
    T, V = scipy.linalg.schur(U, output="complex")
    phases = np.angle(np.diag(T))
    phases = np.where(phases <= -np.pi + 1e-9, np.pi, phases)
    h = (V * (d * phases / (2 * np.pi))) @ V.conj().T
    return (h + h.conj().T) / 2
