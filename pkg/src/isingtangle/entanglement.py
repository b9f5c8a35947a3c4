"""Pair reduction and Wootters concurrence.

The concurrence of a two-qubit state ``rho`` is

    C = max(l1 - l2 - l3 - l4, 0)

where ``l_i`` are the square roots of the eigenvalues of ``R = rho rho~`` in
decreasing order and ``rho~ = (Y x Y) rho* (Y x Y)`` in the standard basis.

``R`` is not Hermitian, so its spectrum is obtained from a Hermitian route.
Writing ``rho = A A^dagger`` gives ``rho~ = A~ A~^dagger`` with
``A~ = (Y x Y) A*``, and the nonzero eigenvalues of ``R`` coincide with those
of ``(A^dagger A~)(A^dagger A~)^dagger``. The ``l_i`` are therefore the
singular values of ``A^dagger A~``. This avoids taking square roots of tiny
eigenvalues, which would otherwise turn 1e-17 rounding into 3e-9 errors.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .spin_algebra import SIGMA_YY

# rho eigenvalues below this are rounding noise and are dropped
RANK_TOL = 1e-14
# rho eigenvalues below this mean the input was not a density matrix
FAILURE_TOL = -1e-8
NORM_TOL = 1e-10


class NumericalError(ArithmeticError):
    """A computation produced values that signal an invalid input state."""


class Pair(NamedTuple):
    """Ordered qubit pair; ``i`` becomes the first tensor factor."""

    i: int
    j: int

    def separation(self, n):
        d = abs(self.i - self.j) % n
        return min(d, n - d)

    @classmethod
    def at_separation(cls, a, n=None):
        if n is not None and not 1 <= a <= n // 2:
            raise ValueError(f"separation {a} is not valid on a ring of {n}")
        return cls(0, a)


@dataclass(frozen=True)
class ConcurrenceResult:
    lambdas: np.ndarray
    concurrence: float

    @property
    def tangle(self):
        return self.concurrence ** 2


def _check_pair(pair, n):
    i, j = pair
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"invalid pair {tuple(pair)} for {n} qubits")


def partial_trace_pair(rho, n, pair):
    """Reduce an ``n``-qubit density matrix to the qubits in ``pair``.

    The result is a 4x4 matrix in the basis ``|00>, |01>, |10>, |11>`` with
    ``pair[0]`` as the first (most significant) qubit.
    """
    rho = np.asarray(rho)
    if rho.shape != (2 ** n, 2 ** n):
        raise ValueError(f"expected a {2 ** n}x{2 ** n} matrix, got {rho.shape}")
    _check_pair(pair, n)
    i, j = pair
    rest = [k for k in range(n) if k not in (i, j)]
    order = [i, j, *rest]
    t = rho.reshape((2,) * (2 * n)).transpose(order + [n + k for k in order])
    m = 2 ** (n - 2)
    return np.einsum("arbr->ab", t.reshape(4, m, 4, m))


def spin_flip(rho):
    """``(Y x Y) rho* (Y x Y)`` for a 4x4 matrix."""
    rho = np.asarray(rho)
    return SIGMA_YY @ rho.conj() @ SIGMA_YY


def product_matrix(rho):
    """Non-Hermitian product ``R = rho rho~`` whose spectrum defines the lambdas."""
    return np.asarray(rho) @ spin_flip(rho)


def _validate_two_qubit(rho):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-10:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > 1e-9:
        raise ValueError(f"density matrix has trace {np.trace(rho).real}, expected 1")
    return rho


def concurrence(rho):
    """Wootters concurrence of a two-qubit density matrix.

    Returns
    -------
    ConcurrenceResult
        The four lambdas in decreasing order and the concurrence; the tangle
        is available as a property.

    Raises
    ------
    NumericalError
        If ``rho`` has an eigenvalue below -1e-8.
    """
    rho = _validate_two_qubit(rho)
    p, U = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    if p[0] < FAILURE_TOL:
        raise NumericalError(f"density matrix has eigenvalue {p[0]:.3e}")
    keep = p > RANK_TOL
    A = U[:, keep] * np.sqrt(p[keep])
    A_flip = SIGMA_YY @ A.conj()
    s = np.linalg.svd(A.conj().T @ A_flip, compute_uv=False)
    lambdas = np.zeros(4)
    lambdas[: len(s)] = np.sort(s)[::-1]
    c = max(float(lambdas[0] - lambdas[1:].sum()), 0.0)
    return ConcurrenceResult(lambdas, min(c, 1.0))


def _pure(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape != (4,):
        raise ValueError("expected four amplitudes (a, b, c, d)")
    norm = np.vdot(psi, psi).real
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalised (norm^2 = {norm})")
    return psi


def pure_concurrence(psi):
    """``2|ad - bc|`` for ``psi = a|00> + b|01> + c|10> + d|11>``."""
    a, b, c, d = _pure(psi)
    return 2.0 * float(abs(a * d - b * c))


def schmidt_concurrence(psi):
    """``2 c0 c1`` from the Schmidt coefficients of a pure two-qubit state."""
    M = _pure(psi).reshape(2, 2)
    reduced = M @ M.conj().T
    probs = np.clip(np.linalg.eigvalsh(reduced), 0.0, None)
    return 2.0 * float(np.sqrt(probs[0] * probs[1]))
