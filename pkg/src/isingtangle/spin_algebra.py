"""Pauli matrices and their embeddings into multi-qubit Hilbert spaces.

Basis ordering is lexicographic with qubit 0 as the most significant bit,
so for two qubits the basis is ``|00>, |01>, |10>, |11>`` and ``|0>`` is
spin up (``sigma_z |0> = +|0>``).
"""
from functools import reduce

import numpy as np

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

AXES = tuple(_PAULI)


def _axis(axis):
    key = str(axis).upper()
    if key not in _PAULI:
        raise ValueError(f"unknown Pauli axis {axis!r}; expected one of {AXES}")
    return key


def pauli(axis):
    """Return the 2x2 Pauli matrix for ``axis`` in {'I', 'X', 'Y', 'Z'}.

    A fresh copy is returned, so callers may modify it.
    """
    return _PAULI[_axis(axis)].copy()


def embed(axis, site, n_qubits):
    """Pauli ``axis`` acting on ``site`` of an ``n_qubits`` register.

    Parameters
    ----------
    axis : str
        One of 'I', 'X', 'Y', 'Z' (case insensitive).
    site : int
        Target qubit, 0 being the leftmost tensor factor.
    n_qubits : int
        Register size, at least 1.

    Returns
    -------
    ndarray
        Dense ``2**n_qubits`` square complex matrix.
    """
    key = _axis(axis)
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be >= 1, got {n_qubits}")
    if not 0 <= site < n_qubits:
        raise ValueError(f"site {site} out of range for {n_qubits} qubits")
    factors = [_PAULI[key] if k == site else _PAULI["I"] for k in range(n_qubits)]
    return reduce(np.kron, factors)


def two_site(axis, i, j, n_qubits):
    """Product ``sigma^axis_i sigma^axis_j`` on an ``n_qubits`` register."""
    if i == j:
        raise ValueError("two_site needs distinct sites")
    return embed(axis, i, n_qubits) @ embed(axis, j, n_qubits)


# sigma_y (x) sigma_y, the spin-flip operator for a qubit pair; it is real.
SIGMA_YY = np.kron(_PAULI["Y"], _PAULI["Y"])
