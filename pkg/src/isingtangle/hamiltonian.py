"""Ising ring Hamiltonian in a magnetic field lying in the x-z plane.

    H = J sum_<i,j> Z_i Z_j + Bx sum_k X_k + Bz sum_k Z_k

with periodic boundary conditions. Energies are in units of J with k_B = 1.

For a two-qubit ring both neighbour pairs (0, 1) and (1, 0) are summed, so the
coupling term is ``2J Z (x) Z``. This is the only reading under which the
general ring Hamiltonian reduces to the usual two-qubit form with the factor
2J, and it is what fixes the two-qubit spectrum to
``-2 sqrt(J^2 + B^2), -2J, 2J, 2 sqrt(J^2 + B^2)`` in a transverse field.
The y component of the field is always zero; the model is symmetric under
rotations about z, so nothing is lost.
"""
import math
from dataclasses import dataclass

import numpy as np

from .spin_algebra import embed, two_site

MIN_QUBITS = 2
MAX_QUBITS = 10


@dataclass(frozen=True)
class RingConfig:
    """Ring size, Ising coupling and Cartesian field components."""

    n_qubits: int
    J: float = 1.0
    Bx: float = 0.0
    Bz: float = 0.0

    def __post_init__(self):
        if not MIN_QUBITS <= int(self.n_qubits) <= MAX_QUBITS:
            raise ValueError(
                f"n_qubits must lie in [{MIN_QUBITS}, {MAX_QUBITS}], got {self.n_qubits}"
            )
        for name in ("J", "Bx", "Bz"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def B(self):
        """Field amplitude."""
        return math.hypot(self.Bx, self.Bz)

    @property
    def theta(self):
        """Angle between the field and the z (Ising) axis."""
        return math.atan2(self.Bx, self.Bz)

    @property
    def dim(self):
        return 2 ** self.n_qubits


def from_polar(n, J, B, theta):
    """Build a :class:`RingConfig` from field amplitude and angle to z."""
    if B < 0:
        raise ValueError(f"field amplitude must be non-negative, got {B}")
    return RingConfig(n, J, B * math.sin(theta), B * math.cos(theta))


def ring_bonds(n):
    """Neighbour pairs of a periodic ring; the two-qubit ring lists its bond twice."""
    if n == 2:
        return [(0, 1), (1, 0)]
    return [(i, (i + 1) % n) for i in range(n)]


def build_hamiltonian(cfg):
    """Dense Hermitian Hamiltonian of the ring described by ``cfg``."""
    n = cfg.n_qubits
    H = np.zeros((cfg.dim, cfg.dim), dtype=complex)
    for i, j in ring_bonds(n):
        H += cfg.J * two_site("Z", i, j, n)
    for k in range(n):
        if cfg.Bx:
            H += cfg.Bx * embed("X", k, n)
        if cfg.Bz:
            H += cfg.Bz * embed("Z", k, n)
    return H
