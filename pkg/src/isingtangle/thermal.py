"""Eigendecomposition, Boltzmann weights and Gibbs states.

All exponentials are taken relative to the ground energy, which keeps
``exp(-(E - E0) / T)`` in range for any ``T > 0``. The density matrix does
not depend on that shift; the stored partition function is the shifted one
and :attr:`ThermalState.log_partition` restores the absolute value.

At ``T = 0`` the state is the uniform mixture over the (possibly degenerate)
ground space, which is the ``T -> 0+`` limit of the Gibbs state.
"""
import math
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with eigenvectors stored as columns."""

    energies: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self):
        return len(self.energies)

    @property
    def ground_energy(self):
        return float(self.energies[0])

    def ground_degeneracy(self, tol=DEGENERACY_TOL):
        e0 = self.energies[0]
        return int(np.count_nonzero(np.abs(self.energies - e0) < tol * max(1.0, abs(e0))))


@dataclass(frozen=True)
class ThermalState:
    density: np.ndarray
    temperature: float
    partition: float
    ground_energy: float

    @property
    def log_partition(self):
        """``log Z`` of the unshifted Hamiltonian (``-inf``-safe for T > 0 only)."""
        if self.temperature == 0:
            raise ValueError("the partition function is not defined at T = 0")
        return math.log(self.partition) - self.ground_energy / self.temperature


def is_hermitian(M, tol=HERMITIAN_TOL):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    scale = max(1.0, float(np.max(np.abs(M), initial=0.0)))
    return bool(np.max(np.abs(M - M.conj().T), initial=0.0) <= tol * scale)


def diagonalize(H):
    """Full spectrum of a dense Hermitian matrix."""
    H = np.asarray(H)
    if not is_hermitian(H):
        raise ValueError("diagonalize expects a square Hermitian matrix")
    energies, vectors = np.linalg.eigh(H)
    return Spectrum(energies, vectors)


def populations(spec, T):
    """Occupation probabilities of every eigenstate at temperature ``T``.

    Returns the normalised weights and the shifted partition sum.
    """
    if T < 0:
        raise ValueError(f"temperature must be non-negative, got {T}")
    shifted = spec.energies - spec.energies[0]
    if T == 0:
        g = spec.ground_degeneracy()
        weights = np.zeros(spec.dim)
        weights[:g] = 1.0 / g
        return weights, float(g)
    boltz = np.exp(-shifted / T)
    z = float(boltz.sum())
    return boltz / z, z


def gibbs_state(spec, T):
    """Thermal density matrix ``exp(-H/T) / Z`` built from ``spec``."""
    weights, z = populations(spec, T)
    V = spec.vectors
    rho = (V * weights) @ V.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return ThermalState(rho, float(T), z, spec.ground_energy)


def boltzmann_weights(spec, T, n_levels):
    """Boltzmann weights of the lowest ``n_levels`` states, renormalised to 1.

    This is the truncated-level picture: only the first few eigenstates are
    taken to be populated.
    """
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    if not 1 <= n_levels <= spec.dim:
        raise ValueError(f"n_levels must lie in [1, {spec.dim}], got {n_levels}")
    boltz = np.exp(-(spec.energies[:n_levels] - spec.energies[0]) / T)
    return boltz / boltz.sum()
