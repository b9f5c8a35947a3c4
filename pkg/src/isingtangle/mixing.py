"""Concurrence of mixtures of pure two-qubit states.

Two pure states ``m`` and ``n`` have zero spin-flip overlap when
``<m| Y x Y |n*> = 0``. In that case ``rho_m rho~_n`` and ``rho_n rho~_m``
vanish, the product matrix of the mixture splits into two rank-one pieces
and the mixture's concurrence is ``|w_m C_m - w_n C_n|``. If the overlap
vanishes for every pair in a larger mixture, the lambdas are just
``w_k C_k`` and

    C = max_k (2 w_k C_k - sum_i w_i C_i, 0).

The overlap is evaluated with the ket conjugated, which is the form that
makes the cross terms ``rho_i rho~_j`` vanish for complex amplitudes. For
real amplitudes, as in the Ising eigenstates, the conjugation is immaterial.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .entanglement import NORM_TOL, concurrence, pure_concurrence
from .pipeline import ring_spectrum
from .spin_algebra import SIGMA_YY
from .thermal import DEGENERACY_TOL, boltzmann_weights, gibbs_state, populations

OVERLAP_TOL = 1e-10


class ConditionError(ValueError):
    """The zero spin-flip overlap precondition does not hold."""

    def __init__(self, message, overlap, pair=None):
        super().__init__(message)
        self.overlap = overlap
        self.pair = pair


@dataclass(frozen=True)
class PureStatePair:
    state_m: np.ndarray
    state_n: np.ndarray
    weight_m: float
    weight_n: float

    def __post_init__(self):
        for name in ("state_m", "state_n"):
            psi = np.asarray(getattr(self, name), dtype=complex).reshape(-1)
            if psi.shape != (4,) or abs(np.vdot(psi, psi).real - 1.0) > NORM_TOL:
                raise ValueError(f"{name} must be a normalised 4-vector")
            object.__setattr__(self, name, psi)
        if min(self.weight_m, self.weight_n) < 0 or abs(self.weight_m + self.weight_n - 1) > 1e-12:
            raise ValueError("weights must be non-negative and sum to 1")

    def density(self):
        m, n = self.state_m, self.state_n
        return self.weight_m * np.outer(m, m.conj()) + self.weight_n * np.outer(n, n.conj())


@dataclass(frozen=True)
class MixingReport:
    overlap: complex
    condition_holds: bool
    predicted: float
    exact: float
    discrepancy: float
    pair: Optional[tuple] = None

    def as_dict(self):
        return {
            "overlap": [self.overlap.real, self.overlap.imag],
            "abs_overlap": abs(self.overlap),
            "condition_holds": self.condition_holds,
            "predicted_C": self.predicted,
            "exact_C": self.exact,
            "discrepancy": self.discrepancy,
            "pair": list(self.pair) if self.pair is not None else None,
        }


def spin_flip_overlap(m, n, conjugate=True):
    """``<m| Y x Y |n*>``, or ``<m| Y x Y |n>`` when ``conjugate`` is False."""
    m = np.asarray(m, dtype=complex).reshape(-1)
    n = np.asarray(n, dtype=complex).reshape(-1)
    ket = n.conj() if conjugate else n
    return complex(np.vdot(m, SIGMA_YY @ ket))


def _holds(overlap, m, n):
    scale = np.linalg.norm(m) * np.linalg.norm(n)
    return bool(abs(overlap) < OVERLAP_TOL * scale)


def mixed_concurrence_predict(pair):
    """``|w_m C_m - w_n C_n|`` for a pair with vanishing spin-flip overlap."""
    ov = spin_flip_overlap(pair.state_m, pair.state_n)
    if not _holds(ov, pair.state_m, pair.state_n):
        raise ConditionError(f"spin-flip overlap |{abs(ov):.3e}| is not zero", ov, (0, 1))
    return abs(pair.weight_m * pure_concurrence(pair.state_m)
               - pair.weight_n * pure_concurrence(pair.state_n))


def verify_theorem(pair):
    """Compare the two-state mixing rule with Wootters on the actual mixture.

    Both numbers are computed whether or not the overlap condition holds.
    """
    ov = spin_flip_overlap(pair.state_m, pair.state_n)
    predicted = abs(pair.weight_m * pure_concurrence(pair.state_m)
                    - pair.weight_n * pure_concurrence(pair.state_n))
    exact = float(concurrence(pair.density()).concurrence)
    return MixingReport(ov, _holds(ov, pair.state_m, pair.state_n), predicted, exact,
                        abs(exact - predicted), (0, 1))


def worst_overlap(states):
    """Index pair and value of the largest spin-flip overlap among ``states``."""
    worst = (None, 0j)
    for i, j in combinations(range(len(states)), 2):
        ov = spin_flip_overlap(states[i], states[j])
        if worst[0] is None or abs(ov) > abs(worst[1]):
            worst = ((i, j), ov)
    return worst


def multilevel_concurrence_predict(states, weights, check=True):
    """``max_k(2 w_k C_k - sum_i w_i C_i, 0)`` for a mixture of pure states.

    With ``check`` set, every pair must have zero spin-flip overlap, otherwise
    :class:`ConditionError` names the offending pair. Pass ``check=False`` to
    evaluate the formula where it is not expected to hold.
    """
    states = [np.asarray(s, dtype=complex).reshape(-1) for s in states]
    weights = np.asarray(weights, dtype=float)
    if len(states) != len(weights) or not states:
        raise ValueError("need one weight per state")
    if check:
        for i, j in combinations(range(len(states)), 2):
            ov = spin_flip_overlap(states[i], states[j])
            if not _holds(ov, states[i], states[j]):
                raise ConditionError(
                    f"spin-flip overlap of states {i} and {j} is {abs(ov):.3e}", ov, (i, j))
    lam = weights * np.array([pure_concurrence(s) for s in states])
    return max(float(np.max(2 * lam - lam.sum())), 0.0)


def canonical_eigenvectors(spec, tol=DEGENERACY_TOL):
    """Eigenvectors of a two-qubit spectrum with a reproducible gauge.

    Inside each degenerate block the basis is rotated to diagonalise
    ``Y x Y``; every column is then rephased so its largest component is real
    and positive.
    """
    if spec.dim != 4:
        raise ValueError("spin-flip canonicalisation is defined for two qubits only")
    V = spec.vectors.copy()
    e = spec.energies
    start = 0
    while start < len(e):
        stop = start + 1
        while stop < len(e) and abs(e[stop] - e[start]) < tol * max(1.0, abs(e[start])):
            stop += 1
        if stop - start > 1:
            block = V[:, start:stop]
            _, W = np.linalg.eigh(block.conj().T @ SIGMA_YY @ block)
            V[:, start:stop] = block @ W
        start = stop
    for k in range(V.shape[1]):
        col = V[:, k]
        big = col[np.argmax(np.abs(col) > np.abs(col).max() - 1e-12)]
        V[:, k] = col * (abs(big) / big)
    return V


def level_mixing_report(cfg, T, n_levels):
    """Mixing rule vs Wootters for the lowest ``n_levels`` Gibbs-weighted eigenstates.

    The report's overlap is the largest pairwise spin-flip overlap among the
    included levels.
    """
    if cfg.n_qubits != 2:
        raise ValueError("level mixing is defined for the two-qubit ring")
    spec = ring_spectrum(cfg)
    V = canonical_eigenvectors(spec)
    w = boltzmann_weights(spec, T, n_levels)
    states = [V[:, k] for k in range(n_levels)]
    pair, ov = worst_overlap(states) if n_levels > 1 else (None, 0j)
    predicted = multilevel_concurrence_predict(states, w, check=False)
    rho = sum(wk * np.outer(s, s.conj()) for wk, s in zip(w, states))
    exact = float(concurrence(rho).concurrence)
    holds = pair is None or _holds(ov, states[pair[0]], states[pair[1]])
    return MixingReport(ov, holds, predicted, exact, abs(exact - predicted), pair)


def four_level_counterexample(cfg, T):
    """All four levels of the two-qubit ring against the full thermal state.

    The overlap reported is the one between the ground and third excited
    states.
    """
    if cfg.n_qubits != 2:
        raise ValueError("the four-level check needs a two-qubit ring")
    if T <= 0:
        raise ValueError("the four-level check needs T > 0")
    spec = ring_spectrum(cfg)
    V = canonical_eigenvectors(spec)
    w, _ = populations(spec, T)
    states = [V[:, k] for k in range(4)]
    ov = spin_flip_overlap(states[0], states[3])
    predicted = multilevel_concurrence_predict(states, w, check=False)
    exact = float(concurrence(gibbs_state(spec, T).density).concurrence)
    return MixingReport(ov, _holds(ov, states[0], states[3]), predicted, exact,
                        abs(exact - predicted), (0, 3))
