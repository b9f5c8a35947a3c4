"""Closed-form two-qubit approximations and the optimal field angle.

Everything here concerns the two-qubit ring. Unless a ``J`` argument is
taken, energies are in units of J (J = 1). The low-temperature picture keeps
only the ground state (concurrence ``C0``) and the first excited singlet
``|Psi->`` (concurrence 1) at energy ``-2J``; their gap ``dE`` controls the
thermal concurrence ``|w0 C0 - w1|``.

Approximate gap and ground energy for a field ``(Bx, Bz)`` with ``|Bz| < 2J``::

    dE  = 4 Bx^2 J / (4 J^2 - Bz^2)
    E0  = -2 J sqrt(1 + dE / J)
    C0  = 1 / sqrt(1 + dE)

Maximising the two-level concurrence over the field at fixed T yields a
condition on ``dE`` alone, and so an ellipse of optimal fields in the
``Bx``-``Bz`` plane.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .entanglement import Pair, pure_concurrence
from .hamiltonian import RingConfig, from_polar
from .pipeline import ring_spectrum, thermal_tangle

GOLDEN = (math.sqrt(5) - 1) / 2
POLE_MARGIN = 0.1
TWO_LEVEL_LIMIT = 0.2


@dataclass(frozen=True)
class OptimalAngle:
    theta: float
    method: str
    tangle: float = float("nan")


@dataclass(frozen=True)
class ValidityFlags:
    """Where the low-temperature approximations can be trusted.

    ``two_level_valid`` requires field and temperature small against J (at
    most ``TWO_LEVEL_LIMIT * J``); ``pole_safe`` keeps ``|Bz|`` at least
    ``POLE_MARGIN * J`` away from the poles at ``+-2J``.
    """

    two_level_valid: bool
    pole_safe: bool

    @property
    def trusted(self):
        return self.two_level_valid and self.pole_safe


def validity_flags(Bx, Bz, T, J=1.0):
    B = math.hypot(Bx, Bz)
    two_level = B <= TWO_LEVEL_LIMIT * J and 0 < T <= TWO_LEVEL_LIMIT * J
    pole_safe = abs(abs(Bz) - 2 * J) >= POLE_MARGIN * J and abs(Bz) < 2 * J
    return ValidityFlags(two_level, pole_safe)


def tangle_zero_T_orthogonal(J, B):
    """Ground-state tangle ``J^2 / (J^2 + B^2)`` in a transverse field, B > 0.

    At exactly B = 0 the ground space is degenerate and carries no
    entanglement, so the formula does not apply there.
    """
    if B <= 0:
        raise ValueError("the zero-temperature tangle formula needs B > 0")
    return J * J / (J * J + B * B)


def two_level_concurrence(J, B, T):
    """``|w0 J / sqrt(J^2 + B^2) - w1|`` with Boltzmann weights of the two lowest levels."""
    if T <= 0:
        raise ValueError("temperature must be positive")
    gap = 2 * math.sqrt(J * J + B * B) - 2 * J
    x = math.exp(-gap / T)
    w0, w1 = 1 / (1 + x), x / (1 + x)
    return abs(w0 * J / math.sqrt(J * J + B * B) - w1)


def _check_pole(Bz, J):
    if abs(Bz) >= 2 * J:
        raise ValueError(f"|Bz| = {abs(Bz)} must stay below the pole at 2J = {2 * J}")


def gap_approx(Bx, Bz, J=1.0):
    _check_pole(Bz, J)
    return 4 * Bx * Bx * J / (4 * J * J - Bz * Bz)


def ground_energy_approx(Bx, Bz, J=1.0, form="sqrt"):
    """Approximate ground energy.

    ``form="sqrt"`` gives ``-2J sqrt(1 + dE/J)``; ``form="taylor"`` gives
    its two-term expansion ``-2J - dE``.
    """
    dE = gap_approx(Bx, Bz, J)
    if form == "sqrt":
        return -2 * J * math.sqrt(1 + dE / J)
    if form == "taylor":
        return -2 * J - dE
    raise ValueError(f"unknown form {form!r}")


def ground_concurrence_approx(Bx, Bz):
    return 1 / math.sqrt(1 + gap_approx(Bx, Bz))


def _max_condition(dE, T):
    with np.errstate(over="ignore"):
        return float(T * (1 + np.exp(dE / T)) - 2 * (1 + dE + np.sqrt(1 + dE)))


def max_condition_exact(T, tol=1e-12):
    """Root ``dE`` of ``T (1 + e^(dE/T)) = 2 (1 + dE + sqrt(1 + dE))`` in [0, 4]."""
    if T <= 0:
        raise ValueError("temperature must be positive")
    lo, hi = 0.0, 4.0
    f_lo, f_hi = _max_condition(lo, T), _max_condition(hi, T)
    if not f_lo < 0 < f_hi:
        raise ArithmeticError(f"no sign change on [0, 4] at T = {T}")
    return bisect(_max_condition, lo, hi, args=(T,), xtol=tol)


def max_condition_approx(T):
    """``dE = T ln(4/T)``, the small-T form of the maximum condition."""
    if T <= 0:
        raise ValueError("temperature must be positive")
    return T * math.log(4 / T)


def two_level_optimal_gap(T, tol=1e-12):
    """Gap maximising ``(C0 - x) / (1 + x)``, ``x = e^(-dE/T)``, found numerically.

    Serves as a reference for the two closed-form conditions above.
    """
    def conc(dE):
        x = math.exp(-dE / T)
        return (1 / math.sqrt(1 + dE) - x) / (1 + x)

    return golden_section_max(conc, 0.0, 4.0, tol)[0]


def theta_star_analytic(B, T):
    """Optimal angle from the ellipse ``dE(Bx, Bz) = T ln(4/T)``.

    Positive branch of ``sin(theta*) = sqrt(dE/(4 - dE) * (4 - B^2)/B^2)``;
    requires ``B > sqrt(dE)`` and ``B <= 2`` so the argument lies in [0, 1].
    """
    if B <= 0:
        raise ValueError("field amplitude must be positive")
    dE = max_condition_approx(T)
    if B * B <= dE:
        raise ValueError(f"B = {B} must exceed sqrt(dE) = {math.sqrt(dE):.4g}")
    arg = dE / (4 - dE) * (4 - B * B) / (B * B)
    if not 0 <= arg <= 1:
        raise ValueError(f"no optimal angle on the ellipse for B = {B}, T = {T}")
    return OptimalAngle(math.asin(math.sqrt(arg)), "analytic")


def bx_star_analytic(Bz, T):
    """Optimal ``Bx`` (positive branch) for a given ``Bz`` with ``|Bz| < 2``."""
    _check_pole(Bz, 1.0)
    return math.sqrt(max_condition_approx(T) * (1 - Bz * Bz / 4))


def golden_section_max(f, a, b, tol=1e-4):
    """Maximise a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def theta_star_numeric(B, T, n_qubits=2, pair=(0, 1), J=1.0, grid=65, tol=1e-4):
    """Angle in [0, pi/2] maximising the exact thermal tangle at amplitude B.

    A coarse grid locates the best sample; golden-section search on the two
    neighbouring cells refines it. Ties on the grid go to the smallest angle.
    """
    if B <= 0:
        raise ValueError("field amplitude must be positive")
    pair = Pair(*pair)

    def tau(theta):
        return thermal_tangle(from_polar(n_qubits, J, B, theta), T, pair)

    thetas = np.linspace(0.0, math.pi / 2, grid)
    values = np.array([tau(t) for t in thetas])
    k = int(np.argmax(values))
    lo, hi = thetas[max(k - 1, 0)], thetas[min(k + 1, grid - 1)]
    x, fx = golden_section_max(tau, lo, hi, tol)
    if values[k] > fx:
        x, fx = float(thetas[k]), float(values[k])
    return OptimalAngle(float(x), "numeric", float(fx))


def exact_ground_concurrence(Bx, Bz, J=1.0):
    """Concurrence of the exact two-qubit ground state (for comparison with ``C0``)."""
    spec = ring_spectrum(RingConfig(2, J, Bx, Bz))
    return pure_concurrence(spec.vectors[:, 0])
