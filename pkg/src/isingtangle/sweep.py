"""Tangle maps over two-parameter grids.

Three grid kinds are supported:

``B_T``
    transverse field amplitude against temperature;
``Bx_Bz``
    Cartesian field components at a fixed temperature;
``B_theta``
    field amplitude against its angle to the z axis at a fixed temperature.

Each grid point runs the full exact pipeline independently, so rows can be
farmed out to worker processes. Results land in a preallocated array indexed
by position, which makes parallel and sequential runs identical.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from . import __version__
from .approx import validity_flags
from .entanglement import Pair
from .hamiltonian import MAX_QUBITS, MIN_QUBITS, RingConfig, from_polar
from .pipeline import thermal_tangle

AXIS_NAMES = {"B_T": ("B", "T"), "Bx_Bz": ("Bx", "Bz"), "B_theta": ("B", "theta")}

DEFAULT_STEPS = 101
DEFAULT_AXES = {
    "B_T": ((0.0, 3.0), (0.01, 2.0)),
    "Bx_Bz": ((-3.0, 3.0), (-3.0, 3.0)),
    "B_theta": ((0.0, 3.0), (0.0, math.pi / 2)),
}


class CapacityError(ValueError):
    """The requested ring is too large for dense exact diagonalisation."""


@dataclass(frozen=True)
class SweepSpec:
    kind: str
    n_qubits: int = 2
    J: float = 1.0
    separation: int = 1
    axis1: tuple = (0.0, 3.0, DEFAULT_STEPS)
    axis2: tuple = (0.0, 3.0, DEFAULT_STEPS)
    temperature: float = 0.0

    def __post_init__(self):
        if self.kind not in AXIS_NAMES:
            raise ValueError(f"unknown grid kind {self.kind!r}; expected one of {list(AXIS_NAMES)}")
        if self.n_qubits > MAX_QUBITS:
            raise CapacityError(f"rings above {MAX_QUBITS} qubits are not supported")
        if self.n_qubits < MIN_QUBITS:
            raise ValueError(f"need at least {MIN_QUBITS} qubits")
        if not 1 <= self.separation <= self.n_qubits // 2:
            raise ValueError(f"separation {self.separation} invalid for N = {self.n_qubits}")
        for name in ("axis1", "axis2"):
            lo, hi, steps = getattr(self, name)
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError(f"{name} range must be finite")
            if int(steps) != steps or steps < 2:
                raise ValueError(f"{name} needs at least 2 integer steps")
            object.__setattr__(self, name, (float(lo), float(hi), int(steps)))
        if not self.temperature >= 0:
            raise ValueError("temperature must be non-negative")
        if self.kind == "B_T" and min(self.axis2[:2]) < 0:
            raise ValueError("temperature axis must be non-negative")

    @classmethod
    def default(cls, kind, steps=DEFAULT_STEPS, **overrides):
        (a1, b1), (a2, b2) = DEFAULT_AXES[kind]
        params = dict(axis1=(a1, b1, steps), axis2=(a2, b2, steps))
        params.update(overrides)
        return cls(kind, **params)

    @property
    def axis_names(self):
        return AXIS_NAMES[self.kind]

    def axes(self):
        return tuple(np.linspace(lo, hi, steps) for lo, hi, steps in (self.axis1, self.axis2))

    def point(self, x1, x2):
        """Ring configuration and temperature at one grid point."""
        n, J = self.n_qubits, self.J
        if self.kind == "B_T":
            return RingConfig(n, J, float(x1), 0.0), float(x2)
        if self.kind == "Bx_Bz":
            return RingConfig(n, J, float(x1), float(x2)), self.temperature
        return from_polar(n, J, float(x1), float(x2)), self.temperature


@dataclass
class GridResult:
    spec: SweepSpec
    axis1: np.ndarray
    axis2: np.ndarray
    values: np.ndarray
    mask: np.ndarray = None
    metadata: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "spec": asdict(self.spec),
            "axis_names": list(self.spec.axis_names),
            "axis1": self.axis1.tolist(),
            "axis2": self.axis2.tolist(),
            "tangle": self.values.tolist(),
            "mask": None if self.mask is None else self.mask.tolist(),
            "metadata": dict(self.metadata),
        }


def evaluate_point(spec, x1, x2):
    cfg, T = spec.point(x1, x2)
    return thermal_tangle(cfg, T, Pair.at_separation(spec.separation))


def _row(spec, i):
    axis1, axis2 = spec.axes()
    return np.array([evaluate_point(spec, axis1[i], x2) for x2 in axis2])


def _validity_mask(spec, axis1, axis2):
    mask = np.zeros((len(axis1), len(axis2)), dtype=bool)
    for i, x1 in enumerate(axis1):
        for j, x2 in enumerate(axis2):
            cfg, T = spec.point(x1, x2)
            mask[i, j] = validity_flags(cfg.Bx, cfg.Bz, T, cfg.J).trusted
    return mask


def run_sweep(spec, workers=1, with_mask=False, timestamp=None):
    """Evaluate the thermal tangle on every point of ``spec``'s grid.

    Parameters
    ----------
    spec : SweepSpec
    workers : int
        Number of worker processes; 1 runs in-process.
    with_mask : bool
        Attach a mask of points where the two-qubit low-temperature
        approximations are trusted (two-qubit rings only).
    timestamp : str, optional
        Stored in the metadata verbatim. Left out by default so repeated runs
        serialise identically.
    """
    axis1, axis2 = spec.axes()
    values = np.empty((len(axis1), len(axis2)))
    rows = range(len(axis1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, row in zip(rows, pool.map(_row, [spec] * len(axis1), rows)):
                values[i] = row
    else:
        for i in rows:
            values[i] = _row(spec, i)
    mask = None
    if with_mask:
        if spec.n_qubits != 2:
            raise ValueError("approximation masks exist for two-qubit rings only")
        mask = _validity_mask(spec, axis1, axis2)
    metadata = {
        "J": spec.J,
        "n_qubits": spec.n_qubits,
        "separation": spec.separation,
        "temperature": spec.temperature if spec.kind != "B_T" else None,
        "version": __version__,
        "timestamp": timestamp,
    }
    return GridResult(spec, axis1, axis2, values, mask, metadata)


def _require_matching(a, b, free):
    if replace(a.spec, **{free: getattr(b.spec, free)}) != b.spec:
        raise ValueError(f"grids must share every setting except {free}")


def even_odd_distance(grid_a, grid_b):
    """Mean absolute tangle difference of two grids that differ only in ring size."""
    _require_matching(grid_a, grid_b, "n_qubits")
    return float(np.mean(np.abs(grid_a.values - grid_b.values)))


def complementarity_report(grid_a1, grid_a2):
    """Describe how two same-ring grids at different pair separations overlap.

    Returns a dict with the Pearson correlation (``None`` when either grid is
    constant), the mean pointwise product, and the fraction of points where
    one grid is above its median while the other is below its own.
    """
    _require_matching(grid_a1, grid_a2, "separation")
    x, y = grid_a1.values.ravel(), grid_a2.values.ravel()
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        corr, note = None, "undefined: constant grid"
    else:
        corr, note = float(np.corrcoef(x, y)[0, 1]), None
    hi_x, hi_y = x > np.median(x), y > np.median(y)
    opposite = float(np.mean(hi_x != hi_y))
    return {
        "correlation": corr,
        "correlation_note": note,
        "mean_product": float(np.mean(x * y)),
        "mean_a": float(x.mean()),
        "mean_b": float(y.mean()),
        "opposite_fraction": opposite,
        "n_points": int(x.size),
    }
