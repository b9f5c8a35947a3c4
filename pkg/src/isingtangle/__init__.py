"""Thermal pairwise entanglement of Ising qubit rings in a tilted magnetic field."""
__version__ = "0.1.0"

from .spin_algebra import embed, pauli, two_site
from .hamiltonian import RingConfig, build_hamiltonian, from_polar
from .thermal import Spectrum, ThermalState, boltzmann_weights, diagonalize, gibbs_state
from .entanglement import (
    ConcurrenceResult,
    NumericalError,
    Pair,
    concurrence,
    partial_trace_pair,
    pure_concurrence,
    schmidt_concurrence,
    spin_flip,
)
from .pipeline import thermal_concurrence, thermal_pair_state, thermal_tangle
from .mixing import (
    ConditionError,
    MixingReport,
    PureStatePair,
    four_level_counterexample,
    mixed_concurrence_predict,
    multilevel_concurrence_predict,
    spin_flip_overlap,
    verify_theorem,
)
from .sweep import GridResult, SweepSpec, run_sweep
