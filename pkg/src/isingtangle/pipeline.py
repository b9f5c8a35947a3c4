"""End-to-end evaluation: ring -> Gibbs state -> pair -> concurrence."""
from .entanglement import Pair, concurrence, partial_trace_pair
from .hamiltonian import build_hamiltonian
from .thermal import diagonalize, gibbs_state


def ring_spectrum(cfg):
    return diagonalize(build_hamiltonian(cfg))


def thermal_pair_state(cfg, T, pair=(0, 1)):
    """Reduced two-qubit Gibbs state of ``pair`` on the ring ``cfg``."""
    state = gibbs_state(ring_spectrum(cfg), T)
    return partial_trace_pair(state.density, cfg.n_qubits, Pair(*pair))


def thermal_concurrence(cfg, T, pair=(0, 1)):
    """:class:`~isingtangle.entanglement.ConcurrenceResult` of the thermal pair state."""
    return concurrence(thermal_pair_state(cfg, T, pair))


def thermal_tangle(cfg, T, pair=(0, 1)):
    return thermal_concurrence(cfg, T, pair).tangle
