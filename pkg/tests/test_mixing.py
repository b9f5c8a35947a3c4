import itertools
import math

import numpy as np
import pytest

from isingtangle.approx import two_level_concurrence
from isingtangle.entanglement import concurrence, pure_concurrence, spin_flip
from isingtangle.hamiltonian import RingConfig
from isingtangle.mixing import (
    ConditionError,
    PureStatePair,
    canonical_eigenvectors,
    four_level_counterexample,
    level_mixing_report,
    mixed_concurrence_predict,
    multilevel_concurrence_predict,
    spin_flip_overlap,
    verify_theorem,
)
from isingtangle.pipeline import ring_spectrum
from isingtangle.thermal import boltzmann_weights

from conftest import KET, PHI_MINUS, PHI_PLUS, PSI_MINUS, PSI_PLUS, YY_LITERAL, projector, random_state


def flip_orthogonal_pair(rng):
    """Random m and n with <m|YY|n*> = 0, by projecting n off conj(YY m)."""
    m = random_state(rng)
    n = random_state(rng)
    u = (YY_LITERAL @ m).conj()
    n = n - u * np.vdot(u, n) / np.vdot(u, u)
    return m, n / np.linalg.norm(n)


def test_overlap_examples():
    assert np.isclose(spin_flip_overlap(PSI_MINUS, PSI_MINUS), -1)
    assert abs(spin_flip_overlap(PHI_PLUS, PSI_MINUS)) < 1e-15
    assert np.isclose(spin_flip_overlap(KET["00"], KET["11"]), -1)


def test_overlap_conjugation_only_matters_for_complex_states(rng):
    for a, b in itertools.product([PHI_PLUS, PSI_PLUS, KET["01"]], repeat=2):
        assert spin_flip_overlap(a, b) == spin_flip_overlap(a, b, conjugate=False)
    m, n = flip_orthogonal_pair(rng)
    assert abs(spin_flip_overlap(m, n)) < 1e-14
    assert abs(spin_flip_overlap(m, n, conjugate=False)) > 1e-3


def test_predict_examples():
    assert mixed_concurrence_predict(PureStatePair(PHI_PLUS, PSI_MINUS, 0.5, 0.5)) == 0
    assert math.isclose(mixed_concurrence_predict(PureStatePair(PHI_PLUS, PSI_MINUS, 1, 0)), 1)


def test_predict_requires_condition():
    s = PHI_PLUS
    with pytest.raises(ConditionError) as info:
        mixed_concurrence_predict(PureStatePair(KET["00"], s, 0.5, 0.5))
    assert math.isclose(abs(info.value.overlap), 1 / math.sqrt(2))


def test_two_level_thermal_matches_closed_form():
    J, B, T = 1.0, 0.5, 0.1
    spec = ring_spectrum(RingConfig(2, J, B, 0.0))
    V = canonical_eigenvectors(spec)
    w0, w1 = boltzmann_weights(spec, T, 2)
    pred = mixed_concurrence_predict(PureStatePair(V[:, 0], V[:, 1], w0, w1))
    gap = 2 * math.sqrt(J * J + B * B) - 2 * J
    x = math.exp(-gap / T)
    closed = abs(J / math.sqrt(J * J + B * B) / (1 + x) - x / (1 + x))
    assert math.isclose(pred, closed, rel_tol=1e-12)
    assert math.isclose(pred, two_level_concurrence(J, B, T), rel_tol=1e-12)


def test_verify_theorem_bell_mixture():
    r = verify_theorem(PureStatePair(PHI_PLUS, PSI_MINUS, 0.7, 0.3))
    assert r.condition_holds
    assert math.isclose(r.exact, 0.4, abs_tol=1e-12)
    assert math.isclose(r.predicted, 0.4, abs_tol=1e-12)


def test_verify_theorem_reports_violation():
    phase = (KET["00"] + 1j * KET["11"]) / math.sqrt(2)
    r = verify_theorem(PureStatePair(PHI_PLUS, phase, 0.5, 0.5))
    assert not r.condition_holds
    assert r.predicted < 1e-12
    assert math.isclose(r.exact, 1 / math.sqrt(2), rel_tol=1e-12)


def test_violation_does_not_force_a_wrong_prediction():
    r = verify_theorem(PureStatePair(KET["00"], PHI_PLUS, 0.5, 0.5))
    assert not r.condition_holds
    assert math.isclose(r.overlap.real, -1 / math.sqrt(2))
    assert r.discrepancy < 1e-12


def test_ising_ground_and_first_excited_satisfy_condition():
    V = canonical_eigenvectors(ring_spectrum(RingConfig(2, 1.0, 0.4, 0.3)))
    r = verify_theorem(PureStatePair(V[:, 0], V[:, 1], 0.8, 0.2))
    assert r.condition_holds
    assert r.discrepancy < 1e-9
    # the first excited state is the singlet
    assert abs(abs(np.vdot(PSI_MINUS, V[:, 1])) - 1) < 1e-12


def test_random_condition_satisfying_pairs(rng):
    for _ in range(300):
        m, n = flip_orthogonal_pair(rng)
        w = rng.uniform()
        pair = PureStatePair(m, n, w, 1 - w)
        r = verify_theorem(pair)
        assert r.condition_holds and r.discrepancy < 1e-9
        # cross terms of the product matrix vanish
        rm, rn = projector(m), projector(n)
        assert np.max(np.abs(rm @ spin_flip(rn))) < 1e-10
        assert np.max(np.abs(rn @ spin_flip(rm))) < 1e-10


def test_multilevel_degenerate_cases(rng):
    assert math.isclose(multilevel_concurrence_predict([PHI_PLUS], [1.0]), 1)
    m, n = flip_orthogonal_pair(rng)
    pair = PureStatePair(m, n, 0.35, 0.65)
    assert math.isclose(multilevel_concurrence_predict([m, n], [0.35, 0.65]),
                        mixed_concurrence_predict(pair), abs_tol=1e-15)


def test_multilevel_bell_basis_is_permutation_invariant():
    states = [PHI_PLUS, PHI_MINUS, PSI_PLUS, PSI_MINUS]
    weights = [0.55, 0.2, 0.15, 0.1]
    ref = multilevel_concurrence_predict(states, weights)
    assert math.isclose(ref, 0.1, abs_tol=1e-12)
    rho = sum(w * projector(s) for w, s in zip(weights, states))
    assert math.isclose(concurrence(rho).concurrence, ref, abs_tol=1e-12)
    for perm in itertools.permutations(range(4)):
        val = multilevel_concurrence_predict([states[k] for k in perm], [weights[k] for k in perm])
        assert math.isclose(val, ref, abs_tol=1e-15)


def test_multilevel_names_offending_pair():
    with pytest.raises(ConditionError) as info:
        multilevel_concurrence_predict([PSI_MINUS, KET["00"], KET["11"]], [0.5, 0.3, 0.2])
    assert info.value.pair == (1, 2)


def test_three_level_ising_mixture():
    r = level_mixing_report(RingConfig(2, 1.0, 0.6, 0.0), 0.3, 3)
    assert r.condition_holds
    assert r.discrepancy < 1e-9


def test_four_level_overlap_is_nonzero():
    r = four_level_counterexample(RingConfig(2, 1.0, 1.0, 0.0), 1.0)
    assert r.pair == (0, 3)
    assert not r.condition_holds
    assert math.isclose(abs(r.overlap), 1 / math.sqrt(2), rel_tol=1e-9)


def test_four_level_formula_fails_near_the_pole():
    # with a longitudinal field near 2J the failing overlap changes the answer
    r = four_level_counterexample(RingConfig(2, 1.0, 0.2, 2.0), 0.3)
    assert not r.condition_holds
    assert r.discrepancy > 0.05


def test_four_level_discrepancy_vanishes_as_T_goes_to_zero():
    cfg = RingConfig(2, 1.0, 0.2, 2.0)
    d = [four_level_counterexample(cfg, T).discrepancy for T in (0.3, 0.1, 0.05, 0.02)]
    assert all(a > b for a, b in zip(d, d[1:]))
    assert d[-1] < 1e-10
    r = four_level_counterexample(RingConfig(2, 1.0, 1.0, 0.0), 1e-3)
    assert r.discrepancy < 1e-9


def test_four_level_domain():
    with pytest.raises(ValueError):
        four_level_counterexample(RingConfig(3, 1.0, 1.0, 0.0), 1.0)
    with pytest.raises(ValueError):
        four_level_counterexample(RingConfig(2, 1.0, 1.0, 0.0), 0.0)


def test_canonical_eigenvectors_are_deterministic_in_degenerate_blocks():
    spec = ring_spectrum(RingConfig(2, 1.0, 0.0, 0.5))
    V = canonical_eigenvectors(spec)
    assert np.allclose(V.conj().T @ V, np.eye(4))
    # rotated ground block diagonalises YY: it is spanned by the two singlet/triplet states
    block = V[:, :2]
    K = block.conj().T @ YY_LITERAL @ block
    assert np.allclose(K, np.diag(np.diag(K)))
    for k in range(4):
        col = V[:, k]
        big = col[np.argmax(np.abs(col))]
        assert abs(big.imag) < 1e-12 and big.real > 0


def test_pure_state_pair_validation():
    with pytest.raises(ValueError):
        PureStatePair([1, 1, 0, 0], PSI_MINUS, 0.5, 0.5)
    with pytest.raises(ValueError):
        PureStatePair(PHI_PLUS, PSI_MINUS, 0.6, 0.6)
    assert math.isclose(pure_concurrence(PureStatePair(PHI_PLUS, PSI_MINUS, 1, 0).state_m), 1)
