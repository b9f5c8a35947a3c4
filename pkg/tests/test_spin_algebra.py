import itertools

import numpy as np
import pytest

from isingtangle.spin_algebra import SIGMA_YY, embed, pauli, two_site

from conftest import KET, PSI_MINUS, YY_LITERAL


def test_pauli_conventions():
    assert np.array_equal(pauli("Z"), np.diag([1, -1]))
    assert np.array_equal(pauli("X") @ [1, 0], [0, 1])
    assert np.allclose(pauli("Y") @ pauli("Y"), np.eye(2))
    # Y|0> = i|1>, Y|1> = -i|0>
    assert np.array_equal(pauli("Y") @ [1, 0], [0, 1j])
    assert np.array_equal(pauli("Y") @ [0, 1], [-1j, 0])


def test_pauli_returns_copy():
    z = pauli("z")
    z[0, 0] = 7
    assert pauli("Z")[0, 0] == 1


def test_unknown_axis():
    with pytest.raises(ValueError):
        pauli("W")


def test_embed_examples():
    assert np.array_equal(embed("Z", 0, 2), np.diag([1, 1, -1, -1]))
    assert np.array_equal(embed("Z", 1, 2), np.diag([1, -1, 1, -1]))
    assert np.array_equal(embed("X", 0, 1), pauli("X"))


@pytest.mark.parametrize("site,n", [(-1, 2), (2, 2), (0, 0)])
def test_embed_out_of_range(site, n):
    with pytest.raises(ValueError):
        embed("X", site, n)


def test_two_site_examples():
    assert np.array_equal(two_site("Z", 0, 1, 2), np.diag([1, -1, -1, 1]))
    assert np.array_equal(two_site("Z", 0, 1, 2), two_site("Z", 1, 0, 2))
    assert np.allclose(two_site("Y", 0, 1, 2) @ PSI_MINUS, -PSI_MINUS)
    assert np.allclose(YY_LITERAL @ PSI_MINUS, -PSI_MINUS)


def test_two_site_same_site():
    with pytest.raises(ValueError):
        two_site("Z", 1, 1, 3)


def test_sigma_yy_matches_literal():
    assert np.array_equal(SIGMA_YY, YY_LITERAL)
    assert np.array_equal(SIGMA_YY @ KET["11"], -KET["00"])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_embedded_paulis_hermitian_unitary(n):
    eye = np.eye(2 ** n)
    for axis in "XYZ":
        for site in range(n):
            M = embed(axis, site, n)
            assert np.max(np.abs(M - M.conj().T)) < 1e-12
            assert np.max(np.abs(M @ M - eye)) < 1e-12


def test_distinct_sites_commute():
    n = 3
    for a, b in itertools.product("XYZ", repeat=2):
        for i, j in itertools.permutations(range(n), 2):
            A, B = embed(a, i, n), embed(b, j, n)
            assert np.allclose(A @ B, B @ A)


def test_qubit_zero_is_most_significant_bit():
    n = 4
    for site in range(n):
        diag = np.diag(embed("Z", site, n)).real
        for b in range(2 ** n):
            bit = (b >> (n - 1 - site)) & 1
            assert diag[b] == (1 - 2 * bit)
