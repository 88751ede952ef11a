from fractions import Fraction

import numpy as np
import pytest

from cayley_kernel.chords import ChordWord, unit
from cayley_kernel.kernel import spectrum
from cayley_kernel.oracle import (
    OracleSizeError,
    _round_robin,
    brute_spectrum,
    fixed_multi_indices,
    jacobi_eigenvalues,
    off_norm,
    tensor_trace_weight,
)


@pytest.mark.parametrize("n", [2, 4, 6, 7, 10])
def test_round_robin_covers_each_pair_once(n):
    m = n + n % 2
    rounds = _round_robin(m)
    assert len(rounds) == m - 1
    seen = [pair for r in rounds for pair in r]
    assert len(seen) == len(set(seen)) == m * (m - 1) // 2
    for r in rounds:
        flat = [x for pair in r for x in pair]
        assert len(flat) == len(set(flat))


def test_off_norm():
    assert off_norm(np.array([[5.0, 3.0], [3.0, 1e9]])) == pytest.approx(np.sqrt(18))


@pytest.mark.parametrize("size,seed", [(1, 0), (2, 1), (5, 2), (17, 3), (40, 4)])
def test_jacobi_against_numpy(size, seed):
    # numpy's LAPACK solver is used here only as an independent test oracle
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(size, size))
    a = x + x.T
    values, _ = jacobi_eigenvalues(a)
    assert np.allclose(values, np.linalg.eigvalsh(a), atol=1e-10)


def test_jacobi_degenerate_and_diagonal():
    values, sweeps = jacobi_eigenvalues(np.diag([3.0, 1.0, 2.0]))
    assert values.tolist() == [1.0, 2.0, 3.0] and sweeps == 0
    values, _ = jacobi_eigenvalues(np.ones((6, 6)))
    assert np.allclose(values, [0, 0, 0, 0, 0, 6], atol=1e-12)


def test_jacobi_rejects():
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.ones((2, 3)))


def test_brute_spectrum_sym3():
    dense = brute_spectrum(3, 2)
    assert np.allclose(dense.eigenvalues, [0, 0.75, 0.75, 0.75, 0.75, 3], atol=1e-12)
    assert dense.trace() == pytest.approx(6)


def test_brute_spectrum_size_cap():
    with pytest.raises(OracleSizeError):
        brute_spectrum(7, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("q", [0.7, 1.0, 1.5, 2.0, 2.718, 3.0, 5.0])
def test_brute_matches_character_formula(n, q):
    dense = brute_spectrum(n, q).eigenvalues
    fast = spectrum(n, q).eigenvalues()
    assert len(dense) == len(fast)
    assert max(abs(a - b) for a, b in zip(dense, fast)) <= 1e-8


@pytest.mark.slow
@pytest.mark.parametrize("q", [2, 6])
def test_brute_matches_character_formula_n6(q):
    dense = brute_spectrum(6, q).eigenvalues
    fast = spectrum(6, float(q)).eigenvalues()
    assert max(abs(a - b) for a, b in zip(dense, fast)) <= 1e-8


def test_tensor_trace_examples():
    assert fixed_multi_indices(unit(3), 2) == 8
    assert fixed_multi_indices(ChordWord.parse("1,2", 2), 3) == 3
    assert tensor_trace_weight(ChordWord.parse("1,2 2,3 1,3", 3), 2) == Fraction(1, 2)
    with pytest.raises(OracleSizeError):
        tensor_trace_weight(unit(8), 10, budget=1000)
    with pytest.raises(ValueError):
        tensor_trace_weight(unit(2), 0)
