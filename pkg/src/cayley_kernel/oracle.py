"""Brute-force cross-checks that share no code path with the character formula.

``brute_spectrum`` diagonalises the explicit N! x N! kernel matrix with a
cyclic Jacobi method written here. Rotations are scheduled in round-robin
order, so each round acts on n/2 disjoint index pairs and is applied to the
whole matrix at once.

``tensor_trace_weight`` realises the gl(n) weight system as the normalised
trace of the strand permutation acting on (C^n)^{tensor N}, counting fixed
basis multi-indices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chords import ChordWord, perm
from .kernel import as_exp_beta, kernel_matrix_array

BRUTE_SPECTRUM_MAX_N = 6
TENSOR_TRACE_BUDGET = 10**7


class OracleSizeError(ValueError):
    pass


class JacobiNotConverged(RuntimeError):
    pass


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    """n-1 rounds (n even) of n/2 disjoint pairs covering every pair exactly once."""
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        rounds.append([tuple(sorted((players[k], players[n - 1 - k]))) for k in range(n // 2)])
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = 1e-12,
    max_sweeps: int = 60,
) -> tuple[np.ndarray, int]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Stops once the off-diagonal Frobenius norm is at most ``tol * max(1, ||A||_F)``.
    Returns the ascending eigenvalues and the number of sweeps used.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0, atol=1e-14 * max(1.0, np.abs(a).max(initial=0))):
        raise ValueError("matrix is not symmetric")
    size = a.shape[0]
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    # entries this small cannot push the off-diagonal norm past 0.1 * threshold
    negligible = 0.1 * threshold / size
    if size < 2:
        return np.sort(np.diag(a)), 0

    padded = size + size % 2
    rounds = []
    for pairs in _round_robin(padded):
        real = [(p, q) for p, q in pairs if q < size]
        rounds.append((np.array([p for p, _ in real]), np.array([q for _, q in real])))

    for sweep in range(max_sweeps):
        if off_norm(a) <= threshold:
            return np.sort(np.diag(a)), sweep
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > negligible
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # rows then columns: A <- J^T A J with J block-diagonal on disjoint pairs
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            # the rotation annihilates these entries up to round-off
            a[p, q] = 0.0
            a[q, p] = 0.0
    if off_norm(a) <= threshold:
        return np.sort(np.diag(a)), max_sweeps
    raise JacobiNotConverged(
        f"off-diagonal norm {off_norm(a):.3e} above {threshold:.3e} after {max_sweeps} sweeps"
    )


@dataclass(frozen=True)
class DenseSpectrum:
    n_elements: int
    exp_beta: float
    eigenvalues: tuple[float, ...]
    sweeps: int

    def trace(self) -> float:
        return math.fsum(self.eigenvalues)


def brute_spectrum(n: int, exp_beta, max_n: int = BRUTE_SPECTRUM_MAX_N) -> DenseSpectrum:
    """Sorted eigenvalues of the explicit kernel matrix on Sym(n)."""
    if n > max_n:
        raise OracleSizeError(f"brute_spectrum supports N <= {max_n}, got {n}")
    q = as_exp_beta(exp_beta)
    values, sweeps = jacobi_eigenvalues(kernel_matrix_array(n, q))
    return DenseSpectrum(n, float(q), tuple(float(v) for v in values), sweeps)


def fixed_multi_indices(w: ChordWord, n: int, budget: int = TENSOR_TRACE_BUDGET) -> int:
    """Number of b in {1..n}^N with b = b o perm(w): the diagonal of the permutation operator."""
    size = n**w.n_strands
    if size > budget:
        raise OracleSizeError(f"n^N = {size} exceeds the tensor budget {budget}")
    sigma = [x - 1 for x in perm(w).images]
    count = 0
    for b in itertools.product(range(n), repeat=w.n_strands):
        if all(b[k] == b[sigma[k]] for k in range(w.n_strands)):
            count += 1
    return count


def tensor_trace_weight(w: ChordWord, n: int, budget: int = TENSOR_TRACE_BUDGET) -> Fraction:
    """n^-N tr(P_perm(w)) on (C^n)^{tensor N}."""
    if n < 1:
        raise ValueError(f"gl(n) needs n >= 1, got {n}")
    return Fraction(fixed_multi_indices(w, n, budget), n**w.n_strands)
