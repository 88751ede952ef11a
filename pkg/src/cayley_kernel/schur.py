"""Semistandard Young tableaux and principal specialisations of Schur polynomials.

``count_ssyt(lam, n)`` is s_lam(1, ..., 1) with n ones, counted by explicit
enumeration. ``schur_frobenius_specialized`` computes the same number through
the character formula. At exp_beta = n the kernel eigenvalue for ``lam`` is a
positive multiple of this count, which makes it manifestly non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

from .partitions import Partition, canonical, character, class_size, conjugate, dimension, enumerate_partitions


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def is_semistandard(self) -> bool:
        if tuple(len(r) for r in self.rows) != self.shape:
            return False
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                return False
        return True

    def content(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.rows:
            for x in r:
                out[x] = out.get(x, 0) + 1
        return out


def iter_ssyt(shape, n_max: int) -> Iterator[Tableau]:
    """Every SSYT of ``shape`` with entries in 1..n_max.

    Cells are filled row by row; each entry is bounded below by its left and
    upper neighbours and above by the room the rest of its column needs.
    """
    lam = canonical(shape)
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if len(lam) > n_max:
        return
    heights = conjugate(lam)
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    grid = [[0] * part for part in lam]

    def fill(pos: int) -> Iterator[Tableau]:
        if pos == len(cells):
            yield Tableau(lam, tuple(tuple(r) for r in grid))
            return
        i, j = cells[pos]
        low = 1
        if j > 0:
            low = grid[i][j - 1]
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        high = n_max - (heights[j] - 1 - i)
        for v in range(low, high + 1):
            grid[i][j] = v
            yield from fill(pos + 1)

    yield from fill(0)


def count_ssyt(shape, n_max: int) -> int:
    return sum(1 for _ in iter_ssyt(shape, n_max))


def schur_frobenius_specialized(shape, n_max: int) -> Fraction:
    """(1/N!) sum_mu |C_mu| chi^lam(mu) n_max^len(mu), i.e. s_lam at n_max ones."""
    lam = canonical(shape)
    n = sum(lam)
    total = sum(class_size(mu) * character(lam, mu) * n_max ** len(mu) for mu in enumerate_partitions(n))
    return Fraction(total, factorial(n))


def eigenvalue_via_ssyt(shape, n: int) -> Fraction:
    """Kernel eigenvalue at exp_beta = n, as count_ssyt * N! / (dim * n^N)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    lam = canonical(shape)
    big_n = sum(lam)
    return Fraction(count_ssyt(lam, n) * factorial(big_n), dimension(lam) * n**big_n)
