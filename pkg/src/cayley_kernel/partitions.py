"""Integer partitions, conjugacy classes of Sym(N) and irreducible characters.

Partitions are plain tuples of positive ints in weakly decreasing order.
Characters come from the Murnaghan-Nakayama rule, worked on beta-sets
(first-column hook lengths): removing a rim hook of length ``k`` is moving
one bead from position ``b`` to the empty position ``b - k``, with sign
``(-1)`` to the number of beads jumped over.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def canonical(parts: Iterable[int]) -> Partition:
    """Sort parts into weakly decreasing order and drop zeros."""
    out = tuple(sorted((int(p) for p in parts if p != 0), reverse=True))
    if any(p < 0 for p in out):
        raise ValueError(f"partition parts must be non-negative: {out}")
    return out


def parse_partition(text: str) -> Partition:
    """Parse ``"2+1"`` style text."""
    try:
        parts = [int(p) for p in text.split("+")]
    except ValueError:
        raise ValueError(f"bad partition {text!r}, expected parts joined by '+'") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"bad partition {text!r}: parts must be positive")
    return canonical(parts)


def format_partition(lam: Partition) -> str:
    return "+".join(map(str, lam))


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    return list(_partitions_bounded(n, n))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > col) for col in range(lam[0]))


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_k k^{m_k} m_k!, the order of the centralizer of a mu-cycle-type element."""
    return prod(k**m * factorial(m) for k, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type ``mu``."""
    mu = canonical(mu)
    return factorial(sum(mu)) // centralizer_order(mu)


def class_sign(mu: Partition) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def dimension(lam: Partition) -> int:
    """Dimension of the Specht module of shape ``lam``, by the hook length formula."""
    lam = canonical(lam)
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(sum(lam)) // hooks


def _beta_set(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(part + length - 1 - i for i, part in enumerate(lam))


def _from_beta_set(beta: Iterable[int]) -> Partition:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    return canonical(b - (length - 1 - i) for i, b in enumerate(ordered))


def remove_rim_hooks(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ``(lam minus a k-rim-hook, sign)`` pairs; the sign is (-1)^(leg length)."""
    beta = _beta_set(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        moved = [c for c in beta if c != b] + [target]
        out.append((_from_beta_set(moved), -1 if jumped % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    return sum(s * _mn(smaller, rest) for smaller, s in remove_rim_hooks(lam, k))


def character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """chi^lam evaluated on the conjugacy class of cycle type ``mu``."""
    lam, mu = canonical(lam), canonical(mu)
    if sum(lam) != sum(mu):
        raise ValueError(
            f"weight mismatch: irrep {format_partition(lam)} has weight {sum(lam)}, "
            f"class {format_partition(mu)} has weight {sum(mu)}"
        )
    # largest part of mu removed first, so mu stays sorted through the recursion
    return _mn(lam, mu)


@dataclass(frozen=True)
class CharacterTable:
    n_elements: int
    partitions: tuple[Partition, ...]
    values: dict[tuple[Partition, Partition], int]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.values[key]

    def row(self, lam: Partition) -> list[int]:
        return [self.values[lam, mu] for mu in self.partitions]


def character_table(n: int) -> CharacterTable:
    parts = tuple(enumerate_partitions(n))
    values = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
    return CharacterTable(n, parts, values)
