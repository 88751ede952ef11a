"""Permutations of {1, ..., N} in one-line notation.

Composition is right-factor-first: ``compose(a, b)(k) == a(b(k))``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import factorial
from typing import Iterator

DEFAULT_ENUM_CAP = 8


class EnumerationCapError(ValueError):
    """Raised when a request would materialize N! objects beyond the cap."""


def enumeration_cap() -> int:
    """Largest N for which full-group enumeration is allowed.

    Overridable through the ``CAYLEY_MAX_ENUM`` environment variable.
    """
    raw = os.environ.get("CAYLEY_MAX_ENUM")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CAYLEY_MAX_ENUM must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"CAYLEY_MAX_ENUM must be positive, got {cap}")
    return cap


def check_enumeration_cap(n: int, cap: int | None = None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise EnumerationCapError(
            f"N={n} exceeds the enumeration cap {limit} ({factorial(n)} elements)"
        )


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..N}; ``images[k-1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError("a permutation needs at least one element")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n_elements(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse the comma-separated one-line form, e.g. ``"2,3,1"``."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}: {exc}") from None

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points included, each starting at its least element."""
        seen = [False] * (self.n_elements + 1)
        out = []
        for start in range(1, self.n_elements + 1):
            if seen[start]:
                continue
            cyc = []
            k = start
            while not seen[k]:
                seen[k] = True
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    """The permutation of {1..n} swapping ``i`` and ``j``."""
    if i == j:
        raise ValueError(f"transposition needs distinct indices, got {i} twice")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices {i}, {j} out of range 1..{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def _check_same_size(a: Permutation, b: Permutation) -> None:
    if a.n_elements != b.n_elements:
        raise ValueError(
            f"permutations act on different sets: N={a.n_elements} vs N={b.n_elements}"
        )


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    _check_same_size(outer, inner)
    o = outer.images
    return Permutation(tuple(o[k - 1] for k in inner.images))


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * sigma.n_elements
    for k, image in enumerate(sigma.images, start=1):
        inv[image - 1] = k
    return Permutation(tuple(inv))


def num_cycles(sigma: Permutation) -> int:
    return len(sigma.cycles())


def cycle_type(sigma: Permutation) -> tuple[int, ...]:
    """Cycle lengths in weakly decreasing order (a partition of N)."""
    return tuple(sorted((len(c) for c in sigma.cycles()), reverse=True))


def sign(sigma: Permutation) -> int:
    return -1 if (sigma.n_elements - num_cycles(sigma)) % 2 else 1


def cayley_distance(s1: Permutation, s2: Permutation) -> int:
    """Minimal number of transpositions turning ``s1`` into ``s2``.

    Computed as N minus the number of cycles of ``s1^-1 s2``.
    """
    _check_same_size(s1, s2)
    return s1.n_elements - num_cycles(compose(inverse(s1), s2))


def embed(sigma: Permutation, n: int) -> Permutation:
    """Extend ``sigma`` to {1..n} by fixing the extra points."""
    if n < sigma.n_elements:
        raise ValueError(f"cannot embed Sym({sigma.n_elements}) into Sym({n})")
    return Permutation(sigma.images + tuple(range(sigma.n_elements + 1, n + 1)))


def iter_group(n: int) -> Iterator[Permutation]:
    """All of Sym(n) in lexicographic one-line order (no cap check)."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def enumerate_group(n: int, cap: int | None = None) -> list[Permutation]:
    """All N! permutations, lexicographically ordered by one-line form."""
    check_enumeration_cap(n, cap)
    return list(iter_group(n))

