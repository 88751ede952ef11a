"""Horizontal chord diagrams on N strands and the fundamental gl(n) weight systems.

A diagram is a word of chords ``(i, j)`` with ``i < j``; multiplication is
concatenation and the star-involution reverses the word. Each chord maps to
the transposition of its two strands, and the fundamental gl(n) weight
system sends a word to ``n ** (#cycles(perm(word)) - N)``.

The 2T/4T quotient is never normalised; weight systems factor through
``perm``, which is what the test-suite checks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .symgroup import (
    Permutation,
    cayley_distance,
    compose,
    identity,
    num_cycles,
    transposition,
)

Rational = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Chord:
    i: int
    j: int

    def __post_init__(self) -> None:
        i, j = int(self.i), int(self.j)
        if i == j:
            raise ValueError(f"a chord needs two distinct strands, got ({i},{j})")
        if min(i, j) < 1:
            raise ValueError(f"strand indices start at 1, got ({i},{j})")
        object.__setattr__(self, "i", min(i, j))
        object.__setattr__(self, "j", max(i, j))

    def __str__(self) -> str:
        return f"{self.i},{self.j}"


@dataclass(frozen=True, order=True)
class ChordWord:
    n_strands: int
    chords: tuple[Chord, ...] = ()

    def __post_init__(self) -> None:
        if self.n_strands < 1:
            raise ValueError(f"need at least one strand, got {self.n_strands}")
        chords = tuple(c if isinstance(c, Chord) else Chord(*c) for c in self.chords)
        for c in chords:
            if c.j > self.n_strands:
                raise ValueError(f"chord ({c}) exceeds {self.n_strands} strands")
        object.__setattr__(self, "chords", chords)

    @classmethod
    def parse(cls, text: str, n_strands: int) -> ChordWord:
        """Parse whitespace-separated ``i,j`` pairs; the empty string is the unit."""
        chords = []
        for token in text.split():
            m = re.fullmatch(r"(\d+),(\d+)", token)
            if m is None:
                raise ValueError(f"bad chord {token!r}, expected 'i,j'")
            chords.append(Chord(int(m[1]), int(m[2])))
        return cls(n_strands, tuple(chords))

    def __len__(self) -> int:
        return len(self.chords)

    def __iter__(self) -> Iterator[Chord]:
        return iter(self.chords)

    def __str__(self) -> str:
        return " ".join(map(str, self.chords))

    def __mul__(self, other: ChordWord) -> ChordWord:
        return concat(self, other)


def unit(n_strands: int) -> ChordWord:
    return ChordWord(n_strands, ())


def concat(a: ChordWord, b: ChordWord) -> ChordWord:
    if a.n_strands != b.n_strands:
        raise ValueError(f"strand count mismatch: {a.n_strands} vs {b.n_strands}")
    return ChordWord(a.n_strands, a.chords + b.chords)


def star(w: ChordWord) -> ChordWord:
    return ChordWord(w.n_strands, w.chords[::-1])


def perm(w: ChordWord) -> Permutation:
    """t_{i1 j1} o t_{i2 j2} o ... o t_{id jd}; the rightmost chord acts first."""
    result = identity(w.n_strands)
    for c in reversed(w.chords):
        result = compose(transposition(w.n_strands, c.i, c.j), result)
    return result


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"gl(n) needs n >= 1, got {n}")


def weight_gl_n(w: ChordWord, n: int) -> Fraction:
    """Value of the normalised fundamental gl(n) weight system on a single diagram."""
    _check_n(n)
    return Fraction(n) ** (num_cycles(perm(w)) - w.n_strands)


@dataclass(frozen=True)
class GaussianRational:
    """An exact complex number ``re + i*im`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x: GaussianRational | Rational) -> GaussianRational:
        return x if isinstance(x, GaussianRational) else cls(Fraction(x))

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``"re,im"`` where each part is an integer, ``p/q`` or a decimal."""
        pieces = text.split(",")
        if len(pieces) != 2:
            raise ValueError(f"bad Gaussian rational {text!r}, expected 're,im'")
        try:
            return cls(Fraction(pieces[0].strip()), Fraction(pieces[1].strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad Gaussian rational {text!r}") from None

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


class DiagramCombination:
    """A finite linear combination of chord words with Gaussian-rational coefficients."""

    def __init__(
        self,
        n_strands: int,
        terms: Mapping[ChordWord, GaussianRational | Rational] | Iterable = (),
    ):
        self.n_strands = n_strands
        self.terms: dict[ChordWord, GaussianRational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            self._add_term(word, GaussianRational.coerce(coeff))

    def _add_term(self, word: ChordWord, coeff: GaussianRational) -> None:
        if word.n_strands != self.n_strands:
            raise ValueError(f"strand count mismatch: {word.n_strands} vs {self.n_strands}")
        total = self.terms.get(word, GaussianRational()) + coeff
        if total.is_zero():
            self.terms.pop(word, None)
        else:
            self.terms[word] = total

    @classmethod
    def of(cls, word: ChordWord, coeff: GaussianRational | Rational = 1) -> DiagramCombination:
        return cls(word.n_strands, [(word, coeff)])

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramCombination):
            return NotImplemented
        return self.n_strands == other.n_strands and self.terms == other.terms

    def __add__(self, other: DiagramCombination) -> DiagramCombination:
        out = DiagramCombination(self.n_strands, self.terms)
        for word, coeff in other:
            out._add_term(word, coeff)
        return out

    def scale(self, c: GaussianRational | Rational) -> DiagramCombination:
        return DiagramCombination(self.n_strands, [(w, a * c) for w, a in self])

    def __neg__(self) -> DiagramCombination:
        return self.scale(-1)

    def __sub__(self, other: DiagramCombination) -> DiagramCombination:
        return self + (-other)

    def __mul__(self, other: DiagramCombination) -> DiagramCombination:
        out = DiagramCombination(self.n_strands)
        for wa, a in self:
            for wb, b in other:
                out._add_term(concat(wa, wb), a * b)
        return out

    def star(self) -> DiagramCombination:
        """Antilinear extension of word reversal."""
        return DiagramCombination(self.n_strands, [(star(w), a.conjugate()) for w, a in self])

    def __repr__(self) -> str:
        body = " + ".join(f"({a})[{w}]" for w, a in self.terms.items()) or "0"
        return f"DiagramCombination(N={self.n_strands}: {body})"


def weight_combination(a: DiagramCombination, n: int) -> GaussianRational:
    """Linear extension of ``weight_gl_n``."""
    _check_n(n)
    total = GaussianRational()
    for word, coeff in a:
        total = total + coeff * weight_gl_n(word, n)
    return total


def state_eval(a: DiagramCombination, b: DiagramCombination, n: int) -> GaussianRational:
    """The sesquilinear form w(a* . b) of the gl(n) weight system.

    Evaluated through the Cayley distance kernel,
    sum_{i,j} conj(a_i) b_j n^(-d(perm a_i, perm b_j)).
    """
    if a.n_strands != b.n_strands:
        raise ValueError(f"strand count mismatch: {a.n_strands} vs {b.n_strands}")
    _check_n(n)
    perms_a = [(perm(w), c.conjugate()) for w, c in a]
    perms_b = [(perm(w), c) for w, c in b]
    total = GaussianRational()
    for pa, ca in perms_a:
        for pb, cb in perms_b:
            total = total + ca * cb * Fraction(1, n ** cayley_distance(pa, pb))
    return total


def state_eval_via_words(a: DiagramCombination, b: DiagramCombination, n: int) -> GaussianRational:
    """Same form as ``state_eval``, computed as the weight of the product a* . b."""
    return weight_combination(a.star() * b, n)

