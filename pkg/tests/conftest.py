from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cayley_kernel.chords import Chord, ChordWord
from cayley_kernel.symgroup import Permutation


def exact_rank(rows):
    """Rank of a matrix of Fractions by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


@st.composite
def permutations(draw, min_n=1, max_n=7, n=None):
    size = n if n is not None else draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, size + 1)))))


@st.composite
def chord_words(draw, n_strands=None, min_strands=2, max_strands=5, max_len=6):
    n = n_strands if n_strands is not None else draw(st.integers(min_strands, max_strands))
    pairs = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1])
    chords = draw(st.lists(pairs, max_size=max_len))
    return ChordWord(n, tuple(Chord(i, j) for i, j in chords))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # lets fixtures see whether the test body passed
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
