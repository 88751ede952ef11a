from collections import Counter
from itertools import permutations as iter_perms

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayley_kernel.symgroup import (
    EnumerationCapError,
    Permutation,
    cayley_distance,
    compose,
    cycle_type,
    embed,
    enumerate_group,
    identity,
    inverse,
    num_cycles,
    transposition,
)
from cayley_kernel.verification import bfs_distances

from conftest import permutations

P = Permutation


def t(n, i, j):
    return transposition(n, i, j)


def test_identity():
    assert identity(3).images == (1, 2, 3)
    assert identity(1).images == (1,)
    assert num_cycles(identity(4)) == 4
    with pytest.raises(ValueError):
        identity(0)


def test_transposition():
    assert t(3, 1, 2) == P((2, 1, 3))
    assert compose(t(3, 1, 2), t(3, 1, 2)) == identity(3)
    assert num_cycles(t(5, 2, 4)) == 4
    for bad in [(3, 1, 1), (3, 0, 2), (3, 1, 4)]:
        with pytest.raises(ValueError):
            transposition(*bad)


def test_compose_right_factor_first():
    assert compose(t(3, 1, 2), compose(t(3, 2, 3), t(3, 1, 3))) == P((1, 3, 2))
    a, b = P((2, 3, 1)), P((1, 3, 2))
    assert compose(a, b)(2) == a(b(2))
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_inverse():
    assert inverse(P((2, 3, 1))) == P((3, 1, 2))
    assert compose(P((2, 3, 1)), P((3, 1, 2))) == identity(3)
    assert inverse(identity(4)) == identity(4)
    assert inverse(t(4, 1, 3)) == t(4, 1, 3)


def test_num_cycles_and_type():
    assert num_cycles(P((2, 3, 1))) == 1
    chord_word_perm = compose(t(3, 1, 2), compose(t(3, 2, 3), t(3, 1, 3)))
    assert num_cycles(chord_word_perm) == 2
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert cycle_type(P((2, 3, 1))) == (3,)
    assert cycle_type(t(5, 2, 4)) == (2, 1, 1, 1)


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        P((1, 1, 2))
    with pytest.raises(ValueError):
        P(())


def test_text_form_round_trip():
    assert str(P((2, 3, 1))) == "2,3,1"
    assert P.parse("2,3,1") == P((2, 3, 1))
    assert P((2, 3, 1)).cycle_notation() == "(1 2 3)"


# basis order and matrix printed for the Cayley graph of Sym(3)
SYM3_BASIS = ["123", "213", "132", "321", "312", "231"]
SYM3_DISTANCES = [
    [0, 1, 1, 1, 2, 2],
    [1, 0, 2, 2, 1, 1],
    [1, 2, 0, 2, 1, 1],
    [1, 2, 2, 0, 1, 1],
    [2, 1, 1, 1, 0, 2],
    [2, 1, 1, 1, 2, 0],
]


def test_sym3_distance_matrix():
    basis = [P(tuple(int(c) for c in s)) for s in SYM3_BASIS]
    got = [[cayley_distance(a, b) for b in basis] for a in basis]
    assert got == SYM3_DISTANCES
    assert cayley_distance(identity(3), identity(3)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_cayley_formula_matches_bfs(n):
    for (a, b), d in bfs_distances(n).items():
        assert cayley_distance(a, b) == d


def test_enumerate_group():
    assert len(enumerate_group(3)) == 6
    assert enumerate_group(1) == [identity(1)]
    group = enumerate_group(4)
    assert len(set(group)) == 24
    assert group == sorted(group)
    types = Counter(cycle_type(s) for s in enumerate_group(3))
    assert types == {(1, 1, 1): 1, (2, 1): 3, (3,): 2}


def test_enumeration_cap(monkeypatch):
    with pytest.raises(EnumerationCapError):
        enumerate_group(9)
    assert len(enumerate_group(4, cap=4)) == 24
    monkeypatch.setenv("CAYLEY_MAX_ENUM", "3")
    with pytest.raises(EnumerationCapError):
        enumerate_group(4)


@given(permutations())
def test_inverse_is_two_sided(s):
    e = identity(s.n_elements)
    assert compose(s, inverse(s)) == e == compose(inverse(s), s)
    assert compose(s, e) == s == compose(e, s)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(*[permutations(n=n)] * 3)))
def test_distance_laws(triple):
    tau, a, b = triple
    assert cayley_distance(compose(tau, a), compose(tau, b)) == cayley_distance(a, b)
    assert cayley_distance(embed(a, a.n_elements + 1), embed(b, b.n_elements + 1)) == cayley_distance(a, b)
    assert (cayley_distance(a, b) == 0) == (a == b)
    assert cayley_distance(a, b) == cayley_distance(b, a)
    assert cayley_distance(a, tau) <= cayley_distance(a, b) + cayley_distance(b, tau)


def test_cycle_count_by_brute_orbits():
    for images in iter_perms(range(1, 6)):
        s = P(images)
        orbits = {frozenset(_orbit(s, k)) for k in range(1, 6)}
        assert num_cycles(s) == len(orbits)


def _orbit(s, k):
    out, x = {k}, s(k)
    while x != k:
        out.add(x)
        x = s(x)
    return out
