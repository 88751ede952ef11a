"""Property checks aggregated by ``cayley-kernel verify``.

Each check returns a ``CheckResult``; ``run_all`` runs them in a fixed order.
Randomised checks draw from a seeded ``random.Random`` so reports are
reproducible byte for byte.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from . import chords, kernel, oracle, partitions, schur, symgroup
from .chords import Chord, ChordWord, DiagramCombination, GaussianRational

DEFAULT_SEED = 20200815


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}{extra}"


# --- random objects --------------------------------------------------------------


def random_word(rng: random.Random, n_strands: int, max_len: int = 6) -> ChordWord:
    chords_ = []
    if n_strands < 2:
        return ChordWord(n_strands)
    for _ in range(rng.randint(0, max_len)):
        i, j = rng.sample(range(1, n_strands + 1), 2)
        chords_.append(Chord(i, j))
    return ChordWord(n_strands, tuple(chords_))


def random_gaussian(rng: random.Random, max_den: int = 9, max_num: int = 9) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)),
        Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)),
    )


def random_combination(
    rng: random.Random, n_strands: int, max_terms: int = 6, max_den: int = 9
) -> DiagramCombination:
    terms = [
        (random_word(rng, n_strands), random_gaussian(rng, max_den))
        for _ in range(rng.randint(1, max_terms))
    ]
    return DiagramCombination(n_strands, terms)


def four_t_element(
    n_strands: int, i: int, j: int, k: int, prefix: ChordWord, suffix: ChordWord
) -> DiagramCombination:
    """prefix . [(ik)(ij) + (jk)(ij) - (ij)(ik) - (ij)(jk)] . suffix."""

    def w(*pairs):
        return chords.concat(chords.concat(prefix, ChordWord(n_strands, pairs)), suffix)

    return DiagramCombination(
        n_strands,
        [
            (w((i, k), (i, j)), 1),
            (w((j, k), (i, j)), 1),
            (w((i, j), (i, k)), -1),
            (w((i, j), (j, k)), -1),
        ],
    )


# --- brute force helpers ---------------------------------------------------------


def bfs_distances(n: int) -> dict[tuple[symgroup.Permutation, symgroup.Permutation], int]:
    """All-pairs shortest paths in the Cayley graph of Sym(n) generated by all transpositions."""
    group = symgroup.enumerate_group(n)
    gens = [symgroup.transposition(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = {}
    for source in group:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for t in gens:
                y = symgroup.compose(x, t)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for target, d in dist.items():
            out[source, target] = d
    return out


# --- checks ----------------------------------------------------------------------


def check_cayley_formula(max_n: int = 5) -> str:
    for n in range(1, max_n + 1):
        for (a, b), d in bfs_distances(n).items():
            if symgroup.cayley_distance(a, b) != d:
                raise AssertionError(f"N={n}: d({a}, {b}) formula != BFS {d}")
    return f"N<={max_n}"


def check_distance_laws(rng: random.Random, trials: int = 200) -> str:
    for _ in range(trials):
        n = rng.randint(1, 7)
        t, a, b, c = (symgroup.Permutation(tuple(rng.sample(range(1, n + 1), n))) for _ in range(4))
        d = symgroup.cayley_distance
        if d(symgroup.compose(t, a), symgroup.compose(t, b)) != d(a, b):
            raise AssertionError(f"left invariance fails for {t}, {a}, {b}")
        if d(symgroup.embed(a, n + 1), symgroup.embed(b, n + 1)) != d(a, b):
            raise AssertionError(f"inclusion changes d({a}, {b})")
        if (d(a, b) == 0) != (a == b) or d(a, b) != d(b, a):
            raise AssertionError(f"metric axioms fail for {a}, {b}")
        if d(a, c) > d(a, b) + d(b, c):
            raise AssertionError(f"triangle inequality fails for {a}, {b}, {c}")
    return f"{trials} random triples"


def check_character_tables(max_n: int = 8) -> str:
    for n in range(1, max_n + 1):
        table = partitions.character_table(n)
        parts = table.partitions
        if sum(partitions.class_size(mu) for mu in parts) != factorial(n):
            raise AssertionError(f"N={n}: class sizes do not sum to N!")
        for lam in parts:
            if table[lam, (1,) * n] != partitions.dimension(lam):
                raise AssertionError(f"N={n}: chi^{lam}(e) != hook length dimension")
        for mu in parts:
            for nu in parts:
                s = sum(table[lam, mu] * table[lam, nu] for lam in parts)
                expected = partitions.centralizer_order(mu) if mu == nu else 0
                if s != expected:
                    raise AssertionError(f"N={n}: column orthogonality fails at {mu}, {nu}")
        for lam in parts:
            for kap in parts:
                s = sum(partitions.class_size(mu) * table[lam, mu] * table[kap, mu] for mu in parts)
                if s != (factorial(n) if lam == kap else 0):
                    raise AssertionError(f"N={n}: row orthogonality fails at {lam}, {kap}")
    return f"N<={max_n}"


def check_polynomial_identities(max_enum: int = 7, max_points: int = 12) -> str:
    for n in range(1, max_enum + 1):
        if not kernel.verify_polynomial_identities(n, "enumerate").ok:
            raise AssertionError(f"N={n}: coefficient vectors differ")
    for n in range(1, max_points + 1):
        if not kernel.verify_polynomial_identities(n, "points").ok:
            raise AssertionError(f"N={n}: point evaluations differ")
    return f"enumerate N<={max_enum}, points N<={max_points}"


def check_sym3_closed_forms() -> str:
    for q in map(Fraction, (Fraction(1, 2), 1, Fraction(3, 2), 2, 3, 10)):
        spec = kernel.spectrum(3, q)
        expected = {
            (3,): ((q * q + 3 * q + 2) / (q * q), 1),
            (1, 1, 1): ((q * q - 3 * q + 2) / (q * q), 1),
            (2, 1): ((q * q - 1) / (q * q), 4),
        }
        got = {lam: (e.eigenvalue, e.multiplicity) for lam, e in spec.entries.items()}
        if got != expected:
            raise AssertionError(f"exp_beta={q}: {got} != {expected}")
    return "6 points"


def check_spectrum_identities(max_n: int = 9) -> str:
    points = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3), Fraction(5)]
    for n in range(1, max_n + 1):
        for q in points:
            spec = kernel.spectrum(n, q)
            if spec.total_multiplicity() != factorial(n) or spec.trace() != factorial(n):
                raise AssertionError(f"N={n}, exp_beta={q}: trace identity fails")
            if spec[(n,)] != kernel.eigenvalue_trivial(n, q):
                raise AssertionError(f"N={n}, exp_beta={q}: trivial eigenvalue mismatch")
            if spec[(1,) * n] != kernel.eigenvalue_sign(n, q):
                raise AssertionError(f"N={n}, exp_beta={q}: sign eigenvalue mismatch")
            r = kernel.gershgorin_bound(n, q).radius
            if any(not (1 - r <= e.eigenvalue <= 1 + r) for e in spec.entries.values()):
                raise AssertionError(f"N={n}, exp_beta={q}: eigenvalue outside Gershgorin interval")
    return f"N<={max_n}"


def check_zero_law(max_n: int = 10) -> str:
    for n in range(2, max_n + 1):
        for m in range(1, n):
            spec = kernel.spectrum(n, m)
            for lam, e in spec.entries.items():
                if (e.eigenvalue == 0) != (len(lam) > m) or e.eigenvalue < 0:
                    raise AssertionError(f"N={n}, exp_beta={m}: eig[{lam}] = {e.eigenvalue}")
        if spec.min_eigenvalue() != 0:
            raise AssertionError(f"N={n}: no zero eigenvalue at exp_beta={n - 1}")
        if kernel.spectrum(n, n).min_eigenvalue() <= 0:
            raise AssertionError(f"N={n}: not positive definite at exp_beta=N")
    return f"N<={max_n}"


def check_oracle(max_n: int = 5, tol: float = 1e-8) -> str:
    worst = 0.0
    for n in range(2, max_n + 1):
        for q in (0.7, 1.0, 1.5, 2.0, 2.718, 3.0, 5.0):
            dense = oracle.brute_spectrum(n, q).eigenvalues
            fast = kernel.spectrum(n, q).eigenvalues()
            err = max(abs(a - b) for a, b in zip(dense, fast))
            worst = max(worst, err)
            if len(dense) != len(fast) or err > tol:
                raise AssertionError(f"N={n}, exp_beta={q}: max deviation {err:.3e}")
    return f"max deviation {worst:.1e}"


def check_schur(max_n: int = 6) -> str:
    for n in range(1, max_n + 1):
        for lam in partitions.enumerate_partitions(n):
            for m in range(1, n + 1):
                count = schur.count_ssyt(lam, m)
                if count != schur.schur_frobenius_specialized(lam, m):
                    raise AssertionError(f"s_{lam}(1^{m}): tableaux {count} != Frobenius")
                if (count == 0) != (len(lam) > m):
                    raise AssertionError(f"s_{lam}(1^{m}) zero-row law fails")
                if schur.eigenvalue_via_ssyt(lam, m) != kernel.spectrum(n, m)[lam]:
                    raise AssertionError(f"N={n}, exp_beta={m}: eig[{lam}] != tableau count formula")
    return f"N<={max_n}"


def check_weight_systems(rng: random.Random, trials: int = 200) -> str:
    for _ in range(trials):
        n_strands = rng.randint(2, 5)
        n = rng.randint(1, 4)
        w = random_word(rng, n_strands)
        if oracle.tensor_trace_weight(w, n) != chords.weight_gl_n(w, n):
            raise AssertionError(f"tensor trace != weight for {w} at n={n}")
        if chords.perm(chords.star(w)) != symgroup.inverse(chords.perm(w)):
            raise AssertionError(f"perm(star w) != perm(w)^-1 for {w}")
    return f"{trials} random words"


def check_state_positivity(rng: random.Random, trials: int = 100) -> str:
    for _ in range(trials):
        n_strands = rng.randint(1, 5)
        a = random_combination(rng, n_strands)
        for n in range(1, 6):
            v = chords.state_eval(a, a, n)
            if not v.is_real() or v.re < 0:
                raise AssertionError(f"state_eval(A, A, {n}) = {v} for {a}")
    return f"{trials} random combinations, n<=5"


def check_chord_relations(rng: random.Random, trials: int = 100) -> str:
    for _ in range(trials):
        n_strands = rng.randint(4, 5)
        u, v = random_word(rng, n_strands, 3), random_word(rng, n_strands, 3)
        i, j, k, l = rng.sample(range(1, n_strands + 1), 4)
        lhs = chords.concat(chords.concat(u, ChordWord(n_strands, ((i, j), (k, l)))), v)
        rhs = chords.concat(chords.concat(u, ChordWord(n_strands, ((k, l), (i, j)))), v)
        b = random_combination(rng, n_strands, 3)
        x, y, z = rng.sample(range(1, n_strands + 1), 3)
        four_t = four_t_element(n_strands, x, y, z, u, v)
        for n in range(1, 6):
            if chords.state_eval(b, DiagramCombination.of(lhs), n) != chords.state_eval(
                b, DiagramCombination.of(rhs), n
            ):
                raise AssertionError(f"2T relation not annihilated: {lhs} vs {rhs}")
            if not chords.weight_combination(four_t, n).is_zero():
                raise AssertionError(f"4T element not annihilated at n={n}")
    return f"{trials} random instances, n<=5"


def check_sym3_phases() -> str:
    expected = {
        Fraction(1): kernel.Phase.POSITIVE_SEMI_DEFINITE,
        Fraction(3, 2): kernel.Phase.INDEFINITE,
        Fraction(2): kernel.Phase.POSITIVE_SEMI_DEFINITE,
        Fraction(3): kernel.Phase.POSITIVE_DEFINITE,
        Fraction(4): kernel.Phase.POSITIVE_DEFINITE,
    }
    for q, phase in expected.items():
        got = kernel.classify_phase(3, q)
        if got.verdict is not phase or got.computed.verdict is not phase:
            raise AssertionError(f"exp_beta={q}: {got.verdict.value}, expected {phase.value}")
    return "5 points"


def check_interlacing(max_n: int = 6, tol: float = 1e-10) -> str:
    grid = [0.5 + 0.3 * k for k in range(20)]
    for q in grid:
        lows = [kernel.spectrum(n, q).min_eigenvalue() for n in range(2, max_n + 1)]
        for a, b in zip(lows, lows[1:]):
            if b > a + tol:
                raise AssertionError(f"exp_beta={q}: min eigenvalue increases {a} -> {b}")
    return f"N=2..{max_n}, 20 points"


def checks(seed: int = DEFAULT_SEED) -> Iterator[tuple[str, Callable[[], str]]]:
    rng = random.Random(seed)
    yield "symgroup.cayley_formula_bfs", check_cayley_formula
    yield "symgroup.distance_laws", lambda: check_distance_laws(rng)
    yield "partitions.character_tables", check_character_tables
    yield "kernel.polynomial_identities", check_polynomial_identities
    yield "kernel.sym3_closed_forms", check_sym3_closed_forms
    yield "kernel.spectrum_identities", check_spectrum_identities
    yield "kernel.zero_eigenvalue_law", check_zero_law
    yield "kernel.sym3_phase_table", check_sym3_phases
    yield "kernel.interlacing", check_interlacing
    yield "oracle.dense_spectrum", check_oracle
    yield "schur.certificates", check_schur
    yield "chords.weight_vs_tensor_trace", lambda: check_weight_systems(rng)
    yield "chords.state_positivity", lambda: check_state_positivity(rng)
    yield "chords.2t_4t_annihilation", lambda: check_chord_relations(rng)


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    results = []
    for name, fn in checks(seed):
        start = time.perf_counter()
        try:
            detail = fn()
            passed = True
        except AssertionError as exc:
            detail, passed = str(exc), False
        results.append(CheckResult(name, passed, detail, time.perf_counter() - start))
    return results
