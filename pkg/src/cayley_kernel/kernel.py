"""The Cayley distance kernel exp(-beta * d_C) on Sym(N) and its spectrum.

Temperatures are given as ``exp_beta = e^beta``. A ``Fraction`` (or int)
selects exact mode and every eigenvalue is an exact rational; a ``float``
selects numeric mode, where exact zeros cannot be told apart from round-off
and semi-definiteness is never reported from computation alone.

The spectrum is indexed by partitions lambda of N:

    eig_lambda = q^-N / dim(lambda) * sum_mu |C_mu| q^len(mu) chi^lambda(mu)

with multiplicity dim(lambda)^2, summed over conjugacy classes instead of
over the N! group elements.
"""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .partitions import (
    Partition,
    character,
    class_sign,
    class_size,
    dimension,
    enumerate_partitions,
    format_partition,
)
from .symgroup import check_enumeration_cap, iter_group, num_cycles, sign

ExpBeta = Union[Fraction, float]
Value = Union[Fraction, float]

NUMERIC_ZERO_RTOL = 1e-9


def as_exp_beta(x: int | Fraction | float | str) -> ExpBeta:
    """Normalise a temperature point: exact ``Fraction`` or numeric ``float``.

    Strings of the form ``"p/q"`` or plain integers are exact; strings with a
    decimal point or exponent are numeric.
    """
    if isinstance(x, str):
        text = x.strip()
        try:
            if "/" in text or text.lstrip("+-").isdigit():
                value: ExpBeta = Fraction(text)
            else:
                value = float(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse exp_beta {x!r}") from None
    elif isinstance(x, bool):
        raise TypeError("exp_beta cannot be a bool")
    elif isinstance(x, (int, Fraction)):
        value = Fraction(x)
    elif isinstance(x, float):
        value = x
    else:
        raise TypeError(f"unsupported exp_beta type {type(x).__name__}")
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"exp_beta must be finite, got {value}")
    if value <= 0:
        raise ValueError(f"exp_beta must be positive, got {value}")
    return value


def is_exact(q: ExpBeta) -> bool:
    return isinstance(q, Fraction)


def format_value(x: Value) -> str:
    """Exact values as ``p/q`` (or an integer), floats via ``repr``."""
    return str(x) if isinstance(x, Fraction) else repr(float(x))


# --- dense matrix ----------------------------------------------------------------


def cayley_distance_matrix(n: int) -> np.ndarray:
    """Integer matrix of Cayley distances over Sym(n) in lexicographic order."""
    check_enumeration_cap(n)
    group = list(iter_group(n))
    perms = np.array([p.images for p in group], dtype=np.int64) - 1
    inv = np.argsort(perms, axis=1)
    # product[a, b, k] = (sigma_a^-1 o sigma_b)(k)
    product = inv[np.arange(len(group))[:, None, None], perms[None, :, :]]
    base = n ** np.arange(n)[::-1]
    codes = product @ base
    lookup = np.zeros(n**n, dtype=np.int64)
    lookup[perms @ base] = [num_cycles(p) for p in group]
    return n - lookup[codes]


def kernel_matrix(n: int, exp_beta) -> list[list[Value]]:
    """Entries exp_beta^-d(s1, s2) over Sym(n), rows and columns in lexicographic order."""
    q = as_exp_beta(exp_beta)
    dist = cayley_distance_matrix(n)
    powers = [q**-d for d in range(n)]
    return [[powers[d] for d in row] for row in dist.tolist()]


def kernel_matrix_array(n: int, exp_beta) -> np.ndarray:
    q = float(as_exp_beta(exp_beta))
    return q ** -cayley_distance_matrix(n).astype(float)


# --- spectrum --------------------------------------------------------------------


@lru_cache(maxsize=None)
def cycle_count_polynomials(n: int) -> dict[Partition, tuple[int, ...]]:
    """For each irrep lambda, integer coefficients c_k of sum_sigma chi^lambda(sigma) x^#cycles(sigma).

    ``c[k]`` multiplies ``x**k``; index 0 is always 0.
    """
    classes = enumerate_partitions(n)
    out = {}
    for lam in classes:
        coeffs = [0] * (n + 1)
        for mu in classes:
            coeffs[len(mu)] += class_size(mu) * character(lam, mu)
        out[lam] = tuple(coeffs)
    return out


def _eval_scaled(coeffs: Sequence[int], q: ExpBeta, n: int) -> Value:
    """sum_k c_k q^(k - n)."""
    if isinstance(q, Fraction):
        return sum((c * q ** (k - n) for k, c in enumerate(coeffs) if c), Fraction(0))
    return math.fsum(c * q ** (k - n) for k, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: Value
    multiplicity: int


@dataclass(frozen=True)
class KernelSpectrum:
    n_elements: int
    exp_beta: ExpBeta
    entries: dict[Partition, SpectrumEntry]

    @property
    def exact(self) -> bool:
        return is_exact(self.exp_beta)

    def __getitem__(self, lam: Partition) -> Value:
        return self.entries[lam].eigenvalue

    def min_entry(self) -> tuple[Partition, Value]:
        """Smallest eigenvalue and the first partition (in enumeration order) achieving it."""
        lam = min(self.entries, key=lambda p: self.entries[p].eigenvalue)
        return lam, self.entries[lam].eigenvalue

    def min_eigenvalue(self) -> Value:
        return self.min_entry()[1]

    def trace(self) -> Value:
        return sum(e.multiplicity * e.eigenvalue for e in self.entries.values())

    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries.values())

    def eigenvalues(self) -> list[Value]:
        """All N! eigenvalues, repeated by multiplicity, ascending."""
        out: list[Value] = []
        for e in self.entries.values():
            out.extend([e.eigenvalue] * e.multiplicity)
        return sorted(out)

    def to_json(self) -> dict:
        q = self.exp_beta
        return {
            "N": self.n_elements,
            "exp_beta": str(q) if isinstance(q, Fraction) else q,
            "eigenvalues": [
                {
                    "partition": format_partition(lam),
                    "value": str(e.eigenvalue) if isinstance(e.eigenvalue, Fraction) else e.eigenvalue,
                    "multiplicity": e.multiplicity,
                }
                for lam, e in self.entries.items()
            ],
        }


def eigenvalue(lam: Partition, exp_beta) -> Value:
    """Single kernel eigenvalue for the irrep ``lam`` of Sym(|lam|)."""
    q = as_exp_beta(exp_beta)
    n = sum(lam)
    return _eval_scaled(cycle_count_polynomials(n)[tuple(lam)], q, n) / dimension(lam)


def spectrum(n: int, exp_beta) -> KernelSpectrum:
    """Eigenvalues of the Cayley distance kernel on Sym(n), keyed by partition."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    q = as_exp_beta(exp_beta)
    entries = {}
    for lam, coeffs in cycle_count_polynomials(n).items():
        dim = dimension(lam)
        entries[lam] = SpectrumEntry(_eval_scaled(coeffs, q, n) / dim, dim * dim)
    return KernelSpectrum(n, q, entries)


def _rising(q: ExpBeta, n: int, step: int) -> Value:
    out: Value = Fraction(1) if isinstance(q, Fraction) else 1.0
    for k in range(n):
        out *= q + step * k
    return out


def eigenvalue_trivial(n: int, exp_beta) -> Value:
    """Eigenvalue on the constant function: q^-N (q)(q+1)...(q+N-1)."""
    q = as_exp_beta(exp_beta)
    return _rising(q, n, 1) / q**n


def eigenvalue_sign(n: int, exp_beta) -> Value:
    """Eigenvalue on the signature function: q^-N (q)(q-1)...(q-N+1)."""
    q = as_exp_beta(exp_beta)
    return _rising(q, n, -1) / q**n


# --- Gershgorin ------------------------------------------------------------------


@dataclass(frozen=True)
class GershgorinBound:
    n_elements: int
    exp_beta: ExpBeta
    radius: Value
    certified_positive: bool
    improved_radius: Value
    certified_positive_improved: bool
    threshold: float
    improved_threshold: float


def gershgorin_threshold(n: int, base: int = 2) -> float:
    """(N - 1) / (base^(1/N) - 1); base 2 is the plain bound, base 3 the halved-radius one."""
    return (n - 1) / (base ** (1.0 / n) - 1)


def gershgorin_bound(n: int, exp_beta) -> GershgorinBound:
    """Row sum of off-diagonal kernel entries and the resulting positivity certificates.

    ``certified_positive`` is ``radius < 1``. The improved certificate halves the
    radius, which bounds only the eigenvalues of multiplicity > 1; it also needs
    the two multiplicity-one eigenvalues positive, i.e. ``exp_beta > N - 1``.
    """
    q = as_exp_beta(exp_beta)
    r = eigenvalue_trivial(n, q) - 1
    half = r / 2
    return GershgorinBound(
        n_elements=n,
        exp_beta=q,
        radius=r,
        certified_positive=r < 1,
        improved_radius=half,
        certified_positive_improved=bool(half < 1 and q > n - 1),
        threshold=gershgorin_threshold(n, 2),
        improved_threshold=gershgorin_threshold(n, 3),
    )


# --- phases ----------------------------------------------------------------------


class Phase(str, enum.Enum):
    INDEFINITE = "Indefinite"
    POSITIVE_SEMI_DEFINITE = "PositiveSemiDefinite"
    POSITIVE_DEFINITE = "PositiveDefinite"
    UNKNOWN = "Unknown"


class Source(str, enum.Enum):
    THEOREM = "Theorem"
    COMPUTED_EXACT = "ComputedExact"
    COMPUTED_NUMERIC = "ComputedNumeric"


@dataclass(frozen=True)
class PhaseVerdict:
    verdict: Phase
    source: Source
    witness: Partition | None = None
    min_eigenvalue: Value | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "source": self.source.value}
        out["witness"] = format_partition(self.witness) if self.witness else None
        m = self.min_eigenvalue
        out["min_eigenvalue"] = str(m) if isinstance(m, Fraction) else m
        return out


class PhaseDisagreement(AssertionError):
    """Theorem-derived and computed verdicts contradict each other."""


@dataclass(frozen=True)
class PhaseClassification:
    n_elements: int
    exp_beta: ExpBeta
    theorem: PhaseVerdict
    computed: PhaseVerdict

    @property
    def verdict(self) -> Phase:
        if self.theorem.verdict is not Phase.UNKNOWN:
            return self.theorem.verdict
        return self.computed.verdict

    @property
    def agree(self) -> bool:
        a, b = self.theorem.verdict, self.computed.verdict
        return a is Phase.UNKNOWN or b is Phase.UNKNOWN or a is b

    def to_json(self) -> dict:
        q = self.exp_beta
        return {
            "N": self.n_elements,
            "exp_beta": str(q) if isinstance(q, Fraction) else q,
            "verdict": self.verdict.value,
            "agree": self.agree,
            "theorem": self.theorem.to_json(),
            "computed": self.computed.to_json(),
        }


def theorem_phase(n: int, exp_beta) -> PhaseVerdict:
    """Phase as decided by the proven results alone, or Unknown outside their reach."""
    q = as_exp_beta(exp_beta)
    x = Fraction(q)  # floats are exact binary rationals; region tests stay exact
    if x.denominator == 1:
        if 1 <= x <= n - 1:
            return PhaseVerdict(Phase.POSITIVE_SEMI_DEFINITE, Source.THEOREM)
        if x >= n:
            return PhaseVerdict(Phase.POSITIVE_DEFINITE, Source.THEOREM)
    elif x < n - 1:
        return PhaseVerdict(Phase.INDEFINITE, Source.THEOREM)
    if gershgorin_bound(n, x).certified_positive:
        return PhaseVerdict(Phase.POSITIVE_DEFINITE, Source.THEOREM)
    return PhaseVerdict(Phase.UNKNOWN, Source.THEOREM)


def computed_phase(spec: KernelSpectrum) -> PhaseVerdict:
    witness, lowest = spec.min_entry()
    if spec.exact:
        if lowest < 0:
            verdict = Phase.INDEFINITE
        elif lowest == 0:
            verdict = Phase.POSITIVE_SEMI_DEFINITE
        else:
            verdict = Phase.POSITIVE_DEFINITE
        return PhaseVerdict(verdict, Source.COMPUTED_EXACT, witness, lowest)
    scale = max(1.0, max(abs(e.eigenvalue) for e in spec.entries.values()))
    if abs(lowest) <= NUMERIC_ZERO_RTOL * scale:
        verdict = Phase.UNKNOWN
    elif lowest < 0:
        verdict = Phase.INDEFINITE
    else:
        verdict = Phase.POSITIVE_DEFINITE
    return PhaseVerdict(verdict, Source.COMPUTED_NUMERIC, witness, lowest)


def classify_phase(n: int, exp_beta, *, strict: bool = True) -> PhaseClassification:
    """Theorem verdict and computed verdict side by side.

    With ``strict`` a contradiction between the two raises ``PhaseDisagreement``.
    """
    q = as_exp_beta(exp_beta)
    result = PhaseClassification(n, q, theorem_phase(n, q), computed_phase(spectrum(n, q)))
    if strict and not result.agree:
        raise PhaseDisagreement(
            f"N={n}, exp_beta={q}: theorem says {result.theorem.verdict.value}, "
            f"computation says {result.computed.verdict.value}"
        )
    return result


# --- sweeps ----------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    exp_beta: ExpBeta
    min_eig: Value
    scaled_min_eig: Value


def _sweep_point(args: tuple[int, ExpBeta, int]) -> SweepRow:
    n, q, exponent = args
    lowest = spectrum(n, q).min_eigenvalue()
    return SweepRow(q, lowest, lowest * q**exponent)


def sweep_min_eigenvalue(
    n: int,
    grid: Iterable,
    exponent: int | None = None,
    *,
    jobs: int = 1,
) -> list[SweepRow]:
    """Minimal eigenvalue along a grid of exp_beta values, also rescaled by exp_beta^exponent.

    The exponent defaults to N - 1. Rows come back in grid order whatever ``jobs`` is.
    """
    points = [as_exp_beta(x) for x in grid]
    exponent = n - 1 if exponent is None else exponent
    cycle_count_polynomials(n)
    tasks = [(n, q, exponent) for q in points]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_point, tasks))
    return [_sweep_point(t) for t in tasks]


def parse_grid(text: str) -> list[Fraction]:
    """``start:stop:step`` as an exact grid; ``stop`` is included when within step/2.

    Decimal literals are read exactly (``"0.05"`` is 1/20), so the points are
    ``start + k * step`` with no accumulated rounding.
    """
    pieces = text.split(":")
    if len(pieces) != 3:
        raise ValueError(f"bad grid {text!r}, expected start:stop:step")
    try:
        start, stop, step = (Fraction(p.strip()) for p in pieces)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad grid {text!r}") from None
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    if start <= 0:
        raise ValueError(f"grid must stay positive, start={start}")
    out = []
    for k in itertools.count():
        x = start + k * step
        if x > stop + step / 2:
            break
        out.append(x)
    return out


def format_grid_point(x: ExpBeta) -> str:
    """Terminating decimals for exact points (1.05, not 21/20), ``repr`` for floats."""
    if isinstance(x, float):
        return repr(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return str(x)
    digits = max(twos, fives)
    if digits == 0:
        return str(x.numerator)
    scaled = x * 10**digits
    sign_ = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign_}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")


# --- polynomial identities -------------------------------------------------------


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def shifted_product(n: int, step: int) -> list[int]:
    """Coefficients of prod_{k=0}^{n-1} (x + step*k), lowest degree first."""
    out = [1]
    for k in range(n):
        out = _poly_mul(out, [step * k, 1])
    return out


@dataclass(frozen=True)
class PolynomialIdentityReport:
    n_elements: int
    method: str
    unsigned_lhs: tuple
    unsigned_rhs: tuple
    signed_lhs: tuple
    signed_rhs: tuple
    sample_points: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return self.unsigned_lhs == self.unsigned_rhs and self.signed_lhs == self.signed_rhs


def verify_polynomial_identities(n: int, method: str = "enumerate") -> PolynomialIdentityReport:
    """Check sum_sigma x^#cycles = prod (x+k) and sum_sigma sgn x^#cycles = prod (x-k).

    ``method="enumerate"`` gathers coefficient vectors by walking all of Sym(N)
    (subject to the enumeration cap). ``method="points"`` compares both sides at
    the N+1 integers 0..N, the left side summed over conjugacy classes.
    """
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    if method == "enumerate":
        check_enumeration_cap(n)
        plain = [0] * (n + 1)
        signed = [0] * (n + 1)
        for sigma in iter_group(n):
            c = num_cycles(sigma)
            plain[c] += 1
            signed[c] += sign(sigma)
        return PolynomialIdentityReport(
            n, method, tuple(plain), tuple(shifted_product(n, 1)),
            tuple(signed), tuple(shifted_product(n, -1)),
        )
    if method == "points":
        xs = tuple(range(n + 1))
        classes = enumerate_partitions(n)
        plain_lhs = tuple(sum(class_size(mu) * x ** len(mu) for mu in classes) for x in xs)
        signed_lhs = tuple(
            sum(class_sign(mu) * class_size(mu) * x ** len(mu) for mu in classes) for x in xs
        )
        plain_rhs = tuple(math.prod(x + k for k in range(n)) for x in xs)
        signed_rhs = tuple(math.prod(x - k for k in range(n)) for x in xs)
        return PolynomialIdentityReport(n, method, plain_lhs, plain_rhs, signed_lhs, signed_rhs, xs)
    raise ValueError(f"unknown method {method!r}; use 'enumerate' or 'points'")
