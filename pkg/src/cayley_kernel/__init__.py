"""Exact spectra of the Cayley distance kernel on Sym(N) and the gl(n) chord-diagram weight systems it governs."""

from .chords import (
    Chord,
    ChordWord,
    DiagramCombination,
    GaussianRational,
    concat,
    perm,
    star,
    state_eval,
    weight_gl_n,
)
from .kernel import (
    KernelSpectrum,
    Phase,
    PhaseClassification,
    PhaseVerdict,
    Source,
    classify_phase,
    eigenvalue_sign,
    eigenvalue_trivial,
    gershgorin_bound,
    kernel_matrix,
    spectrum,
    sweep_min_eigenvalue,
    verify_polynomial_identities,
)
from .partitions import character, class_size, dimension, enumerate_partitions
from .schur import count_ssyt, eigenvalue_via_ssyt, schur_frobenius_specialized
from .symgroup import (
    Permutation,
    cayley_distance,
    compose,
    cycle_type,
    enumerate_group,
    identity,
    inverse,
    num_cycles,
    transposition,
)

__version__ = "0.1.0"
