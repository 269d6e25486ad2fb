"""Reciprocal conjugacy classes in the Hecke groups Z2 * Zp.

Exact enumeration from normal forms (checked against a brute-force
oracle), exact counts by dynamic programming, and CLT growth estimates.
"""
from .asymptotics import (
    check_lemma71,
    check_lemma72,
    clt_params,
    estimate_count,
    log_phi_cdf,
    phi_cdf,
    primitive_ratio_series,
)
from .core import (
    IDENTITY,
    IOTA,
    CyclicWord,
    HeckeParams,
    Word,
    are_conjugate,
    canonical_form,
    cyclic_reduce,
    format_word,
    inverse,
    is_reciprocal,
    multiply,
    normalize_exponent,
    parse_word,
    primitive_root,
    word_length,
)
from .counting import (
    count_solutions,
    dp_weight_counts,
    primitive_class_count_exact,
    reciprocal_class_count_exact,
    symmetric_class_count_exact,
    syllable_alphabet,
)
from .enumeration import (
    ReciprocalType,
    classify_class,
    enumerate_reciprocal_classes,
    gen_normal_form,
    oracle_enumerate_reciprocal,
    split_primitive_counts,
    structure_check,
)
from .kernels import BACKEND

__version__ = "0.1.0"
