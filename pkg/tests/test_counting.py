from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from hecke_recip.core import HeckeParams, ParityMismatchError
from hecke_recip.counting import (
    WeightAlphabet,
    count_solutions,
    dp_counts_by_length,
    dp_weight_counts,
    primitive_class_count_exact,
    reciprocal_class_count_exact,
    singleton_symmetric_tuples,
    symmetric_class_count_exact,
    syllable_alphabet,
)

from oracles import brute_count, naive_reciprocal_classes, norm_exp


@pytest.mark.parametrize(
    "p,setting,entries",
    [
        (3, "thm1", ((4, 2),)),
        (5, "thm1", ((4, 2), (6, 2))),
        (4, "thm2", ((4, 2), (6, 1))),
        (8, "thm2", ((4, 2), (6, 2), (8, 2), (10, 1))),
        (4, "lemma42", ((1, 2), (2, 1))),
        (4, "lemma43", ((1, 2), (2, 2))),
        (3, "lemma43", ((1, 2),)),
    ],
)
def test_syllable_alphabet(p, setting, entries):
    assert syllable_alphabet(HeckeParams(p), setting).entries == entries


def test_alphabet_parity_and_validation():
    with pytest.raises(ParityMismatchError):
        syllable_alphabet(HeckeParams(4), "thm1")
    with pytest.raises(ParityMismatchError):
        syllable_alphabet(HeckeParams(5), "thm2")
    with pytest.raises(ValueError):
        WeightAlphabet(((4, 2), (4, 1)))
    with pytest.raises(ValueError):
        WeightAlphabet(((0, 2),))


@pytest.mark.parametrize(
    "entries,x,expected",
    [
        (((4, 2),), 12, {4: 2, 8: 4, 12: 8}),
        (((4, 2), (6, 2)), 12, {8: 4, 10: 8, 12: 12}),
        (((4, 2), (6, 1)), 10, {10: 4}),
    ],
)
def test_dp_table(entries, x, expected):
    t = dp_weight_counts(WeightAlphabet(entries), x)
    assert len(t) == x + 1 and t[0] == 1
    for s, v in expected.items():
        assert t[s] == v


@pytest.mark.parametrize(
    "entries,x,expected",
    [(((1, 2),), 3, 14), (((1, 2), (2, 1)), 2, 7), (((4, 2),), 8, 6), (((4, 2),), 3, 0), (((4, 2),), -1, 0)],
)
def test_count_solutions(entries, x, expected):
    assert count_solutions(WeightAlphabet(entries), x) == expected


weights = st.lists(st.tuples(st.integers(1, 6), st.integers(1, 3)), min_size=1, max_size=3, unique_by=lambda e: e[0])


@settings(deadline=None)
@given(weights, st.integers(0, 9))
def test_count_solutions_brute(entries, x):
    alphabet = WeightAlphabet(tuple(sorted(entries)))
    assert count_solutions(alphabet, x) == brute_count(alphabet.entries, x)


@given(weights, st.integers(0, 14))
def test_by_length_sums_to_total(entries, x):
    alphabet = WeightAlphabet(tuple(sorted(entries)))
    table = dp_counts_by_length(alphabet, x)
    flat = dp_weight_counts(alphabet, x)
    for s in range(x + 1):
        assert sum(row[s] for row in table) == flat[s]


@pytest.mark.parametrize("p,x,expected", [(3, 8, 3), (3, 40, 1023), (4, 8, 4), (4, 3, 0)])
def test_symmetric_class_count(p, x, expected):
    assert symmetric_class_count_exact(HeckeParams(p), x) == expected


@pytest.mark.parametrize(
    "p,x,expected",
    # frozen from the independent brute-force class oracle
    [(4, 14, 18), (6, 16, 59), (8, 18, 143)],
)
def test_symmetric_count_even_needs_power_singletons(p, x, expected):
    # the all-r correction floor(x / 2(r+1)) alone is one short here
    params = HeckeParams(p)
    assert symmetric_class_count_exact(params, x) == expected
    if x <= 16:
        assert expected == sum(1 for k in naive_reciprocal_classes(p, x) if _is_sym(k, p))


def _is_sym(cycle, p):
    n = len(cycle)
    for t in range(n):
        d = cycle[t:] + cycle[:t]
        if n % 2 == 0 and all(d[i] == norm_exp(-d[n - 1 - i], p) for i in range(n // 2)):
            return True
    return False


def _length(cycle):
    return sum(1 + abs(k) for k in cycle)


@pytest.mark.parametrize("p", range(3, 9))
def test_exact_counts_match_oracle(p):
    params = HeckeParams(p)
    top = 18 if p <= 5 else 14
    everything = naive_reciprocal_classes(p, top)
    for x in range(0, top + 1):
        naive = {k: v for k, v in everything.items() if _length(k) <= x}
        assert reciprocal_class_count_exact(params, x) == len(naive), x
        assert primitive_class_count_exact(params, x) == sum(naive.values()), x
        assert symmetric_class_count_exact(params, x) == sum(1 for k in naive if _is_sym(k, p)), x


def test_singletons_only_for_even_p():
    assert singleton_symmetric_tuples(HeckeParams(5), 100) == 0
    assert singleton_symmetric_tuples(HeckeParams(4), 5) == 0
    assert singleton_symmetric_tuples(HeckeParams(4), 6) == 1


def test_large_counts_are_exact_integers():
    n = reciprocal_class_count_exact(HeckeParams(6), 300)
    assert isinstance(n, int) and n.bit_length() > 64
    assert symmetric_class_count_exact(HeckeParams(3), 256) == 2**64 - 1
