from __future__ import annotations

import pytest
from hypothesis import assume, given, settings, strategies as st

from hecke_recip.core import (
    IDENTITY,
    IOTA,
    HeckeParams,
    IdentityInputError,
    TorsionInputError,
    Word,
    WordSyntaxError,
    are_conjugate,
    canonical_form,
    conjugate,
    cycle_word,
    cyclic_reduce,
    format_word,
    inverse,
    is_reciprocal,
    make_word,
    multiply,
    normalize_exponent,
    parse_cyclic,
    parse_word,
    primitive_root,
    word_length,
)

from oracles import reduce_by_rewriting

P3, P4, P5 = HeckeParams(3), HeckeParams(4), HeckeParams(5)


def w(text, params):
    return parse_word(text, params)


# ------------------------------------------------------------ fixed values


def test_params():
    assert (P5.r, P5.parity, P5.gamma_tilde) == (2, "odd", None)
    assert (P4.r, P4.parity, P4.gamma_tilde) == (2, "even", 2)
    assert P4.alphabet == (-1, 1, 2)
    with pytest.raises(ValueError):
        HeckeParams(2)


@pytest.mark.parametrize(
    "k,p,expected", [(3, 5, -2), (-2, 4, 2), (5, 5, None), (2, 4, 2), (-3, 7, -3), (4, 7, -3)]
)
def test_normalize_exponent(k, p, expected):
    assert normalize_exponent(k, HeckeParams(p)) == expected


@pytest.mark.parametrize(
    "a,b,p,expected",
    [("g^2", "g^3", 5, "e"), ("i", "i", 3, "e"), ("i g^2 i", "i g^1", 5, "i g^-2")],
)
def test_multiply(a, b, p, expected):
    params = HeckeParams(p)
    assert format_word(multiply(w(a, params), w(b, params), params)) == expected


@pytest.mark.parametrize(
    "text,p,expected", [("i g^1 i g^-1", 3, "g^1 i g^-1 i"), ("i", 3, "i"), ("g^2", 4, "g^2")]
)
def test_inverse(text, p, expected):
    params = HeckeParams(p)
    assert format_word(inverse(w(text, params), params)) == expected


@pytest.mark.parametrize(
    "text,p,expected",
    [("i g^2 i g^-1", 5, 5), ("i", 3, 1), ("i g^1 i g^1 i g^-1 i g^-1", 3, 8), ("e", 3, 0)],
)
def test_word_length(text, p, expected):
    params = HeckeParams(p)
    assert word_length(w(text, params), params) == expected


@pytest.mark.parametrize(
    "text,p,core,conj",
    [
        ("g^-1 i g^1 i g^2", 5, "i g^1 i g^1", "g^-1"),
        ("i g^1 i g^-1", 3, "i g^1 i g^-1", "e"),
        ("i g^2 i", 5, "g^2", "i"),
    ],
)
def test_cyclic_reduce(text, p, core, conj):
    params = HeckeParams(p)
    c, u = cyclic_reduce(w(text, params), params)
    assert (str(c), format_word(u)) == (core, conj)
    assert conjugate(Word(c.letters), u, params) == w(text, params)


def test_cyclic_reduce_identity():
    with pytest.raises(IdentityInputError):
        cyclic_reduce(IDENTITY, P3)


@pytest.mark.parametrize(
    "text,expected",
    [("i g^-1 i g^1", "i g^1 i g^-1"), ("g^-1 i g^1 i", "i g^1 i g^-1"), ("g^2", "g^2"), ("i g^1 i g^1", "i g^1 i g^1")],
)
def test_canonical_form(text, expected):
    c, _ = cyclic_reduce(w(text, P5), P5)
    assert canonical_form(c) == expected


@pytest.mark.parametrize(
    "a,b,p,expected",
    [
        ("i g^1 i g^-1", "i g^-1 i g^1", 3, True),
        ("i g^1", "i g^-1", 3, False),
        ("g^1", "g^2", 5, False),
        ("i", "g^1 i g^-1", 3, True),
        ("e", "e", 3, True),
        ("e", "i", 3, False),
    ],
)
def test_are_conjugate(a, b, p, expected):
    params = HeckeParams(p)
    assert are_conjugate(w(a, params), w(b, params), params) is expected


@pytest.mark.parametrize(
    "text,p,expected",
    [("i g^1 i g^-1", 3, True), ("i g^1 i g^1", 3, False), ("g^2", 4, True), ("g^1", 5, False), ("i", 3, True)],
)
def test_is_reciprocal(text, p, expected):
    params = HeckeParams(p)
    assert is_reciprocal(w(text, params), params) is expected


def test_is_reciprocal_identity():
    with pytest.raises(IdentityInputError):
        is_reciprocal(IDENTITY, P3)


@pytest.mark.parametrize(
    "text,root,k",
    [
        ("i g^1 i g^-1 i g^1 i g^-1", "i g^1 i g^-1", 2),
        ("i g^1 i g^-1", "i g^1 i g^-1", 1),
        ("i g^1 i g^1 i g^-1 i g^-1", "i g^1 i g^1 i g^-1 i g^-1", 1),
    ],
)
def test_primitive_root(text, root, k):
    got_root, got_k = primitive_root(parse_cyclic(text, P3), P3)
    assert (str(got_root), got_k) == (root, k)


def test_primitive_root_torsion():
    with pytest.raises(TorsionInputError):
        primitive_root(parse_cyclic("g^1", P3), P3)


@pytest.mark.parametrize(
    "text,p,letters",
    [("i g^3 i", 5, (IOTA, -2, IOTA)), ("i i", 3, ()), ("g^1 g^1", 3, (-1,)), ("  e ", 3, ()), ("g^+2", 5, (2,))],
)
def test_parse_word(text, p, letters):
    assert parse_word(text, HeckeParams(p)).letters == letters


@pytest.mark.parametrize("text,pos", [("i g^x", 2), ("", 0), ("e i", 2), ("i  h", 3), ("g^", 0)])
def test_parse_errors(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text, P3)
    assert info.value.position == pos


def test_parse_cyclic_rejects_non_reduced():
    with pytest.raises(WordSyntaxError):
        parse_cyclic("i g^1 i", P3)


# -------------------------------------------------------------- properties

PS = st.integers(3, 9)


@st.composite
def params_and_words(draw, count=1, max_size=10):
    params = HeckeParams(draw(PS))
    raw = st.lists(st.one_of(st.just(IOTA), st.integers(-12, 12).filter(bool)), max_size=max_size)
    return (params, *(make_word(draw(raw), params) for _ in range(count)))


@st.composite
def hyperbolic_words(draw):
    params = HeckeParams(draw(PS))
    exps = draw(st.lists(st.sampled_from(params.alphabet), min_size=2, max_size=6))
    return params, Word(cycle_word(exps).letters)


@given(st.integers(3, 9), st.lists(st.one_of(st.just(IOTA), st.integers(-20, 20)), max_size=14))
def test_reduction_confluent(p, letters):
    # the stack reduction agrees with unordered rewriting to a fixpoint
    assert make_word(letters, HeckeParams(p)).letters == reduce_by_rewriting(letters, p)


@given(params_and_words(count=3))
def test_associative(data):
    params, a, b, c = data
    assert multiply(multiply(a, b, params), c, params) == multiply(a, multiply(b, c, params), params)


@given(params_and_words())
def test_inverse_axioms(data):
    params, a = data
    assert multiply(a, inverse(a, params), params) == IDENTITY
    assert multiply(inverse(a, params), a, params) == IDENTITY
    assert inverse(inverse(a, params), params) == a
    assert word_length(a, params) == word_length(inverse(a, params), params)


@given(params_and_words())
def test_format_parse_round_trip(data):
    params, a = data
    assert parse_word(format_word(a), params) == a


@given(hyperbolic_words(), st.lists(st.one_of(st.just(IOTA), st.integers(-9, 9)), max_size=8))
def test_conjugation_invariance(hw, u_letters):
    params, a = hw
    u = make_word(u_letters, params)
    b = conjugate(a, u, params)
    ca, _ = cyclic_reduce(a, params)
    cb, _ = cyclic_reduce(b, params)
    assert canonical_form(ca) == canonical_form(cb)
    assert word_length(cb, params) == word_length(ca, params)
    assert is_reciprocal(a, params) == is_reciprocal(b, params) == is_reciprocal(inverse(a, params), params)


@given(hyperbolic_words(), st.integers(1, 3))
def test_primitive_root_idempotent(hw, e):
    params, a = hw
    c, _ = cyclic_reduce(a, params)
    power = parse_cyclic(" ".join([str(c)] * e), params)
    root, k = primitive_root(power, params)
    assert k % e == 0
    assert primitive_root(root, params)[1] == 1


@settings(max_examples=50)
@given(params_and_words(count=2, max_size=8))
def test_conjugacy_matches_definition(data):
    # a ~ b iff some short conjugator works; check the "yes" direction
    params, a, u = data
    assume(not a.is_identity)
    assert are_conjugate(a, conjugate(a, u, params), params)
