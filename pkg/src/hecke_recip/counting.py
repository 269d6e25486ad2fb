"""Exact counts of bounded-weight exponent tuples and reciprocal classes.

All arithmetic is on Python integers, so counts never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import HeckeParams, ParityMismatchError

SETTINGS = ("thm1", "thm2", "lemma42", "lemma43")


@dataclass(frozen=True)
class WeightAlphabet:
    """Syllable weights with how many exponents carry each weight."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        weights = [w for w, _ in self.entries]
        if any(w <= 0 for w in weights) or any(m < 1 for _, m in self.entries):
            raise ValueError(f"weights and multiplicities must be positive: {self.entries}")
        if weights != sorted(set(weights)):
            raise ValueError(f"weights must be strictly increasing: {weights}")

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)


@dataclass(frozen=True)
class WeightCountTable:
    """``counts[s]`` = number of tuples (empty one included) of total weight ``s``."""

    counts: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.counts[s]

    def __len__(self) -> int:
        return len(self.counts)


def syllable_alphabet(params: HeckeParams, setting: str) -> WeightAlphabet:
    r = params.r
    if setting == "thm1":
        if params.is_even:
            raise ParityMismatchError("thm1 needs odd p")
        return WeightAlphabet(tuple((2 * (j + 1), 2) for j in range(1, r + 1)))
    if setting == "thm2":
        if not params.is_even:
            raise ParityMismatchError("thm2 needs even p")
        return WeightAlphabet(tuple((2 * (j + 1), 2) for j in range(1, r)) + ((2 * (r + 1), 1),))
    if setting == "lemma42":
        return WeightAlphabet(tuple((j, 2) for j in range(1, r)) + ((r, 1),))
    if setting == "lemma43":
        return WeightAlphabet(tuple((j, 2) for j in range(1, r + 1)))
    raise ValueError(f"unknown setting {setting!r}")


def dp_weight_counts(alphabet: WeightAlphabet, x: int) -> WeightCountTable:
    if x < 0:
        return WeightCountTable(())
    t = [0] * (x + 1)
    t[0] = 1
    for s in range(1, x + 1):
        t[s] = sum(m * t[s - w] for w, m in alphabet.entries if w <= s)
    return WeightCountTable(tuple(t))


def dp_counts_by_length(alphabet: WeightAlphabet, x: int) -> list[list[int]]:
    """``table[n][s]``: tuples of length ``n`` and total weight ``s``."""
    wmin = alphabet.entries[0][0]
    nmax = x // wmin if x >= 0 else -1
    table = [[0] * (x + 1) for _ in range(nmax + 1)]
    if nmax < 0:
        return table
    table[0][0] = 1
    for n in range(1, nmax + 1):
        prev, row = table[n - 1], table[n]
        for s in range(x + 1):
            row[s] = sum(m * prev[s - w] for w, m in alphabet.entries if w <= s)
    return table


def count_solutions(alphabet: WeightAlphabet, x: int) -> int:
    """Non-empty tuples with total weight <= x."""
    if x < 1:
        return 0
    return sum(dp_weight_counts(alphabet, x).counts[1:])


@lru_cache(maxsize=None)
def _cs(p: int, setting: str, x: int) -> int:
    return count_solutions(syllable_alphabet(HeckeParams(p), setting), x)


def _odd_cycle_classes(params: HeckeParams, y: int) -> int:
    # reciprocal classes with an odd number of syllables, (i g^r) included;
    # each has exactly one rotation (r, k1..kn, -kn..-k1)
    r = params.r
    if y < r + 1:
        return 0
    return 1 + _cs(params.p, "thm2", y - (r + 1))


def singleton_symmetric_tuples(params: HeckeParams, x: int) -> int:
    """Symmetric tuples of weight <= x that are alone in their class.

    For even p these are the classes ``Q^(2^b)``, b >= 1, with ``Q`` an
    odd-syllable reciprocal class; zero for odd p.
    """
    if not params.is_even:
        return 0
    total, b = 0, 1
    while x >> b >= params.r + 1:
        total += _odd_cycle_classes(params, x >> b)
        b += 1
    return total


def symmetric_class_count_exact(params: HeckeParams, x: int) -> int:
    """Classes with a symmetric normal form, of length <= x."""
    if params.is_even:
        n = _cs(params.p, "thm2", x) + singleton_symmetric_tuples(params, x)
    else:
        n = _cs(params.p, "thm1", x)
    if n % 2:
        raise AssertionError(f"odd paired tuple count {n} for p={params.p}, x={x}")
    return n // 2


def reciprocal_class_count_exact(params: HeckeParams, x: int) -> int:
    """All reciprocal hyperbolic classes of length <= x (``(i g^r)`` excluded)."""
    if not params.is_even:
        return symmetric_class_count_exact(params, x)
    r = params.r
    both = singleton_symmetric_tuples(params, x)
    # (i g^r)^2 has no p-reciprocal tuple with n >= 1
    both_prec = both - (1 if x >= 2 * (r + 1) else 0)
    sym_tuples = _cs(params.p, "thm2", x)
    prec_tuples = _cs(params.p, "thm2", x - 2 * (r + 1))
    mixed = _cs(params.p, "thm2", x - (r + 1))
    paired = sym_tuples + prec_tuples - both - both_prec
    if paired % 2:
        raise AssertionError(f"odd paired tuple count {paired} for p={params.p}, x={x}")
    return mixed + paired // 2 + both


def _mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def primitive_class_count_exact(params: HeckeParams, x: int) -> int:
    """Primitive reciprocal classes of length <= x, by Moebius inversion over powers."""
    # every reciprocal class is R^e for a unique primitive reciprocal R;
    # (i g^r) is such a root for even p although it is not counted itself
    extra = 1 if params.is_even else 0

    def with_root(y: int) -> int:
        return reciprocal_class_count_exact(params, y) + (extra if y >= params.r + 1 else 0)

    total = sum(_mobius(e) * with_root(x // e) for e in range(1, x + 1) if x // e >= 2)
    return total - (extra if x >= params.r + 1 else 0)


__all__ = [
    "SETTINGS",
    "WeightAlphabet",
    "WeightCountTable",
    "count_solutions",
    "dp_counts_by_length",
    "dp_weight_counts",
    "primitive_class_count_exact",
    "reciprocal_class_count_exact",
    "singleton_symmetric_tuples",
    "symmetric_class_count_exact",
    "syllable_alphabet",
]
