"""Pure-Python versions of the cyclic-word kernels.

Used when the compiled extension is unavailable. Behaviour must match
``_kernels.pyx`` exactly; ``tests/test_kernels.py`` checks both.
"""
from __future__ import annotations

from typing import Sequence


def exponent_rank(k: int) -> int:
    """Order key of a gamma exponent: |k| ascending, positive before negative."""
    return 2 * k - 1 if k > 0 else -2 * k


def least_rotation(seq: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm).

    Ties between equal rotations resolve to the smallest index.
    """
    n = len(seq)
    if n < 2:
        return 0
    s = list(seq) * 2
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def smallest_period(seq: Sequence[int]) -> int:
    """Smallest d dividing len(seq) with seq == seq rotated by d."""
    n = len(seq)
    for d in range(1, n + 1):
        if n % d:
            continue
        if all(seq[i] == seq[i - d] for i in range(d, n)):
            return d
    return n


def canonical_cycles(p: int, x: int) -> list[tuple[int, ...]]:
    """All canonical gamma-exponent cycles of word length <= x.

    A cycle ``(c0, ..., c_{L-1})`` stands for the cyclic word
    ``i g^c0 i g^c1 ... i g^c_{L-1}``; only cycles with L >= 2 are produced,
    each as its least rotation under :func:`exponent_rank`.
    """
    r = p // 2
    low = -r + 1 if p % 2 == 0 else -r
    alphabet = sorted((k for k in range(low, r + 1) if k), key=exponent_rank)
    ranks = [exponent_rank(k) for k in alphabet]
    weights = [1 + abs(k) for k in alphabet]
    out: list[tuple[int, ...]] = []
    seq: list[int] = []
    rseq: list[int] = []

    def extend(budget: int, first: int) -> None:
        if len(seq) >= 2 and least_rotation(rseq) == 0:
            out.append(tuple(seq))
        for a in range(first, len(alphabet)):
            w = weights[a]
            if w > budget:
                continue
            seq.append(alphabet[a])
            rseq.append(ranks[a])
            extend(budget - w, first)
            seq.pop()
            rseq.pop()

    for a in range(len(alphabet)):
        if weights[a] <= x:
            seq.append(alphabet[a])
            rseq.append(ranks[a])
            # later letters never rank below the first one in a least rotation
            extend(x - weights[a], a)
            seq.pop()
            rseq.pop()
    return out
