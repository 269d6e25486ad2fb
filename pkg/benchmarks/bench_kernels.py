"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import random
import timeit

from hecke_recip import _kernels_py

try:
    from hecke_recip import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("canonical_cycles p=3 x=36", lambda m: m.canonical_cycles(3, 36)),
    ("canonical_cycles p=5 x=20", lambda m: m.canonical_cycles(5, 20)),
    ("canonical_cycles p=8 x=16", lambda m: m.canonical_cycles(8, 16)),
]


def _rotation_case():
    rng = random.Random(0)
    seqs = [[rng.randrange(4) for _ in range(rng.randrange(2, 40))] for _ in range(2000)]
    return "least_rotation x2000", lambda m: [m.least_rotation(s) for s in seqs]


def _plain(result):
    return [tuple(c) if isinstance(c, (list, tuple)) else c for c in result]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the Python fallback is available")
    print(f"{'case':<28}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for label, fn in CASES + [_rotation_case()]:
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{label:<28}{py:>10.4f}{'-':>10}{'-':>9}")
            continue
        if _plain(fn(_kernels)) != _plain(fn(_kernels_py)):
            raise SystemExit(f"backends disagree on {label}")
        cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{label:<28}{py:>10.4f}{cy:>10.4f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
