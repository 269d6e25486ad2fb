"""Kernel selection: compiled extension when built, pure Python otherwise."""
from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels as _impl  # type: ignore[attr-defined]

    BACKEND = "cython"
except ImportError:  # extension not built
    _impl = _kernels_py
    BACKEND = "python"

exponent_rank = _kernels_py.exponent_rank
least_rotation = _impl.least_rotation
smallest_period = _impl.smallest_period
canonical_cycles = _impl.canonical_cycles

__all__ = [
    "BACKEND",
    "exponent_rank",
    "least_rotation",
    "smallest_period",
    "canonical_cycles",
]
