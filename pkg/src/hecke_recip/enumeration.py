"""Reciprocal normal forms, class classification and class enumeration.

Every hyperbolic class is handled through its gamma-exponent cycle
``(c0, ..., c_{L-1})``, standing for the cyclic word ``i g^c0 ... i g^c_{L-1}``.
The four normal-form shapes, read on some rotation ``d`` of the cycle:

* symmetric:   ``(k1..kn, -kn..-k1)``
* p-reciprocal: ``(r, k1..kn, r, -kn..-k1)`` (even p)
* mixed:       ``(r, k1..kn, -kn..-k1)`` (even p, odd L)
* power:       ``(r, r, ..., r)``, i.e. ``(i g^r)^k`` (even p)
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .core import (
    ClassKey,
    CyclicWord,
    HeckeParams,
    NotReciprocalError,
    ParityMismatchError,
    TorsionInputError,
    Word,
    canonical_form,
    cycle_word,
    inverse,
    is_reciprocal,
    normalize_exponent,
    parse_cyclic,
    word_length,
)
from .kernels import canonical_cycles, smallest_period

ExponentTuple = tuple[int, ...]


class ReciprocalType(str, enum.Enum):
    SYMMETRIC = "symmetric"
    P_RECIPROCAL = "p-reciprocal"
    MIXED_NO_POWER = "symmetric-p-reciprocal"
    POWER = "power"

    def __str__(self) -> str:
        return self.value


# label precedence for classes matching several shapes
PRECEDENCE = (
    ReciprocalType.POWER,
    ReciprocalType.P_RECIPROCAL,
    ReciprocalType.MIXED_NO_POWER,
    ReciprocalType.SYMMETRIC,
)


@dataclass(frozen=True)
class NormalForm:
    word: Word
    length: int
    # True when a non-power request produced a power (i g^r)^k word
    collapsed: bool = False


@dataclass(frozen=True, order=True)
class ReciprocalClassRecord:
    length: int
    key: ClassKey
    rtype: ReciprocalType = field(compare=False)
    primitive: bool = field(compare=False)
    exponent_tuple: Optional[ExponentTuple] = field(default=None, compare=False)
    shapes: frozenset = field(default=frozenset(), compare=False)


def _neg(k: int, params: HeckeParams) -> int:
    return normalize_exponent(-k, params)


def _negrev(ks: Sequence[int], params: HeckeParams) -> tuple[int, ...]:
    return tuple(_neg(k, params) for k in reversed(ks))


def _check_tuple(ks: Sequence[int], params: HeckeParams) -> ExponentTuple:
    ks = tuple(ks)
    if not ks:
        raise ValueError("exponent tuple must be non-empty")
    alphabet = set(params.alphabet)
    bad = [k for k in ks if k not in alphabet]
    if bad:
        raise ValueError(f"exponents {bad} outside the alphabet for p={params.p}")
    return ks


def normal_form_cycle(
    rtype: ReciprocalType,
    ks: ExponentTuple | int,
    params: HeckeParams,
    side: str = "left",
) -> tuple[int, ...]:
    """Exponent cycle of the normal form (see the module docstring)."""
    rtype = ReciprocalType(rtype)
    if rtype is not ReciprocalType.SYMMETRIC and not params.is_even:
        raise ParityMismatchError(f"{rtype} forms need even p, got p={params.p}")
    r = params.r
    if rtype is ReciprocalType.POWER:
        if not isinstance(ks, int) or ks == 0:
            raise ValueError("power form needs a nonzero integer k")
        return (r,) * abs(ks)
    ks = _check_tuple(ks, params)
    tail = _negrev(ks, params)
    if rtype is ReciprocalType.SYMMETRIC:
        return ks + tail
    if rtype is ReciprocalType.P_RECIPROCAL:
        return (r,) + ks + (r,) + tail
    if side == "left":
        return (r,) + ks + tail
    if side == "right":
        return ks + (r,) + tail
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def gen_normal_form(
    rtype: ReciprocalType,
    ks: ExponentTuple | int,
    params: HeckeParams,
    side: str = "left",
) -> NormalForm:
    """Build the normal-form word for a reciprocal type.

    ``ks`` is the exponent tuple, or the power ``k`` for
    :attr:`ReciprocalType.POWER` (negative ``k`` gives ``(g^r i)^|k|``).
    """
    rtype = ReciprocalType(rtype)
    cycle = normal_form_cycle(rtype, ks, params, side)
    word = Word(cycle_word(cycle).letters)
    if rtype is ReciprocalType.POWER and ks < 0:
        word = inverse(word, params)
    collapsed = (
        rtype is not ReciprocalType.POWER
        and params.is_even
        and all(k == params.r for k in cycle)
    )
    return NormalForm(word, word_length(word, params), collapsed)


def _rotations(c: Sequence[int]) -> Iterator[tuple[int, ...]]:
    c = tuple(c)
    seen = set()
    for t in range(len(c)):
        d = c[t:] + c[:t]
        if d not in seen:
            seen.add(d)
            yield d


def _antisymmetric(d: Sequence[int], params: HeckeParams) -> bool:
    n = len(d)
    return all(d[i] == _neg(d[n - 1 - i], params) for i in range(n // 2))


def _matches(rtype: ReciprocalType, d: tuple[int, ...], params: HeckeParams) -> bool:
    L = len(d)
    r = params.r
    if rtype is ReciprocalType.SYMMETRIC:
        return L % 2 == 0 and _antisymmetric(d, params)
    if not params.is_even:
        return False
    if rtype is ReciprocalType.POWER:
        return all(k == r for k in d)
    if rtype is ReciprocalType.P_RECIPROCAL:
        h = L // 2
        return L % 2 == 0 and L >= 4 and d[0] == r and d[h] == r and _antisymmetric(d[1:h] + d[h + 1:], params)
    return L % 2 == 1 and L >= 3 and d[0] == r and _antisymmetric(d[1:], params)


def shape_rotations(c: Sequence[int], params: HeckeParams) -> dict[ReciprocalType, list[tuple[int, ...]]]:
    """Distinct rotations of the cycle matching each normal-form shape."""
    found: dict[ReciprocalType, list[tuple[int, ...]]] = {t: [] for t in ReciprocalType}
    for d in _rotations(c):
        for t in ReciprocalType:
            if _matches(t, d, params):
                found[t].append(d)
    return found


def _tuple_of(rtype: ReciprocalType, d: tuple[int, ...]) -> Optional[ExponentTuple]:
    L = len(d)
    if rtype is ReciprocalType.SYMMETRIC:
        return d[: L // 2]
    if rtype is ReciprocalType.P_RECIPROCAL:
        return d[1 : L // 2]
    if rtype is ReciprocalType.MIXED_NO_POWER:
        return d[1 : (L + 1) // 2]
    return None


def _record(cycle: Sequence[int], params: HeckeParams) -> ReciprocalClassRecord:
    c = cycle_word(cycle).rotation()
    exps = c.letters[1::2]
    found = shape_rotations(exps, params)
    shapes = frozenset(t for t, ds in found.items() if ds)
    rtype = next((t for t in PRECEDENCE if t in shapes), None)
    if rtype is None:
        raise NotReciprocalError(f"{c} matches no reciprocal normal form")
    return ReciprocalClassRecord(
        length=word_length(c, params),
        key=str(c),
        rtype=rtype,
        primitive=smallest_period(exps) == len(exps),
        exponent_tuple=_tuple_of(rtype, found[rtype][0]),
        shapes=shapes,
    )


def _hyperbolic_cycle(key: ClassKey, params: HeckeParams) -> tuple[int, ...]:
    c = parse_cyclic(key, params)
    if not c.is_hyperbolic_shape:
        raise TorsionInputError(f"{key!r} is not a hyperbolic class")
    if not is_reciprocal(Word(c.letters), params):
        raise NotReciprocalError(f"{key!r} is not a reciprocal class")
    return c.exponents


def classify_class(key: ClassKey, params: HeckeParams) -> ReciprocalType:
    return _record(_hyperbolic_cycle(key, params), params).rtype


def class_record(key: ClassKey, params: HeckeParams) -> ReciprocalClassRecord:
    return _record(_hyperbolic_cycle(key, params), params)


def _tuples(alphabet: Sequence[int], budget: int, first: Optional[int] = None) -> Iterator[ExponentTuple]:
    """Non-empty tuples with sum of 2(|k|+1) <= budget, graded lex by (n, tuple)."""
    starts = alphabet if first is None else (first,)
    n = 1
    while 4 * n <= budget:
        for head in starts:
            rest_budget = budget - 2 * (abs(head) + 1)
            if rest_budget < 4 * (n - 1):
                continue
            for rest in _fixed_length(alphabet, n - 1, rest_budget):
                yield (head,) + rest
        n += 1


def _fixed_length(alphabet: Sequence[int], n: int, budget: int) -> Iterator[ExponentTuple]:
    if n == 0:
        yield ()
        return
    for k in alphabet:
        w = 2 * (abs(k) + 1)
        if w + 4 * (n - 1) > budget:
            continue
        for rest in _fixed_length(alphabet, n - 1, budget - w):
            yield (k,) + rest


def _work_units(params: HeckeParams, x: int) -> list[tuple[str, Optional[int]]]:
    kinds = ["symmetric"]
    if params.is_even:
        kinds += ["p-reciprocal", "left", "right"]
    units: list[tuple[str, Optional[int]]] = [(kind, k) for kind in kinds for k in params.alphabet]
    if params.is_even:
        units.append(("power", None))
    return units


def _run_unit(p: int, x: int, kind: str, first: Optional[int]) -> dict[ClassKey, tuple[int, ...]]:
    params = HeckeParams(p)
    r = params.r
    out: dict[ClassKey, tuple[int, ...]] = {}

    def add(form: NormalForm) -> None:
        if form.length > x:
            return
        c = CyclicWord(form.word.letters)
        key = canonical_form(c)
        if key not in out:
            out[key] = c.rotation().letters[1::2]

    if kind == "power":
        for k in range(2, x // (r + 1) + 1):
            add(gen_normal_form(ReciprocalType.POWER, k, params))
        return out
    if kind == "symmetric":
        rtype, budget, side = ReciprocalType.SYMMETRIC, x, "left"
    elif kind == "p-reciprocal":
        rtype, budget, side = ReciprocalType.P_RECIPROCAL, x - 2 * (r + 1), "left"
    else:
        rtype, budget, side = ReciprocalType.MIXED_NO_POWER, x - (r + 1), kind
    for ks in _tuples(params.alphabet, budget, first):
        add(gen_normal_form(rtype, ks, params, side))
    return out


def enumerate_reciprocal_classes(params: HeckeParams, x: int, parallel: int = 1) -> list[ReciprocalClassRecord]:
    """All reciprocal hyperbolic classes of length <= x, from the normal forms.

    The work is sharded by generator kind and first exponent; the merged
    result is sorted by ``(length, key)`` and independent of ``parallel``.
    """
    if x < 4:
        return []
    units = _work_units(params, x)
    args = [(params.p, x, kind, first) for kind, first in units]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            parts = list(pool.map(_run_unit, *zip(*args)))
    else:
        parts = [_run_unit(*a) for a in args]
    merged: dict[ClassKey, tuple[int, ...]] = {}
    for part in parts:
        for key, exps in part.items():
            merged.setdefault(key, exps)
    return sorted(_record(exps, params) for exps in merged.values())


def oracle_enumerate_reciprocal(params: HeckeParams, x: int) -> list[ReciprocalClassRecord]:
    """Brute force: every canonical alternating cyclic word of length <= x,
    kept when it is conjugate to its inverse."""
    records = []
    for cycle in canonical_cycles(params.p, x):
        if is_reciprocal(Word(cycle_word(cycle).letters), params):
            records.append(_record(cycle, params))
    return sorted(records)


def split_primitive_counts(classes: Sequence[ReciprocalClassRecord]) -> tuple[int, int]:
    prim = sum(1 for c in classes if c.primitive)
    return prim, len(classes) - prim


@dataclass(frozen=True)
class TypeCounts:
    """Type-filtered class counts for the even-p sandwich bound.

    ``symmetric`` counts every class with a symmetric-shape rotation;
    ``p_reciprocal`` and ``mixed`` use the precedence label, with the
    ``(i g^r)^k`` classes counted under ``mixed``.
    """

    total: int
    symmetric: int
    p_reciprocal: int
    mixed: int

    @property
    def sandwich_holds(self) -> bool:
        return self.symmetric <= self.total <= self.symmetric + self.p_reciprocal + self.mixed


def type_counts(classes: Sequence[ReciprocalClassRecord]) -> TypeCounts:
    return TypeCounts(
        total=len(classes),
        symmetric=sum(1 for c in classes if ReciprocalType.SYMMETRIC in c.shapes),
        p_reciprocal=sum(1 for c in classes if c.rtype is ReciprocalType.P_RECIPROCAL),
        mixed=sum(
            1 for c in classes if c.rtype in (ReciprocalType.MIXED_NO_POWER, ReciprocalType.POWER)
        ),
    )


@dataclass(frozen=True)
class StructureReport:
    key: ClassKey
    rtype: ReciprocalType
    # distinct normal-form rotations of w and of w^-1, per shape
    forward: dict
    backward: dict
    ok: bool


def structure_check(key: ClassKey, params: HeckeParams) -> StructureReport:
    """Count normal-form rotations of a reciprocal class and its inverse.

    For odd p each orientation must show exactly two symmetric-shape
    rotations; for even p the report is informational and ``ok`` only
    requires some normal-form match.
    """
    exps = _hyperbolic_cycle(key, params)
    inv = _negrev(exps, params)
    fwd = {t: len(ds) for t, ds in shape_rotations(exps, params).items()}
    bwd = {t: len(ds) for t, ds in shape_rotations(inv, params).items()}
    rtype = _record(exps, params).rtype
    if params.is_even:
        ok = any(fwd.values()) and fwd == bwd
    else:
        ok = fwd[ReciprocalType.SYMMETRIC] == 2 and bwd[ReciprocalType.SYMMETRIC] == 2
    return StructureReport(key, rtype, fwd, bwd, ok)


def symmetric_tuple_count(params: HeckeParams, x: int) -> int:
    """Number of symmetric-form exponent tuples of word length <= x (brute force)."""
    return sum(1 for _ in _tuples(params.alphabet, x))


__all__ = [
    "ExponentTuple",
    "NormalForm",
    "PRECEDENCE",
    "ReciprocalClassRecord",
    "ReciprocalType",
    "StructureReport",
    "TypeCounts",
    "class_record",
    "classify_class",
    "enumerate_reciprocal_classes",
    "gen_normal_form",
    "normal_form_cycle",
    "oracle_enumerate_reciprocal",
    "shape_rotations",
    "split_primitive_counts",
    "structure_check",
    "symmetric_tuple_count",
    "type_counts",
]

