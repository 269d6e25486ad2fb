"""Normal CDF, CLT growth estimates and the primitive-class bound checks."""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from typing import Optional, Sequence

from .core import EmptyCountError, HeckeParams, ParityMismatchError
from .counting import (
    primitive_class_count_exact,
    reciprocal_class_count_exact,
    WeightAlphabet,
)
from .enumeration import (
    enumerate_reciprocal_classes,
    oracle_enumerate_reciprocal,
    split_primitive_counts,
)

_SQRT2 = math.sqrt(2.0)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_DEC = Context(prec=40)

METHODS = ("enumerate", "oracle", "dp")


def phi_cdf(z: float) -> float:
    """Standard normal CDF."""
    return 0.5 * math.erfc(-z / _SQRT2)


def log_phi_cdf(z: float) -> float:
    """``log(phi_cdf(z))``, accurate in both tails."""
    if z < -8.0:
        # Mills-ratio series, summed up to its smallest term
        z2 = z * z
        term, series, k = 1.0, 1.0, 1
        while True:
            nxt = -term * (2 * k - 1) / z2
            if abs(nxt) >= abs(term) or abs(nxt) < 1e-17:
                break
            series += nxt
            term = nxt
            k += 1
        return -0.5 * z2 - math.log(-z) - _HALF_LOG_2PI + math.log(series)
    if z > 0.0:
        return math.log1p(-0.5 * math.erfc(z / _SQRT2))
    return math.log(phi_cdf(z))


@dataclass(frozen=True)
class CltParams:
    setting: str
    r: int
    mu: Fraction
    sigma2: Fraction
    base: int

    @property
    def theorem(self) -> bool:
        return self.setting in ("thm1", "thm2")

    @property
    def prefactor(self) -> Fraction:
        return Fraction(1, 2) if self.theorem else Fraction(1)

    def n_full_max(self, x: int) -> int:
        return x // (2 * (self.r + 1)) if self.theorem else x // self.r

    def n_tail_max(self, x: int) -> int:
        return x // 4 if self.theorem else x


def clt_params_r(r: int, setting: str) -> CltParams:
    """Mean, variance and base of each setting as closed forms in ``r``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    F = Fraction
    if setting == "thm1":
        return CltParams(setting, r, F(r + 3), F(r * r - 1, 3), 2 * r)
    if setting == "thm2":
        return CltParams(
            setting,
            r,
            F(2 * r * r + 4 * r - 2, 2 * r - 1),
            F(16 * r**3 + 36 * r * r + 32 * r - 12, 6 * (2 * r - 1)),
            2 * r - 1,
        )
    if setting == "lemma42":
        return CltParams(
            setting,
            r,
            F(r * r, 2 * r - 1),
            F(r**4 - 2 * r**3 + 2 * r * r - r, 3 * (2 * r - 1) ** 2),
            2 * r - 1,
        )
    if setting == "lemma43":
        # the proof's (r^2 - 1)/12, not the r^2/12 of the lemma statement
        return CltParams(setting, r, F(r + 1, 2), F(r * r - 1, 12), 2 * r)
    raise ValueError(f"unknown setting {setting!r}")


def clt_params(params: HeckeParams, setting: str) -> CltParams:
    if setting == "thm1" and params.is_even:
        raise ParityMismatchError("thm1 needs odd p")
    if setting == "thm2" and not params.is_even:
        raise ParityMismatchError("thm2 needs even p")
    return clt_params_r(params.r, setting)


def weight_moments(alphabet: WeightAlphabet) -> tuple[Fraction, Fraction]:
    """Mean and variance of a weight drawn uniformly over the alphabet's exponents."""
    n = alphabet.size
    mean = Fraction(sum(w * m for w, m in alphabet.entries), n)
    second = Fraction(sum(w * w * m for w, m in alphabet.entries), n)
    return mean, second - mean * mean


@dataclass(frozen=True)
class Term:
    n: int
    log10: float
    z: Optional[float] = None  # None for full-weight terms


@dataclass(frozen=True)
class EstimateValue:
    setting: str
    x: int
    boundary: str
    full_part: Fraction
    value: Decimal
    terms: tuple[Term, ...]

    @property
    def log10_value(self) -> float:
        if self.value <= 0:
            return float("-inf")
        return float(self.value.log10(context=_DEC))

    @property
    def exact(self) -> Optional[Fraction]:
        """The value as an exact rational when no CDF-weighted term occurs."""
        if any(t.z is not None for t in self.terms):
            return None
        return self.full_part

    @property
    def decimal_string(self) -> str:
        ex = self.exact
        if ex is not None and ex.denominator == 1:
            return str(ex.numerator)
        return format(self.value, ".12g")

    @property
    def term_breakdown(self) -> tuple[Term, ...]:
        return self.terms


def _logsumexp(values: Sequence[float]) -> float:
    top = max(values)
    if top == float("-inf"):
        return top
    return top + math.log(math.fsum(math.exp(v - top) for v in values))


def estimate_count(params: HeckeParams, setting: str, x: int, boundary: str = "full") -> EstimateValue:
    """Two-part growth estimate: full-weight terms plus CDF-weighted tail terms.

    ``boundary="full"`` puts ``n = x / q`` (when it divides) in the full sum only;
    ``"both"`` keeps it in both sums as literally written in the source formulas.
    """
    if boundary not in ("full", "both"):
        raise ValueError(f"boundary must be 'full' or 'both', got {boundary!r}")
    clt = clt_params(params, setting)
    nf, nt = clt.n_full_max(x), clt.n_tail_max(x)
    start = nf + 1
    if boundary == "both":
        q = 2 * (clt.r + 1) if clt.theorem else clt.r
        start = -(-x // q)
    base = clt.base
    full = clt.prefactor * sum(base**n for n in range(1, nf + 1))
    log_pref = math.log(clt.prefactor)
    log_base = math.log(base)
    mu = float(clt.mu)
    sigma = math.sqrt(float(clt.sigma2))

    ln10 = math.log(10.0)
    terms = [Term(n, (log_pref + n * log_base) / ln10) for n in range(1, nf + 1)]
    tail_logs = []
    last_z = math.inf
    for n in range(max(start, 1), nt + 1):
        z = (x - n * mu) / (math.sqrt(n) * sigma) if sigma > 0 else math.copysign(math.inf, x - n * mu)
        if not z < last_z:
            raise AssertionError(f"z not strictly decreasing at n={n}: {z} >= {last_z}")
        last_z = z
        lt = log_pref + n * log_base + (log_phi_cdf(z) if math.isfinite(z) else (0.0 if z > 0 else -math.inf))
        tail_logs.append(lt)
        terms.append(Term(n, lt / ln10, z))

    value = Decimal(full.numerator) / Decimal(full.denominator) if full else Decimal(0)
    if tail_logs:
        tail_ln = _logsumexp(tail_logs)
        if tail_ln > -math.inf:
            value = _DEC.add(value, _DEC.exp(Decimal(repr(tail_ln))))
    return EstimateValue(setting, x, boundary, Fraction(full), value, tuple(terms))


def modular_closed_form(x: int) -> int:
    """Reciprocal class count for p = 3: ``2**(x // 4) - 1``."""
    return 2 ** (x // 4) - 1


def class_counts(params: HeckeParams, x: int, method: str = "dp", parallel: int = 1) -> tuple[int, int]:
    """``(total, primitive)`` reciprocal class counts of length <= x."""
    if method == "dp":
        return reciprocal_class_count_exact(params, x), primitive_class_count_exact(params, x)
    if method == "enumerate":
        records = enumerate_reciprocal_classes(params, x, parallel=parallel)
    elif method == "oracle":
        records = oracle_enumerate_reciprocal(params, x)
    else:
        raise ValueError(f"unknown method {method!r}")
    prim, _ = split_primitive_counts(records)
    return len(records), prim


@dataclass(frozen=True)
class Lemma71Report:
    x: int
    lhs: int
    rhs: int  # x(x+1)/2 * |W_{x//2}|, the constant from the proof
    rhs_statement: int  # 2x(x+1) * |W_{x//2}|, the constant in the statement
    holds: bool
    holds_statement: bool


def check_lemma71(params: HeckeParams, x: int, method: str = "dp") -> Lemma71Report:
    total, prim = class_counts(params, x, method)
    half, _ = class_counts(params, x // 2, method)
    lhs = total - prim
    rhs = x * (x + 1) // 2 * half
    rhs_st = 2 * x * (x + 1) * half
    return Lemma71Report(x, lhs, rhs, rhs_st, lhs <= rhs, lhs <= rhs_st)


@dataclass(frozen=True)
class Lemma72Report:
    x: int
    w_half: int
    w_x: int
    min_c_squared: Fraction

    @property
    def min_c(self) -> float:
        return math.sqrt(self.min_c_squared)


def check_lemma72(params: HeckeParams, x: int, method: str = "dp") -> Lemma72Report:
    """Smallest ``C`` with ``2 |W_{x//2}|^2 <= C^2 |W_x|`` at this ``x``."""
    w_x, _ = class_counts(params, x, method)
    if w_x == 0:
        raise EmptyCountError(f"no reciprocal classes of length <= {x} for p={params.p}")
    w_half, _ = class_counts(params, x // 2, method)
    return Lemma72Report(x, w_half, w_x, Fraction(2 * w_half * w_half, w_x))


def primitive_ratio_series(
    params: HeckeParams, x_grid: Sequence[int], method: str = "dp"
) -> list[tuple[int, Optional[Fraction]]]:
    """``|W^p_x| / |W_x|`` per grid point; ``None`` where no class exists yet."""
    out = []
    for x in x_grid:
        total, prim = class_counts(params, x, method)
        out.append((x, Fraction(prim, total) if total else None))
    return out


__all__ = [
    "METHODS",
    "CltParams",
    "EstimateValue",
    "Lemma71Report",
    "Lemma72Report",
    "Term",
    "check_lemma71",
    "check_lemma72",
    "class_counts",
    "clt_params",
    "clt_params_r",
    "estimate_count",
    "log_phi_cdf",
    "modular_closed_form",
    "phi_cdf",
    "primitive_ratio_series",
    "weight_moments",
]
