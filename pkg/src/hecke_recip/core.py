"""Word algebra for the Hecke group as the free product Z2 * Zp.

A letter is an ``int``: ``IOTA`` (0) is the involution, a nonzero ``k`` is
the power ``g^k`` of the order-p generator with ``k`` normalized into
``(-p/2, p/2]``.  Words are immutable tuples of letters in free-product
reduced form (no two adjacent letters of the same kind).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .kernels import exponent_rank, least_rotation, smallest_period

IOTA = 0


class HeckeError(Exception):
    """Base class for errors raised by this package."""


class IdentityInputError(HeckeError, ValueError):
    pass


class TorsionInputError(HeckeError, ValueError):
    pass


class ParityMismatchError(HeckeError, ValueError):
    pass


class NotReciprocalError(HeckeError, ValueError):
    pass


class EmptyCountError(HeckeError, ValueError):
    pass


class WordSyntaxError(HeckeError, ValueError):
    """Malformed word text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class HeckeParams:
    """The group parameter ``p`` with its derived half ``r = p // 2``."""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int) or self.p < 3:
            raise ValueError(f"p must be an integer >= 3, got {self.p!r}")

    @property
    def r(self) -> int:
        return self.p // 2

    @property
    def parity(self) -> str:
        return "even" if self.p % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.p % 2 == 0

    @property
    def alphabet(self) -> tuple[int, ...]:
        """Normalized nonzero exponents, sorted ascending."""
        low = -self.r + 1 if self.is_even else -self.r
        return tuple(k for k in range(low, self.r + 1) if k)

    @property
    def gamma_tilde(self) -> Optional[int]:
        """Exponent of the involution g^r, present only for even p."""
        return self.r if self.is_even else None


def normalize_exponent(k: int, params: HeckeParams) -> Optional[int]:
    """Representative of ``k mod p`` in ``(-p/2, p/2]``; ``None`` when ``k = 0 mod p``."""
    p = params.p
    k %= p
    if k == 0:
        return None
    if 2 * k > p:
        k -= p
    return k


def _reduce(letters: Iterable[int], params: HeckeParams) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if a == IOTA:
            if stack and stack[-1] == IOTA:
                stack.pop()
            else:
                stack.append(IOTA)
            continue
        if stack and stack[-1] != IOTA:
            a += stack.pop()
        k = normalize_exponent(a, params)
        if k is not None:
            stack.append(k)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A reduced word; build through :func:`make_word` or :func:`parse_word`."""

    letters: tuple[int, ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = Word()


def make_word(letters: Iterable[int], params: HeckeParams) -> Word:
    """Reduce an arbitrary letter sequence (exponents unnormalized allowed)."""
    return Word(_reduce(letters, params))


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word read up to rotation."""

    letters: tuple[int, ...]

    @property
    def is_hyperbolic_shape(self) -> bool:
        n = len(self.letters)
        if n < 2 or n % 2:
            return False
        return all((a == IOTA) != (b == IOTA) for a, b in zip(self.letters, self.letters[1:]))

    def rotation(self) -> "CyclicWord":
        """The canonical (least) rotation."""
        if len(self.letters) < 2:
            return self
        start = least_rotation([_letter_rank(a) for a in self.letters])
        return CyclicWord(self.letters[start:] + self.letters[:start])

    @property
    def exponents(self) -> tuple[int, ...]:
        """Gamma exponents of the canonical rotation (hyperbolic shape only)."""
        return self.rotation().letters[1::2]

    def __str__(self) -> str:
        return format_word(Word(self.letters))


ClassKey = str


def _letter_rank(a: int) -> int:
    return 0 if a == IOTA else exponent_rank(a)


def multiply(a: Word, b: Word, params: HeckeParams) -> Word:
    return Word(_reduce(a.letters + b.letters, params))


def inverse(w: Word, params: HeckeParams) -> Word:
    return Word(tuple(IOTA if a == IOTA else normalize_exponent(-a, params) for a in reversed(w.letters)))


def conjugate(w: Word, u: Word, params: HeckeParams) -> Word:
    """``u w u^-1``."""
    return multiply(multiply(u, w, params), inverse(u, params), params)


def word_length(w: Word | CyclicWord, params: HeckeParams) -> int:
    return sum(1 if a == IOTA else abs(a) for a in w.letters)


def cyclic_reduce(w: Word, params: HeckeParams) -> tuple[CyclicWord, Word]:
    """Split ``w = u c u^-1`` with ``c`` cyclically reduced; returns ``(c, u)``."""
    if w.is_identity:
        raise IdentityInputError("the identity has no cyclically reduced core")
    core = list(w.letters)
    outer: list[int] = []
    while len(core) >= 2 and (core[0] == IOTA) == (core[-1] == IOTA):
        head, tail = core[0], core[-1]
        outer.append(head)
        core = core[1:-1]
        if head != IOTA:
            merged = normalize_exponent(head + tail, params)
            if merged is not None:
                core.append(merged)
    return CyclicWord(tuple(core)), make_word(outer, params)


def canonical_form(c: CyclicWord) -> ClassKey:
    """Text of the least rotation of ``c``; equal keys mean conjugate."""
    return str(c.rotation())


def are_conjugate(a: Word, b: Word, params: HeckeParams) -> bool:
    if a.is_identity or b.is_identity:
        return a.is_identity and b.is_identity
    ca, _ = cyclic_reduce(a, params)
    cb, _ = cyclic_reduce(b, params)
    if len(ca.letters) <= 1 or len(cb.letters) <= 1:
        # torsion: conjugate into a factor group, where conjugacy is equality
        return ca.letters == cb.letters
    return canonical_form(ca) == canonical_form(cb)


def is_reciprocal(w: Word, params: HeckeParams) -> bool:
    """True iff ``w`` is conjugate to its inverse."""
    if w.is_identity:
        raise IdentityInputError("reciprocity is defined for non-trivial elements")
    return are_conjugate(w, inverse(w, params), params)


def primitive_root(c: CyclicWord, params: HeckeParams) -> tuple[CyclicWord, int]:
    """Shortest cyclic word ``root`` and ``k`` with ``c = root^k``."""
    if not c.is_hyperbolic_shape:
        raise TorsionInputError(f"{c} is not of hyperbolic shape")
    d = smallest_period(c.letters)
    return CyclicWord(c.letters[:d]), len(c.letters) // d


_TOKEN = re.compile(r"\S+")
_GAMMA = re.compile(r"g\^([+-]?\d+)")


def parse_word(text: str, params: HeckeParams) -> Word:
    """Parse ``"i g^2 i g^-1"``-style text (or ``"e"``) into a reduced word."""
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
    if not tokens:
        raise WordSyntaxError("empty word", len(text))
    if tokens[0][0] == "e":
        if len(tokens) > 1:
            raise WordSyntaxError("'e' must stand alone", tokens[1][1])
        return IDENTITY
    letters = []
    for tok, pos in tokens:
        if tok == "i":
            letters.append(IOTA)
            continue
        m = _GAMMA.fullmatch(tok)
        if m is None:
            raise WordSyntaxError(f"unexpected token {tok!r}", pos)
        letters.append(int(m.group(1)))
    return make_word(letters, params)


def format_word(w: Word) -> str:
    if not w.letters:
        return "e"
    return " ".join("i" if a == IOTA else f"g^{a}" for a in w.letters)


def parse_cyclic(text: str, params: HeckeParams) -> CyclicWord:
    """Parse a class key back into its cyclic word."""
    w = parse_word(text, params)
    if w.is_identity:
        raise IdentityInputError("class keys are never the identity")
    c, u = cyclic_reduce(w, params)
    if not u.is_identity:
        raise WordSyntaxError(f"{text!r} is not cyclically reduced", 0)
    return c


def cycle_word(exponents: Iterable[int]) -> CyclicWord:
    """Cyclic word ``i g^c0 i g^c1 ...`` from already-normalized exponents."""
    letters: list[int] = []
    for k in exponents:
        letters.extend((IOTA, k))
    return CyclicWord(tuple(letters))
