"""Root datum of Sp(2g): characters, roots, coroots and the weight tables
of the exterior powers of Sym^2 of the standard GL(g)-module.

Characters are plain tuples of integers ``(l_1, ..., l_g)`` in the basis
``e_1, ..., e_g`` of X*(T); rational characters are tuples of
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Sequence, Union

from sympy import isprime

__all__ = [
    "Character", "RatCharacter", "SystemContext", "Root", "ParabolicType",
    "PlethysmTable", "positive_roots", "levi_positive_roots", "simple_roots",
    "pairing", "two_rho_I0", "s_M", "plethysm_weights", "twist",
    "is_L_dominant", "is_in_XstarP0", "is_P0_relative_dominant",
    "add", "sub", "neg", "format_character", "parse_character",
    "format_rational",
]

Character = tuple[int, ...]
RatCharacter = tuple[Fraction, ...]
AnyCharacter = Union[Character, RatCharacter]


class ContextError(ValueError):
    """Invalid genus / prime / parabolic data."""


@dataclass(frozen=True)
class SystemContext:
    """Genus ``g`` and prime ``p`` of the mod-p Siegel variety.

    Frobenius exponent and Galois twist are fixed (n = 1, trivial twist):
    the group is split, so every character is defined over F_p.

    ``strict=False`` drops the p > g^2 bound. Divisors and Hasse criteria
    make sense for any prime; only the vanishing driver needs the bound.
    """

    g: int
    p: int
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.g < 2:
            raise ContextError(f"genus must be >= 2, got {self.g}")
        if not isprime(self.p):
            raise ContextError(f"p = {self.p} is not prime")
        if self.strict:
            self.require_bound()

    def require_bound(self):
        if self.p <= self.g * self.g:
            raise ContextError(f"need p > g^2 = {self.g * self.g}, got p = {self.p}")

    @property
    def d(self) -> int:
        return self.g * (self.g + 1) // 2


@dataclass(frozen=True, order=True)
class Root:
    """A positive root of type C_g.

    ``kind`` is ``"-"`` for e_i - e_j, ``"+"`` for e_i + e_j (i < j) and
    ``"2"`` for 2e_i (then ``j == i``). Indices are 1-based.
    """

    kind: str
    i: int
    j: int

    def vector(self, g: int) -> Character:
        v = [0] * g
        if self.kind == "-":
            v[self.i - 1] += 1
            v[self.j - 1] -= 1
        elif self.kind == "+":
            v[self.i - 1] += 1
            v[self.j - 1] += 1
        else:
            v[self.i - 1] = 2
        return tuple(v)

    def coroot(self, g: int) -> Character:
        if self.kind == "2":
            v = [0] * g
            v[self.i - 1] = 1
            return tuple(v)
        return self.vector(g)

    def __str__(self):
        if self.kind == "-":
            return f"e{self.i}-e{self.j}"
        if self.kind == "+":
            return f"e{self.i}+e{self.j}"
        return f"2e{self.i}"


@lru_cache(maxsize=None)
def positive_roots(g: int) -> tuple[Root, ...]:
    roots = [Root("-", i, j) for i, j in combinations(range(1, g + 1), 2)]
    roots += [Root("+", i, j) for i, j in combinations(range(1, g + 1), 2)]
    roots += [Root("2", i, i) for i in range(1, g + 1)]
    return tuple(roots)


@lru_cache(maxsize=None)
def levi_positive_roots(g: int) -> tuple[Root, ...]:
    return tuple(Root("-", i, j) for i, j in combinations(range(1, g + 1), 2))


@lru_cache(maxsize=None)
def simple_roots(g: int) -> tuple[Root, ...]:
    """Simple roots in generator order: s_1..s_{g-1} then s_g = s_{2e_g}."""
    return tuple(Root("-", i, i + 1) for i in range(1, g)) + (Root("2", g, g),)


@dataclass(frozen=True)
class ParabolicType:
    """Type I_0 of a parabolic inside the Siegel parabolic.

    ``I0`` holds indices ``i`` in 1..g-1, meaning e_i - e_{i+1} is in I_0.
    """

    g: int
    I0: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "I0", frozenset(self.I0))
        bad = [i for i in self.I0 if not 1 <= i < self.g]
        if bad:
            raise ContextError(f"I0 indices must lie in 1..{self.g - 1}, got {sorted(bad)}")

    @classmethod
    def full(cls, g: int) -> ParabolicType:
        return cls(g, frozenset(range(1, g)))

    @classmethod
    def from_bitmask(cls, g: int, mask: int) -> ParabolicType:
        return cls(g, frozenset(i for i in range(1, g) if mask >> (i - 1) & 1))

    @property
    def bitmask(self) -> int:
        return sum(1 << (i - 1) for i in self.I0)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Consecutive index blocks glued by I_0, e.g. I0={1} for g=3 -> ((1,2),(3,))."""
        out, cur = [], [1]
        for i in range(1, self.g):
            if i in self.I0:
                cur.append(i + 1)
            else:
                out.append(tuple(cur))
                cur = [i + 1]
        out.append(tuple(cur))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """phi_{I0}^+: the e_i - e_j with i < j in a common block."""
        return tuple(a for a in levi_positive_roots(self.g)
                     if self._block_of(a.i) == self._block_of(a.j))

    @cached_property
    def complement_roots(self) -> tuple[Root, ...]:
        """phi_L^+ minus phi_{I0}^+."""
        inside = set(self.positive_roots)
        return tuple(a for a in levi_positive_roots(self.g) if a not in inside)

    @property
    def r0(self) -> int:
        return len(self.complement_roots)

    def d0(self, ctx: SystemContext) -> int:
        return ctx.d + self.r0

    def _block_of(self, i: int) -> int:
        for n, b in enumerate(self.blocks):
            if i in b:
                return n
        raise IndexError(i)

    def __str__(self):
        return ",".join(f"s{i}" for i in sorted(self.I0))


def pairing(lam: AnyCharacter, alpha: Root) -> int | Fraction:
    """<lam, alpha^vee>."""
    return sum(x * y for x, y in zip(lam, alpha.coroot(len(lam))))


def dot(lam: AnyCharacter, v: Sequence[int]) -> int | Fraction:
    return sum(x * y for x, y in zip(lam, v))


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def s_M(M: Iterable[Root], g: int) -> Character:
    """Coordinate sum of the roots in M."""
    total = (0,) * g
    for a in M:
        total = add(total, a.vector(g))
    return total


def two_rho_I0(ctx: SystemContext, P0: ParabolicType) -> Character:
    """2 rho_{I0}, kept doubled so it stays integral."""
    return s_M(P0.complement_roots, ctx.g)


def is_L_dominant(lam: Sequence) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def is_in_XstarP0(lam: Sequence, P0: ParabolicType) -> bool:
    return all(lam[i - 1] == lam[i] for i in P0.I0)


def is_P0_relative_dominant(lam: Sequence, P0: ParabolicType) -> bool:
    """lam in X*(P_0)^+: in X*(P_0) and nonnegative on I minus I_0."""
    if not is_in_XstarP0(lam, P0):
        return False
    return all(lam[i - 1] >= lam[i] for i in range(1, len(lam)) if i not in P0.I0)


def twist(nu: Sequence) -> tuple:
    """w_0 w_{0,L}: negate and reverse coordinates."""
    return tuple(-x for x in reversed(nu))


@dataclass(frozen=True)
class PlethysmTable:
    """Weights of Lambda^n Sym^2 std, twisted into the anti-dominant convention."""

    n: int
    weights: tuple[Character, ...]
    top: Character

    @cached_property
    def distinct(self) -> tuple[Character, ...]:
        return tuple(sorted(set(self.weights)))

    def multiplicity(self, mu: Character) -> int:
        return self.weights.count(mu)


def _dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a <= b in the dominance order of GL_g (b - a a nonnegative sum of e_i - e_j)."""
    if sum(a) != sum(b):
        return False
    pa = pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa > pb:
            return False
    return True


@lru_cache(maxsize=None)
def plethysm_weights(ctx: SystemContext, n: int) -> PlethysmTable:
    d = ctx.d
    if not 0 <= n <= d:
        raise ValueError(f"exterior degree must lie in 0..{d}, got {n}")
    g = ctx.g
    basis = []
    for i, j in combinations_with_replacement(range(g), 2):
        v = [0] * g
        v[i] += 1
        v[j] += 1
        basis.append(tuple(v))
    untwisted = [tuple(sum(c) for c in zip(*subset)) if subset else (0,) * g
                 for subset in combinations(basis, n)]
    counts = Counter(untwisted)
    lex_top = max(counts)
    if counts[lex_top] != 1:
        raise AssertionError(
            f"highest weight {lex_top} of Lambda^{n} Sym^2 has multiplicity "
            f"{counts[lex_top]}, expected 1")
    assert all(not (_dominance_leq(lex_top, nu) and nu != lex_top) for nu in counts)
    weights = tuple(sorted(twist(nu) for nu in untwisted))
    assert len(weights) == comb(d, n)
    return PlethysmTable(n, weights, twist(lex_top))


def format_character(lam: Sequence) -> str:
    return " ".join(str(x) if not isinstance(x, Fraction) else format_rational(x)
                    for x in lam)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_character(text: str | Sequence[str], g: int | None = None) -> Character:
    """Parse ``"-1 -3 -5"``, ``"-1,-3,-5"``, ``"(-1,-3,-5)"`` or a token list."""
    if isinstance(text, str):
        tokens = text.replace("(", " ").replace(")", " ").replace(",", " ").split()
    else:
        tokens = [t for chunk in text for t in chunk.replace(",", " ").split()]
    try:
        lam = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise ValueError(f"bad weight {text!r}: {exc}") from None
    if g is not None and len(lam) != g:
        raise ValueError(f"weight {lam} has {len(lam)} coordinates, expected g = {g}")
    return lam
