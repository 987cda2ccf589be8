"""The Weyl group W(C_g) as signed permutations of {1..g}."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from .rootsys import (
    AnyCharacter, ParabolicType, Root, positive_roots,
)

__all__ = [
    "WeylElt", "identity", "compose", "inverse", "act", "generator", "from_word", "parse_element",
    "reduced_word", "word_label", "length", "longest_element",
    "longest_of_parabolic", "z_element", "bruhat_leq", "lower_neighbors",
    "min_coset_reps", "order_of", "all_elements", "reflection",
]


@dataclass(frozen=True, order=True)
class WeylElt:
    """Signed permutation: ``images[i-1] = +-k`` means w(e_i) = +-e_k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def g(self) -> int:
        return len(self.images)

    def __mul__(self, other: WeylElt) -> WeylElt:
        return compose(self, other)

    def __call__(self, lam: AnyCharacter) -> tuple:
        return act(self, lam)

    def inverse(self) -> WeylElt:
        return inverse(self)

    def length(self) -> int:
        return length(self)

    def __str__(self):
        return "[" + " ".join(f"{x:+d}" for x in self.images) + "]"


def identity(g: int) -> WeylElt:
    return WeylElt(tuple(range(1, g + 1)))


def compose(u: WeylElt, w: WeylElt) -> WeylElt:
    """u o w."""
    out = []
    for x in w.images:
        y = u.images[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return WeylElt(tuple(out))


def inverse(w: WeylElt) -> WeylElt:
    out = [0] * w.g
    for i, x in enumerate(w.images, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    return WeylElt(tuple(out))


def act(w: WeylElt, lam: AnyCharacter) -> tuple:
    out = [0] * w.g
    for i, x in enumerate(w.images):
        out[abs(x) - 1] = lam[i] if x > 0 else -lam[i]
    return tuple(out)


def generator(g: int, i: int) -> WeylElt:
    """s_i: swap of e_i, e_{i+1} for i < g; sign change of e_g for i = g."""
    if not 1 <= i <= g:
        raise ValueError(f"no generator s{i} for g = {g}")
    images = list(range(1, g + 1))
    if i < g:
        images[i - 1], images[i] = images[i], images[i - 1]
    else:
        images[g - 1] = -g
    return WeylElt(tuple(images))


def reflection(alpha: Root, g: int) -> WeylElt:
    images = list(range(1, g + 1))
    i, j = alpha.i, alpha.j
    if alpha.kind == "-":
        images[i - 1], images[j - 1] = j, i
    elif alpha.kind == "+":
        images[i - 1], images[j - 1] = -j, -i
    else:
        images[i - 1] = -i
    return WeylElt(tuple(images))


def _is_positive(v: Sequence[int]) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector is not a root")


@lru_cache(maxsize=None)
def length(w: WeylElt) -> int:
    """Number of positive roots sent to negative roots."""
    g = w.g
    return sum(1 for a in positive_roots(g) if not _is_positive(act(w, a.vector(g))))


def from_word(text: str | Sequence[str], g: int) -> WeylElt:
    """Product of generators, left to right. ``""`` and ``"e"`` give the identity."""
    tokens = text.split() if isinstance(text, str) else list(text)
    w = identity(g)
    for tok in tokens:
        if tok == "e":
            continue
        if not (tok.startswith("s") and tok[1:].isdigit()):
            raise ValueError(f"unknown token {tok!r} (expected s1..s{g})")
        i = int(tok[1:])
        if not 1 <= i <= g:
            raise ValueError(f"unknown token {tok!r} (expected s1..s{g})")
        w = w * generator(g, i)
    return w


def parse_element(text: str, g: int) -> WeylElt:
    """Accepts a word ``"s2 s1"`` or a signed one-line form ``"[+2 -1]"``."""
    text = text.strip()
    if text.startswith("["):
        images = tuple(int(t) for t in text.strip("[]").replace(",", " ").split())
        if len(images) != g:
            raise ValueError(f"{text!r} has {len(images)} entries, expected {g}")
        return WeylElt(images)
    return from_word(text, g)


@lru_cache(maxsize=None)
def reduced_word(w: WeylElt) -> tuple[int, ...]:
    """Lexicographically smallest reduced word, as generator indices."""
    word = []
    g = w.g
    while length(w) > 0:
        # any left descent can start a reduced word, so greedy is lex-minimal
        for i in range(1, g + 1):
            sw = generator(g, i) * w
            if length(sw) < length(w):
                word.append(i)
                w = sw
                break
    return tuple(word)


def word_label(w: WeylElt) -> str:
    word = reduced_word(w)
    return " ".join(f"s{i}" for i in word) if word else "e"


@lru_cache(maxsize=None)
def longest_element(g: int) -> WeylElt:
    return WeylElt(tuple(-i for i in range(1, g + 1)))


@lru_cache(maxsize=None)
def longest_of_parabolic(P0: ParabolicType) -> WeylElt:
    """Longest element of W_{I0}: reverses each block of I_0."""
    images = [0] * P0.g
    for block in P0.blocks:
        for a, b in zip(block, reversed(block)):
            images[a - 1] = b
    return WeylElt(tuple(images))


@lru_cache(maxsize=None)
def z_element(g: int) -> WeylElt:
    """z = w_0 w_{0,I}; acts by (m_1..m_g) -> (-m_g..-m_1)."""
    return longest_element(g) * longest_of_parabolic(ParabolicType.full(g))


@lru_cache(maxsize=None)
def bruhat_leq(u: WeylElt, w: WeylElt) -> bool:
    """u <= w in Bruhat order, by the lifting property along a left descent of w."""
    if length(u) > length(w):
        return False
    if length(w) == 0:
        return length(u) == 0
    s = generator(w.g, reduced_word(w)[0])
    sw = s * w
    su = s * u
    if length(su) < length(u):
        return bruhat_leq(su, sw)
    return bruhat_leq(u, sw)


@lru_cache(maxsize=None)
def lower_neighbors(w: WeylElt) -> tuple[tuple[Root, WeylElt], ...]:
    """Pairs (alpha, w s_alpha) with alpha in E_w."""
    g = w.g
    lw = length(w)
    out = []
    for a in positive_roots(g):
        u = w * reflection(a, g)
        if length(u) == lw - 1:
            out.append((a, u))
    return tuple(out)


@lru_cache(maxsize=None)
def all_elements(g: int) -> tuple[WeylElt, ...]:
    """All 2^g g! elements, sorted by (length, reduced word)."""
    elts = [WeylElt(tuple(s * p for s, p in zip(signs, perm)))
            for perm in permutations(range(1, g + 1))
            for signs in product((1, -1), repeat=g)]
    return tuple(sorted(elts, key=lambda w: (length(w), reduced_word(w))))


@lru_cache(maxsize=None)
def min_coset_reps(P0: ParabolicType) -> tuple[WeylElt, ...]:
    """Minimal length representatives of W_{I0} \\ W."""
    g = P0.g
    gens = [generator(g, i) for i in sorted(P0.I0)]
    return tuple(w for w in all_elements(g)
                 if all(length(s * w) > length(w) for s in gens))


@lru_cache(maxsize=None)
def order_of(w: WeylElt) -> int:
    e = identity(w.g)
    r, u = 1, w
    while u != e:
        u = u * w
        r += 1
    return r

