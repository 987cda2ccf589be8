"""Generalized Hasse invariants on the flag space of G-Zips.

For a character lam and a stratum w, the section s_{lam,w} is built from the
rational character chi with D_w(chi) = lam, where
D_w(chi) = chi - p * (z w^-1) chi. Its divisor is supported on the lower
neighbours of w, and positivity of all its coefficients is the Hasse
criterion. Everything here is exact (ints and Fractions).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .rootsys import (
    Character, ParabolicType, RatCharacter, Root, SystemContext, dot,
    format_rational, is_in_XstarP0, levi_positive_roots, pairing,
    positive_roots, simple_roots,
)
from .weyl import (
    WeylElt, act, all_elements, lower_neighbors, min_coset_reps, order_of,
    word_label, z_element,
)

__all__ = [
    "AmpMode", "Divisor", "D_w", "chi_of", "divisor", "criterion_sums",
    "hasse_criterion", "hasse_functionals", "in_C_Ha", "orbitally_p_close",
    "z0_ample", "in_C_amp_proxy", "explain_ample",
]


class AmpMode(enum.Enum):
    HASSE = "hasse"
    ORBITAL = "orbital"


@dataclass
class Divisor:
    """Finite formal sum of stratum closures with rational coefficients."""

    terms: dict[WeylElt, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: Fraction(c) for w, c in self.terms.items() if c != 0}

    def __getitem__(self, key: WeylElt) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[WeylElt]:
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.terms == other.terms

    def scaled(self, c) -> Divisor:
        return Divisor({w: c * q for w, q in self.terms.items()})

    def by_label(self) -> dict[str, Fraction]:
        return {word_label(w): q for w, q in self.terms.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        # descending label order, the order strata are listed in print
        items = sorted(self.by_label().items(), reverse=True)
        out = []
        for n, (label, q) in enumerate(items):
            coef = format_rational(abs(q))
            if n == 0:
                out.append(f"{'-' if q < 0 else ''}{coef} [{label}]")
            else:
                out.append(f" {'-' if q < 0 else '+'} {coef} [{label}]")
        return "".join(out)


@lru_cache(maxsize=None)
def _frobenius_twist(w: WeylElt) -> WeylElt:
    """z w^-1."""
    return z_element(w.g) * w.inverse()


def D_w(chi, w: WeylElt, ctx: SystemContext) -> tuple:
    u = _frobenius_twist(w)
    return tuple(a - ctx.p * b for a, b in zip(chi, act(u, chi)))


def chi_of(lam, w: WeylElt, ctx: SystemContext) -> RatCharacter:
    """The rational character chi with D_w(chi) = lam."""
    u = _frobenius_twist(w)
    r = order_of(u)
    total = [0] * ctx.g
    cur = tuple(lam)
    for i in range(r):
        total = [t + ctx.p ** i * c for t, c in zip(total, cur)]
        cur = act(u, cur)
    scale = Fraction(-1, ctx.p ** r - 1)
    return tuple(scale * t for t in total)


def divisor(lam: Character, w: WeylElt, ctx: SystemContext) -> Divisor:
    chi = chi_of(lam, w, ctx)
    g = ctx.g
    terms = {}
    for alpha, u in lower_neighbors(w):
        terms[u] = -dot(chi, act(w, alpha.coroot(g)))
    return Divisor(terms)


def criterion_sums(lam: Character, w: WeylElt, ctx: SystemContext) -> list[tuple[Root, int]]:
    """For each alpha in E_w, sum_{i<r} p^i <(z w^-1)^i lam, w alpha^vee>."""
    u = _frobenius_twist(w)
    r = order_of(u)
    g = ctx.g
    out = []
    for alpha, _ in lower_neighbors(w):
        target = act(w, alpha.coroot(g))
        cur, total = tuple(lam), 0
        for i in range(r):
            total += ctx.p ** i * dot(cur, target)
            cur = act(u, cur)
        out.append((alpha, total))
    return out


def hasse_criterion(lam: Character, w: WeylElt, ctx: SystemContext) -> bool:
    return all(s > 0 for _, s in criterion_sums(lam, w, ctx))


@lru_cache(maxsize=None)
def hasse_functionals(w: WeylElt, ctx: SystemContext) -> tuple[Character, ...]:
    """Integer vectors v with criterion sum = <lam, v>, one per alpha in E_w.

    Uses <u^i lam, b> = <lam, u^-i b> (signed permutations are orthogonal).
    """
    u_inv = _frobenius_twist(w).inverse()
    r = order_of(u_inv)
    g = ctx.g
    out = []
    for alpha, _ in lower_neighbors(w):
        cur = act(w, alpha.coroot(g))
        total = [0] * g
        for i in range(r):
            total = [t + ctx.p ** i * c for t, c in zip(total, cur)]
            cur = act(u_inv, cur)
        out.append(tuple(total))
    return tuple(out)


@lru_cache(maxsize=None)
def _cone_functionals(P0: ParabolicType, ctx: SystemContext) -> tuple[tuple[WeylElt, Character], ...]:
    return tuple((w, v) for w in min_coset_reps(P0) for v in hasse_functionals(w, ctx))


def in_C_Ha(lam: Character, P0: ParabolicType, ctx: SystemContext) -> bool:
    """lam in X*(P_0) with a Hasse invariant on every stratum w in ^{I0}W."""
    if not is_in_XstarP0(lam, P0):
        return False
    return all(dot(lam, v) > 0 for _, v in _cone_functionals(P0, ctx))


@lru_cache(maxsize=None)
def _coroot_orbits(g: int) -> tuple[tuple[Character, frozenset[Character]], ...]:
    out = []
    for a in positive_roots(g):
        c = a.coroot(g)
        out.append((c, frozenset(act(w, c) for w in all_elements(g))))
    return tuple(out)


def orbitally_p_close(lam: Character, ctx: SystemContext) -> bool:
    # negative roots give the same ratios as their positive counterparts
    for c, orbit in _coroot_orbits(ctx.g):
        base = abs(dot(lam, c))
        if base == 0:
            continue
        if max(abs(dot(lam, v)) for v in orbit) > (ctx.p - 1) * base:
            return False
    return True


def z0_ample(lam: Character, P0: ParabolicType) -> bool:
    g = len(lam)
    levi = set(levi_positive_roots(g))
    compact_ok = all(pairing(lam, a) > 0 for a in simple_roots(g)[:-1]
                     if a.i not in P0.I0)
    noncompact_ok = all(pairing(lam, a) < 0 for a in positive_roots(g) if a not in levi)
    return compact_ok and noncompact_ok


def in_C_amp_proxy(lam: Character, P0: ParabolicType, ctx: SystemContext,
                   mode: AmpMode = AmpMode.HASSE) -> bool:
    """Certified under-approximation of the D-ample cone C_{amp,I0}."""
    if not is_in_XstarP0(lam, P0):
        return False
    if mode is AmpMode.HASSE:
        return in_C_Ha(lam, P0, ctx)
    return orbitally_p_close(lam, ctx) and z0_ample(lam, P0)


def explain_ample(lam: Character, P0: ParabolicType, ctx: SystemContext,
                  mode: AmpMode = AmpMode.HASSE) -> Optional[str]:
    """None when lam passes the proxy, otherwise a one-line reason."""
    if not is_in_XstarP0(lam, P0):
        return f"{lam} is not a character of P_0 (I0 = {{{P0}}})"
    if mode is AmpMode.HASSE:
        for w in min_coset_reps(P0):
            for alpha, s in criterion_sums(lam, w, ctx):
                if s <= 0:
                    return (f"no Hasse invariant on stratum [{word_label(w)}]: "
                            f"criterion sum for root {alpha} is {s}")
        return None
    if not z0_ample(lam, P0):
        return "not Z_0-ample"
    if not orbitally_p_close(lam, ctx):
        return f"not orbitally {ctx.p}-close"
    return None
