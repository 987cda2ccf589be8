"""Propagation of vanishing results: the operator g_{I0,e} and the
monotone fixed point over a bounded box of L-dominant weights.

A weight lam stored in V_e certifies H^i(Sh^tor, nabla^sub(lam)) = 0 for all
i > e. The ledger is append-only and nested, V_0 <= V_1 <= ... <= V_{d-1}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .hasse import AmpMode, in_C_amp_proxy
from .rootsys import (
    Character, ContextError, ParabolicType, SystemContext, add,
    is_L_dominant, is_P0_relative_dominant, plethysm_weights, s_M, sub,
    two_rho_I0,
)

__all__ = [
    "WeightBox", "VanishingLedger", "g_apply", "constraint_shifts",
    "compute", "compute_all", "fixpoint", "vanishes", "seed_special",
    "all_parabolics", "SPECIAL_FAMILIES",
]

log = logging.getLogger(__name__)

Predicate = Callable[[Character], bool]


@dataclass(frozen=True)
class WeightBox:
    """L-dominant weights with kmin <= l_g <= ... <= l_1 <= kmax."""

    kmin: int
    kmax: int

    def __post_init__(self):
        if self.kmin > self.kmax:
            raise ValueError(f"empty box: kmin = {self.kmin} > kmax = {self.kmax}")

    def __contains__(self, lam: Sequence[int]) -> bool:
        return (is_L_dominant(lam) and self.kmin <= lam[-1]
                and lam[0] <= self.kmax)

    def points(self, g: int) -> list[Character]:
        """All box weights, sorted lexicographically."""
        pts = [tuple(reversed(c)) for c in
               combinations_with_replacement(range(self.kmin, self.kmax + 1), g)]
        return sorted(pts)


class VanishingLedger:
    """Per-degree certified vanishing sets inside a weight box."""

    def __init__(self, ctx: SystemContext, box: WeightBox,
                 mode: AmpMode = AmpMode.HASSE):
        self.ctx = ctx
        self.box = box
        self.mode = mode
        self.sets: list[set[Character]] = [set() for _ in range(ctx.d)]

    def member(self, e: int, lam: Character) -> bool:
        if e >= self.ctx.d:
            return True
        if not is_L_dominant(lam):
            return True
        if e < 0:
            return False
        return lam in self.sets[e]

    def predicate(self, e: int) -> Predicate:
        """member(e, .) as a closure; out-of-box dominant weights are unknown."""
        if e >= self.ctx.d:
            return lambda lam: True
        stored = self.sets[e]

        def member(lam: Character) -> bool:
            return lam in stored or not is_L_dominant(lam)
        return member

    def insert(self, e: int, weights: Iterable[Character]) -> bool:
        """Add weights to V_e and every V_e' above it; True if V_e grew."""
        new = {tuple(w) for w in weights} - self.sets[e]
        outside = [w for w in new if w not in self.box]
        if outside:
            raise ValueError(f"weights outside the box {self.box}: {sorted(outside)[:3]}")
        if not new:
            return False
        for e2 in range(e, self.ctx.d):
            self.sets[e2] |= new
        return True

    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]

    def is_nested(self) -> bool:
        return all(self.sets[e] <= self.sets[e + 1] for e in range(self.ctx.d - 1))

    def concentrated(self, e: int) -> set[Character]:
        """V_e minus V_{e-1}: weights first certified at degree e."""
        below = self.sets[e - 1] if e > 0 else set()
        return self.sets[e] - below

    def copy(self) -> VanishingLedger:
        other = VanishingLedger(self.ctx, self.box, self.mode)
        other.sets = [set(s) for s in self.sets]
        return other

    def __eq__(self, other):
        return (isinstance(other, VanishingLedger) and self.ctx == other.ctx
                and self.box == other.box and self.mode == other.mode
                and self.sets == other.sets)

    def __repr__(self):
        return (f"VanishingLedger(g={self.ctx.g}, p={self.ctx.p}, box={self.box}, "
                f"mode={self.mode.value}, sizes={self.sizes()})")


def all_parabolics(g: int) -> list[ParabolicType]:
    """Every I_0 inside I, in ascending bitmask order."""
    return [ParabolicType.from_bitmask(g, m) for m in range(1 << (g - 1))]


def _check_args(ctx: SystemContext, P0: ParabolicType, e: int):
    if not 0 <= e <= ctx.d - 1:
        raise ValueError(f"degree e must lie in 0..{ctx.d - 1}, got {e}")
    ctx.require_bound()
    if ctx.p <= P0.d0(ctx):
        raise ContextError(f"need p > d_0 = {P0.d0(ctx)} for I0 = {{{P0}}}, got p = {ctx.p}")


@lru_cache(maxsize=None)
def constraint_shifts(ctx: SystemContext, P0: ParabolicType, e: int) -> tuple[Character, ...]:
    """Distinct vectors mu^{d-e+k}_j + 2rho_{I0} - s_M over admissible (k, j, M).

    xi passes the intersection condition iff xi + shift lies in C for each.
    """
    d, g = ctx.d, ctx.g
    two_rho = two_rho_I0(ctx, P0)
    top = plethysm_weights(ctx, d - e).top
    out = set()
    for k in range(0, e + 1):
        size = P0.r0 - k
        if size < 0:
            break
        table = plethysm_weights(ctx, d - e + k)
        # top has multiplicity one (asserted by the table), so dedupe-and-drop is exact
        mus = [mu for mu in table.distinct if not (k == 0 and mu == top)]
        for M in combinations(P0.complement_roots, size):
            base = sub(two_rho, s_M(M, g))
            out.update(add(mu, base) for mu in mus)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _candidates(ctx: SystemContext, P0: ParabolicType, e: int, box: WeightBox,
                mode: AmpMode) -> tuple[tuple[Character, Character], ...]:
    """Box weights lam = top + xi with xi passing the C-independent tests."""
    top = plethysm_weights(ctx, ctx.d - e).top
    two_rho = two_rho_I0(ctx, P0)
    out = []
    for lam in box.points(ctx.g):
        xi = sub(lam, top)
        if not is_P0_relative_dominant(xi, P0):
            continue
        if not in_C_amp_proxy(add(xi, two_rho), P0, ctx, mode):
            continue
        out.append((lam, xi))
    return tuple(out)


def g_apply(P0: ParabolicType, e: int, C: Predicate, box: WeightBox,
            ctx: SystemContext, mode: AmpMode = AmpMode.HASSE) -> set[Character]:
    """Box part of g_{I0,e}(C), C given as a membership predicate."""
    _check_args(ctx, P0, e)
    shifts = constraint_shifts(ctx, P0, e)
    return {lam for lam, xi in _candidates(ctx, P0, e, box, mode)
            if all(C(add(xi, s)) for s in shifts)}


def compute(ledger: VanishingLedger, P0: ParabolicType, e: int,
            mode: Optional[AmpMode] = None) -> bool:
    """V_e <- V_e | g_{I0,e}(C_van^{e+1}); True if V_e grew."""
    ctx = ledger.ctx
    mode = ledger.mode if mode is None else mode
    _check_args(ctx, P0, e)
    shifts = constraint_shifts(ctx, P0, e)
    C = ledger.predicate(e + 1)
    known = ledger.sets[e]
    # evaluate everything against the current state, then merge
    new = [lam for lam, xi in _candidates(ctx, P0, e, ledger.box, mode)
           if lam not in known and all(C(add(xi, s)) for s in shifts)]
    changed = ledger.insert(e, new)
    log.debug("compute I0={%s} e=%d: %d new", P0, e, len(new))
    return changed


def _sweep_order(g: int, d: int) -> list[tuple[ParabolicType, int]]:
    return [(P0, e) for P0 in all_parabolics(g) for e in range(d - 1, -1, -1)]


def compute_all(ledger: VanishingLedger, mode: Optional[AmpMode] = None,
                order: Optional[Sequence[tuple[ParabolicType, int]]] = None) -> bool:
    """One sweep over every (I_0, e); True if anything changed."""
    if order is None:
        order = _sweep_order(ledger.ctx.g, ledger.ctx.d)
    changed = False
    for P0, e in order:
        changed |= compute(ledger, P0, e, mode)
    return changed


def fixpoint(ledger: VanishingLedger, mode: Optional[AmpMode] = None,
             order: Optional[Sequence[tuple[ParabolicType, int]]] = None,
             max_sweeps: int = 10_000) -> int:
    """Sweep until nothing changes. Returns the number of sweeps run,
    the final unchanged one included."""
    for sweeps in range(1, max_sweeps + 1):
        if not compute_all(ledger, mode, order):
            return sweeps
    raise RuntimeError(f"no fixed point after {max_sweeps} sweeps")


def vanishes(ledger: VanishingLedger, e: int, lam: Character) -> bool:
    return ledger.member(e, tuple(lam))


def _e1_parallel(k: int) -> Character:
    return (k - 1, k - 3)


def _e2_parallel(k: int) -> Character:
    return (k, k - 2)


# name -> (degree, weight of the family at parameter k < 0)
SPECIAL_FAMILIES = {
    "e1-parallel": (1, _e1_parallel),
    "e2-parallel": (2, _e2_parallel),
}


def special_family(ledger: VanishingLedger, family: str) -> tuple[int, set[Character]]:
    if ledger.ctx.g != 2:
        raise ValueError("special families exist only for g = 2")
    try:
        e, fn = SPECIAL_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(SPECIAL_FAMILIES)}") from None
    box = ledger.box
    weights = {fn(k) for k in range(box.kmin, 0)}
    return e, {w for w in weights if w in box}


def seed_special(ledger: VanishingLedger, family: str) -> bool:
    """Insert one of the sharper g = 2, I_0 = I closed-form families."""
    e, weights = special_family(ledger, family)
    return ledger.insert(e, weights)


def iter_sections(ledger: VanishingLedger) -> Iterator[tuple[int, list[Character]]]:
    for e, s in enumerate(ledger.sets):
        yield e, sorted(s)
