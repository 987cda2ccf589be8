from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from siegel_vanishing.hasse import (
    AmpMode, D_w, Divisor, chi_of, criterion_sums, divisor, explain_ample,
    hasse_criterion, hasse_functionals, in_C_amp_proxy, in_C_Ha,
    orbitally_p_close, z0_ample,
)
from siegel_vanishing.rootsys import ParabolicType, SystemContext, dot
from siegel_vanishing.weyl import (
    act, all_elements, from_word, identity, lower_neighbors, min_coset_reps,
    order_of, z_element,
)

C2 = SystemContext(2, 7)
C3 = SystemContext(3, 11)
EMPTY2, FULL2 = ParabolicType(2), ParabolicType.full(2)


def test_chi_closed_forms():
    p = C2.p
    for k1, k2 in product(range(-6, 4), repeat=2):
        lam = (k1, k2)
        assert chi_of(lam, from_word("s1", 2), C2) == (Fraction(k1, p + 1), Fraction(k2, p + 1))
        assert chi_of(lam, from_word("s2", 2), C2) == (
            Fraction(k1 + p * k2, p * p + 1), Fraction(k2 - p * k1, p * p + 1))
    assert chi_of((0, 0, 0), from_word("s1 s2 s3", 3), C3) == (0, 0, 0)


def _grid(g, lo=-5, hi=4, limit=100):
    pts = list(product(range(lo, hi + 1), repeat=g))
    step = max(1, len(pts) // limit)
    return pts[::step][:limit]


@pytest.mark.parametrize("ctx", [C2, C3], ids=["g2", "g3"])
def test_D_w_roundtrip(ctx):
    for w in all_elements(ctx.g):
        for lam in _grid(ctx.g):
            chi = chi_of(lam, w, ctx)
            assert D_w(chi, w, ctx) == lam
            # denominators divide p^r - 1
            r = order_of(z_element(ctx.g) * w.inverse())
            assert all((ctx.p ** r - 1) % Fraction(x).denominator == 0 for x in chi)


@pytest.mark.parametrize("ctx", [C2, C3], ids=["g2", "g3"])
def test_criterion_iff_positive_divisor(ctx):
    for w in all_elements(ctx.g):
        support = {u for _, u in lower_neighbors(w)}
        for lam in _grid(ctx.g, -4, 3, 60):
            D = divisor(lam, w, ctx)
            assert set(D) <= support
            crit = hasse_criterion(lam, w, ctx)
            all_pos = all(D[u] > 0 for u in support)
            assert crit == all_pos, (w, lam)
            # functional shortcut agrees with the literal sum
            sums = [s for _, s in criterion_sums(lam, w, ctx)]
            assert sums == [dot(lam, v) for v in hasse_functionals(w, ctx)]


@settings(max_examples=60)
@given(st.sampled_from(all_elements(3)),
       st.lists(st.integers(-12, 12), min_size=3, max_size=3),
       st.integers(2, 4))
def test_multiple_period_invariance(w, lam, m):
    u = z_element(3) * w.inverse()
    r = order_of(u)
    for alpha, base in criterion_sums(lam, w, C3):
        target = act(w, alpha.coroot(3))
        cur, total = tuple(lam), 0
        for i in range(m * r):
            total += C3.p ** i * dot(cur, target)
            cur = act(u, cur)
        assert (total > 0) == (base > 0)


@settings(max_examples=60)
@given(st.sampled_from(all_elements(3)),
       st.lists(st.integers(-12, 12), min_size=3, max_size=3),
       st.integers(1, 5))
def test_homogeneity(w, lam, c):
    scaled = tuple(c * x for x in lam)
    assert divisor(scaled, w, C3) == divisor(lam, w, C3).scaled(c)
    P = ParabolicType(3)
    assert in_C_Ha(scaled, P, C3) == in_C_Ha(tuple(lam), P, C3)


def test_divisor_examples():
    for p in (5, 7, 11):
        ctx = SystemContext(2, p)
        for k1, k2 in [(-3, -5), (0, 0), (2, -7)]:
            D = divisor((k1, k2), from_word("s1", 2), ctx)
            assert D[identity(2)] == Fraction(k1 - k2, p + 1)
            D = divisor((k1, k2), from_word("s2", 2), ctx)
            assert D[identity(2)] == Fraction(k2 - p * k1, p * p + 1)
    c = SystemContext(3, 7, strict=False)
    D = divisor((-1, -3, -5), from_word("s1 s2 s3", 3), c)
    assert D.by_label() == {"s2 s3": Fraction(5, 6), "s1 s3": Fraction(1, 2),
                            "s1 s2": Fraction(1, 6)}
    assert str(D) == "5/6 [s2 s3] + 1/2 [s1 s3] + 1/6 [s1 s2]"
    assert str(divisor((1, 2), identity(2), C2)) == "0"
    assert str(Divisor({identity(2): Fraction(-1, 2)})) == "-1/2 [e]"


def test_hasse_criterion_examples():
    assert hasse_criterion((5, 9), identity(2), C2)
    assert hasse_criterion((-2, -8), from_word("s2", 2), C2)
    for p in (5, 7, 11):
        ctx = SystemContext(2, p)
        for k in range(-5, 5):
            assert not hasse_criterion((k, k), from_word("s1", 2), ctx)


def test_cone_examples():
    assert in_C_Ha((-2, -8), EMPTY2, C2)
    assert in_C_Ha((-3, -3), FULL2, C2)
    assert not in_C_Ha((0, 0), FULL2, C2)
    assert not in_C_Ha((-3, -4), FULL2, C2)


def test_cone_g2_inequalities():
    for p in (5, 7):
        ctx = SystemContext(2, p)
        for k1, k2 in product(range(-30, 3), repeat=2):
            c1 = 0 > k1 and (p + 1) * k1 > (p - 1) * k2 and k2 > p * k1
            assert in_C_Ha((k1, k2), EMPTY2, ctx) == c1


def test_orbital_examples():
    assert orbitally_p_close((0, 0), C2)
    for p in (5, 7, 11):
        assert orbitally_p_close((-1, -1), SystemContext(2, p))
    # alpha = e1 - e2 has pairing 1; its orbit reaches e1 + e2 with pairing 2N - 1
    for N in range(1, 12):
        assert orbitally_p_close((N, N - 1), C2) == (2 * N - 1 <= C2.p - 1)


def test_z0_ample_examples():
    assert z0_ample((-1, -3), EMPTY2)
    assert not z0_ample((0, 0), EMPTY2)
    assert z0_ample((-2, -2), FULL2)


def test_amp_proxy_examples():
    c5 = SystemContext(2, 5)
    assert in_C_amp_proxy((-1, -3), EMPTY2, c5, AmpMode.HASSE)
    for mode in AmpMode:
        assert not in_C_amp_proxy((-3, -4), FULL2, C2, mode)
        assert in_C_amp_proxy((-3, -3), FULL2, C2, mode)
    assert explain_ample((-2, -8), EMPTY2, C2) is None
    assert "s2" in explain_ample((-1, -8), EMPTY2, C2)
    assert "not a character" in explain_ample((-1, -8), FULL2, C2)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_orbital_inside_hasse_cone(p):
    """Both proxies under-approximate the same cone; report any counterexample."""
    ctx = SystemContext(2, p)
    bad = []
    for P0 in (EMPTY2, FULL2):
        for lam in product(range(-25, 1), repeat=2):
            if in_C_amp_proxy(lam, P0, ctx, AmpMode.ORBITAL) and not in_C_Ha(lam, P0, ctx):
                bad.append((P0.bitmask, lam))
    assert bad == []


def test_cone_uses_coset_reps_only():
    # I0 = I: strata are the four coset reps, not all of W
    reps = min_coset_reps(FULL2)
    lam = (-3, -3)
    assert all(hasse_criterion(lam, w, C2) for w in reps)
    assert not all(hasse_criterion(lam, w, C2) for w in all_elements(2))
