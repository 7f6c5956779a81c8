import itertools
import random

import pytest

from wittorsion import gf
from wittorsion.ec import (
    INFINITY,
    CurveFq,
    CurveW2,
    PointFq,
    PointW2,
    ec_add_fq,
    ec_add_rat,
    ec_add_w2,
    ec_neg_fq,
    ec_neg_w2,
    ec_smul_fq,
    ec_smul_w2,
    enumerate_points_fq,
    enumerate_points_quartic,
    enumerate_points_w2,
    fermat_quartic,
    kernel_point,
    lift_point_any,
    point_order_fq,
    point_order_w2,
    rat_point,
    rat_point_order_up_to,
    reduce_point,
    two_torsion_abscissas,
)
from wittorsion.errors import PointNotOnCurve, SingularCurve
from wittorsion.witt2 import int_to_w2, teich

from oracles import GaloisRing, gr_inv, weil_count


F7 = gf.make_field(7)
E7 = CurveW2.from_ints(F7, 0, 1)
E0 = E7.reduction()


@pytest.mark.parametrize("p,a,b", [(7, 0, 1), (5, 4, 0)])
def test_point_counts_match_weil(p, a, b):
    n1 = len(enumerate_points_fq(CurveFq.from_ints(gf.make_field(p), a, b)))
    for k in (1, 2, 3, 4):
        E = CurveFq.from_ints(gf.make_field(p, k), a, b)
        assert len(enumerate_points_fq(E)) == weil_count(p, p + 1 - n1, k)


def test_frozen_counts():
    assert [weil_count(7, -4, k) for k in (1, 2, 3, 4)] == [12, 48, 324, 2496]
    assert [weil_count(5, -2, k) for k in (1, 2, 3, 4)] == [8, 32, 104, 640]


def test_fq_examples():
    P = PointFq(F7(0), F7(1))
    assert ec_smul_fq(E0, 2, P) == PointFq(F7(0), F7(6))
    assert point_order_fq(E0, P) == 3
    assert ec_add_fq(E0, P, INFINITY) == P
    assert ec_add_fq(E0, P, ec_neg_fq(E0, P)) == INFINITY
    pts = enumerate_points_fq(E0)
    assert pts[-1] == INFINITY and len(pts) == 12
    assert sorted(x.index for x in two_torsion_abscissas(E0)) == [3, 5, 6]
    with pytest.raises(PointNotOnCurve):
        ec_add_fq(E0, PointFq(F7(1), F7(1)), P)
    with pytest.raises(SingularCurve):
        CurveFq.from_ints(F7, 0, 0)


def test_fq_group_axioms_exhaustive():
    E = CurveFq.from_ints(gf.make_field(7, 2), 0, 1)
    pts = enumerate_points_fq(E)
    for P, Q in itertools.product(pts, repeat=2):
        assert ec_add_fq(E, P, Q) == ec_add_fq(E, Q, P)
    rng = random.Random(7)
    for _ in range(3000):
        P, Q, R = rng.choice(pts), rng.choice(pts), rng.choice(pts)
        assert ec_add_fq(E, ec_add_fq(E, P, Q), R) == ec_add_fq(E, P, ec_add_fq(E, Q, R))


@pytest.fixture(scope="module")
def table7():
    pts = enumerate_points_w2(E7)
    idx = {P: i for i, P in enumerate(pts)}
    tab = [[idx[ec_add_w2(E7, P, Q)] for Q in pts] for P in pts]
    return pts, idx, tab


def test_w2_points(table7):
    pts, idx, tab = table7
    assert len(pts) == 84 == 7 * 12
    assert len(set(pts)) == 84
    assert all(E7.contains(P) for P in pts)
    kernel = [P for P in pts if P.in_kernel()]
    assert len(kernel) == 7
    assert all(P.X.a0.is_zero() and P.Y == int_to_w2(1, F7) and P.Z.is_zero() for P in kernel)


def test_w2_group_axioms_exhaustive(table7):
    pts, idx, tab = table7
    n = len(pts)
    O = idx[PointW2.identity(F7)]
    for i, P in enumerate(pts):
        assert tab[i][O] == i
        assert tab[i][idx[ec_neg_w2(E7, P)]] == O
        for j in range(n):
            assert tab[i][j] == tab[j][i]
    for i, j, k in itertools.product(range(n), repeat=3):
        assert tab[tab[i][j]][k] == tab[i][tab[j][k]]


def test_reduction_homomorphism(table7):
    pts, idx, tab = table7
    for i, j in itertools.product(range(len(pts)), repeat=2):
        assert reduce_point(pts[tab[i][j]]) == ec_add_fq(E0, reduce_point(pts[i]), reduce_point(pts[j]))


def _gr_affine_add(G, P, Q, a):
    """Chord addition of affine points in the Galois ring; None if the
    denominator is not a unit."""
    (x1, y1), (x2, y2) = P, Q
    p, n = G.p, G.n
    if (x1[0] - x2[0]) % p == 0 and all((u - v) % p == 0 for u, v in zip(x1, x2)):
        return None
    d = tuple((u - v) % n for u, v in zip(x2, x1))
    dinv = gr_inv(G, d)
    lam = G.mul(tuple((u - v) % n for u, v in zip(y2, y1)), dinv)
    x3 = tuple((l - u - v) % n for l, u, v in zip(G.mul(lam, lam), x1, x2))
    y3 = tuple((w - v) % n for w, v in zip(G.mul(lam, tuple((u - v) % n for u, v in zip(x1, x3))), y1))
    return x3, y3


@pytest.mark.parametrize("p,k,a,b", [(7, 1, 0, 1), (7, 2, 0, 1), (5, 2, 4, 0)])
def test_w2_law_matches_galois_ring_chords(p, k, a, b):
    F = gf.make_field(p, k)
    E = CurveW2.from_ints(F, a, b)
    G = GaloisRing(F)
    rng = random.Random(99)
    base = [P for P in enumerate_points_fq(E.reduction()) if not P.is_infinity]
    kernel = [kernel_point(t) for t in gf.enumerate_field(F)]
    checked = 0
    for _ in range(300):
        P = ec_add_w2(E, lift_point_any(E, rng.choice(base)), rng.choice(kernel))
        Q = ec_add_w2(E, lift_point_any(E, rng.choice(base)), rng.choice(kernel))
        if not (P.is_affine() and Q.is_affine()):
            continue
        R = ec_add_w2(E, P, Q)
        want = _gr_affine_add(G, (G.image(P.X), G.image(P.Y)), (G.image(Q.X), G.image(Q.Y)), a)
        if want is None:
            continue
        assert R.is_affine()
        assert (G.image(R.X), G.image(R.Y)) == want
        checked += 1
    assert checked > 100


def test_fibers_have_size_q():
    F49 = gf.make_field(7, 2)
    E = CurveW2.from_ints(F49, 0, 1)
    pts = enumerate_points_w2(E)
    counts = {}
    for P in pts:
        counts[reduce_point(P)] = counts.get(reduce_point(P), 0) + 1
    assert len(counts) == 48 and set(counts.values()) == {49}


def test_kernel_is_additive_group():
    for s, t in itertools.product(gf.enumerate_field(F7), repeat=2):
        assert ec_add_w2(E7, kernel_point(s), kernel_point(t)) == kernel_point(s + t)
    for t in gf.units(F7):
        K = kernel_point(t)
        assert ec_smul_w2(E7, 7, K).is_identity()
        assert point_order_w2(E7, K) == 7


def test_lift_point_any():
    kernel = [kernel_point(t) for t in gf.enumerate_field(F7)]
    all_pts = enumerate_points_w2(E7)
    for P0 in enumerate_points_fq(E0):
        L = lift_point_any(E7, P0)
        assert reduce_point(L) == P0
        fiber = {P for P in all_pts if reduce_point(P) == P0}
        assert {ec_add_w2(E7, L, K) for K in kernel} == fiber
    L = lift_point_any(E7, PointFq(F7(6), F7(0)))
    assert L.Y.is_zero() and L.X.a0 == F7(6) and E7.contains(L)
    assert reduce_point(PointW2.identity(F7)) == INFINITY


def test_smul_composition():
    rng = random.Random(3)
    pts = enumerate_points_w2(E7)
    for _ in range(50):
        P = rng.choice(pts)
        m, n = rng.randrange(-20, 20), rng.randrange(-20, 20)
        assert ec_smul_w2(E7, m * n, P) == ec_smul_w2(E7, m, ec_smul_w2(E7, n, P))


def test_w2_errors():
    bad = PointW2.affine(teich(F7(1)), teich(F7(1)))
    with pytest.raises(PointNotOnCurve):
        ec_add_w2(E7, bad, PointW2.identity(F7))
    with pytest.raises(SingularCurve):
        CurveW2.from_ints(F7, 0, 7)  # reduces to y^2 = x^3


def test_rational_orders():
    assert rat_point_order_up_to(0, 1, rat_point(0, 1)) == 3
    assert rat_point_order_up_to(0, 1, rat_point(0, -1)) == 3
    assert rat_point_order_up_to(0, 1, rat_point(-1, 0)) == 2
    assert rat_point_order_up_to(0, 1, rat_point(2, 3), bound=12) == 6
    assert rat_point_order_up_to(0, 1, rat_point(2, 3), bound=5) is None
    assert ec_add_rat(0, 1, rat_point(0, 1), rat_point(0, 1)) == rat_point(0, -1)
    with pytest.raises(PointNotOnCurve):
        ec_add_rat(0, 1, rat_point(1, 1), rat_point(0, 1))


def test_quartic_enumeration():
    F5 = gf.make_field(5)
    pts, n_inf = enumerate_points_quartic(fermat_quartic(F5))
    assert [(x.index, y.index) for x, y in pts if not x] == [(0, 1), (0, 4)]
    assert [(x.index, y.index) for x, y in pts if x == 1] == [(1, 0)]
    assert n_inf == 2  # -1 = 2^2 mod 5
    assert enumerate_points_quartic(fermat_quartic(F7))[1] == 0  # -1 is a nonsquare mod 7
    F25 = gf.make_field(5, 2)
    pts25, n25 = enumerate_points_quartic(fermat_quartic(F25))
    assert len({x for x, _ in pts25}) >= 12
    assert all(y * y == 1 - x**4 for x, y in pts25)


def test_json():
    assert PointFq(F7(0), F7(1)).to_json() == {"x": "0", "y": "1"}
    assert INFINITY.to_json() == "infinity"
    assert PointW2.identity(F7).to_json() == ["(0, 0)", "(1, 0)", "(0, 0)"]
    assert kernel_point(F7(3)).to_json() == ["(0, 3)", "(1, 0)", "(0, 0)"]
