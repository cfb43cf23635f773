import itertools
import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fquant.errors import (
    InvalidPolytope,
    NotAdapted,
    NotFullDimensional,
    NotInterior,
    OriginNotInterior,
)
from fquant.legendre import (
    divergence_criterion,
    interior_margin,
    legendre_inverse,
    potential,
    psi_T,
)
from fquant.lie import PSU, SU, U, Torus, build_root_system, group, is_dominant
from fquant.polytope import (
    AdaptedPolytope,
    biggest_ball_radius,
    check_adapted,
    dilate,
    edge_lattice_points,
    hull_facets,
    interval,
    one_skeleton_lattice_points,
    weight_system_of_P,
    weyl_hull,
)

SU2 = build_root_system(group(SU(2)))
U1 = build_root_system(group(U(1)))
U2 = build_root_system(group(U(2)))
T2 = build_root_system(group(Torus(2)))
PSU3 = build_root_system(group(PSU(3)))
SU3 = build_root_system(group(SU(3)))

SEGMENT = interval(SU2, 2)
HEXAGON = weyl_hull((1, 0, -1), PSU3)
SQUARE_T2 = AdaptedPolytope(((1, 1), (-1, -1), (1, -1), (-1, 1)), T2)
SQUARE_U2 = AdaptedPolytope(((1, 1), (-1, -1), (1, -1), (-1, 1)), U2)


def test_check_adapted_examples():
    assert check_adapted(SEGMENT).passed
    r = check_adapted(SQUARE_U2)
    assert (r.vertices_regular_lattice, r.w_invariant, r.delzant) == (False, True, True)
    assert check_adapted(HEXAGON).passed
    # the same hexagon on the full SU(3) weight lattice is not smooth
    assert not check_adapted(weyl_hull((2, 1), SU3)).delzant
    assert check_adapted(SQUARE_T2).passed


def test_construction_errors():
    with pytest.raises(NotFullDimensional):
        AdaptedPolytope(((1, 0), (2, 0)), T2)
    with pytest.raises(InvalidPolytope):
        AdaptedPolytope(((0, 0), (2, 0), (0, 2), (1, 0)), T2)
    with pytest.raises(OriginNotInterior):
        AdaptedPolytope(((0, 0), (2, 0), (0, 2)), T2).eps_sq


def test_check_adapted_invariances():
    tri = AdaptedPolytope(((2, 0), (0, 1), (1, 3)), T2)
    shifted = AdaptedPolytope(((3, 0), (0, -1), (1, 2), (2, 2)), U2)
    for P in (SEGMENT, HEXAGON, SQUARE_U2, shifted, tri):
        base = check_adapted(P)
        for perm in itertools.islice(itertools.permutations(P.vertices), 6):
            assert check_adapted(AdaptedPolytope(perm, P.rs)) == base
        for i in range(len(P.rs.simple_roots)):
            moved = AdaptedPolytope(tuple(P.rs.reflect(v, i) for v in P.vertices), P.rs)
            assert check_adapted(moved) == base


def test_dilation():
    assert dilate(SEGMENT, 3).vertices == ((-6,), (6,))
    for P in (SEGMENT, HEXAGON, SQUARE_T2):
        for n in range(1, 6):
            nP = dilate(P, n)
            assert check_adapted(nP).passed
            assert nP.eps_sq == n * n * P.eps_sq
    with pytest.raises(ValueError):
        dilate(SEGMENT, 0)


def test_one_skeleton():
    assert one_skeleton_lattice_points(SEGMENT) == [(0,), (1,), (2,)]
    assert one_skeleton_lattice_points(dilate(SEGMENT, 2)) == [(j,) for j in range(5)]
    assert one_skeleton_lattice_points(HEXAGON) == [(1, 0, -1)]
    assert one_skeleton_lattice_points(dilate(HEXAGON, 2)) == [(1, 1, -2), (2, -1, -1), (2, 0, -2)]


def test_weight_system():
    assert weight_system_of_P(SEGMENT) == Counter({(-2,): 1, (-1,): 1, (0,): 2, (1,): 1, (2,): 1})
    with pytest.raises(NotAdapted):
        weight_system_of_P(SQUARE_U2)
    for P in (SEGMENT, HEXAGON, dilate(HEXAGON, 2), SQUARE_T2):
        ws = weight_system_of_P(P)
        for w, m in ws.items():
            for i in range(len(P.rs.simple_roots)):
                assert ws[P.rs.reflect(w, i)] == m
        assert edge_lattice_points(P) <= set(ws)


def test_biggest_ball():
    assert biggest_ball_radius(interval(U1, 2)) == 2
    assert biggest_ball_radius(SQUARE_T2) == 1
    # trace norm on SU(2): the label 2 sits at distance sqrt2
    assert SEGMENT.eps_sq == 2
    # distance from 0 to the hexagon edge through (1,0,-1) and (1,-1,0)
    assert HEXAGON.eps_sq == Fraction(3, 2)


def test_hull_facets_square():
    assert hull_facets([(1, 1), (-1, -1), (1, -1), (-1, 1)]) == [
        ((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]


# -- Legendre map ----------------------------------------------------------

def test_psi_examples():
    assert np.allclose(psi_T(SEGMENT, [0.0]), [0.0])
    assert np.allclose(psi_T(HEXAGON, [0.0, 0.0]), [0, 0, 0])
    assert abs(psi_T(SEGMENT, [-40.0])[0] - 2) < 1e-12
    assert abs(psi_T(SEGMENT, [-700.0])[0] - 2) < 1e-12  # no overflow


def _fd_gradient(P, X, h=1e-5):
    pot = potential(P)
    g = np.zeros(len(X))
    for i in range(len(X)):
        e = np.zeros(len(X))
        e[i] = h
        g[i] = (pot.F(X + e) - pot.F(X - e)) / (2 * h)
    return g


@pytest.mark.parametrize("P", [SEGMENT, HEXAGON, SQUARE_T2], ids=["segment", "hexagon", "square"])
def test_psi_is_gradient(P):
    rng = np.random.default_rng(11)
    for _ in range(20):
        Y = rng.normal(size=P.rs.rank)
        fd = P.rs.from_lattice(list(_fd_gradient(P, -2 * Y)))
        assert np.allclose(psi_T(P, Y), [float(x) for x in fd], atol=1e-8)
    Y = np.array([1.0] * P.rs.rank)
    direct = potential(P).grad(-2 * Y)
    assert np.allclose(psi_T(P, Y), [float(x) for x in P.rs.from_lattice(list(direct))])


@pytest.mark.parametrize("P", [SEGMENT, HEXAGON, SQUARE_T2], ids=["segment", "hexagon", "square"])
def test_psi_lands_inside(P):
    rng = np.random.default_rng(5)
    for _ in range(500):
        Y = rng.normal(scale=3.0, size=P.rs.rank)
        x = np.array([float(c) for c in P.rs.lattice_coords(list(psi_T(P, Y)))])
        assert interior_margin(P, x) > 0


def _grid(P, count=50):
    """Interior points with margin at least 0.05 * eps_P, in ambient coordinates."""
    eps = math.sqrt(P.eps_sq)
    pts = np.array([[float(c) for c in p] for p in P.points])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    side = 2
    while True:
        axes = [np.linspace(a, b, side) for a, b in zip(lo, hi)]
        keep = [np.array(x) for x in itertools.product(*axes)
                if interior_margin(P, np.array(x)) >= 0.05 * eps]
        if len(keep) >= count:
            idx = np.linspace(0, len(keep) - 1, count).astype(int)
            return [np.array([float(v) for v in P.rs.from_lattice(list(keep[i]))]) for i in idx]
        side += 1


@pytest.mark.parametrize("P", [SEGMENT, HEXAGON], ids=["segment", "hexagon"])
def test_round_trip(P):
    for xi in _grid(P):
        Y = legendre_inverse(P, xi)
        assert np.linalg.norm(psi_T(P, Y) - xi) <= 1e-10


def test_inverse_examples():
    Y = legendre_inverse(SEGMENT, psi_T(SEGMENT, [0.0]))
    assert abs(Y[0]) < 1e-10
    Y = legendre_inverse(SEGMENT, [1.5])
    assert Y[0] < 0 and abs(psi_T(SEGMENT, Y)[0] - 1.5) <= 1e-10
    with pytest.raises(NotInterior):
        legendre_inverse(SEGMENT, [2.0])
    with pytest.raises(NotInterior):
        legendre_inverse(HEXAGON, [0.5, 0.0, 0.0])  # off the sum-zero plane


def test_divergence_examples():
    assert divergence_criterion([(1, 0), (0, 1), (-1, -1)])
    assert not divergence_criterion([(1, 0), (0, 1)])
    assert divergence_criterion([(1,), (-1,)])
    assert not divergence_criterion([(1, 0), (-1, 0)])
    assert not divergence_criterion([(1, 0), (0, 1), (-1, 0)])


def _bounded_direction(betas):
    """A nonzero v with <beta, v> <= 0 for all beta, when one exists."""
    d = len(betas[0])
    for v in itertools.product(range(-3, 4), repeat=d):
        if any(v) and all(sum(a * b for a, b in zip(beta, v)) <= 0 for beta in betas):
            return np.array(v, dtype=float)
    return None


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=5))
def test_divergence_numeric_corroboration(betas):
    exact = divergence_criterion(betas)
    B = np.array(betas, dtype=float)
    rng = np.random.default_rng(len(betas))
    if exact:
        for _ in range(10):
            v = rng.normal(size=2)
            v /= np.linalg.norm(v)
            # sum_j exp(t <beta_j, v>) > 1e6 somewhere before t = 200
            assert (B @ v).max() * 200 > math.log(1e6)
    else:
        v = _bounded_direction(betas)
        assert v is not None
        assert np.exp(200 * (B @ v)).sum() <= len(betas)


def test_dominance_of_skeleton_points():
    for P in (SEGMENT, dilate(HEXAGON, 3)):
        assert all(is_dominant(w, P.rs) for w in one_skeleton_lattice_points(P))
