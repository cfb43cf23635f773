"""K-adapted polytopes: adaptedness checks, dilation, one-skeleton lattice
points and the largest central ball.

Geometry is done exactly in lattice coordinates (a Z-basis of the weight
lattice, see :meth:`RootSystem.lattice_coords`).  Facets are found by brute
force over vertex subsets, which is fine in the small ranks we target.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Sequence

import sympy

from .characters import weight_multiplicities
from .errors import InvalidPolytope, NotAdapted, NotFullDimensional, OriginNotInterior
from .lie import RootSystem, Weight, is_dominant, is_regular

Facet = tuple[tuple[int, ...], Fraction]  # a.x <= b, a primitive


def _as_fractions(p) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in p)


def affine_rank(points: Sequence[Sequence]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    return sympy.Matrix(rows).rank()


def _frac(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return Fraction(int(x.p), int(x.q))


def _integral(v: Sequence) -> list[int]:
    fr = [_frac(x) for x in v]
    den = reduce(math.lcm, (x.denominator for x in fr), 1)
    return [int(x * den) for x in fr]


def primitive(v: Sequence) -> tuple[int, ...]:
    ints = _integral(v)
    g = reduce(math.gcd, (abs(x) for x in ints), 0)
    return tuple(x // g for x in ints) if g else tuple(ints)


def hull_facets(points: Sequence[Sequence]) -> list[Facet]:
    """Facet inequalities ``a.x <= b`` of a full-dimensional point cloud."""
    pts = [_as_fractions(p) for p in points]
    d = len(pts[0])
    found: set[Facet] = set()
    for subset in itertools.combinations(range(len(pts)), d):
        mat = sympy.Matrix([[*pts[i], -1] for i in subset])
        null = mat.nullspace()
        if len(null) != 1:
            continue
        vec = _integral(list(null[0]))
        a, b = vec[:d], vec[d]
        g = reduce(math.gcd, (abs(x) for x in a), 0)
        if g == 0:
            continue
        a = [x // g for x in a]
        b = Fraction(b, g)
        vals = [sum(x * y for x, y in zip(a, p)) - b for p in pts]
        if all(v <= 0 for v in vals):
            found.add((tuple(a), b))
        elif all(v >= 0 for v in vals):
            found.add((tuple(-x for x in a), -b))
    return sorted(found)


def _tight(facets: Sequence[Facet], p) -> list[tuple[int, ...]]:
    return [a for a, b in facets if sum(x * y for x, y in zip(a, p)) == b]


def _rank(rows) -> int:
    return sympy.Matrix(rows).rank() if rows else 0


@dataclass(frozen=True)
class AdaptedPolytope:
    """Candidate K-adapted polytope given by its exact vertex list.

    Nothing about adaptedness is assumed; :func:`check_adapted` reports it.
    Construction does insist on a full-dimensional polytope whose listed
    points are exactly its vertices.
    """

    vertices: tuple[Weight, ...]
    rs: RootSystem

    def __post_init__(self):
        verts = tuple(sorted({self.rs.canonicalize(v) for v in self.vertices}))
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2 or affine_rank(self.points) != self.rs.rank:
            raise NotFullDimensional(f"polytope is not full-dimensional in rank {self.rs.rank}")
        for v, p in zip(self.vertices, self.points):
            if _rank(_tight(self.facets, p)) != self.rs.rank:
                raise InvalidPolytope(f"{v} is not a vertex of the hull")

    @cached_property
    def points(self) -> tuple[tuple[Fraction, ...], ...]:
        """Vertices in lattice coordinates."""
        return tuple(_as_fractions(self.rs.lattice_coords(v)) for v in self.vertices)

    @cached_property
    def facets(self) -> list[Facet]:
        return hull_facets(self.points)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        """Index pairs of vertices joined by a 1-face."""
        d = self.rs.rank
        if d == 1:
            return [(0, 1)]
        out = []
        for i, j in itertools.combinations(range(len(self.points)), 2):
            ti = set(_tight(self.facets, self.points[i]))
            common = [a for a in _tight(self.facets, self.points[j]) if a in ti]
            if _rank(common) == d - 1:
                out.append((i, j))
        return out

    def contains(self, w, strict: bool = False) -> bool:
        x = self.rs.lattice_coords(w)
        for a, b in self.facets:
            s = sum(Fraction(p) * q for p, q in zip(x, a))
            if s > b or (strict and s == b):
                return False
        return True

    def interior_contains(self, w) -> bool:
        return self.contains(w, strict=True)

    @cached_property
    def eps_sq(self) -> Fraction:
        """Squared radius of the largest ball about 0 inside the polytope."""
        gram = sympy.Matrix(self.rs.lattice_gram())
        inv = gram.inv()
        best = None
        for a, b in self.facets:
            if b <= 0:
                raise OriginNotInterior("0 is not an interior point of the polytope")
            av = sympy.Matrix(a)
            q = (av.T * inv * av)[0, 0]
            val = Fraction(b) ** 2 / _frac(q)
            best = val if best is None else min(best, val)
        return best

    def to_json(self) -> dict:
        from .io import group_to_json

        return {"group": group_to_json(self.rs.group), "vertices": [list(v) for v in self.vertices]}


@dataclass(frozen=True)
class AdaptedReport:
    vertices_regular_lattice: bool
    w_invariant: bool
    delzant: bool

    @property
    def passed(self) -> bool:
        return self.vertices_regular_lattice and self.w_invariant and self.delzant

    def to_json(self) -> dict:
        return {
            "vertices_regular_lattice": self.vertices_regular_lattice,
            "w_invariant": self.w_invariant,
            "delzant": self.delzant,
            "adapted": self.passed,
        }


def _edge_directions(P: AdaptedPolytope, i: int) -> list[tuple[int, ...]]:
    out = []
    for a, b in P.edges:
        if i in (a, b):
            j = b if a == i else a
            out.append(primitive([x - y for x, y in zip(P.points[j], P.points[i])]))
    return out


def check_adapted(P: AdaptedPolytope) -> AdaptedReport:
    """Test the three adaptedness conditions independently."""
    rs = P.rs
    regular = all(
        all(x.denominator == 1 for x in p) and is_regular(v, rs)
        for v, p in zip(P.vertices, P.points))
    vset = set(P.vertices)
    invariant = all(
        {rs.reflect(v, i) for v in vset} == vset for i in range(len(rs.simple_roots)))
    delzant = True
    for i in range(len(P.vertices)):
        dirs = _edge_directions(P, i)
        if len(dirs) != rs.rank or abs(sympy.Matrix(dirs).det()) != 1:
            delzant = False
            break
    return AdaptedReport(regular, invariant, delzant)


def dilate(P: AdaptedPolytope, n: int) -> AdaptedPolytope:
    if n < 1:
        raise ValueError("dilation factor must be a positive integer")
    return AdaptedPolytope(tuple(tuple(n * x for x in v) for v in P.vertices), P.rs)


def edge_lattice_points(P: AdaptedPolytope) -> set[Weight]:
    """Every lattice point lying on a closed 1-face."""
    out = set()
    for i, j in P.edges:
        p, q = P.points[i], P.points[j]
        diff = [b - a for a, b in zip(p, q)]
        if not all(x.denominator == 1 for x in p + q):
            continue
        step = primitive(diff)
        count = next(int(d / s) for d, s in zip(diff, step) if s)
        for k in range(count + 1):
            x = [int(a) + k * s for a, s in zip(p, step)]
            out.add(tuple(int(c) for c in P.rs.from_lattice(x)))
    return out


def one_skeleton_lattice_points(P: AdaptedPolytope) -> list[Weight]:
    """Dominant lattice points on the closed 1-faces, sorted."""
    return sorted(w for w in edge_lattice_points(P) if is_dominant(w, P.rs))


def weight_system_of_P(P: AdaptedPolytope) -> Counter:
    """Weights, with multiplicity, of the sum of V_lambda over the dominant
    one-skeleton lattice points."""
    if not check_adapted(P).passed:
        raise NotAdapted("polytope is not K-adapted")
    acc: Counter = Counter()
    for lam in one_skeleton_lattice_points(P):
        acc.update(weight_multiplicities(lam, P.rs))
    return acc


def biggest_ball_radius(P: AdaptedPolytope) -> float:
    return math.sqrt(P.eps_sq)


def interval(rs: RootSystem, a: int) -> AdaptedPolytope:
    """The rank-one polytope ``[-a, a]``."""
    return AdaptedPolytope(((-a,), (a,)), rs)


def weyl_hull(mu, rs: RootSystem) -> AdaptedPolytope:
    """Convex hull of the Weyl orbit of ``mu``."""
    from .lie import weyl_orbit

    return AdaptedPolytope(tuple(weyl_orbit(rs.canonicalize(mu), rs)), rs)
