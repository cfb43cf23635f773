"""Concrete Hamiltonian models and their formal quantizations.

A Hermitian model is a vector space E with a linear action of K given by the
torus weights of E.  E* carries the negated weights, so the quantization is
the character of ``S(E*) = sum_j S^j(E*)``, one degree at a time.

Any irreducible V_mu inside S^j(E*) needs j below a computable degree bound
D(r) for |mu| < r to hold.  Two bounds are available:

* hull: if 0 is not in the convex hull of the weights, every weight of
  S^j(E*) has norm at least ``j * d`` with ``d`` the hull distance;
* Casimir: on S^j(E*) the Casimir operator is at least
  ``j * c_min + j (j - 1) * t``, with ``c_min`` the least Casimir value on
  E* and ``t`` the least eigenvalue of the pair operator on S^2(E*).

The second covers proper nonabelian actions whose torus weights surround 0,
such as SU(2) on C^2.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

import sympy

from .branching import SubgroupEmbedding
from .characters import (
    CharacterElement,
    _require_dominant,
    convolve,
    decompose_weights,
    tensor,
    weight_multiplicities,
)
from .errors import GroupMismatch, InvalidWeight, NotProper
from .lie import RootSystem, Weight, build_root_system
from .series import FormalSeries, RadiusBound, inside


@dataclass(frozen=True)
class CoadjointOrbitModel:
    mu: Weight
    rs: RootSystem

    def __post_init__(self):
        object.__setattr__(self, "mu", _require_dominant(self.rs.canonicalize(self.mu), self.rs))


def orbit_quantization(m: CoadjointOrbitModel) -> CharacterElement:
    return CharacterElement.irreducible(m.mu, m.rs)


@dataclass(frozen=True)
class HermitianModel:
    rs: RootSystem
    weights: tuple[Weight, ...]

    def __post_init__(self):
        ws = tuple(self.rs.canonicalize(w) for w in self.weights)
        if not ws:
            raise InvalidWeight("a Hermitian model needs at least one weight")
        object.__setattr__(self, "weights", ws)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def dual_weights(self) -> tuple[Weight, ...]:
        return tuple(tuple(-x for x in w) for w in self.weights)

    def restrict(self, emb: SubgroupEmbedding) -> "HermitianModel":
        if emb.supergroup != self.rs:
            raise GroupMismatch(f"model over {self.rs}, embedding from {emb.supergroup}")
        return HermitianModel(emb.subgroup, tuple(emb.restrict_weight(w) for w in self.weights))

    def __add__(self, other: "HermitianModel") -> "HermitianModel":
        """Direct sum ``E1 + E2`` under ``K1 x K2``."""
        rs = build_root_system(self.rs.group * other.rs.group)
        zeros1, zeros2 = (0,) * self.rs.dim, (0,) * other.rs.dim
        ws = [w + zeros2 for w in self.weights] + [zeros1 + w for w in other.weights]
        return HermitianModel(rs, tuple(ws))


class Properness(NamedTuple):
    proper: bool
    margin: Fraction  # squared distance from 0 to the weight hull


def _solve(gram: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    m = sympy.Matrix(gram)
    if m.det() == 0:
        return None
    sol = m.LUsolve(sympy.Matrix(rhs))
    return [Fraction(int(x.p), int(x.q)) for x in sol]


def hull_distance_sq(points: Sequence[Weight], rs: RootSystem) -> Fraction:
    """Squared trace-norm distance from 0 to conv(points), exactly.

    The nearest point lies in the relative interior of a face spanned by an
    affinely independent subset, so we project 0 onto every such affine
    span and keep the projections with nonnegative barycentric coordinates.
    """
    pts = sorted(set(points))
    best = min(rs.norm_sq(p) for p in pts)
    for size in range(2, min(len(pts), rs.dim + 1) + 1):
        for subset in itertools.combinations(pts, size):
            base = subset[0]
            dirs = [[a - b for a, b in zip(p, base)] for p in subset[1:]]
            gram = [[rs.inner(u, v) for v in dirs] for u in dirs]
            rhs = [-rs.inner(base, u) for u in dirs]
            coef = _solve(gram, rhs)
            if coef is None or any(c < 0 for c in coef) or sum(coef) > 1:
                continue
            proj = [Fraction(b) + sum(c * d[i] for c, d in zip(coef, dirs))
                    for i, b in enumerate(base)]
            best = min(best, rs.norm_sq(proj))
    return best


def properness_check(m: HermitianModel) -> Properness:
    """Torus-hull test: proper when 0 is outside conv(weights).

    Exact for tori; sufficient, but not necessary, for nonabelian K.
    """
    margin = hull_distance_sq(m.weights, m.rs)
    return Properness(margin > 0, margin)


def invariant_monomials(m: HermitianModel, max_degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of nonconstant weight-zero monomials up to ``max_degree``."""
    out = []
    for deg in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(m.dim), deg):
            total = [0] * m.rs.dim
            for k in combo:
                total = [a + b for a, b in zip(total, m.weights[k])]
            if not any(total):
                exps = [0] * m.dim
                for k in combo:
                    exps[k] += 1
                out.append(tuple(exps))
    return out


def casimir(nu, rs: RootSystem) -> Fraction:
    """Eigenvalue ``<nu, nu + 2 rho>`` of the Casimir on V_nu."""
    return rs.inner(nu, [a + 2 * r for a, r in zip(nu, rs.rho)])


class CasimirData(NamedTuple):
    c_min: Fraction
    t: Fraction


def casimir_data(m: HermitianModel) -> CasimirData:
    """Least Casimir value on E* and least pair-operator eigenvalue on S^2(E*)."""
    rs = m.rs
    comps = decompose_weights(Counter(m.dual_weights()), rs)
    cas = {b: casimir(b, rs) for b in comps}
    c_min = min(cas.values())
    t = None

    def consider(piece: Counter, shift: Fraction):
        nonlocal t
        for nu in decompose_weights(piece, rs):
            val = (casimir(nu, rs) - shift) / 2
            t = val if t is None else min(t, val)

    for b, mult in comps.items():
        ws = [w for w, k in weight_multiplicities(b, rs).items() for _ in range(k)]
        sym = Counter(tuple(x + y for x, y in zip(ws[i], ws[j]))
                      for i in range(len(ws)) for j in range(i, len(ws)))
        consider(sym, 2 * cas[b])
        if mult > 1 and len(ws) > 1:
            alt = Counter(tuple(x + y for x, y in zip(ws[i], ws[j]))
                          for i in range(len(ws)) for j in range(i + 1, len(ws)))
            consider(alt, 2 * cas[b])
    for b, g in itertools.combinations(comps, 2):
        for nu in tensor(b, g, rs):
            val = (casimir(nu, rs) - cas[b] - cas[g]) / 2
            t = val if t is None else min(t, val)
    return CasimirData(c_min, t)


class DegreeBound(NamedTuple):
    max_degree: int
    method: str


def _hull_degree(margin: Fraction, radius: float) -> int:
    # largest j with j * d < radius
    r2 = Fraction(radius) ** 2
    j = math.isqrt(int(r2 / margin))
    while j * j * margin >= r2 and j > 0:
        j -= 1
    while (j + 1) ** 2 * margin < r2:
        j += 1
    if j == 0 and r2 <= 0:
        return -1
    return j


def _casimir_degree(data: CasimirData, rs: RootSystem, radius: float) -> Optional[int]:
    c_min, t = data
    if c_min <= 0 or t < 0:
        return None
    rho = math.sqrt(rs.norm_sq(rs.rho))
    # |nu| < r  implies  <nu, nu + 2 rho> < r^2 + 2 r |rho|
    limit = (radius * radius + 2 * radius * rho) * (1 + 1e-12) + 1e-12
    j = 0
    while (j + 1) * c_min + (j + 1) * j * t < limit:
        j += 1
    return j


def degree_bound(m: HermitianModel, radius: float) -> DegreeBound:
    """Largest degree j for which S^j(E*) can contain V_mu with |mu| < radius."""
    found = []
    prop = properness_check(m)
    if prop.proper:
        found.append(DegreeBound(_hull_degree(prop.margin, radius), "hull"))
    cas = _casimir_degree(casimir_data(m), m.rs, radius)
    if cas is not None:
        found.append(DegreeBound(cas, "casimir"))
    if not found:
        raise NotProper(f"no degree bound: the weights {m.weights} do not give a proper moment map")
    return min(found)


def symmetric_power_weights(m: HermitianModel, max_degree: int) -> list[Counter]:
    """Weight multisets of S^j(E*) for j = 0..max_degree."""
    zero = (0,) * m.rs.dim
    table = [Counter({zero: 1})] + [Counter() for _ in range(max_degree)]
    for beta in m.dual_weights():
        # multiply by 1 / (1 - x^beta), degree by degree
        for j in range(1, max_degree + 1):
            for w, c in table[j - 1].items():
                table[j][tuple(a + b for a, b in zip(w, beta))] += c
    return table


def _threads() -> int:
    raw = os.environ.get("FQ_THREADS", "1").strip() or "1"
    n = int(raw)
    if n == 0:
        return os.cpu_count() or 1
    return max(n, 1)


def _map(fn, items):
    workers = _threads()
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _collect(parts: list[CharacterElement], rs: RootSystem, radius: float) -> FormalSeries:
    acc: Counter = Counter()
    for part in parts:
        for mu, c in part.items():
            if inside(rs, mu, radius):
                acc[mu] += c
    series = FormalSeries(rs, acc, radius)
    assert all(c > 0 for _, c in series.items()), "quantization must be admissible"
    return series


def hermitian_quantization(m: HermitianModel, radius: float) -> FormalSeries:
    """Multiplicities of V_mu in S(E*) for |mu| < radius."""
    bound = degree_bound(m, radius)
    slices = symmetric_power_weights(m, max(bound.max_degree, 0))
    parts = _map(lambda ws: decompose_weights(ws, m.rs), slices)
    return _collect(parts, m.rs, radius)


def reduced_space_multiplicity(m: HermitianModel, mu) -> int:
    """Multiplicity of V_mu in S(E*), the quantization of the reduced space at mu."""
    mu = _require_dominant(m.rs.canonicalize(mu), m.rs)
    radius = math.sqrt(m.rs.norm_sq(mu)) + 1.0
    return hermitian_quantization(m, radius)[mu]


def max_weight_norm(m: HermitianModel) -> float:
    return math.sqrt(max(m.rs.norm_sq(w) for w in m.weights))


def restriction_radius_bound(m: HermitianModel, emb: SubgroupEmbedding, c: float) -> RadiusBound:
    """Radius R such that only |mu| < R can feed restricted coefficients at |nu| < c.

    A component V_nu of S^j(E*)|_H with |nu| < c forces ``j <= D_H(c)``, and
    every K-weight of S^j(E*) has norm at most ``j * max_k |alpha_k|``.
    """
    sub = m.restrict(emb)
    top = max_weight_norm(m)
    prop = properness_check(sub)
    if prop.proper:
        return RadiusBound(c, top * c / math.sqrt(prop.margin), "hull")
    cas = _casimir_degree(casimir_data(sub), sub.rs, c)
    if cas is None:
        raise NotProper(f"restricted model over {sub.rs} has no degree bound")
    reach = cas * top
    return RadiusBound(c, reach * (1 + 1e-9) + 1e-9, "casimir")


def product_model_quantization(m: HermitianModel, theta, radius: float) -> FormalSeries:
    """Quantization of ``E x K.theta`` by brute force: each S^j(E*) (x) V_theta
    is convolved at the weight level and decomposed."""
    theta = _require_dominant(m.rs.canonicalize(theta), m.rs)
    reach = radius + math.sqrt(m.rs.norm_sq(theta))
    bound = degree_bound(m, reach)
    orbit = weight_multiplicities(theta, m.rs)
    slices = symmetric_power_weights(m, max(bound.max_degree, 0))
    parts = _map(lambda ws: decompose_weights(convolve(ws, orbit), m.rs), slices)
    return _collect(parts, m.rs, radius)
