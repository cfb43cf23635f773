"""Truncated elements of the completed character ring R^{-oo}(K).

A :class:`FormalSeries` is exact inside the open ball ``|mu| < trusted_radius``
and says nothing outside it: the stored data *is* ``X + O_K(r)``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .branching import SubgroupEmbedding, branch
from .characters import CharacterElement, _require_dominant, tensor
from .errors import (
    EmptyTrust,
    GroupMismatch,
    InsufficientRadius,
    NegativeCharacter,
    RadiusExceedsTrust,
)
from .lie import RootSystem, Weight, build_root_system


def inside(rs: RootSystem, w, radius: float) -> bool:
    """Exact test of ``|w| < radius``."""
    return rs.norm_sq(w) < Fraction(radius) ** 2


@dataclass(frozen=True)
class RadiusBound:
    """Input radius needed to know a restriction exactly up to ``output_radius``."""

    output_radius: float
    input_radius: float
    method: str = "hull"

    def R(self, c: float | None = None) -> float:
        if c is not None and c != self.output_radius:
            raise ValueError("bound was computed for a different output radius")
        return self.input_radius


@dataclass(frozen=True)
class FormalSeries:
    rs: RootSystem
    coeffs: Mapping[Weight, int]
    trusted_radius: float

    def __post_init__(self):
        if self.trusted_radius < 0 or math.isnan(self.trusted_radius):
            raise ValueError("trusted radius must be nonnegative")
        clean = {}
        for w, c in self.coeffs.items():
            w = _require_dominant(w, self.rs)
            if c and inside(self.rs, w, self.trusted_radius):
                clean[w] = int(c)
        object.__setattr__(self, "coeffs", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(self, "trusted_radius", float(self.trusted_radius))

    def __getitem__(self, mu) -> int:
        mu = tuple(mu)
        if not inside(self.rs, mu, self.trusted_radius):
            raise RadiusExceedsTrust(
                f"{mu} lies outside the trusted ball of radius {self.trusted_radius}")
        return self.coeffs.get(mu, 0)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (self.rs == other.rs and self.trusted_radius == other.trusted_radius
                and dict(self.coeffs) == dict(other.coeffs))

    def __hash__(self):
        return hash((self.rs, self.trusted_radius, tuple(self.coeffs.items())))

    def truncate(self, radius: float) -> "FormalSeries":
        if radius > self.trusted_radius:
            raise RadiusExceedsTrust(f"{radius} > {self.trusted_radius}")
        return FormalSeries(self.rs, self.coeffs, radius)


def from_character(c: CharacterElement, radius: float) -> FormalSeries:
    return FormalSeries(c.rs, dict(c.items()), radius)


def diff(a: FormalSeries, b: FormalSeries, r: float) -> list[tuple[Weight, int, int]]:
    """Weights inside radius ``r`` where the coefficients differ."""
    if a.rs != b.rs:
        raise GroupMismatch(f"{a.rs} vs {b.rs}")
    if r > min(a.trusted_radius, b.trusted_radius):
        raise RadiusExceedsTrust(
            f"radius {r} exceeds trusted radii {a.trusted_radius}, {b.trusted_radius}")
    keys = sorted(set(a.coeffs) | set(b.coeffs))
    return [(w, a.coeffs.get(w, 0), b.coeffs.get(w, 0)) for w in keys
            if inside(a.rs, w, r) and a.coeffs.get(w, 0) != b.coeffs.get(w, 0)]


def equal_up_to(a: FormalSeries, b: FormalSeries, r: float) -> bool:
    """True iff the coefficients agree on the open ball of radius ``r``."""
    return not diff(a, b, r)


def restrict_series(s: FormalSeries, emb: SubgroupEmbedding, bound: RadiusBound) -> FormalSeries:
    """Restriction to H: ``nu -> sum_mu N^mu_nu s(mu)`` over ``|mu| < R``."""
    if s.rs != emb.supergroup:
        raise GroupMismatch(f"series over {s.rs}, embedding from {emb.supergroup}")
    if s.trusted_radius < bound.input_radius:
        raise InsufficientRadius(
            f"series trusted to {s.trusted_radius}, restriction needs {bound.input_radius}")
    c = bound.output_radius
    acc: Counter = Counter()
    for mu, x in s.items():
        if not inside(s.rs, mu, bound.input_radius):
            continue
        for nu, n in branch(mu, emb).items():
            if inside(emb.subgroup, nu, c):
                acc[nu] += n * x
    return FormalSeries(emb.subgroup, acc, c)


def multiply_by_character(s: FormalSeries, c: CharacterElement) -> FormalSeries:
    """Product with a genuine character; the trusted radius shrinks by the
    largest highest-weight norm in ``c``."""
    if s.rs != c.rs:
        raise GroupMismatch(f"{s.rs} vs {c.rs}")
    if not c.is_genuine():
        raise NegativeCharacter("multiply_by_character needs nonnegative coefficients")
    shrink = max((math.sqrt(s.rs.norm_sq(t)) for t in c), default=0.0)
    radius = s.trusted_radius - shrink
    if radius <= 0:
        raise EmptyTrust(f"trusted radius {s.trusted_radius} does not exceed {shrink}")
    acc: Counter = Counter()
    for lam, x in s.items():
        for theta, y in c.items():
            for mu, m in tensor(lam, theta, s.rs).items():
                if inside(s.rs, mu, radius):
                    acc[mu] += m * x * y
    return FormalSeries(s.rs, acc, radius)


def external_product(s1: FormalSeries, s2: FormalSeries) -> FormalSeries:
    """Series over K1 x K2 with coefficients ``s1(mu1) * s2(mu2)``."""
    rs = build_root_system(s1.rs.group * s2.rs.group)
    radius = min(s1.trusted_radius, s2.trusted_radius)
    coeffs = {}
    for a, x in s1.items():
        for b, y in s2.items():
            w = a + b
            if inside(rs, w, radius):
                coeffs[w] = x * y
    return FormalSeries(rs, coeffs, radius)


def polytope_truncation(s: FormalSeries, P, n: int) -> FormalSeries:
    """Coefficients at weights interior to ``nP``, trusted to ``n * eps_P``.

    Only weights that are also inside the trusted ball are kept.
    """
    from .polytope import dilate

    if P.rs != s.rs:
        raise GroupMismatch(f"{P.rs} vs {s.rs}")
    nP = dilate(P, n)
    radius = n * math.sqrt(P.eps_sq)
    if s.trusted_radius < radius:
        raise InsufficientRadius(
            f"series trusted to {s.trusted_radius}, truncation needs {radius}")
    kept = {mu: x for mu, x in s.items() if nP.interior_contains(mu)}
    return FormalSeries(s.rs, kept, radius)
