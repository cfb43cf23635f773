"""The representation ring R(K).

Weight systems come from Freudenthal's recursion; dimensions from Weyl's
product formula; tensor products from Klimyk's alternation.  The inverse
direction, recovering a character from a weight multiset, is plain
highest-weight subtraction.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import GroupMismatch, NonDominant, NotACharacter
from .lie import (
    RootSystem,
    Weight,
    dominant_of,
    dominant_representative,
    is_dominant,
    weyl_orbit,
)

WeightMultiset = dict  # Weight -> positive int


def _require_dominant(lam, rs: RootSystem) -> Weight:
    lam = tuple(lam)
    if len(lam) != rs.dim:
        raise NonDominant(f"weight {lam} has wrong length for {rs}")
    if not is_dominant(lam, rs):
        raise NonDominant(f"{lam} is not dominant for {rs}")
    return lam


class CharacterElement:
    """A finite Z-combination of irreducible characters, keyed by highest
    weight.  Immutable; zero coefficients are dropped."""

    __slots__ = ("rs", "_coeffs", "_hash")

    def __init__(self, rs: RootSystem, coeffs: Mapping[Weight, int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Weight, int] = {}
        for w, c in items:
            w = tuple(w)
            if c == 0:
                continue
            _require_dominant(w, rs)
            clean[w] = clean.get(w, 0) + int(c)
        self.rs = rs
        self._coeffs = MappingProxyType({w: c for w, c in sorted(clean.items()) if c})
        self._hash = None

    @classmethod
    def irreducible(cls, lam, rs: RootSystem) -> "CharacterElement":
        return cls(rs, {tuple(lam): 1})

    @classmethod
    def trivial(cls, rs: RootSystem) -> "CharacterElement":
        return cls(rs, {(0,) * rs.dim: 1})

    @property
    def coeffs(self) -> Mapping[Weight, int]:
        return self._coeffs

    def __getitem__(self, w) -> int:
        return self._coeffs.get(tuple(w), 0)

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __eq__(self, other):
        if not isinstance(other, CharacterElement):
            return NotImplemented
        return self.rs == other.rs and dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rs, tuple(self._coeffs.items())))
        return self._hash

    def _check(self, other: "CharacterElement"):
        if self.rs != other.rs:
            raise GroupMismatch(f"{self.rs} vs {other.rs}")

    def __add__(self, other: "CharacterElement") -> "CharacterElement":
        self._check(other)
        acc = Counter(self._coeffs)
        acc.update(other._coeffs)
        return CharacterElement(self.rs, acc)

    def __neg__(self):
        return CharacterElement(self.rs, {w: -c for w, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CharacterElement):
            return tensor_elements(self, other)
        return CharacterElement(self.rs, {w: c * other for w, c in self.items()})

    __rmul__ = __mul__

    def dim(self) -> int:
        return sum(c * dim(w, self.rs) for w, c in self.items())

    def is_genuine(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def weights(self) -> Counter:
        """Weight multiset (for genuine characters)."""
        acc: Counter = Counter()
        for lam, c in self.items():
            for w, m in weight_multiplicities(lam, self.rs).items():
                acc[w] += c * m
        return acc

    def __repr__(self):
        body = ", ".join(f"{w}: {c}" for w, c in self.items())
        return f"CharacterElement({self.rs}, {{{body}}})"


@lru_cache(maxsize=None)
def _dominant_mults(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    rho = rs.rho
    # every weight of V_lam is reachable from lam by subtracting simple roots
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for a in rs.simple_roots:
                u = tuple(x - y for x, y in zip(v, a))
                if u in seen:
                    continue
                if rs.precedes(dominant_of(u, rs), lam):
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    dominant = [w for w in seen if is_dominant(w, rs)]
    height = {w: rs.inner([a - b for a, b in zip(lam, w)], rho) for w in dominant}
    dominant.sort(key=lambda w: (height[w], w))

    lam_rho = [a + r for a, r in zip(lam, rho)]
    top = rs.norm_sq(lam_rho)
    mult: dict[Weight, int] = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for alpha in rs.positive_roots:
            k = 1
            while True:
                v = tuple(x + k * a for x, a in zip(mu, alpha))
                if v not in seen:
                    break
                m = mult.get(dominant_of(v, rs), 0)
                if m:
                    total += m * rs.inner(v, alpha)
                k += 1
        denom = top - rs.norm_sq([a + r for a, r in zip(mu, rho)])
        value = 2 * total / denom
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu} in V{lam}")
        if value:
            mult[mu] = int(value)
    return tuple(sorted(mult.items()))


def dominant_weight_multiplicities(lam, rs: RootSystem) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V_lam."""
    lam = _require_dominant(lam, rs)
    return dict(_dominant_mults(rs, lam))


@lru_cache(maxsize=None)
def _all_mults(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    out = {}
    for mu, m in _dominant_mults(rs, lam):
        for w in weyl_orbit(mu, rs):
            out[w] = m
    return tuple(sorted(out.items()))


def weight_multiplicities(lam, rs: RootSystem) -> WeightMultiset:
    """Full weight system of V_lam as ``{weight: multiplicity}``."""
    lam = _require_dominant(lam, rs)
    return dict(_all_mults(rs, lam))


def dim(lam, rs: RootSystem) -> int:
    """Weyl dimension formula."""
    lam = _require_dominant(lam, rs)
    num = Fraction(1)
    for co in rs.positive_coroots:
        d = rs.pairing(rs.delta, co)
        num *= Fraction(rs.pairing(lam, co) + d, d)
    assert num.denominator == 1
    return int(num)


def dual(lam, rs: RootSystem) -> Weight:
    """Highest weight of the dual representation, ``-w0(lam)``."""
    lam = _require_dominant(lam, rs)
    return dominant_of(tuple(-x for x in lam), rs)


def tensor(lam, theta, rs: RootSystem) -> CharacterElement:
    """Decomposition of V_lam (x) V_theta by Klimyk's formula."""
    lam = _require_dominant(lam, rs)
    theta = _require_dominant(theta, rs)
    if dim(theta, rs) > dim(lam, rs):
        lam, theta = theta, lam
    return CharacterElement(rs, _klimyk(rs, lam, theta))


@lru_cache(maxsize=4096)
def _klimyk(rs: RootSystem, lam: Weight, theta: Weight) -> tuple[tuple[Weight, int], ...]:
    acc: Counter = Counter()
    delta = rs.delta
    for nu, m in _all_mults(rs, theta):
        x = tuple(a + b + d for a, b, d in zip(lam, nu, delta))
        rep = dominant_representative(x, rs)
        if rep is None:
            continue
        y, sign = rep
        acc[tuple(a - d for a, d in zip(y, delta))] += sign * m
    out = tuple(sorted((w, c) for w, c in acc.items() if c))
    if any(c < 0 for _, c in out):
        raise ArithmeticError(f"negative tensor multiplicity for {lam} x {theta}")
    return out


def tensor_elements(a: CharacterElement, b: CharacterElement) -> CharacterElement:
    if a.rs != b.rs:
        raise GroupMismatch(f"{a.rs} vs {b.rs}")
    acc: Counter = Counter()
    for lam, x in a.items():
        for theta, y in b.items():
            for mu, c in tensor(lam, theta, a.rs).items():
                acc[mu] += x * y * c
    return CharacterElement(a.rs, acc)


def decompose_weights(ws: Mapping[Weight, int], rs: RootSystem) -> CharacterElement:
    """Recover the character whose weight multiset is ``ws``.

    Raises NotACharacter when a multiplicity would go negative or a
    maximal remaining weight is not dominant.
    """
    remaining: dict[Weight, int] = {}
    for w, m in ws.items():
        w = tuple(w)
        if len(w) != rs.dim:
            raise NotACharacter(f"weight {w} has wrong length for {rs}")
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at {w}")
        if m:
            remaining[w] = remaining.get(w, 0) + m
    rho = rs.rho
    order = sorted(remaining, key=lambda w: (-rs.inner(w, rho), w))
    result: dict[Weight, int] = {}
    for w in order:
        c = remaining.get(w, 0)
        if c == 0:
            continue
        if not is_dominant(w, rs):
            raise NotACharacter(f"maximal weight {w} is not dominant")
        result[w] = c
        for u, m in _all_mults(rs, w):
            left = remaining.get(u, 0) - c * m
            if left < 0:
                raise NotACharacter(f"weight {u} of V{w} missing from the multiset")
            remaining[u] = left
    return CharacterElement(rs, result)


def convolve(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> Counter:
    """Weight multiset of a tensor product."""
    acc: Counter = Counter()
    for u, m in a.items():
        for v, n in b.items():
            acc[tuple(x + y for x, y in zip(u, v))] += m * n
    return acc
