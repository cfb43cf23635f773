"""Root data, Weyl group combinatorics and norms.

Groups are finite products of factors of four kinds:

``torus``  rank-k torus, k integer coordinates, no roots.
``U``      U(n), n integer coordinates, dominant means weakly decreasing.
``SU``     SU(n), n-1 integer coordinates ``(l_1 - l_n, ..., l_{n-1} - l_n)``;
           the full SU(n) weight lattice (SU(2) weight ``[m]`` is the
           Dynkin label).
``PSU``    adjoint form of SU(n), n integer coordinates summing to zero;
           the weight lattice is the root lattice of SU(n).

Weights are plain tuples of ints in the concatenated "ambient" coordinates.
The invariant inner product is the trace form: Euclidean on U, torus and
PSU blocks, and the Euclidean product of the sum-zero projections on SU
blocks.  All norm comparisons are done on exact squared norms.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidGroup, InvalidWeight

Weight = tuple[int, ...]

KINDS = ("torus", "U", "SU", "PSU")


@dataclass(frozen=True)
class Factor:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidGroup(f"unknown factor kind {self.kind!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise InvalidGroup("factor size must be an integer")
        minimum = 2 if self.kind in ("SU", "PSU") else 1
        if self.n < minimum:
            raise InvalidGroup(f"{self.kind} factor needs n >= {minimum}")

    @property
    def dim(self) -> int:
        """Number of ambient coordinates."""
        return self.n - 1 if self.kind == "SU" else self.n

    @property
    def rank(self) -> int:
        return self.n - 1 if self.kind in ("SU", "PSU") else self.n

    def __str__(self):
        if self.kind == "torus":
            return f"T{self.n}"
        return f"{self.kind}({self.n})"


def Torus(k: int) -> Factor:
    return Factor("torus", k)


def U(n: int) -> Factor:
    return Factor("U", n)


def SU(n: int) -> Factor:
    return Factor("SU", n)


def PSU(n: int) -> Factor:
    return Factor("PSU", n)


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[Factor, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise InvalidGroup("a group needs at least one factor")

    @property
    def total_rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    def __mul__(self, other: "GroupSpec") -> "GroupSpec":
        return GroupSpec(self.factors + other.factors)

    def __str__(self):
        return "x".join(str(f) for f in self.factors)


def group(*factors: Factor) -> GroupSpec:
    return GroupSpec(tuple(factors))


def _unit(dim: int, i: int) -> list[int]:
    v = [0] * dim
    v[i] = 1
    return v


def _factor_roots(f: Factor):
    """(simple roots, simple coroots, positive roots, positive coroots, delta)
    for one factor, in that factor's local coordinates."""
    d = f.dim
    if f.kind == "torus":
        return [], [], [], [], [0] * d
    n = f.n
    delta = list(range(n - 1, -1, -1))

    def lifted_root(i, j):
        # e_i - e_j in lifted n-coordinates
        v = [0] * n
        v[i], v[j] = 1, -1
        return v

    def to_local(v):
        if f.kind == "SU":
            last = v[-1]
            return [x - last for x in v[:-1]]
        return v

    def coroot(i, j):
        # pairing <w, e_i^* - e_j^*> as a covector on local coordinates
        if f.kind == "SU":
            v = [0] * d
            v[i] = 1
            if j < n - 1:
                v[j] = -1
            return v
        return lifted_root(i, j)

    simple = [to_local(lifted_root(i, i + 1)) for i in range(n - 1)]
    simple_co = [coroot(i, i + 1) for i in range(n - 1)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pos = [to_local(lifted_root(i, j)) for i, j in pairs]
    pos_co = [coroot(i, j) for i, j in pairs]
    if f.kind == "SU":
        delta = delta[:-1]
    return simple, simple_co, pos, pos_co, delta


def _embed(vec: Sequence[int], start: int, dim: int) -> Weight:
    out = [0] * dim
    out[start:start + len(vec)] = vec
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    """Integer root data for a :class:`GroupSpec`.

    Equality and hashing go through ``group`` only; everything else is
    derived from it.
    """

    group: GroupSpec
    blocks: tuple[tuple[int, int], ...] = field(compare=False, repr=False)
    simple_roots: tuple[Weight, ...] = field(compare=False, repr=False)
    simple_coroots: tuple[Weight, ...] = field(compare=False, repr=False)
    positive_roots: tuple[Weight, ...] = field(compare=False, repr=False)
    positive_coroots: tuple[Weight, ...] = field(compare=False, repr=False)
    delta: Weight = field(compare=False, repr=False)
    weyl_order: int = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.group.dim

    @property
    def rank(self) -> int:
        return self.group.total_rank

    def __str__(self):
        return str(self.group)

    # -- inner products -----------------------------------------------------

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """Trace-form inner product of two ambient vectors (exact)."""
        total = Fraction(0)
        for f, (lo, hi) in zip(self.group.factors, self.blocks):
            xa, xb = a[lo:hi], b[lo:hi]
            dot = sum(Fraction(x) * y for x, y in zip(xa, xb))
            if f.kind == "SU":
                dot -= Fraction(sum(xa)) * sum(xb) / f.n
            total += dot
        return total

    def norm_sq(self, w: Sequence) -> Fraction:
        return self.inner(w, w)

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        """Half-sum of positive roots (rational, ambient coordinates)."""
        acc = [Fraction(0)] * self.dim
        for r in self.positive_roots:
            for i, x in enumerate(r):
                acc[i] += Fraction(x, 2)
        return tuple(acc)

    def gram(self) -> list[list[Fraction]]:
        eye = [_unit(self.dim, i) for i in range(self.dim)]
        return [[self.inner(u, v) for v in eye] for u in eye]

    # -- lattice coordinates (used by polytopes) -----------------------------

    def lattice_coords(self, w: Sequence) -> tuple:
        """Coordinates of ``w`` in a Z-basis of the weight lattice.

        Identity on torus, U and SU blocks; PSU blocks use the simple-root
        basis.  Exact for rational input.
        """
        out = []
        for f, (lo, hi) in zip(self.group.factors, self.blocks):
            block = list(w[lo:hi])
            if f.kind == "PSU":
                out.extend(itertools.accumulate(block[:-1]))
            else:
                out.extend(block)
        return tuple(out)

    def from_lattice(self, x: Sequence) -> tuple:
        out = []
        pos = 0
        for f in self.group.factors:
            if f.kind == "PSU":
                c = list(x[pos:pos + f.rank])
                block = [0] * f.n
                for i, ci in enumerate(c):
                    block[i] += ci
                    block[i + 1] -= ci
                out.extend(block)
            else:
                out.extend(x[pos:pos + f.rank])
            pos += f.rank
        return tuple(out)

    def lattice_gram(self) -> list[list[Fraction]]:
        basis = [self.from_lattice(_unit(self.rank, i)) for i in range(self.rank)]
        return [[self.inner(u, v) for v in basis] for u in basis]

    def root_coordinates(self, x: Sequence[int]) -> Optional[tuple[Fraction, ...]]:
        """Coefficients of ``x`` in the simple roots, or None when ``x`` is
        not in their real span."""
        out: list[Fraction] = []
        for f, (lo, hi) in zip(self.group.factors, self.blocks):
            block = [Fraction(v) for v in x[lo:hi]]
            if f.kind == "torus":
                if any(block):
                    return None
                continue
            if f.kind == "SU":
                block = block + [Fraction(0)]
                mean = sum(block) / f.n
                block = [v - mean for v in block]
            elif sum(block) != 0:
                return None
            out.extend(itertools.accumulate(block[:-1]))
        return tuple(out)

    def precedes(self, nu: Sequence[int], lam: Sequence[int]) -> bool:
        """True iff ``lam - nu`` is a nonnegative integer combination of
        simple roots."""
        diff = [a - b for a, b in zip(lam, nu)]
        coords = self.root_coordinates(diff)
        if coords is None:
            return False
        return all(c.denominator == 1 and c >= 0 for c in coords)

    # -- Weyl group -----------------------------------------------------------

    def pairing(self, w: Sequence, covector: Sequence) -> int:
        return sum(a * b for a, b in zip(w, covector))

    def reflect(self, w: Sequence, i: int) -> tuple:
        """Simple reflection ``s_i``."""
        p = self.pairing(w, self.simple_coroots[i])
        if p == 0:
            return tuple(w)
        return tuple(a - p * r for a, r in zip(w, self.simple_roots[i]))

    def canonicalize(self, raw: Iterable) -> Weight:
        """Validate and canonicalize a user-supplied weight."""
        vals = list(raw)
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
            if all(isinstance(v, (int, float)) and float(v).is_integer() for v in vals):
                vals = [int(v) for v in vals]
            else:
                raise InvalidWeight(f"weight {vals!r} must have integer entries")
        expected = self.group.dim
        lifted = sum(f.n if f.kind == "SU" else f.dim for f in self.group.factors)
        if len(vals) == expected:
            blocks = []
            pos = 0
            for f in self.group.factors:
                blocks.append(vals[pos:pos + f.dim])
                pos += f.dim
        elif len(vals) == lifted and lifted != expected:
            blocks = []
            pos = 0
            for f in self.group.factors:
                width = f.n if f.kind == "SU" else f.dim
                b = vals[pos:pos + width]
                if f.kind == "SU":
                    b = [x - b[-1] for x in b[:-1]]
                blocks.append(b)
                pos += width
        else:
            raise InvalidWeight(
                f"weight {vals!r} has length {len(vals)}, expected {expected} for {self.group}")
        out: list[int] = []
        for f, b in zip(self.group.factors, blocks):
            if f.kind == "PSU":
                s = sum(b)
                if s % f.n:
                    raise InvalidWeight(
                        f"{f} block {b!r} has non-integral mean; not in the lattice")
                b = [x - s // f.n for x in b]
            out.extend(b)
        return tuple(out)


def build_root_system(g: GroupSpec) -> RootSystem:
    """Root data for a product of torus/U/SU/PSU factors."""
    dim = g.dim
    blocks = []
    simple, simple_co, pos, pos_co = [], [], [], []
    delta = [0] * dim
    order = 1
    start = 0
    for f in g.factors:
        s, sc, p, pc, d = _factor_roots(f)
        simple += [_embed(v, start, dim) for v in s]
        simple_co += [_embed(v, start, dim) for v in sc]
        pos += [_embed(v, start, dim) for v in p]
        pos_co += [_embed(v, start, dim) for v in pc]
        delta[start:start + f.dim] = d
        if f.kind != "torus":
            order *= math.factorial(f.n)
        blocks.append((start, start + f.dim))
        start += f.dim
    return RootSystem(
        group=g,
        blocks=tuple(blocks),
        simple_roots=tuple(simple),
        simple_coroots=tuple(simple_co),
        positive_roots=tuple(pos),
        positive_coroots=tuple(pos_co),
        delta=tuple(delta),
        weyl_order=order,
    )


def cartan_matrix(rs: RootSystem) -> list[list[int]]:
    return [[rs.pairing(a, c) for c in rs.simple_coroots] for a in rs.simple_roots]


def is_dominant(w: Sequence[int], rs: RootSystem) -> bool:
    return all(rs.pairing(w, c) >= 0 for c in rs.simple_coroots)


def is_regular(w: Sequence[int], rs: RootSystem) -> bool:
    """True iff no reflection in W fixes ``w``."""
    return all(rs.pairing(w, c) != 0 for c in rs.positive_coroots)


def weyl_orbit(w: Sequence[int], rs: RootSystem) -> set[Weight]:
    start = tuple(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(len(rs.simple_roots)):
                u = rs.reflect(v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def dominant_representative(w: Sequence[int], rs: RootSystem) -> Optional[tuple[Weight, int]]:
    """Dominant element of ``W.w`` and the sign of the Weyl element used.

    Returns None when ``w`` lies on a wall (some reflection fixes it); the
    alternating sums that call this drop such terms.
    """
    v = tuple(w)
    sign = 1
    while True:
        for i, c in enumerate(rs.simple_coroots):
            if rs.pairing(v, c) < 0:
                v = rs.reflect(v, i)
                sign = -sign
                break
        else:
            break
    if any(rs.pairing(v, c) == 0 for c in rs.simple_coroots):
        return None
    return v, sign


def dominant_of(w: Sequence[int], rs: RootSystem) -> Weight:
    """Dominant element of the orbit (walls allowed)."""
    v = tuple(w)
    while True:
        for i, c in enumerate(rs.simple_coroots):
            if rs.pairing(v, c) < 0:
                v = rs.reflect(v, i)
                break
        else:
            return v


def weight_norm(w: Sequence, rs: RootSystem) -> float:
    return math.sqrt(rs.norm_sq(w))


def weyl_elements(rs: RootSystem) -> Iterator[tuple[tuple[int, ...], int]]:
    """All Weyl group elements as reduced words with their signs.

    Breadth-first over words acting on ``delta``, which is regular, so
    distinct images mean distinct group elements.
    """
    start = rs.delta
    seen = {start: ()}
    frontier = [start]
    yield (), 1
    while frontier:
        nxt = []
        for v in frontier:
            word = seen[v]
            for i in range(len(rs.simple_roots)):
                u = rs.reflect(v, i)
                if u not in seen:
                    seen[u] = word + (i,)
                    nxt.append(u)
                    yield seen[u], (-1) ** len(seen[u])
        frontier = nxt


def act(word: Sequence[int], w: Sequence, rs: RootSystem) -> tuple:
    v = tuple(w)
    for i in reversed(word):
        v = rs.reflect(v, i)
    return v


def _factor_dominant(f: Factor, radius_sq: Fraction) -> list[tuple[list[int], Fraction]]:
    """Dominant weights of one factor with squared norm <= radius_sq."""
    bound = math.isqrt(int(radius_sq * 2)) + 1 if radius_sq > 0 else 0
    out = []
    if f.kind == "torus":
        for v in itertools.product(range(-bound, bound + 1), repeat=f.n):
            ns = Fraction(sum(x * x for x in v))
            if ns <= radius_sq:
                out.append((list(v), ns))
        return out
    if f.kind == "U":
        cands = _decreasing(f.n, -bound, bound)
    elif f.kind == "PSU":
        cands = (v for v in _decreasing(f.n, -bound, bound) if sum(v) == 0)
    else:
        cands = (v[:-1] for v in _decreasing(f.n, 0, bound) if v[-1] == 0)
    for v in cands:
        if f.kind == "SU":
            s = sum(v)
            ns = Fraction(sum(x * x for x in v)) - Fraction(s * s, f.n)
        else:
            ns = Fraction(sum(x * x for x in v))
        if ns <= radius_sq:
            out.append((list(v), ns))
    return out


def _decreasing(n: int, lo: int, hi: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for first in range(hi, lo - 1, -1):
        for rest in _decreasing(n - 1, lo, first):
            yield [first] + rest


def dominant_weights_in_ball(rs: RootSystem, radius: float, closed: bool = True) -> list[Weight]:
    """All dominant weights with norm <= radius (or < radius when not closed)."""
    r2 = Fraction(radius) ** 2
    per_factor = [_factor_dominant(f, r2) for f in rs.group.factors]
    out = []
    for combo in itertools.product(*per_factor):
        ns = sum(c[1] for c in combo)
        if ns < r2 or (closed and ns == r2):
            out.append(tuple(x for c in combo for x in c[0]))
    return sorted(out)
