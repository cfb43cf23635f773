"""Restriction of representations to a subgroup H of K.

A subgroup is described extrinsically by an integer matrix sending
K-weights to H-weights (the transpose of an inclusion of maximal tori).
No attempt is made to check that the matrix comes from a genuine group
inclusion; a bad matrix shows up as :class:`NotACharacter` when the
restricted weight system fails to decompose.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .characters import CharacterElement, _all_mults, _require_dominant, decompose_weights
from .errors import GroupMismatch, InvalidEmbedding, InvalidWeight, NotACharacter
from .lie import RootSystem, Weight


@dataclass(frozen=True)
class SubgroupEmbedding:
    restriction_matrix: tuple[tuple[int, ...], ...]
    subgroup: RootSystem
    supergroup: RootSystem

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.restriction_matrix)
        object.__setattr__(self, "restriction_matrix", rows)
        if len(rows) != self.subgroup.dim:
            raise InvalidEmbedding(
                f"matrix has {len(rows)} rows, subgroup {self.subgroup} needs {self.subgroup.dim}")
        for r in rows:
            if len(r) != self.supergroup.dim:
                raise InvalidEmbedding(
                    f"matrix rows must have length {self.supergroup.dim} for {self.supergroup}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
                raise InvalidEmbedding("restriction matrix must be integral")

    def restrict_weight(self, w: Sequence[int]) -> Weight:
        raw = [sum(a * b for a, b in zip(row, w)) for row in self.restriction_matrix]
        try:
            return self.subgroup.canonicalize(raw)
        except InvalidWeight as exc:
            raise NotACharacter(f"restricted weight {raw} is not an H-weight: {exc}") from exc

    def compose(self, inner: "SubgroupEmbedding") -> "SubgroupEmbedding":
        """Embedding K > H' from ``self`` (K > H) and ``inner`` (H > H')."""
        if inner.supergroup != self.subgroup:
            raise GroupMismatch(f"{inner.supergroup} vs {self.subgroup}")
        a, b = inner.restriction_matrix, self.restriction_matrix
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
            for i in range(len(a)))
        return SubgroupEmbedding(prod, inner.subgroup, self.supergroup)


def identity_embedding(rs: RootSystem) -> SubgroupEmbedding:
    eye = tuple(tuple(int(i == j) for j in range(rs.dim)) for i in range(rs.dim))
    return SubgroupEmbedding(eye, rs, rs)


@lru_cache(maxsize=None)
def _branch(emb: SubgroupEmbedding, mu: Weight) -> CharacterElement:
    pushed: Counter = Counter()
    for w, m in _all_mults(emb.supergroup, mu):
        pushed[emb.restrict_weight(w)] += m
    try:
        return decompose_weights(pushed, emb.subgroup)
    except NotACharacter as exc:
        raise NotACharacter(f"embedding rejected: {exc}") from exc


def branch(mu, emb: SubgroupEmbedding) -> CharacterElement:
    """Multiplicities of the H-irreducibles in V_mu restricted to H."""
    mu = _require_dominant(mu, emb.supergroup)
    return _branch(emb, mu)


def branch_element(c: CharacterElement, emb: SubgroupEmbedding) -> CharacterElement:
    if c.rs != emb.supergroup:
        raise GroupMismatch(f"character over {c.rs}, embedding from {emb.supergroup}")
    acc: Counter = Counter()
    for mu, x in c.items():
        for nu, n in branch(mu, emb).items():
            acc[nu] += x * n
    return CharacterElement(emb.subgroup, acc)
