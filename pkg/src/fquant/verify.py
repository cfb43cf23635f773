"""Harnesses comparing two independently computed sides of an identity."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .branching import SubgroupEmbedding
from .characters import CharacterElement
from .models import (
    HermitianModel,
    hermitian_quantization,
    product_model_quantization,
    restriction_radius_bound,
)
from .polytope import AdaptedPolytope
from .series import (
    FormalSeries,
    diff,
    inside,
    multiply_by_character,
    polytope_truncation,
    restrict_series,
)


@dataclass(frozen=True)
class Report:
    name: str
    passed: bool
    radius: float
    compared: int
    mismatches: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "identity": self.name,
            "passed": self.passed,
            "radius": self.radius,
            "compared": self.compared,
            "mismatches": [{"weight": list(w), "lhs": a, "rhs": b} for w, a, b in self.mismatches],
            "details": self.details,
        }


def _compare(name: str, lhs: FormalSeries, rhs: FormalSeries, r: float, **details) -> Report:
    bad = diff(lhs, rhs, r)
    support = {w for w, _ in lhs.items()} | {w for w, _ in rhs.items()}
    compared = sum(1 for w in support if inside(lhs.rs, w, r))
    return Report(name, not bad, r, compared, bad, details)


def verify_restriction_identity(m: HermitianModel, emb: SubgroupEmbedding, c: float) -> Report:
    """Restrict the K-quantization to H, and compare with the H-quantization
    of the same space computed from scratch."""
    bound = restriction_radius_bound(m, emb, c)
    big = hermitian_quantization(m, bound.input_radius)
    lhs = restrict_series(big, emb, bound)
    rhs = hermitian_quantization(m.restrict(emb), c)
    return _compare("restriction", lhs, rhs, c,
                    input_radius=bound.input_radius, bound_method=bound.method)


def verify_product_identity(m: HermitianModel, theta, c: float) -> Report:
    """``Q(M) * V_theta`` against the direct quantization of ``M x K.theta``."""
    rs = m.rs
    theta = rs.canonicalize(theta)
    shift = math.sqrt(rs.norm_sq(theta))
    # a touch of slack so float rounding cannot drop the output below c
    base = hermitian_quantization(m, c + shift + 1e-9)
    lhs = multiply_by_character(base, CharacterElement.irreducible(theta, rs))
    rhs = product_model_quantization(m, theta, c)
    return _compare("product", lhs, rhs, min(c, lhs.trusted_radius), theta=list(theta))


def verify_convergence(m: HermitianModel, P: AdaptedPolytope, n_max: int) -> Report:
    """Truncations to the dilates nP agree with the full series on n * eps_P."""
    eps = math.sqrt(P.eps_sq)
    s = hermitian_quantization(m, n_max * eps)
    mismatches, compared = [], 0
    steps = []
    for n in range(1, n_max + 1):
        cut = polytope_truncation(s, P, n)
        bad = diff(cut, s.truncate(n * eps), n * eps)
        compared += len(cut.coeffs)
        mismatches.extend(bad)
        steps.append({"n": n, "radius": n * eps, "passed": not bad})
    return Report("convergence", not mismatches, n_max * eps, compared, mismatches, {"steps": steps})
