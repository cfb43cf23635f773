"""The Legendre map of the log-sum-exp potential attached to a polytope.

With weights a_j (with multiplicity m_j) of the polytope's representation,

    F(X)   = log sum_j m_j exp(<a_j, X>)
    psi(Y) = grad F(-2Y)

psi is a diffeomorphism from the Lie algebra of the torus onto the interior
of the polytope.  Points Y are given in the basis dual to the lattice
coordinates of :class:`~fquant.polytope.AdaptedPolytope`; values of psi are
returned as ambient weight vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import NoConvergence, NotInterior
from .polytope import AdaptedPolytope, affine_rank, hull_facets, weight_system_of_P


@dataclass(frozen=True)
class Potential:
    polytope: AdaptedPolytope

    @cached_property
    def _data(self):
        rs = self.polytope.rs
        ws = weight_system_of_P(self.polytope)
        keys = sorted(ws)
        A = np.array([[float(x) for x in rs.lattice_coords(w)] for w in keys])
        logm = np.log(np.array([float(ws[w]) for w in keys]))
        gram = np.array([[float(x) for x in row] for row in rs.lattice_gram()])
        return A, logm, gram

    @property
    def weights(self) -> np.ndarray:
        return self._data[0]

    def _softmax(self, X: np.ndarray) -> np.ndarray:
        A, logm, _ = self._data
        s = A @ X + logm
        s -= s.max()
        p = np.exp(s)
        return p / p.sum()

    def F(self, X) -> float:
        A, logm, _ = self._data
        s = A @ np.asarray(X, dtype=float) + logm
        top = s.max()
        return float(top + np.log(np.exp(s - top).sum()))

    def grad(self, X) -> np.ndarray:
        """Gradient of F in lattice coordinates."""
        return self._softmax(np.asarray(X, dtype=float)) @ self.weights

    def hessian(self, X) -> np.ndarray:
        p = self._softmax(np.asarray(X, dtype=float))
        A = self.weights
        mean = p @ A
        return (A * p[:, None]).T @ A - np.outer(mean, mean)

    def norm(self, x) -> float:
        """Trace-form norm of a vector given in lattice coordinates."""
        x = np.asarray(x, dtype=float)
        return float(np.sqrt(max(x @ self._data[2] @ x, 0.0)))


@lru_cache(maxsize=64)
def potential(P: AdaptedPolytope) -> Potential:
    return Potential(P)


def _to_ambient(P: AdaptedPolytope, x: np.ndarray) -> np.ndarray:
    return np.array([float(v) for v in P.rs.from_lattice(list(x))])


def psi_T(P: AdaptedPolytope, Y: Sequence[float]) -> np.ndarray:
    """Exponentially weighted mean of the weights at ``-2Y``."""
    pot = potential(P)
    return _to_ambient(P, pot.grad(-2.0 * np.asarray(Y, dtype=float)))


def interior_margin(P: AdaptedPolytope, xi_lattice: np.ndarray) -> float:
    """Trace-norm distance from a point (lattice coords) to the boundary;
    negative outside."""
    inv = np.linalg.inv(np.array([[float(x) for x in row] for row in P.rs.lattice_gram()]))
    best = np.inf
    for a, b in P.facets:
        av = np.array(a, dtype=float)
        best = min(best, (float(b) - av @ xi_lattice) / np.sqrt(av @ inv @ av))
    return best


def legendre_inverse(
    P: AdaptedPolytope,
    xi: Sequence[float],
    *,
    tol: float = 1e-12,
    max_iter: int = 200,
    min_margin: float = 1e-6,
) -> np.ndarray:
    """Solve ``psi_T(P, Y) = xi`` by damped Newton on the convex potential."""
    rs = P.rs
    x = np.array([float(v) for v in rs.lattice_coords(list(xi))])
    ambient = np.asarray(xi, dtype=float)
    if np.linalg.norm(_to_ambient(P, x) - ambient) > 1e-9:
        raise NotInterior(f"{list(xi)} is not in the span of the weight lattice")
    if interior_margin(P, x) < min_margin:
        raise NotInterior(f"{list(xi)} is not strictly inside the polytope")
    pot = potential(P)

    def objective(X):
        return pot.F(X) - x @ X

    X = np.zeros(len(x))
    for _ in range(max_iter):
        g = pot.grad(X) - x
        if pot.norm(g) <= tol:
            return -X / 2.0
        step = np.linalg.solve(pot.hessian(X), g)
        t, f0 = 1.0, objective(X)
        # near the root the Armijo test is below float resolution
        if pot.norm(g) > 1e-6:
            while t > 1e-12 and objective(X - t * step) > f0 - 0.25 * t * (g @ step):
                t *= 0.5
        X = X - t * step
    if pot.norm(pot.grad(X) - x) <= 10 * tol:
        return -X / 2.0
    raise NoConvergence(f"Newton did not converge for xi={list(xi)}")


def divergence_criterion(betas: Sequence[Sequence]) -> bool:
    """Exact test whether 0 is an interior point of conv(betas), which is
    when sum_j exp(<beta_j, Y>) blows up in every direction."""
    pts = [tuple(Fraction(x) for x in b) for b in betas]
    if not pts:
        raise ValueError("need at least one vector")
    d = len(pts[0])
    if affine_rank(pts) < d:
        return False
    return all(b > 0 for _, b in hull_facets(pts))
