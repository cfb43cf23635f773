"""Slow, independent reference computations used only by the tests.

None of these share code paths with the library's main algorithms:

* characters of U(n) come from the bialternant formula a_{lam+delta}/a_delta,
  divided exactly as polynomials by sympy;
* irreducible multiplicities in a weight multiset come from the Brauer
  alternation sum over permutations, not highest-weight subtraction;
* symmetric powers are enumerated monomial by monomial.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction

import sympy


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign


def schur_weights(lam) -> Counter:
    """Weights of the U(n) irreducible with highest weight ``lam``."""
    n = len(lam)
    shift = lam[-1]
    part = [x - shift for x in lam]
    xs = sympy.symbols(f"x0:{n}")

    def alternant(exps):
        return sympy.Matrix(n, n, lambda i, j: xs[j] ** exps[i]).det()

    delta = list(range(n - 1, -1, -1))
    num = alternant([p + d for p, d in zip(part, delta)])
    den = alternant(delta)
    quo, rem = sympy.div(sympy.expand(num), sympy.expand(den), *xs)
    assert rem == 0
    out = Counter()
    for monom, coeff in sympy.Poly(quo, *xs).terms():
        out[tuple(e + shift for e in monom)] += int(coeff)
    return out


def su_weights(lam_su) -> Counter:
    """SU(n) weights in the package's coordinates (lam_i - lam_n)."""
    full = list(lam_su) + [0]
    return Counter({tuple(a - w[-1] for a in w[:-1]): m
                    for w, m in schur_weights(full).items()})


def _blocks(rs):
    """(start, width, kind, n) per factor, in ambient coordinates."""
    pos = 0
    for f in rs.group.factors:
        yield pos, f.dim, f.kind, f.n
        pos += f.dim


def _weyl_perms(rs):
    """All Weyl elements as (sign, function on ambient vectors)."""
    per_factor = []
    for start, width, kind, n in _blocks(rs):
        if kind == "torus":
            per_factor.append([(1, start, width, kind, None)])
            continue
        per_factor.append([(_perm_sign(p), start, width, kind, p)
                           for p in itertools.permutations(range(n))])
    for combo in itertools.product(*per_factor):
        sign = math.prod(c[0] for c in combo)

        def apply(v, combo=combo):
            out = list(v)
            for _, start, width, kind, p in combo:
                if p is None:
                    continue
                block = list(v[start:start + width])
                if kind == "SU":
                    block = block + [Fraction(0)]
                moved = [block[p[i]] for i in range(len(p))]
                if kind == "SU":
                    moved = [x - moved[-1] for x in moved[:-1]]
                out[start:start + width] = moved
            return tuple(out)
        yield sign, apply


def _staircase(rs):
    out = []
    for _, width, kind, n in _blocks(rs):
        if kind == "torus":
            out += [0] * width
        elif kind == "SU":
            out += list(range(n - 1, 0, -1))
        else:
            out += list(range(n - 1, -1, -1))
    return tuple(out)


def brauer_multiplicity(ws: Counter, mu, rs) -> int:
    """Multiplicity of V_mu in a W-invariant weight multiset.

    Coefficient of e^{mu+delta} in (sum_w m_w e^w) * prod_{alpha>0}(e^{alpha/2}-e^{-alpha/2}),
    the denominator written as an alternating sum over W.  Supports torus, U
    and SU factors.
    """
    delta = _staircase(rs)
    total = 0
    for sign, apply in _weyl_perms(rs):
        wd = apply(delta)
        key = tuple(int(m + d - x) for m, d, x in zip(mu, delta, wd))
        total += sign * ws.get(key, 0)
    return total


def brauer_decompose(ws: Counter, rs) -> dict:
    """Full decomposition, by testing every dominant candidate in the support."""
    from fquant.lie import is_dominant

    out = {}
    for mu in sorted(ws):
        if is_dominant(mu, rs):
            k = brauer_multiplicity(ws, mu, rs)
            if k:
                out[mu] = k
    return out


def convolution(a: Counter, b: Counter) -> Counter:
    out = Counter()
    for x, m in a.items():
        for y, n in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += m * n
    return out


def monomial_weights(weights, degree: int) -> Counter:
    """Weights of S^degree(E*), one monomial at a time."""
    out = Counter()
    duals = [tuple(-x for x in w) for w in weights]
    for combo in itertools.combinations_with_replacement(range(len(duals)), degree):
        w = [0] * len(duals[0])
        for k in combo:
            w = [a + b for a, b in zip(w, duals[k])]
        out[tuple(w)] += 1
    return out


def monomial_quantization(weights, rs, radius: float, max_degree: int) -> dict:
    """Multiplicities of V_mu in S^0..S^max_degree of E*, |mu| < radius."""
    acc = Counter()
    for j in range(max_degree + 1):
        for mu, k in brauer_decompose(monomial_weights(weights, j), rs).items():
            acc[mu] += k
    r2 = Fraction(radius) ** 2
    return {mu: k for mu, k in sorted(acc.items()) if k and rs.norm_sq(mu) < r2}


def invariant_exponents(weights, max_degree: int) -> list:
    """Brute force over all exponent vectors of total degree 1..max_degree."""
    found = []
    for exps in itertools.product(range(max_degree + 1), repeat=len(weights)):
        if not 0 < sum(exps) <= max_degree:
            continue
        total = [sum(e * w[i] for e, w in zip(exps, weights)) for i in range(len(weights[0]))]
        if not any(total):
            found.append(exps)
    return found
