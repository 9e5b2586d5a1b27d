"""The symplectic structure on reduced boundary colorings: the form on
F_p^(2n-2) in the f-basis, Lagrangian tests, counting and enumeration,
the mod-2 matching census, and the search for tangle realizations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import exact_linear as xl
from .errors import BudgetExceededError, NotPrimeError
from .exact_linear import SubspaceModP
from .fox_coloring import reduce_to_f_basis, reduced_boundary_image
from .tangle_core import (
    Compose,
    Infinity,
    Integer,
    Rational,
    Rot,
    Sigma,
    compile_expr,
    noncrossing_matchings,
    random_algebraic_expr,
)

__all__ = [
    "SymplecticSpace",
    "build_form",
    "is_lagrangian",
    "lagrangian_count",
    "enumerate_lagrangians",
    "matching_census",
    "all_matchings",
    "matching_image",
    "realize_lagrangians",
]

ENUMERATION_BUDGET = 10**6


@dataclass(frozen=True)
class SymplecticSpace:
    """F_p^(2n-2) with the tridiagonal form phi(f_i, f_j) = [j = i+1] - [j = i-1]."""

    p: int
    n: int
    gram: tuple

    @property
    def dimension(self):
        return 2 * self.n - 2

    def gram_matrix(self):
        return np.array(self.gram, dtype=np.int64)

    def pairing(self, u, v):
        G = self.gram_matrix()
        return int(np.asarray(u) @ G @ np.asarray(v)) % self.p


def build_form(p, n):
    if not xl.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if n < 2:
        raise ValueError("need n >= 2")
    d = 2 * n - 2
    G = np.zeros((d, d), dtype=np.int64)
    for i in range(d - 1):
        G[i, i + 1] = 1
        G[i + 1, i] = p - 1
    det = _det_mod_p(G, p)
    if det == 0:
        raise AssertionError("form is degenerate")
    return SymplecticSpace(p, n, tuple(tuple(int(x) for x in row) for row in G))


def _det_mod_p(M, p):
    M = M.copy() % p
    d = M.shape[0]
    det = 1
    for c in range(d):
        nz = np.nonzero(M[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            M[[c, i]] = M[[i, c]]
            det = -det
        det = det * int(M[c, c]) % p
        inv = pow(int(M[c, c]), p - 2, p)
        M[c] = M[c] * inv % p
        col = M[:, c].copy()
        col[c] = 0
        M = (M - np.outer(col, M[c])) % p
    return det % p


def is_lagrangian(subspace, space):
    """True iff the subspace is isotropic of the maximal dimension n-1."""
    if subspace.ambient != space.dimension:
        raise ValueError("ambient dimension mismatch")
    if subspace.dim != space.n - 1:
        return False
    return _is_isotropic(subspace, space)


def _is_isotropic(subspace, space):
    B = subspace.basis_matrix()
    if not B.size:
        return True
    G = space.gram_matrix()
    return not ((B @ G @ B.T) % space.p).any()


def lagrangian_count(p, n):
    """prod_{i=1}^{n-1} (p^i + 1)."""
    if not xl.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if n < 2:
        raise ValueError("need n >= 2")
    out = 1
    for i in range(1, n):
        out *= p**i + 1
    return out


def _projective_points(p, d):
    """Canonical representatives of lines in F_p^d (first nonzero = 1)."""
    if d == 0:
        return
    for lead in range(d):
        for tail in np.ndindex(*([p] * (d - lead - 1))):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


def enumerate_lagrangians(p, n, budget=ENUMERATION_BUDGET):
    """All Lagrangian subspaces, canonical and sorted.

    Recursive isotropic flag extension: pick a line, pass to the
    symplectic quotient line^perp / line, recurse, lift, deduplicate.
    """
    space = build_form(p, n)
    count = lagrangian_count(p, n)
    if count > budget:
        raise BudgetExceededError(
            f"{count} Lagrangians exceed the budget of {budget}"
        )
    G = space.gram_matrix()
    found = _enum_rec(G, p)
    out = []
    seen = set()
    for rows in found:
        s = SubspaceModP.from_vectors(rows, p, space.dimension)
        if s.rows not in seen:
            seen.add(s.rows)
            out.append(s)
    out.sort(key=lambda s: s.rows)
    if len(out) != count:
        raise AssertionError(
            f"enumeration found {len(out)} Lagrangians, expected {count}"
        )
    return out


def _enum_rec(G, p):
    """Row lists spanning every Lagrangian of the symplectic Gram G."""
    d = G.shape[0]
    if d == 0:
        return [[]]
    out = []
    for v in _projective_points(p, d):
        # perp of v, with v itself removed to get the quotient
        u = (v @ G) % p
        perp = xl.kernel_mod_p(u.reshape(1, -1), p)
        B = perp.basis_matrix()
        # drop one basis row carrying v to split off the quotient
        coeffs = _express(v, B, p)
        drop = next(i for i, c in enumerate(coeffs) if c)
        W = np.delete(B, drop, axis=0)
        # eliminate the v-component from the kept rows
        vn = v.copy()
        lead = next(i for i in range(d) if vn[i])
        inv = pow(int(vn[lead]), p - 2, p)
        vn = vn * inv % p
        W = (W - np.outer(W[:, lead], vn)) % p
        Ghat = (W @ G @ W.T) % p
        for rows in _enum_rec(Ghat, p):
            lifted = [v]
            for r in rows:
                lifted.append((np.asarray(r) @ W) % p)
            out.append(lifted)
    return out


def _express(v, B, p):
    """Coefficients writing v in the rref basis B (rows)."""
    v = v.copy() % p
    coeffs = []
    pivots = [next(i for i in range(B.shape[1]) if B[r, i]) for r in range(B.shape[0])]
    for r, c in enumerate(pivots):
        k = v[c] * pow(int(B[r, c]), p - 2, p) % p
        coeffs.append(int(k))
        if k:
            v = (v - k * B[r]) % p
    if v.any():
        raise AssertionError("vector not in span")
    return coeffs


# ---------------------------------------------------------------------------
# The mod-2 census over abstract perfect matchings.


def all_matchings(n):
    """All perfect matchings of 1..2n (not only the planar ones)."""

    def rec(points):
        if not points:
            yield ()
            return
        first = points[0]
        for i in range(1, len(points)):
            rest = points[1:i] + points[i + 1 :]
            for m in rec(rest):
                yield ((first, points[i]),) + m

    return list(rec(tuple(range(1, 2 * n + 1))))


def matching_image(pairs, n):
    """Reduced mod-2 boundary image of the crossingless tangle whose
    boundary points are identified along the matching: mod 2 every
    crossing relation degenerates to equality of the two under arcs, so
    any diagram's 2-colorings factor through such a matching."""
    basis = []
    for i, j in pairs:
        v = np.zeros(2 * n, dtype=np.int64)
        v[i - 1] = 1
        v[j - 1] = 1
        basis.append(v)
    reduced = reduce_to_f_basis(basis, 2, n)
    return SubspaceModP.from_vectors(reduced, 2, 2 * n - 2)


def matching_census(n):
    """Number of distinct reduced mod-2 images over all matchings."""
    if n > 8:
        raise BudgetExceededError("census limited to n <= 8")
    images = {matching_image(m, n).rows for m in all_matchings(n)}
    return len(images)


# ---------------------------------------------------------------------------
# Realization search.


def _horizontal_family(p):
    """Integer tangles (1-p)/2 .. (p-1)/2 and infinity."""
    half = (p - 1) // 2
    out = [Integer(k) for k in range(-half, half + 1)]
    out.append(Infinity())
    return out


def _rational_candidates(p, max_len, values):
    from itertools import product as iproduct

    for L in range(1, max_len + 1):
        for entries in iproduct(values, repeat=L):
            yield Rational(*entries)


def realize_lagrangians(p, n, generator_budget=20000, seed=0):
    """Search tangle expressions whose reduced boundary image hits every
    Lagrangian.  Returns (witness map, unrealized list).

    Rational tangles come first (for n = 2 the horizontal family and
    bounded twist vectors; for larger n twisted planar leaves), then
    seeded random algebraic trees fill the gaps.
    """
    targets = enumerate_lagrangians(p, n)
    remaining = {s.rows: s for s in targets}
    witnesses = {}
    rng = random.Random(seed)

    def try_expr(expr):
        try:
            img = reduced_boundary_image(compile_expr(expr), p)
        except Exception:
            return
        if img.rows in remaining:
            del remaining[img.rows]
            witnesses[img] = expr

    budget = generator_budget
    if n == 2:
        for expr in _horizontal_family(p):
            try_expr(expr)
            budget -= 1
    systematic = []
    if n == 2:
        half = (p - 1) // 2
        vals = [v for v in range(-half, half + 1) if v] or [1, -1]
        systematic = _rational_candidates(p, 3, vals)
    else:
        # crossingless leaves and their small twisted products
        leaves = noncrossing_matchings(n)
        sigmas = [Sigma(n, i, s) for i in range(1, n) for s in (1, -1)]
        systematic = list(leaves) + sigmas
        pool = leaves + sigmas
        two = []
        for a in pool:
            for b in pool:
                for i in range(2 * n):
                    e = Compose(_rot_k(a, i), b)
                    two.append(e)
        systematic += two
    for expr in systematic:
        if not remaining or budget <= 0:
            break
        try_expr(expr)
        budget -= 1
    while remaining and budget > 0:
        expr = random_algebraic_expr(n, rng, max_depth=4)
        try_expr(expr)
        budget -= 1
    return witnesses, sorted(remaining.values(), key=lambda s: s.rows)


def _rot_k(expr, k):
    for _ in range(k):
        expr = Rot(expr)
    return expr
