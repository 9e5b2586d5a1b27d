"""Fox k-coloring spaces of diagrams, boundary restriction maps, the
reduction into the symplectic quotient, virtual Lagrangian indices over
the integers, and Alexander-Burau-Fox colorings over prime fields.

A coloring assigns an element of Z_k to every arc so that at each
crossing twice the over color equals the sum of the two under colors.
For an n-tangle the restriction to the 2n boundary points lands in the
codimension-1 subspace cut out by the alternating sum condition; its
image modulo the monochromatic line is the invariant studied here,
written in the basis f_k = e_k + e_{k+1} with the last f-coordinate
normalized to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import exact_linear as xl
from .errors import AlternatingConditionError, CalibrationError, NotPrimeError
from .exact_linear import SubspaceModP
from .tangle_core import Integer, TangleDiagram, compile_expr

__all__ = [
    "ColoringSpace",
    "coloring_space",
    "tri",
    "boundary_image",
    "reduced_boundary_image",
    "reduce_to_f_basis",
    "virtual_index",
    "abf_space",
]


@dataclass(frozen=True)
class ColoringSpace:
    """Solution data for the coloring relations of one diagram.

    For prime modulus the kernel subspace is kept; for composite modulus
    the invariant factors of the integer relation matrix are kept and
    the count is k^(free rank) * prod gcd(k, d_i).  Free circles always
    contribute a full factor of k each.
    """

    modulus: int
    arc_order: tuple
    free_circles: int
    count: int
    kernel: SubspaceModP | None = None
    invariant_factors: tuple | None = None


def _relation_matrix(diagram):
    """Integer matrix of crossing relations, one row per crossing."""
    arcs = sorted(diagram.arcs)
    index = {a: i for i, a in enumerate(arcs)}
    M = np.zeros((len(diagram.crossings), len(arcs)), dtype=np.int64)
    for r, c in enumerate(diagram.crossings):
        M[r, index[c.over]] += 2
        M[r, index[c.under_in]] -= 1
        M[r, index[c.under_out]] -= 1
    return arcs, M


def coloring_space(diagram, k):
    """All Fox k-colorings of the diagram."""
    if k < 2:
        raise ValueError("modulus must be at least 2")
    arcs, M = _relation_matrix(diagram)
    if xl.is_prime(k):
        ker = xl.kernel_mod_p(M, k) if arcs else SubspaceModP(k, 0, (), ())
        count = k ** (ker.dim + diagram.closed_components)
        return ColoringSpace(k, tuple(arcs), diagram.closed_components, count, kernel=ker)
    rows, cols = M.shape
    if cols == 0:
        factors = ()
        count = k**diagram.closed_components
        return ColoringSpace(
            k, (), diagram.closed_components, count, invariant_factors=factors
        )
    factors = xl.snf(M.tolist()).factors if rows else ()
    count = 1
    for d in factors:
        count *= gcd(d, k) if d else k
    count *= k ** (cols - len(factors))
    count *= k**diagram.closed_components
    return ColoringSpace(
        k, tuple(arcs), diagram.closed_components, count, invariant_factors=factors
    )


def tri(diagram):
    """Number of Fox 3-colorings."""
    return coloring_space(diagram, 3).count


# ---------------------------------------------------------------------------
# Boundary restriction.

_calibrated = False


def _ensure_calibrated():
    """One-time check that the compiler's corner convention satisfies the
    twist-tangle relations x4 - x1 = k (x2 - x1), x3 = x2 + x4 - x1."""
    global _calibrated
    if _calibrated:
        return
    _calibrated = True
    p = 5
    for k in (1, 2):
        img = boundary_image(compile_expr(Integer(k)), p)
        want = SubspaceModP.from_vectors(
            [[1, 1, 1, 1], [0, 1, (1 + k) % p, k % p]], p, 4
        )
        if img != want:
            _calibrated = False
            raise CalibrationError(
                f"twist tangle T({k}) violates the corner convention"
            )


def _kernel_basis_on_boundary(diagram, p):
    arcs, M = _relation_matrix(diagram)
    index = {a: i for i, a in enumerate(arcs)}
    ker = xl.kernel_mod_p(M, p) if arcs else SubspaceModP(p, 0, (), ())
    B = ker.basis_matrix()
    cols = [index[a] for a in diagram.boundary]
    return B[:, cols] % p if len(cols) else B[:, :0]


def _check_alternating(rows, p):
    for v in np.atleast_2d(rows):
        s = 0
        for i, x in enumerate(v, start=1):
            s += (-1) ** i * int(x)
        if s % p:
            raise AlternatingConditionError(
                f"boundary coloring {tuple(int(x) for x in v)} violates the "
                f"alternating condition mod {p}"
            )


def boundary_image(diagram, p):
    """Image of the coloring space in F_p^(2n), restricted to boundary
    points in counterclockwise order."""
    if not xl.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if diagram.n < 1:
        raise ValueError("diagram has no boundary")
    _ensure_calibrated()
    rows = _kernel_basis_on_boundary(diagram, p)
    img = SubspaceModP.from_vectors(rows, p, 2 * diagram.n)
    _check_alternating(img.basis_matrix(), p)
    mono = [1] * (2 * diagram.n)
    if not img.contains(mono):
        raise AssertionError("monochromatic colorings missing from boundary image")
    return img


def reduce_to_f_basis(vectors, p, n):
    """Rewrite boundary vectors in the f-basis (f_k = e_k + e_{k+1}),
    normalize the f_{2n-1} coordinate to zero using the monochromatic
    relation, and drop it.  Returns vectors in F_p^(2n-2)."""
    out = []
    for v in np.atleast_2d(np.asarray(vectors, dtype=np.int64)):
        c = np.zeros(2 * n - 1, dtype=np.int64)
        prev = 0
        for j in range(2 * n - 1):
            c[j] = (int(v[j]) - prev) % p
            prev = c[j]
        if (int(v[2 * n - 1]) - prev) % p:
            raise AlternatingConditionError(
                "vector is outside the span of the f-basis"
            )
        last = c[2 * n - 2]
        if last:
            # f1 + f3 + ... + f_{2n-1} is monochromatic, hence zero in
            # the quotient: cancel the last coordinate with it
            c[0::2] = (c[0::2] - last) % p
        out.append(c[: 2 * n - 2])
    return out


def reduced_boundary_image(diagram, p):
    """Boundary image modulo monochromatic colorings, written in the
    f-basis coordinates of F_p^(2n-2)."""
    if not xl.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    n = diagram.n
    if n < 2:
        raise ValueError("reduction needs an n-tangle with n >= 2")
    img = boundary_image(diagram, p)
    reduced = reduce_to_f_basis(img.basis_matrix(), p, n)
    return SubspaceModP.from_vectors(reduced, p, 2 * n - 2)


# ---------------------------------------------------------------------------
# Integer colorings: virtual Lagrangian index.


def virtual_index(diagram):
    """Index of the reduced boundary lattice inside its saturation.

    Over the integers the reduced boundary image is a finite index
    sublattice of a Lagrangian; the saturation is that Lagrangian and
    the index is the product of the invariant factors.
    """
    n = diagram.n
    if n < 2:
        raise ValueError("virtual index needs an n-tangle with n >= 2")
    arcs, M = _relation_matrix(diagram)
    index = {a: i for i, a in enumerate(arcs)}
    kernel = xl.int_kernel(M.tolist()) if arcs else []
    cols = [index[a] for a in diagram.boundary]
    reduced = []
    for v in kernel:
        bv = [v[c] for c in cols]
        c = []
        prev = 0
        for j in range(2 * n - 1):
            c.append(bv[j] - prev)
            prev = c[-1]
        if bv[2 * n - 1] != prev:
            raise AlternatingConditionError(
                "integer coloring violates the alternating condition"
            )
        last = c[2 * n - 2]
        if last:
            for j in range(0, 2 * n - 1, 2):
                c[j] -= last
        reduced.append(c[: 2 * n - 2])
    reduced = [r for r in reduced if any(r)]
    if not reduced:
        return 1
    sat = xl.saturation(reduced)
    return xl.lattice_index(reduced, sat)


# ---------------------------------------------------------------------------
# Alexander-Burau-Fox colorings.


def abf_space(diagram, p, t):
    """Colorings with the twisted relation c = (1-t) a + t b at positive
    crossings (a over, b entering under, c exiting under) and the
    inverse twist at negative crossings.

    Only diagrams that carry a braid orientation on every crossing are
    accepted; t must be invertible mod p.
    """
    if not xl.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    t %= p
    if t == 0:
        raise ValueError("t must be invertible mod p")
    arcs = sorted(diagram.arcs)
    index = {a: i for i, a in enumerate(arcs)}
    tinv = pow(t, p - 2, p)
    M = np.zeros((len(diagram.crossings), len(arcs)), dtype=np.int64)
    for r, c in enumerate(diagram.crossings):
        if c.sign is None:
            raise ValueError("crossing lacks a braid orientation tag")
        tt = t if c.sign > 0 else tinv
        M[r, index[c.over]] += 1 - tt
        M[r, index[c.under_in]] += tt
        M[r, index[c.under_out]] -= 1
    ker = xl.kernel_mod_p(M, p) if arcs else SubspaceModP(p, 0, (), ())
    count = p ** (ker.dim + diagram.closed_components)
    return ColoringSpace(p, tuple(arcs), diagram.closed_components, count, kernel=ker)
