"""Exact linear algebra: echelon forms over prime fields, Smith normal
form over the integers, and canonical subspace representations.

Everything here is exact: prime-field work uses numpy int64 arrays with
entries reduced mod p, integer work uses Python ints (no overflow).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPrimeError

__all__ = [
    "is_prime",
    "SubspaceModP",
    "rref_mod_p",
    "kernel_mod_p",
    "SNFResult",
    "snf",
    "lattice_index",
    "int_kernel",
    "saturation",
]


def is_prime(p):
    """Trial-division primality test; all in-scope moduli are tiny."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p):
    if not is_prime(p):
        raise NotPrimeError(f"modulus {p} is not prime")


def _as_modp(mat, p):
    a = np.asarray(mat, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def _rref_raw(M, p):
    """Row-reduce M mod p in place-ish; returns (reduced rows, pivot cols)."""
    R = M % p
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
    return R[: len(pivots)], pivots


@dataclass(frozen=True)
class SubspaceModP:
    """A subspace of F_p^d in reduced row echelon form.

    The representation is canonical: two subspaces are equal iff their
    (p, ambient, rows) triples are identical.
    """

    p: int
    ambient: int
    rows: tuple
    pivots: tuple

    @classmethod
    def from_vectors(cls, vectors, p, ambient):
        _check_prime(p)
        vecs = [v for v in vectors]
        if not vecs:
            return cls(p, ambient, (), ())
        M = _as_modp(np.array(vecs, dtype=np.int64), p)
        if M.shape[1] != ambient:
            raise ValueError(f"expected vectors of length {ambient}")
        R, piv = _rref_raw(M, p)
        rows = tuple(tuple(int(x) for x in row) for row in R)
        return cls(p, ambient, rows, tuple(piv))

    @property
    def dim(self):
        return len(self.rows)

    def basis_matrix(self):
        if not self.rows:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)

    def contains(self, vector):
        """Membership test by reduction against the echelon basis."""
        v = np.asarray(vector, dtype=np.int64) % self.p
        if v.shape != (self.ambient,):
            raise ValueError("vector/ambient dimension mismatch")
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - v[c] * np.array(row, dtype=np.int64)) % self.p
        return not v.any()

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def vectors(self):
        """Iterate over all vectors of the subspace (small spaces only)."""
        from itertools import product

        B = self.basis_matrix()
        for coeffs in product(range(self.p), repeat=self.dim):
            yield tuple(int(x) for x in (np.array(coeffs) @ B) % self.p)

    def sort_key(self):
        return (self.dim, self.rows)


def rref_mod_p(mat, p):
    """Row space of mat over F_p as a canonical SubspaceModP."""
    _check_prime(p)
    M = _as_modp(mat, p)
    return SubspaceModP.from_vectors(M, p, M.shape[1])


def kernel_mod_p(mat, p):
    """Right kernel {x : M x = 0} over F_p, canonical form."""
    _check_prime(p)
    M = _as_modp(mat, p)
    ncols = M.shape[1]
    R, piv = _rref_raw(M, p)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i, f]) % p
        basis.append(v)
    return SubspaceModP.from_vectors(basis, p, ncols)


# ---------------------------------------------------------------------------
# Integer matrices: Smith normal form and lattice indices.


def _pyint_matrix(A):
    return [[int(x) for x in row] for row in A]


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors d1 | d2 | ... with unimodular transforms.

    U @ A @ V == diag(factors) is re-verified at construction time.
    """

    factors: tuple
    U: tuple
    V: tuple

    def diagonal_matrix(self, shape):
        n, m = shape
        D = [[0] * m for _ in range(n)]
        for i, d in enumerate(self.factors):
            D[i][i] = d
        return D


def _snf_inplace(A):
    """Smith normal form of A; returns (factors, U, V).

    Pivot choice: smallest absolute value in the remaining block, rows
    scanned before columns, first occurrence wins.  Deterministic.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    U = _identity(n)
    V = _identity(m)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        # row_dst += q * row_src
        Ad, As = A[dst], A[src]
        for j in range(m):
            Ad[j] += q * As[j]
        Ud, Us = U[dst], U[src]
        for j in range(n):
            Ud[j] += q * Us[j]

    def addmul_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    limit = min(n, m)
    while t < limit:
        # locate the pivot: minimal |value| over the trailing block
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = A[i][j]
                if v != 0 and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        bi, bj, _ = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    q = -(A[i][t] // A[t][t])
                    addmul_row(i, t, q)
                    if A[i][t]:
                        # remainder smaller than pivot: promote it
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, m):
                if A[t][j]:
                    q = -(A[t][j] // A[t][t])
                    addmul_col(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility: pivot must divide the rest of the block
        fixed = True
        p0 = A[t][t]
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if A[i][j] % p0:
                    addmul_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    factors = [A[i][i] for i in range(limit)]
    return factors, U, V


def snf(A):
    """Smith normal form with verification of U @ A @ V = D."""
    orig = _pyint_matrix(A)
    work = [row[:] for row in orig]
    factors, U, V = _snf_inplace(work)
    n = len(orig)
    m = len(orig[0]) if n else 0
    check = _matmul(_matmul(U, orig), V) if n and m else []
    for i in range(n):
        for j in range(m):
            want = factors[i] if (i == j and i < len(factors)) else 0
            if check[i][j] != want:
                raise AssertionError(f"SNF verification failed at ({i},{j})")
    for i in range(len(factors) - 1):
        if factors[i] and factors[i + 1] % factors[i]:
            raise AssertionError("SNF divisibility chain broken")
        if factors[i] == 0 and factors[i + 1] != 0:
            raise AssertionError("SNF zero factor precedes nonzero")
    return SNFResult(
        tuple(factors),
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in V),
    )


def int_kernel(A):
    """Basis (rows) of the saturated integer kernel {x : A x = 0}."""
    n = len(A)
    m = len(A[0]) if n else 0
    if n == 0:
        return [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    res = snf(A)
    rank = sum(1 for d in res.factors if d)
    V = [list(r) for r in res.V]
    # kernel columns of V: indices >= rank
    basis = []
    for j in range(rank, m):
        basis.append([V[i][j] for i in range(m)])
    return basis


def saturation(rows):
    """Saturation of the row lattice: (Q-span of rows) intersect Z^d.

    Computed without matrix inversion: x lies in the Q-span iff x kills
    the right kernel of the row matrix.
    """
    rows = _pyint_matrix(rows)
    if not rows:
        return []
    d = len(rows[0])
    N = int_kernel(rows)
    if not N:
        return _identity(d)
    # x in span_Q(rows) <=> x . v = 0 for every right-kernel vector v
    return int_kernel(N)


def lattice_index(sub, ambient_basis):
    """Index [L : L'] of the row lattice of `sub` inside that of
    `ambient_basis`; math.inf when the ranks differ.

    Requires the ambient rows to be a basis (independent) and L' <= L;
    a row of `sub` outside L raises ValueError.
    """
    amb = _pyint_matrix(ambient_basis)
    sub = _pyint_matrix(sub)
    if not amb:
        if not sub or all(all(x == 0 for x in r) for r in sub):
            return 1
        raise ValueError("sub lattice not contained in ambient lattice")
    res = snf(amb)
    k = len(amb)
    d = len(amb[0])
    rank = sum(1 for f in res.factors if f)
    if rank != k:
        raise ValueError("ambient rows are not a basis")
    U = [list(r) for r in res.U]
    V = [list(r) for r in res.V]
    coords = []
    for s in sub:
        if len(s) != d:
            raise ValueError("row length mismatch")
        w = [sum(s[i] * V[i][j] for i in range(d)) for j in range(d)]
        y = []
        for i in range(k):
            di = res.factors[i]
            if w[i] % di:
                raise ValueError("sub lattice not contained in ambient lattice")
            y.append(w[i] // di)
        for i in range(k, d):
            if w[i]:
                raise ValueError("sub lattice not contained in ambient lattice")
        x = [sum(y[i] * U[i][j] for i in range(k)) for j in range(k)]
        coords.append(x)
    if not coords:
        return math.inf if k else 1
    cres = snf(coords)
    crank = sum(1 for f in cres.factors if f)
    if crank < k:
        return math.inf
    idx = 1
    for f in cres.factors:
        if f:
            idx *= f
    return idx
