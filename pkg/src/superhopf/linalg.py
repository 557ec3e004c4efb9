"""Exact Gaussian elimination over Q and F_p.

Matrices are lists of rows.  Over F_p the elimination runs on numpy int64
arrays; over Q on lists of Fractions.  Pivoting takes the first nonzero
entry in column order, so every result here is the (unique) reduced row
echelon form and the derived bases are deterministic.
"""

import numpy as np

from .scalars import Field

_MAX_NUMPY_P = 2**31


def _rref_modp(rows, ncols, p):
    M = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    nrows = M.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r, c:] = M[r, c:] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[np.ix_(hit, np.arange(c, ncols))] = (
                M[np.ix_(hit, np.arange(c, ncols))] - np.outer(col[hit], M[r, c:])
            ) % p
        pivots.append(c)
        r += 1
    return [[int(x) for x in M[k]] for k in range(r)], pivots


def _rref_generic(rows, ncols, F):
    M = [[F(x) for x in row] for row in rows]
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        i = next((k for k in range(r, nrows) if M[k][c] != 0), None)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        inv = F.inv(M[r][c])
        pr = M[r]
        for j in range(c, ncols):
            if pr[j] != 0:
                pr[j] = F(pr[j] * inv)
        for k in range(nrows):
            if k == r:
                continue
            f = M[k][c]
            if f == 0:
                continue
            rk = M[k]
            for j in range(c, ncols):
                if pr[j] != 0:
                    rk[j] = F(rk[j] - f * pr[j])
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rref(rows, F: Field, ncols=None):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or ncols == 0:
        return [], []
    if F.p and F.p < _MAX_NUMPY_P:
        return _rref_modp(rows, ncols, F.p)
    return _rref_generic(rows, ncols, F)


def rank(rows, F, ncols=None):
    return len(rref(rows, F, ncols)[1])


def nullspace_from_rref(R, pivots, ncols, F):
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(R, pivots):
            if row[f] != 0:
                v[pc] = F(-row[f])
        basis.append(v)
    return basis


def nullspace(rows, F, ncols=None):
    """Basis of {x : M x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, piv = rref(rows, F, ncols)
    return nullspace_from_rref(R, piv, ncols, F)


def reduce_vector(R, pivots, v, F):
    """Canonical representative of ``v`` modulo the row space of ``R``."""
    v = [F(x) for x in v]
    for row, pc in zip(R, pivots):
        f = v[pc]
        if f != 0:
            for j, x in enumerate(row):
                if x != 0:
                    v[j] = F(v[j] - f * x)
    return v


def in_span(R, pivots, v, F):
    return not any(reduce_vector(R, pivots, v, F))


def complement(pivots, n):
    s = set(pivots)
    return [i for i in range(n) if i not in s]


def coordinates(vectors, v, F):
    """Coefficients expressing ``v`` in terms of ``vectors``, or None."""
    n = len(v)
    if not vectors:
        return [] if not any(F(x) for x in v) else None
    rows = [[vec[i] for vec in vectors] + [v[i]] for i in range(n)]
    sol = _solve_augmented(rows, len(vectors), F)
    return sol


def _solve_augmented(rows, nvars, F):
    R, piv = rref(rows, F, nvars + 1)
    if piv and piv[-1] == nvars:
        return None
    x = [F.zero] * nvars
    for row, pc in zip(R, piv):
        x[pc] = row[nvars]
    return x


def solve(rows, rhs, F, ncols=None):
    """A particular solution of ``M x = rhs`` or None when inconsistent."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return [F.zero] * ncols
    return _solve_augmented(aug, ncols, F)


def matmul(A, B, F):
    if not A:
        return []
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * m
        for k, a in enumerate(row):
            if a == 0:
                continue
            for j, b in enumerate(B[k]):
                if b != 0:
                    acc[j] += a * b
        out.append([F(x) for x in acc])
    return out


class LinearSystem:
    """Sparse linear equations ``sum coeffs[var] * x[var] == rhs``.

    Duplicate equations are dropped on entry, which keeps the structure
    constant systems built by the algebra code small.
    """

    def __init__(self, nvars, F):
        self.nvars = nvars
        self.F = F
        self._eqs = {}
        self.inconsistent = False

    def add(self, coeffs, rhs=0):
        F = self.F
        c = F.clean(coeffs)
        rhs = F(rhs)
        if not c:
            if rhs != 0:
                self.inconsistent = True
            return
        key = (tuple(sorted(c.items())), rhs)
        self._eqs[key] = None

    def __len__(self):
        return len(self._eqs)

    def _matrix(self):
        n = self.nvars
        rows = []
        for items, rhs in self._eqs:
            row = [0] * (n + 1)
            for j, x in items:
                row[j] = x
            row[n] = rhs
            rows.append(row)
        return rows

    def solve(self):
        """Return ``(particular, nullspace_basis)``; particular is None if
        the system has no solution."""
        F, n = self.F, self.nvars
        if self.inconsistent:
            return None, []
        rows = self._matrix()
        if not rows:
            return [F.zero] * n, [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
        R, piv = rref(rows, F, n + 1)
        if piv and piv[-1] == n:
            return None, []
        x = [F.zero] * n
        for row, pc in zip(R, piv):
            x[pc] = row[n]
        null = nullspace_from_rref([r[:n] for r in R], piv, n, F)
        return x, null
