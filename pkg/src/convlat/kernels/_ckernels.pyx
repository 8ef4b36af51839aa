# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled mirror of ``_pykernels``; same algorithms, typed loops.

Integer entries stay Python ints (arbitrary precision): exactness forbids
fixed-width arithmetic. The gain comes from typed indices and explicit
loops in place of generator expressions.
"""

from math import gcd

BACKEND = "cython"


cdef list _normalize(list v):
    cdef object g = 0
    cdef object a
    for a in v:
        if a:
            g = gcd(g, a)
            if g == 1:
                return v
    if g > 1:
        return [a // g for a in v]
    return v


cdef object _dot(list a, list b):
    cdef Py_ssize_t i, n = len(a)
    cdef object s = 0
    for i in range(n):
        if a[i] and b[i]:
            s += a[i] * b[i]
    return s


cdef list _independent_rows(list rows, Py_ssize_t ncols):
    cdef list chosen = []
    cdef list basis = []
    cdef list v, prow
    cdef Py_ssize_t idx, j, pcol
    cdef object f, p
    for idx in range(len(rows)):
        v = list(rows[idx])
        for prow, pcol in basis:
            if v[pcol]:
                f = v[pcol]
                p = prow[pcol]
                v = [p * v[j] - f * prow[j] for j in range(ncols)]
        pcol = -1
        for j in range(ncols):
            if v[j]:
                pcol = j
                break
        if pcol < 0:
            continue
        basis.append((_normalize(v), pcol))
        chosen.append(idx)
        if len(chosen) == ncols:
            break
    return chosen


cdef list _solve_unit_columns(list square):
    cdef Py_ssize_t n = len(square)
    cdef Py_ssize_t i, j, r, col, k, piv
    cdef list aug = [list(square[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    cdef list prow, row, cols, colv
    cdef object p, f, den, d
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv < 0:
            raise ValueError("singular initial block")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        p = prow[col]
        for r in range(n):
            row = aug[r]
            if r != col and row[col]:
                f = row[col]
                aug[r] = _normalize([p * row[j] - f * prow[j] for j in range(2 * n)])
    den = 1
    for i in range(n):
        d = abs(aug[i][i])
        den = den * d // gcd(den, d)
    cols = []
    for k in range(n):
        colv = []
        for i in range(n):
            colv.append(aug[i][n + k] * (den // aug[i][i]))
        cols.append(_normalize(colv))
    return cols


def dd_extreme_rays(rows, ncols):
    """Extreme rays of the pointed cone {x : rows . x >= 0}."""
    cdef list R = [list(r) for r in rows]
    cdef Py_ssize_t m = len(R)
    cdef Py_ssize_t nc = ncols
    cdef list init = _independent_rows(R, nc)
    if len(init) < nc:
        raise ValueError("constraint matrix is not of full column rank")
    cdef list square = [R[i] for i in init]
    cdef list rays = _solve_unit_columns(square)
    cdef Py_ssize_t k, i, t, kp, kn, nrays, j, pos
    cdef list fixed = []
    cdef list r
    for k in range(nc):
        r = rays[k]
        fixed.append(r if _dot(square[k], r) > 0 else [-a for a in r])
    rays = fixed

    cdef list zsets = []
    cdef object z
    for k in range(nc):
        z = 0
        for pos in range(nc):
            if pos != k:
                z |= 1 << pos
        zsets.append(z)

    cdef Py_ssize_t nbits = nc
    cdef set in_init = set(init)
    cdef list a, vals, pos_idx, neg_idx, zero_idx, new_rays, new_z, rp, rn
    cdef object bit, v, zp, common, vp, vn
    cdef Py_ssize_t need = nc - 2
    cdef bint adjacent
    for i in range(m):
        if i in in_init:
            continue
        a = R[i]
        bit = 1 << nbits
        nbits += 1
        nrays = len(rays)
        vals = [_dot(a, rays[k]) for k in range(nrays)]
        pos_idx = []
        neg_idx = []
        zero_idx = []
        for k in range(nrays):
            v = vals[k]
            if v > 0:
                pos_idx.append(k)
            elif v < 0:
                neg_idx.append(k)
            else:
                zero_idx.append(k)
        if not neg_idx:
            for k in zero_idx:
                zsets[k] |= bit
            continue
        new_rays = []
        new_z = []
        for k in pos_idx:
            new_rays.append(rays[k])
            new_z.append(zsets[k])
        for k in zero_idx:
            new_rays.append(rays[k])
            new_z.append(zsets[k] | bit)
        for kp in pos_idx:
            zp = zsets[kp]
            rp = rays[kp]
            vp = vals[kp]
            for kn in neg_idx:
                common = zp & zsets[kn]
                if common.bit_count() < need:
                    continue
                adjacent = True
                for t in range(nrays):
                    if t != kp and t != kn and (zsets[t] & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                rn = rays[kn]
                vn = vals[kn]
                new_rays.append(_normalize([vp * rn[j] - vn * rp[j] for j in range(nc)]))
                new_z.append(common | bit)
        rays = new_rays
        zsets = new_z
    return rays


cdef class _Tableau:
    cdef list rows
    cdef list obj
    cdef list basis
    cdef object den
    cdef Py_ssize_t m, ncol

    cdef void pivot(self, Py_ssize_t rr, Py_ssize_t cc):
        cdef list prow = self.rows[rr]
        cdef object p = prow[cc]
        cdef object den = self.den
        cdef object f
        cdef list row
        cdef Py_ssize_t i, j, w = self.ncol + 1
        for i in range(self.m):
            if i == rr:
                continue
            row = self.rows[i]
            f = row[cc]
            if f:
                self.rows[i] = [(p * row[j] - f * prow[j]) // den for j in range(w)]
            else:
                self.rows[i] = [(p * row[j]) // den for j in range(w)]
        row = self.obj
        f = row[cc]
        if f:
            self.obj = [(p * row[j] - f * prow[j]) // den for j in range(w)]
        else:
            self.obj = [(p * row[j]) // den for j in range(w)]
        self.den = p
        self.basis[rr] = cc

    cdef str run(self, Py_ssize_t limit_cols):
        cdef Py_ssize_t enter, leave, i, j
        cdef Py_ssize_t ncol = self.ncol
        cdef object a, lhs, rhs
        cdef list obj
        while True:
            obj = self.obj
            enter = -1
            for j in range(limit_cols):
                if obj[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            for i in range(self.m):
                a = self.rows[i][enter]
                if a > 0:
                    if leave < 0:
                        leave = i
                    else:
                        lhs = self.rows[i][ncol] * self.rows[leave][enter]
                        rhs = self.rows[leave][ncol] * a
                        if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[leave]):
                            leave = i
            if leave < 0:
                return "unbounded"
            self.pivot(leave, enter)


def simplex_max(A, b, c):
    """Maximize c.x subject to A x = b, x >= 0 (integer data); see _pykernels."""
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t k = len(c)
    cdef Py_ssize_t i, j, cc, bj
    cdef list r
    cdef object bi, cb
    cdef _Tableau T = _Tableau()
    T.rows = []
    for i in range(m):
        r = list(A[i])
        bi = b[i]
        if bi < 0:
            r = [-v for v in r]
            bi = -bi
        T.rows.append(r + [1 if j == i else 0 for j in range(m)] + [bi])
    T.m = m
    T.ncol = k + m
    cdef Py_ssize_t ncol = T.ncol
    T.basis = [k + i for i in range(m)]
    T.den = 1
    T.obj = [0] * (ncol + 1)
    for i in range(m):
        r = T.rows[i]
        for j in range(k):
            T.obj[j] += r[j]
        T.obj[ncol] += r[ncol]

    T.run(k)
    if T.obj[ncol] != 0:
        return "infeasible", None, 1, 0
    T.obj = [0] * (ncol + 1)
    for i in range(m):
        if T.basis[i] >= k:
            cc = -1
            r = T.rows[i]
            for j in range(k):
                if r[j]:
                    cc = j
                    break
            if cc < 0:
                continue
            if r[cc] < 0:
                T.rows[i] = [-v for v in r]
            T.pivot(i, cc)
    T.obj = [0] * (ncol + 1)
    for j in range(k):
        T.obj[j] = c[j] * T.den
    for i in range(m):
        bj = T.basis[i]
        if bj < k and c[bj]:
            cb = c[bj]
            r = T.rows[i]
            for j in range(k):
                T.obj[j] -= cb * r[j]
            T.obj[ncol] -= cb * r[ncol]
    if T.run(k) == "unbounded":
        return "unbounded", None, 1, 0
    cdef list xnum = [0] * k
    for i in range(m):
        if T.basis[i] < k:
            xnum[T.basis[i]] = T.rows[i][ncol]
    return "optimal", xnum, T.den, -T.obj[ncol]
