"""Integer kernels: double description and integer-preserving simplex.

Everything here works on lists of Python ints so that the same source can be
compiled by Cython (see ``_ckernels.pyx``) without change in semantics.
Callers are responsible for scaling rational data to integers.
"""

from math import gcd

BACKEND = "python"


def _normalize(v):
    g = 0
    for a in v:
        if a:
            g = gcd(g, a)
            if g == 1:
                return v
    if g > 1:
        return [a // g for a in v]
    return v


def _popcount(x):
    return x.bit_count()


def _independent_rows(rows, ncols):
    """Greedy pick of ``ncols`` linearly independent rows (fraction-free)."""
    chosen = []
    basis = []  # echelon rows with their pivot column
    for idx, row in enumerate(rows):
        v = list(row)
        for prow, pcol in basis:
            if v[pcol]:
                f, p = v[pcol], prow[pcol]
                v = [p * a - f * b for a, b in zip(v, prow)]
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


def _solve_unit_columns(square):
    """Integer columns r_k with square * r_k = c_k * e_k, c_k > 0."""
    n = len(square)
    # Gauss-Jordan on [square | I] with Fractions kept implicit via ints.
    aug = [list(square[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("singular initial block")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        p = prow[col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = _normalize([p * a - f * b for a, b in zip(aug[r], prow)])
    # now aug[i][i] * x_i = aug[i][n:]: inverse column k is aug[i][n+k] / aug[i][i]
    cols = []
    for k in range(n):
        den = 1
        for i in range(n):
            d = aug[i][i]
            den = den * abs(d) // gcd(den, abs(d))
        col = []
        for i in range(n):
            d = aug[i][i]
            col.append(aug[i][n + k] * (den // d))
        cols.append(_normalize(col))
    return cols


def dd_extreme_rays(rows, ncols):
    """Extreme rays of the pointed cone {x : rows . x >= 0}.

    ``rows`` must have full column rank ``ncols``; otherwise the cone has a
    lineality space and ValueError is raised. Rays are primitive integer
    vectors; the order of the result is deterministic for a given input.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    init = _independent_rows(rows, ncols)
    if len(init) < ncols:
        raise ValueError("constraint matrix is not of full column rank")
    square = [rows[i] for i in init]
    rays = _solve_unit_columns(square)
    # square * ray_k is a positive multiple of e_k: sign fixed by construction,
    # but enforce it in case of negative pivots.
    fixed = []
    for k, r in enumerate(rays):
        s = sum(a * b for a, b in zip(square[k], r))
        fixed.append(r if s > 0 else [-a for a in r])
    rays = fixed

    zsets = []
    for k in range(ncols):
        z = 0
        for pos in range(ncols):
            if pos != k:
                z |= 1 << pos
        zsets.append(z)

    nbits = ncols
    in_init = set(init)
    for i in range(m):
        if i in in_init:
            continue
        a = rows[i]
        bit = 1 << nbits
        nbits += 1
        vals = [sum(x * y for x, y in zip(a, r)) for r in rays]
        pos_idx = [k for k, v in enumerate(vals) if v > 0]
        neg_idx = [k for k, v in enumerate(vals) if v < 0]
        zero_idx = [k for k, v in enumerate(vals) if v == 0]
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
        need = ncols - 2
        nrays = len(rays)
        for kp in pos_idx:
            zp = zsets[kp]
            rp = rays[kp]
            vp = vals[kp]
            for kn in neg_idx:
                common = zp & zsets[kn]
                if _popcount(common) < need:
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
                r = _normalize([vp * b - vn * c for b, c in zip(rn, rp)])
                new_rays.append(r)
                new_z.append(common | bit)
        rays = new_rays
        zsets = new_z
    return rays


def simplex_max(A, b, c):
    """Maximize c.x subject to A x = b, x >= 0, all data integer.

    Bland's rule throughout; the tableau is kept integral by
    integer-preserving pivoting (each entry is a minor of the input).
    Returns (status, xnum, den, objnum) with x = xnum / den and optimum
    objnum / den; status is 'optimal', 'infeasible' or 'unbounded'.
    """
    m = len(A)
    k = len(c)
    rows = []
    for i in range(m):
        r = list(A[i])
        bi = b[i]
        if bi < 0:
            r = [-v for v in r]
            bi = -bi
        rows.append(r + [1 if j == i else 0 for j in range(m)] + [bi])
    ncol = k + m
    basis = [k + i for i in range(m)]
    den = 1
    # phase I objective: maximize -sum(artificials); obj[j] = reduced cost * den
    obj = [0] * (ncol + 1)
    for i in range(m):
        r = rows[i]
        for j in range(k):
            obj[j] += r[j]
        obj[ncol] += r[ncol]  # = value of sum(artificials) * den (negated objective)

    def pivot(rr, cc):
        nonlocal den
        prow = rows[rr]
        p = prow[cc]
        for i in range(m):
            if i == rr:
                continue
            row = rows[i]
            f = row[cc]
            if f:
                rows[i] = [(p * x - f * y) // den for x, y in zip(row, prow)]
            else:
                rows[i] = [(p * x) // den for x in row]
        f = obj[cc]
        if f:
            obj[:] = [(p * x - f * y) // den for x, y in zip(obj, prow)]
        else:
            obj[:] = [(p * x) // den for x in obj]
        den = p
        basis[rr] = cc

    def run(limit_cols):
        while True:
            enter = -1
            for j in range(limit_cols):
                if obj[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            for i in range(m):
                a = rows[i][enter]
                if a > 0:
                    if leave < 0:
                        leave = i
                    else:
                        lhs = rows[i][ncol] * rows[leave][enter]
                        rhs = rows[leave][ncol] * a
                        if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                            leave = i
            if leave < 0:
                return "unbounded"
            pivot(leave, enter)

    run(k)
    if obj[ncol] != 0:
        return "infeasible", None, 1, 0
    # drive zero-level artificials out of the basis where possible; the
    # phase I objective is discarded so it is zeroed rather than updated
    obj[:] = [0] * (ncol + 1)
    for i in range(m):
        if basis[i] >= k:
            cc = -1
            for j in range(k):
                if rows[i][j]:
                    cc = j
                    break
            if cc < 0:
                continue  # redundant row
            if rows[i][cc] < 0:
                # rhs is zero; the flipped row keeps every entry a signed minor
                rows[i] = [-v for v in rows[i]]
            pivot(i, cc)
    # phase II
    obj[:] = [0] * (ncol + 1)
    for j in range(k):
        obj[j] = c[j] * den
    for i in range(m):
        bj = basis[i]
        if bj < k and c[bj]:
            cb = c[bj]
            r = rows[i]
            for j in range(k):
                obj[j] -= cb * r[j]
            obj[ncol] -= cb * r[ncol]
    # rows still pinned by an artificial are all-zero on real columns and
    # never win a ratio test; artificials never re-enter (columns < k only)
    status = run(k)
    if status == "unbounded":
        return "unbounded", None, 1, 0
    xnum = [0] * k
    for i in range(m):
        if basis[i] < k:
            xnum[basis[i]] = rows[i][ncol]
    objnum = -obj[ncol]
    return "optimal", xnum, den, objnum
