"""Small exact integer matrix routines: Smith/Hermite forms and kernels.

Sizes here are tiny (at most ~16), so the classical reduction algorithms
are used without any performance tricks.
"""

from __future__ import annotations

from fractions import Fraction


def int_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def int_transpose(a):
    return [list(r) for r in zip(*a)]


def int_det(a):
    """Determinant of an integer matrix, exact (via Fractions)."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for j in range(n):
        piv = next((i for i in range(j, n) if m[i][j] != 0), None)
        if piv is None:
            return 0
        if piv != j:
            m[j], m[piv] = m[piv], m[j]
            det = -det
        det *= m[j][j]
        for i in range(j + 1, n):
            if m[i][j] != 0:
                f = m[i][j] / m[j][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[j])]
    assert det.denominator == 1
    return int(det)


def smith_normal_form(a):
    """Return (d, u, v) with u a v = d in Smith normal form.

    u and v are unimodular; d is diagonal (as a rows x cols matrix) with
    d[i] | d[i+1].  Diagonal entries are normalized nonnegative.
    """
    a = [list(row) for row in a]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = int_identity(rows)
    v = int_identity(cols)
    if rows == 0 or cols == 0:
        return a, u, v
    _local_cleanup(a, u, v, 0)
    # enforce the divisibility chain: fold violators back and re-eliminate
    n = min(rows, cols)
    while True:
        bad = None
        for i in range(n - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if (x == 0 and y != 0) or (x != 0 and y % x != 0):
                bad = i
                break
        if bad is None:
            break
        # add column bad+1 to column bad, which puts y in the working block
        for r in a:
            r[bad] += r[bad + 1]
        for r in v:
            r[bad] += r[bad + 1]
        _local_cleanup(a, u, v, bad)
    for i in range(n):
        if a[i][i] < 0:
            for rr in a:
                rr[i] = -rr[i]
            for rr in v:
                rr[i] = -rr[i]
    return a, u, v


def _local_cleanup(a, u, v, t0):
    """Re-run the elimination from position t0 (helper for SNF divisibility)."""
    rows, cols = len(a), len(a[0])

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    t = t0
    while t < min(rows, cols):
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        t += 1


def snf_diagonal(a):
    """Just the Smith invariant factors (nonnegative, divisibility chain)."""
    d, _, _ = smith_normal_form(a)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


def kernel_basis_saturated(a):
    """Primitive basis of the integer kernel lattice of a (rows x cols).

    Returns a list of integer column vectors spanning ker(a) over Q and
    saturated in Z^cols (the lattice they span is  ker(a) cap Z^cols).
    """
    d, _, v = smith_normal_form(a)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = sum(1 for i in range(min(rows, cols)) if d[i][i] != 0)
    # columns rank..cols-1 of v span the kernel saturation
    return [[v[r][j] for r in range(cols)] for j in range(rank, cols)]


def complete_unimodular(columns, n):
    """Extend primitive, saturated integer columns to a unimodular matrix.

    Returns an n x n unimodular integer matrix whose LAST k columns are the
    given columns (k = len(columns)).
    """
    k = len(columns)
    if k == 0:
        return int_identity(n)
    kmat = [[columns[j][i] for j in range(k)] for i in range(n)]  # n x k
    d, u, v = smith_normal_form(kmat)
    for i in range(k):
        if d[i][i] not in (1, -1):
            raise ValueError("columns are not a saturated primitive basis")
    # K = U^-1 [I;0] V^-1, so first k columns of U^-1 span the same lattice
    uinv = _int_inverse_unimodular(u)
    rest = [[uinv[i][j] for j in range(k, n)] for i in range(n)]
    full = [[rest[i][j] for j in range(n - k)] + [kmat[i][j] for j in range(k)]
            for i in range(n)]
    det = int_det(full)
    if det == 0:
        raise ValueError("completion failed")
    assert det in (1, -1), det
    if det == -1 and n > k:
        for i in range(n):
            full[i][0] = -full[i][0]
    elif det == -1:
        raise ValueError("cannot fix sign without a free column")
    return full


def _int_inverse_unimodular(u):
    n = len(u)
    m = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)]
         for i, row in enumerate(u)]
    for j in range(n):
        piv = next(i for i in range(j, n) if m[i][j] != 0)
        m[j], m[piv] = m[piv], m[j]
        inv = 1 / m[j][j]
        m[j] = [x * inv for x in m[j]]
        for i in range(n):
            if i != j and m[i][j] != 0:
                f = m[i][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[j])]
    out = [[m[i][n + j] for j in range(n)] for i in range(n)]
    return [[int(x) for x in row] for row in out]


def hermite_normal_form_columns(a):
    """Column-style HNF: returns (h, t) with h = a t, t unimodular.

    h is lower-triangular-staircase with positive pivots and entries to the
    right of each pivot reduced modulo it (a standard left-GL-invariant
    normal form of the column lattice).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = [list(r) for r in a]
    t = int_identity(cols)

    def add_col(src, dst, c):
        for r in h:
            r[dst] += c * r[src]
        for r in t:
            r[dst] += c * r[src]

    def swap_cols(i, j):
        for r in h:
            r[i], r[j] = r[j], r[i]
        for r in t:
            r[i], r[j] = r[j], r[i]

    def neg_col(i):
        for r in h:
            r[i] = -r[i]
        for r in t:
            r[i] = -r[i]

    pivot_col = 0
    for r in range(rows):
        if pivot_col >= cols:
            break
        # gcd-reduce the row r across columns pivot_col..cols-1
        while True:
            nz = [j for j in range(pivot_col, cols) if h[r][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(h[r][j]))
            swap_cols(pivot_col, jmin)
            if h[r][pivot_col] < 0:
                neg_col(pivot_col)
            done = True
            for j in range(pivot_col + 1, cols):
                if h[r][j] != 0:
                    q = h[r][j] // h[r][pivot_col]
                    add_col(pivot_col, j, -q)
                    if h[r][j] != 0:
                        done = False
            if done:
                break
        if h[r][pivot_col] != 0:
            # reduce earlier columns against this pivot
            for j in range(pivot_col):
                q = h[r][j] // h[r][pivot_col]
                if q:
                    add_col(pivot_col, j, -q)
            pivot_col += 1
    return h, t
