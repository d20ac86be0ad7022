"""Exact dense linear algebra over a coefficient field.

Matrices are lists of rows; rows are lists of field elements.  All routines
are exact.  GF(2) rows are packed into integers and eliminated with xor;
other prime fields use inline modular arithmetic; QQ uses Fractions.
"""

from __future__ import annotations


def _rref_gf2(rows, ncols):
    packed = []
    for row in rows:
        v = 0
        for j, x in enumerate(row):
            if x:
                v |= 1 << j
        if v:
            packed.append(v)
    out = []
    pivots = []
    for c in range(ncols):
        bit = 1 << c
        piv = None
        for i, v in enumerate(packed):
            if v & bit:
                piv = i
                break
        if piv is None:
            continue
        pv = packed.pop(piv)
        packed = [v ^ pv if v & bit else v for v in packed]
        out = [v ^ pv if v & bit else v for v in out]
        out.append(pv)
        pivots.append(c)
        if not packed:
            break
    unpacked = [[(v >> j) & 1 for j in range(ncols)] for v in out]
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [unpacked[i] for i in order], sorted(pivots)


def _rref_gfp(rows, ncols, p):
    m = [[x % p for x in row] for row in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        if inv != 1:
            m[r] = [x * inv % p for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def _rref_generic(rows, ncols, field):
    zero, one = field.zero, field.one
    m = [list(row) for row in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        if inv != one:
            m[r] = [field.mul(inv, x) for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rref(rows, ncols, field):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    if not rows:
        return [], []
    p = field.char
    if p == 2:
        return _rref_gf2(rows, ncols)
    if p:
        return _rref_gfp(rows, ncols, p)
    return _rref_generic(rows, ncols, field)


def rank(rows, ncols, field) -> int:
    return len(rref(rows, ncols, field)[0])


def nullspace(rows, ncols, field):
    """Basis of {x : M x = 0} for the matrix M with the given rows."""
    red, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    zero = field.zero
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = field.one
        for i, c in enumerate(pivots):
            vec[c] = field.neg(red[i][f])
        basis.append(vec)
    return basis


def row_space_basis(rows, ncols, field):
    return rref(rows, ncols, field)[0]


def solve(rows, ncols, rhs, field):
    """One solution x of M x = rhs, or None if inconsistent."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1, field)
    if ncols in pivots:
        return None
    zero = field.zero
    x = [zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return x


def in_row_space(basis_rows, ncols, vec, field) -> bool:
    if all(x == field.zero for x in vec):
        return True
    r0 = rank(basis_rows, ncols, field)
    return rank(list(basis_rows) + [list(vec)], ncols, field) == r0


def coordinates_in_rows(basis_rows, ncols, vec, field):
    """Coefficients c with sum c_i * basis_i = vec, or None."""
    if not basis_rows:
        return [] if all(x == field.zero for x in vec) else None
    cols = [[basis_rows[i][j] for i in range(len(basis_rows))] for j in range(ncols)]
    return solve(cols, len(basis_rows), list(vec), field)


def left_nullspace(rows, ncols, field):
    """Basis of {y : y M = 0}; functionals vanishing on the row space."""
    nrows = len(rows)
    transpose = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    return nullspace(transpose, nrows, field)


def matvec(rows, vec, field):
    zero = field.zero
    out = []
    for row in rows:
        acc = zero
        for a, b in zip(row, vec):
            if a != zero and b != zero:
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def mat_mul(a, b, field):
    """Matrix product; a is m x k, b is k x n, both lists of rows."""
    if not a or not b:
        return [[] for _ in a]
    k = len(b)
    n = len(b[0])
    zero = field.zero
    p = field.char
    out = []
    if p:
        for row in a:
            acc = [0] * n
            for t, x in enumerate(row):
                if x:
                    bt = b[t]
                    for j in range(n):
                        if bt[j]:
                            acc[j] += x * bt[j]
            out.append([v % p for v in acc])
        return out
    for row in a:
        acc = [zero] * n
        for t, x in enumerate(row):
            if x != zero:
                bt = b[t]
                for j in range(n):
                    if bt[j] != zero:
                        acc[j] = field.add(acc[j], field.mul(x, bt[j]))
        out.append(acc)
    return out


def identity(n, field):
    zero, one = field.zero, field.one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]
