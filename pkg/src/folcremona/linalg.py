"""Dense Gaussian elimination over Q(zeta_N)."""

from .cyclotomic import as_cyc


def _to_field(rows, N):
    return [[as_cyc(v, N) for v in row] for row in rows]


def row_reduce(rows, N):
    """Reduced row echelon form and the list of pivot columns."""
    m = _to_field(rows, N)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if not m[k][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for k in range(nrows):
            if k != r and not m[k][c].is_zero():
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows, N):
    return len(row_reduce(rows, N)[1])


def nullspace(rows, N):
    """Basis of the right kernel; each vector has first nonzero entry 1."""
    ncols = len(rows[0])
    m, pivots = row_reduce(rows, N)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [as_cyc(0, N) for _ in range(ncols)]
        vec[f] = as_cyc(1, N)
        for k, c in enumerate(pivots):
            vec[c] = -m[k][f]
        lead = next(v for v in vec if not v.is_zero())
        inv = lead.inverse()
        basis.append([v * inv for v in vec])
    return basis


def solve(rows, rhs, N):
    """Unique solution of rows . x = rhs, or ValueError when singular or inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    m, pivots = row_reduce(aug, N)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("singular linear system")
    return [m[k][-1] for k in range(ncols)]


def determinant(rows, N):
    m = _to_field(rows, N)
    n = len(m)
    det = as_cyc(1, N)
    for c in range(n):
        piv = next((k for k in range(c, n) if not m[k][c].is_zero()), None)
        if piv is None:
            return as_cyc(0, N)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for k in range(c + 1, n):
            if not m[k][c].is_zero():
                f = m[k][c] * inv
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
    return det


def inverse(rows, N):
    n = len(rows)
    aug = [list(r) + [int(i == k) for k in range(n)] for i, r in enumerate(rows)]
    m, pivots = row_reduce(aug, N)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in m]
