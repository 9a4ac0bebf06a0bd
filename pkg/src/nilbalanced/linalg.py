"""Row reduction over whatever field the scalars live in.

Vectors are plain lists.  All rank decisions use :func:`scalars.is_zero`, so
the same code is exact on Fractions/Gaussian rationals and thresholded on
mpmath numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import is_float, is_zero


def _pivot_row(rows, start, col):
    best = None
    for r in range(start, len(rows)):
        x = rows[r][col]
        if is_zero(x):
            continue
        if not is_float(x):
            return r
        if best is None or abs(x) > abs(rows[best][col]):
            best = r
    return best


def rref(rows):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        p = _pivot_row(m, r, c)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        m[r][c] = Fraction(1) if not is_float(m[r][c]) else m[r][c]
        for i in range(len(m)):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
                m[i][c] = 0 * f
        pivots.append(c)
        r += 1
    out = m[:r]
    # drop float dust left behind by elimination
    out = [[0 * x if is_zero(x) else x for x in row] for row in out]
    return out, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{x : rows @ x = 0}``."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    ncols = len(rows[0])
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def span_basis(vectors):
    """Row-reduced basis of the span of ``vectors``."""
    return rref(vectors)[0]


def in_span(basis, v) -> bool:
    """Whether ``v`` lies in the span of the (already reduced) ``basis``."""
    return solve_in_span(basis, v) is not None


def solve_in_span(basis, v):
    """Coefficients ``c`` with ``sum c_i basis_i == v``, or ``None``."""
    if all(is_zero(x) for x in v):
        return [Fraction(0)] * len(basis)
    if not basis:
        return None
    # columns = basis vectors, augmented with v
    n = len(v)
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = rref(rows)
    if k in piv:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(red, piv):
        coeffs[p] = row[k]
    return coeffs


def annihilator(basis, n):
    """Rows spanning the linear functionals that vanish on ``span(basis)``."""
    if not basis:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return nullspace(basis, n)


def subspace_eq(a, b) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(list(a) + list(b)) == ra


def subspace_le(a, b) -> bool:
    """``span(a) ⊆ span(b)``."""
    return rank(list(a) + list(b)) == rank(b)


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), 0 * a[i][0])
             for j in range(len(b[0]))] for i in range(len(a))]


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
