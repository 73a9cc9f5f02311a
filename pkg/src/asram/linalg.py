"""Dense linear algebra over the prime field F_p.

Matrices are lists of rows, entries are integers in [0, p).
"""

from __future__ import annotations


def rref(rows, p):
    """Return (reduced row echelon form, pivot columns) of a matrix over F_p."""
    m = [[x % p for x in row] for row in rows]
    pivots = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols, p):
    """Basis of {x : A x = 0} over F_p, one vector per free column."""
    red, pivots = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, c in zip(red, pivots):
            x[c] = -row[f] % p
        basis.append(x)
    return basis


def solve(rows, rhs, p):
    """One solution x of A x = rhs over F_p, or None if the system is inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return x
