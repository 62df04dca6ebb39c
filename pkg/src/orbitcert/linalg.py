"""Exact linear algebra over the rationals (no floating point)."""
from __future__ import annotations

from fractions import Fraction


def rank(rows) -> int:
    """Rank of a matrix given as a list of rows of ints/Fractions (Bareiss)."""
    if not rows:
        return 0
    work = []
    for row in rows:
        denom = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                denom = denom * x.denominator // _gcd(denom, x.denominator)
        work.append([int(x * denom) if isinstance(x, Fraction) else int(x) * denom for x in row])
    m, n = len(work), len(work[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, m):
            if any(work[i][j] != 0 for j in range(c, n)):
                for j in range(c + 1, n):
                    work[i][j] = (work[i][j] * work[r][c] - work[i][c] * work[r][j]) // prev
                work[i][c] = 0
        prev = work[r][c]
        r += 1
        if r == m:
            break
    return r


def nullity(rows, ncols: int | None = None) -> int:
    if not rows:
        return ncols or 0
    return len(rows[0]) - rank(rows)


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly; return x or None if inconsistent.

    ``matrix`` is a list of rows.  Underdetermined systems get the solution
    with free variables set to zero.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol


def kernel_basis(rows):
    """Basis of the right kernel of a matrix (rows of ints/Fractions)."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    aug = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -aug[i][fc]
        basis.append(vec)
    return basis


def express_in_basis(vectors, target):
    """Coefficients c with sum(c_i * vectors[i]) == target, or None."""
    if not vectors:
        return [] if all(x == 0 for x in target) else None
    dim = len(target)
    matrix = [[vectors[j][i] for j in range(len(vectors))] for i in range(dim)]
    return solve(matrix, list(target))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
