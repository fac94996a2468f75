"""Dense exact linear algebra over the scalar tower.

Matrices are plain lists of row lists; the coefficient domain is passed
explicitly.  Elimination uses first-nonzero pivoting so results are
deterministic for a given input.
"""

from __future__ import annotations

from fractions import Fraction


def identity(dom, n):
    return [[dom.one() if i == j else dom.zero() for j in range(n)]
            for i in range(n)]


def zero_matrix(dom, n, m=None):
    m = n if m is None else m
    return [[dom.zero() for _ in range(m)] for _ in range(n)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_mul(dom, A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = [[dom.zero()] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for p in range(k):
            a = Ai[p]
            if not a:
                continue
            Bp = B[p]
            for j in range(m):
                b = Bp[j]
                if b:
                    row[j] = row[j] + a * b
    return out

def mat_vec(dom, A, v):
    out = []
    for row in A:
        acc = dom.zero()
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_identity(dom, A):
    return mat_eq(A, identity(dom, len(A)))


def rref(dom, A):
    """Reduced row echelon form over a field domain.

    Returns (R, pivots, ops) where ops records the row operations as the
    transform matrix applied on the left.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    R = [list(row) for row in A]
    T = identity(dom, n)
    pivots = []
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if R[i][c]:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        T[r], T[pr] = T[pr], T[r]
        inv = dom.inv(R[r][c])
        R[r] = [x * inv for x in R[r]]
        T[r] = [x * inv for x in T[r]]
        for i in range(n):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return R, pivots, T


def kernel_basis(dom, A):
    """Basis of the right null space of A over a field domain."""
    n = len(A)
    m = len(A[0]) if n else 0
    if n == 0:
        return [[dom.one() if i == j else dom.zero() for j in range(m)]
                for i in range(m)]
    R, pivots, _ = rref(dom, A)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [dom.zero()] * m
        v[fc] = dom.one()
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def solve(dom, A, b):
    """One solution of A x = b over a field domain, or None."""
    n = len(A)
    m = len(A[0]) if n else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(A)]
    R, pivots, _ = rref(dom, aug)
    if m in pivots:
        return None
    x = [dom.zero()] * m
    for r, pc in enumerate(pivots):
        x[pc] = R[r][m]
    return x


def left_inverse_coords(dom, A):
    """For an injective n x d matrix A over a field, rows L with L A = I_d.

    Used to read off coordinates of vectors known to lie in the column span.
    """
    n = len(A)
    d = len(A[0]) if n else 0
    aug = [list(A[i]) + [dom.one() if i == j else dom.zero() for j in range(n)]
           for i in range(n)]
    R, pivots, _ = rref(dom, aug)
    if pivots[:d] != list(range(d)):
        raise ValueError("matrix is not injective")
    return [R[r][d:] for r in range(d)]


def matrix_inverse(dom, A):
    n = len(A)
    aug = [list(A[i]) + [dom.one() if i == j else dom.zero() for j in range(n)]
           for i in range(n)]
    R, pivots, _ = rref(dom, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [R[i][n:] for i in range(n)]


def smith_invariants(A):
    """Diagonal invariant factors of an integer matrix (Smith normal form)."""
    M = [list(map(int, row)) for row in A]
    n = len(M)
    m = len(M[0]) if n else 0
    invariants = []
    r = 0
    while r < min(n, m):
        # find a nonzero entry in the remaining block
        piv = None
        for i in range(r, n):
            for j in range(r, m):
                if M[i][j]:
                    if piv is None or abs(M[i][j]) < abs(M[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        M[r], M[i0] = M[i0], M[r]
        for row in M:
            row[r], row[j0] = row[j0], row[r]
        done = False
        while not done:
            done = True
            for i in range(r + 1, n):
                if M[i][r]:
                    q = M[i][r] // M[r][r]
                    for j in range(m):
                        M[i][j] -= q * M[r][j]
                    if M[i][r]:
                        M[r], M[i] = M[i], M[r]
                        done = False
            for j in range(r + 1, m):
                if M[r][j]:
                    q = M[r][j] // M[r][r]
                    for i in range(n):
                        M[i][j] -= q * M[i][r]
                    if M[r][j]:
                        for row in M:
                            row[r], row[j] = row[j], row[r]
                        done = False
        invariants.append(abs(M[r][r]))
        r += 1
    # enforce divisibility chain
    for i in range(len(invariants) - 1):
        for j in range(i + 1, len(invariants)):
            a, b = invariants[i], invariants[j]
            from math import gcd
            g = gcd(a, b)
            invariants[i], invariants[j] = g, a * b // g if g else 0
    return invariants


def min_valuation(A):
    """Smallest valuation of any nonzero entry of a series matrix, or None."""
    best = None
    for row in A:
        for x in row:
            v = x.valuation()
            if v is not None and (best is None or v < best):
                best = v
    return best


def series_matrix_congruent_identity(dom, A, prec):
    """Does a series matrix equal the identity modulo t^prec?"""
    n = len(A)
    for i in range(n):
        for j in range(n):
            d = A[i][j] - (dom.one() if i == j else dom.zero())
            if d and d.valuation() is not None and d.valuation() < prec:
                return False
    return True
