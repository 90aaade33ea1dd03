"""Exact integer linear algebra: Smith normal form with transforms, solvers.

Matrices are plain lists of rows of Python ints; everything is arbitrary
precision.  Sizes in this package stay small (< 100), so the classical
pivot-on-smallest-entry algorithm is plenty.
"""

from __future__ import annotations

Matrix = list  # list[list[int]]


def xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k = len(A), len(B)
    assert all(len(r) == k for r in A), "shape mismatch"
    cols = len(B[0]) if B else 0
    out = [[0] * cols for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(cols):
                    oi[j] += a * Bt[j]
    return out


def mat_vec(A: Matrix, v: list) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: Matrix) -> Matrix:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_copy(A: Matrix) -> Matrix:
    return [row[:] for row in A]


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return A == B


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def snf(M: Matrix):
    """Smith normal form. Returns (D, U, V) with U*M*V = D.

    D is diagonal with d_1 | d_2 | ... (nonnegative), U and V unimodular.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D = mat_copy(M)
    U = identity(m)
    V = identity(n)

    def pivot_at(k):
        # smallest nonzero |entry| in the lower-right block
        best = None
        for i in range(k, m):
            for j in range(k, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        return best

    k = 0
    while True:
        p = pivot_at(k)
        if p is None:
            break
        _, pi, pj = p
        _swap_rows(D, k, pi)
        _swap_rows(U, k, pi)
        _swap_cols(D, k, pj)
        _swap_cols(V, k, pj)
        # clear row/column k, restarting if the pivot changes
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, m):
                if D[i][k]:
                    a, b = D[k][k], D[i][k]
                    if b % a == 0:
                        q = b // a
                        for j in range(n):
                            D[i][j] -= q * D[k][j]
                        for j in range(m):
                            U[i][j] -= q * U[k][j]
                    else:
                        g, x, y = xgcd(a, b)
                        ap, bp = a // g, b // g
                        rk = [x * D[k][j] + y * D[i][j] for j in range(n)]
                        ri = [-bp * D[k][j] + ap * D[i][j] for j in range(n)]
                        D[k], D[i] = rk, ri
                        uk = [x * U[k][j] + y * U[i][j] for j in range(m)]
                        ui = [-bp * U[k][j] + ap * U[i][j] for j in range(m)]
                        U[k], U[i] = uk, ui
                        dirty = True
            for j in range(k + 1, n):
                if D[k][j]:
                    a, b = D[k][k], D[k][j]
                    if b % a == 0:
                        q = b // a
                        for i in range(m):
                            D[i][j] -= q * D[i][k]
                        for i in range(n):
                            V[i][j] -= q * V[i][k]
                        dirty = True  # row ops above may have refilled the column
                    else:
                        g, x, y = xgcd(a, b)
                        ap, bp = a // g, b // g
                        for i in range(m):
                            cik, cij = D[i][k], D[i][j]
                            D[i][k] = x * cik + y * cij
                            D[i][j] = -bp * cik + ap * cij
                        for i in range(n):
                            cik, cij = V[i][k], V[i][j]
                            V[i][k] = x * cik + y * cij
                            V[i][j] = -bp * cik + ap * cij
                        dirty = True
            if not dirty:
                # column k must be clear too (row ops can refill it)
                for i in range(k + 1, m):
                    if D[i][k]:
                        dirty = True
                        break
        k += 1
        if k >= min(m, n):
            break

    # enforce the divisibility chain
    r = min(m, n)
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a and b and b % a != 0:
                # mix column i+1 into column i, then re-clear the 2x2 block
                for t in range(m):
                    D[t][i] += D[t][i + 1]
                for t in range(n):
                    V[t][i] += V[t][i + 1]
                g, x, y = xgcd(D[i][i], D[i + 1][i])
                a0, b0 = D[i][i], D[i + 1][i]
                ap, bp = a0 // g, b0 // g
                r0 = [x * D[i][j] + y * D[i + 1][j] for j in range(n)]
                r1 = [-bp * D[i][j] + ap * D[i + 1][j] for j in range(n)]
                D[i], D[i + 1] = r0, r1
                u0 = [x * U[i][j] + y * U[i + 1][j] for j in range(m)]
                u1 = [-bp * U[i][j] + ap * U[i + 1][j] for j in range(m)]
                U[i], U[i + 1] = u0, u1
                # clear the remaining off-diagonal entry in column i+1/row i
                q = D[i][i + 1] // D[i][i]
                for t in range(m):
                    D[t][i + 1] -= q * D[t][i]
                for t in range(n):
                    V[t][i + 1] -= q * V[t][i]
                changed = True
        if not changed:
            break

    for i in range(r):
        if D[i][i] < 0:
            for j in range(n):
                D[i][j] = -D[i][j]
            for j in range(m):
                U[i][j] = -U[i][j]
    return D, U, V


def diagonal_of(D: Matrix) -> list:
    r = min(len(D), len(D[0]) if D else 0)
    return [D[i][i] for i in range(r)]


def det_sign_unimodular(A: Matrix) -> int:
    """Determinant of a unimodular matrix (must be +-1, else raises)."""
    D, U, V = snf(A)
    d = 1
    for x in diagonal_of(D):
        d *= x
    if d != 1:
        raise ValueError("matrix is not unimodular")
    # sign via permanent-free expansion is overkill; use fraction-free Gauss
    n = len(A)
    M = mat_copy(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    _swap_rows(M, k, i)
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    d = M[n - 1][n - 1] if n else 1
    return sign * (1 if d > 0 else -1)


def kernel_basis(A: Matrix) -> list:
    """Basis (list of vectors) of the integer kernel {x : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    D, U, V = snf(A)
    r = 0
    for i in range(min(m, n)):
        if D[i][i]:
            r += 1
    cols = []
    for j in range(r, n):
        cols.append([V[i][j] for i in range(n)])
    return cols


def solve(A: Matrix, b: list):
    """One integer solution x of A x = b, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [0] * n
    D, U, V = snf(A)
    c = mat_vec(U, b)
    y = [0] * n
    for i in range(min(m, n)):
        d = D[i][i]
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    for i in range(min(m, n), m):
        if c[i]:
            return None
    return mat_vec(V, y)


def solve_matrix(A: Matrix, B: Matrix):
    """X with A X = B (columnwise), or None.  B given as a list of rows."""
    if not B:
        return []
    cols = len(B[0])
    n = len(A[0]) if A else 0
    xs = []
    for j in range(cols):
        b = [row[j] for row in B]
        x = solve(A, b)
        if x is None:
            return None
        xs.append(x)
    # xs holds columns; return as a matrix with n rows
    return [[xs[j][i] for j in range(cols)] for i in range(n)]


def hstack_cols(vectors: list) -> Matrix:
    """Matrix whose columns are the given vectors."""
    if not vectors:
        return []
    n = len(vectors[0])
    return [[v[i] for v in vectors] for i in range(n)]


def columns(A: Matrix) -> list:
    if not A:
        return []
    return [[row[j] for row in A] for j in range(len(A[0]))]
