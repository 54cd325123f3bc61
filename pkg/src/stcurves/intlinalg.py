"""Exact linear algebra over the integers and rationals.

Matrices are lists (or tuples) of rows of Python ints; results are lists of
lists.  Everything here is elementary and written for correctness on the
small dense matrices this package produces (at most a few hundred rows).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

Matrix = List[List[int]]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def eye(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    n = len(B)
    assert all(len(row) == n for row in A)
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def mat_eq(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    return [list(r) for r in A] == [list(r) for r in B]


def hnf(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Row Hermite normal form.

    Returns (H, U, rank) with U unimodular, U @ M == H, H in row echelon
    form with positive pivots and reduced entries above each pivot.
    """
    H = [list(row) for row in M]
    m = len(H)
    n = len(H[0]) if m else 0
    U = eye(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-reduce column c among rows r..m-1
        while True:
            pivots = [i for i in range(r, m) if H[i][c] != 0]
            if not pivots:
                break
            i0 = min(pivots, key=lambda i: abs(H[i][c]))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c] != 0:
                    q = H[i][c] // H[r][c]
                    for j in range(n):
                        H[i][j] -= q * H[r][j]
                    for j in range(m):
                        U[i][j] -= q * U[r][j]
                    if H[i][c] != 0:
                        done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                for j in range(n):
                    H[i][j] -= q * H[r][j]
                for j in range(m):
                    U[i][j] -= q * U[r][j]
        r += 1
    return H, U, r


def row_basis(M: Sequence[Sequence[int]]) -> Matrix:
    """HNF basis of the lattice spanned by the rows of M."""
    H, _, r = hnf(M)
    return H[:r]


def kernel(M: Sequence[Sequence[int]]) -> Matrix:
    """Basis (as rows) of {x : M @ x == 0}; saturated by construction."""
    if not M:
        return []
    Ht, U, r = hnf(transpose(M))
    del Ht
    return U[r:]


def left_kernel(M: Sequence[Sequence[int]]) -> Matrix:
    """Basis (as rows) of {x : x @ M == 0}."""
    _, U, r = hnf(M)
    return U[r:]


def diagonalize(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Unimodular U, W with U @ M @ W diagonal (entries >= 0).

    The diagonal entries are the elementary divisors up to ordering; the
    divisibility chain is not normalized, which is enough to read off the
    quotient group ZZ^n / rowspace(M).
    """
    D = [list(row) for row in M]
    m = len(D)
    n = len(D[0]) if m else 0
    U, W = eye(m), eye(n)
    for t in range(min(m, n)):
        while True:
            entries = [
                (abs(D[i][j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if D[i][j] != 0
            ]
            if not entries:
                return D, U, W
            _, i0, j0 = min(entries)
            if i0 != t:
                D[t], D[i0] = D[i0], D[t]
                U[t], U[i0] = U[i0], U[t]
            if j0 != t:
                for row in D:
                    row[t], row[j0] = row[j0], row[t]
                for row in W:
                    row[t], row[j0] = row[j0], row[t]
            clean = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    for j in range(n):
                        D[i][j] -= q * D[t][j]
                    for j in range(m):
                        U[i][j] -= q * U[t][j]
                if D[i][t] != 0:
                    clean = False
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    for i in range(m):
                        D[i][j] -= q * D[i][t]
                    for i in range(n):
                        W[i][j] -= q * W[i][t]
                if D[t][j] != 0:
                    clean = False
            if clean:
                break
        if D[t][t] < 0:
            for j in range(n):
                D[t][j] = -D[t][j]
            for j in range(m):
                U[t][j] = -U[t][j]
    return D, U, W


def inverse_unimodular(M: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(M)
    H, U, r = hnf(M)
    if r != n or any(H[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    return U


def solve_rational(
    A: Sequence[Sequence[int]], b: Sequence[int]
) -> Optional[List[Fraction]]:
    """One rational solution x of A @ x == b, or None; free variables are 0."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x


def det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free-ish rational elimination."""
    n = len(M)
    rows = [[Fraction(x) for x in row] for row in M]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        d *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    d *= sign
    assert d.denominator == 1
    return d.numerator


def lattice_index_2d(vectors: Sequence[Sequence[int]]) -> tuple[Matrix, int]:
    """HNF basis and index in ZZ^2 of the lattice spanned by 2-vectors.

    Returns (basis_rows, index); index is 0 if the rank is below 2.
    """
    H, _, r = hnf(list(vectors)) if vectors else ([], [], 0)
    if r < 2:
        return ([list(row) for row in H[:r]], 0)
    return ([H[0][:], H[1][:]], H[0][0] * H[1][1])
