"""Exact integer matrices: Smith normal form, cokernels, signatures.

Matrices are plain nested lists (or tuples) of Python ints, row-major.
Nothing here ever touches fixed-width arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ..errors import InfiniteGroup, NotSymmetric
from .poly import charpoly, sign_variations

Matrix = list[list[int]]


def as_matrix(A) -> Matrix:
    rows = [[int(x) for x in row] for row in A]
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(A, B) -> Matrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def add(A, B) -> Matrix:
    return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]


def sub(A, B) -> Matrix:
    return [[a - b for a, b in zip(r, s)] for r, s in zip(A, B)]


def neg(A) -> Matrix:
    return [[-a for a in r] for r in A]


def block_diag(*blocks) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = int(x)
        off += len(b)
    return out


def det(A) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    M = as_matrix(A)
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, W)`` with ``U @ A @ W == D``.

    ``U`` and ``W`` are unimodular, ``D`` is diagonal with nonnegative
    entries and each diagonal entry divides the next.
    """
    D = as_matrix(A)
    m = len(D)
    n = len(D[0]) if m else 0
    U = identity(m)
    W = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, W):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        for M in (D, U):
            M[dst] = [x + c * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for M in (D, W):
            for row in M:
                row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m)
                       for j in range(t, n) if D[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(D[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, W


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group ``Z_{d1} + ... + Z_{dr}`` with ``d1 | d2 | ...``.

    ``generator_images[j]`` holds the coordinates of the j-th presentation
    generator in the invariant-factor basis.
    """

    invariant_factors: tuple[int, ...]
    generator_images: tuple[tuple[int, ...], ...] = ()

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def is_elementary(self, p: int) -> bool:
        return all(d == p for d in self.invariant_factors)

    def rank(self, p: int) -> int:
        """Dimension of the p-torsion over F_p."""
        return sum(1 for d in self.invariant_factors if d % p == 0)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def group_from_presentation(A) -> FinAbGroup:
    """Cokernel of the relation matrix ``A`` (one relation per row)."""
    A = as_matrix(A)
    ngens = len(A[0]) if A else 0
    D, _, W = smith_normal_form(A)
    diag = [D[i][i] if i < len(D) else 0 for i in range(ngens)]
    if any(d == 0 for d in diag):
        raise InfiniteGroup(f"presentation has infinite cokernel (diagonal {diag})")
    keep = [i for i, d in enumerate(diag) if d != 1]
    factors = tuple(diag[i] for i in keep)
    images = tuple(tuple(W[j][i] % diag[i] for i in keep) for j in range(ngens))
    return FinAbGroup(factors, images)


def is_symmetric(A) -> bool:
    return all(A[i][j] == A[j][i] for i in range(len(A)) for j in range(i))


def symmetric_signature(A) -> int:
    """Signature of a real symmetric (integer or rational) matrix.

    The characteristic polynomial of a symmetric matrix is real-rooted,
    so Descartes' rule counts positive and negative eigenvalues exactly.
    """
    if any(len(r) != len(A) for r in A) or not is_symmetric(A):
        raise NotSymmetric("symmetric_signature needs a symmetric matrix")
    p = charpoly([[Fraction(x) for x in r] for r in A])
    return sign_variations(p) - sign_variations(p, negate=True)


def rank(A) -> int:
    M = [[Fraction(x) for x in r] for r in A]
    r = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
    return r
