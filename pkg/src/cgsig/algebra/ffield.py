"""Subspaces of F_p^n in reduced row echelon form."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator


def gaussian_binomial(n: int, d: int, p: int) -> int:
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def rref(rows, p: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over F_p, zero rows dropped."""
    M = [[x % p for x in r] for r in rows]
    n = len(M[0]) if M else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        r += 1
    return tuple(tuple(row) for row in M[:r])


@dataclass(frozen=True)
class Subspace:
    n: int
    p: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors, n: int, p: int) -> "Subspace":
        vectors = [list(v) for v in vectors]
        return cls(n, p, rref(vectors, p) if vectors else ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def __contains__(self, v) -> bool:
        return rref(list(self.basis) + [list(v)], self.p) == self.basis

    def vectors(self, nonzero: bool = False) -> Iterator[tuple[int, ...]]:
        """All elements, ordered lexicographically by basis coefficients."""
        for coeffs in product(range(self.p), repeat=self.dim):
            if nonzero and not any(coeffs):
                continue
            yield tuple(sum(c * b[j] for c, b in zip(coeffs, self.basis)) % self.p
                        for j in range(self.n))


def enumerate_subspaces(n: int, p: int, d: int) -> Iterator[Subspace]:
    """Every ``d``-dimensional subspace of ``F_p^n`` exactly once.

    Order: pivot sets lexicographically, then free entries in
    ``itertools.product`` order. The order is part of the certificate
    format, so do not change it casually.
    """
    if not 0 <= d <= n:
        return
    for pivots in combinations(range(n), d):
        free = [(i, j) for i, pc in enumerate(pivots)
                for j in range(pc + 1, n) if j not in pivots]
        for vals in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield Subspace(n, p, tuple(tuple(r) for r in rows))


def annihilator(S: Subspace) -> Subspace:
    """``{v : v . s = 0 for every s in S}``."""
    n, p = S.n, S.p
    piv = S.pivots
    free = [j for j in range(n) if j not in piv]
    vecs = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(S.basis, piv):
            v[pc] = -row[f] % p
        vecs.append(v)
    return Subspace.span(vecs, n, p)
