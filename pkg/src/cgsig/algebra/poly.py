"""Dense univariate polynomials over Q (coefficient lists, constant term first)."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

Poly = list[Fraction]


def trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def padd(p, q) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def pneg(p) -> Poly:
    return [-c for c in p]


def psub(p, q) -> Poly:
    return padd(p, pneg(q))


def pscale(p, c) -> Poly:
    return trim([c * x for x in p])


def pmul(p, q) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pdivmod(p, q) -> tuple[Poly, Poly]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    r = list(p)
    lead = Fraction(q[-1])
    while len(r) >= len(q):
        c = r[-1] / lead
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[k + i] -= c * b
        r = trim(r)
    return trim(quo), r


def pmod(p, q) -> Poly:
    return pdivmod(p, q)[1]


def monic(p) -> Poly:
    p = trim(p)
    return [Fraction(c) / p[-1] for c in p] if p else p


def pgcd(p, q) -> Poly:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, pmod(p, q)
    return monic(p)


def pderiv(p) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def peval(p, x):
    acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree(p) -> Poly:
    p = trim(p)
    g = pgcd(p, pderiv(p))
    return monic(pdivmod(p, g)[0]) if len(g) > 1 else monic(p)


def sturm_sequence(p) -> list[Poly]:
    seq = [trim(p), pderiv(p)]
    while seq[-1]:
        r = pmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(pneg(r))
    return seq


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_count(p, lo, hi, seq=None) -> int:
    """Number of distinct real roots of ``p`` in the half-open ``(lo, hi]``."""
    seq = seq or sturm_sequence(p)

    def v(x):
        return _variations([_sgn(peval(s, x)) for s in seq])

    return v(lo) - v(hi)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(coeffs, negate: bool = False,
                    sign: Callable[[object], int] = _sgn) -> int:
    """Descartes sign variations of ``p(t)`` (or ``p(-t)`` with ``negate``).

    For a real-rooted polynomial this is exactly the number of positive
    (resp. negative) roots counted with multiplicity.
    """
    signs = [sign(c) for c in coeffs]
    if negate:
        signs = [s if k % 2 == 0 else -s for k, s in enumerate(signs)]
    return _variations(signs)


def charpoly(A, one=Fraction(1), zero=Fraction(0)) -> list:
    """Characteristic polynomial ``det(tI - A)`` by Faddeev-LeVerrier.

    Works over any commutative ring whose elements support ``+``, ``*``,
    negation and exact division by a positive integer. Coefficients are
    returned constant term first; the leading one is ``one``.
    """
    n = len(A)
    coeffs = [zero] * n + [one]
    M = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        M = _ring_matmul(A, M, zero)
        for i in range(n):
            M[i][i] = M[i][i] + coeffs[n - k + 1]
        AM = _ring_matmul(A, M, zero)
        tr = zero
        for i in range(n):
            tr = tr + AM[i][i]
        coeffs[n - k] = -tr / k
    return coeffs


def _ring_matmul(A, B, zero):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                if A[i][k] is zero or B[k][j] is zero:
                    continue
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out
