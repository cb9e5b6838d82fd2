"""Exact Tristram-Levine style signatures at roots of unity.

For ``omega = exp(2 pi i k / q)`` write ``x = Re(omega) = c/2`` and
``w = i Im(omega)``. The form ``(1-omega)V + (1-conj(omega))V^T`` equals
``(1 - c/2)(V + V^T) - w (V - V^T)`` and ``w^2 = c^2/4 - 1``, so every entry
lives in ``Q[c][w]``. The characteristic polynomial is computed in that
ring, the ``w``-part cancels, and the remaining coefficients are real
numbers of the form ``r(c)`` whose signs are decided exactly with
:class:`AlgebraicReal`. The polynomial is real-rooted, so Descartes'
rule gives the eigenvalue sign counts.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .poly import (Poly, charpoly, padd, pmod, pmul, pneg, pscale,
                   sign_variations, squarefree, trim)
from .realalg import AlgebraicReal


def _dickson(n: int) -> Poly:
    """Integer polynomial ``D_n`` with ``D_n(2 cos t) = 2 cos(n t)``."""
    a, b = [Fraction(2)], [Fraction(0), Fraction(1)]
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, padd(pmul([0, 1], b), pneg(a))
    return b


@lru_cache(maxsize=None)
def root_of_unity_cosine(q: int, k: int) -> AlgebraicReal:
    """``2cos(2 pi k/q)`` as a root of ``D_q(c) - 2`` (squarefree part).

    Cached; refinement only ever shrinks the interval, so sharing is safe.
    """
    k %= q
    f = squarefree(padd(_dickson(q), [Fraction(-2)]))
    approx = 2 * math.cos(2 * math.pi * k / q)
    roots = sorted({round(2 * math.cos(2 * math.pi * j / q), 12) for j in range(q // 2 + 1)})
    gaps = [b - a for a, b in zip(roots, roots[1:])] or [1.0]
    return AlgebraicReal.near(f, approx, min(gaps) / 3)


class _Elt:
    """Element ``a + b w`` of ``Q[c]/(f) [w] / (w^2 - (c^2/4 - 1))``."""

    __slots__ = ("a", "b", "mod")

    _W2 = [Fraction(-1), Fraction(0), Fraction(1, 4)]

    def __init__(self, a, b, mod):
        self.a, self.b, self.mod = a, b, mod

    def __add__(self, o):
        return _Elt(padd(self.a, o.a), padd(self.b, o.b), self.mod)

    def __neg__(self):
        return _Elt(pneg(self.a), pneg(self.b), self.mod)

    def __mul__(self, o):
        if not (self.a or self.b) or not (o.a or o.b):
            return _Elt([], [], self.mod)
        f = self.mod
        a = padd(pmul(self.a, o.a), pmul(pmul(self.b, o.b), self._W2))
        b = padd(pmul(self.a, o.b), pmul(self.b, o.a))
        return _Elt(pmod(a, f), pmod(b, f), f)

    def __truediv__(self, k: int):
        return _Elt(pscale(self.a, Fraction(1, k)), pscale(self.b, Fraction(1, k)), self.mod)


def hermitian_signature_at_root(V, q: int, k: int) -> int:
    """Signature of ``(1-w)V + (1-conj w)V^T`` at ``w = exp(2 pi i k/q)``.

    Null directions contribute nothing, so the value is defined even when
    the form is singular.
    """
    if q < 1:
        raise ValueError("q must be positive")
    n = len(V)
    if n == 0 or k % q == 0:
        return 0
    alpha = root_of_unity_cosine(q, k % q)
    f = alpha.poly
    one_minus_x = [Fraction(1), Fraction(-1, 2)]
    H = []
    for i in range(n):
        row = []
        for j in range(n):
            s = V[i][j] + V[j][i]
            t = V[i][j] - V[j][i]
            row.append(_Elt(pscale(one_minus_x, s), trim([-t]), f))
        H.append(row)
    zero = _Elt([], [], f)
    one = _Elt([Fraction(1)], [], f)
    coeffs = charpoly(H, one=one, zero=zero)
    if any(trim(c.b) for c in coeffs):
        raise ArithmeticError("characteristic polynomial not real; broken invariant")
    real = [c.a for c in coeffs]
    return (sign_variations(real, sign=alpha.sign_of)
            - sign_variations(real, negate=True, sign=alpha.sign_of))
