"""Real algebraic numbers given by a squarefree polynomial and an isolating interval."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import (Poly, _sgn, degree, peval, pgcd, pmod, sturm_count,
                   sturm_sequence, squarefree, trim)


def _interval_eval(p, lo, hi):
    """Enclosure of ``p([lo, hi])`` by interval Horner evaluation."""
    a = b = Fraction(0)
    for c in reversed(p):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


@dataclass
class AlgebraicReal:
    """The unique root of ``poly`` in the open interval ``(lo, hi)``.

    ``poly`` is made squarefree on construction and the isolation is
    checked with a Sturm count, so a bad interval fails loudly.
    """

    poly: Poly
    lo: Fraction
    hi: Fraction
    _sturm: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.poly = squarefree(trim(self.poly))
        self.lo, self.hi = Fraction(self.lo), Fraction(self.hi)
        if degree(self.poly) < 1 or not self.lo < self.hi:
            raise ValueError("degenerate algebraic number")
        if peval(self.poly, self.lo) == 0 or peval(self.poly, self.hi) == 0:
            raise ValueError("interval endpoint is a root")
        self._sturm = sturm_sequence(self.poly)
        if sturm_count(self.poly, self.lo, self.hi, self._sturm) != 1:
            raise ValueError("interval does not isolate exactly one root")

    @classmethod
    def near(cls, poly, approx: float, radius: float) -> "AlgebraicReal":
        """Isolate the root of ``poly`` close to a floating-point guess."""
        return cls(poly, Fraction(approx - radius), Fraction(approx + radius))

    def refine(self):
        m = (self.lo + self.hi) / 2
        fm = peval(self.poly, m)
        if fm == 0:
            # land on the root exactly: shrink symmetrically around it
            w = (self.hi - self.lo) / 4
            self.lo, self.hi = m - w, m + w
            while peval(self.poly, self.lo) == 0 or peval(self.poly, self.hi) == 0:
                w /= 3
                self.lo, self.hi = m - w, m + w
            return
        if _sgn(peval(self.poly, self.lo)) != _sgn(fm):
            self.hi = m
        else:
            self.lo = m

    def sign_of(self, r) -> int:
        """Exact sign of ``r(alpha)`` for a rational polynomial ``r``."""
        r = pmod(trim(r), self.poly)
        if not r:
            return 0
        g = pgcd(self.poly, r)
        if degree(g) >= 1 and sturm_count(g, self.lo, self.hi) > 0:
            return 0
        while True:
            a, b = _interval_eval(r, self.lo, self.hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            self.refine()

    def __float__(self):
        lo, hi = self.lo, self.hi
        return float((lo + hi) / 2)
