"""Tristram-Levine, Casson-Gordon 3-manifold and knot signature estimates.

Knot Casson-Gordon signatures are never computed from a definition; they
are assembled from

* the Hopf-surgery formula for the branched cover's 3-manifold
  signature,
* the bound ``|sigma(K, chi) - sigma(Sigma_2(K), chi)| <= 1`` valid for
  cyclic first homology, which becomes one unit of slack, and
* the winding-number-zero satellite formula, which adds
  ``2 * sign * sigma_J(omega^{chi(x)})`` per infection site exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from sympy import isprime

from .algebra.hermitian import hermitian_signature_at_root
from .algebra.intmatrix import symmetric_signature
from .errors import DimensionMismatch, PreconditionError, ZeroMeridianValue
from .knots import HopfSurgery, KnotSum, SatelliteKnot, SeifertMatrix
from .serialize import format_rational


@dataclass(frozen=True)
class Character:
    """Homomorphism to ``Z_q`` given by its values on the summand generators."""

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) % self.q for c in self.coeffs))

    @property
    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, v) -> int:
        return sum(a * b for a, b in zip(self.coeffs, v)) % self.q

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class SignatureEstimate:
    """A rational known to lie in ``[center - slack, center + slack]``."""

    center: Fraction
    slack: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "slack", Fraction(self.slack))
        if self.slack < 0:
            raise ValueError("slack must be nonnegative")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return SignatureEstimate(self.center + other, self.slack)
        return SignatureEstimate(self.center + other.center, self.slack + other.slack)

    __radd__ = __add__

    def __neg__(self):
        return SignatureEstimate(-self.center, self.slack)

    def __sub__(self, other):
        return self + (-other)

    @property
    def lo(self) -> Fraction:
        return self.center - self.slack

    @property
    def hi(self) -> Fraction:
        return self.center + self.slack

    def magnitude_lower_bound(self) -> Fraction:
        """``|center| - slack``; may be negative when the interval straddles 0."""
        return abs(self.center) - self.slack

    def magnitude_upper_bound(self) -> Fraction:
        return abs(self.center) + self.slack

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def to_json(self) -> dict:
        return {"center": format_rational(self.center), "slack": format_rational(self.slack)}


ZERO = SignatureEstimate(Fraction(0), Fraction(0))


def _require_prime(q: int):
    if not isprime(q):
        raise PreconditionError(f"q = {q} must be prime")


@lru_cache(maxsize=4096)
def _tl_unit(V: SeifertMatrix, q: int, k: int) -> int:
    return hermitian_signature_at_root(V.entries, q, k)


def tristram_levine(knot: SeifertMatrix, multiplicity: int, q: int, k: int) -> int:
    """Signature of ``#^multiplicity knot`` at ``exp(2 pi i k/q)``."""
    _require_prime(q)
    if multiplicity < 0:
        raise PreconditionError("multiplicity must be nonnegative")
    k %= q
    if k == 0:
        return 0
    if not isinstance(knot, SeifertMatrix):
        knot = SeifertMatrix.of(knot)
    return multiplicity * _tl_unit(knot, q, k)


def cf_hopf_signature(surgery: HopfSurgery, q: int, n1: int, n2: int) -> Fraction:
    """Casson-Gordon signature of Hopf-link surgery, both meridians nonzero."""
    _require_prime(q)
    n1, n2 = n1 % q, n2 % q
    if n1 == 0 or n2 == 0:
        raise ZeroMeridianValue("both meridians must map to nonzero elements of Z_q")
    a, b = surgery.a, surgery.b
    if a * b - 1 == 0:
        raise PreconditionError("linking matrix is singular")
    m1, m2 = q - n1, q - n2
    quad = n1 * (a * m1 + m2) + n2 * (m1 + b * m2)
    return Fraction(-1 - symmetric_signature(surgery.linking_matrix)) + Fraction(2 * quad, q * q)


def meridian_values(surgery: HopfSurgery, q: int, value: int) -> tuple[int, int]:
    """Images of the two meridians under the character with ``chi(a) = value``."""
    N = surgery.group.order
    if N % q:
        raise PreconditionError(f"no nontrivial character from Z/{N} to Z/{q}")
    return tuple(c * value % q for c in surgery.meridian_classes())


def base_cg_estimate(surgery: HopfSurgery, q: int, value: int) -> SignatureEstimate:
    """Estimate of the base knot's Casson-Gordon signature for ``chi(a) = value``.

    Center is the 3-manifold signature, slack 1; trivial characters give 0
    exactly.
    """
    _require_prime(q)
    n1, n2 = meridian_values(surgery, q, value)
    if n1 == 0 and n2 == 0:
        return ZERO
    return SignatureEstimate(cf_hopf_signature(surgery, q, n1, n2), Fraction(1))


def _value_of(chi, q: int) -> int:
    if isinstance(chi, Character):
        if len(chi) != 1:
            raise DimensionMismatch("a satellite knot takes a one-coordinate character")
        if chi.q != q:
            raise PreconditionError("character modulus mismatch")
        return chi.coeffs[0]
    return int(chi) % q


def satellite_cg_estimate(K: SatelliteKnot, chi, q: int = 5) -> SignatureEstimate:
    value = _value_of(chi, q)
    est = base_cg_estimate(K.surgery, q, value)
    extra = 0
    for inf in K.infections:
        companion = inf.companion if inf.sign == 1 else inf.companion.mirror()
        extra += 2 * tristram_levine(companion, inf.multiplicity, q, inf.cls * value)
    return est + extra


def sum_cg_estimate(K: KnotSum, chi: Character) -> SignatureEstimate:
    if len(chi) != len(K):
        raise DimensionMismatch(f"character has {len(chi)} coordinates, knot has {len(K)} summands")
    total = ZERO
    for summand, c in zip(K, chi.coeffs):
        total = total + satellite_cg_estimate(summand, c, chi.q)
    return total


def ordinary_signature(K) -> int:
    """Classical signature; infections along null-homologous curves leave it unchanged."""
    if isinstance(K, SatelliteKnot):
        K = KnotSum((K,))
    if isinstance(K, KnotSum):
        V = K.seifert_matrix()
    else:
        V = SeifertMatrix.of(K).matrix
    if not V:
        return 0
    return symmetric_signature([[V[i][j] + V[j][i] for j in range(len(V))] for i in range(len(V))])


def character_modulus(K: KnotSum) -> int:
    orders = {s.surgery.group.order for s in K}
    if len(orders) != 1 or not isprime(next(iter(orders))):
        raise PreconditionError(f"summand homology orders {sorted(orders)} are not one common prime")
    return orders.pop()


def summand_tables(K: KnotSum, q: int) -> list[list[SignatureEstimate]]:
    """``tables[j][c]`` is the estimate for summand ``j`` with ``chi(a_j) = c``."""
    return [[satellite_cg_estimate(s, c, q) for c in range(q)] for s in K]


def signature_table(K: KnotSum, q: int | None = None):
    """All ``q**n`` characters with their estimates, in lexicographic order."""
    q = q or character_modulus(K)
    tables = summand_tables(K, q)
    for coeffs in product(range(q), repeat=len(K)):
        est = ZERO
        for t, c in zip(tables, coeffs):
            est = est + t[c]
        yield Character(q, coeffs), est


def table_to_json(rows) -> list[dict]:
    return [{"character": list(chi.coeffs), **est.to_json()} for chi, est in rows]
