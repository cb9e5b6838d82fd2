"""Exhaustive 4-genus obstruction from Casson-Gordon signatures.

If ``g_4(K) <= g`` then ``H_1(Sigma_2(K)) = A_1 + A_2`` with ``A_1`` on at
most ``2g`` generators and some ``B <= A_2``, ``|B|^2 = |A_2|``, such that
every prime-power character vanishing on ``A_1 + B`` has
``|sigma(K, chi) + sigma(K)| <= 4g``. For ``H = F_p^N`` the subgroup
``A_1 + B`` has dimension ``d + (N - d)/2`` for some admissible ``d``.
Instead of enumerating genuine decompositions we sweep *every* subspace
of each such dimension, a superset, so a certificate stays sound.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterator

import numpy as np

from .algebra.ffield import Subspace, annihilator, enumerate_subspaces, gaussian_binomial, rref
from .errors import MalformedCertificate, PreconditionError, UnsupportedGroup
from .knots import KnotSum, knot_from_json, knot_to_json
from .serialize import format_rational, parse_rational
from .signatures import (ZERO, Character, SignatureEstimate, ordinary_signature,
                         summand_tables)

Q = 5


def admissible_subspace_dims(N: int, g: int) -> list[int]:
    if N < 1 or g < 0:
        raise PreconditionError("need N >= 1 and g >= 0")
    return sorted({d + (N - d) // 2 for d in range(min(2 * g, N) + 1) if (N - d) % 2 == 0})


@dataclass
class ObstructionInstance:
    knot: KnotSum
    g: int
    q: int = Q
    sigma: int = field(init=False)
    tables: list = field(init=False, repr=False)
    _memo: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        if self.q != Q:
            raise UnsupportedGroup(f"only Z_{Q}-valued characters are supported (got q={self.q})")
        if self.g < 0:
            raise PreconditionError("g must be nonnegative")
        for s in self.knot:
            G = s.surgery.group
            if G.invariant_factors != (self.q,):
                raise UnsupportedGroup(f"summand homology {G} is not Z/{self.q}")
        if not self.knot.group().is_elementary(self.q):
            raise UnsupportedGroup("branched cover homology is not elementary abelian")
        self.sigma = ordinary_signature(self.knot)
        self.tables = summand_tables(self.knot, self.q)

    @property
    def N(self) -> int:
        return len(self.knot)

    @property
    def p(self) -> int:
        return self.q

    @property
    def threshold(self) -> int:
        return 4 * self.g

    def estimate(self, coeffs) -> SignatureEstimate:
        coeffs = tuple(coeffs)
        est = self._memo.get(coeffs)
        if est is None:
            est = ZERO
            for t, c in zip(self.tables, coeffs):
                est = est + t[c % self.q]
            self._memo[coeffs] = est
        return est

    def bound(self, coeffs) -> Fraction:
        """Certified lower bound for ``|sigma(K, chi) + sigma(K)|``."""
        return (self.estimate(coeffs) + self.sigma).magnitude_lower_bound()

    def subspaces(self) -> Iterator[Subspace]:
        for d in admissible_subspace_dims(self.N, self.g):
            yield from enumerate_subspaces(self.N, self.p, d)

    def subspace_count(self) -> int:
        return sum(gaussian_binomial(self.N, d, self.p) for d in admissible_subspace_dims(self.N, self.g))


@dataclass(frozen=True)
class CertRecord:
    subspace: Subspace
    witness: tuple[int, ...]
    estimate: SignatureEstimate
    bound: Fraction


@dataclass
class GenusCertificate:
    g: int
    p: int
    rank: int
    knot: KnotSum
    records: list[CertRecord]

    @property
    def threshold(self) -> int:
        return 4 * self.g

    def to_json(self) -> dict:
        return {
            "genus": self.g,
            "group": {"p": self.p, "rank": self.rank},
            "knot": knot_to_json(self.knot),
            "records": [
                {"subspace_basis": [list(r) for r in rec.subspace.basis],
                 "witness": list(rec.witness),
                 "center": format_rational(rec.estimate.center),
                 "slack": format_rational(rec.estimate.slack),
                 "bound": format_rational(rec.bound),
                 "threshold": self.threshold}
                for rec in self.records
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def summary(self) -> str:
        return f"PROVED g4 > {self.g} ({len(self.records)} subspaces certified)"


@dataclass(frozen=True)
class Inconclusive:
    g: int
    subspace: Subspace
    best_bound: Fraction | None

    def summary(self) -> str:
        basis = [list(r) for r in self.subspace.basis]
        best = "none" if self.best_bound is None else format_rational(self.best_bound)
        return (f"INCONCLUSIVE at subspace {basis} (dim {self.subspace.dim}): "
                f"best witness bound {best} <= {4 * self.g}")


def witness_search(S: Subspace, inst: ObstructionInstance):
    """First nonzero character vanishing on ``S`` whose bound beats ``4g``.

    Returns ``(witness, estimate, bound)`` or ``(None, None, best_bound)``.
    """
    best = None
    for chi in annihilator(S).vectors(nonzero=True):
        b = inst.bound(chi)
        if b > inst.threshold:
            return chi, inst.estimate(chi), b
        best = b if best is None else max(best, b)
    return None, None, best


_WORKER: ObstructionInstance | None = None


def _init_worker(knot_json, g):
    global _WORKER
    _WORKER = ObstructionInstance(knot_from_json(knot_json), g)


def _search_chunk(chunk):
    out = []
    for basis in chunk:
        S = Subspace(_WORKER.N, _WORKER.p, basis)
        out.append((basis, witness_search(S, _WORKER)))
    return out


def _chunks(it, size):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def prove_genus_exceeds(inst: ObstructionInstance, jobs: int | None = 1,
                        max_subspaces: int | None = 2_000_000,
                        chunk_size: int = 256):
    """Sweep all admissible subspaces; return a certificate or :class:`Inconclusive`.

    ``jobs=None`` uses every available core. Output does not depend on
    ``jobs``: chunks are merged in enumeration order.
    """
    jobs = jobs or os.cpu_count() or 1
    bases = (S.basis for S in inst.subspaces())
    records = []

    def consume(results):
        for basis, (chi, est, b) in results:
            S = Subspace(inst.N, inst.p, basis)
            if chi is None:
                return Inconclusive(inst.g, S, b)
            records.append(CertRecord(S, chi, est, b))
            if max_subspaces is not None and len(records) > max_subspaces:
                raise PreconditionError(
                    f"more than {max_subspaces} subspaces to certify "
                    f"({inst.subspace_count()} in total); raise max_subspaces to proceed")
        return None

    if jobs == 1:
        for chunk in _chunks(bases, chunk_size):
            fail = consume(_search_chunk_local(inst, chunk))
            if fail:
                return fail
    else:
        with ProcessPoolExecutor(jobs, initializer=_init_worker,
                                 initargs=(knot_to_json(inst.knot), inst.g)) as ex:
            for res in ex.map(_search_chunk, _chunks(bases, chunk_size)):
                fail = consume(res)
                if fail:
                    ex.shutdown(wait=False, cancel_futures=True)
                    return fail
    return GenusCertificate(inst.g, inst.p, inst.N, inst.knot, records)


def _search_chunk_local(inst, chunk):
    return [(basis, witness_search(Subspace(inst.N, inst.p, basis), inst)) for basis in chunk]


def certificate_from_json(data) -> tuple[int, KnotSum, list[dict]]:
    try:
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        g = data["genus"]
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            raise MalformedCertificate("genus must be a nonnegative integer")
        knot = knot_from_json(data["knot"])
        group = data["group"]
        records = data["records"]
        if not isinstance(records, list):
            raise MalformedCertificate("records must be a list")
        if group.get("p") != Q or group.get("rank") != len(knot):
            raise MalformedCertificate("group header disagrees with the knot")
        return g, knot, records
    except MalformedCertificate:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise MalformedCertificate(f"malformed certificate: {e}") from e


def check_certificate(cert, inst: ObstructionInstance | None = None) -> bool:
    """Re-derive every record from scratch and confirm complete coverage.

    ``cert`` may be a :class:`GenusCertificate`, a parsed dict or raw JSON
    text. When ``inst`` is given, the certificate must concern that knot
    and genus.
    """
    if isinstance(cert, GenusCertificate):
        cert = cert.to_json()
    g, knot, records = certificate_from_json(cert)
    fresh = ObstructionInstance(knot, g)
    if inst is not None and (knot_to_json(inst.knot) != knot_to_json(knot) or inst.g != g):
        return False
    N, p = fresh.N, fresh.p
    dims = set(admissible_subspace_dims(N, g))
    seen = set()
    try:
        for rec in records:
            basis = tuple(tuple(int(x) for x in row) for row in rec["subspace_basis"])
            witness = tuple(int(x) for x in rec["witness"])
            if any(len(r) != N for r in basis) or len(witness) != N:
                return False
            if rref(basis, p) != basis or len(basis) not in dims or basis in seen:
                return False
            seen.add(basis)
            if any(not 0 <= x < p for x in witness) or not any(witness):
                return False
            if any(sum(a * b for a, b in zip(row, witness)) % p for row in basis):
                return False
            est = fresh.estimate(witness)
            bound = fresh.bound(witness)
            if (parse_rational(rec["center"]) != est.center
                    or parse_rational(rec["slack"]) != est.slack
                    or parse_rational(rec.get("bound", format_rational(bound))) != bound
                    or int(rec.get("threshold", 4 * g)) != 4 * g):
                return False
            if not bound > 4 * g:
                return False
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedCertificate(f"malformed record: {e}") from e
    if len(seen) != fresh.subspace_count():
        return False
    return all(S.basis in seen for S in fresh.subspaces())


def universal_witness_check(inst: ObstructionInstance):
    """Check that *every* nonzero character beats ``4g``.

    Every admissible dimension is below ``N`` so every admissible
    subspace has a nonzero annihilating character; if all of them
    exceed the threshold the obstruction holds without a subspace sweep.
    Returns ``(ok, min_bound, argmin_character)``. Vectorised over all
    ``q**N`` characters with exact integer scaling.
    """
    q, N = inst.q, inst.N
    if max(admissible_subspace_dims(N, inst.g)) >= N:
        return False, None, None
    den = 1
    for t in inst.tables:
        for e in t:
            den = np.lcm(den, np.lcm(e.center.denominator, e.slack.denominator))
    den = int(den)
    centers = [[int(e.center * den) for e in t] for t in inst.tables]
    slacks = [[int(e.slack * den) for e in t] for t in inst.tables]
    biggest = sum(max(abs(c) for c in row) + max(row2) for row, row2 in zip(centers, slacks))
    dtype = np.int64 if biggest + abs(inst.sigma) * den < 2 ** 62 else object
    C = np.zeros((1,), dtype=dtype)
    S = np.zeros((1,), dtype=dtype)
    for crow, srow in zip(centers, slacks):
        C = (C[:, None] + np.array(crow, dtype=dtype)[None, :]).reshape(-1)
        S = (S[:, None] + np.array(srow, dtype=dtype)[None, :]).reshape(-1)
    B = np.abs(C + inst.sigma * den) - S
    B[0] = np.iinfo(np.int64).max if dtype is np.int64 else 10 ** 100
    idx = int(np.argmin(B))
    coeffs = tuple(int(x) for x in np.unravel_index(idx, (q,) * N))
    min_bound = Fraction(int(B[idx]), den)
    return bool(min_bound > inst.threshold), min_bound, Character(q, coeffs)
