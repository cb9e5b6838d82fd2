"""Independent reference computations used only by the tests."""
from itertools import combinations, product
from math import gcd

import numpy as np


def minor_dets(A, k):
    m, n = len(A), len(A[0])
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = [[A[i][j] for j in cols] for i in rows]
            yield _det_laplace(sub)


def _det_laplace(M):
    if not M:
        return 1
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det_laplace([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(len(M)) if M[0][j])


def invariant_factors_by_minors(A):
    """Invariant factors from gcds of k x k minors (determinantal divisors)."""
    m, n = len(A), len(A[0])
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        d = 0
        for x in minor_dets(A, k):
            d = gcd(d, x)
        if d == 0:
            out.extend([0] * (min(m, n) - k + 1))
            break
        out.append(d // prev)
        prev = d
    return out


def numeric_hermitian_signature(V, q, k, tol=1e-9):
    """Float eigenvalues of (1-w)V + (1-conj w)V^T; None if any is near zero."""
    V = np.array(V, dtype=float)
    if V.size == 0:
        return 0
    w = np.exp(2j * np.pi * k / q)
    H = (1 - w) * V + (1 - np.conj(w)) * V.T
    ev = np.linalg.eigvalsh(H)
    if np.min(np.abs(ev)) < tol:
        return None
    return int(np.sum(ev > 0) - np.sum(ev < 0))


def brute_force_span_count(n, p, d):
    """Count distinct d-dimensional spans by enumerating vector tuples."""
    vecs = [v for v in product(range(p), repeat=n)]
    spans = set()
    for tup in combinations(vecs[1:], d):
        span = frozenset(tuple(sum(c * v[j] for c, v in zip(cs, tup)) % p for j in range(n))
                         for cs in product(range(p), repeat=d))
        if len(span) == p ** d:
            spans.add(span)
    return len(spans)


def brute_force_annihilator(basis, n, p):
    return {v for v in product(range(p), repeat=n)
            if all(sum(a * b for a, b in zip(v, s)) % p == 0 for s in basis)}
