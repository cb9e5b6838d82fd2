"""Knot data model: Seifert matrices, Hopf surgeries, infections, sums.

Companions are carried only as Seifert matrices; nothing here needs a
diagram. A summand's branched double cover is described by a surgery on
a Hopf link, and the generator ``a`` of its first homology is the first
meridian of that link.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .algebra import intmatrix as im
from .algebra.intmatrix import FinAbGroup, group_from_presentation
from .errors import IndexNotMonotone, PreconditionError
from .serialize import decode_int, encode_int


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if any(len(r) != len(rows) for r in rows):
            raise PreconditionError("Seifert matrix must be square")
        if len(rows) % 2:
            raise PreconditionError("Seifert matrix must have even size")

    @classmethod
    def of(cls, rows) -> "SeifertMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def matrix(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def symmetrized(self) -> list[list[int]]:
        return im.add(self.matrix, im.transpose(self.matrix))

    def is_valid(self) -> bool:
        """``det(V - V^T) = +-1``."""
        return abs(im.det(im.sub(self.matrix, im.transpose(self.matrix)))) == 1

    def mirror(self) -> "SeifertMatrix":
        return SeifertMatrix.of(im.neg(im.transpose(self.matrix)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return self.size

    def __getitem__(self, i):
        return self.entries[i]


UNKNOT = SeifertMatrix(())


@dataclass(frozen=True)
class HopfSurgery:
    """Surgery on a Hopf link with linking matrix ``[[a, 1], [1, b]]``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a * self.b == 1:
            raise PreconditionError("linking matrix must be nondegenerate")

    @property
    def linking_matrix(self) -> list[list[int]]:
        return [[self.a, 1], [1, self.b]]

    @cached_property
    def group(self) -> FinAbGroup:
        return group_from_presentation(self.linking_matrix)

    def meridian_classes(self) -> tuple[int, int]:
        """Meridians as multiples of the generator ``a := meridian 1``.

        Requires cyclic homology; the first row of the linking matrix
        already says ``mu_2 = -a * mu_1``.
        """
        G = self.group
        if not G.is_cyclic or G.order == 1:
            raise PreconditionError(f"homology {G} is not a nontrivial cyclic group")
        N = G.order
        u = G.generator_images[0][0]
        inv = pow(u, -1, N)
        return tuple(img[0] * inv % N for img in G.generator_images)


@dataclass(frozen=True)
class Infection:
    """One infection site: lifted curve class (multiple of ``a``), sign, companion.

    ``sign = -1`` means the mirror of the companion is tied in.
    """

    cls: int
    sign: int
    companion: SeifertMatrix
    multiplicity: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PreconditionError("infection sign must be +1 or -1")
        if self.multiplicity < 1:
            raise PreconditionError("multiplicity must be positive")


@dataclass(frozen=True)
class SatelliteKnot:
    seifert: SeifertMatrix
    surgery: HopfSurgery
    infections: tuple[Infection, ...] = ()
    reversible_companions: bool = field(default=True, compare=False)

    def __post_init__(self):
        if len(self.infections) > 2:
            raise PreconditionError("a Hopf surgery has only two meridians to infect along")

    @property
    def group(self) -> FinAbGroup:
        return self.surgery.group


@dataclass(frozen=True)
class KnotSum:
    summands: tuple[SatelliteKnot, ...]

    def __post_init__(self):
        if not self.summands:
            raise PreconditionError("a knot sum needs at least one summand")

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def seifert_matrix(self) -> list[list[int]]:
        return im.block_diag(*(s.seifert.matrix for s in self.summands))

    def presentation(self) -> list[list[int]]:
        return im.block_diag(*(s.surgery.linking_matrix for s in self.summands))

    def group(self) -> FinAbGroup:
        return group_from_presentation(self.presentation())


@dataclass(frozen=True)
class FamilySpec:
    """Indices ``k_1 < ... < k_n`` of the generators ``K^k`` for genus ``g``."""

    g: int
    ks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if self.g < 1:
            raise PreconditionError("g must be a positive integer")
        if not self.ks or any(k < 0 for k in self.ks):
            raise PreconditionError("indices must be a nonempty list of naturals")
        if any(a >= b for a, b in zip(self.ks, self.ks[1:])):
            raise IndexNotMonotone(f"indices {list(self.ks)} are not strictly increasing")

    @property
    def block(self) -> int:
        return 2 * self.g + 2

    def site_indices(self) -> list[int]:
        return [k * self.block + i for k in self.ks for i in range(1, self.block + 1)]

    def multiplicity(self, i: int) -> int:
        return 2 ** (2 * i + 1) * self.g


def figure_eight() -> SeifertMatrix:
    return SeifertMatrix.of([[1, 1], [0, -1]])


def torus_2_5() -> SeifertMatrix:
    return SeifertMatrix.of([[-1, 0, 0, 0],
                             [1, -1, 0, 0],
                             [0, 1, -1, 0],
                             [0, 0, 1, -1]])


def two_bridge_base(a: int) -> tuple[SeifertMatrix, HopfSurgery]:
    """Genus-one 2-bridge knot ``(4a^2+1)/(2a)``; ``a = 1`` is the figure-eight."""
    if a < 1:
        raise PreconditionError("a must be a positive integer")
    return SeifertMatrix.of([[a, 1], [0, -a]]), HopfSurgery(-2 * a, 2 * a)


def build_K_of_J(companion: SeifertMatrix, multiplicity: int = 1,
                 base: tuple[SeifertMatrix, HopfSurgery] | None = None) -> SatelliteKnot:
    """Infect the base along both lifted curves: ``+J`` at the second
    meridian and the mirror ``-J`` at the first (the generator ``a``)."""
    seifert, surgery = base or two_bridge_base(1)
    c1, c2 = surgery.meridian_classes()
    return SatelliteKnot(seifert, surgery, (
        Infection(c2, 1, companion, multiplicity),
        Infection(c1, -1, companion, multiplicity),
    ))


def build_family(spec: FamilySpec, companion: SeifertMatrix | None = None,
                 base=None) -> KnotSum:
    companion = torus_2_5() if companion is None else companion
    return KnotSum(tuple(build_K_of_J(companion, spec.multiplicity(i), base)
                         for i in spec.site_indices()))


def _matrix_to_json(M):
    return [[encode_int(x) for x in row] for row in M]


def _matrix_from_json(M):
    if not isinstance(M, list) or any(not isinstance(r, list) for r in M):
        raise TypeError("matrix must be a list of lists")
    return [[decode_int(x) for x in r] for r in M]


def satellite_to_json(K: SatelliteKnot) -> dict:
    return {
        "base": {
            "seifert": _matrix_to_json(K.seifert.matrix),
            "surgery": {"a": encode_int(K.surgery.a), "b": encode_int(K.surgery.b)},
        },
        "infections": [
            {"class": encode_int(inf.cls), "sign": inf.sign,
             "companion_seifert": _matrix_to_json(inf.companion.matrix),
             "multiplicity": encode_int(inf.multiplicity)}
            for inf in K.infections
        ],
    }


def satellite_from_json(d: dict) -> SatelliteKnot:
    base = d["base"]
    return SatelliteKnot(
        SeifertMatrix.of(_matrix_from_json(base["seifert"])),
        HopfSurgery(decode_int(base["surgery"]["a"]), decode_int(base["surgery"]["b"])),
        tuple(Infection(decode_int(x["class"]), decode_int(x["sign"]),
                        SeifertMatrix.of(_matrix_from_json(x["companion_seifert"])),
                        decode_int(x.get("multiplicity", 1)))
              for x in d.get("infections", [])),
    )


def knot_to_json(K) -> list | dict:
    if isinstance(K, KnotSum):
        return [satellite_to_json(s) for s in K]
    return satellite_to_json(K)


def knot_from_json(data) -> KnotSum:
    """Accepts a single satellite object or an array of them."""
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise TypeError("knot description must be an object or an array")
    return KnotSum(tuple(satellite_from_json(d) for d in data))
