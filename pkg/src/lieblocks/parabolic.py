"""Standard parabolics, their character lattices, and Picard groups of
moduli of quasi-parabolic bundles.

Nodes are 1-based, as in the Bourbaki tables.  ``sigma`` lists the simple
roots inside the Levi factor; ``gamma`` is its complement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .algebra import SimpleLieAlgebra, Weight
from .errors import LieBlocksError

# line-bundle generator of Pic(M) in terms of the determinant bundle of the
# fundamental representation rho(G), conjectural for exceptional E/F types
CONJECTURAL_D = {"E6": 6, "E7": 12, "E8": 60, "F4": 6}
CONJECTURAL_REP_NODE = {"E6": 6, "E7": 7, "E8": 8, "F4": 4}


class GeneratorKind(str, Enum):
    DETERMINANT = "determinant"
    PFAFFIAN = "pfaffian"
    CONJECTURAL = "conjectural"


@dataclass(frozen=True)
class ParabolicType:
    alg: SimpleLieAlgebra
    sigma: frozenset[int]

    def __post_init__(self):
        bad = [i for i in self.sigma if not 1 <= i <= self.alg.rank]
        if bad:
            raise LieBlocksError(f"nodes {sorted(bad)} out of range 1..{self.alg.rank}")

    @classmethod
    def of(cls, alg: SimpleLieAlgebra, sigma: Iterable[int]) -> ParabolicType:
        return cls(alg, frozenset(int(i) for i in sigma))

    @classmethod
    def borel(cls, alg: SimpleLieAlgebra) -> ParabolicType:
        return cls(alg, frozenset())

    @classmethod
    def whole_group(cls, alg: SimpleLieAlgebra) -> ParabolicType:
        return cls(alg, frozenset(range(1, alg.rank + 1)))

    @property
    def gamma(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.alg.rank + 1) if i not in self.sigma)

    def to_json(self) -> dict:
        return {"sigma": sorted(self.sigma), "gamma": list(self.gamma)}


def parabolic_from_weight(alg: SimpleLieAlgebra, lam: Sequence[int]) -> tuple[ParabolicType, tuple[int, ...]]:
    """Standard parabolic and character attached to a dominant weight.

    sigma is the set of nodes where lam vanishes; the character is given by
    the (strictly positive) coordinates on gamma.
    """
    lam = alg.check_dominant(lam)
    pt = ParabolicType.of(alg, (i + 1 for i, x in enumerate(lam) if x == 0))
    return pt, tuple(lam[j - 1] for j in pt.gamma)


def weight_from_parabolic(pt: ParabolicType, character: Sequence[int]) -> Weight:
    gamma = pt.gamma
    if len(character) != len(gamma):
        raise LieBlocksError(f"character needs {len(gamma)} coordinates, got {len(character)}")
    lam = [0] * pt.alg.rank
    for j, m in zip(gamma, character):
        lam[j - 1] = int(m)
    return tuple(lam)


def character_group_basis(pt: ParabolicType) -> list[Weight]:
    """Basis of X(P_sigma): the fundamental weights on gamma."""
    return [pt.alg.fundamental_weights[j - 1] for j in pt.gamma]


@dataclass(frozen=True)
class PicardDescription:
    algebra: str
    rank: int
    generator_kind: GeneratorKind
    conjectural_d: int | None = None
    conjectural_rep_node: int | None = None
    factors: tuple[tuple[Weight, ...], ...] = field(default_factory=tuple)

    @property
    def conjectural(self) -> bool:
        return self.generator_kind is GeneratorKind.CONJECTURAL

    def to_json(self) -> dict:
        out = {
            "algebra": self.algebra,
            "rank": self.rank,
            "generator_kind": self.generator_kind.value,
            "conjectural": self.conjectural,
            "factors": [[list(w) for w in f] for f in self.factors],
        }
        if self.conjectural:
            out["conjectural_d"] = self.conjectural_d
            out["conjectural_rep_node"] = self.conjectural_rep_node
        return out


def generator_kind(alg: SimpleLieAlgebra) -> GeneratorKind:
    if alg.type_tag in "AC":
        return GeneratorKind.DETERMINANT
    if alg.type_tag in "BDG":
        return GeneratorKind.PFAFFIAN
    return GeneratorKind.CONJECTURAL


def picard_of_parabolic_moduli(alg: SimpleLieAlgebra, labels: Sequence[ParabolicType]) -> PicardDescription:
    """Pic(M_par) = Z L x prod_i X(P_i), with the generator L classified by type."""
    for pt in labels:
        if pt.alg is not alg:
            raise LieBlocksError("parabolic label belongs to a different algebra")
    factors = tuple(tuple(character_group_basis(pt)) for pt in labels)
    kind = generator_kind(alg)
    d = CONJECTURAL_D.get(alg.designator) if kind is GeneratorKind.CONJECTURAL else None
    node = CONJECTURAL_REP_NODE.get(alg.designator) if kind is GeneratorKind.CONJECTURAL else None
    return PicardDescription(
        algebra=alg.designator,
        rank=1 + sum(len(f) for f in factors),
        generator_kind=kind,
        conjectural_d=d,
        conjectural_rep_node=node,
        factors=factors,
    )


def line_bundle_coords(alg: SimpleLieAlgebra, level: int, labels: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Class of L(level, m) in the basis (L, then each label's X(P_i) basis)."""
    if level < 0:
        raise LieBlocksError("level must be non-negative")
    coords = [int(level)]
    for lam in labels:
        _, chi = parabolic_from_weight(alg, lam)
        coords.extend(chi)
    return tuple(coords)


def pullback_characters(alg: SimpleLieAlgebra, labels: Sequence[Sequence[int]]) -> list[Weight]:
    """Weights -lam_i defining the homogeneous line bundles in the pullback to Q_par."""
    return [tuple(-x for x in alg.check_dominant(lam)) for lam in labels]


def split_line_bundle_coords(alg: SimpleLieAlgebra, coords: Sequence[int],
                             labels: Sequence[ParabolicType]) -> tuple[int, list[Weight]]:
    """Inverse of ``line_bundle_coords`` given the parabolic types: (level, weights)."""
    coords = list(coords)
    expected = 1 + sum(len(pt.gamma) for pt in labels)
    if len(coords) != expected:
        raise LieBlocksError(f"expected {expected} coordinates, got {len(coords)}")
    level, pos, weights = coords[0], 1, []
    for pt in labels:
        k = len(pt.gamma)
        weights.append(weight_from_parabolic(pt, coords[pos:pos + k]))
        pos += k
    return level, weights
