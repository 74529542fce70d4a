"""Dynkin indices of representations.

Two independent routes are provided.  ``index_character_sum`` evaluates
half the sum of mu(H_theta)^2 over all weights of the representation, with
multiplicity.  ``index_casimir`` uses dim(L) * (lam, lam + 2 rho) / dim(g).
Both are exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .algebra import DEFAULT_ORBIT_CAP, SimpleLieAlgebra, Weight, build_algebra, inner, iter_weyl_orbit
from .characters import DEFAULT_WEIGHT_CAP, FormalCharacter, dominant_character, weyl_dimension
from .errors import IntegralityError, InvalidAlgebraError


class Method(str, Enum):
    CHARACTER_SUM = "character_sum"
    CASIMIR = "casimir"


@dataclass(frozen=True)
class IndexReport:
    algebra: str
    weight: Weight
    dimension: int
    index: int
    method: Method
    is_minimal_witness: bool = False

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "weight": list(self.weight),
            "dim": str(self.dimension),
            "index": str(self.index),
            "method": self.method.value,
        }


def character_index(chi: FormalCharacter) -> int:
    """Half the sum of mu(H_theta)^2 over the orbit-expanded weights of chi."""
    alg = chi.alg
    total = 0
    for mu in chi.dominant_mults:
        orbit_sum = sum(alg.level(nu) ** 2 for nu in iter_weyl_orbit(alg, mu, chi.orbit_cap))
        total += chi.dominant_mults[mu] * orbit_sum
    if total % 2:
        raise IntegralityError(f"odd weight-square sum {total} in {alg.designator}")
    return total // 2


def index_character_sum(alg: SimpleLieAlgebra, lam: Sequence[int],
                        cap: int = DEFAULT_WEIGHT_CAP, orbit_cap: int = DEFAULT_ORBIT_CAP) -> int:
    lam = alg.check_dominant(lam)
    return character_index(dominant_character(alg, lam, cap, orbit_cap))


def casimir_eigenvalue(alg: SimpleLieAlgebra, lam: Sequence[int]) -> Fraction:
    """(lam, lam + 2 rho)."""
    return inner(alg, lam, tuple(x + 2 for x in lam))


def index_casimir(alg: SimpleLieAlgebra, lam: Sequence[int]) -> int:
    lam = alg.check_dominant(lam)
    value = weyl_dimension(alg, lam) * casimir_eigenvalue(alg, lam) / alg.dim_g
    if value.denominator != 1:
        raise IntegralityError(f"non-integral Casimir index {value} for {list(lam)} in {alg.designator}")
    return int(value)


def dynkin_index(alg: SimpleLieAlgebra, lam: Sequence[int], method: Method | str = Method.CASIMIR,
                 cap: int = DEFAULT_WEIGHT_CAP, orbit_cap: int = DEFAULT_ORBIT_CAP) -> IndexReport:
    method = Method(method)
    lam = alg.check_dominant(lam)
    if method is Method.CASIMIR:
        value = index_casimir(alg, lam)
    else:
        value = index_character_sum(alg, lam, cap, orbit_cap)
    d_g, witnesses = minimal_index(alg)
    return IndexReport(alg.designator, lam, weyl_dimension(alg, lam), value, method,
                       is_minimal_witness=lam in witnesses)


def fundamental_indices(alg: SimpleLieAlgebra) -> list[int]:
    return [index_casimir(alg, w) for w in alg.fundamental_weights]


def minimal_index(alg: SimpleLieAlgebra) -> tuple[int, list[Weight]]:
    """Minimal Dynkin index and the fundamental weights achieving it."""
    values = fundamental_indices(alg)
    d_g = min(values)
    return d_g, [w for w, v in zip(alg.fundamental_weights, values) if v == d_g]


def fundamental_gcd(alg: SimpleLieAlgebra) -> int:
    return reduce(math.gcd, fundamental_indices(alg))


def e8_fundamental_table(alg: SimpleLieAlgebra | None = None) -> dict[int, int]:
    """Indices of the eight E8 fundamental representations, keyed by Bourbaki node (1-based)."""
    alg = alg or build_algebra("E", 8)
    if alg.designator != "E8":
        raise InvalidAlgebraError(f"e8_fundamental_table needs E8, got {alg.designator}")
    return {i + 1: v for i, v in enumerate(fundamental_indices(alg))}


def sl2_ladder_sum(d: int) -> int:
    """sum_{k=0}^{d} k (d + 1 - k): the index of the (d+1)-dim sl2 module via X_theta X_-theta traces."""
    return sum(k * (d + 1 - k) for k in range(d + 1))


def sl2_weight_square_half_sum(d: int) -> Fraction:
    """(1/2) sum_{k=0}^{d} (d - 2k)^2."""
    return Fraction(sum((d - 2 * k) ** 2 for k in range(d + 1)), 2)
