"""Dimensions, weight multiplicities and formal characters of irreducibles."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import (DEFAULT_ORBIT_CAP, SimpleLieAlgebra, Weight, dominant_representative,
                      inner, iter_weyl_orbit)
from .errors import CapExceededError, LieBlocksError

DEFAULT_WEIGHT_CAP = 10**6


def _root_pairings(alg: SimpleLieAlgebra, mu: Sequence[int]) -> list[Fraction]:
    """(mu, alpha) for every positive root alpha, in the algebra's root order."""
    d = alg.half_lengths
    # (mu, alpha_j) = d_j mu_j
    base = [d[j] * mu[j] for j in range(alg.rank)]
    return [sum((c * b for c, b in zip(coeffs, base) if c), Fraction(0))
            for coeffs in alg.positive_roots_simple]


def weyl_dimension(alg: SimpleLieAlgebra, lam: Sequence[int]) -> int:
    """dim L_lam = prod over positive roots of (lam + rho, alpha) / (rho, alpha)."""
    lam = alg.check_dominant(lam)
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for top, bottom in zip(_root_pairings(alg, shifted), _root_pairings(alg, alg.rho)):
        num *= top / bottom
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True)
class FormalCharacter:
    """A Weyl-invariant character stored on dominant representatives.

    ``dominant_mults`` maps each dominant weight to the multiplicity of every
    weight in its orbit.
    """

    alg: SimpleLieAlgebra
    dominant_mults: dict[Weight, int] = field(default_factory=dict)
    orbit_cap: int = DEFAULT_ORBIT_CAP

    def __post_init__(self):
        for mu, m in self.dominant_mults.items():
            if any(x < 0 for x in mu):
                raise LieBlocksError(f"character key {list(mu)} is not dominant")
            if m < 1:
                raise LieBlocksError(f"multiplicity of {list(mu)} must be positive")

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.alg is other.alg and self.dominant_mults == other.dominant_mults

    def iter_weights(self) -> Iterator[tuple[Weight, int]]:
        """Orbit-expanded (weight, multiplicity) pairs; never materialised."""
        for mu in sorted(self.dominant_mults):
            m = self.dominant_mults[mu]
            for nu in iter_weyl_orbit(self.alg, mu, self.orbit_cap):
                yield nu, m

    def dimension(self) -> int:
        return sum(m for _, m in self.iter_weights())

    def to_json(self) -> list[dict]:
        return [{"weight": list(mu), "mult": str(self.dominant_mults[mu])}
                for mu in sorted(self.dominant_mults)]

    @classmethod
    def from_json(cls, alg: SimpleLieAlgebra, payload: list[dict]) -> FormalCharacter:
        mults = {}
        for entry in payload:
            mu = alg.check_weight(entry["weight"])
            mults[mu] = mults.get(mu, 0) + int(entry["mult"])
        return cls(alg, mults)


def _dominant_weights_below(alg: SimpleLieAlgebra, lam: Weight, cap: int) -> list[Weight]:
    # Dominant weights <= lam are connected to lam by chains of dominant
    # weights differing by single positive roots.
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for alpha in alg.positive_roots:
            nu = tuple(x - a for x, a in zip(mu, alpha))
            if min(nu) >= 0 and nu not in seen:
                seen.add(nu)
                if len(seen) > cap:
                    raise CapExceededError(
                        f"weight system of {list(lam)} in {alg.designator} has more than "
                        f"{cap} dominant weights; use the Casimir route")
                stack.append(nu)
    return list(seen)


def dominant_character(alg: SimpleLieAlgebra, lam: Sequence[int], cap: int = DEFAULT_WEIGHT_CAP,
                       orbit_cap: int = DEFAULT_ORBIT_CAP) -> FormalCharacter:
    """Character of L_lam by the Freudenthal recursion over dominant weights."""
    lam = alg.check_dominant(lam)
    dominant = _dominant_weights_below(alg, lam, cap)

    def depth(mu):
        return sum(alg.to_simple_root_coords(tuple(a - b for a, b in zip(lam, mu))))

    dominant.sort(key=lambda mu: (depth(mu), mu))
    lam_rho = tuple(x + 1 for x in lam)
    norm_top = inner(alg, lam_rho, lam_rho)
    alpha_norms = [inner(alg, a, a) for a in alg.positive_roots]

    mults: dict[Weight, int] = {lam: 1}
    for mu in dominant[1:]:
        pair_mu = _root_pairings(alg, mu)
        total = Fraction(0)
        for alpha, p0, an in zip(alg.positive_roots, pair_mu, alpha_norms):
            k = 1
            nu = mu
            while True:
                nu = tuple(x + a for x, a in zip(nu, alpha))
                m = mults.get(dominant_representative(alg, nu), 0)
                if m == 0:
                    break
                total += m * (p0 + k * an)
                k += 1
        mu_rho = tuple(x + 1 for x in mu)
        value = 2 * total / (norm_top - inner(alg, mu_rho, mu_rho))
        assert value.denominator == 1, (mu, value)
        if value:
            mults[mu] = int(value)
    return FormalCharacter(alg, mults, orbit_cap)


def tensor_character(chi1: FormalCharacter, chi2: FormalCharacter) -> FormalCharacter:
    """Character of the tensor product, recollected on dominant weights."""
    if chi1.alg is not chi2.alg:
        raise LieBlocksError("characters belong to different algebras")
    alg = chi1.alg
    second = list(chi2.iter_weights())
    out: dict[Weight, int] = {}
    for mu, m in chi1.iter_weights():
        for nu, n in second:
            kappa = tuple(a + b for a, b in zip(mu, nu))
            if min(kappa, default=0) >= 0:
                out[kappa] = out.get(kappa, 0) + m * n
    return FormalCharacter(alg, out, min(chi1.orbit_cap, chi2.orbit_cap))


def trivial_character(alg: SimpleLieAlgebra) -> FormalCharacter:
    return FormalCharacter(alg, {alg.zero(): 1})
