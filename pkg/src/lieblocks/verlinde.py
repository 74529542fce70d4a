"""Verlinde dimensions of spaces of conformal blocks.

    dim V_g(lam_1..lam_n) = T^(g-1) sum_{mu in P_l} prod_i chi_{lam_i}(exp 2 pi i (mu+rho)/(l+h))
                            * prod_{alpha > 0} |2 sin(pi (alpha, mu+rho)/(l+h))|^(2-2g)

with T = (l+h)^rank |P/Q| |Q/Q_long| and h the dual Coxeter number.  The
sum is evaluated in binary floating point of configurable precision,
term by term in lexicographic order of P_l, and rounded.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
from sympy import Matrix as SymMatrix
from sympy.matrices.normalforms import smith_normal_form

from . import rational as rl
from .algebra import SimpleLieAlgebra, Weight, alcove, inner
from .characters import _root_pairings
from .errors import CapExceededError, IntegralityError, LieBlocksError

DEFAULT_PRECISION = 128
# largest Weyl group enumerated by default (F4 has 1152 elements)
DEFAULT_WEYL_CAP = 1152


@dataclass(frozen=True)
class LatticeIndices:
    p_over_q: int
    q_over_qlong: int


@lru_cache(maxsize=None)
def _lattice_indices(alg: SimpleLieAlgebra) -> LatticeIndices:
    p_over_q = int(rl.det(rl.matrix(alg.cartan)))
    long_roots = [list(c) for c in alg.positive_roots_simple if _root_norm(alg, c) == 2]
    snf = smith_normal_form(SymMatrix(long_roots))
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    if len(diag) < alg.rank or 0 in diag[:alg.rank]:
        raise LieBlocksError(f"long roots of {alg.designator} do not span a full-rank lattice")
    return LatticeIndices(p_over_q, math.prod(diag[:alg.rank]))


def _root_norm(alg: SimpleLieAlgebra, coeffs: Sequence[int]) -> Fraction:
    form = alg.form_matrix
    r = alg.rank
    return sum((coeffs[i] * form[i][j] * coeffs[j] for i in range(r) for j in range(r)), Fraction(0))


def lattice_indices(alg: SimpleLieAlgebra) -> LatticeIndices:
    """|P/Q| from the Cartan determinant; |Q/Q_long| from a Smith normal form."""
    return _lattice_indices(alg)


def signed_orbit(alg: SimpleLieAlgebra, lam: Sequence[int], cap: int = DEFAULT_WEYL_CAP) -> list[tuple[Weight, int]]:
    """Orbit of a regular weight with the sign of the Weyl element reaching each point."""
    lam = tuple(lam)
    out = {lam: 1}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        s = out[mu]
        for i in range(alg.rank):
            nu = alg.reflect(mu, i)
            if nu == mu:
                raise LieBlocksError(f"weight {list(lam)} is not regular")
            if nu not in out:
                if len(out) >= cap:
                    raise CapExceededError(
                        f"Weyl group of {alg.designator} exceeds enumeration cap {cap}")
                out[nu] = -s
                queue.append(nu)
    return sorted(out.items())


def _phase_sum(alg: SimpleLieAlgebra, orbit: list[tuple[Weight, int]], xi: Sequence[Fraction]):
    total = mpmath.mpc(0)
    for nu, s in orbit:
        q = inner(alg, nu, xi)
        q -= math.floor(q)  # exp(2 pi i q) only depends on q mod 1
        total += s * mpmath.expjpi(2 * mpmath.mpf(q.numerator) / q.denominator)
    return total


def character_value(alg: SimpleLieAlgebra, lam: Sequence[int], xi: Sequence, precision_bits: int = DEFAULT_PRECISION,
                    weyl_cap: int = DEFAULT_WEYL_CAP):
    """Weyl character of L_lam at exp(2 pi i xi), xi a rational weight (fundamental coordinates)."""
    lam = alg.check_dominant(lam)
    xi = tuple(Fraction(x) for x in xi)
    if len(xi) != alg.rank:
        raise LieBlocksError(f"xi must have {alg.rank} coordinates")
    with mpmath.workprec(precision_bits):
        den = _phase_sum(alg, signed_orbit(alg, alg.rho, weyl_cap), xi)
        if abs(den) < mpmath.mpf(2) ** (-(precision_bits // 2)):
            raise LieBlocksError(f"xi = {[str(x) for x in xi]} is singular (Weyl denominator vanishes)")
        num = _phase_sum(alg, signed_orbit(alg, tuple(x + 1 for x in lam), weyl_cap), xi)
        return num / den


@dataclass(frozen=True)
class VerlindeQuery:
    alg: SimpleLieAlgebra
    level: int
    genus: int
    labels: tuple[Weight, ...] = ()
    precision_bits: int = DEFAULT_PRECISION
    weyl_cap: int = DEFAULT_WEYL_CAP

    def __post_init__(self):
        if self.level < 0 or self.genus < 0:
            raise LieBlocksError("level and genus must be non-negative")
        if self.precision_bits < 64:
            raise LieBlocksError("precision_bits must be at least 64")
        labels = tuple(self.alg.check_dominant(lam) for lam in self.labels)
        for lam in labels:
            if self.alg.level(lam) > self.level:
                raise LieBlocksError(f"label {list(lam)} is not in the level-{self.level} alcove")
        object.__setattr__(self, "labels", labels)


@dataclass(frozen=True)
class VerlindeResult:
    dimension: int
    value: mpmath.mpf
    residual: mpmath.mpf
    alcove_size: int

    def to_json(self) -> dict:
        return {
            "dimension": str(self.dimension),
            "alcove_size": self.alcove_size,
            "checks": {"integrality_residual": mpmath.nstr(self.residual, 5)},
        }


def verlinde_evaluate(q: VerlindeQuery, fast_path: bool = True) -> VerlindeResult:
    alg = q.alg
    points = alcove(alg, q.level)
    if fast_path and q.genus == 1 and not q.labels:
        return VerlindeResult(len(points), mpmath.mpf(len(points)), mpmath.mpf(0), len(points))

    kl = q.level + alg.dual_coxeter
    idx = lattice_indices(alg)
    t_count = kl ** alg.rank * idx.p_over_q * idx.q_over_qlong
    exponent = 2 - 2 * q.genus
    prec = q.precision_bits
    with mpmath.workprec(prec):
        # zero labels contribute the trivial character; no Weyl enumeration needed without labels
        label_orbits = {lam: signed_orbit(alg, tuple(x + 1 for x in lam), q.weyl_cap)
                        for lam in sorted(set(q.labels)) if any(lam)}
        rho_orbit = signed_orbit(alg, alg.rho, q.weyl_cap) if label_orbits else []
        total = mpmath.mpc(0)
        for mu in points:
            shifted = tuple(x + 1 for x in mu)
            xi = tuple(Fraction(x, kl) for x in shifted)
            term = mpmath.mpc(1)
            if label_orbits:
                den = _phase_sum(alg, rho_orbit, xi)
                for lam in q.labels:
                    if lam in label_orbits:
                        term *= _phase_sum(alg, label_orbits[lam], xi) / den
            sines = mpmath.mpf(1)
            for pairing in _root_pairings(alg, shifted):
                ratio = pairing / kl
                sines *= abs(2 * mpmath.sinpi(mpmath.mpf(ratio.numerator) / ratio.denominator))
            total += term * sines ** exponent
        value = mpmath.mpf(t_count) ** (q.genus - 1) * total
        real = value.real
        rounded = int(mpmath.nint(real))
        residual = max(abs(real - rounded), abs(value.imag))
        tol = mpmath.mpf(2) ** (-(prec // 2)) * max(1, abs(real))
        if residual > tol or mpmath.log(max(abs(real), 1), 2) > prec - 32:
            raise IntegralityError(
                f"Verlinde sum {mpmath.nstr(real, 30)} is not within {mpmath.nstr(tol, 3)} of an integer "
                f"at {prec} bits; increase precision_bits")
        if rounded < 0:
            raise IntegralityError(f"Verlinde sum rounded to a negative number ({rounded})")
        return VerlindeResult(rounded, real, residual, len(points))


def verlinde_dimension(q: VerlindeQuery, fast_path: bool = True) -> int:
    return verlinde_evaluate(q, fast_path).dimension
