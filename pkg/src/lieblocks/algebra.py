"""Root-system data for the simple Lie algebras.

Node numbering follows Bourbaki (Planches I-IX):

====  ==========================================================
type  numbering
====  ==========================================================
A_r   chain 1 - 2 - ... - r
B_r   chain 1 - ... - (r-1) => r, node r short
C_r   chain 1 - ... - (r-1) <= r, node r long
D_r   chain 1 - ... - (r-2), with (r-1) and r both joined to r-2
E_r   chain 1 - 3 - 4 - ... - r, node 2 joined to 4
F_4   1 - 2 => 3 - 4, nodes 1, 2 long
G_2   1 <= 2, node 1 short
====  ==========================================================

Weights are tuples of integers in the fundamental-weight basis, so
``lam[i]`` is ``lam(H_{i+1})``.  The invariant form is normalised so that
long roots have squared length 2.  All arithmetic is exact.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from . import rational as rl
from .errors import CapExceededError, InvalidAlgebraError, WeightError

Weight = tuple[int, ...]

DEFAULT_ORBIT_CAP = 10**7

_DESIGNATOR = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def _dynkin_data(type_tag: str, rank: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Half squared lengths of the simple roots and the diagram edges (0-based)."""
    one, half = Fraction(1), Fraction(1, 2)
    chain = [(i, i + 1) for i in range(rank - 1)]
    if type_tag == "A":
        return [one] * rank, chain
    if type_tag == "B":
        return [one] * (rank - 1) + [half], chain
    if type_tag == "C":
        return [half] * (rank - 1) + [one], chain
    if type_tag == "D":
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
        return [one] * rank, edges
    if type_tag == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
        return [one] * rank, edges
    if type_tag == "F":
        return [one, one, half, half], chain
    if type_tag == "G":
        return [Fraction(1, 3), one], chain
    raise InvalidAlgebraError(f"unknown type {type_tag!r}")


def _check_type(type_tag: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if type_tag not in ok:
        raise InvalidAlgebraError(f"unknown type letter {type_tag!r}; expected one of A-G")
    if not ok[type_tag]:
        raise InvalidAlgebraError(f"{type_tag}{rank} is not a simple Lie algebra type")


def parse_designator(text: str) -> tuple[str, int]:
    m = _DESIGNATOR.match(text)
    if not m:
        raise InvalidAlgebraError(f"bad algebra designator {text!r} (expected e.g. 'A1', 'E8')")
    return m.group(1).upper(), int(m.group(2))


@dataclass(frozen=True, eq=False)
class SimpleLieAlgebra:
    type_tag: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    form_matrix: tuple[tuple[Fraction, ...], ...]
    highest_root_theta: Weight
    comarks: tuple[int, ...]
    rho: Weight
    dual_coxeter: int
    positive_roots: tuple[Weight, ...]
    positive_roots_simple: tuple[tuple[int, ...], ...]
    dim_g: int

    def __repr__(self) -> str:
        return f"SimpleLieAlgebra({self.designator})"

    @property
    def designator(self) -> str:
        return f"{self.type_tag}{self.rank}"

    @property
    def is_simply_laced(self) -> bool:
        return self.type_tag in "ADE"

    @cached_property
    def half_lengths(self) -> tuple[Fraction, ...]:
        """(alpha_i, alpha_i) / 2 for each simple root."""
        return tuple(self.form_matrix[i][i] / 2 for i in range(self.rank))

    @cached_property
    def weight_form(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix (varpi_i, varpi_j) = D A^{-1}."""
        ainv = rl.inverse(rl.matrix(self.cartan))
        d = self.half_lengths
        return tuple(tuple(d[i] * ainv[i][j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        # alpha_j(H_i) = a_ij, so alpha_j is column j of the Cartan matrix
        return tuple(tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))

    @cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        return tuple(tuple(int(i == j) for i in range(self.rank)) for j in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def check_weight(self, lam: Sequence[int]) -> Weight:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise WeightError(f"{self.designator} weights have {self.rank} coordinates, got {len(lam)}")
        return lam

    def check_dominant(self, lam: Sequence[int]) -> Weight:
        lam = self.check_weight(lam)
        if any(x < 0 for x in lam):
            raise WeightError(f"weight {list(lam)} is not dominant")
        return lam

    def level(self, lam: Sequence[int]) -> int:
        """lam(H_theta) = sum of lam_i times the comarks."""
        return sum(x * a for x, a in zip(lam, self.comarks))

    def to_simple_root_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients of lam over the simple roots (rational in general)."""
        ainv = _cartan_inverse(self.type_tag, self.rank)
        return tuple(sum((ainv[i][j] * lam[j] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def reflect(self, lam: Weight, i: int) -> Weight:
        c = lam[i]
        if c == 0:
            return lam
        col = self.simple_roots[i]
        return tuple(x - c * a for x, a in zip(lam, col))


@lru_cache(maxsize=None)
def _cartan_inverse(type_tag: str, rank: int) -> rl.Matrix:
    return rl.inverse(rl.matrix(build_algebra(type_tag, rank).cartan))


def build_algebra(type_tag: str, rank: int | None = None) -> SimpleLieAlgebra:
    """Construct the root datum of a simple Lie algebra.

    ``build_algebra("E8")`` and ``build_algebra("E", 8)`` return the same
    (cached) object.
    """
    if rank is None:
        type_tag, rank = parse_designator(type_tag)
    type_tag = type_tag.upper()
    rank = int(rank)
    _check_type(type_tag, rank)
    return _build(type_tag, rank)


@lru_cache(maxsize=None)
def _build(type_tag: str, rank: int) -> SimpleLieAlgebra:

    d, edges = _dynkin_data(type_tag, rank)
    form = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        form[i][i] = 2 * d[i]
    for i, j in edges:
        form[i][j] = form[j][i] = -max(d[i], d[j])
    cartan = []
    for i in range(rank):
        row = []
        for j in range(rank):
            a = form[i][j] / d[i]
            assert a.denominator == 1
            row.append(int(a))
        cartan.append(tuple(row))

    pos_simple = _positive_roots(cartan)
    # highest root: unique root of maximal height
    theta_c = max(pos_simple, key=sum)
    comarks = []
    for i in range(rank):
        a = theta_c[i] * d[i]
        assert a.denominator == 1
        comarks.append(int(a))

    def to_weight(c):
        return tuple(sum(cartan[i][j] * c[j] for j in range(rank)) for i in range(rank))

    pos_roots = tuple(to_weight(c) for c in pos_simple)
    return SimpleLieAlgebra(
        type_tag=type_tag,
        rank=rank,
        cartan=tuple(cartan),
        form_matrix=tuple(tuple(r) for r in form),
        highest_root_theta=to_weight(theta_c),
        comarks=tuple(comarks),
        rho=(1,) * rank,
        dual_coxeter=1 + sum(comarks),
        positive_roots=pos_roots,
        positive_roots_simple=tuple(pos_simple),
        dim_g=rank + 2 * len(pos_roots),
    )


def algebra(name: str | SimpleLieAlgebra) -> SimpleLieAlgebra:
    if isinstance(name, SimpleLieAlgebra):
        return name
    return build_algebra(name)


def _positive_roots(cartan: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Close the simple roots under simple reflections, keeping positive roots.

    Roots are expressed over the simple roots.  Sorted by height, then
    lexicographically, for determinism.
    """
    r = len(cartan)
    start = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    seen = set(start)
    queue = deque(start)
    while queue:
        beta = queue.popleft()
        for i in range(r):
            pairing = sum(cartan[i][j] * beta[j] for j in range(r))
            if pairing == 0:
                continue
            new = list(beta)
            new[i] -= pairing
            new = tuple(new)
            if min(new) < 0 or new in seen:
                continue
            seen.add(new)
            queue.append(new)
    return sorted(seen, key=lambda c: (sum(c), c))


def inner(alg: SimpleLieAlgebra, lam: Sequence, mu: Sequence) -> Fraction:
    """Normalised invariant form (lam, mu) on weights given in fundamental coordinates."""
    if len(lam) != alg.rank or len(mu) != alg.rank:
        raise WeightError(f"dimension mismatch: {alg.designator} has rank {alg.rank}")
    g = alg.weight_form
    total = Fraction(0)
    for i, x in enumerate(lam):
        if x:
            row = g[i]
            total += x * sum((row[j] * y for j, y in enumerate(mu) if y), Fraction(0))
    return total


def dominant_representative(alg: SimpleLieAlgebra, lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    while True:
        for i, x in enumerate(lam):
            if x < 0:
                lam = alg.reflect(lam, i)
                break
        else:
            return lam


def iter_weyl_orbit(alg: SimpleLieAlgebra, lam: Sequence[int],
                    cap: int = DEFAULT_ORBIT_CAP) -> Iterator[Weight]:
    """Yield the Weyl orbit of lam once per element (breadth-first)."""
    lam = alg.check_weight(lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        yield mu
        for i in range(alg.rank):
            if mu[i] == 0:
                continue
            nu = alg.reflect(mu, i)
            if nu not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(
                        f"Weyl orbit of {list(lam)} in {alg.designator} exceeds cap {cap}; "
                        "use a closed-form route instead")
                seen.add(nu)
                queue.append(nu)


def weyl_orbit(alg: SimpleLieAlgebra, lam: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> set[Weight]:
    return set(iter_weyl_orbit(alg, lam, cap))


def orbit_size(alg: SimpleLieAlgebra, lam: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> int:
    return sum(1 for _ in iter_weyl_orbit(alg, lam, cap))


def alcove(alg: SimpleLieAlgebra, level: int) -> list[Weight]:
    """Dominant weights with (lam, theta) <= level, in lexicographic order."""
    if level < 0:
        raise ValueError("level must be non-negative")
    a = alg.comarks
    out: list[Weight] = []

    def rec(prefix: list[int], budget: int) -> None:
        i = len(prefix)
        if i == alg.rank:
            out.append(tuple(prefix))
            return
        for x in range(budget // a[i] + 1):
            prefix.append(x)
            rec(prefix, budget - x * a[i])
            prefix.pop()

    rec([], level)
    return out


def parse_weight(text: str) -> Weight:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise WeightError(f"bad weight {text!r}; expected comma-separated integers") from None
