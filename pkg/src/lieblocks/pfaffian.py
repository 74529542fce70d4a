"""Exact pfaffians and the pfaffian functor on skew length-one complexes.

A skew complex is ``0 -> E -> E^* -> 0`` with a skew-symmetric differential
``alpha``; with standard bases it is just a skew matrix.  A morphism
``f = (f0, f1)`` to ``F`` satisfies ``f1 alpha_E = alpha_F f0`` and is
self-dual up to homotopy: some ``h : F^* -> F`` has

    f0 f1^T - 1 = h alpha_F,      f1 f0^T - 1 = alpha_F h.

Duals are transposes throughout.  Values of the functor on morphisms are
scalars against the standard bases of det(E) and det(F).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import rational as rl
from .errors import MorphismError, SkewnessError
from .rational import Matrix


def _check_skew(a: Matrix) -> None:
    n, m = rl.shape(a)
    if n != m:
        raise SkewnessError(f"matrix is {n}x{m}, not square")
    for i in range(n):
        for j in range(i, n):
            if a[i][j] != -a[j][i]:
                raise SkewnessError(f"matrix is not skew-symmetric at ({i}, {j})")


@dataclass(frozen=True)
class SkewMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        _check_skew([list(r) for r in self.entries])

    @classmethod
    def of(cls, rows) -> SkewMatrix:
        return cls(tuple(tuple(r) for r in rl.matrix(rows)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[rl.fmt(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, payload: dict) -> SkewMatrix:
        n = int(payload["n"])
        entries = payload["entries"]
        if len(entries) != n or any(len(r) != n for r in entries):
            raise SkewnessError(f"entries do not form an {n}x{n} matrix")
        return cls.of(entries)


def load_matrix(path: str | Path) -> SkewMatrix:
    return SkewMatrix.from_json(json.loads(Path(path).read_text()))


def pfaffian(a: SkewMatrix | Matrix) -> Fraction:
    """Pfaffian by skew-symmetric elimination (congruence by unipotent matrices).

    pf(A)^2 = det(A); the empty matrix has pfaffian 1.
    """
    if isinstance(a, SkewMatrix):
        w = a.rows()
    else:
        w = rl.matrix(a)
        _check_skew(w)
    n = len(w)
    if n % 2:
        raise SkewnessError(f"pfaffian of an odd-size ({n}) matrix")
    result = Fraction(1)
    for k in range(0, n, 2):
        piv = next((j for j in range(k + 1, n) if w[k][j] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k + 1:
            # simultaneous row/column swap flips the sign of the pfaffian
            w[k + 1], w[piv] = w[piv], w[k + 1]
            for row in w:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            result = -result
        p = w[k][k + 1]
        result *= p
        for i in range(k + 2, n):
            # clear w[k][i] using column k+1, then w[k+1][i] using column k
            for src, t in ((k + 1, w[k][i] / p), (k, -w[k + 1][i] / p)):
                if t == 0:
                    continue
                wi, ws = w[i], w[src]
                for j in range(k, n):
                    wi[j] -= t * ws[j]
                for row in w[k:]:
                    row[i] -= t * row[src]
    return result


def pfaffian_matchings(a: SkewMatrix | Matrix) -> Fraction:
    """Pfaffian as a signed sum over perfect matchings (brute force, n <= 10 or so)."""
    w = a.rows() if isinstance(a, SkewMatrix) else rl.matrix(a)
    n = len(w)
    if n % 2:
        raise SkewnessError(f"pfaffian of an odd-size ({n}) matrix")

    def rec(idx: tuple[int, ...]) -> Fraction:
        if not idx:
            return Fraction(1)
        first, rest = idx[0], idx[1:]
        total = Fraction(0)
        for pos, j in enumerate(rest):
            if w[first][j] == 0:
                continue
            sign = -1 if pos % 2 else 1
            total += sign * w[first][j] * rec(rest[:pos] + rest[pos + 1:])
        return total

    return rec(tuple(range(n)))


@dataclass(frozen=True)
class GradedLine:
    """A line (det of a space of dimension ``dim``) with its Z/2 degree."""

    dim: int

    @property
    def degree(self) -> int:
        return self.dim % 2

    def tensor(self, other: GradedLine) -> GradedLine:
        return GradedLine(self.dim + other.dim)

    def dual(self) -> GradedLine:
        return self


def koszul_sign(a: GradedLine, b: GradedLine) -> int:
    """Sign of the symmetry isomorphism L (x) M -> M (x) L."""
    return -1 if a.degree * b.degree else 1


@dataclass(frozen=True)
class SkewComplex:
    alpha: SkewMatrix

    @classmethod
    def of(cls, rows) -> SkewComplex:
        return cls(SkewMatrix.of(rows))

    @property
    def dim(self) -> int:
        return self.alpha.n

    def a(self) -> Matrix:
        return self.alpha.rows()


def pf_object(c: SkewComplex) -> GradedLine:
    """Value of the functor on objects: det_2(E)."""
    return GradedLine(c.dim)


def _t(a: Matrix, rows: int, cols: int) -> Matrix:
    """Transpose of a rows x cols matrix, safe for empty shapes."""
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


@dataclass(frozen=True)
class SkewComplexMorphism:
    source: SkewComplex
    target: SkewComplex
    f0: tuple[tuple[Fraction, ...], ...]
    f1: tuple[tuple[Fraction, ...], ...]
    homotopy_h: tuple[tuple[Fraction, ...], ...] | None = None

    @classmethod
    def of(cls, source: SkewComplex, target: SkewComplex, f0, f1, h=None,
           check: bool = True) -> SkewComplexMorphism:
        def freeze(x):
            return None if x is None else tuple(tuple(r) for r in rl.matrix(x))
        mor = cls(source, target, freeze(f0), freeze(f1), freeze(h))
        if check:
            mor.check()
        return mor

    @property
    def m(self) -> int:
        return self.source.dim

    @property
    def n(self) -> int:
        return self.target.dim

    def F0(self) -> Matrix:
        return [list(r) for r in self.f0] if self.n else []

    def F1(self) -> Matrix:
        return [list(r) for r in self.f1] if self.n else []

    def H(self) -> Matrix | None:
        return None if self.homotopy_h is None else [list(r) for r in self.homotopy_h]

    def _mul(self, a, b, n, k, m):
        # a is n x k, b is k x m; handles zero dimensions
        if k == 0:
            return rl.zeros(n, m)
        return rl.matmul(a, b) if n and m else rl.zeros(n, m)

    def check(self) -> None:
        m, n = self.m, self.n
        for name, x in (("f0", self.f0), ("f1", self.f1)):
            if len(x) != n or any(len(r) != m for r in x):
                raise MorphismError(f"{name} must be {n}x{m}")
        if (m - n) % 2:
            raise MorphismError("source and target ranks differ in parity")
        lhs = self._mul(self.F1(), self.source.a(), n, m, m)
        rhs = self._mul(self.target.a(), self.F0(), n, n, m)
        if lhs != rhs:
            raise MorphismError("chain condition f1 alpha_E = alpha_F f0 fails")
        h = self.H()
        if h is not None:
            if len(h) != n or any(len(r) != n for r in h):
                raise MorphismError(f"homotopy must be {n}x{n}")
            if not self.homotopy_holds(h):
                raise MorphismError("homotopy witness does not satisfy the self-duality condition")

    def homotopy_holds(self, h: Matrix) -> bool:
        m, n = self.m, self.n
        one = rl.identity(n)
        a_f = self.target.a()
        phi0 = self._mul(self.F0(), _t(self.F1(), n, m), n, m, n)
        phi1 = self._mul(self.F1(), _t(self.F0(), n, m), n, m, n)
        return (rl.sub(phi0, one) == self._mul(h, a_f, n, n, n)
                and rl.sub(phi1, one) == self._mul(a_f, h, n, n, n))

    def with_homotopy(self) -> SkewComplexMorphism:
        """Attach a homotopy witness found by solving the linear conditions."""
        if self.homotopy_h is not None:
            return self
        h = find_homotopy(self)
        return SkewComplexMorphism(self.source, self.target, self.f0, self.f1,
                                   tuple(tuple(r) for r in h))


def find_homotopy(f: SkewComplexMorphism) -> Matrix:
    """Solve f0 f1^T - 1 = h alpha_F and f1 f0^T - 1 = alpha_F h for h."""
    m, n = f.m, f.n
    if n == 0:
        return []
    a_f = f.target.a()
    one = rl.identity(n)
    phi0 = f._mul(f.F0(), _t(f.F1(), n, m), n, m, n)
    phi1 = f._mul(f.F1(), _t(f.F0(), n, m), n, m, n)
    r0 = rl.sub(phi0, one)
    r1 = rl.sub(phi1, one)
    # unknown h[p][q] at column p*n + q
    rows, rhs = [], []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += a_f[k][j]          # (h a_F)_ij
            rows.append(row)
            rhs.append([r0[i][j]])
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[k * n + j] += a_f[i][k]          # (a_F h)_ij
            rows.append(row)
            rhs.append([r1[i][j]])
    sol = rl.solve(rows, rhs, ncols=n * n)
    if sol is None:
        raise MorphismError("morphism is not self-dual up to homotopy (no homotopy exists)")
    return [[sol[i * n + j][0] for j in range(n)] for i in range(n)]


def gamma_from_homotopy(f: SkewComplexMorphism) -> Matrix:
    """Skew gamma_f = (h^T - h) / 2 making (f0^T ; gamma_f) a section of (f1  alpha_F)."""
    h = f.H()
    if h is None:
        raise MorphismError("morphism carries no homotopy witness")
    n = f.n
    gamma = [[(h[j][i] - h[i][j]) / 2 for j in range(n)] for i in range(n)]
    if not is_section(f, gamma):
        raise MorphismError("(f0^T ; gamma) is not a section of (f1  alpha_F)")
    return gamma


def is_section(f: SkewComplexMorphism, gamma: Matrix) -> bool:
    """f1 f0^T + alpha_F gamma = 1."""
    m, n = f.m, f.n
    left = rl.add(f._mul(f.F1(), _t(f.F0(), n, m), n, m, n),
                  f._mul(f.target.a(), gamma, n, n, n))
    return left == rl.identity(n)


def morphism_matrix(f: SkewComplexMorphism, gamma: Matrix) -> Matrix:
    """M(f, gamma) = [[alpha_E, f0^T], [-f0, gamma]] on E + F^*."""
    m, n = f.m, f.n
    return rl.block([[f.source.a(), _t(f.F0(), n, m)], [rl.neg(f.F0()), gamma]], [m, n], [m, n])


def _sign(m: int) -> int:
    # pf of M(Id, 0) on an m-dimensional complex
    return -1 if (m * (m - 1) // 2) % 2 else 1


def pfaffian_of_morphism(f: SkewComplexMorphism, gamma: Matrix | None = None) -> Fraction:
    """Scalar of Pf(f): det_2(E) -> det_2(F) against standard bases."""
    if (f.m - f.n) % 2:
        raise MorphismError("source and target ranks differ in parity")
    if gamma is None:
        gamma = gamma_from_homotopy(f.with_homotopy())
    else:
        gamma = rl.matrix(gamma)
        if not rl.is_skew(gamma) and f.n:
            raise MorphismError("gamma must be skew-symmetric")
        if not is_section(f, gamma):
            raise MorphismError("(f0^T ; gamma) is not a section of (f1  alpha_F)")
    # normalise by the source so that Pf(Id) = 1; with this choice Pf is multiplicative
    return _sign(f.m) * pfaffian(morphism_matrix(f, gamma))


def determinant_of_morphism(f: SkewComplexMorphism) -> Fraction:
    """Scalar of the determinant-functor value, from an arbitrary section (u; v) of (f1 alpha_F).

    Independent of gamma: the section is whatever the linear solver returns.
    """
    m, n = f.m, f.n
    if n == 0:
        return rl.det(f.source.a()) if m else Fraction(1)
    lhs = [list(f.F1()[i]) + list(f.target.a()[i]) for i in range(n)]
    sol = rl.solve(lhs, rl.identity(n), ncols=m + n)
    if sol is None:
        raise MorphismError("(f1  alpha_F) is not surjective; morphism is not a quasi-isomorphism")
    u, v = sol[:m], sol[m:]
    mat = rl.block([[f.source.a(), u], [rl.neg(f.F0()), v]], [m, n], [m, n])
    return rl.det(mat)


def compose(g: SkewComplexMorphism, f: SkewComplexMorphism) -> SkewComplexMorphism:
    """g o f, with homotopy witness dropped (recompute with ``with_homotopy``)."""
    if f.target != g.source:
        raise MorphismError("morphisms are not composable")
    m, n, p = f.m, f.n, g.n
    f0 = f._mul(g.F0(), f.F0(), p, n, m)
    f1 = f._mul(g.F1(), f.F1(), p, n, m)
    return SkewComplexMorphism.of(f.source, g.target, f0, f1)


def composite_gamma(f: SkewComplexMorphism, g: SkewComplexMorphism,
                    gamma_f: Matrix, gamma_g: Matrix) -> Matrix:
    """gamma_{gf} = g0 gamma_f g0^T + gamma_g."""
    n, p = f.n, g.n
    g0 = g.F0()
    inner_ = f._mul(f._mul(g0, gamma_f, p, n, n), _t(g0, p, n), p, n, p)
    return rl.add(inner_, gamma_g)


def identity_morphism(c: SkewComplex) -> SkewComplexMorphism:
    m = c.dim
    one = rl.identity(m)
    return SkewComplexMorphism.of(c, c, one, one, rl.zeros(m))
