import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieblocks import rational as rl
from lieblocks.errors import MorphismError, SkewnessError
from lieblocks.pfaffian import (GradedLine, SkewComplex, SkewComplexMorphism, SkewMatrix, compose,
                                composite_gamma, determinant_of_morphism, find_homotopy,
                                gamma_from_homotopy, identity_morphism, is_section, koszul_sign,
                                load_matrix, pf_object, pfaffian, pfaffian_matchings, pfaffian_of_morphism)

from morphisms import iso, perturb, rand_complex, rand_invertible, rand_skew, random_morphism, stabilize

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def skew_matrices(draw, max_half=4):
    n = 2 * draw(st.integers(0, max_half))
    a = rl.zeros(n)
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(small_fractions)
            a[i][j], a[j][i] = x, -x
    return a


def standard_symplectic(n):
    """J_{2n} = [[0, I], [-I, 0]]."""
    j = rl.zeros(2 * n)
    for i in range(n):
        j[i][n + i], j[n + i][i] = Fraction(1), Fraction(-1)
    return j


def test_examples():
    assert pfaffian([]) == 1
    assert pfaffian([[0, 3], [-3, 0]]) == 3
    a = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    assert pfaffian(a) == 1 * 6 - 2 * 5 + 3 * 4
    assert pfaffian(SkewMatrix.of([[0, "1/2"], ["-1/2", 0]])) == Fraction(1, 2)
    assert pfaffian(rl.zeros(4)) == 0


@pytest.mark.parametrize("n", range(6))
def test_standard_symplectic(n):
    j = standard_symplectic(n)
    expected = (-1) ** (n * (n - 1) // 2)
    assert pfaffian(j) == expected
    assert pfaffian_matchings(j) == expected


def test_pivot_swap():
    # first row's first nonzero entry is not adjacent
    a = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    assert pfaffian(a) == pfaffian_matchings(a) == -1


@settings(max_examples=60, deadline=None)
@given(skew_matrices())
def test_agrees_with_matchings_and_squares_to_det(a):
    pf = pfaffian(a)
    assert pf == pfaffian_matchings(a)
    assert pf * pf == (rl.det(a) if a else 1)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_congruence(data):
    a = data.draw(skew_matrices(max_half=3))
    n = len(a)
    if n == 0:
        return
    b = [[data.draw(small_fractions) for _ in range(n)] for _ in range(n)]
    bab = rl.matmul(rl.matmul(b, a), rl.transpose(b))
    assert pfaffian(bab) == rl.det(b) * pfaffian(a)


def test_errors():
    with pytest.raises(SkewnessError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(SkewnessError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(SkewnessError):
        pfaffian([[1, 1], [-1, 0]])
    with pytest.raises(ValueError):
        SkewMatrix.of([[0, 1, 0], [-1, 0]])
    with pytest.raises(TypeError):
        pfaffian([[0, 0.5], [-0.5, 0]])


def test_json(tmp_path):
    m = SkewMatrix.of([[0, "2/3", -1], ["-2/3", 0, 4], [1, -4, 0]])
    payload = json.loads(json.dumps(m.to_json()))
    assert payload["entries"][0][1] == "2/3"
    assert SkewMatrix.from_json(payload) == m
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 2, "entries": [["0", "5"], ["-5", "0"]]}))
    assert pfaffian(load_matrix(path)) == 5
    with pytest.raises(SkewnessError):
        SkewMatrix.from_json({"n": 3, "entries": [["0", "5"], ["-5", "0"]]})


def test_graded_lines():
    even, odd = GradedLine(4), GradedLine(3)
    assert (even.degree, odd.degree) == (0, 1)
    assert koszul_sign(odd, odd) == -1
    assert koszul_sign(odd, even) == koszul_sign(even, even) == 1
    assert odd.tensor(odd).degree == 0
    assert pf_object(SkewComplex.of(rl.zeros(5))) == GradedLine(5)


@pytest.mark.parametrize("m", range(7))
def test_identity_is_one(m):
    rng = random.Random(m)
    c = rand_complex(rng, m)
    assert pfaffian_of_morphism(identity_morphism(c)) == 1
    assert pfaffian_of_morphism(SkewComplexMorphism.of(c, c, rl.identity(m), rl.identity(m))) == 1


@pytest.mark.parametrize("seed", range(15))
def test_homotopic_to_identity_is_one(seed):
    # f0 = 1 + h alpha, f1 = 1 + alpha h is chain homotopic to the identity
    rng = random.Random(seed)
    m = rng.randint(1, 6)
    c = rand_complex(rng, m)
    h = rand_skew(rng, m, size=2)
    a = c.a()
    f0 = rl.add(rl.identity(m), rl.matmul(h, a))
    f1 = rl.add(rl.identity(m), rl.matmul(a, h))
    f = SkewComplexMorphism.of(c, c, f0, f1)
    assert pfaffian_of_morphism(f) == 1


@pytest.mark.parametrize("seed", range(20))
def test_iso_value_is_det(seed):
    rng = random.Random(seed)
    c = rand_complex(rng, rng.randint(1, 5))
    p = rand_invertible(rng, c.dim)
    assert pfaffian_of_morphism(iso(rng, c, p)) == rl.det(p)


@pytest.mark.parametrize("seed", range(30))
def test_independent_of_gamma(seed):
    rng = random.Random(seed)
    c = rand_complex(rng, rng.randint(0, 5))
    f = random_morphism(rng, c).with_homotopy()
    gamma = gamma_from_homotopy(f)
    base = pfaffian_of_morphism(f, gamma)
    n = f.n
    kernel = rl.nullspace(f.target.a()) if n else []
    if len(kernel) < 2:
        return
    delta = rl.zeros(n)
    for _ in range(2):
        u, v = rng.sample(kernel, 2)
        s = Fraction(rng.randint(-3, 3))
        for i in range(n):
            for j in range(n):
                delta[i][j] += s * (u[i] * v[j] - v[i] * u[j])
    other = rl.add(gamma, delta)
    assert is_section(f, other)
    assert pfaffian_of_morphism(f, other) == base


@pytest.mark.parametrize("seed", range(40))
def test_functoriality(seed):
    rng = random.Random(1000 + seed)
    c = rand_complex(rng, rng.randint(0, 4))
    f = random_morphism(rng, c).with_homotopy()
    g = random_morphism(rng, f.target).with_homotopy()
    gf = compose(g, f)
    gamma_gf = composite_gamma(f, g, gamma_from_homotopy(f), gamma_from_homotopy(g))
    assert pfaffian_of_morphism(gf, gamma_gf) == pfaffian_of_morphism(g) * pfaffian_of_morphism(f)
    assert pfaffian_of_morphism(gf) == pfaffian_of_morphism(g) * pfaffian_of_morphism(f)


@pytest.mark.parametrize("seed", range(25))
def test_square_is_determinant(seed):
    rng = random.Random(2000 + seed)
    c = rand_complex(rng, rng.randint(0, 5))
    f = random_morphism(rng, c)
    assert pfaffian_of_morphism(f) ** 2 == determinant_of_morphism(f)


def test_stabilization_value():
    rng = random.Random(3)
    c = rand_complex(rng, 3)
    f = stabilize(rng, c, 1)
    # Pf(E -> E + H) is 1 / pf(H) up to the sign conventions fixed by Pf(Id) = 1
    value = pfaffian_of_morphism(f)
    assert value ** 2 == determinant_of_morphism(f)
    assert value != 0


def test_zero_dimensional():
    zero = SkewComplex.of([])
    assert pfaffian_of_morphism(identity_morphism(zero)) == 1
    h = SkewComplex.of([[0, 2], [-2, 0]])
    into = SkewComplexMorphism.of(zero, h, [[], []], [[], []])
    out = SkewComplexMorphism.of(h, zero, [], [])
    assert pfaffian_of_morphism(into) ** 2 == determinant_of_morphism(into)
    assert pfaffian_of_morphism(out) ** 2 == determinant_of_morphism(out)
    assert pfaffian_of_morphism(compose(out, into)) == pfaffian_of_morphism(out) * pfaffian_of_morphism(into)


def test_morphism_validation():
    c = SkewComplex.of([[0, 1], [-1, 0]])
    odd = SkewComplex.of(rl.zeros(3))
    with pytest.raises(MorphismError):
        SkewComplexMorphism.of(c, odd, rl.zeros(3, 2), rl.zeros(3, 2))
    with pytest.raises(MorphismError):
        SkewComplexMorphism.of(c, c, rl.zeros(2, 3), rl.zeros(2, 3))
    # chain condition: f1 alpha_E != alpha_F f0
    with pytest.raises(MorphismError):
        SkewComplexMorphism.of(c, c, [[1, 0], [0, 1]], [[2, 0], [0, 1]])
    # not self-dual up to homotopy: zero map on a degenerate complex
    zero = SkewComplex.of(rl.zeros(2))
    f = SkewComplexMorphism.of(zero, zero, rl.zeros(2), rl.zeros(2))
    with pytest.raises(MorphismError):
        find_homotopy(f)
    with pytest.raises(MorphismError):
        pfaffian_of_morphism(f)
    # bad homotopy witness
    with pytest.raises(MorphismError):
        SkewComplexMorphism.of(c, c, rl.identity(2), rl.identity(2), h=rl.identity(2))


def test_missing_homotopy_and_bad_gamma():
    rng = random.Random(8)
    c = rand_complex(rng, 4, degenerate=False)
    f = perturb(rng, iso(rng, c))
    with pytest.raises(MorphismError):
        gamma_from_homotopy(f)
    with pytest.raises(MorphismError):
        pfaffian_of_morphism(f, gamma=rl.zeros(4))
    with pytest.raises(MorphismError):
        pfaffian_of_morphism(f, gamma=rl.identity(4))


def test_gamma_examples():
    c = SkewComplex.of([[0, 3], [-3, 0]])
    assert gamma_from_homotopy(identity_morphism(c)) == rl.zeros(2)
    # on the zero complex every h is a witness; a symmetric one antisymmetrizes to zero
    zero = SkewComplex.of(rl.zeros(2))
    h = [[1, 2], [2, 5]]
    f = SkewComplexMorphism.of(zero, zero, rl.identity(2), rl.identity(2), h=h)
    assert gamma_from_homotopy(f) == rl.zeros(2)


@pytest.mark.parametrize("seed", range(10))
def test_gamma_is_skew_section(seed):
    rng = random.Random(4000 + seed)
    f = random_morphism(rng, rand_complex(rng, 2), max_dim=4).with_homotopy()
    gamma = gamma_from_homotopy(f)
    assert rl.is_skew(gamma)
    assert is_section(f, gamma)
