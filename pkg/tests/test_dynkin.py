import math
import random
from functools import reduce

import pytest

from lieblocks.algebra import build_algebra
from lieblocks.characters import dominant_character, tensor_character
from lieblocks.dynkin import (IndexReport, Method, character_index, dynkin_index, e8_fundamental_table,
                              fundamental_gcd, fundamental_indices, index_casimir, index_character_sum,
                              minimal_index, sl2_ladder_sum, sl2_weight_square_half_sum)
from lieblocks.errors import CapExceededError, WeightError

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"]


def test_examples():
    a1 = build_algebra("A1")
    assert index_casimir(a1, (1,)) == 1
    assert index_character_sum(a1, (1,)) == 1
    assert index_casimir(build_algebra("E8"), (0,) * 7 + (1,)) == 60
    assert index_casimir(build_algebra("G2"), (1, 0)) == 2


@pytest.mark.parametrize("d", range(12))
def test_a1_closed_form(d):
    a1 = build_algebra("A1")
    expected = d * (d + 1) * (d + 2) // 6
    assert index_casimir(a1, (d,)) == expected
    assert index_character_sum(a1, (d,)) == expected


@pytest.mark.parametrize("d", range(51))
def test_sl2_identity(d):
    assert sl2_ladder_sum(d) == sl2_weight_square_half_sum(d) == d * (d + 1) * (d + 2) // 6


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"])
def test_adjoint_index_is_twice_dual_coxeter(name):
    alg = build_algebra(name)
    assert index_casimir(alg, alg.highest_root_theta) == 2 * alg.dual_coxeter


@pytest.mark.parametrize("name", SMALL)
def test_two_routes_agree(name):
    alg = build_algebra(name)
    rng = random.Random(name)
    weights = list(alg.fundamental_weights)
    weights += [tuple(rng.randint(0, 2) for _ in range(alg.rank)) for _ in range(2)]
    for lam in weights:
        if sum(lam) > 3 and alg.rank >= 4:
            continue
        assert index_character_sum(alg, lam) == index_casimir(alg, lam)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "E6", "G2", "F4"])
def test_divisible_by_minimal_index(name):
    alg = build_algebra(name)
    d_g, _ = minimal_index(alg)
    assert d_g == fundamental_gcd(alg)
    rng = random.Random(11)
    for _ in range(25):
        lam = tuple(rng.randint(0, 4) for _ in range(alg.rank))
        assert index_casimir(alg, lam) % d_g == 0


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "C3"])
def test_index_additive_over_tensor_products(name):
    # ind(V x W) = dim V ind W + dim W ind V
    alg = build_algebra(name)
    v = dominant_character(alg, alg.fundamental_weights[0])
    w = dominant_character(alg, alg.fundamental_weights[-1])
    lhs = character_index(tensor_character(v, w))
    rhs = v.dimension() * character_index(w) + w.dimension() * character_index(v)
    assert lhs == rhs


def test_minimal_index_table():
    expected = {
        "A1": (1, [(1,)]),
        "A4": (1, [(1, 0, 0, 0), (0, 0, 0, 1)]),
        "B3": (2, [(1, 0, 0), (0, 0, 1)]),  # spin rep ties at rank 3
        "B4": (2, [(1, 0, 0, 0)]),
        "C3": (1, [(1, 0, 0)]),
        "D4": (2, [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
        "G2": (2, [(1, 0)]),
        "F4": (6, [(0, 0, 0, 1)]),
        "E6": (6, [(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)]),
        "E7": (12, [(0, 0, 0, 0, 0, 0, 1)]),
        "E8": (60, [(0, 0, 0, 0, 0, 0, 0, 1)]),
    }
    got = {name: minimal_index(build_algebra(name)) for name in expected}
    assert got == expected


def test_e8_table():
    table = e8_fundamental_table()
    assert table == {1: 1500, 2: 85500, 3: 5292000, 4: 8345660400,
                     5: 141605100, 6: 1778400, 7: 14700, 8: 60}
    assert reduce(math.gcd, table.values()) == 60


def test_fundamental_indices_length():
    assert len(fundamental_indices(build_algebra("D5"))) == 5


def test_dynkin_index_report():
    alg = build_algebra("E8")
    rep = dynkin_index(alg, (0,) * 7 + (1,), Method.CASIMIR)
    assert isinstance(rep, IndexReport)
    assert rep.is_minimal_witness
    assert rep.to_json() == {"algebra": "E8", "weight": [0] * 7 + [1], "dim": "248",
                             "index": "60", "method": "casimir"}
    rep = dynkin_index(build_algebra("A2"), (1, 1), "character_sum")
    assert (rep.index, rep.dimension, rep.is_minimal_witness) == (6, 8, False)


def test_errors():
    with pytest.raises(WeightError):
        index_casimir(build_algebra("A2"), (1, -1))
    with pytest.raises(WeightError):
        index_casimir(build_algebra("A2"), (1,))
    with pytest.raises(ValueError):
        dynkin_index(build_algebra("A2"), (1, 0), "bogus")
    with pytest.raises(CapExceededError):
        index_character_sum(build_algebra("E8"), (0, 0, 0, 1, 0, 0, 0, 0), cap=5)
