import random
from fractions import Fraction as Q

import pytest

from gradedlie.chevalley import build_algebra
from gradedlie.linalg import rank
from gradedlie.rootsystem import LieType

BUILT_TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6"]


def test_sl2_relations(sl2):
    h = sl2.cartan_element([1])
    e = sl2.root_vector((1,))
    f = sl2.root_vector((-1,))
    assert sl2.bracket(h, e) == tuple(2 * x for x in e)
    assert sl2.bracket(h, f) == tuple(-2 * x for x in f)
    assert sl2.bracket(e, f) == h


@pytest.mark.parametrize(
    "name,dim", [("A1", 3), ("A2", 8), ("G2", 14), ("D4", 28), ("F4", 52), ("E6", 78)]
)
def test_dimensions(name, dim):
    assert build_algebra(LieType.parse(name)).dim == dim


def test_bracket_antisymmetry(sl3):
    rng = random.Random(3)
    for _ in range(10):
        x = tuple(Q(rng.randint(-3, 3)) for _ in range(sl3.dim))
        assert all(v == 0 for v in sl3.bracket(x, x))


def test_simple_root_bracket_unit(sl3):
    out = sl3.bracket(sl3.root_vector((1, 0)), sl3.root_vector((0, 1)))
    idx = sl3.root_index[(1, 1)]
    assert out[idx] in (Q(1), Q(-1))
    assert all(v == 0 for i, v in enumerate(out) if i != idx)


def test_killing_sl2(sl2):
    h = sl2.cartan_element([1])
    assert sl2.killing_form(h, h) == 8


def test_killing_root_space_orthogonality(sl3):
    for alpha in sl3.rs.roots:
        for beta in sl3.rs.roots:
            value = sl3.killing_form(sl3.root_vector(alpha), sl3.root_vector(beta))
            if all(a + b == 0 for a, b in zip(alpha, beta)):
                assert value != 0
            else:
                assert value == 0


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "D4"])
def test_killing_invariance(name):
    alg = build_algebra(LieType.parse(name))
    rng = random.Random(5)
    for _ in range(100):
        x, y, z = (
            tuple(Q(rng.randint(-2, 2)) for _ in range(alg.dim)) for _ in range(3)
        )
        lhs = alg.killing_form(alg.bracket(x, y), z)
        rhs = alg.killing_form(y, alg.bracket(x, z))
        assert lhs + rhs == 0


@pytest.mark.parametrize("name", BUILT_TYPES)
def test_killing_nondegenerate(name):
    alg = build_algebra(LieType.parse(name))
    assert rank(alg.killing_gram()) == alg.dim


def test_centralizer_of_zero(sl2):
    full = [sl2.from_sparse({i: Q(1)}) for i in range(sl2.dim)]
    assert len(sl2.centralizer([sl2.zero()], full)) == sl2.dim


def test_centralizer_of_sl2_triple_is_trivial(sl2):
    h = sl2.cartan_element([1])
    e = sl2.root_vector((1,))
    f = sl2.root_vector((-1,))
    full = [sl2.from_sparse({i: Q(1)}) for i in range(sl2.dim)]
    assert sl2.centralizer([h, e, f], full) == []


def test_coroot_brackets(sl3):
    # [e_alpha, e_{-alpha}] is the coroot, and pairs to 2 against alpha
    for alpha in sl3.rs.positive_roots:
        e = sl3.root_vector(alpha)
        f = sl3.root_vector(tuple(-x for x in alpha))
        h = sl3.bracket(e, f)
        assert h == sl3.coroot(alpha)
        assert sl3.bracket(h, e) == tuple(2 * x for x in e)


@pytest.mark.parametrize("name", BUILT_TYPES)
def test_build_verifies(name):
    # construction runs the string-length and Jacobi checks internally
    build_algebra(LieType.parse(name))
