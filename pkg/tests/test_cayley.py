from fractions import Fraction as Q

import pytest

from conftest import quiver_grading

from gradedlie.cayley import (
    bracket_projection_test,
    cayley_pair,
    scalar_stabilizer_order,
    verify_intertwining,
    verify_iso_and_character,
)
from gradedlie.chevalley import build_algebra
from gradedlie.grading import z_grading_from_labels
from gradedlie.linalg import independent_subset
from gradedlie.quiver import QuiverDims
from gradedlie.rootsystem import LieType


def _cayley(dims):
    return cayley_pair(quiver_grading(QuiverDims(dims)))


def test_chain_111():
    cd = _cayley((1, 1, 1))
    assert cd.dim_c == 0
    assert cd.dim_v == 1
    report = verify_iso_and_character(cd)
    assert report.all_pass
    verdict = bracket_projection_test(cd)
    assert verdict.candidate and verdict.witness is None


def test_chain_111_v_spans_expected_line(sl3):
    # V is spanned by a Cartan direction proportional to diag(1, -2, 1)
    cd = _cayley((1, 1, 1))
    (v,) = cd.v_basis
    assert all(x == 0 for x in v[2:])
    # diag(t, -2t, t) in simple-coroot coordinates is (t, -t)
    assert v[0] == -v[1] != 0


def test_chain_222():
    cd = _cayley((2, 2, 2))
    assert cd.dim_c == 3
    assert cd.dim_v == 4
    report = verify_iso_and_character(cd)
    assert report.all_pass
    verdict = bracket_projection_test(cd)
    assert not verdict.candidate
    w = verdict.witness
    assert any(w.c_part) and any(w.v_part)


def test_hermitian_sl2():
    alg = build_algebra(LieType.parse("A1"))
    cd = cayley_pair(z_grading_from_labels(alg, [1]))
    assert cd.depth == 2
    assert cd.dim_c == 0
    assert cd.dim_v == 1
    assert bracket_projection_test(cd).candidate


def test_quaternionic_a2_candidate(sl3):
    cd = cayley_pair(z_grading_from_labels(sl3, [1, 1]))
    assert cd.dim_v == 1
    assert bracket_projection_test(cd).candidate
    assert verify_iso_and_character(cd).all_pass


def test_refuses_non_regular():
    with pytest.raises(ValueError):
        _cayley((2, 1))


@pytest.mark.parametrize("dims", [(1, 1), (1, 1, 1), (2, 2, 2), (1, 2, 1), (1, 3, 1)])
def test_dim_v_equals_lowest_piece(dims):
    cd = _cayley(dims)
    assert cd.dim_v == len(cd.pair.grading.piece(1 - cd.depth))


@pytest.mark.parametrize("dims", [(1, 1, 1), (2, 2, 2), (1, 2, 1)])
def test_c_orthogonal_to_h_and_disjoint_from_v(dims):
    cd = _cayley(dims)
    alg = cd.algebra
    for c in cd.c_basis:
        assert alg.killing_form(c, cd.triple.h) == 0
    basis = cd.c_basis + cd.v_basis
    assert len(independent_subset(basis)) == len(basis)


@pytest.mark.parametrize("dims", [(1, 1, 1), (2, 2, 2), (1, 2, 1)])
def test_intertwining(dims):
    assert verify_intertwining(_cayley(dims))


def test_centralizer_commutes_with_triple():
    cd = _cayley((2, 2, 2))
    alg = cd.algebra
    for c in cd.c_basis:
        for s in (cd.triple.h, cd.triple.e, cd.triple.f):
            assert all(x == 0 for x in alg.bracket(c, s))


def test_triple_uses_twice_zeta():
    cd = _cayley((1, 1, 1))
    assert cd.triple.h == tuple(2 * x for x in cd.pair.grading.zeta)


def test_scalar_stabilizer_order():
    assert scalar_stabilizer_order((1, 1, 1)) == 3
    assert scalar_stabilizer_order((2, 2, 2)) == 6
