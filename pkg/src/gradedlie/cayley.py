"""Centralizer and transported-subspace data for JM-regular gradings.

For a depth-m grading whose degree-1 pair is JM-regular, fix a triple
(h, e, f) with h = 2*zeta and e in the open orbit.  The data of interest is
the centralizer c of the triple inside g_0 and the subspace
V = ad(e)^{m-1}(g_{1-m}) of g_0.  Since every ad(h)-eigenvalue lies in
[2(1-m), 2(m-1)], each vector of g_{1-m} is a lowest-weight vector of a
(2m-1)-dimensional irreducible sl2-module, so V is exactly the degree-0 slice
of the span of those modules and ad(e)^{m-1} is injective on g_{1-m}.

The projection test decomposes [v, v'] for v, v' in V along
c + V + (Killing-orthogonal complement in g_0); the pair (c, V) is a
theta-pair candidate when every such bracket falls inside c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

from .chevalley import ChevalleyAlgebra
from .grading import ZGrading
from .linalg import RationalMatrix, Vector, independent_subset, rank, solve, vec
from .vinberg import Sl2Triple, VinbergPair, jm_regular, vinberg_pair


@dataclass
class CayleyData:
    pair: VinbergPair
    triple: Sl2Triple  # h = 2*zeta
    c_basis: List[Vector]
    v_basis: List[Vector]  # images ad(e)^{m-1} of the g_{1-m} basis
    depth: int

    @property
    def algebra(self) -> ChevalleyAlgebra:
        return self.pair.algebra

    @property
    def dim_c(self) -> int:
        return len(self.c_basis)

    @property
    def dim_v(self) -> int:
        return len(self.v_basis)


def cayley_pair(zg: ZGrading, seed: int = 0) -> CayleyData:
    alg = zg.algebra
    pair = vinberg_pair(zg)
    cert = jm_regular(pair, seed)
    if not cert.regular:
        raise ValueError("degree-1 pair is not JM-regular; no Cayley data")
    h = tuple(2 * x for x in zg.zeta)
    triple = Sl2Triple(h=h, e=cert.e, f=cert.f, s=alg.zero())
    triple.verify(alg)
    m = zg.depth
    g0 = [alg.from_sparse({i: Q(1)}) for i in zg.piece(0)]
    c_basis = alg.centralizer([triple.h, triple.e, triple.f], g0)
    low = [alg.from_sparse({i: Q(1)}) for i in zg.piece(1 - m)]
    v_basis = []
    for x in low:
        v = x
        for _ in range(m - 1):
            v = alg.bracket(triple.e, v)
        v_basis.append(v)
    if rank(RationalMatrix.from_rows([list(v) for v in v_basis])) != len(low):
        raise AssertionError("transport map is not injective on the lowest piece")
    # module-dimension bound: ad(e)^{2m-1} kills the lowest piece
    for x in low:
        v = x
        for _ in range(2 * m - 1):
            v = alg.bracket(triple.e, v)
        if any(v):
            raise AssertionError("sl2-module longer than 2m-1 detected")
    return CayleyData(pair=pair, triple=triple, c_basis=c_basis, v_basis=v_basis, depth=m)


@dataclass
class IsoCharacterReport:
    iso_rank: int
    iso_full: bool
    chi_values: List[Q]
    chi_vanishes: bool
    c_killing_h: List[Q]

    @property
    def all_pass(self) -> bool:
        return self.iso_full and self.chi_vanishes and all(x == 0 for x in self.c_killing_h)


def verify_iso_and_character(cd: CayleyData) -> IsoCharacterReport:
    """Transport-map invertibility, chi_T(c) = 0, and B(c, h) = 0 on c."""
    alg = cd.algebra
    low_dim = len(cd.pair.grading.piece(1 - cd.depth))
    r = rank(RationalMatrix.from_rows([list(v) for v in cd.v_basis])) if cd.v_basis else 0
    chi = [cd.pair.chi_t(c) for c in cd.c_basis]
    bh = [alg.killing_form(c, cd.triple.h) for c in cd.c_basis]
    return IsoCharacterReport(
        iso_rank=r,
        iso_full=(r == low_dim == len(cd.v_basis)),
        chi_values=chi,
        chi_vanishes=all(x == 0 for x in chi),
        c_killing_h=bh,
    )


def verify_intertwining(cd: CayleyData) -> bool:
    """ad(e)^{m-1}([c, x]) = [c, ad(e)^{m-1}(x)] for all c and lowest-piece x."""
    alg = cd.algebra
    zg = cd.pair.grading
    low = [alg.from_sparse({i: Q(1)}) for i in zg.piece(1 - cd.depth)]

    def transport(x):
        v = x
        for _ in range(cd.depth - 1):
            v = alg.bracket(cd.triple.e, v)
        return v

    for c in cd.c_basis:
        for x in low:
            if transport(alg.bracket(c, x)) != alg.bracket(c, transport(x)):
                return False
    return True


@dataclass
class BracketProjection:
    v_index: int
    v_prime_index: int
    c_part: Vector
    v_part: Vector
    rest_part: Vector

    @property
    def in_c(self) -> bool:
        return not any(self.v_part) and not any(self.rest_part)


@dataclass
class ThetaVerdict:
    candidate: bool
    witness: Optional[BracketProjection]
    projections: List[BracketProjection]


def bracket_projection_test(cd: CayleyData) -> ThetaVerdict:
    """Decompose every [v, v'] over c + V + orthogonal complement in g_0."""
    alg = cd.algebra
    basis = cd.c_basis + cd.v_basis
    if basis and len(independent_subset(basis)) != len(basis):
        raise AssertionError("c and V overlap")
    gram = RationalMatrix.from_rows(
        [[alg.killing_form(a, b) for b in basis] for a in basis]
    )
    projections = []
    witness = None
    for i in range(len(cd.v_basis)):
        for j in range(i + 1, len(cd.v_basis)):
            x = alg.bracket(cd.v_basis[i], cd.v_basis[j])
            if basis:
                rhs = vec([alg.killing_form(u, x) for u in basis])
                coeffs = solve(gram, rhs)
                if coeffs is None:
                    raise AssertionError("Killing form degenerate on c + V")
            else:
                coeffs = ()
            c_part = _combine(alg, coeffs[: cd.dim_c], cd.c_basis)
            v_part = _combine(alg, coeffs[cd.dim_c :], cd.v_basis)
            rest = tuple(
                Q(a) - b - c for a, b, c in zip(x, c_part, v_part)
            )
            proj = BracketProjection(i, j, c_part, v_part, rest)
            projections.append(proj)
            if witness is None and not proj.in_c:
                witness = proj
    return ThetaVerdict(candidate=witness is None, witness=witness, projections=projections)


def _combine(alg: ChevalleyAlgebra, coeffs: Sequence[Q], basis: Sequence[Vector]) -> Vector:
    out = [Q(0)] * alg.dim
    for c, b in zip(coeffs, basis):
        if c:
            for k, x in enumerate(b):
                if x:
                    out[k] += c * x
    return tuple(out)


def scalar_stabilizer_order(dims: Sequence[int]) -> int:
    """Order of the scalar-block stabilizer of the canonical chain element.

    Block-scalar determinant-1 matrices commuting with a chain of nonzero maps
    must use one common scalar lambda, so the group is the n-th roots of unity.
    """
    n = sum(dims)
    return n
