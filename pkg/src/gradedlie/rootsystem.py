"""Root systems of the simple complex Lie algebras.

Roots are stored as integer coordinate vectors in the simple-root basis,
ordered by Bourbaki numbering of the simple roots.  The invariant form on the
root lattice is normalised so that the highest root has squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Dict, List, Tuple

Root = Tuple[int, ...]

FAMILIES = "ABCDEFG"

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in FAMILIES:
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(text[0].upper(), int(text[1:]))


def cartan_matrix(t: LieType) -> List[List[int]]:
    """Cartan matrix with entries ``c[i][j] = <alpha_i, alpha_j^vee>``."""
    r = t.rank
    c = [[2 * int(i == j) for j in range(r)] for i in range(r)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if t.family == "A":
        for i in range(r - 1):
            bond(i, i + 1)
    elif t.family == "B":
        # alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 2, r - 1, -2, -1)
    elif t.family == "C":
        # alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 2, r - 1, -1, -2)
    elif t.family == "D":
        for i in range(r - 3):
            bond(i, i + 1)
        bond(r - 3, r - 2)
        bond(r - 3, r - 1)
    elif t.family == "E":
        # Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...
        chain = [0] + list(range(2, r))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif t.family == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif t.family == "G":
        # alpha_1 short, alpha_2 long
        bond(0, 1, -1, -3)
    return c


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: Tuple[Tuple[int, ...], ...]
    roots: Tuple[Root, ...]
    positive_roots: Tuple[Root, ...]
    form_star: Tuple[Tuple[Q, ...], ...]  # B* on simple roots, highest root norm 2
    highest_root: Root
    affine_marks: Tuple[int, ...]  # (n_0, n_1, ..., n_r) with n_0 = 1

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def dim_algebra(self) -> int:
        return self.rank + len(self.roots)

    def is_root(self, v: Root) -> bool:
        return v in self._root_set

    @property
    def _root_set(self):
        return set(self.roots)

    def pairing(self, alpha: Root, j: int) -> int:
        """Integer pairing <alpha, alpha_j^vee>."""
        return sum(alpha[i] * self.cartan[i][j] for i in range(self.rank))

    def form_value(self, alpha: Root, beta: Root) -> Q:
        """B*(alpha, beta) for lattice vectors in simple-root coordinates."""
        r = self.rank
        return sum(
            (Q(alpha[i]) * beta[j] * self.form_star[i][j] for i in range(r) for j in range(r)),
            Q(0),
        )

    def norm(self, alpha: Root) -> Q:
        return self.form_value(alpha, alpha)

    def coroot_coefficients(self, alpha: Root) -> Tuple[Q, ...]:
        """Coefficients of alpha^vee in the simple coroot basis (integral for roots)."""
        na = self.norm(alpha)
        return tuple(Q(alpha[i]) * self.form_star[i][i] / na for i in range(self.rank))

    def height(self, alpha: Root) -> int:
        return sum(alpha)


def _reflection_closure(cartan: List[List[int]], r: int) -> List[Root]:
    simple = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for alpha in frontier:
            for j in range(r):
                p = sum(alpha[i] * cartan[i][j] for i in range(r))
                refl = tuple(
                    alpha[i] - p * int(i == j) for i in range(r)
                )
                if refl not in roots:
                    roots.add(refl)
                    new.append(refl)
        frontier = new
    return sorted(roots)


def _symmetrizer(cartan: List[List[int]], r: int) -> List[Q]:
    """d_i with d_j * c[i][j] = d_i * c[j][i], connected propagation from node 0."""
    d: List[Q] = [Q(0)] * r
    d[0] = Q(1)
    pending = [0]
    seen = {0}
    while pending:
        i = pending.pop()
        for j in range(r):
            if i != j and cartan[i][j] != 0 and j not in seen:
                # d_i c[j][i] = d_j c[i][j]
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                seen.add(j)
                pending.append(j)
    return d


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """Generate the full root system by reflection closure from the simple roots."""
    r = t.rank
    cartan = cartan_matrix(t)
    roots = _reflection_closure(cartan, r)
    positive = sorted(
        (a for a in roots if sum(a) > 0), key=lambda a: (sum(a), a)
    )
    if 2 * len(positive) != len(roots):
        raise AssertionError("root system not closed under negation")

    # Highest root: the unique root beta with beta + alpha_k never a root.
    root_set = set(roots)
    candidates = [
        b
        for b in positive
        if all(
            tuple(b[i] + int(i == k) for i in range(r)) not in root_set
            for k in range(r)
        )
    ]
    if len(candidates) != 1:
        raise AssertionError("highest root is not unique")
    highest = candidates[0]

    # Invariant form from the symmetrised Cartan matrix, rescaled so the
    # highest root has norm 2:  (alpha_i, alpha_j) = d_j c[i][j].
    d = _symmetrizer(cartan, r)
    form = [[d[j] * cartan[i][j] for j in range(r)] for i in range(r)]
    hnorm = sum(
        (Q(highest[i]) * highest[j] * form[i][j] for i in range(r) for j in range(r)),
        Q(0),
    )
    scale = Q(2) / hnorm
    form = [[x * scale for x in row] for row in form]

    return RootSystem(
        lie_type=t,
        cartan=tuple(tuple(row) for row in cartan),
        roots=tuple(roots),
        positive_roots=tuple(positive),
        form_star=tuple(tuple(row) for row in form),
        highest_root=highest,
        affine_marks=(1,) + highest,
    )


ROOT_COUNTS = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
    "E": lambda r: {6: 72, 7: 126, 8: 240}[r],
    "F": lambda r: 48,
    "G": lambda r: 12,
}


def classical_root_count(t: LieType) -> int:
    return ROOT_COUNTS[t.family](t.rank)


def affine_cartan_matrix(rs: RootSystem) -> List[List[int]]:
    """Cartan matrix on nodes 0..r with alpha_0 = -highest root."""
    r = rs.rank
    alpha0 = tuple(-x for x in rs.highest_root)
    nodes = [alpha0] + [tuple(int(i == j) for i in range(r)) for j in range(r)]
    out = []
    for a in nodes:
        row = []
        for b in nodes:
            # <a, b^vee> = 2 B*(a,b) / B*(b,b)
            row.append(int(2 * rs.form_value(a, b) / rs.norm(b)))
        out.append(row)
    return out
