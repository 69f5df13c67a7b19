"""Finite-dimensional irreducible loop-algebra modules as point-weighted data.

An irreducible is a finite map from nonzero rational evaluation points to
nonzero dominant weights.  This module computes the P/Q-valued spectral
character (the complete block invariant), Ext^1 dimensions between
irreducibles, the splitting order of loop modules, and hom-counts from
global Weyl modules.

Points live in Q^x rather than C^x: every formula used here (equality,
powers, distinctness) only needs a field, and exact arithmetic wins.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from . import charring
from .errors import InvalidInput, NotDominant
from .rootsys import RootSystem


def as_point(value) -> Fraction:
    p = Fraction(value)
    if p == 0:
        raise InvalidInput("evaluation points must be nonzero")
    return p


class LoopIrrep:
    """Finite support map: evaluation point -> nonzero dominant weight."""

    __slots__ = ("support",)

    def __init__(self, support=()):
        items = support.items() if isinstance(support, dict) else support
        self.support = {}
        for point, weight in items:
            point = as_point(point)
            weight = tuple(weight)
            if point in self.support:
                raise InvalidInput(f"repeated evaluation point {point}")
            if any(x < 0 for x in weight):
                raise NotDominant(f"{weight} is not dominant")
            if not any(weight):
                raise InvalidInput("weights in a loop irreducible must be nonzero")
            self.support[point] = weight

    def __eq__(self, other):
        return isinstance(other, LoopIrrep) and self.support == other.support

    def __repr__(self):
        return f"LoopIrrep({dict(sorted(self.support.items()))})"

    def weight_at(self, point, rank: int):
        return self.support.get(point, (0,) * rank)

    def weight_sum(self, rank: int):
        total = (0,) * rank
        for w in self.support.values():
            total = tuple(a + b for a, b in zip(total, w))
        return total


class FundamentalGroup:
    """P/Q for a root system, in Smith normal form coordinates.

    Computed from the transposed Cartan matrix: cosets are canonical tuples
    c with 0 <= c_i < d_i, the d_i being the invariant factors.
    """

    def __init__(self, rs: RootSystem):
        n = rs.rank
        m = Matrix([[rs.cartan[j][i] for j in range(n)] for i in range(n)])
        d, s, _t = smith_normal_decomp(m)
        self.invariants = tuple(int(d[i, i]) for i in range(n))
        self._s = tuple(tuple(int(s[i, j]) for j in range(n)) for i in range(n))
        self.order = 1
        for di in self.invariants:
            self.order *= di
        assert self.order == abs(int(m.det()))

    def element(self, weight) -> tuple:
        """Canonical representative of weight + Q."""
        n = len(self.invariants)
        mapped = (sum(self._s[i][j] * weight[j] for j in range(n)) for i in range(n))
        return tuple(x % d for x, d in zip(mapped, self.invariants))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariants))

    def is_zero(self, a: tuple) -> bool:
        return not any(a)


def _fundamental_group(rs: RootSystem) -> FundamentalGroup:
    group = getattr(rs, "_fundamental_group", None)
    if group is None:
        group = FundamentalGroup(rs)
        rs._fundamental_group = group
    return group


def spectral_character(rs: RootSystem, v: LoopIrrep) -> dict:
    """Map point -> nonzero class in P/Q of the weight sitting there."""
    group = _fundamental_group(rs)
    out = {}
    for point, weight in v.support.items():
        cls = group.element(weight)
        if not group.is_zero(cls):
            out[point] = cls
    return out


def same_block(rs: RootSystem, v: LoopIrrep, w: LoopIrrep) -> bool:
    """Two irreducibles are linked iff their spectral characters agree."""
    return spectral_character(rs, v) == spectral_character(rs, w)


def hom_adjoint_mult(rs: RootSystem, lam, mu,
                     max_dim: int = charring.DEFAULT_DIM_CAP) -> int:
    """Multiplicity of V(mu) in g (x) V(lam)."""
    lam, mu = tuple(lam), tuple(mu)
    for w in (lam, mu):
        if not rs.is_dominant(w):
            raise NotDominant(f"{w} is not dominant")
    if charring.dim_irreducible(rs, lam) * (rs.rank + 2 * len(rs.positive_roots)) > max_dim:
        raise charring.CapExceeded("adjoint tensor product exceeds dimension cap")
    return charring.klimyk_multiplicity(rs, charring.adjoint_character(rs), lam, mu)


def ext1_dim(rs: RootSystem, v: LoopIrrep, w: LoopIrrep) -> int:
    """dim Ext^1 between two irreducible loop modules.

    Nonzero contributions only come from points where the two supports are
    allowed to differ; if they differ at two or more points the Ext group
    vanishes.
    """
    points = sorted(set(v.support) | set(w.support))
    diff = [a for a in points if v.support.get(a) != w.support.get(a)]
    if len(diff) >= 2:
        return 0
    n = rs.rank
    total = 0
    for a in points:
        if all(v.support.get(b) == w.support.get(b) for b in points if b != a):
            total += hom_adjoint_mult(rs, v.weight_at(a, n), w.weight_at(a, n))
    return total


def tensor_at_point(rs: RootSystem, lam, mu,
                    max_dim: int = charring.DEFAULT_DIM_CAP) -> charring.DominantDecomposition:
    """Same-point tensor products are completely reducible; decompose them."""
    return charring.tensor_decompose(rs, lam, mu, max_dim=max_dim)


def loop_splitting_order(rs: RootSystem, parts) -> int:
    """Largest r >= 1 such that sum_s lambda_s a_s^j = 0 for all 1 <= j < r."""
    seen = set()
    cleaned = []
    for weight, point in parts:
        point = as_point(point)
        weight = tuple(weight)
        if not rs.is_dominant(weight):
            raise NotDominant(f"{weight} is not dominant")
        if point in seen:
            raise InvalidInput(f"repeated evaluation point {point}")
        seen.add(point)
        cleaned.append((weight, point))
    nonzero = sum(1 for weight, _ in cleaned if any(weight))
    if nonzero == 0:
        raise InvalidInput("splitting order needs at least one nonzero weight")
    n = rs.rank
    r = 1
    while True:
        total = [Fraction(0)] * n
        for weight, point in cleaned:
            scale = point ** r
            for i in range(n):
                total[i] += weight[i] * scale
        if any(total):
            break
        r += 1
        assert r <= nonzero, "splitting order exceeded the Vandermonde bound"
    return r


def weyl_quotient_count(rs: RootSystem, lam, v: LoopIrrep) -> int:
    """1 iff the global Weyl module W(lam) surjects onto v, i.e. weights sum to lam."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    return 1 if v.weight_sum(rs.rank) == lam else 0
