"""Untwisted affine root data and truncated Weyl-Kac character computation.

Affine weights are triples (finite part, level, delta coefficient).  The
extra simple root is alpha_0 = -theta + delta; the affine Weyl vector
rho_hat pairs to 1 with every coroot, so its level is the dual Coxeter
number.  Characters of integrable highest-weight modules are computed as an
exact graded division of truncated alternating series, all terms indexed by
their drop from the highest weight in simple affine-root coordinates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, InvalidInput, NotDominant
from .rootsys import RootSystem

DEFAULT_DEPTH_CAP = 12


@dataclass(frozen=True)
class AffineWeight:
    finite: tuple
    level: int
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(Fraction(x) for x in self.finite))
        object.__setattr__(self, "delta", Fraction(self.delta))

    def add(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(
            tuple(a + b for a, b in zip(self.finite, other.finite)),
            self.level + other.level,
            self.delta + other.delta,
        )

    def sub(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(
            tuple(a - b for a, b in zip(self.finite, other.finite)),
            self.level - other.level,
            self.delta - other.delta,
        )

    def scale(self, c) -> "AffineWeight":
        c = Fraction(c)
        level = c * self.level
        if level.denominator != 1:
            raise InvalidInput("scaling would produce a fractional level")
        return AffineWeight(
            tuple(c * x for x in self.finite), int(level), c * self.delta
        )


def level_of(lam: AffineWeight) -> int:
    """Eigenvalue of the canonical central element on V(lam)."""
    return lam.level


def from_finite(rs: RootSystem, weight, level: int = 0, delta=0) -> AffineWeight:
    return AffineWeight(tuple(Fraction(x) for x in weight), level, Fraction(delta))


def lambda0(rs: RootSystem, k: int = 1) -> AffineWeight:
    return AffineWeight((Fraction(0),) * rs.rank, k, Fraction(0))


def delta_weight(rs: RootSystem) -> AffineWeight:
    return AffineWeight((Fraction(0),) * rs.rank, 0, Fraction(1))


def _theta_index(rs: RootSystem) -> int:
    return rs.positive_roots.index(rs.highest_root)


def pair_coroot(rs: RootSystem, w: AffineWeight, i: int) -> Fraction:
    """w(h_i) for 0 <= i <= rank; h_0 = c - h_theta."""
    if i == 0:
        return w.level - rs.pair_with_root(w.finite, _theta_index(rs))
    return w.finite[i - 1]


def affine_simple_roots(rs: RootSystem) -> list:
    """alpha_0 = -theta + delta followed by the embedded finite simple roots."""
    theta_fund = rs.highest_root_fund
    alpha0 = AffineWeight(tuple(-x for x in theta_fund), 0, Fraction(1))
    out = [alpha0]
    for i in range(rs.rank):
        out.append(AffineWeight(rs.cartan[i], 0, Fraction(0)))
    return out


def rho_hat(rs: RootSystem) -> AffineWeight:
    """The affine Weyl vector: value 1 on every simple coroot, no delta part."""
    theta_pair = rs.pair_with_root(rs.rho, _theta_index(rs))
    assert theta_pair.denominator == 1
    return AffineWeight(tuple(Fraction(1) for _ in range(rs.rank)),
                        1 + int(theta_pair), Fraction(0))


def is_dominant_integral(rs: RootSystem, lam: AffineWeight) -> bool:
    for i in range(rs.rank + 1):
        value = pair_coroot(rs, lam, i)
        if value.denominator != 1 or value < 0:
            return False
    return True


def _reflect(rs: RootSystem, roots, w: AffineWeight, i: int):
    """Apply s_i; returns (image, coefficient w(h_i))."""
    m = pair_coroot(rs, w, i)
    if m == 0:
        return w, m
    alpha = roots[i]
    return w.sub(alpha.scale(m)), m


def _orbit_drops(rs: RootSystem, top: AffineWeight, depth: int) -> dict:
    """BFS of the affine Weyl orbit of a regular dominant weight.

    Returns {drop vector in simple affine-root coordinates: sign}; drops are
    bounded by total height <= depth.  Downward reflection steps strictly
    increase the drop height, so pruning by height is exact.
    """
    roots = affine_simple_roots(rs)
    n = rs.rank
    zero = (0,) * (n + 1)
    seen = {zero: 1}
    queue = deque([(zero, top, 1)])
    while queue:
        drop, w, sign = queue.popleft()
        ht = sum(drop)
        for i in range(n + 1):
            m = pair_coroot(rs, w, i)
            assert m != 0, "orbit of a regular weight hit a wall"
            if m < 0 or ht + m > depth:
                continue
            new_drop = tuple(d + (m if j == i else 0) for j, d in enumerate(drop))
            if new_drop in seen:
                continue
            image = w.sub(roots[i].scale(m))
            seen[new_drop] = -sign
            queue.append((new_drop, image, -sign))
    return seen


def affine_weyl_ball(rs: RootSystem, depth: int, cap: int = DEFAULT_DEPTH_CAP) -> list:
    """All (w(rho_hat) - rho_hat, sign) with drop height at most depth."""
    if depth > cap:
        raise CapExceeded(f"depth {depth} exceeds cap {cap}")
    roots = affine_simple_roots(rs)
    out = []
    for drop, sign in sorted(_orbit_drops(rs, rho_hat(rs), depth).items()):
        shift = AffineWeight((Fraction(0),) * rs.rank, 0, Fraction(0))
        for c, alpha in zip(drop, roots):
            if c:
                shift = shift.sub(alpha.scale(c))
        out.append((shift, sign))
    return out


@dataclass
class TruncatedAffineSeries:
    """Depth-bounded formal sum over affine weights below a top weight."""

    terms: dict
    depth_bound: int
    top: AffineWeight

    def coefficient(self, w: AffineWeight) -> int:
        return self.terms.get(w, 0)

    def drop_vector(self, rs: RootSystem, w: AffineWeight):
        """top - w in simple affine-root coordinates, or None if outside."""
        c0 = self.top.delta - w.delta
        if c0.denominator != 1:
            return None
        theta = rs.highest_root_fund
        diff = tuple(
            t - x + c0 * th for t, x, th in zip(self.top.finite, w.finite, theta)
        )
        rest = rs.weight_to_root(diff)
        if any(x.denominator != 1 or x < 0 for x in rest) or c0 < 0:
            return None
        if w.level != self.top.level:
            return None
        return (int(c0),) + tuple(int(x) for x in rest)

    def in_window(self, rs: RootSystem, w: AffineWeight) -> bool:
        drop = self.drop_vector(rs, w)
        return drop is not None and sum(drop) <= self.depth_bound


def _weight_from_drop(rs: RootSystem, top: AffineWeight, drop) -> AffineWeight:
    theta = rs.highest_root_fund
    c0 = drop[0]
    finite = list(top.finite)
    for i, x in enumerate(theta):
        finite[i] += c0 * x
    for j in range(rs.rank):
        cj = drop[j + 1]
        if cj:
            for i in range(rs.rank):
                finite[i] -= cj * rs.cartan[j][i]
    return AffineWeight(tuple(finite), top.level, top.delta - c0)


def truncated_numerator(rs: RootSystem, lam: AffineWeight, depth: int,
                        cap: int = DEFAULT_DEPTH_CAP) -> TruncatedAffineSeries:
    """Alternating affine Weyl sum over e(w(lam + rho_hat)), within depth."""
    if depth > cap:
        raise CapExceeded(f"depth {depth} exceeds cap {cap}")
    if not is_dominant_integral(rs, lam):
        raise NotDominant(f"{lam} is not affine dominant integral")
    top = lam.add(rho_hat(rs))
    terms = {
        _weight_from_drop(rs, top, drop): sign
        for drop, sign in _orbit_drops(rs, top, depth).items()
    }
    return TruncatedAffineSeries(terms, depth, top)


def truncated_character(rs: RootSystem, lam: AffineWeight, depth: int,
                        cap: int = DEFAULT_DEPTH_CAP) -> TruncatedAffineSeries:
    """Character of the integrable module V(lam), exact up to the given depth.

    Solves denominator * X = numerator(lam) degree by degree in the drop
    lattice; the denominator is the numerator of the zero weight.
    """
    if depth > cap:
        raise CapExceeded(f"depth {depth} exceeds cap {cap}")
    if not is_dominant_integral(rs, lam):
        raise NotDominant(f"{lam} is not affine dominant integral")
    num = _orbit_drops(rs, lam.add(rho_hat(rs)), depth)
    den = _orbit_drops(rs, rho_hat(rs), depth)
    den_items = [(drop, sign) for drop, sign in den.items() if any(drop)]

    n = rs.rank
    cells = _cells_by_height(n + 1, depth)
    x: dict = {}
    for cell in cells:
        value = num.get(cell, 0)
        for drop, sign in den_items:
            rest = tuple(c - d for c, d in zip(cell, drop))
            if any(r < 0 for r in rest):
                continue
            prev = x.get(rest)
            if prev:
                value -= sign * prev
        if value:
            x[cell] = value
    assert x.get((0,) * (n + 1)) == 1

    terms = {
        _weight_from_drop(rs, lam, drop): coeff for drop, coeff in x.items()
    }
    return TruncatedAffineSeries(terms, depth, lam)


def _cells_by_height(dims: int, depth: int):
    """All nonnegative integer vectors of the given length with sum <= depth,
    ordered by total height."""
    def rec(remaining_dims, budget):
        if remaining_dims == 1:
            for v in range(budget + 1):
                yield (v,)
            return
        for v in range(budget + 1):
            for rest in rec(remaining_dims - 1, budget - v):
                yield (v,) + rest
    return sorted(rec(dims, depth), key=lambda c: (sum(c), c))
