"""Graded current-algebra category: Ext data, partial orders, Ext-quivers.

Simples are pairs (dominant weight, grade).  Ext^1 between simples lives
only across a grade gap of one and is a hom-count against the adjoint
representation; the truncated category replaces the adjoint with its
exterior powers.  Interval-closed sets of simples yield finite quivers whose
arrows point from higher to lower grade.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import charring
from .errors import CapExceeded, InvalidInput, NotDominant
from .rootsys import RootSystem

DEFAULT_UPLUS_CAP = 6
DEFAULT_LOWER_SET_CAP = 100_000

ORDER_FULL = "full"
ORDER_PSI = "psi"


@dataclass(frozen=True, order=True)
class GradedSimple:
    weight: tuple
    grade: int

    def __post_init__(self):
        object.__setattr__(self, "weight", tuple(self.weight))
        if any(x < 0 for x in self.weight):
            raise NotDominant(f"{self.weight} is not dominant")
        if self.grade < 0:
            raise InvalidInput("grades are nonnegative")


@dataclass(frozen=True)
class GammaSet:
    elements: frozenset
    order_kind: str
    psi: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        if self.order_kind not in (ORDER_FULL, ORDER_PSI):
            raise InvalidInput(f"unknown order kind {self.order_kind!r}")
        if self.order_kind == ORDER_PSI and self.psi is None:
            raise InvalidInput("psi order needs the weight psi")
        if self.psi is not None:
            object.__setattr__(self, "psi", tuple(self.psi))

    def sorted_elements(self):
        return sorted(self.elements, key=lambda v: (v.grade, v.weight))


@dataclass(frozen=True)
class Quiver:
    vertices: frozenset
    arrows: tuple  # (source, target, multiplicity), source.grade = target.grade + 1

    def sorted_vertices(self):
        return sorted(self.vertices, key=lambda v: (v.grade, v.weight))

    def to_dot(self) -> str:
        verts = self.sorted_vertices()
        ids = {v: f"v{i}" for i, v in enumerate(verts)}
        lines = ["digraph quiver {"]
        for v in verts:
            label = f"({list(v.weight)}, {v.grade})"
            lines.append(f'  {ids[v]} [label="{label}"];')
        for src, tgt, mult in sorted(
            self.arrows, key=lambda a: (a[0].grade, a[0].weight, a[1].weight)
        ):
            lines.append(f'  {ids[src]} -> {ids[tgt]} [label={mult}];')
        lines.append("}")
        return "\n".join(lines)


def _partitions(k: int):
    """Partitions of k as multiplicity maps part -> count."""
    def rec(remaining, largest):
        if remaining == 0:
            yield {}
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                out = dict(rest)
                out[part] = out.get(part, 0) + 1
                yield out
    return rec(k, k)


def u_plus_graded_character(rs: RootSystem, k: int,
                            cap: int = DEFAULT_UPLUS_CAP) -> charring.FormalCharacter:
    """Formal character of the degree-k piece of U(g[t]_+).

    By PBW this is the degree-k part of the symmetric algebra on copies of
    g in each positive t-degree: a sum over partitions of k of products of
    symmetric powers of the adjoint character.
    """
    if k > cap:
        raise CapExceeded(f"graded degree {k} exceeds cap {cap}")
    cache = getattr(rs, "_uplus_cache", None)
    if cache is None:
        cache = {}
        rs._uplus_cache = cache
    hit = cache.get(k)
    if hit is not None:
        return hit
    adj = charring.adjoint_character(rs)
    total = charring.FormalCharacter()
    for partition in _partitions(k):
        term = charring.FormalCharacter({(0,) * rs.rank: 1})
        for _part, count in sorted(partition.items()):
            term = term * charring.sym_power(count, adj)
        total = total + term
    cache[k] = total
    return total


def u_plus_graded_char(rs: RootSystem, k: int,
                       cap: int = DEFAULT_UPLUS_CAP) -> charring.DominantDecomposition:
    """Irreducible multiplicities of the degree-k piece of U(g[t]_+)."""
    return charring.decompose_character(rs, u_plus_graded_character(rs, k, cap=cap))


def projective_mult(rs: RootSystem, p: GradedSimple, s: GradedSimple,
                    cap: int = DEFAULT_UPLUS_CAP) -> int:
    """[P(p) : V(s)], the graded multiplicity of a simple inside a projective."""
    k = s.grade - p.grade
    if k < 0:
        return 0
    factor = u_plus_graded_character(rs, k, cap=cap)
    return charring.klimyk_multiplicity(rs, factor, p.weight, s.weight)


def ext1_graded(rs: RootSystem, a: GradedSimple, b: GradedSimple) -> int:
    """dim Ext^1 between graded simples; zero unless b sits one grade above a."""
    if b.grade != a.grade + 1:
        return 0
    return charring.klimyk_multiplicity(
        rs, charring.adjoint_character(rs), a.weight, b.weight
    )


def ext_j_truncated(rs: RootSystem, a: GradedSimple, b: GradedSimple, j: int) -> int:
    """dim Ext^j in the t^2-truncated category; supported only at j = grade gap."""
    if j < 0 or j != b.grade - a.grade:
        return 0
    dim_g = rs.rank + 2 * len(rs.positive_roots)
    if j > dim_g:
        return 0
    cache = getattr(rs, "_ext_power_cache", None)
    if cache is None:
        cache = {}
        rs._ext_power_cache = cache
    factor = cache.get(j)
    if factor is None:
        factor = charring.ext_power(j, charring.adjoint_character(rs), max_k=dim_g)
        cache[j] = factor
    return charring.klimyk_multiplicity(rs, factor, a.weight, b.weight)


def covers_full(rs: RootSystem, a: GradedSimple, b: GradedSimple) -> bool:
    """Cover relation of the coarse order: one grade up, weight drop in Phi or 0."""
    if b.grade != a.grade + 1:
        return False
    diff = tuple(x - y for x, y in zip(a.weight, b.weight))
    if not any(diff):
        return True
    rc = rs.weight_to_root(diff)
    if any(x.denominator != 1 for x in rc):
        return False
    return rs.is_root(tuple(int(x) for x in rc))


def phi_psi(rs: RootSystem, psi) -> frozenset:
    """Positive roots maximizing the pairing with psi over the whole root system.

    For types other than A and C, a psi proportional to the fundamental
    weight at the node i0 adjacent to the highest root keeps both theta and
    theta - alpha_{i0}: the refined order at that node uses the pair, not
    the bare maximiser.
    """
    psi = tuple(psi)
    vals = [rs.pair_with_root(psi, t) for t in range(len(rs.positive_roots))]
    top = max(max(vals), max(-v for v in vals))
    argmax = frozenset(
        rs.positive_roots[t] for t, v in enumerate(vals) if v == top
    )
    if rs.cartan_type.family not in ("A", "C") and argmax == {rs.highest_root}:
        i0 = _adjacent_node(rs)
        if psi[i0] > 0 and all(x == 0 for j, x in enumerate(psi) if j != i0):
            below = tuple(
                x - int(j == i0) for j, x in enumerate(rs.highest_root)
            )
            assert rs.is_root(below)
            return frozenset({rs.highest_root, below})
    return argmax


def _adjacent_node(rs: RootSystem) -> int:
    """The unique i with theta - alpha_i a positive root (families B,D,E,F,G)."""
    hits = []
    for i in range(rs.rank):
        cand = tuple(x - int(j == i) for j, x in enumerate(rs.highest_root))
        if rs.is_root(cand):
            hits.append(i)
    assert len(hits) == 1, hits
    return hits[0]


def leq_psi(rs: RootSystem, psi, a: GradedSimple, b: GradedSimple) -> bool:
    """a <= b in the refined order: the weight drop from a to b is a sum of
    (b.grade - a.grade) roots from phi_psi."""
    gap = b.grade - a.grade
    if gap < 0:
        return False
    target = tuple(x - y for x, y in zip(a.weight, b.weight))
    roots = [rs.root_to_weight(r) for r in sorted(phi_psi(rs, psi))]
    return _is_counted_combination(target, roots, gap)


def _is_counted_combination(target, roots, count) -> bool:
    if count == 0:
        return not any(target)
    if not roots:
        return False
    head, tail = roots[0], roots[1:]
    for n in range(count + 1):
        rest = tuple(t - n * h for t, h in zip(target, head))
        if _is_counted_combination(rest, tail, count - n):
            return True
    return False


def lower_set_psi(rs: RootSystem, psi, top: GradedSimple,
                  cap: int = DEFAULT_LOWER_SET_CAP) -> GammaSet:
    """Down-set of a simple under the refined order, kept inside P+ x N.

    Weight sums may pass through non-dominant lattice points; only the
    resulting elements are required to be dominant.
    """
    psi = tuple(psi)
    roots = [rs.root_to_weight(r) for r in sorted(phi_psi(rs, psi))]
    found = {top}
    level = {top.weight}
    for grade in range(top.grade - 1, -1, -1):
        level = {
            tuple(w + r for w, r in zip(weight, root))
            for weight in level for root in roots
        }
        for weight in level:
            if all(x >= 0 for x in weight):
                found.add(GradedSimple(weight, grade))
        if len(found) + len(level) > cap:
            raise CapExceeded(f"lower set exploration exceeds cap {cap}")
    return GammaSet(frozenset(found), ORDER_PSI, psi)


def _cover_deltas(rs: RootSystem, g: GammaSet):
    """Weight drops of a single cover step for the order carried by g."""
    if g.order_kind == ORDER_FULL:
        deltas = [rs.root_to_weight(r) for r in rs.all_roots()]
        deltas.append((0,) * rs.rank)
        return deltas
    return [rs.root_to_weight(r) for r in sorted(phi_psi(rs, g.psi))]


def interval_closed_check(rs: RootSystem, g: GammaSet) -> bool:
    """True iff every element strictly between two members of g is in g.

    Chains of the coarse order run inside P+ x N, so intermediate sums are
    pruned to dominant weights at every step; the refined order only
    requires its endpoints to be dominant.
    """
    deltas = _cover_deltas(rs, g)
    prune_inner = g.order_kind == ORDER_FULL
    elements = g.sorted_elements()
    members = g.elements
    for low in elements:
        for high in elements:
            gap = high.grade - low.grade
            if gap < 2:
                continue
            up = [{low.weight}]
            for _ in range(gap):
                step = {
                    tuple(w - d for w, d in zip(weight, delta))
                    for weight in up[-1] for delta in deltas
                }
                if prune_inner:
                    step = {w for w in step if all(x >= 0 for x in w)}
                up.append(step)
            down = [{high.weight}]
            for _ in range(gap):
                step = {
                    tuple(w + d for w, d in zip(weight, delta))
                    for weight in down[-1] for delta in deltas
                }
                if prune_inner:
                    step = {w for w in step if all(x >= 0 for x in w)}
                down.append(step)
            for k in range(1, gap):
                between = up[k] & down[gap - k]
                for weight in between:
                    if not all(x >= 0 for x in weight):
                        continue
                    if GradedSimple(weight, low.grade + k) not in members:
                        return False
    return True


def build_quiver(rs: RootSystem, g: GammaSet) -> Quiver:
    """Ext-quiver of an interval-closed set: arrows run one grade down."""
    if not interval_closed_check(rs, g):
        raise InvalidInput("the set is not interval closed")
    arrows = []
    elements = g.sorted_elements()
    for src in elements:
        for tgt in elements:
            if src.grade != tgt.grade + 1:
                continue
            mult = ext1_graded(rs, tgt, src)
            if mult:
                arrows.append((src, tgt, mult))
    arrows.sort(key=lambda a: (a[0].grade, a[0].weight, a[1].weight))
    return Quiver(g.elements, tuple(arrows))
