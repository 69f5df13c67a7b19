"""Finite simple root systems with exact integer/rational arithmetic.

Weights are tuples of integers in the fundamental-weight basis, roots are
tuples of integers in the simple-root basis.  The invariant bilinear form is
normalised so that the highest root has squared length 2.  No floating point
is used anywhere in this module.

Convention: ``cartan[i][j] == 2(a_i, a_j)/(a_j, a_j)``, i.e. row ``i`` of the
Cartan matrix is the simple root ``a_i`` written in fundamental-weight
coordinates.  For G2 the first simple root is the long one, so the highest
root is ``2a_1 + 3a_2``; this matches the labelling used by the quiver
machinery in :mod:`lieloop.gradedcat`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, InvalidCartanType, NotDominant

DEFAULT_ORBIT_CAP = 1_000_000

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_RANGE.get(self.family)
        if lo_hi is None:
            raise InvalidCartanType(f"unknown family {self.family!r}")
        lo, hi = lo_hi
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidCartanType(
                f"rank {self.rank} not admissible for family {self.family}"
            )

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"([A-G])(\d+)", text.strip())
        if not m:
            raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _cartan_matrix(ct: CartanType) -> list[list[int]]:
    n = ct.rank
    fam = ct.family
    # Laced edges of the Dynkin diagram (0-indexed).
    if fam == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif fam == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    else:
        edges = [(i, i + 1) for i in range(n - 1)]
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    # Multiple edges: c[i][j] = 2(a_i,a_j)/(a_j,a_j), so the entry in the
    # row of the long root / column of the short root picks up the ratio.
    if fam == "B":  # a_n short
        c[n - 2][n - 1] = -2
    elif fam == "C":  # a_n long
        c[n - 1][n - 2] = -2
    elif fam == "F":  # a_1, a_2 long; a_3, a_4 short
        c[1][2] = -2
    elif fam == "G":  # a_1 long
        c[0][1] = -3
    return c


def _vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _invert(matrix):
    """Exact inverse of a small rational matrix by Gauss-Jordan."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class RootSystem:
    """Root data for one simple type; immutable after construction."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        n = cartan_type.rank
        self.rank = n
        self.cartan = tuple(tuple(row) for row in _cartan_matrix(cartan_type))

        self.positive_roots = self._generate_positive_roots()
        self._root_set = frozenset(self.positive_roots) | frozenset(
            tuple(-x for x in r) for r in self.positive_roots
        )

        self.highest_root = self._find_highest_root()

        # Symmetrizers d_i = (a_i,a_i)/2 up to overall scale, by propagating
        # d_j/d_i = c[j][i]/c[i][j] across Dynkin edges.
        d = [Fraction(0)] * n
        d[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if d[j] == 0 and self.cartan[i][j] != 0 and i != j:
                    d[j] = d[i] * Fraction(self.cartan[j][i], self.cartan[i][j])
                    todo.append(j)
        form = [[Fraction(self.cartan[i][j]) * d[j] for j in range(n)] for i in range(n)]
        theta_sq = self._pairing(form, self.highest_root, self.highest_root)
        scale = Fraction(2) / theta_sq
        self.form = tuple(tuple(scale * x for x in row) for row in form)

        self.fund_to_root = tuple(
            tuple(row) for row in _invert([[self.cartan[j][i] for j in range(n)] for i in range(n)])
        )
        # Gram matrix of the form in fundamental-weight coordinates.
        r = self.fund_to_root
        g = [[sum(r[k][i] * self.form[k][l] * r[l][j] for k in range(n) for l in range(n))
              for j in range(n)] for i in range(n)]
        self.weight_gram = tuple(tuple(row) for row in g)

        self.rho = (1,) * n
        half_sum = [Fraction(0)] * n
        for root in self.positive_roots:
            for i, x in enumerate(root):
                half_sum[i] += Fraction(x, 2)
        assert self.weight_to_root(self.rho) == tuple(half_sum), \
            "rho as sum of fundamental weights disagrees with half-sum of positive roots"

        # Per-root data used in hot loops: fundamental coordinates, squared
        # length and the vector f with (mu, root) = dot(mu, f).
        self.roots_fund = tuple(self.root_to_weight(r) for r in self.positive_roots)
        self.root_norms = tuple(
            self._pairing(self.form, r, r) for r in self.positive_roots
        )
        self._root_pair_vecs = tuple(self._pair_vector(r) for r in self.positive_roots)
        self.highest_root_fund = self.root_to_weight(self.highest_root)
        self._dominant_cache: dict[tuple, tuple] = {}

    # -- construction helpers ------------------------------------------------

    def _generate_positive_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for root in frontier:
                for j in range(n):
                    pair = sum(root[i] * self.cartan[i][j] for i in range(n))
                    if pair >= 0:
                        continue
                    refl = list(root)
                    refl[j] -= pair
                    refl = tuple(refl)
                    if refl not in roots:
                        roots.add(refl)
                        new.append(refl)
            frontier = new
        assert all(all(x >= 0 for x in r) for r in roots)
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def _find_highest_root(self):
        best = max(self.positive_roots, key=sum)
        for r in self.positive_roots:
            if any(b < x for b, x in zip(best, r)):
                raise AssertionError("highest root is not dominance-maximal")
        return best

    @staticmethod
    def _pairing(form, x, y):
        return sum(form[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(y)))

    def _pair_vector(self, root):
        """Vector f with (mu, root) = sum_i mu[i] * f[i] for mu in fund coords."""
        n = self.rank
        r = self.fund_to_root
        return tuple(
            sum(r[k][i] * self.form[k][l] * root[l] for k in range(n) for l in range(n))
            for i in range(n)
        )

    # -- coordinate conversions ----------------------------------------------

    def root_to_weight(self, root):
        """Simple-root coordinates -> fundamental-weight coordinates."""
        n = self.rank
        out = tuple(sum(root[i] * self.cartan[i][j] for i in range(n)) for j in range(n))
        if all(isinstance(x, int) for x in root):
            return out
        return tuple(Fraction(x) for x in out)

    def weight_to_root(self, weight):
        """Fundamental-weight coordinates -> simple-root coordinates (rational)."""
        n = self.rank
        return tuple(
            sum(self.fund_to_root[i][j] * weight[j] for j in range(n)) for i in range(n)
        )

    # -- form ------------------------------------------------------------------

    def inner_product(self, x, y) -> Fraction:
        """Invariant form on simple-root coordinate vectors, (theta,theta)=2."""
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("vector length does not match rank")
        return self._pairing(self.form, x, y)

    def weight_inner(self, lam, mu) -> Fraction:
        """Invariant form on fundamental-weight coordinate vectors."""
        g = self.weight_gram
        n = self.rank
        return sum(g[i][j] * lam[i] * mu[j] for i in range(n) for j in range(n))

    def pair_with_root(self, weight, root_index: int) -> Fraction:
        """(weight, a) for the positive root with the given index."""
        f = self._root_pair_vecs[root_index]
        return sum(w * x for w, x in zip(weight, f))

    # -- Weyl group ------------------------------------------------------------

    def reflect(self, weight, i: int):
        """Simple reflection s_i on fundamental-weight coordinates."""
        coeff = weight[i]
        row = self.cartan[i]
        return tuple(w - coeff * row[j] for j, w in enumerate(weight))

    def is_dominant(self, weight) -> bool:
        return all(x >= 0 for x in weight)

    def weyl_orbit(self, weight, cap: int = DEFAULT_ORBIT_CAP) -> frozenset:
        """Orbit of a weight under the full Weyl group, by BFS closure."""
        weight = tuple(weight)
        seen = {weight}
        frontier = [weight]
        while frontier:
            new = []
            for w in frontier:
                for i in range(self.rank):
                    if w[i] == 0:
                        continue
                    img = self.reflect(w, i)
                    if img not in seen:
                        seen.add(img)
                        new.append(img)
                        if len(seen) > cap:
                            raise CapExceeded(
                                f"Weyl orbit exceeds cap {cap}", partial=frozenset(seen)
                            )
            frontier = new
        return frozenset(seen)

    def dominant_representative(self, weight):
        """Straighten a weight into the dominant chamber.

        Returns ``(dominant_weight, steps)`` where ``steps`` counts the simple
        reflections applied; for regular weights this is the length of the
        straightening Weyl group element.
        """
        weight = tuple(weight)
        if all(x >= 0 for x in weight):
            return (weight, 0)
        cached = self._dominant_cache.get(weight)
        if cached is not None:
            return cached
        w = weight
        steps = 0
        path = []
        while True:
            i = next((k for k, x in enumerate(w) if x < 0), None)
            if i is None:
                break
            path.append(w)
            w = self.reflect(w, i)
            steps += 1
        result = (w, steps)
        if len(self._dominant_cache) < 1_000_000:
            self._dominant_cache[weight] = result
            for seen, back in zip(path, range(steps, 0, -1)):
                self._dominant_cache.setdefault(seen, (w, back))
        return result

    def dual_weight(self, lam):
        """-w0(lam): highest weight of the dual of V(lam)."""
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        neg = tuple(-x for x in lam)
        return self.dominant_representative(neg)[0]

    # -- lattice order ----------------------------------------------------------

    def in_root_lattice_cone(self, weight) -> bool:
        """True iff the weight lies in Q+ (nonnegative integer root coords)."""
        for x in self.weight_to_root(weight):
            if x < 0 or x.denominator != 1:
                return False
        return True

    def dominates(self, lam, mu) -> bool:
        """lam >= mu in the dominance order, i.e. lam - mu in Q+."""
        return self.in_root_lattice_cone(_vec_sub(lam, mu))

    def is_root(self, root_coords) -> bool:
        return tuple(root_coords) in self._root_set

    def all_roots(self):
        return self._root_set


def build(cartan_type) -> RootSystem:
    """Construct the root system for a Cartan type (object or string)."""
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    return RootSystem(cartan_type)
