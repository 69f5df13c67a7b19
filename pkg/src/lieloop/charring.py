"""Exact formal-character ring for a fixed simple type.

Characters are finitely supported integer-valued functions on the weight
lattice, stored as dicts keyed by fundamental-coordinate tuples.  Weight
multiplicities come from the Freudenthal recursion; the Weyl-numerator
identity is kept around as an independent test oracle.  Tensor products are
decomposed with the signed reflection (Klimyk) sum over the weight system of
the smaller factor.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import CapExceeded, InvalidInput, NotDominant, NotModuleCharacter
from .rootsys import RootSystem

DEFAULT_DIM_CAP = 1_000_000
DEFAULT_GROUP_CAP = 100_000
DEFAULT_POWER_CAP = 32


def _vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


class FormalCharacter:
    """Finite map weight -> nonzero integer, weights in fundamental coords."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        self.terms = {tuple(k): v for k, v in items if v}

    def __eq__(self, other):
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    def __repr__(self):
        preview = dict(sorted(self.terms.items())[:4])
        return f"FormalCharacter({preview}{'...' if len(self.terms) > 4 else ''})"

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FormalCharacter(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return FormalCharacter(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalCharacter({k: other * v for k, v in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                key = _vadd(k1, k2)
                out[key] = out.get(key, 0) + v1 * v2
        return FormalCharacter(out)

    __rmul__ = __mul__

    def mass(self) -> int:
        """Sum of all coefficients (the dimension, for a module character)."""
        return sum(self.terms.values())

    def value(self, weight) -> int:
        return self.terms.get(tuple(weight), 0)


class DominantDecomposition:
    """Finite map dominant weight -> positive multiplicity."""

    __slots__ = ("mults",)

    def __init__(self, mults=()):
        items = mults.items() if isinstance(mults, dict) else mults
        self.mults = {tuple(k): v for k, v in items if v}
        for k, v in self.mults.items():
            if v < 0:
                raise NotModuleCharacter(f"negative multiplicity {v} at {k}")
            if any(x < 0 for x in k):
                raise NotDominant(f"{k} is not dominant")

    def __eq__(self, other):
        return isinstance(other, DominantDecomposition) and self.mults == other.mults

    def __repr__(self):
        return f"DominantDecomposition({dict(sorted(self.mults.items()))})"

    def to_character(self, rs: RootSystem) -> FormalCharacter:
        out = FormalCharacter()
        for lam, m in self.mults.items():
            out = out + m * char_irreducible(rs, lam)
        return out

    def total_dimension(self, rs: RootSystem) -> int:
        return sum(m * dim_irreducible(rs, lam) for lam, m in self.mults.items())


_CACHE_LIMIT = 128


def _cache(rs: RootSystem, name: str) -> dict:
    caches = getattr(rs, "_charring_caches", None)
    if caches is None:
        caches = {}
        rs._charring_caches = caches
    return caches.setdefault(name, {})


def _cache_put(cache: dict, key, value):
    """Bounded FIFO cache; sweeps over thousands of weights must not hoard."""
    if len(cache) >= _CACHE_LIMIT:
        cache.pop(next(iter(cache)))
    cache[key] = value


def _scaled_pairing_data(rs: RootSystem):
    """Integer vectors fv[t] with dot(mu, fv[t]) = scale * (mu, alpha_t), the
    matching scaled Gram matrix and scaled root norms, for Fraction-free
    inner loops."""
    data = getattr(rs, "_scaled_pairing", None)
    if data is not None:
        return data
    denoms = [x.denominator for row in rs.weight_gram for x in row]
    for t in range(len(rs.positive_roots)):
        denoms.extend(
            rs.pair_with_root(unit, t).denominator
            for unit in ([int(i == j) for j in range(rs.rank)] for i in range(rs.rank))
        )
    scale = 1
    for d in denoms:
        scale = scale * d // gcd(scale, d)
    fv = []
    for t in range(len(rs.positive_roots)):
        row = []
        for i in range(rs.rank):
            unit = tuple(int(i == j) for j in range(rs.rank))
            value = rs.pair_with_root(unit, t) * scale
            assert value.denominator == 1
            row.append(int(value))
        fv.append(tuple(row))
    gram = tuple(
        tuple(int(x * scale) for x in row) for row in rs.weight_gram
    )
    norms = tuple(
        int(norm * scale) for norm in rs.root_norms
    )
    data = (scale, tuple(fv), gram, norms)
    rs._scaled_pairing = data
    return data


class _Packer:
    """Pack weight tuples into single integers, one bit-field per coordinate.

    Weight addition becomes integer addition (offsets cancel against the
    packed zero) and simple reflections subtract a multiple of a packed
    Cartan row, which keeps the high-volume lattice walks allocation-free.
    """

    __slots__ = ("rank", "shift", "offset", "zero", "rows", "mask")

    def __init__(self, rs: RootSystem, bound: int):
        self.rank = rs.rank
        self.shift = max(bound, 2).bit_length() + 2
        self.offset = 1 << (self.shift - 1)
        self.mask = (1 << self.shift) - 1
        self.zero = self.pack((0,) * rs.rank)
        self.rows = tuple(
            sum(rs.cartan[i][j] << (self.shift * j) for j in range(rs.rank))
            for i in range(rs.rank)
        )

    def pack(self, weight) -> int:
        key = 0
        for j, x in enumerate(weight):
            lane = x + self.offset
            assert 0 < lane < (1 << self.shift) - 1, "weight outside packing bound"
            key |= lane << (self.shift * j)
        return key

    def unpack(self, key: int) -> tuple:
        return tuple(
            ((key >> (self.shift * j)) & self.mask) - self.offset
            for j in range(self.rank)
        )


def _coordinate_reach(rs: RootSystem, lam) -> int:
    """Safe bound on any coordinate met while working inside V(lam)."""
    return 4 * (sum(lam) + rs.rank + 2) * max(
        max(abs(x) for x in row) for row in rs.cartan
    )


def dim_irreducible(rs: RootSystem, lam) -> int:
    """Dimension of V(lam) by the Weyl product formula."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    lam_rho = _vadd(lam, rs.rho)
    num = Fraction(1)
    den = Fraction(1)
    for t in range(len(rs.positive_roots)):
        num *= rs.pair_with_root(lam_rho, t)
        den *= rs.pair_with_root(rs.rho, t)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


def casimir_eigenvalue(rs: RootSystem, lam) -> Fraction:
    """(lam, lam + 2 rho) in the normalisation (theta, theta) = 2."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    two_rho = tuple(2 * x for x in rs.rho)
    return rs.weight_inner(lam, _vadd(lam, two_rho))


def _dominant_mults_packed(rs: RootSystem, lam: tuple, packer) -> dict:
    """Freudenthal recursion on packed integer keys; see the public wrapper.

    String sums over each positive root are memoized along the root
    direction, so a lattice cell on a string is visited once per root, not
    once per weight; weight steps are single integer additions and the
    dominance test is one mask comparison.
    """
    n = rs.rank
    scale, fv, gram, norms = _scaled_pairing_data(rs)
    positive_roots = rs.positive_roots
    num_roots = len(positive_roots)

    shift, offset, mask = packer.shift, packer.offset, packer.mask
    top_mask = sum(offset << (shift * j) for j in range(n))
    # raw (offset-free) lane encodings of root data; adding one to a packed
    # weight is plain integer addition
    roots_raw = [
        sum(x << (shift * j) for j, x in enumerate(rs.roots_fund[t]))
        for t in range(num_roots)
    ]
    roots_rc_raw = [
        sum(x << (shift * j) for j, x in enumerate(positive_roots[t]))
        for t in range(num_roots)
    ]
    root_heights = [sum(positive_roots[t]) for t in range(num_roots)]

    lam_key = packer.pack(lam)
    rc_zero = sum(offset << (shift * j) for j in range(n))

    # dominant support; keep (packed root coords of lam - mu, height) along
    doms = {lam_key: (rc_zero, 0)}
    frontier = [lam_key]
    while frontier:
        new = []
        for mu_key in frontier:
            mu_rc, mu_ht = doms[mu_key]
            for t in range(num_roots):
                nu = mu_key - roots_raw[t]
                if nu & top_mask == top_mask and nu not in doms:
                    doms[nu] = (mu_rc + roots_rc_raw[t], mu_ht + root_heights[t])
                    new.append(nu)
        frontier = new

    def straighten_key(key):
        w = rs.dominant_representative(packer.unpack(key))[0]
        return packer.pack(w)

    ordered = sorted(doms, key=lambda k: (doms[k][1], k))
    mults: dict = {lam_key: 1}
    # memo[t][xi] = scale * sum_{k>=1} m(xi + k a_t) (xi + k a_t, a_t)
    memos = [dict() for _ in positive_roots]
    lanes = [shift * j for j in range(n)]
    for mu_key in ordered:
        if mu_key == lam_key:
            continue
        mu = [((mu_key >> lane) & mask) - offset for lane in lanes]
        rc_key = doms[mu_key][0]
        acc = 0
        for t in range(num_roots):
            root_raw = roots_raw[t]
            rc_raw = roots_rc_raw[t]
            memo = memos[t]
            chain = []
            cur, cur_rc = mu_key, rc_key
            while True:
                value = memo.get(cur)
                if value is not None:
                    break
                up_rc = cur_rc - rc_raw
                if up_rc & top_mask != top_mask:
                    value = 0
                    memo[cur] = 0
                    break
                chain.append(cur)
                cur += root_raw
                cur_rc = up_rc
            if chain:
                # (mu + k a, a) = (mu, a) + k (a, a): one dot, then increments
                fvt = fv[t]
                base = 0
                for j in range(n):
                    base += mu[j] * fvt[j]
                norm = norms[t]
                last = len(chain) - 1
                for i in range(last, -1, -1):
                    above = cur if i == last else chain[i + 1]
                    m = mults.get(
                        above if above & top_mask == top_mask else straighten_key(above),
                        0,
                    )
                    if m:
                        value += m * (base + (i + 1) * norm)
                    memo[chain[i]] = value
            acc += value
        denom = 0
        for i in range(n):
            bi = lam[i] + mu[i] + 2
            gi = gram[i]
            for j in range(n):
                dj = lam[j] - mu[j]
                if dj:
                    denom += gi[j] * bi * dj
        quotient, remainder = divmod(2 * acc, denom)
        assert remainder == 0 and quotient > 0, (lam, mu)
        mults[mu_key] = quotient
    return mults


def dominant_weight_multiplicities(rs: RootSystem, lam) -> dict:
    """Weight multiplicities of V(lam) for dominant weights, by Freudenthal.

    The support is generated first: every dominant weight below lam is
    reachable from lam by repeatedly subtracting single positive roots while
    staying dominant (the covers of the dominance order are root steps).
    The recursion then proceeds downwards by height.  Oracle tests compare
    the output against the Weyl numerator identity, independent tables and
    dimension formulas.
    """
    lam = tuple(lam)
    cache = _cache(rs, "dom_mults")
    hit = cache.get(lam)
    if hit is not None:
        return hit
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    packer = _Packer(rs, _coordinate_reach(rs, lam))
    packed = _dominant_mults_packed(rs, lam, packer)
    result = {packer.unpack(key): m for key, m in packed.items()}
    _cache_put(cache, lam, result)
    return result


def char_irreducible(rs: RootSystem, lam, max_dim: int = DEFAULT_DIM_CAP,
                     max_orbit: int | None = None) -> FormalCharacter:
    """Full formal character of V(lam)."""
    lam = tuple(lam)
    cache = _cache(rs, "irr_char")
    hit = cache.get(lam)
    if hit is not None:
        return hit
    dim = dim_irreducible(rs, lam)
    if dim > max_dim:
        raise CapExceeded(f"dim V({lam}) = {dim} exceeds cap {max_dim}")
    orbit_cap = max_orbit if max_orbit is not None else max(dim, 2)
    terms: dict = {}
    for mu, m in dominant_weight_multiplicities(rs, lam).items():
        for nu in rs.weyl_orbit(mu, cap=orbit_cap):
            terms[nu] = m
    ch = FormalCharacter(terms)
    assert ch.mass() == dim
    _cache_put(cache, lam, ch)
    return ch


def adjoint_character(rs: RootSystem) -> FormalCharacter:
    return char_irreducible(rs, rs.highest_root_fund)


def weyl_numerator(rs: RootSystem, lam, group_cap: int = DEFAULT_GROUP_CAP) -> FormalCharacter:
    """Alternating sum over the full Weyl group of e(w(lam + rho))."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    start = _vadd(lam, rs.rho)
    orbit = rs.weyl_orbit(start, cap=group_cap)
    terms = {}
    for mu in orbit:
        steps = rs.dominant_representative(mu)[1]
        terms[mu] = 1 if steps % 2 == 0 else -1
    return FormalCharacter(terms)


def klimyk_multiplicity(rs: RootSystem, factor_char: FormalCharacter, lam, mu) -> int:
    """Multiplicity of V(mu) inside factor_char * ch V(lam).

    Signed reflection sum over the weight system of the known factor; only
    the straightening of lam + rho + xi is needed, never the big product
    character.
    """
    lam, mu = tuple(lam), tuple(mu)
    rho = rs.rho
    target = _vadd(mu, rho)
    total = 0
    for xi, m in factor_char.terms.items():
        eta = _vadd(_vadd(lam, rho), xi)
        dom, steps = rs.dominant_representative(eta)
        if dom != target or 0 in dom:
            continue
        total += m if steps % 2 == 0 else -m
    return total


def _klimyk_decompose(rs: RootSystem, factor_char: FormalCharacter, lam) -> dict:
    rho = rs.rho
    out: dict = {}
    for xi, m in factor_char.terms.items():
        eta = _vadd(_vadd(tuple(lam), rho), xi)
        dom, steps = rs.dominant_representative(eta)
        if 0 in dom:
            continue
        key = _vsub(dom, rho)
        out[key] = out.get(key, 0) + (m if steps % 2 == 0 else -m)
    return {k: v for k, v in out.items() if v}


def tensor_decompose(rs: RootSystem, lam, mu, max_dim: int = DEFAULT_DIM_CAP) -> DominantDecomposition:
    """Decomposition of V(lam) (x) V(mu) into irreducibles."""
    lam, mu = tuple(lam), tuple(mu)
    d1, d2 = dim_irreducible(rs, lam), dim_irreducible(rs, mu)
    if d1 * d2 > max_dim:
        raise CapExceeded(f"tensor product dimension {d1 * d2} exceeds cap {max_dim}")
    if d2 < d1:
        lam, mu = mu, lam
    factor = char_irreducible(rs, lam, max_dim=max_dim)
    return DominantDecomposition(_klimyk_decompose(rs, factor, mu))


def decompose_character(rs: RootSystem, ch: FormalCharacter,
                        max_dim: int = DEFAULT_DIM_CAP) -> DominantDecomposition:
    """Write a module character as a sum of irreducible characters.

    Repeatedly extracts the dominance-maximal dominant weight of the support
    (lexicographic tie-break) and subtracts its irreducible character.  A
    negative multiplicity or leftover terms mean the input was not the
    character of a module.
    """
    work = dict(ch.terms)
    out: dict = {}
    while work:
        dominant = [w for w in work if all(x >= 0 for x in w)]
        if not dominant:
            raise NotModuleCharacter(f"leftover non-dominant support {sorted(work)[:3]}")
        maximal = [
            w for w in dominant
            if not any(v != w and rs.dominates(v, w) for v in dominant)
        ]
        top = max(maximal)
        mult = work[top]
        if mult < 0:
            raise NotModuleCharacter(f"negative multiplicity {mult} at {top}")
        out[top] = mult
        for nu, m in char_irreducible(rs, top, max_dim=max_dim).terms.items():
            rem = work.get(nu, 0) - mult * m
            if rem:
                work[nu] = rem
            else:
                work.pop(nu, None)
    return DominantDecomposition(out)


def adams_operation(k: int, ch: FormalCharacter) -> FormalCharacter:
    """Substitute e(mu) -> e(k mu)."""
    if k < 1:
        raise InvalidInput("adams operation needs k >= 1")
    return FormalCharacter({tuple(k * x for x in w): m for w, m in ch.terms.items()})


def _newton_powers(ch: FormalCharacter, k: int, signed: bool) -> list:
    powers = [FormalCharacter({(0,) * _char_rank(ch): 1})]
    psis = [None] + [adams_operation(j, ch) for j in range(1, k + 1)]
    for m in range(1, k + 1):
        acc: dict = {}
        for j in range(1, m + 1):
            sign = (-1) ** (j - 1) if signed else 1
            part = psis[j] * powers[m - j]
            for w, v in part.terms.items():
                acc[w] = acc.get(w, 0) + sign * v
        terms = {}
        for w, v in acc.items():
            q, r = divmod(v, m)
            assert r == 0, "Newton recursion produced a non-integer coefficient"
            if q:
                terms[w] = q
        powers.append(FormalCharacter(terms))
    return powers


def _char_rank(ch: FormalCharacter) -> int:
    if not ch.terms:
        raise InvalidInput("cannot infer rank from the empty character")
    return len(next(iter(ch.terms)))


def sym_power(k: int, ch: FormalCharacter, max_k: int = DEFAULT_POWER_CAP) -> FormalCharacter:
    """Character of the k-th symmetric power."""
    if k > max_k:
        raise CapExceeded(f"symmetric power {k} exceeds cap {max_k}")
    return _newton_powers(ch, k, signed=False)[k]


def ext_power(k: int, ch: FormalCharacter, max_k: int = DEFAULT_POWER_CAP) -> FormalCharacter:
    """Character of the k-th exterior power."""
    if k > max_k:
        raise CapExceeded(f"exterior power {k} exceeds cap {max_k}")
    return _newton_powers(ch, k, signed=True)[k]


# -- packed-lattice engine for the high-volume numerator oracle -------------
#
# Verifying numerator(0) * ch V(lam) == numerator(lam) over every weight with
# dim <= 5000 touches tens of millions of lattice points; the same packed
# keys as in the Freudenthal engine keep the sweep fast.


def _packed_orbit_expand(packer: _Packer, dominant_items) -> dict:
    """Expand {dominant packed weight: value} over full Weyl orbits.

    Reflections only follow strictly positive coordinates, which reaches
    every orbit element from its dominant representative exactly once up to
    the dedup set.
    """
    rank, shift, offset, mask = packer.rank, packer.shift, packer.offset, packer.mask
    rows = packer.rows
    out = dict(dominant_items)
    stack = list(out)
    while stack:
        key = stack.pop()
        value = out[key]
        for i in range(rank):
            coeff = ((key >> (shift * i)) & mask) - offset
            if coeff > 0:
                image = key - coeff * rows[i]
                if image not in out:
                    out[image] = value
                    stack.append(image)
    return out


def _packed_numerator(rs: RootSystem, packer: _Packer, lam) -> dict:
    start = packer.pack(_vadd(tuple(lam), rs.rho))
    rank, shift, offset, mask = packer.rank, packer.shift, packer.offset, packer.mask
    rows = packer.rows
    out = {start: 1}
    stack = [start]
    while stack:
        key = stack.pop()
        sign = out[key]
        for i in range(rank):
            coeff = ((key >> (shift * i)) & mask) - offset
            if coeff > 0:
                image = key - coeff * rows[i]
                if image not in out:
                    out[image] = -sign
                    stack.append(image)
    return out


def weyl_freudenthal_identity(rs: RootSystem, lam) -> bool:
    """Exact check of numerator(0) * ch V(lam) == numerator(lam)."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    packer = _Packer(rs, _coordinate_reach(rs, lam))
    char_packed = _packed_orbit_expand(
        packer, _dominant_mults_packed(rs, lam, packer).items()
    )
    numerator0 = _packed_numerator(rs, packer, (0,) * rs.rank)
    zero = packer.zero
    product: dict = {}
    get = product.get
    for k1, sign in numerator0.items():
        base = k1 - zero
        for k2, mult in char_packed.items():
            key = base + k2
            value = get(key, 0) + sign * mult
            if value:
                product[key] = value
            else:
                del product[key]
    return product == _packed_numerator(rs, packer, lam)
