"""Garland's integral imaginary-root-vector series and the divided-power
straightening identity on sl2 representations.

The series lives in a commutative polynomial ring with one variable L_k per
positive t-degree k; monomials are multisets of degrees.  The degree-s
coefficient of exp(-sum_k L_k u^k / k) is an exact signed sum over the
partitions of s.  The straightening identity is verified as a matrix
identity on the (N+1)-dimensional irreducible sl2 representation, with all
entries exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import CapExceeded, InvalidInput

DEFAULT_ORDER_CAP = 12
DEFAULT_ZFORM_CAP = 8
DEFAULT_DIM_CAP = 64


class PowerSumPoly:
    """Polynomial in commuting variables L_1, L_2, ...; keys are multisets of
    degrees stored as descending tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        self.terms = {}
        for key, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                self.terms[tuple(sorted(key, reverse=True))] = coeff

    def __eq__(self, other):
        return isinstance(other, PowerSumPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            new = out.get(k, Fraction(0)) + v
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return PowerSumPoly(out)

    def scale(self, c) -> "PowerSumPoly":
        c = Fraction(c)
        return PowerSumPoly({k: c * v for k, v in self.terms.items()})

    def mul_variable(self, k: int) -> "PowerSumPoly":
        """Multiply by the single variable L_k."""
        if k < 1:
            raise InvalidInput("variable index must be positive")
        return PowerSumPoly(
            {tuple(sorted(key + (k,), reverse=True)): v for key, v in self.terms.items()}
        )

    def degree_weight(self) -> set:
        return {sum(key) for key in self.terms}

    def __repr__(self):
        return f"PowerSumPoly({self.format()})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for key in sorted(self.terms, key=lambda k: (sum(k), k)):
            coeff = self.terms[key]
            mono = " ".join(
                f"L{deg}" + (f"^{key.count(deg)}" if key.count(deg) > 1 else "")
                for deg in sorted(set(key), reverse=True)
            )
            chunks.append(f"{coeff} * {mono}" if mono else str(coeff))
        return "  +  ".join(chunks)


def _partitions(s: int):
    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest
    return rec(s, s) if s else iter([()])


def garland_series(s: int, cap: int = DEFAULT_ORDER_CAP) -> PowerSumPoly:
    """Degree-s coefficient of exp(-sum_k L_k u^k / k).

    One monomial per partition of s: the partition with m_j parts equal to j
    contributes (-1)^(number of parts) / prod_j (j^m_j m_j!).
    """
    if s > cap:
        raise CapExceeded(f"series order {s} exceeds cap {cap}")
    if s < 0:
        raise InvalidInput("series order must be nonnegative")
    terms = {}
    for partition in _partitions(s):
        z = Fraction(1)
        for part in set(partition):
            m = partition.count(part)
            z *= Fraction(part) ** m * factorial(m)
        terms[partition] = Fraction((-1) ** len(partition)) / z
    return PowerSumPoly(terms)


def newton_check(s: int, cap: int = DEFAULT_ORDER_CAP) -> bool:
    """Verify s P_s = -sum_{k=1}^{s} L_k P_{s-k} as exact polynomials."""
    if s < 1:
        raise InvalidInput("newton check needs s >= 1")
    lhs = garland_series(s, cap=cap).scale(s)
    rhs = PowerSumPoly()
    for k in range(1, s + 1):
        rhs = rhs + garland_series(s - k, cap=cap).mul_variable(k).scale(-1)
    return lhs == rhs


# -- sl2 matrix verification of the straightening identity -------------------


def _identity(n: int):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _mat_mul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_scale(a, c):
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_pow(a, k: int):
    out = _identity(len(a))
    for _ in range(k):
        out = _mat_mul(out, a)
    return out


def _bracket(a, b):
    return _mat_sub(_mat_mul(a, b), _mat_mul(b, a))


@dataclass(frozen=True)
class Sl2Rep:
    """Exact matrices of e, f, h acting on the (N+1)-dimensional irreducible."""

    n: int
    e: tuple
    f: tuple
    h: tuple


def sl2_rep(n: int, cap: int = DEFAULT_DIM_CAP) -> Sl2Rep:
    """Basis where h is diagonal with entries N, N-2, ..., -N and f is the
    subdiagonal of ones; e is forced by the commutation relations."""
    if n > cap:
        raise CapExceeded(f"sl2 representation size {n} exceeds cap {cap}")
    size = n + 1
    h = tuple(
        tuple(Fraction(n - 2 * i) if i == j else Fraction(0) for j in range(size))
        for i in range(size)
    )
    f = tuple(
        tuple(Fraction(int(i == j + 1)) for j in range(size)) for i in range(size)
    )
    e = tuple(
        tuple(Fraction(j * (n - j + 1)) if i == j - 1 else Fraction(0)
              for j in range(size))
        for i in range(size)
    )
    rep = Sl2Rep(n, e, f, h)
    assert _bracket(rep.h, rep.e) == _mat_scale(rep.e, 2)
    assert _bracket(rep.h, rep.f) == _mat_scale(rep.f, -2)
    assert _bracket(rep.e, rep.f) == rep.h
    return rep


def _divided_power(mat, k: int):
    return _mat_scale(_mat_pow(mat, k), Fraction(1, factorial(k)))


def _matrix_binomial(mat, m: int):
    """mat (mat - 1) ... (mat - m + 1) / m! over the rationals."""
    size = len(mat)
    out = _identity(size)
    for t in range(m):
        out = _mat_mul(out, _mat_sub(mat, _mat_scale(_identity(size), t)))
    return _mat_scale(out, Fraction(1, factorial(m)))


def zform_check(r: int, s: int, n: int,
                power_cap: int = DEFAULT_ZFORM_CAP,
                dim_cap: int = DEFAULT_DIM_CAP) -> bool:
    """Check the divided-power straightening identity on V(n).

    Left side: e^(s) f^(r).  Right side: the ordered sum over m of
    f^(r-m) binom(h - (r+s-2m), m) e^(s-m).  Requires n >= r+s so that no
    term dies to truncation on one side only.
    """
    if r > power_cap or s > power_cap:
        raise CapExceeded(f"divided powers ({r},{s}) exceed cap {power_cap}")
    if n < r + s:
        raise InvalidInput("need n >= r + s for an honest comparison")
    rep = sl2_rep(n, cap=dim_cap)
    lhs = _mat_mul(_divided_power(rep.e, s), _divided_power(rep.f, r))
    size = n + 1
    rhs = tuple(tuple(Fraction(0) for _ in range(size)) for _ in range(size))
    for m in range(min(r, s) + 1):
        shifted = _mat_sub(rep.h, _mat_scale(_identity(size), r + s - 2 * m))
        term = _mat_mul(
            _mat_mul(_divided_power(rep.f, r - m), _matrix_binomial(shifted, m)),
            _divided_power(rep.e, s - m),
        )
        rhs = tuple(
            tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(rhs, term)
        )
    return lhs == rhs
