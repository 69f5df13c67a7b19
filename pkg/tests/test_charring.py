import random
from fractions import Fraction
from math import comb

import pytest

from helpers import random_dominant_weight, tensor_by_character_product
from lieloop import charring as cr
from lieloop.charring import FormalCharacter
from lieloop.errors import CapExceeded, InvalidInput, NotDominant, NotModuleCharacter
from lieloop.rootsys import build


@pytest.fixture(scope="module")
def a1():
    return build("A1")


@pytest.fixture(scope="module")
def a2():
    return build("A2")


def test_char_irreducible_a1(a1):
    assert cr.char_irreducible(a1, (1,)).terms == {(1,): 1, (-1,): 1}
    assert cr.char_irreducible(a1, (2,)).terms == {(2,): 1, (0,): 1, (-2,): 1}


def test_char_irreducible_a2_adjoint(a2):
    ch = cr.char_irreducible(a2, (1, 1))
    assert ch.mass() == 8
    assert ch.value((0, 0)) == 2
    assert ch.value((1, 1)) == 1


def test_char_rejects_non_dominant(a2):
    with pytest.raises(NotDominant):
        cr.char_irreducible(a2, (-1, 0))


def test_char_dimension_cap(a1):
    with pytest.raises(CapExceeded):
        cr.char_irreducible(a1, (100,), max_dim=50)


def test_char_weyl_invariance_and_support_cone(a2):
    lam = (2, 1)
    ch = cr.char_irreducible(a2, lam)
    for w, m in ch.terms.items():
        for i in range(2):
            assert ch.value(a2.reflect(w, i)) == m
        if a2.is_dominant(w):
            assert a2.dominates(lam, w)


def test_dim_irreducible_examples(a1):
    for name in ("A2", "B3", "D4", "G2", "E6"):
        rs = build(name)
        assert cr.dim_irreducible(rs, (0,) * rs.rank) == 1
    for m in (0, 1, 5, 17):
        assert cr.dim_irreducible(a1, (m,)) == m + 1
    d6 = build("D6")
    assert cr.dim_irreducible(d6, (0, 1, 0, 0, 0, 0)) == 66


def test_dim_matches_char_mass(a2):
    rng = random.Random("dimmass")
    for _ in range(10):
        lam = random_dominant_weight(rng, 2, 4)
        assert cr.char_irreducible(a2, lam).mass() == cr.dim_irreducible(a2, lam)


def test_weyl_numerator_examples(a1, a2):
    assert cr.weyl_numerator(a1, (0,)).terms == {(1,): 1, (-1,): -1}
    assert cr.weyl_numerator(a1, (3,)).terms == {(4,): 1, (-4,): -1}
    num = cr.weyl_numerator(a2, (0, 0))
    assert len(num.terms) == 6
    assert sorted(num.terms.values()) == [-1, -1, -1, 1, 1, 1]


def test_weyl_numerator_antisymmetry(a2):
    num = cr.weyl_numerator(a2, (2, 1))
    for i in range(2):
        reflected = FormalCharacter({a2.reflect(w, i): v for w, v in num.terms.items()})
        assert reflected == -1 * num


def test_weyl_numerator_group_cap(a2):
    with pytest.raises(CapExceeded):
        cr.weyl_numerator(a2, (0, 0), group_cap=3)


def test_numerator_identity_small(a2):
    num0 = cr.weyl_numerator(a2, (0, 0))
    for lam in [(1, 0), (1, 1), (3, 2)]:
        assert num0 * cr.char_irreducible(a2, lam) == cr.weyl_numerator(a2, lam)


def test_packed_identity_agrees_with_public_product(a2):
    b2 = build("B2")
    for rs, lam in [(a2, (2, 1)), (b2, (1, 2)), (build("G2"), (1, 1))]:
        direct = cr.weyl_numerator(rs, (0,) * rs.rank) * cr.char_irreducible(rs, lam)
        assert direct == cr.weyl_numerator(rs, lam)
        assert cr.weyl_freudenthal_identity(rs, lam)


def test_tensor_clebsch_gordan(a1):
    assert cr.tensor_decompose(a1, (1,), (1,)).mults == {(2,): 1, (0,): 1}
    assert cr.tensor_decompose(a1, (2,), (2,)).mults == {(4,): 1, (2,): 1, (0,): 1}


def test_tensor_a2_fund_dual(a2):
    assert cr.tensor_decompose(a2, (1, 0), (0, 1)).mults == {(1, 1): 1, (0, 0): 1}


def test_tensor_dimension_identity(a2):
    rng = random.Random("tensordim")
    for _ in range(8):
        lam = random_dominant_weight(rng, 2, 3)
        mu = random_dominant_weight(rng, 2, 3)
        dd = cr.tensor_decompose(a2, lam, mu)
        assert dd.total_dimension(a2) == (
            cr.dim_irreducible(a2, lam) * cr.dim_irreducible(a2, mu)
        )


def test_tensor_commutative_and_unit(a2):
    rng = random.Random("tensorsym")
    zero = (0, 0)
    for _ in range(6):
        lam = random_dominant_weight(rng, 2, 3)
        mu = random_dominant_weight(rng, 2, 3)
        assert cr.tensor_decompose(a2, lam, mu) == cr.tensor_decompose(a2, mu, lam)
        assert cr.tensor_decompose(a2, lam, zero).mults == {lam: 1}


def test_tensor_dual_pairing(a2):
    rng = random.Random("tensordual")
    for _ in range(10):
        lam = random_dominant_weight(rng, 2, 3)
        mu = random_dominant_weight(rng, 2, 3)
        trivial = cr.tensor_decompose(a2, lam, mu).mults.get((0, 0), 0)
        assert trivial == (1 if mu == a2.dual_weight(lam) else 0)


def test_tensor_cap(a2):
    with pytest.raises(CapExceeded):
        cr.tensor_decompose(a2, (3, 3), (3, 3), max_dim=100)


def test_tensor_matches_character_product_oracle():
    for name in ("A2", "B2"):
        rs = build(name)
        rng = random.Random(f"oracle-{name}")
        for _ in range(6):
            lam = random_dominant_weight(rng, rs.rank, 2)
            mu = random_dominant_weight(rng, rs.rank, 2)
            assert cr.tensor_decompose(rs, lam, mu) == tensor_by_character_product(rs, lam, mu)


def test_decompose_character_idempotent(a2):
    lam = (2, 1)
    assert cr.decompose_character(a2, cr.char_irreducible(a2, lam)).mults == {lam: 1}


def test_decompose_character_additive(a2):
    ch = cr.char_irreducible(a2, (1, 0)) + cr.char_irreducible(a2, (0, 2))
    assert cr.decompose_character(a2, ch).mults == {(1, 0): 1, (0, 2): 1}


def test_decompose_adjoint_square_a1(a1):
    adj = cr.adjoint_character(a1)
    assert cr.decompose_character(a1, adj * adj).mults == {(4,): 1, (2,): 1, (0,): 1}


def test_decompose_rejects_non_character(a1):
    with pytest.raises(NotModuleCharacter):
        cr.decompose_character(a1, FormalCharacter({(1,): 1}))
    with pytest.raises(NotModuleCharacter):
        cr.decompose_character(a1, FormalCharacter({(2,): 1, (0,): -1, (-2,): 1}))


def test_adams_operation(a1):
    adj = cr.adjoint_character(a1)
    assert cr.adams_operation(1, adj) == adj
    assert cr.adams_operation(2, adj).terms == {(4,): 1, (0,): 1, (-4,): 1}
    rng = random.Random("adams")
    ch = FormalCharacter({(rng.randint(-5, 5),): rng.randint(-3, 3) for _ in range(6)})
    for k in (2, 3, 7):
        assert cr.adams_operation(k, ch).mass() == ch.mass()
    with pytest.raises(InvalidInput):
        cr.adams_operation(0, adj)


def test_sym_ext_power_degenerate(a1):
    adj = cr.adjoint_character(a1)
    unit = FormalCharacter({(0,): 1})
    assert cr.sym_power(0, adj) == unit
    assert cr.ext_power(0, adj) == unit
    assert cr.sym_power(1, adj) == adj
    assert cr.ext_power(1, adj) == adj


def test_ext_square_of_sl2_adjoint_is_adjoint(a1):
    adj = cr.adjoint_character(a1)
    assert cr.ext_power(2, adj) == adj
    assert cr.ext_power(3, adj) == FormalCharacter({(0,): 1})
    for k in (4, 5, 6):
        assert cr.ext_power(k, adj) == FormalCharacter()


def test_sym_square_of_sl2_adjoint(a1):
    dd = cr.decompose_character(a1, cr.sym_power(2, cr.adjoint_character(a1)))
    assert dd.mults == {(4,): 1, (0,): 1}


def test_power_dimensions_binomial(a2):
    ch = cr.char_irreducible(a2, (1, 0))
    d = ch.mass()
    for k in range(5):
        assert cr.sym_power(k, ch).mass() == comb(d + k - 1, k)
        assert cr.ext_power(k, ch).mass() == comb(d, k)


def test_power_generating_function_identity(a2):
    # sum_k (-1)^k ext^k * sym^(m-k) == 0 for m >= 1
    ch = cr.char_irreducible(a2, (1, 0))
    for m in range(1, 7):
        total = FormalCharacter()
        for k in range(m + 1):
            term = cr.ext_power(k, ch) * cr.sym_power(m - k, ch)
            total = total + (-1) ** k * term
        assert total == FormalCharacter()


def test_power_cap(a1):
    with pytest.raises(CapExceeded):
        cr.sym_power(40, cr.adjoint_character(a1))


def test_casimir_examples(a1):
    assert cr.casimir_eigenvalue(a1, (0,)) == 0
    assert cr.casimir_eigenvalue(a1, (2,)) == 4
    assert cr.casimir_eigenvalue(a1, (1,)) == Fraction(3, 2)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_casimir_monotone_along_dominance(name):
    rs = build(name)
    rng = random.Random(f"casimir-{name}")
    for _ in range(40):
        lam = random_dominant_weight(rng, rs.rank, 5)
        root = rs.roots_fund[rng.randrange(len(rs.roots_fund))]
        mu = tuple(a - b for a, b in zip(lam, root))
        if rs.is_dominant(mu) and mu != lam:
            assert cr.casimir_eigenvalue(rs, lam) > cr.casimir_eigenvalue(rs, mu)


def test_freudenthal_against_small_brute_force(a2):
    # independent check: weight multiplicities of the A2 27-dimensional rep
    # against the Weyl-orbit expansion pattern 27 = 6 + 3 + 3 + 6 + ...
    mults = cr.dominant_weight_multiplicities(a2, (2, 2))
    assert mults[(2, 2)] == 1
    assert mults[(0, 0)] == 3  # known value for V(2,2) of sl3
    ch = cr.char_irreducible(a2, (2, 2))
    assert ch.mass() == 27
