"""Shared test utilities: independent oracles and random data generators."""

from __future__ import annotations

import random
from fractions import Fraction

from lieloop import charring
from lieloop.rootsys import RootSystem, build

SMALL_TYPES = ["A1", "A2", "B2", "A3", "C3", "B3", "G2", "D4"]


def positive_root_count(family: str, rank: int) -> int:
    """Closed-form |Phi+| per family, as an independent oracle."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
            ("F", 4): 24, ("G", 2): 6}[(family, rank)]


def partition_count(n: int) -> int:
    """Number of integer partitions of n; p(n) = 0 for negative n."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for value in range(part, n + 1):
            table[value] += table[value - part]
    return table[n]


def random_dominant_weight(rng: random.Random, rank: int, max_coord: int = 3) -> tuple:
    return tuple(rng.randint(0, max_coord) for _ in range(rank))


def random_nonzero_dominant(rng: random.Random, rank: int, max_coord: int = 3) -> tuple:
    while True:
        w = random_dominant_weight(rng, rank, max_coord)
        if any(w):
            return w


def random_point(rng: random.Random) -> Fraction:
    while True:
        p = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if p != 0:
            return p


def random_weight(rng: random.Random, rank: int, max_coord: int = 5) -> tuple:
    return tuple(rng.randint(-max_coord, max_coord) for _ in range(rank))


def tensor_by_character_product(rs: RootSystem, lam, mu):
    """Independent tensor-decomposition oracle: multiply full characters,
    then peel irreducibles greedily."""
    product = charring.char_irreducible(rs, lam) * charring.char_irreducible(rs, mu)
    return charring.decompose_character(rs, product)


def dominant_weights_up_to_dim(rs: RootSystem, cap: int) -> list:
    """All dominant weights with dim V(lam) <= cap, by monotone box search."""
    out = []

    def rec(prefix):
        lam = tuple(prefix) + (0,) * (rs.rank - len(prefix))
        if charring.dim_irreducible(rs, lam) > cap:
            return
        if len(prefix) == rs.rank:
            out.append(lam)
            return
        c = 0
        while True:
            probe = tuple(prefix) + (c,) + (0,) * (rs.rank - len(prefix) - 1)
            if charring.dim_irreducible(rs, probe) > cap:
                break
            rec(prefix + [c])
            c += 1

    rec([])
    return out
