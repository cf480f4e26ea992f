"""Shared helpers: deterministic pseudo-random data and composite fixtures."""

from __future__ import annotations

import random
from fractions import Fraction

from lienil.catalog import builtin
from lienil.liealg import LieAlgebra
from lienil.linalg import Matrix, invert


def seeded_elements(dim: int, count: int, seed: int) -> list[tuple[Fraction, ...]]:
    """Reproducible element coordinates: small rationals, seed-determined."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(tuple(
            Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))
            for _ in range(dim)))
    return out


def seeded_invertible_matrices(dim: int, count: int, seed: int) -> list[Matrix]:
    """Reproducible invertible integer matrices (rejection-sampled)."""
    rng = random.Random(seed)
    out: list[Matrix] = []
    while len(out) < count:
        candidate = Matrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)])
        if invert(candidate) is not None:
            out.append(candidate)
    return out


def sl2_plus_sl2() -> LieAlgebra:
    one = builtin("sl2").algebra
    return one.direct_sum(one)


SEMISIMPLE_NAMES = ("sl2", "sl3", "so3")
