"""Random function generators shared by the test modules.

Seeds are fixed by the callers so every run sees the same functions.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from degstab import ANF


def random_homogeneous(rng: random.Random, n: int, r: int) -> ANF:
    """Nonzero homogeneous function of degree exactly r."""
    layer = [
        sum(1 << (v - 1) for v in c) for c in combinations(range(1, n + 1), r)
    ]
    while True:
        masks = [m for m in layer if rng.random() < 0.5]
        if masks:
            return ANF.from_monomials(n, masks)


def sparse_homogeneous(rng: random.Random, n: int, r: int, terms: int) -> ANF:
    layer = [
        sum(1 << (v - 1) for v in c) for c in combinations(range(1, n + 1), r)
    ]
    count = min(terms, len(layer))
    return ANF.from_monomials(n, rng.sample(layer, rng.randint(1, count)))


def random_nonconstant(rng: random.Random, n: int) -> ANF:
    """Any function of degree >= 1, dense coefficient draw."""
    while True:
        masks = [m for m in range(1 << n) if rng.random() < 0.5]
        f = ANF.from_monomials(n, masks)
        if f.degree() != 0 and f:
            return f


def random_degree(rng: random.Random, n: int, r: int) -> ANF:
    """Degree exactly r with random lower-order terms."""
    f = random_homogeneous(rng, n, r)
    lower = [m for m in range(1 << n) if m.bit_count() < r and rng.random() < 0.3]
    return f + ANF.from_monomials(n, lower)
