"""
Building functions that keep their degree
=========================================

Three constructions, each verified by exhaustive scans after the fact:
a randomized per-variable witness search, disjoint monomial sums, and
the circular monomial layout.
"""

import random

from degstab.construct import (
    randomized_construction,
    check_hyperplane_sufficient,
    circular_construction,
    direct_sum,
)
from degstab.degreedrop import deg_stab, has_degree_drop_space

# randomized construction: degree 4 in 12 variables, certified by the
# monomial witness condition, then checked against all 4095 hyperplanes
result = randomized_construction(12, 4, seed=2024)
f = result.to_anf()
print("construction output:", result.to_text())
print("  monomials:", len(result.masks),
      " worst candidate rejections:", result.max_candidate_failures)
print("  witness condition:", check_hyperplane_sufficient(result).ok)
print("  exhaustive hyperplane scan clean:",
      not has_degree_drop_space(f, 1))

# sampling seeds shows the construction is not a single lucky draw
seeds = random.Random(0).sample(range(10 ** 6), 5)
clean = sum(
    not has_degree_drop_space(randomized_construction(10, 5, seed=s).to_anf(), 1)
    for s in seeds
)
print(f"\n{clean} of {len(seeds)} random seeds give hyperplane-stable"
      " functions at n=10, r=5")

# p disjoint monomials push stability up to co-dimension p - 1
g = direct_sum(3, 3, 9)
print("\ndirect sum:", g.to_text())
print("  deg_stab =", deg_stab(g), "(p - 1 with p = 3 summands)")

# the circular layout gets one co-dimension with overlapping monomials,
# using fewer variables than the disjoint sum would need
h = circular_construction(8, 3, 1)
print("\ncircular:", h.to_text())
print("  deg_stab =", deg_stab(h))
