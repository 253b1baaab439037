"""Cross-validating the digraph test with a brute-force lattice search.

The grid oracle knows nothing about strong connectivity: it just tries
every point of a multiplicative lattice around w and reports one that
strictly dominates.  Finding a dominator proves inefficiency outright;
agreement over many random instances is independent evidence that the
digraph test is implemented correctly.
"""

import random
from fractions import Fraction as F

from effvec import (
    GridSpec,
    exhaustive_small_equivalence,
    grid_dominator_search,
    is_efficient,
    validate_reciprocal,
)

# one inefficient instance, by hand
B = validate_reciprocal([[1, 2, 3], [F(1, 2), 1, 1], [F(1, 3), 1, 1]])
w = (F(3), F(2), F(1))
print(f"digraph verdict for w = {w}: {is_efficient(B, w).status}")
v = grid_dominator_search(B, w, GridSpec(w, rho=2.0, m=6))
print(f"lattice dominator found: {v}")
assert v is not None

# and an efficient one: the lattice must come up empty
w = (F(3), F(2), F(1), F(2))
C = validate_reciprocal(
    [[1, 2, 3, F(1, 2)], [F(1, 2), 1, 1, 1], [F(1, 3), 1, 1, 1], [2, 1, 1, 1]]
)
assert is_efficient(C, w).efficient
assert grid_dominator_search(C, w, GridSpec(w, rho=2.0, m=4)) is None
print(f"\nw = {w} is efficient: no lattice point dominates, as required")

# bulk agreement over random instances
rng = random.Random(2)
rep = exhaustive_small_equivalence(200, rng, n=3)
print(f"\n200 random n=3 instances: {rep.efficient} efficient, "
      f"{rep.inefficient} inefficient, {len(rep.contradictions)} contradictions "
      f"({rep.runtime_ms:.0f}ms)")
assert not rep.contradictions
