"""Deciding Pareto efficiency of a weight vector for a reciprocal matrix.

A positive vector w is efficient for a reciprocal matrix A when no other
positive vector approximates A at least as well entrywise (|a_ij - v_i/v_j|)
and strictly better somewhere.  The decision reduces to a graph property:
w is efficient iff the digraph with an edge i -> j whenever w_i/w_j >= a_ij
is strongly connected.
"""

from fractions import Fraction as F

from effvec import dominance_compare, is_efficient, validate_reciprocal
from effvec.efficiency import V_DOMINATES

A = validate_reciprocal(
    [
        [1, 2, 3, F(1, 2)],
        [F(1, 2), 1, 1, 1],
        [F(1, 3), 1, 1, 1],
        [2, 1, 1, 1],
    ]
)

print("matrix consistent?  (a12 * a23 = 2 != 3 = a13)")

for w in [(3, 2, 1, 2), (3, 2, 1, 1)]:
    verdict = is_efficient(A, w)
    print(f"\nw = {w}: {verdict.status}")
    print("  strongly connected components:",
          [[i + 1 for i in c] for c in verdict.components])
    if not verdict.efficient:
        # the verdict carries a constructive certificate: a vector that is
        # at least as close to A everywhere and strictly closer somewhere
        print("  source set:", [i + 1 for i in verdict.source_set])
        print("  dominating vector:", verdict.dominator)
        assert dominance_compare(A, w, verdict.dominator) == V_DOMINATES

# Efficiency is scale invariant: any positive multiple gets the same verdict.
assert is_efficient(A, (6, 4, 2, 4)).efficient
print("\n(6,4,2,4) = 2 * (3,2,1,2) is efficient too, as it must be")
