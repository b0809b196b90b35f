"""Joins, cones and products, with their counting identities.

The join glues two simplicial sets by adding a mixed cell for every
pair of cells, one from each side, in total dimension one less.  Cones
are joins with a point; products interleave vertex orders.
"""

import itertools
import math

from finsimp import (
    find_isomorphism,
    join,
    left_cone,
    product,
    right_cone,
    simplex_boundary,
    standard_simplex,
)

# Joining simplices yields a simplex: the vertices concatenate.
for i, j in [(0, 0), (1, 1), (2, 1)]:
    J = join(standard_simplex(i), standard_simplex(j))
    target = standard_simplex(i + j + 1)
    iso = find_isomorphism(J, target)
    print(f"join of simplex {i} and simplex {j}: sizes {J.size_vector()},",
          "isomorphic to the", i + j + 1, "simplex:", iso is not None)

# The level counts follow the pair formula exactly.
bd, _ = simplex_boundary(2)
edge = standard_simplex(1)
J = join(bd, edge)
print("\nboundary * edge sizes:", J.size_vector())


def level(S, n):
    return len(S.gens[n]) if n <= S.bound else 0


for n in range(J.bound + 1):
    own = level(bd, n) + level(edge, n)
    mixed = sum(level(bd, i) * level(edge, n - 1 - i) for i in range(n))
    print(f"  level {n}: {len(J.gens[n])} = {own} own + {mixed} mixed")

# A cone is a join with a single point; the apex vertex is reported.
C = left_cone(bd)
print("\ncone on the triangle boundary:", C.sset.size_vector(), "apex", C.apex)
print("right cone instead:", right_cone(bd).apex)

# Non-degenerate top cells of a product of simplices are shuffles.
print("\nshuffle counts in products of simplices:")
for p, q in itertools.combinations_with_replacement(range(3), 2):
    P = product(standard_simplex(p), standard_simplex(q))
    print(f"  {p} x {q}: top cells {len(P.gens[p + q])}"
          f" = C({p + q},{p}) = {math.comb(p + q, p)}")
