"""Limits through slices, and mapping spaces through cylinders.

A diagram is just a simplicial map p : K -> S.  The slice over p has
cones as vertices; a limit is a final vertex of the slice, certified
up to a chosen dimension by sphere extension.  Everything dualizes.
"""

import math

from finsimp import (
    SimplicialMap,
    colimit,
    cyclic_group,
    discrete_simplicial_set,
    is_final,
    is_kan,
    limit,
    mapping_space,
    nerve,
    one_object_groupoid,
    pi0,
    poset_category,
    slice_over,
    standard_simplex,
)

# The divisors of 12 under divisibility form a lattice; limits of
# two-point diagrams in the nerve are meets, i.e. gcds.
divisors = ["1", "2", "3", "4", "6", "12"]
D = poset_category(divisors, lambda a, b: int(b) % int(a) == 0)
N = nerve(D, 4)
two = discrete_simplicial_set(["u", "v"])

for a, b in [("4", "6"), ("2", "3"), ("6", "12")]:
    p = SimplicialMap(two, N, {"u": N.generator(a), "v": N.generator(b)})
    print(f"diagram ({a}, {b}): limit {limit(p, 2).apex} = gcd,"
          f" colimit {colimit(p, 2).apex} = lcm"
          f" (oracle {math.gcd(int(a), int(b))}, {math.lcm(int(a), int(b))})")

# The slice itself is a simplicial set whose vertices are cones; the
# winning cone's legs are part of the limit report.
p = SimplicialMap(two, N, {"u": N.generator("4"), "v": N.generator("6")})
sl = slice_over(p, 2)
print("\nslice over the (4, 6) diagram:", sl.size_vector())
res = limit(p, 2)
print("legs of the limit cone:",
      {g: str(r) for g, r in sorted(res.cone.assign.items()) if r.dim == 1 and not r.word})

# Finality in the nerve picks out the terminal object directly.
print("12 is final in the lattice nerve:", bool(is_final(N, "12", 2)))
print("4 is final in the lattice nerve:", bool(is_final(N, "4", 2)))

# Mapping spaces: maps from a cylinder with pinned ends.  In the nerve
# of the 2-element group both endpoints are the one object, and the
# path space sees the two group elements as its components.
G = nerve(one_object_groupoid(cyclic_group(2)), 3)
L = mapping_space(G, "pt", "pt", 2)
print("\nloop space of the 2-element group nerve:", L.size_vector())
print("components:", pi0(L))
print("the loop space is Kan up to 1:", is_kan(L, 1).holds)

# In a simplex there is exactly one path up to homotopy.
M = mapping_space(standard_simplex(2), "0", "2", 2)
print("paths 0 -> 2 in the triangle:", M.size_vector(), "components:", len(pi0(M)))
