"""Build the basic shapes and poke at their combinatorics.

Every simplicial set here is finite data: a list of non-degenerate
generators per dimension plus a face table.  Degenerate simplices are
never stored; they are spelled as a degeneracy word applied to a
generator, and the library normalizes any face/degeneracy composite
back to that form.
"""

from finsimp import (
    degeneracy,
    enumerate_maps,
    face,
    horn,
    simplex_boundary,
    simplices,
    standard_simplex,
    validate,
)

tri = standard_simplex(2)
print("the 2-simplex:", tri)
print("generators by dimension:", tri.size_vector())
print("faces of the top cell:", [r.gen for r in tri.face_table["012"]])

# All simplices of a given dimension, degenerate ones included: three
# honest edges plus one degenerate edge per vertex.
print("edges including degenerate:", len(simplices(tri, 1)))

# Faces of a degenerate simplex follow the rewriting rules: d0 s0 is
# the identity, while d2 s0 commutes past the degeneracy.
e = tri.generator("01")
s = degeneracy(tri, 0, e)          # the degenerate triangle s0(01)
print("s0(01) =", s)
print("d0 s0(01) =", face(tri, 0, s), "(recovers the edge)")
print("d2 s0(01) =", face(tri, 2, s), "(the constant edge at vertex 0)")

# A boundary and a horn are subcomplexes of the simplex.
bd, _ = simplex_boundary(2)
hn, _ = horn(2, 1)
print("boundary of the triangle:", bd.size_vector())
print("inner horn of the triangle:", hn.size_vector())

# The validator replays every simplicial identity on the stored data.
print("identity violations in the 4-simplex:", validate(standard_simplex(4)))

# Simplicial maps are generator assignments; enumeration is exhaustive
# and deterministic.  Maps from the edge into the triangle = paths of
# length one, i.e. 6 ordered vertex pairs with i <= j.
maps = enumerate_maps(standard_simplex(1), tri)
print("maps from the edge into the triangle:", len(maps))
print("one of them sends 01 to", maps[3].assign["01"])
