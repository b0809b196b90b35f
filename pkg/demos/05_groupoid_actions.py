"""Group and groupoid actions, their groupoids, and derived groupoids.

An action is a finite table (arrow, point) -> point checked against
the unit and compatibility squares.  The action groupoid makes the
points objects; saturated subsets, orbit groupoids of coset
translation, and functor groupoids all come out as further tables.
"""

from finsimp import (
    GroupoidAction,
    action_groupoid,
    cyclic_group,
    functor_groupoid,
    group_action,
    groupoid_nerve,
    is_kan,
    is_saturated,
    one_object_groupoid,
    orbit_groupoid,
    pi0,
    restriction,
    subgroup_closure,
    symmetric_group,
    validate_action,
)

z2 = cyclic_group(2)
swap = group_action(z2, ["x", "y"], {("g1", "x"): "y", ("g1", "y"): "x"})
print("swap action violations:", validate_action(swap))

# A broken table is caught with the offending entry spelled out.
bad = GroupoidAction(swap.family, {**swap.act, ("g1", "x"): "x"})
print("mutated table:", validate_action(bad))

G = action_groupoid(swap)
print("\naction groupoid objects:", G.objects)
print("arrows:", sorted(G.morphisms))
print("components of its nerve:", pi0(groupoid_nerve(G, 1)))

# Saturation: a subset of objects is saturated when no arrow escapes.
print("is {x@pt} saturated:", is_saturated(G, ["x@pt"]).holds,
      "| witness:", is_saturated(G, ["x@pt"]).witness)
print("is everything saturated:", is_saturated(G, G.objects).holds)
print("restriction to x@pt has morphisms:", sorted(restriction(G, ["x@pt"]).morphisms))

# Orbit groupoid: S3 translating its cosets modulo the subgroup
# generated by the transposition of 0 and 1.  Three cosets, every pair
# connected, isotropy of order 2.
s3 = symmetric_group(3)
h = subgroup_closure(s3, ["p102"])
orb = orbit_groupoid(s3, h)
print("\norbit groupoid of S3 by a 2-element subgroup:")
print("objects:", orb.objects)
print("arrow count:", len(orb.morphisms))
print("its nerve is Kan up to 2:", is_kan(groupoid_nerve(orb, 2), 2).holds)

# Functor groupoids: functors as objects, natural transformations as
# arrows.  From the 2-element to the 3-element group only the trivial
# homomorphism exists, but it has three self-transformations.
z3 = cyclic_group(3)
F = functor_groupoid(one_object_groupoid(z2), one_object_groupoid(z3))
print("\nfunctors BZ2 -> BZ3:", F.objects, "with", len(F.morphisms), "transformations")
E = functor_groupoid(one_object_groupoid(z2), one_object_groupoid(z2))
print("functors BZ2 -> BZ2:", E.objects,
      "| components:", pi0(groupoid_nerve(E, 1)))
