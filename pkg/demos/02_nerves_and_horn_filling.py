"""Nerves of finite categories, and what horn filling detects.

The nerve stores composable chains of non-identity morphisms as
generators; inner faces compose adjacent arrows.  Horn-filling checks
then read off categorical structure: every inner horn fills uniquely
(composition exists and is associative), and outer horns fill exactly
when the category is a groupoid.
"""

from finsimp import (
    arrow_category,
    cyclic_group,
    is_groupoid,
    is_kan,
    is_quasicategory,
    has_unique_inner_fillers,
    nerve,
    nerve_detect,
    one_object_groupoid,
    symmetric_group,
)

bz2 = one_object_groupoid(cyclic_group(2))
S = nerve(bz2, 3)
print("nerve of the 2-element group, window to dim 3:", S.size_vector())

# One object, one non-identity arrow g with g*g = id: chains are words
# in g, one per length.
print("Kan up to 3:", is_kan(S, 3).holds)

# The walking arrow is not a groupoid; its nerve fails an outer horn.
A = nerve(arrow_category(), 3)
res = is_kan(A, 3)
print("walking arrow Kan:", res.holds)
w = res.witness
print(f"unfillable outer horn ({w.n}, {w.i}) asks for an inverse:",
      dict(sorted((k, str(v)) for k, v in w.assignment.assign.items())))

# Inner horns are a different story: every nerve is a quasi-category
# with unique fillers, groupoid or not.
print("walking arrow quasi-category:", is_quasicategory(A, 3).holds)
print("unique inner fillers:", has_unique_inner_fillers(A, 3).holds)

# Unique inner fillers are enough to reconstruct the category.
back = nerve_detect(A, 3)
print("detected objects:", back.category.objects)
print("detected morphisms:", sorted(back.category.morphisms))

# Scale check: the symmetric group on 3 letters has 6 elements, so its
# nerve grows as powers of 5 non-identity arrows.
bs3 = nerve(one_object_groupoid(symmetric_group(3)), 3)
print("nerve of S3 sizes:", bs3.size_vector())
print("S3 giving a Kan complex:", is_kan(bs3, 3).holds,
      "| the group is a groupoid:", is_groupoid(one_object_groupoid(symmetric_group(3))).holds)
