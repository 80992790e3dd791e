# %% [markdown]
# # Flowing on the surface
#
# A rectangle of height 1/6 whose top is glued to its bottom by the
# involution.  A straight line of slope p (horizontal run per unit
# height) crosses the rectangle and comes back to the bottom edge through
# the family member with t = p/6.

# %%
from fractions import Fraction as Q

from disco import surface
from disco.aiet import family_member

print(surface.vertex_angle_check(), "genus", surface.genus())
print(surface.cylinder_moduli())

# %%
for p in (Q(0), Q(1), Q(7, 3)):
    same = surface.first_return_direction(p) == family_member(p / 6)
    print(p, same)

# %% Leaves
tr = surface.trace_leaf(Q(1, 3), Q(0), 10)
print(surface.leaf_csv(tr))
tr = surface.trace_leaf(Q(1, 7), Q(3, 2), 30)
print("contraction after 30 crossings:", tr.crossings[-1].derivative)
print("leaf from a cone point at slope 1 hits another at crossing",
      surface.trace_leaf(Q(1, 2), Q(1), 20).singular_crossing)

# %% Cylinders
for p in (Q(0), Q(3, 2), Q(2, 3)):
    print(p, surface.find_cylinders(p, 16))
