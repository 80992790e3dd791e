# %% [markdown]
# # The interval map and its rotations
#
# The base map swaps four intervals of [0, 1) while doubling or halving
# them.  It is its own inverse.  Precomposing with a rotation by t gives a
# one-parameter family whose dynamics is the subject of every other demo.

# %%
from fractions import Fraction as Q

from disco.aiet import base_map, detect_periodic, family_member, first_return, orbit

F = base_map()
print(F.to_table())

# %% The involution, checked exactly
x = Q(2, 7)
print(x, "->", F(x), "->", F(F(x)))

# %% [markdown]
# Rotating first breaks the symmetry.  For t = 5/12 every orbit is sucked
# into one 3-cycle; the multiplier is the derivative along it.

# %%
T = family_member(Q(5, 12))
cycle = detect_periodic(T, Q(1, 7))
print(cycle)
rec = orbit(T, Q(1, 7), 12)
print([str(p) for p in rec.points[-4:]])

# %% Inducing on a subinterval
R = first_return(F, 0, Q(1, 6))
print(R.branches)  # identity, each point needs two steps
