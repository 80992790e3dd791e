# %% [markdown]
# # Classifying directions
#
# Reduce, then decide: the cylinder band is trivially attracting, the
# stable band goes through the induction, and cusps are periodic.

# %%
from fractions import Fraction as Q
from collections import Counter

from disco.classify import Caps, classify_direction, classify_parameter_t

for slope in ("inf", "3/2", "3", "5/2", "-7/3", "10/3", "100/7"):
    print(classify_direction(slope).to_json())

# %% Directions near the figure window
grid = [Q(11, 100) + i * Q(2, 100) / 199 for i in range(200)]
print(Counter(classify_parameter_t(t).tag.value for t in grid))

# %% [markdown]
# Some rationals sit so close to a cusp that 64 reduction steps are not
# enough; a larger cap settles them.

# %%
t = Q(2211, 19900)
print(classify_parameter_t(t).tag.value,
      classify_parameter_t(t, Caps(reduce_depth=5000)).tag.value)
