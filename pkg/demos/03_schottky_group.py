# %% [markdown]
# # The group and its limit set
#
# Two parabolic matrices generate a free group acting on directions.  The
# ping-pong arcs make the reduction of a slope to [1, 4) a greedy walk.

# %%
from fractions import Fraction as Q

from disco import schottky
from disco.exactnum import format_proj

print(schottky.format_report(schottky.veech_checks()))

# %%
for p in (Q(3, 2), Q(6), Q(-7, 3), Q(100, 7), Q(13, 9)):
    r = schottky.reduce_to_fundamental(p)
    print(f"{str(p):>6} -> {r.status.value:9s} {format_proj(r.point):>6} via {r.word.pretty()}")

# %% [markdown]
# The arcs of depth d cover the limit set.  Their total angle shrinks,
# slowly, because the parabolic cusps only lose mass like 1/d.

# %%
for d in range(1, 8):
    arcs = schottky.limit_set_approx(d)
    print(d, len(arcs), round(schottky.total_length(arcs), 4))

# %%
res = schottky.thurston_mu([[2, 2]])
print(res.mu, res.twist_a, res.twist_a.classify().value)
