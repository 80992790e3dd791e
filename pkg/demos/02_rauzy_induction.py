# %% [markdown]
# # Renormalising two-interval maps
#
# A two-interval map contracts both pieces and lays them back at opposite
# ends.  Inducing on the bigger piece gives another map of the same kind
# with larger exponents.  When neither piece fits inside the image of the
# other, the map has an attracting periodic orbit and we stop.

# %%
from fractions import Fraction as Q

from disco import rauzy

for s in (Q(1, 2), Q(1, 5), Q(4, 5), Q(1, 3), Q(3, 10)):
    out = rauzy.run(s)
    print(f"s={s}: {out.tag.value:8s} word={out.word!r:6} multiplier={out.multiplier}")

# %% Where does each word stop?
for w in ("", "L", "R", "LL", "LR"):
    print(w or "(empty)", rauzy.format_interval(rauzy.interval_of_word(w)),
          rauzy.format_interval(rauzy.stop_window(w)))

# %% [markdown]
# The stopping windows fill the parameter interval quickly: after ten
# moves only about 5e-4 of it is left undecided.

# %%
print(rauzy.coverage_table(6))

# %% A parameter that keeps inducing, and the shrinking set it leaves
s = rauzy.word_midpoint("LRLRLRLRLRLR")
for depth in (2, 4, 8):
    c = rauzy.cantor_attractor_approx(s, depth)
    print(depth, len(c.intervals), c.total_length)
