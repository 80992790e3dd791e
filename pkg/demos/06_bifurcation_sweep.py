# %% [markdown]
# # Omega-limit sweep
#
# For each parameter on a grid, a random point is iterated in double
# precision and the tail of its orbit recorded.  Periodic attractors show
# up as a handful of dots, slowly converging or non-periodic regimes as
# dust.  The same data come out of `disco sweep`.

# %%
from fractions import Fraction as Q
import numpy as np

from disco.aiet import distinct_values
from disco.cli import SweepConfig, run_sweep, sweep_svg

cfg = SweepConfig(Q(11, 100), Q(13, 100), 200, burn_in=10_000, samples=1_000, seed=1)
rows = run_sweep(cfg)
counts = np.array([distinct_values(xs) for _, xs in rows])
print("collapsed:", int((counts <= 32).sum()), "dusty:", int((counts >= 500).sum()))

# %%
with open("sweep.svg", "w") as fh:
    fh.write(sweep_svg(rows, cfg.t_min, cfg.t_max))
print("wrote sweep.svg")
