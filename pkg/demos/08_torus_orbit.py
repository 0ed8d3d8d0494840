# %% [markdown]
# Orbits of two rotations on the 2-torus.
#
# Independent irrational angles equidistribute; equal angles stay on the
# diagonal.

# %%
from limitcone import torus_orbit

for N in (100, 1_000, 10_000, 100_000):
    print(N, "generic", round(torus_orbit(0.35604, 0.43878, N).statistic, 5), "equal", round(torus_orbit(0.35604, 0.35604, N).statistic, 5))
