# %% [markdown]
# The limit cone of Hecke(5).
#
# Every hyperbolic element gives a direction (l1 : l2) of translation
# lengths under the two embeddings. The ratios l2/l1 fill out an interval
# that widens and loses its gaps as the depth grows.

# %%
from limitcone import cone_hull, direction_cloud, hecke_group

H = hecke_group(5)
for depth in (6, 8, 10, 12):
    rep = cone_hull(direction_cloud(H, depth))
    print(f"depth {depth:2d}  n={rep.count:5d}  ratio in [{rep.ratio_min:.4f}, {rep.ratio_max:.4f}]  max gap {rep.max_gap:.4f}")

# %%
counts, edges = rep.histogram(10)
for c, a in zip(counts, edges):
    print(f"{a:.2f} {'#' * (c // 20)}")
