# %% [markdown]
# Attracting fixed points pushed to the torus.
#
# For a Zariski dense group the points spread over the whole torus. For a
# group of rational matrices viewed in two embeddings they sit on the
# diagonal, so a big empty square remains.

# %%
from limitcone import furstenberg_cloud, hecke_group, pslz_diagonal
from limitcone.groups import parse_polynomial
from limitcone.svg import plot_svg

H = hecke_group(5)
D = pslz_diagonal(parse_polynomial("x^2-5"))
for depth in (8, 10, 12):
    print(depth, "hecke", furstenberg_cloud(H, depth).statistic, "diagonal", furstenberg_cloud(D, depth).statistic)

# %%
with open("furstenberg_hecke5.svg", "w") as fh:
    fh.write(plot_svg(furstenberg_cloud(H, 10)))
