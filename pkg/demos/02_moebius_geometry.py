# %% [markdown]
# Moebius transformations over a number field, one embedding at a time.

# %%
from limitcone import classify, fixed_points, hecke_group, translation_direction, translation_length, tuple_embed

H = hecke_group(5)
S, T = H.generators["S"], H.generators["T"]

for name, g in [("T", T), ("T S", T * S), ("T^2 S", T ** 2 * S), ("T^4 S", T ** 4 * S)]:
    tags = [classify(g, i).tag for i in (1, 2)]
    print(f"{name:6s}", tags)

# %%
g = T ** 4 * S
print("lengths", [float(translation_length(g, i).mid()) for i in (1, 2)])
print("direction", translation_direction(tuple_embed(g, (1, 2))).floats())

# %%
fp = fixed_points(g, 1)
print("attracting", fp.attractive, "repelling", fp.repulsive)
