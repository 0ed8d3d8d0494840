# %% [markdown]
# Hecke and triangle groups, and breadth-first enumeration of reduced words
# with projective deduplication.

# %%
from limitcone import enumerate_group, hecke_group, triangle_q_inf_inf
from limitcone.groups import format_word

H = hecke_group(5)
print(H.label, H.field.minpoly, "r =", H.r)

# %%
for depth in (4, 6, 8, 10):
    run = enumerate_group(H, depth)
    print(depth, len(run), run.counts[-3:])

# %%
run = enumerate_group(H, 3)
for word, g in run.elements[:10]:
    print(format_word(word, H.names).ljust(12), g.trace)

# %%
tri = triangle_q_inf_inf(5)
E, P = tri.generators["E"], tri.generators["P"]
print("E^5 = 1:", (E ** 5).is_identity(), " tr(EP)^2 =", (E * P).trace_squared)
