# %% [markdown]
# Directions of products of two parabolics.
#
# With tr = n A - B the direction converges to a limit set by the
# conjugates of A; the error shrinks like 1/n^2.

# %%
from limitcone import hecke_group, parabolic_family

K = hecke_group(5).field
lam = K.gen
fam = parabolic_family(4 * lam, 4 * lam, [1, 10, 100, 10_000, 1_000_000])
for row in fam.rows:
    print(f"n={row.n:8d}  ratio={float(row.ratio().mid()):.10f}  error={float(row.error[1].mid()):.3e}")

# %%
# small n can still be elliptic in the second embedding; those are skipped
fam = parabolic_family(lam + 1, lam + 1, range(1, 7))
print("skipped", [(e.n, e.index) for e in fam.skipped])
