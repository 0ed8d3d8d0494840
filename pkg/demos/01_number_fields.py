# %% [markdown]
# Exact arithmetic in a totally real field.
#
# Elements are rational coordinate vectors in the power basis of a monic
# minimal polynomial. Real embeddings come back as arb balls at whatever
# precision you ask for, and signs are exact.

# %%
from fractions import Fraction

from limitcone import NumberField, chebyshev_trace

K = NumberField([-1, -1, 1])  # x^2 - x - 1, the golden field
lam = K.gen
print("degree", K.degree)
for i in (1, 2):
    print("embedding", i, K.embed(lam, i, 80))

# %%
# the field relation holds exactly
assert lam * lam == lam + 1
print("1/lam =", lam ** -1)

# %%
# a sign that floats would get wrong: a tiny difference of large numbers
big = (lam ** 60) - (lam ** 60 - K(Fraction(1, 10 ** 30)))
print("sign of 1e-30 at both embeddings:", K.sign(big, 1), K.sign(big, 2))

# %%
# traces of powers: tau_l(t) = trace of an element with trace t raised to l
print([str(chebyshev_trace(l, lam)) for l in range(6)])
