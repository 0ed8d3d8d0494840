# %% [markdown]
# Ping-pong: powers of two hyperbolic elements with distinct fixed points
# generate a free group. The certificate lists four disjoint arcs.

# %%
from limitcone import hecke_group, schottky_powers
from limitcone.moebius import verify_ping_pong

H = hecke_group(5)
S, T = H.generators["S"], H.generators["T"]
g = T ** 4 * S
h = S * g * S.inverse()
cert = schottky_powers(g, h)
print("power", cert.n)
print(cert.to_json())
print("verified:", verify_ping_pong(g, h, cert))
