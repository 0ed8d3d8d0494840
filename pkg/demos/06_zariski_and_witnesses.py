# %% [markdown]
# Zariski density from traces, and elements with a chosen type per embedding.

# %%
from limitcone import find_mixed_witness, hecke_group, pslz_diagonal, zariski_check
from limitcone.errors import NotFound
from limitcone.groups import parse_polynomial

H = hecke_group(5)
for spec in (H, pslz_diagonal(parse_polynomial("x^2-5"))):
    rep = zariski_check(spec, 8)
    print(spec.label, rep.verdict, "proof" if rep.proof else "evidence", rep.note)

# %%
for pattern in (["Hyp", "EllInf"], ["Hyp", "Hyp"], ["EllInf", "Hyp"]):
    try:
        t = find_mixed_witness(H, pattern, budget=300)
        print(pattern, "->", t.word, [c.tag for c in t.classes])
    except NotFound as exc:
        print(pattern, "-> search exhausted:", exc)
