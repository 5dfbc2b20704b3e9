# %% [markdown]
# # Infinite families and the Wilson-factorial sequence

# %%
from primefree import Pair, certify_pair, residue_set
from primefree.families import (fermat_pair, q2plus1_pairs, q6q3plus1_pairs, wilson_params,
                                wilson_terms)

print([str(fermat_pair(p)) for p in (3, 5, 7, 11, 13)])
print([str(i.pair) for i in q2plus1_pairs(30)])
print([str(i.pair) for i in q6q3plus1_pairs(8)])

# %% [markdown]
# For p = q^6 + q^3 + 1 every remainder of n^((p-1)/3) is a cube.

# %%
for inst in q6q3plus1_pairs(3):
    print(inst.p, sorted(residue_set(inst.pair.t, inst.p)), "q =", inst.q)
    cert = certify_pair(inst.pair)
    print("  evidence kinds:", {type(e).__name__ for e in cert.evidence})

# %% [markdown]
# Wilson-factorial terms q_n = floor((p-1)! (n^2 + c) / p).

# %%
p = 7
for c in wilson_params(p):
    terms = list(wilson_terms(p, c, 8))
    print(f"c = {c}:", ", ".join(f"{t.q_n}={t.factor}*{t.q_n // t.factor}" for t in terms))
