# %% [markdown]
# # Certificates: build, serialize, verify, tamper
#
# For (t, d) = (8, 112) the remainders 32 and 65 are not perfect powers.
# Those classes get a divisibility witness instead: every term is even.

# %%
import dataclasses
import json

from primefree import Pair, certify_pair, verify_certificate
from primefree.certificate import loads

cert = certify_pair(Pair(8, 112))
print("witness primes:", cert.witness_primes)
print("witness classes mod 14:", sorted({w.r % 14 for w in cert.witness_classes}))
print("exceptions below n0 =", cert.n0, ":", cert.exceptions)

# %%
text = cert.to_json()
print(len(text), "bytes of canonical JSON")
print(json.dumps(json.loads(text)["evidence"][3], indent=1))
assert loads(text) == cert

# %%
print(verify_certificate(text))

# %% [markdown]
# Flip one stored residue of a witness class; the checker names the class.

# %%
w = cert.witness_classes[0]
bad = dataclasses.replace(w, checked=(1,) + w.checked[1:])
evidence = list(cert.evidence)
evidence[w.r] = bad
verdict = verify_certificate(dataclasses.replace(cert, evidence=tuple(evidence)))
for failure in verdict.failures:
    print(failure)

# %% [markdown]
# A pair that resists both arguments: floor(n^2/7) keeps producing primes.

# %%
failure = certify_pair(Pair(2, 7))
print("uncovered classes:", failure.uncovered)
