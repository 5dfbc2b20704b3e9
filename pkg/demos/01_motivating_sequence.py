# %% [markdown]
# # The sequence floor(n^2 / 5)
#
# Only three of its terms are prime. This script finds them and then shows,
# residue class by residue class, why nothing past n = 2d = 10 can be prime.

# %%
from primefree import Pair, certify_pair, scan_primes
from primefree.scan import power_factor_split

pair = Pair(2, 5)
print([n * n // 5 for n in range(1, 25)])

# %%
report = scan_primes(pair, 10_000)
print(f"prime terms for n <= {report.n_max}: {report.primes}  ({report.duration:.2f}s)")

# %% [markdown]
# Every remainder n^2 mod 5 is 0, 1 or 4, all perfect squares, so
# 5 * floor(n^2/5) = n^2 - b^2 = (n - b)(n + b).

# %%
cert = certify_pair(pair)
for e in cert.evidence:
    print(f"n = 5q + {e.r}:  n^2 = {e.s} = {e.base}^{e.k}  (mod 5)")

# %%
for n in (11, 12, 13, 14, 100):
    a, b = power_factor_split(n, cert.evidence[n % 5], 2, 5)
    print(f"floor({n}^2/5) = {n * n // 5} = {a} * {b}")
