"""The opposite-colour urn: draw a ball, put it back with one ball of the
other colour.  The number of white balls added over n draws has exactly
the law of the diagonal alpha count A at the same (a, b)."""

from collections import Counter
from fractions import Fraction as F

from staircase_tableaux import chi_square_gof, dist_A, urn_sample
from staircase_tableaux.rng import derive_seed

n, a, b = 6, F(1), F(1)

print("one urn run (a = b = 1, n = 6):")
res = urn_sample(n, a, b, seed=11)
print(f"  added white per step: {res.path} -> ({res.added_white} white, {res.added_black} black)")
print()

# exact comparison: the one-step urn recursion reproduces dist_A rows
probs = {0: F(1)}
for m in range(n):
    nxt = {}
    den = m + a + b
    for k, p in probs.items():
        nxt[k] = nxt.get(k, F(0)) + p * (a + k) / den
        nxt[k + 1] = nxt.get(k + 1, F(0)) + p * (m - k + b) / den
    probs = nxt
d = dist_A(n, a, b)
assert all(probs[k] == d.pmf(k) for k in range(n + 1))
print("unrolled urn recursion equals the tableau law of A exactly:")
print(" ", [str(d.pmf(k)) for k in range(n + 1)])
print()

draws = 40_000
obs = Counter()
for i in range(draws):
    obs[urn_sample(n, a, b, derive_seed(100, i)).added_white] += 1
res = chi_square_gof({k: d.pmf(k) for k in range(n + 1)}, obs)
print(f"simulation audit: chi-square p-value over {draws} runs = {res.p_value:.3f}")
print()

# empty start: any rule for the first ball leads to composition (1,1) at
# time 2; the first added ball is white with probability 1/2
first = Counter(urn_sample(2, 0, 0, derive_seed(5, i)).path[0] for i in range(20_000))
print(f"a=b=0 start: first added ball white in {first[1]} of 20000 runs; "
      f"composition is always (1,1) at time 2")
