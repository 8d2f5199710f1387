"""Brute-force enumeration against the closed product formula.

The number of alpha/beta staircase tableaux of size n is (n+1)!, the
number of four-symbol ones is 4^n n!, and the weighted sum over all
tableaux factors as

    Z_n = prod_{i<n} (alpha + beta + gamma + delta
                      + i (alpha + gamma)(beta + delta)).
"""

import math
from fractions import Fraction as F

from staircase_tableaux import (
    counts,
    enumerate_ab,
    enumerate_four,
    max_symbol_tableaux,
    partition_function,
)

print("n  |S_n^{ab}|  (n+1)!   |S_n|  4^n n!   max  2(n-1)!")
for n in range(1, 6):
    n_ab = sum(1 for _ in enumerate_ab(n))
    n_four = sum(1 for _ in enumerate_four(n)) if n <= 4 else None
    n_max = sum(1 for _ in max_symbol_tableaux(n))
    print(f"{n}  {n_ab:9d}  {math.factorial(n+1):6d}  "
          f"{n_four if n_four is not None else '-':>5}  {4**n*math.factorial(n):6d}  "
          f"{n_max:4d}  {2*math.factorial(n-1):6d}")
print()


def product_form(n, al, be, ga, de):
    out = F(1)
    for i in range(n):
        out *= al + be + de + ga + i * (al + ga) * (be + de)
    return out


print("enumerated Z_n versus the product formula:")
for params in [(1, 1, 1, 1), (2, 1, 0, 0), (F(1, 2), 3, 2, 0)]:
    for n in (2, 3, 4):
        z = partition_function(n, *params)
        assert z == product_form(n, *map(F, params))
        print(f"  Z_{n}{params} = {z}")
print()

# delta-free tableaux: Z_n(2,1) = (2n+1)!!
print("Z_n(2,1) is the double factorial (2n+1)!!:")
for n in range(1, 7):
    z = partition_function(n, 2, 1)
    print(f"  n={n}: {z} = {'*'.join(str(k) for k in range(2*n+1, 0, -2))}")
print()

# the maximal tableaux (2n-1 symbols) split evenly by their alpha count
n = 5
split: dict[int, int] = {}
for t in max_symbol_tableaux(n):
    na = counts(t).n_alpha
    split[na] = split.get(na, 0) + 1
print(f"maximal tableaux at n={n} split by alpha count: {split} (each (n-1)! = 24)")
