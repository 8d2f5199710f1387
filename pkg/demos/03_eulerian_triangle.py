"""The generalized Eulerian triangle v_{a,b}(n,k):

    v(n,k) = (k+a) v(n-1,k) + (n-k+b) v(n-1,k-1),  v(0,0) = 1.

Classical Eulerian numbers sit at (a,b) = (1,0), their shifted variants at
(0,1) and (1,1), and type-B Eulerian numbers are 2^n v_{1/2,1/2}(n,k)."""

from fractions import Fraction as F

from staircase_tableaux import (
    c_table,
    eulerian,
    p_eval,
    rising_factorial,
    tilde_v,
    v_symbolic,
    v_triangle,
)

print("symbolic rows (polynomials in a, b):")
for n in range(4):
    print(f"  n={n}:", " | ".join(str(v_symbolic(n, k)) for k in range(n + 1)))
print()

tri = v_triangle(8, 1, 1)
print("v_{1,1}(n,k) equals the Eulerian number <n+1, k>:")
for n in range(5):
    row = [int(x) for x in tri.row(n)]
    check = [eulerian(n + 1, k) for k in range(n + 1)]
    assert row == check
    print(f"  n={n}: {row}")
print()

print("type-B Eulerian numbers 2^n v_{1/2,1/2}(n,k):")
trib = v_triangle(4, F(1, 2), F(1, 2))
for n in range(5):
    print(f"  n={n}: {[int(2**n * x) for x in trib.row(n)]}")
print()

# row sums are rising factorials (a+b)^{rise n}
a, b = F(2), F(3, 7)
tri = v_triangle(30, a, b)
assert all(tri.row_sum(n) == rising_factorial(a + b, n) for n in range(31))
print(f"row sums at (a,b)=({a},{b}) match (a+b)^(rise n) up to n=30")

# P evaluations: P(1) is the partition-function normalizer
print("P_{5,1,1}(2) =", p_eval(5, 1, 1, 2), " P_{5,1,1}(1) =", p_eval(5, 1, 1, 1))

# the (0,0) substitutes shift the (1,1) triangle
print("tilde rows (a=b=0 substitutes):",
      [[int(tilde_v(n, k)) for k in range(n + 1)] for n in (2, 3, 4)])

# connection coefficients c_{n,l}: c_{n,n} = 1, c_{n,n-1} = n(n+2b-1)/2
ct = c_table(6, F(1, 2))
print("c-table diagonal and subdiagonal at b=1/2:",
      [(int(ct.c(n, n)), ct.c(n, n - 1)) for n in range(1, 7)])
