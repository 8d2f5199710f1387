"""Where the symbols sit: exact per-box probabilities, joint diagonal
laws, and the self-similarity of subtableaux."""

from fractions import Fraction as F

from staircase_tableaux import (
    cell_prob,
    diag_cov,
    diag_prob,
    joint_diag_alpha,
    subtableau_law_check,
)

n, a, b = 8, F(1, 2), F(1)

print(f"P(i-th diagonal box holds alpha), n={n}, a={a}, b={b}:")
print(" ", [str(diag_prob(n, a, b, i)) for i in range(1, n + 1)])
print("(decreasing linearly from NE to SW)")
print()

print("non-diagonal boxes are mostly empty; P(filled) = 1/(i+j+a+b-1):")
for i in range(1, 4):
    row = [str(cell_prob(n, a, b, i, j)[2]) for j in range(1, 5)]
    print(f"  row {i}: {row}")
print()

print("joint alpha law on the diagonal (columns 2, 5, 7):",
      joint_diag_alpha(n, a, b, (2, 5, 7)))
print("covariance of the alpha indicators in columns 2 and 7:",
      diag_cov(n, a, b, 2, 7), "(never positive)")
print()

# Deleting i-1 rows and j-1 columns of the weighted random tableau leaves
# a weighted random tableau of the smaller size with shifted parameters
# a+i-1, b+j-1.  Checked exactly by enumerating both sides.
for (nn, i, j) in [(4, 1, 2), (4, 2, 2), (5, 3, 1)]:
    rep = subtableau_law_check(nn, F(1), F(1, 2), i, j)
    print(f"subtableau law at n={nn}, corner ({i},{j}): size {rep.sub_size}, "
          f"shifted (a,b) = ({rep.a_hat},{rep.b_hat}), exact equality: {rep.equal}")
