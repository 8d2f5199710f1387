"""Tour of the tableau data model: build a size-8 staircase tableau,
validate it, inspect its statistics, and round-trip it through JSON."""

from staircase_tableaux import (
    Symbol,
    Tableau,
    counts,
    dagger,
    parse,
    render_text,
    serialize,
    subtableau,
    validate,
    weight,
)

A, B, G, D = Symbol.ALPHA, Symbol.BETA, Symbol.GAMMA, Symbol.DELTA

# A staircase tableau of size 8: boxes (i, j) with i + j <= 9, rows and
# columns counted from the NW corner.  Every diagonal box is filled, betas
# and deltas see only empty boxes to their left, alphas and gammas only
# empty boxes above.
t = Tableau.of(8, [
    (1, 2, A), (1, 8, G),
    (2, 2, B), (2, 5, A), (2, 7, G),
    (3, 3, A), (3, 6, G),
    (4, 5, D),
    (5, 2, D), (5, 4, A),
    (6, 3, D),
    (7, 2, B),
    (8, 1, A),
])

print("rendered ('.' = empty box):")
print(render_text(t))
print()

print("violations:", validate(t) or "none")

c = counts(t)
print(f"symbol counts: {c.n_alpha} alphas, {c.n_beta} betas, "
      f"{c.n_gamma} gammas, {c.n_delta} deltas")
print(f"on the diagonal: {c.diagonal_alpha} alphas, {c.diagonal_beta} betas")
print(f"rows indexed by alpha: {c.alpha_indexed_rows}")
print("weight at (alpha,beta,gamma,delta) = (2,1,1,3):", weight(t, 2, 1, 1, 3))
print()

# Deleting leading rows/columns leaves a smaller staircase tableau.
s = subtableau(t, 1, 2)
print(f"subtableau from box (1,2) has size {s.n} and is valid: {not validate(s)}")

# The dagger symmetry transposes the diagram and swaps alpha<->beta,
# gamma<->delta; applying it twice is the identity.
print("dagger diagonal word:", "".join(x.letter for x in dagger(t).diagonal()))
print("dagger twice is identity:", dagger(dagger(t)) == t)

# JSON round trip
blob = serialize(t)
print("serialized bytes:", len(blob), "| round-trips:", parse(blob) == t)
