"""Exhaustive generation of staircase tableaux and exact generating sums.

This is the ground-truth oracle for everything else in the package: the
generators are constructive (valid by construction, each tableau exactly
once) and the sums are plain weighted sums over the streams.

The alpha/beta generator grows a tableau one column at a time, left to
right in construction order: extending a size m-1 tableau to size m means
prepending a column of m boxes and filling it one of three ways

  (i)   an alpha in the new bottom box and nothing else;
  (ii)  a beta in the bottom box plus betas in any subset of the rows
        currently indexed by alpha;
  (iii) as (ii) but with the topmost added symbol an alpha.

Growing columns are prepended, so internally the column added at step m is
addressed as -m and shifted to 1..n at the end; rows never move.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from fractions import Fraction

from .errors import CapExceededError, ParameterError
from .tableau import Symbol, Tableau, counts, validate, weight

__all__ = [
    "AB_CAP",
    "FOUR_CAP",
    "enumerate_ab",
    "enumerate_four",
    "enumerate_naive",
    "partition_function",
    "law_ab",
    "JointPoly",
    "joint_poly_A_r",
    "joint_poly_N",
    "max_symbol_tableaux",
]

AB_CAP = 8
FOUR_CAP = 5


def _check_cap(n: int, cap: int, override: bool) -> None:
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if n > cap and not override:
        raise CapExceededError(
            f"n={n} exceeds the enumeration cap {cap}; pass allow_large=True to override"
        )


def _grow(cells: list[tuple[int, int, Symbol]], alpha_rows: list[int],
          size: int, target: int) -> Iterator[list[tuple[int, int, Symbol]]]:
    """Depth-first column extension; yields cell lists in negative columns."""
    if size == target:
        yield cells
        return
    m = size + 1
    col = -m
    # case (i): single alpha in the bottom box
    yield from _grow(cells + [(m, col, Symbol.ALPHA)], alpha_rows + [m], m, target)
    # case (ii): bottom beta plus betas in a subset of alpha-indexed rows
    for k in range(len(alpha_rows) + 1):
        for subset in itertools.combinations(alpha_rows, k):
            new = cells + [(m, col, Symbol.BETA)]
            new += [(r, col, Symbol.BETA) for r in subset]
            remaining = [r for r in alpha_rows if r not in subset]
            yield from _grow(new, remaining, m, target)
    # case (iii): as (ii) but the topmost added symbol is an alpha
    for k in range(1, len(alpha_rows) + 1):
        for subset in itertools.combinations(alpha_rows, k):
            top = min(subset)
            new = cells + [(m, col, Symbol.BETA)]
            new += [
                (r, col, Symbol.ALPHA if r == top else Symbol.BETA) for r in subset
            ]
            remaining = [r for r in alpha_rows if r not in subset or r == top]
            yield from _grow(new, remaining, m, target)


def enumerate_ab(n: int, allow_large: bool = False) -> Iterator[Tableau]:
    """All alpha/beta staircase tableaux of size n, each exactly once.

    There are (n+1)! of them.  Guarded by AB_CAP (default 8).  Size 0 is
    the single empty tableau.
    """
    _check_cap(n, AB_CAP, allow_large)
    for cells in _grow([], [], 0, n):
        yield Tableau(n, tuple((r, c + n + 1, s) for r, c, s in cells))


def enumerate_four(n: int, allow_large: bool = False) -> Iterator[Tableau]:
    """All four-symbol staircase tableaux of size n: every alpha/beta
    tableau expanded by relabelling alphas to gamma and betas to delta in
    all possible subsets.  There are 4^n n! of them."""
    _check_cap(n, FOUR_CAP, allow_large)
    for base in enumerate_ab(n, allow_large=True):
        spots = list(base.cells)
        options = [
            ((r, c, s), (r, c, Symbol.GAMMA if s is Symbol.ALPHA else Symbol.DELTA))
            for (r, c, s) in spots
        ]
        for choice in itertools.product(*options):
            yield Tableau(n, choice)


def enumerate_naive(n: int, four: bool = False) -> Iterator[Tableau]:
    """Independent certification generator: fill every box with one of the
    allowed symbols or leave it empty, keep what validates.  Exponential in
    n(n+1)/2, so restricted to n <= 3."""
    if not 1 <= n <= 3:
        raise CapExceededError("naive enumeration is restricted to 1 <= n <= 3")
    boxes = [(i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i)]
    symbols: list[Symbol | None] = [None, Symbol.ALPHA, Symbol.BETA]
    if four:
        symbols += [Symbol.GAMMA, Symbol.DELTA]
    for assignment in itertools.product(symbols, repeat=len(boxes)):
        cells = tuple(
            (r, c, s) for (r, c), s in zip(boxes, assignment) if s is not None
        )
        t = Tableau(n, cells)
        if not validate(t):
            yield t


def partition_function(n: int, alpha, beta, gamma=0, delta=0,
                       allow_large: bool = False) -> Fraction:
    """Z_n(alpha, beta, gamma, delta) as a direct weighted sum over the
    enumeration stream (the four-symbol stream, or the alpha/beta stream
    when gamma = delta = 0, where the extra symbols carry weight zero)."""
    alpha, beta, gamma, delta = (Fraction(x) for x in (alpha, beta, gamma, delta))
    if min(alpha, beta, gamma, delta) < 0:
        raise ParameterError("weights must be >= 0")
    if gamma == 0 and delta == 0:
        stream = enumerate_ab(n, allow_large)
    else:
        stream = enumerate_four(n, allow_large)
    return sum(
        (weight(t, alpha, beta, gamma, delta) for t in stream), Fraction(0)
    )


def law_ab(n: int, alpha, beta, allow_large: bool = False) -> dict[Tableau, Fraction]:
    """Exact law of the weighted random alpha/beta tableau:
    P(S) = alpha^Na(S) beta^Nb(S) / Z_n(alpha, beta).

    alpha and/or beta may be ``math.inf``; the law then concentrates on the
    tableaux maximizing the corresponding symbol count (uniformly over the
    maximizers when both are infinite).
    """
    inf_a = alpha == float("inf")
    inf_b = beta == float("inf")
    tableaux = list(enumerate_ab(n, allow_large))
    stats = [(t, counts(t)) for t in tableaux]
    if inf_a and inf_b:
        best = max(c.total for _, c in stats)
        support = [t for t, c in stats if c.total == best]
        p = Fraction(1, len(support))
        return {t: p for t in support}
    if inf_a or inf_b:
        if inf_a:
            beta = Fraction(beta)
            if beta <= 0:
                # alpha = inf, beta = 0: single all-alpha-diagonal tableau
                best = max(c.n_alpha for _, c in stats)
                support = [
                    t for t, c in stats if c.n_alpha == best and c.n_beta == 0
                ]
                p = Fraction(1, len(support))
                return {t: p for t in support}
            best = max(c.n_alpha for _, c in stats)
            weights = {
                t: beta ** c.n_beta for t, c in stats if c.n_alpha == best
            }
        else:
            alpha = Fraction(alpha)
            if alpha <= 0:
                best = max(c.n_beta for _, c in stats)
                support = [
                    t for t, c in stats if c.n_beta == best and c.n_alpha == 0
                ]
                p = Fraction(1, len(support))
                return {t: p for t in support}
            best = max(c.n_beta for _, c in stats)
            weights = {
                t: alpha ** c.n_alpha for t, c in stats if c.n_beta == best
            }
        z = sum(weights.values(), Fraction(0))
        return {t: w / z for t, w in weights.items()}
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha < 0 or beta < 0 or (alpha == 0 and beta == 0):
        raise ParameterError(f"need alpha, beta >= 0 and not both zero, got ({alpha}, {beta})")
    weights = {t: alpha ** c.n_alpha * beta ** c.n_beta for t, c in stats}
    z = sum(weights.values(), Fraction(0))
    return {t: w / z for t, w in weights.items() if w != 0}


class JointPoly:
    """Exact-rational coefficient map over one or two integer exponents."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, ...], Fraction] | None = None):
        self.coeffs = {m: Fraction(c) for m, c in (coeffs or {}).items() if c != 0}

    def __eq__(self, other) -> bool:
        return isinstance(other, JointPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"JointPoly({self.coeffs!r})"

    def evaluate(self, *values) -> Fraction:
        vals = [Fraction(v) for v in values]
        out = Fraction(0)
        for mono, c in self.coeffs.items():
            term = c
            for v, e in zip(vals, mono):
                term *= v**e
            out += term
        return out

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def normalized(self) -> "JointPoly":
        z = self.total()
        return JointPoly({m: c / z for m, c in self.coeffs.items()})

    def marginal(self, axis: int) -> "JointPoly":
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, c in self.coeffs.items():
            key = (mono[axis],)
            out[key] = out.get(key, Fraction(0)) + c
        return JointPoly(out)


def joint_poly_A_r(n: int, alpha, beta, allow_large: bool = False) -> JointPoly:
    """D_n(x, z) = sum over alpha/beta tableaux of wt(S) x^A(S) z^r(S),
    tallied by brute force."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ParameterError("joint_poly_A_r needs alpha, beta > 0")
    out: dict[tuple[int, ...], Fraction] = {}
    for t in enumerate_ab(n, allow_large):
        c = counts(t)
        key = (c.diagonal_alpha, c.alpha_indexed_rows)
        w = alpha ** c.n_alpha * beta ** c.n_beta
        out[key] = out.get(key, Fraction(0)) + w
    return JointPoly(out)


def joint_poly_N(n: int, alpha, beta, allow_large: bool = False) -> JointPoly:
    """Weighted tally over (N_alpha, N_beta) for alpha/beta tableaux."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ParameterError("joint_poly_N needs alpha, beta > 0")
    out: dict[tuple[int, ...], Fraction] = {}
    for t in enumerate_ab(n, allow_large):
        c = counts(t)
        key = (c.n_alpha, c.n_beta)
        w = alpha ** c.n_alpha * beta ** c.n_beta
        out[key] = out.get(key, Fraction(0)) + w
    return JointPoly(out)


def max_symbol_tableaux(n: int, allow_large: bool = False) -> Iterator[Tableau]:
    """The alpha/beta tableaux with the maximal 2n-1 symbols; there are
    2(n-1)! of them, (n-1)! with n alphas and (n-1)! with n-1 alphas."""
    for t in enumerate_ab(n, allow_large):
        c = counts(t)
        if c.n_alpha + c.n_beta == 2 * n - 1:
            yield t
