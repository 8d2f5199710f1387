"""Exact random generation of weighted staircase tableaux and the
equivalent Friedman urn.

The target law on alpha/beta tableaux is P(S) proportional to
alpha^Na(S) beta^Nb(S).  Sampling is sequential in the size: the tableau
grows one column at a time (sizes 1..n, each new column prepended on the
left), and at step m the law of the partial tableau is the weighted law of
size m with the inverse-beta parameter shifted to b_m = b + (n - m) — that
shift is exactly what deleting the first n-m columns does to the law.

One step, given the current set of alpha-indexed rows:

  1. mark each alpha-indexed row independently with probability
     1/(1 + b_m);
  2. draw the top symbol sigma: Alpha with probability b_m/(a + b_m)
     (when a = b = 0 and m = n both are zero — the tie is resolved by rho);
  3. no marks: sigma goes in the new bottom (diagonal) box; otherwise the
     bottom box and every marked row get a Beta, except the topmost marked
     row which receives sigma.

All probabilities are exact rationals and all coin flips are exact, so the
output law is exactly the target (audited against the enumeration oracle
by chi-square in the tests).

Infinite parameters short-circuit: b = inf (beta = 0) gives the all-alpha
diagonal, a = inf (alpha = 0) the all-beta diagonal, a = b = inf each
diagonal box independently Alpha with probability rho.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParameterError
from .rng import SplitMix64, bernoulli, derive_seed
from .tableau import Symbol, Tableau, counts

__all__ = [
    "INF",
    "Params",
    "sample_ab",
    "sample_four",
    "UrnResult",
    "urn_sample",
    "TableauStats",
    "BatchSummary",
    "sample_batch",
    "rejection_sample_ab",
]

INF = math.inf


def _as_param(x) -> Fraction | float:
    """Normalize a parameter to a nonnegative Fraction or math.inf."""
    if x == INF:
        return INF
    x = Fraction(x)
    if x < 0:
        raise ParameterError(f"parameter must be >= 0 or inf, got {x}")
    return x


@dataclass(frozen=True)
class Params:
    """Inverse weights a = 1/alpha, b = 1/beta, each in [0, inf], plus the
    tie-break probability rho used only in the a = b = 0 final step and in
    the a = b = inf diagonal coin."""

    a: Fraction | float
    b: Fraction | float
    rho: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "a", _as_param(self.a))
        object.__setattr__(self, "b", _as_param(self.b))
        object.__setattr__(self, "rho", Fraction(self.rho))
        if not 0 <= self.rho <= 1:
            raise ParameterError(f"rho must lie in [0, 1], got {self.rho}")

    @classmethod
    def from_alpha_beta(cls, alpha, beta, rho=Fraction(1, 2)) -> "Params":
        """Build from tableau-side weights: a = 1/alpha with 0 <-> inf."""
        def invert(x):
            if x == INF:
                return Fraction(0)
            x = Fraction(x)
            if x < 0:
                raise ParameterError(f"weight must be >= 0 or inf, got {x}")
            return INF if x == 0 else 1 / x

        return cls(invert(alpha), invert(beta), rho)

    @property
    def alpha(self) -> Fraction | float:
        return INF if self.a == 0 else (Fraction(0) if self.a == INF else 1 / self.a)

    @property
    def beta(self) -> Fraction | float:
        return INF if self.b == 0 else (Fraction(0) if self.b == INF else 1 / self.b)


def _diagonal_tableau(n: int, symbol_for_row) -> Tableau:
    return Tableau(n, tuple((i, n + 1 - i, symbol_for_row(i)) for i in range(1, n + 1)))


def sample_ab(n: int, params: Params, seed: int) -> Tableau:
    """One exact draw of the weighted random alpha/beta tableau of size n."""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if n == 0:
        return Tableau(0, ())
    rng = SplitMix64(seed)
    a, b, rho = params.a, params.b, params.rho
    if a == INF and b == INF:
        return _diagonal_tableau(
            n, lambda i: Symbol.ALPHA if bernoulli(rng, rho) else Symbol.BETA
        )
    if b == INF:
        return _diagonal_tableau(n, lambda i: Symbol.ALPHA)
    if a == INF:
        return _diagonal_tableau(n, lambda i: Symbol.BETA)

    cells: list[tuple[int, int, Symbol]] = []
    alpha_rows: list[int] = []
    for m in range(1, n + 1):
        b_m = b + (n - m)
        col = n + 1 - m
        marks = [r for r in alpha_rows if bernoulli(rng, Fraction(1, 1 + b_m))]
        if a == 0 and b_m == 0:
            # a = b = 0 at the last step: both case weights vanish at the
            # same rate; the surviving ratio is rho (Friedman-urn tie).
            sigma = Symbol.ALPHA if bernoulli(rng, rho) else Symbol.BETA
        else:
            sigma = Symbol.ALPHA if bernoulli(rng, b_m / (a + b_m)) else Symbol.BETA
        if not marks:
            cells.append((m, col, sigma))
            if sigma is Symbol.ALPHA:
                alpha_rows.append(m)
        else:
            cells.append((m, col, Symbol.BETA))
            top = marks[0]
            for r in marks:
                cells.append((r, col, sigma if r == top else Symbol.BETA))
            # rows that just received a beta are no longer alpha-indexed
            removed = set(marks) if sigma is Symbol.BETA else set(marks[1:])
            alpha_rows = [r for r in alpha_rows if r not in removed]
    return Tableau(n, tuple(cells))


def sample_four(n: int, alpha, beta, gamma, delta, seed: int,
                rho=Fraction(1, 2)) -> Tableau:
    """Four-symbol draw: sample with effective weights (alpha+gamma,
    beta+delta), then independently relabel each Alpha to Gamma with
    probability gamma/(alpha+gamma) and each Beta to Delta with
    probability delta/(beta+delta)."""
    alpha, beta, gamma, delta = (Fraction(x) for x in (alpha, beta, gamma, delta))
    if min(alpha, beta, gamma, delta) < 0:
        raise ParameterError("weights must be >= 0")
    if alpha + gamma <= 0 or beta + delta <= 0:
        raise ParameterError("need alpha + gamma > 0 and beta + delta > 0")
    rng = SplitMix64(derive_seed(seed, 1))
    base = sample_ab(n, Params.from_alpha_beta(alpha + gamma, beta + delta, rho),
                     derive_seed(seed, 0))
    p_gamma = gamma / (alpha + gamma)
    p_delta = delta / (beta + delta)
    cells = []
    for r, c, s in base.cells:
        if s is Symbol.ALPHA and bernoulli(rng, p_gamma):
            s = Symbol.GAMMA
        elif s is Symbol.BETA and bernoulli(rng, p_delta):
            s = Symbol.DELTA
        cells.append((r, c, s))
    return Tableau(n, tuple(cells))


@dataclass(frozen=True)
class UrnResult:
    added_white: int
    added_black: int
    path: tuple[int, ...]  # added-white count after each draw


def urn_sample(n: int, a, b, seed: int) -> UrnResult:
    """Friedman urn with initial weights (a white, b black): each draw is
    replaced together with one ball of the opposite colour.  Returns the
    number of white/black balls added over n draws plus the full path.

    a = b = 0 starts with the 1/2 rule: the first added ball is white with
    probability exactly 1/2 (the second then restores balance, so from time
    2 the urn evolves as if started at (1, 1))."""
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise ParameterError(f"urn weights must be >= 0, got ({a}, {b})")
    rng = SplitMix64(seed)
    white_added = 0
    path = []
    for k in range(n):
        if a + b == 0 and k == 0:
            white_added += 1 if bernoulli(rng, Fraction(1, 2)) else 0
        else:
            drew_white = bernoulli(rng, (a + white_added) / (a + b + k))
            if not drew_white:
                white_added += 1
        path.append(white_added)
    return UrnResult(white_added, n - white_added, tuple(path))


@dataclass(frozen=True)
class TableauStats:
    diagonal_alpha: int
    diagonal_beta: int
    n_alpha: int
    n_beta: int
    alpha_indexed_rows: int
    diagonal_word: str


def tableau_stats(t: Tableau) -> TableauStats:
    c = counts(t)
    word = "".join(s.letter if s else "." for s in t.diagonal())
    return TableauStats(c.diagonal_alpha, c.diagonal_beta, c.n_alpha, c.n_beta,
                        c.alpha_indexed_rows, word)


@dataclass
class BatchSummary:
    """Associatively mergeable empirical summary of a sample batch."""

    count: int = 0
    sum_diag_alpha: Fraction = Fraction(0)
    sum_diag_alpha_sq: Fraction = Fraction(0)
    diag_alpha_counts: Counter = field(default_factory=Counter)
    tableau_counts: Counter = field(default_factory=Counter)
    word_counts: Counter = field(default_factory=Counter)

    def add(self, t: Tableau) -> None:
        s = tableau_stats(t)
        self.count += 1
        self.sum_diag_alpha += s.diagonal_alpha
        self.sum_diag_alpha_sq += s.diagonal_alpha ** 2
        self.diag_alpha_counts[s.diagonal_alpha] += 1
        self.tableau_counts[t.cells] += 1
        self.word_counts[s.diagonal_word] += 1

    def merge(self, other: "BatchSummary") -> "BatchSummary":
        return BatchSummary(
            count=self.count + other.count,
            sum_diag_alpha=self.sum_diag_alpha + other.sum_diag_alpha,
            sum_diag_alpha_sq=self.sum_diag_alpha_sq + other.sum_diag_alpha_sq,
            diag_alpha_counts=self.diag_alpha_counts + other.diag_alpha_counts,
            tableau_counts=self.tableau_counts + other.tableau_counts,
            word_counts=self.word_counts + other.word_counts,
        )

    def mean_diag_alpha(self) -> Fraction:
        return self.sum_diag_alpha / self.count

    def var_diag_alpha(self) -> Fraction:
        m = self.mean_diag_alpha()
        return self.sum_diag_alpha_sq / self.count - m * m


def _batch_range(n: int, params: Params, seed: int, start: int, stop: int) -> BatchSummary:
    out = BatchSummary()
    for i in range(start, stop):
        out.add(sample_ab(n, params, derive_seed(seed, i)))
    return out


def _batch_worker(job) -> BatchSummary:
    n, params, seed, start, stop = job
    return _batch_range(n, params, seed, start, stop)


def sample_batch(n: int, params: Params, seed: int, count: int,
                 workers: int = 1) -> BatchSummary:
    """Summary of ``count`` independent draws; sample i always uses the
    derived seed (seed, i), so the result does not depend on ``workers``."""
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    if workers <= 1 or count < 2 * workers:
        return _batch_range(n, params, seed, 0, count)
    import multiprocessing

    chunk = (count + workers - 1) // workers
    jobs = [
        (n, params, seed, lo, min(lo + chunk, count))
        for lo in range(0, count, chunk)
    ]
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_batch_worker, jobs)
    out = BatchSummary()
    for part in parts:
        out = out.merge(part)
    return out


def rejection_sample_ab(n: int, params: Params, seed: int,
                        law=None) -> Tableau:
    """Test-only fallback sampler: inverse-CDF over the exact enumeration
    law (so it only reaches sizes the oracle can enumerate).  ``law`` may
    be passed to amortize the enumeration across draws."""
    from .enumeration import law_ab

    if law is None:
        law = law_ab(n, params.alpha, params.beta)
    rng = SplitMix64(seed)
    items = sorted(law.items(), key=lambda kv: kv[0].cells)
    # exact inverse CDF: reveal bits of a uniform until the cell is decided
    cdf = Fraction(0)
    u_num = 0
    u_bits = 0
    for t, p in items:
        cdf += p
        while True:
            # is u < cdf decidable at current precision?
            lo = Fraction(u_num, 1 << u_bits) if u_bits else Fraction(0)
            hi = lo + (Fraction(1, 1 << u_bits) if u_bits else Fraction(1))
            if hi <= cdf:
                return t
            if lo >= cdf:
                break
            u_num = (u_num << 64) | rng.next_u64()
            u_bits += 64
    return items[-1][0]
