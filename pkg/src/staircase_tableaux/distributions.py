"""Exact laws, moments and diagnostics for weighted random staircase
tableaux.

Everything distributional is exact rational arithmetic on top of the
triangle module; floating point only enters root refinement output, the
CLT/LLT diagnostics and chi-square p-values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError, RootFindingError
from .eulerian_poly import scaled_row, tilde_row

__all__ = [
    "DiscreteDist",
    "dist_A",
    "moments_A",
    "BernoulliDecomp",
    "bernoulli_decomposition",
    "PairDist",
    "NPairLaw",
    "dist_N_pairs",
    "diag_prob",
    "cell_prob",
    "joint_diag_alpha",
    "diag_cov",
    "SubtableauComparison",
    "subtableau_law_check",
    "CLTDiagnostics",
    "clt_diagnostics",
    "GrowthRow",
    "n_alpha_growth_check",
    "ChiSquareResult",
    "chi_square_gof",
]


def _as_ab(a, b) -> tuple[Fraction, Fraction]:
    try:
        a, b = Fraction(a), Fraction(b)
    except (OverflowError, TypeError, ValueError) as exc:
        # a = inf (weight alpha = 0) collapses every law here to a point
        # mass; callers handle that case before reaching this module
        raise ParameterError(f"need finite rational a, b, got ({a}, {b})") from exc
    if a < 0 or b < 0:
        raise ParameterError(f"need a, b >= 0, got ({a}, {b})")
    return a, b


@dataclass(frozen=True)
class DiscreteDist:
    """Finitely supported exact distribution on consecutive integers
    offset..offset+len(probs)-1 (leading/trailing zeros trimmed)."""

    offset: int
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = list(self.probs)
        offset = self.offset
        while probs and probs[0] == 0:
            probs.pop(0)
            offset += 1
        while probs and probs[-1] == 0:
            probs.pop()
        if not probs:
            raise ValueError("empty distribution")
        total = sum(probs, Fraction(0))
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
        if any(p < 0 for p in probs):
            raise ValueError("negative probability")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "probs", tuple(probs))

    @classmethod
    def from_map(cls, pm: dict[int, Fraction]) -> "DiscreteDist":
        lo, hi = min(pm), max(pm)
        return cls(lo, tuple(pm.get(k, Fraction(0)) for k in range(lo, hi + 1)))

    def support(self) -> range:
        return range(self.offset, self.offset + len(self.probs))

    def pmf(self, k: int) -> Fraction:
        if k in self.support():
            return self.probs[k - self.offset]
        return Fraction(0)

    def mean(self) -> Fraction:
        return sum((k * p for k, p in zip(self.support(), self.probs)), Fraction(0))

    def variance(self) -> Fraction:
        m = self.mean()
        ex2 = sum((k * k * p for k, p in zip(self.support(), self.probs)), Fraction(0))
        return ex2 - m * m

    def shifted(self, delta: int) -> "DiscreteDist":
        return DiscreteDist(self.offset + delta, self.probs)

    def reversed_about(self, n: int) -> "DiscreteDist":
        """Law of n - X when self is the law of X."""
        hi = self.offset + len(self.probs) - 1
        return DiscreteDist(n - hi, tuple(reversed(self.probs)))

    def tv_distance(self, other: "DiscreteDist") -> Fraction:
        keys = set(self.support()) | set(other.support())
        return sum((abs(self.pmf(k) - other.pmf(k)) for k in keys), Fraction(0)) / 2

    def is_log_concave(self) -> bool:
        p = self.probs
        return all(p[k] * p[k] >= p[k - 1] * p[k + 1] for k in range(1, len(p) - 1))


def dist_A(n: int, a, b, rho=None) -> DiscreteDist:
    """Exact law of the number of alphas on the diagonal.

    P(A=k) = v_{a,b}(n,k) / (a+b)^{rise n} for (a,b) != (0,0); at
    a = b = 0 (both weights infinite) the substitute triangle gives
    P(A=k) = tilde_v(n,k)/(n-1)!, valid for n >= 2.  ``rho`` is accepted
    for signature parity with the sampler but never affects this law.
    """
    a, b = _as_ab(a, b)
    if a == 0 and b == 0:
        if n < 2:
            raise DomainError("a = b = 0 needs n >= 2")
        row = tilde_row(n)
        total = sum(row, Fraction(0))
        return DiscreteDist(0, tuple(p / total for p in row))
    if n == 0:
        return DiscreteDist(0, (Fraction(1),))
    row, _d = scaled_row(n, a, b)
    total = sum(row)
    return DiscreteDist(0, tuple(Fraction(x, total) for x in row))


def moments_A(n: int, a, b) -> tuple[Fraction, Fraction]:
    """Exact (mean, variance) of A from the closed forms

        E A   = n (n + 2b - 1) / (2 (n + a + b - 1))
        Var A = n [ (n-1)(n-2)(n+4a+4b-1) + 6(n-1)(a+b)^2 + 12ab(a+b-1) ]
                / [ 12 (n+a+b-1)^2 (n+a+b-2) ].

    The variance expression has removable singularities at n = 1 (when
    a + b = 1) and at (n, a, b) = (2, 0, 0); those points are evaluated by
    their limits, which is what the law itself gives.
    """
    a, b = _as_ab(a, b)
    if a == 0 and b == 0 and n < 2:
        raise DomainError("a = b = 0 needs n >= 2")
    if n == 0:
        return Fraction(0), Fraction(0)
    if n == 1:
        p_alpha = b / (a + b)
        return p_alpha, p_alpha * (1 - p_alpha)
    if a == 0 and b == 0 and n == 2:
        return Fraction(1), Fraction(0)
    mean = Fraction(n) * (n + 2 * b - 1) / (2 * (n + a + b - 1))
    num = (
        (n - 1) * (n - 2) * (n + 4 * a + 4 * b - 1)
        + 6 * (n - 1) * (a + b) ** 2
        + 12 * a * b * (a + b - 1)
    )
    var = Fraction(n) * num / (12 * (n + a + b - 1) ** 2 * (n + a + b - 2))
    return mean, var


# ---------------------------------------------------------------------------
# Bernoulli decomposition by real-root isolation


def _sign_at(coeffs: list[int], x: Fraction) -> int:
    """Exact sign of sum_k coeffs[k] x^k at rational x.

    Every evaluation point the ladder produces is dyadic (the outer bound
    is a power of two and midpoints stay dyadic), so the scaled sum is
    pure shifts and integer multiplies."""
    u, w = x.numerator, x.denominator
    m = len(coeffs) - 1
    acc = 0
    up = 1
    if w & (w - 1) == 0:
        e = w.bit_length() - 1
        for k, c in enumerate(coeffs):
            acc += (c * up) << (e * (m - k))
            up *= u
    else:
        wp = [1] * (m + 1)
        for i in range(1, m + 1):
            wp[i] = wp[i - 1] * w
        for k, c in enumerate(coeffs):
            acc += c * up * wp[m - k]
            up *= u
    return (acc > 0) - (acc < 0)


_REL_TOL = Fraction(1, 10**12)


def _bisect(coeffs: list[int], lo: Fraction, hi: Fraction,
            s_lo: int) -> tuple[Fraction, Fraction]:
    """Shrink a sign-changing bracket to relative width 1e-12; a midpoint
    hitting the root exactly collapses the bracket to a point.

    The returned endpoints are re-rounded outward to the coarsest dyadic
    grid that keeps a quarter of the final width, so bit sizes do not
    accumulate from rung to rung of the ladder."""
    while hi - lo > _REL_TOL * abs(lo):
        mid = (lo + hi) / 2
        s_mid = _sign_at(coeffs, mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    width = hi - lo
    if width == 0:
        return lo, hi
    ratio = 4 / width
    scale = 1 << (ratio.numerator // ratio.denominator + 1).bit_length()
    lo2 = Fraction(math.floor(lo * scale), scale)
    hi2 = Fraction(math.ceil(hi * scale), scale)
    if lo2 != lo and _sign_at(coeffs, lo2) != s_lo:
        lo2 = lo
    if hi2 != hi and _sign_at(coeffs, hi2) != -s_lo:
        hi2 = hi
    return lo2, hi2


def _interlacing_roots(rows: list[list[int]]) -> list[tuple[Fraction, Fraction]]:
    """Brackets for all roots of the top row's polynomial.

    ``rows[m]`` holds the (all-positive) integer coefficients of the
    degree-m polynomial; consecutive rows must have strictly interlaced
    simple negative roots, which is what the triangle recursion guarantees.
    Climbs the ladder degree by degree: the refined roots of row m-1
    separate the roots of row m, every bracket is certified by an exact
    sign change, and failures raise rather than guess.

    Returned brackets are sorted ascending (most negative root first).
    """
    n = len(rows) - 1
    brackets: list[tuple[Fraction, Fraction]] = []
    for m in range(1, n + 1):
        coeffs = rows[m]
        prev = rows[m - 1]
        if any(c <= 0 for c in coeffs):
            raise RootFindingError("ladder rows must have positive coefficients")
        # Separation points between consecutive roots of row m.  Counted
        # from the right, the r-th root of row m-1 lies strictly between
        # the r-th and (r+1)-th roots of row m, where row m keeps the sign
        # (-1)^r; narrow the old bracket until its midpoint shows it.
        seps_rl: list[Fraction] = []
        for r, (plo, phi) in enumerate(reversed(brackets), start=1):
            want = 1 if r % 2 == 0 else -1
            sep = None
            if plo == phi:
                if _sign_at(coeffs, plo) != want:
                    raise RootFindingError(
                        f"interlacing violated at an exact root of degree {m - 1}"
                    )
                sep = plo
            else:
                s_plo = _sign_at(prev, plo)
                for _ in range(20000):
                    mid = (plo + phi) / 2
                    if _sign_at(coeffs, mid) == want:
                        sep = mid
                        break
                    s_mid = _sign_at(prev, mid)
                    if s_mid == 0:
                        raise RootFindingError(
                            f"interlacing violated at an exact root of degree {m - 1}"
                        )
                    if s_mid == s_plo:
                        plo = mid
                    else:
                        phi = mid
                if sep is None:
                    raise RootFindingError(
                        f"could not separate the roots of degree {m} near root {r}"
                    )
            seps_rl.append(sep)
        # Outermost point strictly left of all roots: Vieta gives the sum
        # of root magnitudes as c_{m-1}/c_m; round the bound up to a power
        # of two so every later midpoint stays dyadic.
        left = Fraction(-(1 << (coeffs[m - 1] // coeffs[m] + 2).bit_length()))
        ends = [left] + seps_rl[::-1] + [Fraction(0)]
        new_brackets: list[tuple[Fraction, Fraction]] = []
        for i in range(m):
            lo, hi = ends[i], ends[i + 1]
            s_lo = _sign_at(coeffs, lo)
            s_hi = _sign_at(coeffs, hi)
            if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
                raise RootFindingError(
                    f"bracket {i} of degree {m} does not change sign"
                )
            new_brackets.append(_bisect(coeffs, lo, hi, s_lo))
        brackets = new_brackets
    return brackets


@dataclass(frozen=True)
class BernoulliDecomp:
    """A written as an independent Bernoulli sum: p[i] = 1/(1 + xi[i]) from
    the located roots -xi[i] of the pgf (xi = inf encodes a padded p = 0,
    xi = 0 a deterministic success)."""

    n: int
    p: tuple[float, ...]
    xi: tuple[float, ...]
    rel_tol: float = 1e-12

    def reconstruction(self) -> list[float]:
        """Convolution of the Bernoulli(p_i) laws, as floats."""
        dist = [1.0]
        for p in self.p:
            nxt = [0.0] * (len(dist) + 1)
            for k, w in enumerate(dist):
                nxt[k] += w * (1 - p)
                nxt[k + 1] += w * p
            dist = nxt
        return dist


def bernoulli_decomposition(n: int, a, b) -> BernoulliDecomp:
    """Locate the roots of the pgf of A and return the Bernoulli
    parameters p_i = 1/(1 + xi_i).

    Root structure (all real, simple, in (-inf, 0]): for a, b > 0 the pgf
    has degree n; b = 0 drops the degree to n-1 and a zero p is appended;
    a = 0 contributes a root at 0 (p = 1); a = b = 0 decomposes the
    substitute polynomial x P_{n-2,1,1}(x) plus one padded zero.

    Exact integer sign evaluation everywhere; raises RootFindingError if
    any bracket fails to certify, never returns silently wrong roots.
    """
    a, b = _as_ab(a, b)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    prefix: list[float] = []   # exact known p's (from factored-out roots)
    suffix: list[float] = []   # padded zeros
    if a == 0 and b == 0:
        if n < 2:
            raise DomainError("a = b = 0 needs n >= 2")
        core_a, core_b, degree = Fraction(1), Fraction(1), n - 2
        prefix = [1.0]
        suffix = [0.0]
    elif b == 0:
        core_a, core_b, degree = a, Fraction(1), n - 1
        suffix = [0.0]
    elif a == 0:
        core_a, core_b, degree = Fraction(1), b, n - 1
        prefix = [1.0]
    else:
        core_a, core_b, degree = a, b, n

    xi_exact: list[Fraction] = []
    if degree > 0:
        rows = []
        for m in range(degree + 1):
            row, _ = scaled_row(m, core_a, core_b)
            rows.append(row)
        brackets = _interlacing_roots(rows)
        if len(brackets) != degree:
            raise RootFindingError(
                f"found {len(brackets)} roots, expected {degree}"
            )
        xi_exact = sorted(-(lo + hi) / 2 for lo, hi in brackets)
        if any(x < 0 for x in xi_exact):
            raise RootFindingError("located a positive root")
    core_p = [float(1 / (1 + x)) for x in xi_exact]
    p = prefix + core_p + suffix
    xi = [0.0] * len(prefix) + [float(x) for x in xi_exact] + [math.inf] * len(suffix)
    return BernoulliDecomp(n=n, p=tuple(p), xi=tuple(xi))


# ---------------------------------------------------------------------------
# Joint symbol counts


@dataclass(frozen=True)
class PairDist:
    """Law of one step pair (I_i, J_i): (0,0) is impossible, the rest are
    p10, p01, p11."""

    p10: Fraction
    p01: Fraction
    p11: Fraction

    def __post_init__(self):
        if self.p10 + self.p01 + self.p11 != 1:
            raise ValueError("pair probabilities must sum to 1")


@dataclass(frozen=True)
class NPairLaw:
    """(N_alpha, N_beta) as a sum of n independent pairs, with exact
    marginal parameters and moments."""

    n: int
    a: Fraction
    b: Fraction
    pairs: tuple[PairDist, ...]
    mean_alpha: Fraction
    var_alpha: Fraction
    mean_beta: Fraction
    var_beta: Fraction
    cov: Fraction

    def marginal_alpha_params(self) -> tuple[Fraction, ...]:
        """Bernoulli parameters of the I_i."""
        return tuple(pd.p10 + pd.p11 for pd in self.pairs)

    def joint_law(self) -> dict[tuple[int, int], Fraction]:
        """Exact joint law of (N_alpha, N_beta) by convolving the pairs."""
        law: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
        for pd in self.pairs:
            nxt: dict[tuple[int, int], Fraction] = {}
            for (x, y), w in law.items():
                for (dx, dy), q in (((1, 0), pd.p10), ((0, 1), pd.p01), ((1, 1), pd.p11)):
                    if q:
                        key = (x + dx, y + dy)
                        nxt[key] = nxt.get(key, Fraction(0)) + w * q
            law = nxt
        return law

    def alpha_law(self) -> DiscreteDist:
        pm: dict[int, Fraction] = {}
        for (x, _y), w in self.joint_law().items():
            pm[x] = pm.get(x, Fraction(0)) + w
        return DiscreteDist.from_map(pm)


def dist_N_pairs(n: int, a, b) -> NPairLaw:
    """The n independent pair laws driving (N_alpha, N_beta):

        P(1,0) = b/(a+b+i),  P(0,1) = a/(a+b+i),  P(1,1) = i/(a+b+i),

    for i = 0..n-1, with the i = 0, a = b = 0 case read as (1/2, 1/2, 0).
    """
    a, b = _as_ab(a, b)
    pairs = []
    mean_a = var_a = mean_b = var_b = cov = Fraction(0)
    for i in range(n):
        den = a + b + i
        if den == 0:
            pd = PairDist(Fraction(1, 2), Fraction(1, 2), Fraction(0))
            qa = qb = Fraction(1, 2)   # leave-out probabilities a/(a+b+i), b/(a+b+i)
        else:
            pd = PairDist(b / den, a / den, Fraction(i) / den)
            qa, qb = a / den, b / den
        pairs.append(pd)
        mean_a += 1 - qa
        var_a += qa * (1 - qa)
        mean_b += 1 - qb
        var_b += qb * (1 - qb)
        cov -= qa * qb
    return NPairLaw(n=n, a=a, b=b, pairs=tuple(pairs), mean_alpha=mean_a,
                    var_alpha=var_a, mean_beta=mean_b, var_beta=var_b, cov=cov)


# ---------------------------------------------------------------------------
# Positions of symbols


def diag_prob(n: int, a, b, i: int) -> Fraction:
    """P(i-th diagonal box, counted from the NE, holds an alpha) =
    (n - i + b) / (n + a + b - 1)."""
    a, b = _as_ab(a, b)
    if not 1 <= i <= n:
        raise DomainError(f"diagonal index must lie in 1..{n}, got {i}")
    den = n + a + b - 1
    if den == 0:
        raise DomainError("undefined for n = 1 with a = b = 0")
    return (n - i + b) / den


def cell_prob(n: int, a, b, i: int, j: int) -> tuple[Fraction, Fraction, Fraction]:
    """(P(alpha), P(beta), P(filled)) for the non-diagonal box (i, j):

        P(alpha)  = (j - 1 + b) / ((i+j+a+b-1)(i+j+a+b-2))
        P(beta)   = (i - 1 + a) / ((i+j+a+b-1)(i+j+a+b-2))
        P(filled) = 1 / (i+j+a+b-1)

    with the a = b = 0, i = j = 1 entries read as 1/2 (the box is then
    filled with probability one)."""
    a, b = _as_ab(a, b)
    if i < 1 or j < 1 or i + j > n:
        raise DomainError(
            f"need a non-diagonal box: 1 <= i, j and i + j <= {n}, got ({i}, {j})"
        )
    d1 = i + j + a + b - 1
    d2 = i + j + a + b - 2
    if d2 == 0:
        if a == 0 and b == 0 and i == 1 and j == 1:
            return Fraction(1, 2), Fraction(1, 2), 1 / d1
        raise DomainError("undefined parameters for this box")
    return (j - 1 + b) / (d1 * d2), (i - 1 + a) / (d1 * d2), 1 / d1


def joint_diag_alpha(n: int, a, b, positions) -> Fraction:
    """P(the diagonal boxes in columns j_1 < ... < j_l all hold alpha) =
    prod_k (j_k - k + b) / (n - k + a + b)."""
    a, b = _as_ab(a, b)
    js = list(positions)
    if not js:
        return Fraction(1)
    if any(not 1 <= j <= n for j in js) or any(x >= y for x, y in zip(js, js[1:])):
        raise DomainError(f"positions must be strictly increasing within 1..{n}")
    out = Fraction(1)
    for k, j in enumerate(js, start=1):
        den = n - k + a + b
        if den == 0:
            raise DomainError("undefined: zero denominator at k = n with a = b = 0")
        out *= (j - k + b) / den
    return out


def diag_cov(n: int, a, b, j: int, k: int) -> Fraction:
    """Covariance of the alpha indicators of the diagonal boxes in columns
    j < k: -(j-1+b)(n-k+a) / ((n+a+b-1)^2 (n+a+b-2))."""
    a, b = _as_ab(a, b)
    if not 1 <= j < k <= n:
        raise DomainError(f"need 1 <= j < k <= {n}, got ({j}, {k})")
    den = (n + a + b - 1) ** 2 * (n + a + b - 2)
    if den == 0:
        raise DomainError("undefined for n + a + b <= 2")
    return -Fraction((j - 1 + b) * (n - k + a)) / den


# ---------------------------------------------------------------------------
# Subtableau law


@dataclass(frozen=True)
class SubtableauComparison:
    n: int
    i: int
    j: int
    sub_size: int
    a_hat: Fraction
    b_hat: Fraction
    equal: bool
    first_difference: tuple | None


def subtableau_law_check(n: int, a, b, i: int, j: int,
                         allow_large: bool = False) -> SubtableauComparison:
    """Compare the exact law of the (i, j)-subtableau of the weighted
    random size-n tableau with the direct weighted law of size
    n - i - j + 2 at shifted parameters a+i-1, b+j-1 (both sides by
    exhaustive enumeration)."""
    from .enumeration import law_ab
    from .tableau import subtableau

    a, b = _as_ab(a, b)
    if i < 1 or j < 1 or i + j > n + 1:
        raise DomainError(f"box ({i}, {j}) outside the size-{n} staircase")
    m = n - i - j + 2
    a_hat, b_hat = a + i - 1, b + j - 1

    def side(x: Fraction):
        return math.inf if x == 0 else 1 / x

    induced: dict = {}
    for t, p in law_ab(n, side(a), side(b), allow_large).items():
        s = subtableau(t, i, j)
        induced[s] = induced.get(s, Fraction(0)) + p
    direct = law_ab(m, side(a_hat), side(b_hat), allow_large)
    keys = set(induced) | set(direct)
    diff = None
    for t in sorted(keys, key=lambda t: t.cells):
        lhs = induced.get(t, Fraction(0))
        rhs = direct.get(t, Fraction(0))
        if lhs != rhs:
            diff = (t, lhs, rhs)
            break
    return SubtableauComparison(
        n=n, i=i, j=j, sub_size=m, a_hat=a_hat, b_hat=b_hat,
        equal=diff is None, first_difference=diff,
    )


# ---------------------------------------------------------------------------
# Finite-n limit diagnostics


@dataclass(frozen=True)
class CLTDiagnostics:
    n: int
    mean: float
    sd: float
    ks_to_normal: float
    llt_max_residual: float


def _std_normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2))


def clt_diagnostics(n: int, a, b) -> CLTDiagnostics:
    """Distance of the exact law of A from its Gaussian limit shape:
    Kolmogorov distance of the standardized law to N(0,1), and the local
    residual sqrt(n) * max_k |P(A=k) - sqrt(6/(pi n)) exp(-6(k-n/2)^2/n)|."""
    if n < 10:
        raise DomainError(f"diagnostics need n >= 10, got {n}")
    dist = dist_A(n, a, b)
    mean, var = moments_A(n, a, b)
    mu, sd = float(mean), math.sqrt(float(var))
    probs = [float(p) for p in dist.probs]
    ks = 0.0
    cdf = 0.0
    for k, p in zip(dist.support(), probs):
        z = (k - mu) / sd
        phi = _std_normal_cdf(z)
        ks = max(ks, abs(cdf - phi), abs(cdf + p - phi))
        cdf += p
    amp = math.sqrt(6 / (math.pi * n))
    resid = 0.0
    for k, p in zip(dist.support(), probs):
        gauss = amp * math.exp(-6 * (k - n / 2) ** 2 / n)
        resid = max(resid, abs(p - gauss))
    return CLTDiagnostics(n=n, mean=mu, sd=sd, ks_to_normal=ks,
                          llt_max_residual=resid * math.sqrt(n))


@dataclass(frozen=True)
class GrowthRow:
    n: int
    mean_alpha: Fraction
    var_alpha: Fraction
    cov: Fraction
    mean_deviation: float   # E N_alpha - (n - a log n)
    var_deviation: float    # Var N_alpha - a log n


def n_alpha_growth_check(n_list, a, b) -> list[GrowthRow]:
    """Exact N_alpha moments against their a log n growth, for each n in
    n_list (sums are accumulated once up to max(n_list))."""
    a, b = _as_ab(a, b)
    targets = sorted(set(int(n) for n in n_list))
    if not targets or targets[0] < 1:
        raise DomainError("n_list must hold integers >= 1")
    if a == 0 and b == 0:
        raise ParameterError("growth check needs (a, b) != (0, 0)")
    out = []
    mean_drop = var_sum = cov_sum = Fraction(0)
    i = 0
    for n in targets:
        while i < n:
            den = a + b + i
            qa, qb = a / den, b / den
            mean_drop += qa
            var_sum += qa * (1 - qa)
            cov_sum -= qa * qb
            i += 1
        mean_alpha = n - mean_drop
        log_n = math.log(n)
        out.append(GrowthRow(
            n=n,
            mean_alpha=mean_alpha,
            var_alpha=var_sum,
            cov=cov_sum,
            mean_deviation=float(mean_alpha) - (n - float(a) * log_n),
            var_deviation=float(var_sum) - float(a) * log_n,
        ))
    return out


# ---------------------------------------------------------------------------
# Goodness of fit


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    df: int
    p_value: float
    total: int

    def passes(self, significance: float = 1e-3) -> bool:
        return self.p_value > significance


def chi_square_gof(expected, observed) -> ChiSquareResult:
    """Pearson chi-square of observed counts against an exact law.

    ``expected`` maps outcomes to exact probabilities, ``observed`` maps
    outcomes to counts; an observed outcome of probability zero yields an
    infinite statistic."""
    from scipy.stats import chi2

    total = sum(observed.values())
    if total <= 0:
        raise ParameterError("need at least one observation")
    extra = set(observed) - set(expected)
    if extra:
        return ChiSquareResult(math.inf, max(len(expected) - 1, 1), 0.0, total)
    stat = 0.0
    for key, prob in expected.items():
        exp_count = float(prob) * total
        if exp_count == 0:
            if observed.get(key, 0):
                return ChiSquareResult(math.inf, len(expected) - 1, 0.0, total)
            continue
        diff = observed.get(key, 0) - exp_count
        stat += diff * diff / exp_count
    df = len(expected) - 1
    p = float(chi2.sf(stat, df))
    return ChiSquareResult(stat, df, p, total)
