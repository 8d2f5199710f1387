"""Generalized Eulerian numbers v_{a,b}(n,k) and their polynomials.

Everything in this module is exact rational arithmetic.  The defining
two-term recursion is

    v(n, k) = (k + a) v(n-1, k) + (n - k + b) v(n-1, k-1),   v(0, 0) = 1,

with v(n, k) = 0 outside 0 <= k <= n.  Internally rows are carried as big
integers scaled by d^n, where d is the common denominator of a and b; this
keeps row construction at n in the thousands cheap.

Specializations: (a,b) = (1,0) gives the classical Eulerian triangle,
(0,1) and (1,1) reindexed versions of it, and 2^n v_{1/2,1/2}(n,k) the
type-B Eulerian numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError

__all__ = [
    "rising_factorial",
    "EulerTriangle",
    "v_triangle",
    "v_row",
    "scaled_row",
    "BivarPoly",
    "v_symbolic",
    "p_eval",
    "tilde_v",
    "tilde_row",
    "tilde_p_eval",
    "p_at_one",
    "CTable",
    "c_table",
    "eulerian",
    "eulerian_row",
]


def _check_nonneg(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise ParameterError(f"parameters must be >= 0, got a={a}, b={b}")
    return a, b


def rising_factorial(x, n: int) -> Fraction:
    """x^{rise n} = x (x+1) ... (x+n-1); empty product for n = 0."""
    if n < 0:
        raise DomainError(f"rising factorial needs n >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def scaled_row(n: int, a, b) -> tuple[list[int], int]:
    """Row n of the triangle as integers: returns (row, d) with
    v(n, k) = row[k] / d**n and d the common denominator of a and b."""
    a, b = _check_nonneg(a, b)
    d = math.lcm(a.denominator, b.denominator)
    da = int(a * d)
    db = int(b * d)
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0] * (m + 1)
        for k in range(m + 1):
            acc = 0
            if k < m:
                acc += (k * d + da) * prev[k]
            if k > 0:
                acc += ((m - k) * d + db) * prev[k - 1]
            row[k] = acc
    return row, d


def _scaled_rows(n_max: int, a: Fraction, b: Fraction):
    """Yield (n, row, d) for n = 0..n_max without keeping earlier rows."""
    d = math.lcm(a.denominator, b.denominator)
    da = int(a * d)
    db = int(b * d)
    row = [1]
    yield 0, row, d
    for m in range(1, n_max + 1):
        prev = row
        row = [0] * (m + 1)
        for k in range(m + 1):
            acc = 0
            if k < m:
                acc += (k * d + da) * prev[k]
            if k > 0:
                acc += ((m - k) * d + db) * prev[k - 1]
            row[k] = acc
        yield m, row, d


@dataclass(frozen=True)
class EulerTriangle:
    """Exact table of v_{a,b}(n, k) for 0 <= k <= n <= n_max."""

    a: Fraction
    b: Fraction
    n_max: int
    rows: tuple[tuple[Fraction, ...], ...]

    def v(self, n: int, k: int) -> Fraction:
        """v(n, k); zero outside the triangle."""
        if n < 0 or n > self.n_max:
            raise DomainError(f"row {n} outside stored range 0..{self.n_max}")
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        if n < 0 or n > self.n_max:
            raise DomainError(f"row {n} outside stored range 0..{self.n_max}")
        return self.rows[n]

    def row_sum(self, n: int) -> Fraction:
        return sum(self.row(n), Fraction(0))


def v_triangle(n_max: int, a, b) -> EulerTriangle:
    """Full triangle up to n_max, built by the two-term recursion."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    a, b = _check_nonneg(a, b)
    rows = []
    for n, row, d in _scaled_rows(n_max, a, b):
        den = d ** n
        rows.append(tuple(Fraction(x, den) for x in row))
    return EulerTriangle(a=a, b=b, n_max=n_max, rows=tuple(rows))


def v_row(n: int, a, b) -> tuple[Fraction, ...]:
    """Single row n as exact rationals, O(n) memory."""
    row, d = scaled_row(n, a, b)
    den = d ** n
    return tuple(Fraction(x, den) for x in row)


class BivarPoly:
    """Polynomial in two indeterminates a, b with integer coefficients.

    Stored as a mapping (i, j) -> coefficient of a^i b^j; zero coefficients
    are dropped.  Just enough arithmetic for the symbolic triangle.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return BivarPoly(out)

    def scale(self, c: int) -> "BivarPoly":
        return BivarPoly({m: c * v for m, v in self.coeffs.items()})

    def times_a(self) -> "BivarPoly":
        return BivarPoly({(i + 1, j): c for (i, j), c in self.coeffs.items()})

    def times_b(self) -> "BivarPoly":
        return BivarPoly({(i, j + 1): c for (i, j), c in self.coeffs.items()})

    def evaluate(self, a, b) -> Fraction:
        a, b = Fraction(a), Fraction(b)
        return sum(
            (c * a**i * b**j for (i, j), c in self.coeffs.items()),
            Fraction(0),
        )

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(i + j for i, j in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        def monomial(i: int, j: int) -> str:
            parts = []
            if i:
                parts.append("a" if i == 1 else f"a^{i}")
            if j:
                parts.append("b" if j == 1 else f"b^{j}")
            return "*".join(parts)

        terms = []
        for (i, j) in sorted(self.coeffs, key=lambda m: (m[0] + m[1], -m[0])):
            c = self.coeffs[(i, j)]
            m = monomial(i, j)
            if not m:
                terms.append(str(c))
            elif c == 1:
                terms.append(m)
            elif c == -1:
                terms.append(f"-{m}")
            else:
                terms.append(f"{c}*{m}")
        return " + ".join(terms).replace("+ -", "- ")

    __repr__ = __str__


def v_symbolic(n: int, k: int) -> BivarPoly:
    """v(n, k) as a polynomial in a and b (zero outside 0 <= k <= n)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return BivarPoly()
    row = [BivarPoly.constant(1)]
    for m in range(1, n + 1):
        prev = row
        row = []
        for kk in range(m + 1):
            acc = BivarPoly()
            if kk < m:
                acc = acc + prev[kk].scale(kk) + prev[kk].times_a()
            if kk > 0:
                acc = acc + prev[kk - 1].scale(m - kk) + prev[kk - 1].times_b()
            row.append(acc)
    return row[k]


def p_eval(n: int, a, b, x) -> Fraction:
    """P_{n,a,b}(x) = sum_k v(n,k) x^k, exact."""
    x = Fraction(x)
    row, d = scaled_row(n, a, b)
    num = Fraction(0)
    xp = Fraction(1)
    for v in row:
        num += v * xp
        xp *= x
    return num / d**n


def tilde_row(n: int) -> tuple[Fraction, ...]:
    """Row n of the (a,b) = (0,0) substitute triangle:
    tilde_v(n, k) = v_{1,1}(n-2, k-1), defined for n >= 2."""
    if n < 2:
        raise DomainError(f"tilde quantities need n >= 2, got {n}")
    inner = v_row(n - 2, 1, 1)
    return (Fraction(0),) + inner + (Fraction(0),)


def tilde_v(n: int, k: int) -> Fraction:
    if n < 2:
        raise DomainError(f"tilde quantities need n >= 2, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return tilde_row(n)[k]


def tilde_p_eval(n: int, x) -> Fraction:
    """tilde-P_{n,0,0}(x) = x * P_{n-2,1,1}(x), n >= 2."""
    if n < 2:
        raise DomainError(f"tilde quantities need n >= 2, got {n}")
    x = Fraction(x)
    return x * p_eval(n - 2, 1, 1, x)


def p_at_one(n: int, a, b) -> tuple[Fraction, Fraction, Fraction]:
    """Closed forms of (P(1), P'(1), P''(1)):

        P(1)   = (a+b)^{rise n}
        P'(1)  = n (n + 2b - 1) / 2 * (a+b)^{rise n-1}
        P''(1) = n (n-1) (3n^2 + (12b - 11) n + 12b^2 - 24b + 10) / 12
                 * (a+b)^{rise n-2}
    """
    a, b = _check_nonneg(a, b)
    s = a + b
    p0 = rising_factorial(s, n)
    if n == 0:
        return p0, Fraction(0), Fraction(0)
    p1 = Fraction(n * (n + 2 * b - 1), 2) * rising_factorial(s, n - 1)
    if n == 1:
        return p0, p1, Fraction(0)
    quad = 3 * n * n + (12 * b - 11) * n + 12 * b * b - 24 * b + 10
    p2 = Fraction(n * (n - 1) * quad, 12) * rising_factorial(s, n - 2)
    return p0, p1, p2


@dataclass(frozen=True)
class CTable:
    """Exact table of the connection coefficients c_{n,l}:
    c_{0,0} = 1 and c_{n+1,l} = (l + b) c_{n,l} + c_{n,l-1}."""

    b: Fraction
    n_max: int
    rows: tuple[tuple[Fraction, ...], ...]

    def c(self, n: int, ell: int) -> Fraction:
        if n < 0 or n > self.n_max:
            raise DomainError(f"row {n} outside stored range 0..{self.n_max}")
        if ell < 0 or ell > n:
            return Fraction(0)
        return self.rows[n][ell]


def c_table(n_max: int, b) -> CTable:
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    b = Fraction(b)
    if b < 0:
        raise ParameterError(f"b must be >= 0, got {b}")
    rows = [(Fraction(1),)]
    for n in range(n_max):
        prev = rows[-1]
        nxt = []
        for ell in range(n + 2):
            acc = Fraction(0)
            if ell <= n:
                acc += (ell + b) * prev[ell]
            if ell > 0:
                acc += prev[ell - 1]
            nxt.append(acc)
        rows.append(tuple(nxt))
    return CTable(b=b, n_max=n_max, rows=tuple(rows))


def eulerian_row(n: int) -> list[int]:
    """Row n of the classical Eulerian triangle <n, k> as integers."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0] * (m + 1)
        for k in range(m + 1):
            acc = 0
            if k < m:
                acc += (k + 1) * prev[k]
            if k > 0:
                acc += (m - k) * prev[k - 1]
            row[k] = acc
    return row


def eulerian(n: int, k: int) -> int:
    """Classical Eulerian number <n, k> (permutations of n with k descents)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return eulerian_row(n)[k]
