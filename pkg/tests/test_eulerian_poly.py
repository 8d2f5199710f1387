import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from staircase_tableaux.errors import DomainError, ParameterError
from staircase_tableaux.eulerian_poly import (
    BivarPoly,
    c_table,
    eulerian,
    eulerian_row,
    p_at_one,
    p_eval,
    rising_factorial,
    tilde_p_eval,
    tilde_v,
    v_row,
    v_symbolic,
    v_triangle,
)

RATIONALS = [F(0), F(1), F(1, 2), F(2), F(3, 7)]


def test_rising_factorial_basics():
    assert rising_factorial(F(5, 3), 0) == 1
    assert rising_factorial(7, 1) == 7
    for n in range(8):
        assert rising_factorial(2, n) == math.factorial(n + 1)
    # Z_2(2,1) = 2^2 * (3/2)^{rise 2} = 15 = (2*2+1)!!
    assert 4 * rising_factorial(F(3, 2), 2) == 15


def test_triangle_known_rows():
    tri = v_triangle(3, 1, 1)
    assert tri.row(2) == (1, 4, 1)
    assert v_row(3, 1, 0) == (1, 4, 1, 0)
    assert v_row(3, 1, 0)[1] == 4       # classical <3,1>
    assert v_row(2, F(1, 2), F(1, 2))[1] == F(3, 2)
    assert 4 * v_row(2, F(1, 2), F(1, 2))[1] == 6  # type-B Eulerian


def test_triangle_out_of_range_is_zero():
    tri = v_triangle(4, 1, 2)
    assert tri.v(3, -1) == 0 and tri.v(3, 4) == 0


def test_triangle_rejects_negative_params():
    with pytest.raises(ParameterError):
        v_triangle(3, -1, 1)
    with pytest.raises(ParameterError):
        v_row(3, 0, F(-1, 2))


@pytest.mark.parametrize("a,b", [(F(0), F(0)), (F(0), F(1)), (F(1), F(0)),
                                 (F(1), F(1)), (F(1, 2), F(1, 2)), (F(2), F(3, 7))])
def test_row_sums(a, b):
    tri = v_triangle(60, a, b)
    for n in range(61):
        assert tri.row_sum(n) == rising_factorial(a + b, n)


@pytest.mark.parametrize("a,b", [(F(1), F(1)), (F(1, 2), F(2)), (F(3, 7), F(5))])
def test_symmetry(a, b):
    ab = v_triangle(100, a, b)
    ba = v_triangle(100, b, a)
    for n in range(101):
        for k in range(n + 1):
            assert ab.v(n, k) == ba.v(n, n - k)
    # P_{n,a,b}(x) = x^n P_{n,b,a}(1/x)
    for x in (F(2), F(3, 5), F(7, 2)):
        for n in (1, 5, 9):
            assert p_eval(n, a, b, x) == x**n * p_eval(n, b, a, 1 / x)


@pytest.mark.parametrize("a,b", [(F(1), F(1)), (F(1, 2), F(3)), (F(2), F(0))])
def test_boundary_values(a, b):
    tri = v_triangle(25, a, b)
    for n in range(26):
        assert tri.v(n, 0) == a**n
        assert tri.v(n, n) == b**n


def test_lp1_specializations():
    for a in (F(1), F(1, 2), F(3)):
        va0 = v_triangle(50, a, 0)
        va1 = v_triangle(50, a, 1)
        for n in range(1, 51):
            for k in range(n + 1):
                assert va0.v(n, k) == a * va1.v(n - 1, k)
    for b in (F(1), F(2, 3)):
        v0b = v_triangle(50, 0, b)
        v1b = v_triangle(50, 1, b)
        for n in range(1, 51):
            for k in range(n + 1):
                assert v0b.v(n, k) == b * v1b.v(n - 1, k - 1)


def test_log_concavity():
    for a, b in [(F(1), F(1)), (F(1, 2), F(1, 2)), (F(2), F(3, 7))]:
        tri = v_triangle(80, a, b)
        for n in range(81):
            row = tri.row(n)
            for k in range(1, n):
                assert row[k] * row[k] >= row[k - 1] * row[k + 1]


def test_v_symbolic_coeff_table():
    assert v_symbolic(2, 1).coeffs == {(1, 0): 1, (0, 1): 1, (1, 1): 2}
    assert v_symbolic(3, 2).coeffs == {(1, 0): 1, (0, 1): 1, (1, 1): 3, (0, 2): 3, (1, 2): 3}
    assert str(v_symbolic(2, 1)) == "a + b + 2*a*b"
    for n in range(7):
        assert v_symbolic(n, 0).coeffs == {(n, 0): 1}
    assert not v_symbolic(4, -1)
    assert not v_symbolic(4, 5)


@pytest.mark.parametrize("n", range(7))
def test_v_symbolic_degree_and_sign(n):
    for k in range(n + 1):
        poly = v_symbolic(n, k)
        assert poly.total_degree() == n
        assert all(c > 0 for c in poly.coeffs.values())


def test_v_symbolic_matches_triangle():
    for a, b in [(F(1), F(1)), (F(1, 2), F(3)), (F(0), F(2))]:
        tri = v_triangle(6, a, b)
        for n in range(7):
            for k in range(n + 1):
                assert v_symbolic(n, k).evaluate(a, b) == tri.v(n, k)


def test_p_eval_examples():
    assert p_eval(2, 1, 1, 2) == 13
    for n in (0, 1, 4, 9):
        assert p_eval(n, F(1, 2), F(2), 1) == rising_factorial(F(5, 2), n)
        assert p_eval(n, F(1, 2), F(2), 0) == F(1, 2) ** n


@pytest.mark.parametrize("a,b", [(F(1), F(1)), (F(1, 2), F(3)), (F(0), F(1))])
def test_p_recursion(a, b):
    # P_n(x) = ((n-1+b) x + a) P_{n-1}(x) + x(1-x) P'_{n-1}(x), checked via
    # derivative from the coefficient row
    for n in range(1, 101, 9):
        for x in (F(2, 3), F(5), F(-1, 2)):
            prev = v_row(n - 1, a, b)
            p_prev = sum(v * x**k for k, v in enumerate(prev))
            dp_prev = sum(k * v * x ** (k - 1) for k, v in enumerate(prev) if k)
            rhs = ((n - 1 + b) * x + a) * p_prev + x * (1 - x) * dp_prev
            assert p_eval(n, a, b, x) == rhs


def test_tilde_values():
    assert tilde_v(2, 1) == 1
    assert tilde_v(2, 0) == 0 and tilde_v(2, 2) == 0
    assert tilde_v(3, 1) == 1 and tilde_v(3, 2) == 1
    for n in range(2, 9):
        assert tilde_p_eval(n, 1) == math.factorial(n - 1)
    with pytest.raises(DomainError):
        tilde_v(1, 0)
    with pytest.raises(DomainError):
        tilde_p_eval(1, F(1))


def test_tilde_recursion():
    # tilde_v(n,k) = k tilde_v(n-1,k) + (n-k) tilde_v(n-1,k-1) for n >= 3
    for n in range(3, 10):
        for k in range(n + 1):
            assert tilde_v(n, k) == k * tilde_v(n - 1, k) + (n - k) * tilde_v(n - 1, k - 1)


def test_tilde_limit_monotone():
    # v_{a,a}(n,k)/(2a) -> tilde_v(n,k) monotonically along a = 2^-m
    for n in range(2, 11):
        for k in range(1, n):
            first_dev = prev_dev = None
            for m in range(1, 21):
                a = F(1, 2**m)
                dev = abs(v_row(n, a, a)[k] / (2 * a) - tilde_v(n, k))
                if prev_dev is not None:
                    assert dev <= prev_dev, (n, k, m)
                else:
                    first_dev = dev
                prev_dev = dev
            assert prev_dev <= first_dev / 2**15


def test_p_at_one_examples():
    assert p_at_one(2, 1, 1) == (6, 6, 2)
    _, p1, _ = p_at_one(1, F(1, 2), F(7, 3))
    assert p1 == F(7, 3)   # P'(1) = b at n = 1
    for a, b in [(F(1, 2), F(1, 2)), (F(2), F(3, 7)), (F(0), F(1))]:
        for n in (3, 10, 25):
            row = v_row(n, a, b)
            p0, p1, p2 = p_at_one(n, a, b)
            assert p0 == sum(row)
            assert p1 == sum(k * v for k, v in enumerate(row))
            assert p2 == sum(k * (k - 1) * v for k, v in enumerate(row))


def test_c_table():
    ct = c_table(50, F(1))
    assert ct.c(1, 0) == 1          # c_{1,0} = b
    assert ct.c(3, 2) == 6          # n(n+2b-1)/2 at n=3, b=1
    for b in (F(0), F(1, 2), F(7, 3)):
        ct = c_table(50, b)
        assert ct.c(0, 0) == 1
        for n in range(51):
            assert ct.c(n, n) == 1
            if n:
                assert ct.c(n, n - 1) == F(n, 2) * (n + 2 * b - 1)


def test_c_table_rejects_negative():
    with pytest.raises(ParameterError):
        c_table(5, -1)


def test_eulerian_numbers():
    assert eulerian(3, 1) == 4
    assert eulerian_row(4) == [1, 11, 11, 1, 0]
    for n in range(9):
        assert eulerian(n, 0) == 1
        assert sum(eulerian_row(n)) == math.factorial(n)
    # index identities against the triangle
    v01 = v_triangle(12, 0, 1)
    v11 = v_triangle(12, 1, 1)
    for n in range(1, 13):
        for k in range(n + 1):
            assert v01.v(n, k) == eulerian(n, k - 1)
            assert v11.v(n, k) == eulerian(n + 1, k)


def test_bivar_poly_str_ordering():
    p = BivarPoly({(0, 0): 2, (1, 0): 1, (0, 1): 1, (2, 1): 3})
    assert str(p) == "2 + a + b + 3*a^2*b"


@given(
    st.sampled_from(RATIONALS),
    st.sampled_from(RATIONALS),
    st.integers(min_value=0, max_value=30),
)
@settings(max_examples=40, deadline=None)
def test_row_sum_property(a, b, n):
    assert sum(v_row(n, a, b)) == rising_factorial(a + b, n)
