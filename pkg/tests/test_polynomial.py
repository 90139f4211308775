import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splinezeros import Polynomial, count_distinct_roots, poly_gcd, squarefree_part
from splinezeros.errors import InfiniteRootsError, IntervalError


def bisection_root_count(p, a, b, depth=1024):
    """Oracle for polynomials known to have only simple roots in [a, b]:
    count sign changes of p on a fine grid, refining to width 1/depth."""
    step = F(1, depth)
    count = 0
    x = a
    prev = p.eval(a)
    if prev == 0:
        count += 1
    while x < b:
        nxt = min(x + step, b)
        val = p.eval(nxt)
        if val == 0:
            count += 1
        elif prev != 0 and (prev < 0) != (val < 0):
            count += 1
        if val != 0:
            prev = val
        x = nxt
    return count


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def test_eval_examples():
    p = Polynomial([-2, 0, 1])  # x^2 - 2
    assert p.eval(F(3, 2)) == F(1, 4)
    assert Polynomial().eval(F(7, 3)) == 0
    assert Polynomial([2, -3, 1]).eval(3) == 2  # (x-1)(x-2) at 3


def test_degree_sentinel():
    assert Polynomial().degree is None
    assert Polynomial().is_zero
    assert Polynomial([5]).degree == 0
    assert Polynomial([0, 0, 1]).degree == 2
    assert Polynomial([1, 0]).degree == 0  # trailing zeros stripped


def test_derivative_examples():
    assert Polynomial([0, 0, 0, 1]).derivative() == Polynomial([0, 0, 3])
    assert Polynomial([5]).derivative() == Polynomial()
    assert Polynomial([2, -3, 1]).derivative() == Polynomial([-3, 2])


def test_antiderivative_examples():
    assert Polynomial([1]).antiderivative(0) == Polynomial([0, 1])
    assert Polynomial([0, 2]).antiderivative(3) == Polynomial([3, 0, 1])
    assert Polynomial([0, 0, 3]).antiderivative(0) == Polynomial([0, 0, 0, 1])


@given(st.lists(rationals, max_size=6), rationals)
@settings(max_examples=100)
def test_derivative_antiderivative_inverse(coeffs, constant):
    p = Polynomial(coeffs)
    assert p.antiderivative(constant).derivative() == p
    q = p.derivative().antiderivative(p.eval(0))
    assert q == p


@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5), rationals)
@settings(max_examples=100)
def test_ring_identities(a_coeffs, b_coeffs, x):
    a, b = Polynomial(a_coeffs), Polynomial(b_coeffs)
    assert (a + b).eval(x) == a.eval(x) + b.eval(x)
    assert (a * b).eval(x) == a.eval(x) * b.eval(x)
    assert (a - b).eval(x) == a.eval(x) - b.eval(x)


@given(st.lists(rationals, max_size=5), rationals, rationals)
@settings(max_examples=100)
def test_taylor_shift_and_reflect(coeffs, h, x):
    p = Polynomial(coeffs)
    assert p.taylor_shift(h).eval(x) == p.eval(x + h)
    assert p.reflect().eval(x) == p.eval(-x)


def test_count_roots_x2_minus_2():
    p = Polynomial([-2, 0, 1])
    # oracle first: one sign change on [0, 2]
    assert bisection_root_count(p, F(0), F(2)) == 1
    assert count_distinct_roots(p, 0, 2) == 1


def test_count_roots_distinct_only():
    # roots planted at 1 (double) and 3; only 1 lies in (0, 2)
    p = Polynomial.from_roots([1, 1, 3])
    assert count_distinct_roots(p, 0, 2, open_left=True, open_right=True) == 1


def test_count_roots_none():
    assert count_distinct_roots(Polynomial([1, 0, 1]), -10, 10) == 0


def test_count_roots_errors():
    with pytest.raises(InfiniteRootsError):
        count_distinct_roots(Polynomial(), 0, 1)
    with pytest.raises(IntervalError):
        count_distinct_roots(Polynomial([0, 1]), 1, 1)
    with pytest.raises(IntervalError):
        count_distinct_roots(Polynomial([0, 1]), 2, 1)


def test_count_roots_endpoint_flags():
    p = Polynomial.from_roots([0, 1, 2])
    assert count_distinct_roots(p, 0, 2) == 3
    assert count_distinct_roots(p, 0, 2, open_left=True) == 2
    assert count_distinct_roots(p, 0, 2, open_right=True) == 2
    assert count_distinct_roots(p, 0, 2, open_left=True, open_right=True) == 1


def test_count_roots_against_planted_roots():
    """>= 500 randomized cases with known rational roots."""
    rng = random.Random(777)
    cases = 0
    while cases < 500:
        deg = rng.randint(1, 6)
        roots = [F(rng.randint(-10, 10), rng.randint(1, 4)) for _ in range(deg)]
        lead = F(rng.choice([-3, -2, -1, 1, 2, 3]))
        p = Polynomial.from_roots(roots, lead=lead)
        a = F(rng.randint(-12, 0), rng.randint(1, 3))
        b = a + F(rng.randint(1, 24), rng.randint(1, 3))
        distinct = set(roots)
        for open_left, open_right in ((False, False), (True, True),
                                      (True, False), (False, True)):
            expected = sum(
                1 for r in distinct
                if (a < r or (not open_left and r == a))
                and (r < b or (not open_right and r == b))
            )
            got = count_distinct_roots(p, a, b, open_left=open_left,
                                       open_right=open_right)
            assert got == expected, (roots, a, b, open_left, open_right)
        cases += 1


def test_count_equals_squarefree_count():
    rng = random.Random(888)
    for _ in range(100):
        deg = rng.randint(1, 4)
        roots = [F(rng.randint(-5, 5)) for _ in range(deg)]
        p = Polynomial.from_roots(roots + roots)  # force multiplicities
        q = squarefree_part(p)
        a, b = F(-6), F(6)
        assert count_distinct_roots(p, a, b) == count_distinct_roots(q, a, b)


def test_closed_minus_open_counts_endpoint_zeros():
    rng = random.Random(999)
    for _ in range(200):
        deg = rng.randint(1, 5)
        roots = [F(rng.randint(-6, 6)) for _ in range(deg)]
        p = Polynomial.from_roots(roots)
        a = F(rng.randint(-7, 5))
        b = a + F(rng.randint(1, 6))
        closed = count_distinct_roots(p, a, b)
        opened = count_distinct_roots(p, a, b, open_left=True, open_right=True)
        endpoint_zeros = (p.eval(a) == 0) + (p.eval(b) == 0)
        assert closed - opened == endpoint_zeros


def test_poly_gcd_common_factor():
    p = Polynomial.from_roots([1, 2])
    q = Polynomial.from_roots([2, 3])
    g = poly_gcd(p, q)
    assert g == Polynomial([-2, 1])


def test_squarefree_part_drops_multiplicity():
    p = Polynomial.from_roots([1, 1, 1, 4])
    assert squarefree_part(p).degree == 2
