from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weingarten.algebra import (
    LaurentSeries,
    N,
    Polynomial,
    RationalFunction,
    format_fraction,
    laurent_expand,
    parse_fraction,
    poly_gcd,
    solve_integer_system,
    substitute_shift,
)

from oracles import laurent_by_geometric


def test_fraction_strings():
    assert format_fraction(Fraction(-3, 6)) == "-1/2"
    assert format_fraction(Fraction(4)) == "4"
    assert parse_fraction("13/2") == Fraction(13, 2)


def test_polynomial_arithmetic():
    p = (N - 1) * (N + 1)
    assert p == Polynomial([-1, 0, 1])
    q, r = p.divmod(N - 1)
    assert q == N + 1 and r.is_zero()
    assert p(3) == 8
    assert sorted(p.integer_roots()) == [-1, 1]
    assert poly_gcd(p, (N - 1) * (N + 2)) == N - 1
    assert str(N**3 - N) == "N^3 - N"


def test_rational_function_arithmetic():
    f = RationalFunction(1, N)
    assert f + 0 == f
    assert RationalFunction(1, N - 1) * RationalFunction(1, N + 1) == RationalFunction(1, N**2 - 1)
    three = RationalFunction(1, N - 1) * RationalFunction(1, N) * RationalFunction(1, N + 1)
    assert -three == RationalFunction(-1, N**3 - N)
    assert (-three).to_string() == "-1/(N^3 - N)"
    assert (-three).to_string(factored=True) == "-1/((N-1)N(N+1))"
    with pytest.raises(ZeroDivisionError):
        f / RationalFunction(0)


def test_rational_function_is_reduced_with_monic_denominator():
    f = RationalFunction(2 * (N - 1) * (N + 3), 4 * (N - 1) * N)
    assert f.den == N
    assert f.num == Polynomial([Fraction(3, 2), Fraction(1, 2)])
    assert f.den.lead == 1


def test_laurent_examples():
    f = RationalFunction(-1, (N - 1) * N * (N + 1))
    s = laurent_expand(f, 7)
    assert s.terms() == {3: -1, 5: -1, 7: -1}
    g = RationalFunction(-1, N * (N + 1) * (N + 3))
    assert laurent_expand(g, 6).terms() == {3: -1, 4: 4, 5: -13, 6: 40}
    assert laurent_expand(RationalFunction(1, N), 9).terms() == {1: 1}
    with pytest.raises(ValueError):
        laurent_expand(f, 2)
    with pytest.raises(ValueError):
        s.coefficient(8)


def test_shift():
    assert substitute_shift(RationalFunction(1, N), 1) == RationalFunction(1, N + 1)
    f = RationalFunction(-1, (N - 1) * N * (N + 2))
    assert substitute_shift(f, 1) == RationalFunction(-1, N * (N + 1) * (N + 3))
    assert substitute_shift(f, 0) == f


def test_series_json_and_text():
    s = LaurentSeries.from_terms({3: -1, 4: 4}, 5)
    assert s.to_json() == {"leading_exponent": 3, "coefficients": ["-1", "4", "0"], "order": 5}
    assert str(s) == "-N^-3 + 4*N^-4 + O(N^-6)"


roots = st.lists(st.integers(-6, 6), min_size=1, max_size=5)
numerators = st.lists(st.integers(-5, 5), min_size=1, max_size=3)


@settings(max_examples=300, deadline=None)
@given(roots, numerators, st.integers(0, 8))
def test_laurent_reconstruction(rs, num, extra):
    num_poly = Polynomial(num)
    if num_poly.is_zero() or num_poly.degree > len(rs):
        return
    f = RationalFunction(num_poly, Polynomial.from_roots(rs))
    lead = f.den.degree - f.num.degree
    order = lead + extra
    s = laurent_expand(f, order)
    # truncated series times denominator reproduces the numerator up to the truncation
    prod = {}
    for k, c in s.terms().items():
        for j, d in enumerate(f.den.coeffs):
            prod[j - k] = prod.get(j - k, 0) + c * d
    top = f.den.degree - order - 1
    exponents = set(prod) | set(range(len(f.num.coeffs)))
    for e in exponents:
        if e > top:
            expected = f.num.coeffs[e] if 0 <= e < len(f.num.coeffs) else 0
            assert prod.get(e, 0) == expected


@settings(max_examples=200, deadline=None)
@given(roots, st.integers(-4, 4), st.integers(0, 6))
def test_laurent_matches_geometric_series(rs, c, extra):
    if c == 0:
        return
    f = RationalFunction.from_roots(c, rs)
    order = len(rs) + extra
    assert laurent_expand(f, order).terms() == laurent_by_geometric(rs, c, order)


@settings(max_examples=200, deadline=None)
@given(roots, numerators, st.integers(-3, 3))
def test_shift_round_trip(rs, num, k):
    f = RationalFunction(Polynomial(num), Polynomial.from_roots(rs))
    assert substitute_shift(substitute_shift(f, k), -k) == f


@settings(max_examples=200, deadline=None)
@given(roots, roots, numerators, numerators)
def test_arithmetic_stays_reduced(r1, r2, n1, n2):
    f = RationalFunction(Polynomial(n1), Polynomial.from_roots(r1))
    g = RationalFunction(Polynomial(n2), Polynomial.from_roots(r2))
    for h in (f + g, f - g, f * g):
        if not h.is_zero():
            assert poly_gcd(h.num, h.den).degree == 0
            assert h.den.lead == 1
    if not g.is_zero():
        q = f / g
        assert q * g == f


def test_integer_solver():
    x = solve_integer_system([[2, 1], [1, 3]], [1, 0])
    assert x == [Fraction(3, 5), Fraction(-1, 5)]
    x = solve_integer_system([[0, 1], [1, 0]], [2, 3])
    assert x == [3, 2]
    with pytest.raises(ZeroDivisionError):
        solve_integer_system([[1, 2], [2, 4]], [1, 1])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_integer_solver_solutions_satisfy_system(system):
    a, b = system
    try:
        x = solve_integer_system(a, b)
    except ZeroDivisionError:
        return
    for row, rhs in zip(a, b):
        assert sum(Fraction(c) * xi for c, xi in zip(row, x)) == rhs
