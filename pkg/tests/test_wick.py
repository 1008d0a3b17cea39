from collections import Counter
from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weingarten.wick import IndexedProduct, complex_wick_moment, real_wick_moment


def test_complex_examples():
    assert complex_wick_moment(IndexedProduct([(1, 1, "Z"), (1, 1, "Zbar")])) == 1
    assert complex_wick_moment(IndexedProduct.parse("1,1;1,1;1,1;1,1", "complex", omega=3)) == Fraction(2, 9)
    assert complex_wick_moment(IndexedProduct.parse("1,2,Z;2,1,Zbar")) == 0
    assert complex_wick_moment(IndexedProduct.parse("1,1,Z;1,1,Z")) == 0


def test_real_examples():
    assert real_wick_moment(IndexedProduct.parse("1,1;1,1")) == 1
    assert real_wick_moment(IndexedProduct.parse("1,1;1,1;1,1;1,1", omega=2)) == Fraction(3, 4)
    assert real_wick_moment(IndexedProduct.parse("1,1;1,2;2,1;2,2")) == 0
    assert real_wick_moment(IndexedProduct.parse("1,1;1,1;1,1")) == 0


def exz(a1, b1, d1, c1, a2, b2, d2, c2):
    # two-pair complex template written out term by term
    return int(a1 == d1 and b1 == c1 and a2 == d2 and b2 == c2) + int(
        a1 == d2 and b1 == c2 and a2 == d1 and b2 == c1
    )


def exm(a, b):
    total = 0
    for (p, q), (r, s) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]:
        total += a[p] == a[q] and a[r] == a[s] and b[p] == b[q] and b[r] == b[s]
    return total


def test_complex_template_over_two_letters():
    for idx in product((1, 2), repeat=8):
        a1, b1, d1, c1, a2, b2, d2, c2 = idx
        p = IndexedProduct([(a1, b1, "Z"), (d1, c1, "Zbar"), (a2, b2, "Z"), (d2, c2, "Zbar")], omega=5)
        assert complex_wick_moment(p) == Fraction(exz(*idx), 25)


def test_real_template_over_two_letters():
    for idx in product((1, 2), repeat=8):
        a, b = idx[:4], idx[4:]
        p = IndexedProduct([(a[i], b[i], "M") for i in range(4)], omega=Fraction(1, 2))
        assert real_wick_moment(p) == 4 * exm(a, b)


factors = st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), min_size=0, max_size=6)


@settings(max_examples=200, deadline=None)
@given(factors)
def test_unmatched_index_gives_zero(fs):
    p = IndexedProduct([(r, c, "M") for r, c in fs])
    counts = {}
    for f in fs:
        counts[f] = counts.get(f, 0) + 1
    if any(v % 2 for v in counts.values()):
        assert real_wick_moment(p) == 0
    else:
        # all factors pair up: the moment is a positive product of double factorials
        expected = 1
        for v in counts.values():
            for j in range(v - 1, 0, -2):
                expected *= j
        assert real_wick_moment(p) == expected


@settings(max_examples=200, deadline=None)
@given(factors, factors)
def test_complex_moment_is_a_product_of_factorials(zs, zbars):
    p = IndexedProduct([(r, c, "Z") for r, c in zs] + [(r, c, "Zbar") for r, c in zbars])
    cz, cb = Counter(zs), Counter(zbars)
    expected = 0
    if cz == cb:
        expected = 1
        for v in cz.values():
            expected *= factorial(v)
    assert complex_wick_moment(p) == expected


def test_tag_and_omega_validation():
    with pytest.raises(ValueError):
        real_wick_moment(IndexedProduct([(1, 1, "Z"), (1, 1, "Zbar")]))
    with pytest.raises(ValueError):
        IndexedProduct([(1, 1, "X")])
    with pytest.raises(ValueError):
        IndexedProduct([(1, 1, "M")], omega=0)
    with pytest.raises(ValueError):
        IndexedProduct.parse("1;2")
