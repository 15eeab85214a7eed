from fractions import Fraction
from math import comb

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from logarr.exact import (
    HilbertSeries,
    LaurentPoly,
    MPoly,
    RatMatrix,
    TruncPoly,
    dim_S,
    expand_at_one,
    hilbert_series_free,
    kernel_basis,
    monomials,
    trunc_invert,
)

small = st.integers(-6, 6)


def polys(n_vars=2, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * n_vars)
    return st.dictionaries(exps, small, max_size=5).map(lambda t: MPoly(n_vars, t))


def to_sympy(p: MPoly):
    xs = sympy.symbols(f"x0:{p.n_vars}")
    return sympy.expand(sum(sympy.Rational(c) * sympy.prod(x**e for x, e in zip(xs, exp)) for exp, c in p.terms.items()))


@given(polys(), polys(), polys())
def test_polynomial_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys(), polys())
def test_exact_division_inverts_product(a, b):
    if b.is_zero():
        return
    assert (a * b).divide_exact(b) == a


def test_monomial_counts():
    for n in range(1, 5):
        for m in range(6):
            assert len(monomials(n, m)) == dim_S(n, m) == comb(m + n - 1, n - 1)
    assert dim_S(3, -1) == 0


def test_kernel_examples():
    k = kernel_basis(RatMatrix([[1, 1], [2, 2]]))
    assert len(k) == 1 and k[0][0] == -k[0][1] != 0
    assert kernel_basis(RatMatrix.identity(3)) == []
    assert len(kernel_basis(RatMatrix.zeros(2, 3))) == 3


@settings(max_examples=40)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_kernel_against_sympy(rows):
    M = RatMatrix(rows)
    K = kernel_basis(M)
    assert len(K) == 4 - sympy.Matrix(rows).rank()
    for v in K:
        assert all(x == 0 for x in M.apply(v))


def test_free_series_examples():
    h = hilbert_series_free([0], 1)
    assert [h.dim(m) for m in range(4)] == [1, 2, 3, 4]
    assert hilbert_series_free([1, 1, 1, 1], 2).numerator == LaurentPoly({-1: 4})
    h = hilbert_series_free([-5] * 4, 3)
    assert h.numerator == LaurentPoly({5: 4}) and h.denom_power == 4


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.integers(1, 3), st.integers(-6, 8))
def test_free_series_dims(twists, n, m):
    h = hilbert_series_free(twists, n)
    assert h.dim(m) == sum(dim_S(n + 1, m + a) for a in twists)


def test_expand_at_one_examples():
    s = expand_at_one(LaurentPoly({0: 1}), 1, 1, 0)
    assert s.negative_part() == {-1: TruncPoly(1, [-1])}
    s = expand_at_one(LaurentPoly({1: 1}), 2, 1, 0)
    assert s.coefficient(-2) == TruncPoly(1, [1]) and s.coefficient(-1) == TruncPoly(1, [1])
    s = expand_at_one(LaurentPoly({1: 1, 5: 4, 6: -1}), 4, 1, 0)
    assert s.coefficient(-4) == TruncPoly(1, [4])


@settings(deadline=None)
@given(st.dictionaries(st.integers(-3, 6), small, max_size=4), st.integers(0, 4))
def test_expand_at_one_against_sympy(terms, k):
    X, u = sympy.symbols("X u")
    num = LaurentPoly(terms)
    s = expand_at_one(num, k, 1, 2)
    f = sum(c * X**e for e, c in terms.items()) / (1 - X) ** k
    ser = sympy.series(sympy.sympify(f).subs(X, 1 + u), u, 0, 3).removeO()
    for order in range(-k, 3):
        assert Fraction(str(ser.coeff(u, order))) == s.coefficient(order).coeffs[0]


def test_trunc_invert_examples():
    assert trunc_invert(TruncPoly(4, [1, 6])) == TruncPoly(4, [1, -6, 36, -216])
    assert trunc_invert(TruncPoly(3, [1])) == TruncPoly(3, [1])
    pi = TruncPoly(5, [1, 15, 80, 170, 104])
    assert pi * trunc_invert(TruncPoly(5, [1, 1])) == TruncPoly(5, [1, 14, 66, 104, 0])


@given(st.lists(small, min_size=1, max_size=5), st.integers(1, 6))
def test_trunc_invert_is_inverse(tail, k):
    p = TruncPoly(k, [1] + tail)
    assert p * trunc_invert(p) == TruncPoly.one(k)


@given(st.dictionaries(st.integers(-2, 5), small, max_size=4), st.integers(1, 4), st.integers(-3, 10))
def test_series_dim_is_convolution(terms, k, m):
    h = HilbertSeries(LaurentPoly(terms), k)
    assert h.dim(m) == sum(c * comb(m - e + k - 1, k - 1) for e, c in terms.items() if m - e >= 0)
