import math

import pytest
from hypothesis import given, strategies as st

from qcancel.qscalar import (
    ContextMismatch,
    CycloContext,
    IntPoly,
    QLaurent,
    cheb,
    cyclo_poly,
    cyclo_reduce,
    poly_eval,
    qbinom,
    qint,
    valid_root_orders,
)

q = QLaurent({1: 1})
qinv = QLaurent({-1: 1})


def laurent(d):
    return QLaurent(d)


# -- ql_arith ---------------------------------------------------------------


def test_add_cancels():
    assert (q + 1) + (-1) == q


def test_inverse_pair():
    assert q * qinv == QLaurent(1)


def test_mul_under_order_four():
    ctx = CycloContext(4)
    x = QLaurent({0: 1, 1: 1}, ctx)
    assert x * x == QLaurent({1: 2}, ctx)


def test_zero_coefficients_are_dropped():
    assert QLaurent({0: 0, 3: 0}).terms == {}
    assert (q - q).is_zero()


def test_mismatched_contexts_raise():
    with pytest.raises(ContextMismatch):
        QLaurent(1, CycloContext(4)) + QLaurent(1, CycloContext(6))


def test_negative_power_of_monomial():
    assert QLaurent({2: -1}) ** -1 == QLaurent({-2: -1})


coeff_dicts = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5)


@given(coeff_dicts, coeff_dicts, coeff_dicts)
def test_ring_laws(x, y, z):
    x, y, z = laurent(x), laurent(y), laurent(z)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(coeff_dicts, st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12]))
def test_reduction_is_idempotent_and_a_ring_map(x, m):
    ctx = CycloContext(m)
    r = cyclo_reduce(laurent(x), ctx)
    assert cyclo_reduce(r, ctx) == r
    assert all(0 <= e < ctx.degree for e in r.terms)
    y = laurent({1: 2, -3: 1})
    assert cyclo_reduce(laurent(x) * y, ctx) == r * cyclo_reduce(y, ctx)


# -- cyclotomic polynomials ---------------------------------------------------


def test_cyclo_poly_small():
    assert cyclo_poly(1).coeffs == (-1, 1)
    assert cyclo_poly(4).coeffs == (1, 0, 1)
    assert cyclo_poly(6).coeffs == (1, -1, 1)
    assert cyclo_poly(12).coeffs == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", range(1, 41))
def test_cyclo_poly_degree_is_totient(m):
    phi = cyclo_poly(m)
    totient = sum(1 for j in range(1, m + 1) if math.gcd(j, m) == 1)
    assert phi.degree == totient
    assert phi.coeffs[-1] == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 7, 8, 10])
def test_context_n(m):
    ctx = CycloContext(m)
    assert ctx.n == (m if m % 2 else m // 2)


def test_valid_root_orders():
    assert valid_root_orders(1) == [1, 2]
    assert valid_root_orders(4) == [8]
    assert valid_root_orders(5) == [5, 10]


def test_context_rejects_bad_order():
    with pytest.raises(ValueError):
        CycloContext(0)


# -- cyclo_reduce -------------------------------------------------------------


def test_cyclo_reduce_examples():
    ctx = CycloContext(4)
    assert cyclo_reduce(QLaurent({4: 1}), ctx) == QLaurent(1, ctx)
    assert cyclo_reduce(qinv, ctx) == QLaurent({1: -1}, ctx)
    assert cyclo_reduce(qint(4), ctx).is_zero()


def test_context_equality_is_strict():
    assert QLaurent(1, CycloContext(4)) != QLaurent(1)
    assert QLaurent(1, CycloContext(4)) == 1


# -- quantum integers and binomials -------------------------------------------


def test_qint():
    assert qint(3) == laurent({0: 1, 1: 1, 2: 1})
    assert qint(1, "standard") == qint(1, "balanced") == QLaurent(1)
    assert qint(3, "balanced") == laurent({2: 1, 0: 1, -2: 1})
    assert qint(0).is_zero()
    with pytest.raises(ValueError):
        qint(2, "odd")


def test_qbinom_values():
    assert qbinom(2, 1) == laurent({0: 1, 1: 1})
    assert qbinom(4, 2) == laurent({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert qbinom(4, 2) == laurent({0: 1, 2: 1}) * qint(3)
    assert qbinom(3, 1, 2) == laurent({0: 1, 2: 1, 4: 1})


def test_qbinom_errors():
    with pytest.raises(ValueError):
        qbinom(2, 3)


def test_qbinom_vanishes_at_order_four():
    assert cyclo_reduce(qbinom(4, 2), CycloContext(4)).is_zero()


@pytest.mark.parametrize("n", range(0, 17))
def test_qbinom_at_one(n):
    for k in range(n + 1):
        for s in (1, 2, 3):
            b = qbinom(n, k, s)
            assert b.eval_at_one() == math.comb(n, k)
            assert b.is_nonneg()


@pytest.mark.parametrize("n", range(2, 13))
def test_interior_qbinoms_vanish_at_valid_orders(n):
    orders = [2 * n] + ([n] if n % 2 else [])
    for m in orders:
        # q^(m/n) is the primitive n-th root, so use it as the binomial base
        ctx = CycloContext(m)
        for k in range(1, n):
            assert cyclo_reduce(qbinom(n, k, m // n), ctx).is_zero()


@pytest.mark.parametrize("n", range(2, 13))
def test_interior_qbinoms_vanish_at_primitive_root(n):
    ctx = CycloContext(n)
    assert all(cyclo_reduce(qbinom(n, k), ctx).is_zero() for k in range(1, n))


def test_q_pascal_matches_product_formula():
    # [n choose k] * [k]! * [n-k]! = [n]!
    def fact(j):
        out = QLaurent(1)
        for i in range(1, j + 1):
            out = out * qint(i)
        return out

    for n in range(9):
        for k in range(n + 1):
            assert qbinom(n, k) * fact(k) * fact(n - k) == fact(n)


# -- Chebyshev ----------------------------------------------------------------


def test_cheb_table():
    assert cheb(0, "first") == IntPoly((2,))
    assert cheb(1, "first") == cheb(1, "second") == IntPoly((0, 1))
    assert cheb(6, "first") == IntPoly((-2, 0, 9, 0, -6, 0, 1))
    assert cheb(4, "second") == IntPoly((1, 0, -3, 0, 1))
    assert str(cheb(6, "first")) == "t^6-6*t^4+9*t^2-2"


@pytest.mark.parametrize("n", range(2, 33))
def test_first_kind_from_second_kind(n):
    assert cheb(n, "first") == cheb(n, "second") - cheb(n - 2, "second")


@pytest.mark.parametrize("t0", range(3, 13))
def test_closed_form(t0):
    from decimal import Decimal, getcontext

    getcontext().prec = 80
    r = Decimal(t0 * t0 - 4).sqrt()
    lam, mu = (t0 + r) / 2, (t0 - r) / 2
    for n in range(13):
        assert cheb(n, "first")(t0) == int((lam**n + mu**n).to_integral_value())


def test_poly_eval_on_laurent():
    x = laurent({1: 1, -1: 1})
    assert poly_eval(cheb(2, "first"), x) == laurent({2: 1, -2: 1})
    assert poly_eval(IntPoly(()), x).is_zero()
