import itertools

import pytest

from qcancel.qmatrix import Matrix2, build_word, word_product
from qcancel.qplane import (
    PlaneElement,
    apply_point,
    compose,
    plane_mul,
    rho_closed_triangular,
    rho_matrix,
    rho_trace,
)
from qcancel.qscalar import QLaurent, cheb, poly_eval
from qcancel.qtensor import TAlgebra
from qcancel.sl2q import gen, tautological_point

a, b, c, d = (gen(g) for g in "abcd")
one = a.one()
zero = a.zero()
T = tautological_point()


def qp(e):
    return QLaurent({e: 1})


def basis(n, u, ring_one=one):
    return PlaneElement.basis(n, u, ring_one, ring_one.zero())


def test_degree_one_action():
    (u,) = build_word("U")
    A = TAlgebra(1)
    img = apply_point(u, basis(1, 0, A.one()))
    assert img.coeffs == (A.a(1), A.b(1))


def test_degree_two_images_at_generic_point():
    x2 = apply_point(T, basis(2, 0))
    assert x2.coeffs == (a * a, (a * b).scale(QLaurent({0: 1, 2: 1})), b * b)
    xy = apply_point(T, basis(2, 1))
    assert xy.coeffs == (a * c, a * d + (b * c).scale(qp(1)), b * d)


def test_rho_one_is_transpose():
    r = rho_matrix(1, T)
    assert r.entries == ((a, c), (b, d))


def test_rho_zero_is_identity():
    assert rho_matrix(0, T).entries == ((one,),)
    assert rho_matrix(0, build_word("L")[0]).entries == ((TAlgebra(1).one(),),)


def test_traces_of_low_rho():
    assert rho_trace(rho_matrix(1, T)) == a + d
    two = rho_trace(rho_matrix(2, T))
    assert two == a * a + (a * d + (b * c).scale(qp(1))) + d * d
    assert two == (a + d) * (a + d) - 1
    assert rho_trace(rho_matrix(3, T)) == (a + d) ** 3 - (a + d) * 2


@pytest.mark.parametrize("n", range(0, 7))
def test_trace_is_second_kind_chebyshev(n):
    assert rho_trace(rho_matrix(n, T)) == poly_eval(cheb(n, "second"), a + d)


def test_closed_form_examples():
    L = build_word("L")[0]
    A = TAlgebra(1)
    assert rho_closed_triangular(1, L).entries == ((A.a(1), A.b(1)), (A.zero(), A.a(1, -1)))
    U = build_word("U")[0]
    assert rho_closed_triangular(2, U)[2, 0] == A.b(1, 2)
    for n in range(6):
        assert rho_closed_triangular(n, L)[0, 0] == A.a(1, n)


def test_closed_form_rejects_non_generators():
    with pytest.raises(ValueError):
        rho_closed_triangular(2, word_product(build_word("UL")))
    with pytest.raises(ValueError):
        rho_closed_triangular(2, T)


@pytest.mark.parametrize("kind", "UL")
@pytest.mark.parametrize("n", range(0, 9))
def test_closed_form_matches_substitution(kind, n):
    g = build_word(kind)[0]
    assert rho_closed_triangular(n, g) == rho_matrix(n, g)


@pytest.mark.parametrize("kind", "UL")
def test_triangular_shape(kind):
    r = rho_matrix(4, build_word(kind)[0])
    below = all(r[v, u].is_zero() for v in range(5) for u in range(5) if v > u)
    above = all(r[v, u].is_zero() for v in range(5) for u in range(5) if v < u)
    assert below if kind == "L" else above


WORDS = ["".join(p) for L in range(1, 5) for p in itertools.product("UL", repeat=L)]


@pytest.mark.parametrize("pattern", WORDS)
def test_rho_reverses_products(pattern):
    ms = build_word(pattern)
    for n in range(0, 5):
        acc = rho_matrix(n, ms[0])
        for m in ms[1:]:
            acc = compose(rho_matrix(n, m), acc)
        assert acc == rho_matrix(n, word_product(ms))


@pytest.mark.parametrize("kind", "UL")
@pytest.mark.parametrize("n", range(1, 6))
def test_action_is_multiplicative(kind, n):
    g = build_word(kind)[0]
    R1 = TAlgebra(1).one()
    X, Y = apply_point(g, basis(1, 0, R1)), apply_point(g, basis(1, 1, R1))
    for u in range(n + 1):
        img = apply_point(g, basis(n, u, R1))
        prod = PlaneElement(0, (R1,))
        for _ in range(n - u):
            prod = plane_mul(prod, X)
        for _ in range(u):
            prod = plane_mul(prod, Y)
        assert img == prod


def test_plane_relation():
    # Y * X = q X * Y in the basis
    X, Y = basis(1, 0), basis(1, 1)
    assert (Y * X).coeffs == (zero, one.scale(qp(1)), zero)
    assert (X * Y).coeffs == (zero, one, zero)


def test_identity_point():
    ident = Matrix2(one, zero, zero, one)
    r = rho_matrix(3, ident)
    assert all(r[v, u] == (one if u == v else zero) for v in range(4) for u in range(4))
