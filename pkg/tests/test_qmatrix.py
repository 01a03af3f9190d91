import itertools
import random

import pytest

from qcancel.qmatrix import (
    Matrix2,
    OverlapError,
    WordSpec,
    build_word,
    formal_inverse,
    mat_trace,
    sl2q_relations,
    t_zero,
    validate_sl2q,
    word_product,
    word_shift,
)
from qcancel.qscalar import CycloContext, cheb, poly_eval
from qcancel.qtensor import TAlgebra, eval_counting
from qcancel.sl2q import tautological_point

PATTERNS = ["".join(p) for L in range(1, 7) for p in itertools.product("UL", repeat=L)]


def test_wordspec_grammar():
    assert WordSpec("UULUL").k == 5
    for bad in ["", "UX", "ul", "U L"]:
        with pytest.raises(ValueError):
            WordSpec(bad)


def test_build_word_generators():
    (u,) = build_word("U")
    A = TAlgebra(1)
    assert u == Matrix2(A.a(1), A.b(1), A.zero(), A.a(1, -1))
    up, lo = build_word("UL")
    B = TAlgebra(2)
    assert up == Matrix2(B.a(1), B.b(1), B.zero(), B.a(1, -1))
    assert lo == Matrix2(B.a(2), B.zero(), B.b(2), B.a(2, -1))
    assert len(build_word("UULUL")) == 5


def test_build_word_carries_context():
    ctx = CycloContext(6)
    assert all(e.ctx == ctx for m in build_word("LU", ctx) for e in m.entries())


def test_product_of_ul():
    B = TAlgebra(2)
    P = word_product(build_word("UL"))
    assert P.e11 == B.monomial([1, 1], [0, 0]) + B.monomial([0, 0], [1, 1])
    assert P.e12 == B.monomial([0, -1], [1, 0])
    assert P.e21 == B.monomial([-1, 0], [0, 1])
    assert P.e22 == B.monomial([-1, -1], [0, 0])
    assert word_product(build_word("U")) == build_word("U")[0]


def test_overlapping_factors_need_assertion():
    (u,) = build_word("U")
    with pytest.raises(OverlapError):
        word_product([u, u])
    assert word_product([u, u], assert_commute=True) == u * u


def test_traces():
    assert mat_trace(Matrix2(1, 0, 0, 1)) == 2
    A = TAlgebra(1)
    assert mat_trace(build_word("U")[0]) == A.a(1) + A.a(1, -1)
    B = TAlgebra(2)
    tr = mat_trace(word_product(build_word("UL")))
    assert tr == B.monomial([1, 1], [0, 0]) + B.monomial([0, 0], [1, 1]) + B.monomial([-1, -1], [0, 0])


def test_word_shift():
    A = TAlgebra(1)
    (u2,) = word_shift(build_word("U"), 2)
    assert u2 == Matrix2(A.a(1, 2), A.b(1, 2), A.zero(), A.a(1, -2))
    assert word_shift(build_word("UL"), 1) == build_word("UL")
    with pytest.raises(ValueError):
        word_shift([word_product(build_word("UL"))], 2)


def test_shifted_intro_trace_scales_exponents():
    n = 3
    plain = mat_trace(word_product(build_word("UULUL")))
    shifted = mat_trace(word_product(word_shift(build_word("UULUL"), n)))
    assert {(tuple(n * x for x in m.alpha), tuple(n * x for x in m.beta)) for m in plain.terms} == {
        (m.alpha, m.beta) for m in shifted.terms
    }


def test_validate_examples():
    assert validate_sl2q(build_word("U")[0])
    assert validate_sl2q(word_product(build_word("UL")))
    A = TAlgebra(1)
    bad = Matrix2(A.a(1), A.b(1), A.zero(), A.a(1))
    assert not validate_sl2q(bad)
    failing = [k for k, v in sl2q_relations(bad).items() if not v.is_zero()]
    assert "ad-q^-1bc=1" in failing


@pytest.mark.parametrize("pattern", PATTERNS[:30])
def test_every_generator_and_product_is_a_point(pattern):
    ms = build_word(pattern)
    assert all(validate_sl2q(m) for m in ms)
    assert validate_sl2q(word_product(ms))


def test_tautological_point_is_valid():
    assert validate_sl2q(tautological_point())


@pytest.mark.parametrize("pattern", ["U", "LU", "UULUL"])
def test_formal_inverse(pattern):
    P = word_product(build_word(pattern))
    inv = formal_inverse(P)
    one = P.e11.one()
    ident = Matrix2(one, one.zero(), one.zero(), one)
    assert P * inv == ident == inv * P
    assert validate_sl2q(inv, q_exp=-1)
    assert validate_sl2q(inv, opposite=True)


def test_formal_inverse_of_tautological_point():
    T = tautological_point()
    inv = formal_inverse(T)
    assert validate_sl2q(inv, q_exp=-1)
    assert not validate_sl2q(inv)


def test_t_zero():
    assert t_zero("U") == 2
    assert t_zero("UL") == 3
    assert t_zero("UULUL") == 10


@pytest.mark.parametrize("pattern", PATTERNS)
def test_t_zero_is_the_counting_trace(pattern):
    assert t_zero(pattern) == eval_counting(mat_trace(word_product(build_word(pattern))))


def test_trace_of_power_is_chebyshev():
    rng = random.Random(7)
    for _ in range(40):
        # random integer SL2 matrix as a product of unipotent factors
        M = Matrix2(1, 0, 0, 1)
        for _ in range(rng.randint(1, 6)):
            s = rng.randint(-3, 3)
            M = M * (Matrix2(1, s, 0, 1) if rng.random() < 0.5 else Matrix2(1, 0, s, 1))
        assert M.e11 * M.e22 - M.e12 * M.e21 == 1
        P = Matrix2(1, 0, 0, 1)
        for n in range(0, 9):
            assert mat_trace(P) == poly_eval(cheb(n, "first"), mat_trace(M))
            P = P * M
