import pytest
from hypothesis import given, settings, strategies as st

from qcancel.qscalar import QLaurent, cheb, poly_eval
from qcancel.sl2q import (
    PBWMonomial,
    SL2qElement,
    TensorSquare,
    antipode,
    coproduct,
    counit,
    gen,
    hopf,
    pbw_mul,
    pbw_nf_word,
)

a, b, c, d = (gen(g) for g in "abcd")
one = a.one()


def qp(e, c=1):
    return QLaurent({e: c})


def elem(mapping):
    return SL2qElement(mapping)


def fold(word):
    acc = one
    for g in word:
        acc = pbw_mul(acc, gen(g))
    return acc


def test_product_examples():
    assert d * a == one + (b * c).scale(qp(1))
    assert b * a == (a * b).scale(qp(1))
    assert d * b == (b * d).scale(qp(1))
    assert a * d == one + elem({(0, 1, 1, 0): qp(-1)})


def test_all_relations_hold():
    q, qi = qp(1), qp(-1)
    assert b * a == (a * b).scale(q)
    assert d * b == (b * d).scale(q)
    assert b * c == c * b
    assert c * a == (a * c).scale(q)
    assert d * c == (c * d).scale(q)
    assert a * d - (b * c).scale(qi) == one
    assert d * a - (b * c).scale(q) == one


def test_word_oracle_examples():
    assert pbw_nf_word("da") == one + elem({(0, 1, 1, 0): qp(1)})
    assert pbw_nf_word("ad") == one + elem({(0, 1, 1, 0): qp(-1)})
    assert pbw_nf_word("abcd") == pbw_mul(pbw_mul(a, b), pbw_mul(c, d))
    assert pbw_nf_word("") == one


def test_non_pbw_key_rejected():
    with pytest.raises(ValueError):
        SL2qElement({(1, 0, 0, 1): 1})
    with pytest.raises(ValueError):
        pbw_nf_word("abx")


def test_normal_form_of_s2():
    # (a+d)^2 - 1 = a^2 + d^2 + ad + da - 1 = a^2 + d^2 + 1 + (q + q^-1) bc
    got = poly_eval(cheb(2, "second"), a + d)
    want = elem({(2, 0, 0, 0): 1, (0, 0, 0, 2): 1, (0, 0, 0, 0): 1, (0, 1, 1, 0): QLaurent({1: 1, -1: 1})})
    assert got == want


def test_render():
    assert (d * a).render() == "1 + q*b^1 c^1"
    assert SL2qElement().render() == "0"


words = st.text(alphabet="abcd", max_size=8)


@settings(max_examples=300)
@given(words)
def test_confluence(w):
    left = pbw_nf_word(w, "left")
    assert left == fold(w)
    assert left == pbw_nf_word(w, "right")


@settings(max_examples=100)
@given(words, words, words)
def test_associativity(u, v, w):
    x, y, z = pbw_nf_word(u), pbw_nf_word(v), pbw_nf_word(w)
    assert (x * y) * z == x * (y * z)


@given(words, words)
def test_product_matches_concatenation(u, v):
    assert pbw_nf_word(u) * pbw_nf_word(v) == pbw_nf_word(u + v)


# -- Hopf structure ----------------------------------------------------------------


def test_antipode_examples():
    assert antipode(b) == b.scale(qp(1, -1))
    assert antipode(a * b) == (b * d).scale(qp(1, -1))
    assert antipode(a) == d and antipode(d) == a
    assert antipode(c) == c.scale(qp(-1, -1))


def test_coproduct_of_a():
    unit = PBWMonomial(0, 0, 0, 0)
    A, B, C = PBWMonomial(1, 0, 0, 0), PBWMonomial(0, 1, 0, 0), PBWMonomial(0, 0, 1, 0)
    assert coproduct(a) == TensorSquare({(A, A): QLaurent(1), (B, C): QLaurent(1)})
    assert coproduct(one) == TensorSquare({(unit, unit): QLaurent(1)})


def test_counit_values():
    assert counit(a) == counit(d) == QLaurent(1)
    assert counit(b).is_zero() and counit(c).is_zero()
    assert counit(d * a) == QLaurent(1)
    assert hopf(a, "counit") == QLaurent(1)
    with pytest.raises(ValueError):
        hopf(a, "unit")


@pytest.mark.parametrize("g", "abcd")
def test_counit_axiom(g):
    x = gen(g)
    left = SL2qElement()
    right = SL2qElement()
    for (l, r), coeff in coproduct(x).terms.items():
        left = left + elem({r: 1}).scale(counit(elem({l: 1})) * coeff)
        right = right + elem({l: 1}).scale(counit(elem({r: 1})) * coeff)
    assert left == x == right


@pytest.mark.parametrize("g", "abcd")
def test_antipode_axiom(g):
    x = gen(g)
    total = SL2qElement()
    for (l, r), coeff in coproduct(x).terms.items():
        total = total + (antipode(elem({l: 1})) * elem({r: 1})).scale(coeff)
    assert total == one.scale(counit(x))


@pytest.mark.parametrize("w", ["ab", "da", "bcd", "adb"])
def test_antipode_reverses_products(w):
    x, y = pbw_nf_word(w[:1]), pbw_nf_word(w[1:])
    assert antipode(x * y) == antipode(y) * antipode(x)


@pytest.mark.parametrize("w", ["ab", "da", "cb"])
def test_coproduct_is_multiplicative(w):
    x, y = gen(w[0]), gen(w[1])
    assert coproduct(x * y) == coproduct(x) * coproduct(y)
