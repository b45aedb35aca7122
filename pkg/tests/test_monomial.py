import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoweight import build_datum
from monoweight.errors import ParseError
from monoweight.monomial import (
    ONE,
    Monomial,
    Variant,
    a_variable,
    apply_e,
    apply_f,
    apply_word,
    embed_lambda,
    eps,
    expand_a_product,
    format_monomial,
    h_lambda,
    inv,
    ke,
    kf,
    mul,
    parse_monomial,
    phi,
    wt_classical,
)

from strategies import monomials, tables, words

INF, HW = Variant.INFINITY, Variant.HIGHEST


def M(text):
    return parse_monomial(text)


def test_zero_exponents_dropped():
    m = Monomial({(0, 0): 0, (1, 2): 3})
    assert len(m) == 1 and m[(1, 2)] == 3 and m.get((0, 0)) == 0


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        Monomial({(-1, 0): 1})


def test_one():
    assert ONE.is_one and ONE.max_level() == -1 and format_monomial(ONE) == "1"
    assert ONE.row(3) == [0]


def test_row_and_level():
    m = M("Y(0,0)^-1 Y(0,2) Y(1,1)")
    assert m.row(0) == [-1, 0, 1]
    assert m.row(1) == [0, 1]
    assert m.max_level() == 2


@pytest.mark.parametrize(
    "i, k, text",
    [
        (0, 0, "Y(0,0) Y(0,1) Y(1,1)^-2"),
        (1, 0, "Y(0,0)^-2 Y(1,0) Y(1,1)"),
        (1, 3, "Y(0,3)^-2 Y(1,3) Y(1,4)"),
    ],
)
def test_a_variables_a1(a1, i, k, text):
    assert a_variable(a1, i, k) == M(text)


def test_a_variables_a2(a2):
    # the edge between n and 0 is oriented the other way round
    assert a_variable(a2, 0, 0) == M("Y(0,0) Y(0,1) Y(1,0)^-1 Y(2,1)^-1")
    assert a_variable(a2, 2, 0) == M("Y(2,0) Y(2,1) Y(0,0)^-1 Y(1,1)^-1")


def test_a_variable_b3(b3):
    assert a_variable(b3, 3, 0) == M("Y(3,0) Y(3,1) Y(2,1)^-1")
    assert a_variable(b3, 2, 0) == M("Y(2,0) Y(2,1) Y(0,1)^-1 Y(1,1)^-1 Y(3,0)^-2")


def test_phi_eps_kf_ke():
    m = M("Y(0,0)^-1 Y(0,1)^3 Y(0,2)^-2 Y(0,3)^2")
    # prefix sums -1, 2, 0, 2
    assert phi(m, 0) == 2
    assert eps(m, 0) == 0
    assert kf(m, 0) == 1 and ke(m, 0) == 3


def test_highest_weight_phi_eps():
    m = M("Y(1,0)^-1")
    assert phi(m, 1, HW) == 0
    assert phi(m, 1) == -1
    assert eps(m, 1, HW) == 1
    m = M("Y(1,0) Y(1,1)^-1")
    assert (phi(m, 1, HW), eps(m, 1, HW)) == (1, 1)


def test_example_path_a1(a1):
    m = apply_word(a1, INF, ONE, (1, 0))
    assert m == M("Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1")
    assert apply_e(a1, INF, m, 1) == apply_f(a1, INF, ONE, 0)


def test_e_on_one_is_zero(a1):
    assert apply_e(a1, INF, ONE, 0) is None


def test_highest_weight_word(a2):
    h = h_lambda((0, 2, 0))
    m = apply_word(a2, HW, h, (2, 0, 1))
    assert m == M("Y(1,0) Y(1,3) Y(2,0) Y(2,3)^-1")
    assert apply_word(a2, HW, h, (1, 0, 2)) is None
    assert apply_f(a2, HW, h, 0) is None


def test_embed_lambda():
    assert embed_lambda(h_lambda((1, 0)), (1, 0)) == ONE
    with pytest.raises(ValueError):
        h_lambda((1, -1))


@pytest.mark.parametrize(
    "text",
    ["1", "Y(0,0)", "Y(0,0)^-3 Y(1,1)^5", "Y( 2 , 3 )^(-2)"],
)
def test_parse(text):
    m = parse_monomial(text)
    assert parse_monomial(format_monomial(m)) == m


@pytest.mark.parametrize("text", ["Y(0,0)^", "Z(0,0)", "Y(0)", "Y(0,0) garbage", "Y(-1,0)"])
def test_parse_rejects(text):
    with pytest.raises((ParseError, ValueError)):
        parse_monomial(text)


def test_parse_combines_repeats():
    assert parse_monomial("Y(0,0) Y(0,0)^-1") == ONE


# --- properties ------------------------------------------------------------


@given(monomials(), monomials(), monomials())
def test_group_laws(x, y, z):
    assert mul(x, ONE) == x
    assert mul(x, inv(x)) == ONE
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, y) == mul(y, x)
    assert hash(mul(x, y)) == hash(mul(y, x))


@given(monomials())
def test_format_parse_roundtrip(m):
    assert parse_monomial(format_monomial(m)) == m


@given(st.sampled_from(["A1", "A2", "A3", "B3"]).flatmap(lambda t: st.tuples(st.just(t), tables(4), tables(4))))
def test_expand_is_homomorphism(args):
    t, s1, s2 = args
    datum = build_datum(t)
    s1 = {k: v for k, v in s1.items() if k[0] < datum.size}
    s2 = {k: v for k, v in s2.items() if k[0] < datum.size}
    total = dict(s1)
    for key, a in s2.items():
        total[key] = total.get(key, 0) + a
    assert expand_a_product(datum, total) == mul(expand_a_product(datum, s1), expand_a_product(datum, s2))


@pytest.mark.parametrize("t", ["A2", "A3", "A5"])
@given(k=st.integers(0, 6))
def test_full_column_is_trivial_in_type_a(t, k):
    datum = build_datum(t)
    assert expand_a_product(datum, {(i, k): 1 for i in datum.indices}) == ONE


@pytest.mark.parametrize("t", ["A1", "B3", "B4"])
def test_full_column_nontrivial(t):
    datum = build_datum(t)
    assert expand_a_product(datum, {(i, 0): 1 for i in datum.indices}) != ONE


@pytest.mark.parametrize("t", ["A1", "A3", "B3"])
@settings(max_examples=60)
@given(data=st.data())
def test_e_inverts_f(t, data):
    datum = build_datum(t)
    word = data.draw(words(datum.size))
    m = apply_word(datum, INF, ONE, word)
    i = data.draw(st.sampled_from(list(datum.indices)))
    f = apply_f(datum, INF, m, i)
    assert apply_e(datum, INF, f, i) == m
    assert eps(f, i) == eps(m, i) + 1
    assert phi(m, i) - eps(m, i) == wt_classical(m, datum.size).pair(i)


@pytest.mark.parametrize("t, lam", [("A2", (0, 2, 0)), ("B3", (1, 0, 1, 1))])
@settings(max_examples=60)
@given(data=st.data())
def test_highest_weight_axioms(t, lam, data):
    datum = build_datum(t)
    m = apply_word(datum, HW, h_lambda(lam), data.draw(words(datum.size, 5)))
    if m is None:
        return
    for i in datum.indices:
        assert phi(m, i, HW) >= 0 and eps(m, i, HW) >= 0
        assert phi(m, i, HW) - eps(m, i, HW) == wt_classical(m, datum.size).pair(i)
        f = apply_f(datum, HW, m, i)
        if f is not None:
            assert apply_e(datum, HW, f, i) == m
