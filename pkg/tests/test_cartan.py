import pytest

from monoweight.cartan import (
    AffineType,
    Family,
    WeightVector,
    build_datum,
    delta_in_roots,
    parse_type,
    root_combination,
    simple_root,
)
from monoweight.errors import ParseError, UnsupportedTypeError


@pytest.mark.parametrize("text, fam, n", [("A1", Family.A, 1), (" b4 ", Family.B, 4), ("A12", Family.A, 12)])
def test_parse_type(text, fam, n):
    t = parse_type(text)
    assert (t.family, t.rank) == (fam, n)


@pytest.mark.parametrize("text", ["C3", "D4", "A", "", "A-1"])
def test_parse_type_rejects(text):
    with pytest.raises((ParseError, UnsupportedTypeError)):
        parse_type(text)


@pytest.mark.parametrize("fam, n", [(Family.A, 0), (Family.B, 2), (Family.B, 1)])
def test_rank_bounds(fam, n):
    with pytest.raises(UnsupportedTypeError):
        AffineType(fam, n)


def test_a1_matrix():
    assert [list(r) for r in build_datum("A1").matrix] == [[2, -2], [-2, 2]]


def test_a3_matrix_is_cycle():
    c = [list(r) for r in build_datum("A3").matrix]
    assert c == [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]]


def test_b3_matrix():
    c = [list(r) for r in build_datum("B3").matrix]
    assert c == [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -2, 2]]


def test_b5_matrix_chain():
    c = [list(r) for r in build_datum("B5").matrix]
    assert c[2][3] == c[3][2] == c[3][4] == c[4][3] == -1
    assert (c[4][5], c[5][4]) == (-1, -2)
    assert all(c[i][i] == 2 for i in range(6))


@pytest.mark.parametrize("t", ["A1", "A2", "A5", "B3", "B4", "B6"])
def test_delta_annihilated_by_matrix(t):
    # the null root is the (unique up to scale) kernel vector of C
    datum = build_datum(t)
    d = delta_in_roots(datum)
    for i in datum.indices:
        assert sum(datum.matrix[i][j] * d[j] for j in datum.indices) == 0
    assert d[0] == 1


@pytest.mark.parametrize("t", ["A1", "A3", "B3", "B4"])
def test_delta_as_root_combination_is_pure_delta(t):
    datum = build_datum(t)
    w = root_combination(datum, delta_in_roots(datum))
    assert w == WeightVector((0,) * datum.size, 1)


def test_simple_root_columns(b3):
    a0 = simple_root(b3, 0)
    assert a0.lam == (2, 0, -1, 0) and a0.dcoef == 1
    a3 = simple_root(b3, 3)
    assert a3.lam == (0, 0, -1, 2) and a3.dcoef == 0
    with pytest.raises(IndexError):
        simple_root(b3, 4)


def test_orientation_a():
    a3 = build_datum("A3")
    assert a3.o(0, 1) == 1 and a3.o(1, 0) == 0
    assert a3.o(0, 3) == 0 and a3.o(3, 0) == 1
    a1 = build_datum("A1")
    assert a1.o(0, 1) == 0 and a1.o(1, 0) == 1


def test_weight_vector_arithmetic():
    u = WeightVector((1, -2, 0), 3)
    v = WeightVector((0, 1, 1), -1)
    assert u + v == WeightVector((1, -1, 1), 2)
    assert u - u == WeightVector.zero(3)
    assert 2 * v == v + v == v * 2
    assert -u == WeightVector((-1, 2, 0), -3)
    assert u.pair(1) == -2


@pytest.mark.parametrize(
    "w, text",
    [
        (WeightVector((-1, -1, 1, 0), -1), "-Λ0 -Λ1 +Λ2 -δ"),
        (WeightVector((0, 2, 0), -1), "2Λ1 -δ"),
        (WeightVector((0, 0), 0), "0"),
        (WeightVector((0, 0), -3), "-3δ"),
    ],
)
def test_weight_str(w, text):
    assert str(w) == text


def test_weight_size_mismatch():
    with pytest.raises(ValueError):
        WeightVector((1, 2), 0) + WeightVector((1, 2, 3), 0)
