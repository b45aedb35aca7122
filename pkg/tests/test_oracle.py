import json
import random

import pydot
import pytest

from monoweight import build_datum
from monoweight.monomial import ONE, Variant, h_lambda
from monoweight.oracle import (
    Report,
    b4_coefficients,
    bfs_expand,
    check_axioms,
    verify_D,
    verify_wall_iso,
)
from monoweight.cartan import WeightVector

B4_A = [1, 0, 1, 1, 2, 1, 3, 2, 3, 3, 4, 3, 5, 4, 5, 5, 6, 5, 7, 6, 7]
B4_B = [0, 1, 0, 2, 1, 2, 2, 3, 2, 4, 3, 4, 4, 5, 4, 6, 5, 6, 6, 7, 6]


def test_depth_one_a1(a1):
    g = bfs_expand(a1, Variant.INFINITY, ONE, 1)
    assert len(g.nodes) == 3 and len(g.edges) == 2
    assert g.depth_counts() == [1, 2]


def test_depth_zero(b3):
    g = bfs_expand(b3, Variant.INFINITY, ONE, 0)
    assert len(g.nodes) == 1 and not g.edges
    with pytest.raises(ValueError):
        bfs_expand(b3, Variant.INFINITY, ONE, -1)


def test_zero_counts(a2):
    g = bfs_expand(a2, Variant.INFINITY, ONE, 3)
    for m, nd in g.nodes.items():
        assert nd.zero_count == nd.word.count(0)
        assert nd.wt.dcoef == -nd.zero_count


@pytest.mark.parametrize("t, depth", [("A2", 4), ("B3", 3)])
def test_order_independence(t, depth):
    datum = build_datum(t)
    base = bfs_expand(datum, Variant.INFINITY, ONE, depth)
    order = list(datum.indices)
    random.Random(7).shuffle(order)
    other = bfs_expand(datum, Variant.INFINITY, ONE, depth, order=order)
    assert set(base.nodes) == set(other.nodes)
    for m, nd in base.nodes.items():
        assert other.nodes[m].zero_count == nd.zero_count
        assert other.nodes[m].wt == nd.wt
    edges = lambda g: {(g.by_id()[a], i, g.by_id()[b]) for a, i, b in g.edges}
    assert edges(base) == edges(other)


def test_highest_weight_ball_is_finite_per_level(a2):
    g = bfs_expand(a2, Variant.HIGHEST, h_lambda((0, 2, 0)), 3, start_weight=WeightVector((0, 2, 0), 0))
    assert g.depth_counts()[0] == 1
    # only f_1 acts on the highest weight vector
    assert g.depth_counts()[1] == 1


def test_json_schema(a1):
    data = bfs_expand(a1, Variant.INFINITY, ONE, 2).to_json()
    assert set(data) == {"type", "variant", "nodes", "edges"}
    assert set(data["nodes"][0]) == {"id", "monomial", "depth", "zero_count", "weight", "word"}
    assert set(data["edges"][0]) == {"from", "label", "to"}
    json.dumps(data)


def test_dot_round_trip(a2):
    g = bfs_expand(a2, Variant.INFINITY, ONE, 3)
    (parsed,) = pydot.graph_from_dot_data(g.to_dot())
    nodes = [nd for nd in parsed.get_nodes() if nd.get_name() not in ("node", "edge", "graph")]
    assert len(nodes) == len(g.nodes)
    assert len(parsed.get_edges()) == len(g.edges)
    labels = {e.get_label().strip('"') for e in parsed.get_edges()}
    assert labels == {"0", "1", "2"}
    first = next(nd for nd in nodes if nd.get_name() == "n0")
    assert "D = 0" in first.get_label()


@pytest.mark.parametrize("t, depth", [("A1", 6), ("A2", 4), ("A3", 4), ("B3", 4), ("B4", 3), ("B5", 3)])
def test_verify_D_small(t, depth):
    r = verify_D(build_datum(t), depth)
    assert r.ok, r.table()
    assert r.max_abs_D == depth


@pytest.mark.parametrize("t, lam", [("A2", (0, 2, 0)), ("A1", (1, 1)), ("B3", (1, 0, 1, 1))])
def test_verify_D_highest_weight(t, lam):
    r = verify_D(build_datum(t), 4, variant=Variant.HIGHEST, lam=lam)
    assert r.ok, r.table()
    with pytest.raises(ValueError):
        verify_D(build_datum(t), 1, variant=Variant.HIGHEST)


@pytest.mark.parametrize("n, depth", [(2, 4), (3, 3)])
def test_verify_wall_iso_small(n, depth):
    r = verify_wall_iso(n, depth)
    assert r.ok, r.table()
    assert r.checks["f_i producing non-reduced"] == 0


def test_check_axioms_counts(b3):
    g = bfs_expand(b3, Variant.INFINITY, ONE, 2)
    r = Report("B3", 2)
    check_axioms(g, r)
    assert r.ok and r.checks["axiom (node, i) pairs"] == 4 * len(g.nodes)


def test_report_serialization():
    r = Report("A1", 3, nodes=4, edges=3)
    assert r.ok
    assert r.to_json()["suite"] == "D"
    assert "ok" in r.table()
    r.mismatches.append({"check": "x"})
    assert not r.ok and "1 MISMATCHES" in r.table()


def test_b4_coefficients():
    a, b = b4_coefficients(21)
    assert a == B4_A and b == B4_B
    assert b4_coefficients(1) == ([1], [0])
    with pytest.raises(ValueError):
        b4_coefficients(0)
