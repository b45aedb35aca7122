"""Brute-force verification by breadth-first expansion of crystal graphs.

Each node remembers the word that first reached it and the number of
0-arrows on that path.  Weights are tracked along paths (subtracting simple
roots, delta included), so every later visit through another path re-derives
both statistics and must agree with what is stored.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .cartan import CartanDatum, Family, WeightVector, simple_root
from .errors import NotInCrystalError, PathInconsistencyError
from . import delta as dl
from . import monomial as mn
from . import youngwall as yw
from .monomial import Monomial, Variant

__all__ = [
    "Node",
    "CrystalGraph",
    "Report",
    "bfs_expand",
    "check_axioms",
    "verify_D",
    "verify_wall_iso",
    "b4_coefficients",
]


@dataclass
class Node:
    id: int
    depth: int
    zero_count: int
    wt: WeightVector
    word: tuple[int, ...]


@dataclass
class CrystalGraph:
    datum: CartanDatum
    variant: Variant
    nodes: dict[Monomial, Node] = field(default_factory=dict)
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def by_id(self) -> list[Monomial]:
        out: list[Optional[Monomial]] = [None] * len(self.nodes)
        for m, node in self.nodes.items():
            out[node.id] = m
        return out  # type: ignore[return-value]

    def depth_counts(self) -> list[int]:
        top = max((nd.depth for nd in self.nodes.values()), default=0)
        counts = [0] * (top + 1)
        for nd in self.nodes.values():
            counts[nd.depth] += 1
        return counts

    def to_json(self, with_delta: bool = True) -> dict:
        ms = self.by_id()
        nodes = []
        for m in ms:
            nd = self.nodes[m]
            nodes.append(
                {
                    "id": nd.id,
                    "monomial": mn.format_monomial(m),
                    "depth": nd.depth,
                    "zero_count": nd.zero_count,
                    "weight": nd.wt.to_dict(),
                    "word": list(nd.word),
                }
            )
        return {
            "type": str(self.datum.type),
            "variant": self.variant.value,
            "nodes": nodes,
            "edges": [{"from": a, "label": i, "to": b} for a, i, b in self.edges],
        }

    def to_dot(self) -> str:
        lines = [f'digraph "{self.datum.type}" {{', "  node [shape=box];"]
        for m in self.by_id():
            nd = self.nodes[m]
            label = f"{mn.format_monomial(m)}\\nwt: {nd.wt}\\nD = {nd.wt.dcoef}"
            lines.append(f'  n{nd.id} [label="{label}"];')
        for a, i, b in self.edges:
            lines.append(f'  n{a} -> n{b} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def bfs_expand(
    datum: CartanDatum,
    variant: Variant = Variant.INFINITY,
    start: Monomial = mn.ONE,
    depth: int = 3,
    *,
    start_weight: Optional[WeightVector] = None,
    order: Optional[Sequence[int]] = None,
) -> CrystalGraph:
    """All elements reachable from ``start`` by at most ``depth`` lowering operators.

    ``order`` permutes the operator indices tried at every node; the result
    must not depend on it.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if start_weight is None:
        start_weight = mn.wt_classical(start, datum.size)
    order = tuple(order) if order is not None else tuple(datum.indices)
    roots = [simple_root(datum, i) for i in datum.indices]
    graph = CrystalGraph(datum, variant)
    graph.nodes[start] = Node(0, 0, 0, start_weight, ())
    frontier = [start]
    for level in range(1, depth + 1):
        nxt = []
        for m in frontier:
            src = graph.nodes[m]
            for i in order:
                m2 = mn.apply_f(datum, variant, m, i)
                if m2 is None:
                    continue
                zc = src.zero_count + (i == 0)
                wt = src.wt - roots[i]
                word = (i,) + src.word
                known = graph.nodes.get(m2)
                if known is None:
                    known = Node(len(graph.nodes), level, zc, wt, word)
                    graph.nodes[m2] = known
                    nxt.append(m2)
                elif known.zero_count != zc or known.wt != wt:
                    raise PathInconsistencyError(
                        f"{m2} reached by {known.word} (zeros {known.zero_count}, wt {known.wt}) "
                        f"and by {word} (zeros {zc}, wt {wt})"
                    )
                graph.edges.append((src.id, i, known.id))
        frontier = nxt
    return graph


@dataclass
class Report:
    type: str
    depth: int
    nodes: int = 0
    edges: int = 0
    mismatches: list[dict] = field(default_factory=list)
    max_abs_D: int = 0
    elapsed: float = 0.0
    checks: dict[str, int] = field(default_factory=dict)
    name: str = "D"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "type": self.type,
            "depth": self.depth,
            "nodes": self.nodes,
            "edges": self.edges,
            "mismatches": self.mismatches,
            "max_abs_D": self.max_abs_D,
            "elapsed": round(self.elapsed, 3),
            "checks": self.checks,
        }

    def table(self) -> str:
        status = "ok" if self.ok else f"{len(self.mismatches)} MISMATCHES"
        lines = [
            f"{self.name:<10} {self.type:<4} depth {self.depth:<3} nodes {self.nodes:<7} "
            f"edges {self.edges:<7} max|D| {self.max_abs_D:<4} {self.elapsed:7.2f}s  {status}"
        ]
        for key, val in sorted(self.checks.items()):
            lines.append(f"    {key:<28} {val}")
        for mm in self.mismatches[:10]:
            lines.append("    ! " + json.dumps(mm))
        return "\n".join(lines)


def _mismatch(report: Report, check: str, word, m, expected, got):
    report.mismatches.append(
        {
            "check": check,
            "word": list(word),
            "monomial": str(m),
            "expected": expected if isinstance(expected, (int, str, list)) else str(expected),
            "got": got if isinstance(got, (int, str, list)) else str(got),
        }
    )


def check_axioms(graph: CrystalGraph, report: Report) -> None:
    """Crystal axioms on every node, using the path-derived weight (delta included)."""
    datum, variant = graph.datum, graph.variant
    roots = [simple_root(datum, i) for i in datum.indices]
    count = 0
    for m, nd in graph.nodes.items():
        for i in datum.indices:
            ph = mn.phi(m, i, variant)
            ep = mn.eps(m, i, variant)
            if ph != ep + nd.wt.pair(i):
                _mismatch(report, f"phi=eps+<h_{i},wt>", nd.word, m, ep + nd.wt.pair(i), ph)
            f = mn.apply_f(datum, variant, m, i)
            if f is not None:
                if mn.apply_e(datum, variant, f, i) != m:
                    _mismatch(report, f"e_{i} f_{i} = id", nd.word, m, str(m), str(mn.apply_e(datum, variant, f, i)))
                if mn.eps(f, i, variant) != ep + 1 or mn.phi(f, i, variant) != ph - 1:
                    _mismatch(report, f"eps/phi shift under f_{i}", nd.word, m, ep + 1, mn.eps(f, i, variant))
                cl = mn.wt_classical(f, datum.size).lam
                want = tuple(a - b for a, b in zip(mn.wt_classical(m, datum.size).lam, roots[i].lam))
                if cl != want:
                    _mismatch(report, f"classical wt under f_{i}", nd.word, m, list(want), list(cl))
            e = mn.apply_e(datum, variant, m, i)
            if e is not None and mn.apply_f(datum, variant, e, i) != m:
                _mismatch(report, f"f_{i} e_{i} = id", nd.word, m, str(m), str(mn.apply_f(datum, variant, e, i)))
            count += 1
    report.checks["axiom (node, i) pairs"] = report.checks.get("axiom (node, i) pairs", 0) + count


def _check_an_shape(datum: CartanDatum, table: dl.ATable) -> Optional[str]:
    if any(a > 0 for a in table.values()):
        return "positive entry"
    if not table:
        return None
    top = max(k for _, k in table)
    col = lambda k: [table.get((i, k), 0) for i in datum.indices]
    if 0 not in col(top):
        return f"top column {top} has no zero"
    size = datum.size
    for k in range(top):
        lo, hi = col(k), col(k + 1)
        if any(lo[i] > hi[(i - 1) % size] for i in datum.indices):
            return f"column {k} exceeds column {k + 1}"
        if not any(lo[i] == hi[(i - 1) % size] for i in datum.indices):
            return f"column {k} has no contact with column {k + 1}"
    return None


def verify_D(
    datum: CartanDatum,
    depth: int,
    *,
    variant: Variant = Variant.INFINITY,
    lam: Optional[Sequence[int]] = None,
    axioms: bool = True,
) -> Report:
    """Check D(M) = -(number of 0-arrows) on every node of a BFS ball.

    Type-specific cross-checks ride along: A1 recursion vs closed forms, A_n
    output shape, B3 recursion vs closed forms.  With ``variant=HIGHEST`` the
    ball grows from H_lambda and the delta part comes from the embedding into
    M(infinity).
    """
    t0 = time.perf_counter()
    report = Report(str(datum.type), depth)
    if variant is Variant.HIGHEST:
        if lam is None:
            raise ValueError("highest weight verification needs lam")
        start = mn.h_lambda(lam)
        graph = bfs_expand(
            datum, variant, start, depth, start_weight=WeightVector(tuple(lam), 0)
        )
        report.name = f"D-lambda{tuple(lam)}"
    else:
        graph = bfs_expand(datum, variant, mn.ONE, depth)
    report.nodes, report.edges = len(graph.nodes), len(graph.edges)
    is_a1 = datum.family is Family.A and datum.n == 1
    is_b3 = datum.family is Family.B and datum.n == 3
    for m, nd in graph.nodes.items():
        target = m if variant is Variant.INFINITY else mn.embed_lambda(m, lam)
        try:
            table = dl.a_table(datum, target)
            d = dl.D(datum, target)
        except NotInCrystalError as exc:
            _mismatch(report, "membership", nd.word, m, "member", str(exc))
            continue
        if d != -nd.zero_count:
            _mismatch(report, "D = -#0-arrows", nd.word, m, -nd.zero_count, d)
        full = (
            dl.wt_affine(datum, m)
            if variant is Variant.INFINITY
            else dl.wt_lambda(datum, m, lam)
        )
        if full != nd.wt:
            _mismatch(report, "affine weight", nd.word, m, str(nd.wt), str(full))
        report.max_abs_D = max(report.max_abs_D, abs(d))
        top = target.max_level() + 1
        if is_a1:
            for i in (0, 1):
                for k in range(top + 2):
                    if dl.a1_closed(target, i, k) != table.get((i, k), 0):
                        _mismatch(report, f"A1 closed a[{i},{k}]", nd.word, m, table.get((i, k), 0), dl.a1_closed(target, i, k))
            if d != sum(a for (i, _), a in table.items() if i == 0):
                _mismatch(report, "A1 D = sum a0 (recursion)", nd.word, m, d, table)
        elif datum.family is Family.A:
            problem = _check_an_shape(datum, table)
            if problem:
                _mismatch(report, "A_n table shape", nd.word, m, "reduced proper", problem)
        if is_b3:
            for i in range(4):
                for k in range(top + 2):
                    if dl.b3_closed(target, i, k) != table.get((i, k), 0):
                        _mismatch(report, f"B3 closed a[{i},{k}]", nd.word, m, table.get((i, k), 0), dl.b3_closed(target, i, k))
            if dl.d_b3(target) != d:
                _mismatch(report, "B3 closed D", nd.word, m, d, dl.d_b3(target))
    report.checks["D evaluations"] = report.nodes
    if axioms:
        check_axioms(graph, report)
    report.elapsed = time.perf_counter() - t0
    return report


def verify_wall_iso(n: int, depth: int) -> Report:
    """Paired BFS of reduced proper walls and monomials in type A_n^(1).

    Checks, for every wall W paired with monomial M and every i: psi(W) = M,
    f_i on both sides stays paired (and the pairing is a bijection), walls stay
    proper and reduced, e_i f_i W = W, epsilon agrees, and
    wall_weight(W) = wt_affine(psi(W)).
    """
    from .cartan import AffineType, build_datum

    t0 = time.perf_counter()
    datum = build_datum(AffineType(Family.A, n))
    report = Report(f"A{n}", depth, name="walls")
    empty = yw.YoungWall.empty(n)
    w2m: dict[yw.YoungWall, Monomial] = {empty: mn.ONE}
    m2w: dict[Monomial, yw.YoungWall] = {mn.ONE: empty}
    words = {empty: ()}
    frontier = [empty]
    nonreduced = 0
    for _ in range(depth):
        nxt = []
        for w in frontier:
            m = w2m[w]
            for i in datum.indices:
                w_raw = yw.apply_f(w, i)
                if not yw.is_reduced(w_raw):
                    nonreduced += 1
                w2 = yw.reduce(w_raw)
                m2 = mn.apply_f(datum, Variant.INFINITY, m, i)
                word = (i,) + words[w]
                if yw.apply_e(w_raw, i) != w:
                    _mismatch(report, f"e_{i} f_{i} W = W", word, m2, str(w), str(yw.apply_e(w_raw, i)))
                report.edges += 1
                if w2 in w2m:
                    if w2m[w2] != m2:
                        _mismatch(report, "pairing consistency", word, m2, str(w2m[w2]), str(m2))
                    continue
                if m2 in m2w:
                    _mismatch(report, "bijectivity", word, m2, str(m2w[m2]), str(w2))
                    continue
                w2m[w2], m2w[m2], words[w2] = m2, w2, word
                nxt.append(w2)
        frontier = nxt
    for w, m in w2m.items():
        word = words[w]
        p = yw.psi(w)
        if p != m:
            _mismatch(report, "psi intertwines f_i", word, m, str(m), f"psi({w}) = {p}")
        try:
            wt_m = dl.wt_affine(datum, m)
        except NotInCrystalError as exc:
            _mismatch(report, "membership", word, m, "member", str(exc))
            continue
        wt_w = yw.wall_weight(w)
        if wt_w != wt_m:
            _mismatch(report, "wall_weight = wt of paired M", word, m, str(wt_m), str(wt_w))
        try:
            wt_p = dl.wt_affine(datum, p)
        except NotInCrystalError as exc:
            _mismatch(report, "wall_weight = wt_affine(psi W)", word, m, str(wt_w), str(exc))
        else:
            if wt_p != wt_w:
                _mismatch(report, "wall_weight = wt_affine(psi W)", word, m, str(wt_w), str(wt_p))
        if not (yw.is_proper(w) and yw.is_reduced(w)):
            _mismatch(report, "proper and reduced", word, m, "proper reduced", str(w))
        for i in datum.indices:
            if yw.eps(w, i) != mn.eps(m, i):
                _mismatch(report, f"eps_{i}", word, m, mn.eps(m, i), yw.eps(w, i))
        report.max_abs_D = max(report.max_abs_D, abs(wt_w.dcoef))
    report.nodes = len(w2m)
    report.checks["f_i producing non-reduced"] = nonreduced
    report.elapsed = time.perf_counter() - t0
    return report


def b4_coefficients(count: int) -> tuple[list[int], list[int]]:
    """Coefficients of y_{0,m-k} and y_{1,m-k} in a_{0,m} for type B_4^(1), k < count."""
    if count < 1:
        raise ValueError("count must be positive")
    a = [1, 0, 0, 0, 0]
    b = [0, 1, 0, 0, 0]
    c = [1, 1, 1, 0, 0]
    d = [1, 1, 1, 1, 0]
    e = [2, 2, 2, 2, 1]
    seq_a, seq_b = [a[0]], [a[1]]
    for _ in range(count - 1):
        a = [x - y for x, y in zip(c, a)]
        b = [x - y for x, y in zip(c, b)]
        c = [p + q - r + s for p, q, r, s in zip(a, b, c, d)]
        d = [p + q - r for p, q, r in zip(c, e, d)]
        e = [2 * p - q for p, q in zip(d, e)]
        seq_a.append(a[0])
        seq_b.append(a[1])
    return seq_a, seq_b
