"""The delta coefficient D(M) of the affine weight on M(infinity) and M(lambda).

Every element of M(infinity) factors as a product of A-variables
``prod A_{i,k}^{a_{i,k}}``; the table ``a`` is returned here as a plain dict
``{(i, k): a_{i,k}}`` with zero entries dropped.  The coefficient of delta in
the weight is ``sum_k a_{0,k}`` for the distinguished table of each type:

* A_1^(1): the table is unique; recursion and closed form both given.
* A_n^(1), n >= 2: tables are unique only up to adding a full column
  ``prod_i A_{i,k}`` (which equals 1), so the column-by-column algorithm picks
  the table of a proper reduced Young wall.
* B_n^(1): the table is unique and comes from a triangular recursion;
  a closed form is available for n = 3.

Every table-producing function re-expands its output and raises
``NotInCrystalError`` unless it reproduces the input monomial exactly.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .cartan import CartanDatum, Family, WeightVector
from .errors import InconsistentSystemError, NotInCrystalError, UnsupportedTypeError
from .monomial import Monomial, embed_lambda, expand_a_product, wt_classical

__all__ = [
    "ATable",
    "a1_recursion",
    "a1_closed",
    "d_a1",
    "solve_cyclic_differences",
    "an_algorithm",
    "bn_recursion",
    "b3_closed",
    "d_b3",
    "a_table",
    "D",
    "wt_affine",
    "wt_lambda",
    "table_to_json",
    "table_from_json",
]

ATable = dict  # {(i, k): a_{i,k}}, zero entries absent


def _clean(table: Mapping[tuple[int, int], int]) -> ATable:
    return {key: a for key, a in sorted(table.items(), key=lambda t: (t[0][1], t[0][0])) if a}


def _reconstruct(datum: CartanDatum, m: Monomial, table: ATable) -> ATable:
    if expand_a_product(datum, table) != m:
        raise NotInCrystalError(f"{m} is not in M(infinity) of type {datum}")
    return table


def _require(datum: CartanDatum, family: Family, min_rank: int, max_rank: int | None = None):
    ok = datum.family is family and datum.n >= min_rank
    if max_rank is not None:
        ok = ok and datum.n <= max_rank
    if not ok:
        raise UnsupportedTypeError(f"operation not defined for type {datum}")


# --- type A_1^(1) ---------------------------------------------------------


def a1_recursion(datum: CartanDatum, m: Monomial) -> ATable:
    _require(datum, Family.A, 1, 1)
    y = m.get
    top = m.max_level() + 1
    a0: list[int] = []
    a1: list[int] = []
    for k in range(top + 1):
        if k == 0:
            a1.append(y((1, 0)))
            a0.append(y((0, 0)) + 2 * a1[0])
        else:
            a1.append(y((1, k)) + 2 * a0[k - 1] - a1[k - 1])
            a0.append(y((0, k)) + 2 * a1[k] - a0[k - 1])
    table = {(0, k): v for k, v in enumerate(a0)}
    table.update({(1, k): v for k, v in enumerate(a1)})
    return _reconstruct(datum, m, _clean(table))


def a1_closed(m: Monomial, i: int, k: int) -> int:
    y = m.get
    if i == 0:
        return sum((2 * j + 1) * y((0, k - j)) + (2 * j + 2) * y((1, k - j)) for j in range(k + 1))
    if i == 1:
        return (2 * k + 1) * y((1, 0)) + sum(
            (2 * j + 1) * y((1, k - j)) + (2 * j + 2) * y((0, k - j - 1)) for j in range(k)
        )
    raise IndexError(f"index {i} not in I for A1")


def d_a1(m: Monomial) -> int:
    y = m.get
    return sum(
        (2 * j + 1) * y((0, k - j)) + (2 * j + 2) * y((1, k - j))
        for k in range(m.max_level() + 1)
        for j in range(k + 1)
    )


# --- type A_n^(1), n >= 2 ---------------------------------------------------


def solve_cyclic_differences(
    datum: CartanDatum, c: Sequence[int], *, top_zero: bool = False
) -> list[int]:
    """Particular solution of ``a_i - a_{i-1} = c_i`` (indices mod n+1).

    The solution has ``a_0 = 0``; every other solution is a constant shift of
    it.  With ``top_zero`` the shift making ``max(a) == 0`` is applied.
    """
    if len(c) != datum.size:
        raise ValueError(f"need {datum.size} differences, got {len(c)}")
    if sum(c):
        raise InconsistentSystemError(f"cyclic differences {list(c)} do not sum to zero")
    a = [0]
    for ci in c[1:]:
        a.append(a[-1] + ci)
    if top_zero:
        t = max(a)
        a = [x - t for x in a]
    return a


def _column_differences(datum: CartanDatum, m: Monomial, k: int) -> list[int]:
    size = datum.size
    return [sum(m.get(((i + l) % size, k - l)) for l in range(k + 1)) for i in datum.indices]


def an_algorithm(datum: CartanDatum, m: Monomial) -> ATable:
    _require(datum, Family.A, 2)
    if m.is_one:
        return {}
    size = datum.size
    # top column m_top: largest k with some y_{i,k+1} != 0
    m_top = max(m.max_level() - 1, 0)
    cols: dict[int, list[int]] = {}
    for k in range(m_top, -1, -1):
        try:
            part = solve_cyclic_differences(datum, _column_differences(datum, m, k))
        except InconsistentSystemError as exc:
            raise NotInCrystalError(f"{m} is not in M(infinity) of type {datum}") from exc
        if k == m_top:
            t = -max(part)
        else:
            above = cols[k + 1]
            t = min(min(0, above[(i - 1) % size]) - part[i] for i in datum.indices)
        cols[k] = [p + t for p in part]
    table = {(i, k): col[i] for k, col in cols.items() for i in datum.indices}
    return _reconstruct(datum, m, _clean(table))


# --- type B_n^(1) ----------------------------------------------------------


def _bn_step(n: int, y: Callable[[int, int], int], prev: Sequence[int], k: int) -> list[int]:
    """Column k of the triangular recursion; ``prev`` is column k-1 (zeros for k=0)."""
    a = [0] * (n + 1)
    a[0] = y(0, k) + prev[2] - prev[0]
    a[1] = y(1, k) + prev[2] - prev[1]
    a[2] = y(2, k) + a[0] + a[1] + prev[3] - prev[2]
    for i in range(3, n):
        a[i] = y(i, k) + a[i - 1] + prev[i + 1] - prev[i]
    a[n] = y(n, k) + 2 * a[n - 1] - prev[n]
    return a


def bn_columns(n: int, y: Callable[[int, int], int], count: int) -> list[list[int]]:
    """First ``count`` columns of the B_n recursion for an arbitrary exponent function."""
    prev = [0] * (n + 1)
    out = []
    for k in range(count):
        prev = _bn_step(n, y, prev, k)
        out.append(prev)
    return out


def bn_recursion(datum: CartanDatum, m: Monomial) -> ATable:
    _require(datum, Family.B, 3)
    n = datum.n
    top = m.max_level()
    y = lambda i, k: m.get((i, k))
    prev = [0] * (n + 1)
    table: dict[tuple[int, int], int] = {}
    k = 0
    while True:
        col = _bn_step(n, y, prev, k)
        if k > top and not any(col):
            break
        if k > top + n + 1:
            raise NotInCrystalError(f"{m}: B{n} recursion does not terminate")
        table.update({(i, k): v for i, v in enumerate(col)})
        prev = col
        k += 1
    return _reconstruct(datum, m, _clean(table))


def _fl(x: int) -> int:
    return x // 2


def b3_closed(m: Monomial, i: int, mm: int) -> int:
    """Closed-form a_{i,mm} in type B_3^(1); ``//`` floors toward -infinity."""
    y = m.get
    total = 0
    for k in range(mm + 1):
        y0, y1, y2, y3 = (y((j, mm - k)) for j in range(4))
        if i == 0:
            total += (2 * _fl(k) - _fl(k - 1)) * y0 + _fl(k + 1) * y1 + k * y2 + _fl(k) * y3
        elif i == 1:
            total += _fl(k + 1) * y0 + (2 * _fl(k) - _fl(k - 1)) * y1 + k * y2 + _fl(k) * y3
        elif i == 2:
            total += (k + 1) * y0 + (k + 1) * y1 + (2 * k + 1) * y2 + k * y3
        elif i == 3:
            total += (
                2 * _fl(k + 2) * y0
                + 2 * _fl(k + 2) * y1
                + (2 * k + 2) * y2
                + (2 * _fl(k) + 1) * y3
            )
        else:
            raise IndexError(f"index {i} not in I for B3")
    return total


def d_b3(m: Monomial) -> int:
    return sum(b3_closed(m, 0, mm) for mm in range(m.max_level() + 1))


# --- dispatch ----------------------------------------------------------------


def a_table(datum: CartanDatum, m: Monomial) -> ATable:
    if datum.family is Family.A:
        return a1_recursion(datum, m) if datum.n == 1 else an_algorithm(datum, m)
    return bn_recursion(datum, m)


def D(datum: CartanDatum, m: Monomial) -> int:
    if datum.family is Family.A and datum.n == 1:
        a1_recursion(datum, m)  # membership check
        return d_a1(m)
    table = a_table(datum, m)
    return sum(a for (i, _), a in table.items() if i == 0)


def wt_affine(datum: CartanDatum, m: Monomial) -> WeightVector:
    return WeightVector(wt_classical(m, datum.size).lam, D(datum, m))


def wt_lambda(datum: CartanDatum, m: Monomial, p: Sequence[int]) -> WeightVector:
    if len(p) != datum.size:
        raise ValueError(f"dominant weight needs {datum.size} coefficients")
    return WeightVector(wt_classical(m, datum.size).lam, D(datum, embed_lambda(m, p)))


def table_to_json(table: Mapping[tuple[int, int], int]) -> list[dict]:
    return [{"i": i, "k": k, "a": a} for (i, k), a in _clean(table).items()]


def table_from_json(rows: Sequence[Mapping]) -> ATable:
    acc: dict[tuple[int, int], int] = {}
    for r in rows:
        key = (int(r["i"]), int(r["k"]))
        acc[key] = acc.get(key, 0) + int(r["a"])
    return _clean(acc)
