"""Generalized Young walls of type A_n^(1).

Rows are indexed from the bottom starting at 0 and columns from the right
starting at 1.  The box in row r, column c has color ``(r - c + 1) mod (n+1)``:
the bottom row reads 0, n, n-1, ... from right to left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .cartan import Family, WeightVector, build_datum, AffineType, root_combination
from .errors import ImproperWallError, NoRemovableDeltaError, NotInCrystalError, ParseError
from . import monomial as mn
from .monomial import Monomial, expand_a_product

__all__ = [
    "YoungWall",
    "is_proper",
    "column_counts",
    "has_removable_delta",
    "remove_delta",
    "reduce",
    "is_reduced",
    "signature",
    "apply_f",
    "apply_e",
    "eps",
    "wall_weight",
    "psi",
    "parse_wall",
    "render",
    "wall_of",
]


@dataclass(frozen=True)
class YoungWall:
    rows: tuple[int, ...]
    n: int

    def __post_init__(self):
        rows = [int(r) for r in self.rows]
        if any(r < 0 for r in rows):
            raise ValueError("row lengths must be nonnegative")
        while rows and rows[-1] == 0:
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))
        if self.n < 1:
            raise ValueError("Young walls need n >= 1")

    @classmethod
    def empty(cls, n: int) -> "YoungWall":
        return cls((), n)

    def length(self, r: int) -> int:
        return self.rows[r] if r < len(self.rows) else 0

    def color(self, r: int, c: int) -> int:
        return (r - c + 1) % (self.n + 1)

    def with_row(self, r: int, length: int) -> "YoungWall":
        rows = list(self.rows) + [0] * (r + 1 - len(self.rows))
        rows[r] = length
        return YoungWall(tuple(rows), self.n)

    def boxes(self):
        for r, length in enumerate(self.rows):
            for c in range(1, length + 1):
                yield r, c, self.color(r, c)

    def __str__(self):
        return ",".join(map(str, self.rows)) or "0"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rows": list(self.rows)})


def is_proper(w: YoungWall) -> bool:
    period = w.n + 1
    return all(
        w.rows[p] <= w.rows[p - period] for p in range(period, len(w.rows))
    )


def column_counts(w: YoungWall) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for _, c, color in w.boxes():
        counts[(color, c)] = counts.get((color, c), 0) + 1
    return counts


def has_removable_delta(w: YoungWall, k: int) -> bool:
    if k < 1:
        raise ValueError("columns are numbered from 1")
    a = column_counts(w)
    size = w.n + 1
    return all(a.get(((i - 1) % size, k + 1), 0) < a.get((i, k), 0) for i in range(size))


def remove_delta(w: YoungWall, k: int) -> YoungWall:
    """Remove one box of each color from column k.

    For each color the topmost row ending in column k is shortened, which
    keeps the wall proper.
    """
    if not has_removable_delta(w, k):
        raise NoRemovableDeltaError(f"column {k} of wall {w} has no removable delta")
    chosen: dict[int, int] = {}
    for r, length in enumerate(w.rows):
        if length == k:
            chosen[w.color(r, k)] = r
    out = w
    for r in chosen.values():
        out = out.with_row(r, k - 1)
    return out


def _removable_column(w: YoungWall) -> Optional[int]:
    top = max(w.rows, default=0)
    for k in range(1, top + 1):
        if has_removable_delta(w, k):
            return k
    return None


def is_reduced(w: YoungWall) -> bool:
    return _removable_column(w) is None


def reduce(w: YoungWall) -> YoungWall:
    while (k := _removable_column(w)) is not None:
        w = remove_delta(w, k)
    return w


def signature(w: YoungWall, i: int) -> list[tuple[str, int]]:
    """Reduced i-signature as ``[(sign, row), ...]``: all '-' entries, then all '+'.

    Entities are listed left to right (largest column first), ties bottom to
    top; adjacent ``(+, -)`` pairs are cancelled.
    """
    entities = []
    for r in range(len(w.rows) + w.n + 1):
        length = w.length(r)
        if length and w.color(r, length) == i:
            entities.append((-length, r, "-"))
        if w.color(r, length + 1) == i:
            entities.append((-(length + 1), r, "+"))
    entities.sort()
    stack: list[tuple[str, int]] = []
    for _, r, sign in entities:
        if sign == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((sign, r))
    return stack


def apply_f(w: YoungWall, i: int) -> YoungWall:
    sig = signature(w, i)
    r = next(r for sign, r in sig if sign == "+")
    out = w.with_row(r, w.length(r) + 1)
    if not is_proper(out):
        raise ImproperWallError(f"f_{i} of proper wall {w} gave improper wall {out}")
    return out


def apply_e(w: YoungWall, i: int) -> Optional[YoungWall]:
    minus = [r for sign, r in signature(w, i) if sign == "-"]
    if not minus:
        return None
    r = minus[-1]
    return w.with_row(r, w.length(r) - 1)


def eps(w: YoungWall, i: int) -> int:
    return sum(1 for sign, _ in signature(w, i) if sign == "-")


def _datum(n: int):
    return build_datum(AffineType(Family.A, n))


def wall_weight(w: YoungWall) -> WeightVector:
    k = [0] * (w.n + 1)
    for _, _, color in w.boxes():
        k[color] += 1
    return -root_combination(_datum(w.n), k)


def psi(w: YoungWall) -> Monomial:
    table = {(i, c - 1): -a for (i, c), a in column_counts(w).items()}
    return expand_a_product(_datum(w.n), table)


def parse_wall(text: str, n: int) -> YoungWall:
    s = text.strip()
    if not s:
        return YoungWall.empty(n)
    try:
        rows = tuple(int(x) for x in s.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse wall rows {text!r}") from exc
    return YoungWall(rows, n)


def render(w: YoungWall) -> str:
    """ASCII picture with color digits, top row first, right-aligned."""
    if not w.rows:
        return "(empty wall)"
    width = max(w.rows)
    lines = []
    for r in range(len(w.rows) - 1, -1, -1):
        cells = [
            str(w.color(r, c)) if c <= w.rows[r] else "."
            for c in range(width, 0, -1)
        ]
        lines.append(" ".join(cells) + " |")
    lines.append("-" * (2 * width + 1))
    return "\n".join(lines)


def wall_of(m: Monomial, n: int, max_steps: int = 100_000) -> YoungWall:
    """Reduced proper wall corresponding to an element of M(infinity).

    The monomial is raised to 1 with e_i operators; replaying the lowering
    word on the empty wall yields the wall in the same crystal position.
    """
    datum = _datum(n)
    word: list[int] = []
    cur = m
    while not cur.is_one:
        i = next((i for i in datum.indices if mn.eps(cur, i) > 0), None)
        if i is None or len(word) >= max_steps:
            raise NotInCrystalError(f"{m} is not in M(infinity) of type A{n}")
        cur = mn.apply_e(datum, mn.Variant.INFINITY, cur, i)
        word.append(i)
    w = YoungWall.empty(n)
    for i in reversed(word):
        w = reduce(apply_f(w, i))
    return w
