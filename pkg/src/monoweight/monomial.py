"""Modified Nakajima monomials and their crystal structure.

A monomial is a finitely supported map ``(i, k) -> y_{i,k}`` standing for
``prod Y_{i,k}^{y_{i,k}}``.  Two crystal structures are provided:

``Variant.INFINITY``
    the modified structure whose component through the empty monomial is
    M(infinity) (lowering operators never vanish);
``Variant.HIGHEST``
    Kashiwara's structure used for the highest weight crystals M(lambda).

Words are applied right to left: ``apply_word(d, v, M, (b1, ..., bl))`` is
``f_{b1} ... f_{bl} M``.
"""

from __future__ import annotations

import re
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .cartan import CartanDatum, WeightVector
from .errors import ParseError

__all__ = [
    "Monomial",
    "Variant",
    "ONE",
    "wt_classical",
    "phi",
    "eps",
    "kf",
    "ke",
    "a_variable",
    "mul",
    "inv",
    "apply_f",
    "apply_e",
    "apply_word",
    "h_lambda",
    "embed_lambda",
    "expand_a_product",
    "parse_monomial",
    "format_monomial",
]


class Variant(str, Enum):
    INFINITY = "infinity"
    HIGHEST = "lambda"


class Monomial(Mapping):
    """Immutable sparse exponent map; zero exponents are never stored."""

    __slots__ = ("_items", "_map", "_hash")

    def __init__(self, exps: Mapping[tuple[int, int], int] | Iterable = ()):
        acc: dict[tuple[int, int], int] = {}
        pairs = exps.items() if isinstance(exps, Mapping) else exps
        for (i, k), e in pairs:
            if i < 0 or k < 0:
                raise ValueError(f"Y({i},{k}) outside the index range")
            acc[(i, k)] = acc.get((i, k), 0) + int(e)
        items = tuple(sorted((key, e) for key, e in acc.items() if e != 0))
        self._items = items
        self._map = dict(items)
        self._hash = hash(items)

    def __getitem__(self, key):
        return self._map[key]

    def get(self, key, default=0):
        return self._map.get(key, default)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._map)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Monomial):
            return self._items == other._items
        return NotImplemented

    def __lt__(self, other: "Monomial"):
        return self._items < other._items

    def __mul__(self, other: "Monomial") -> "Monomial":
        return mul(self, other)

    def __pow__(self, p: int) -> "Monomial":
        return Monomial({key: p * e for key, e in self._items})

    def __invert__(self) -> "Monomial":
        return inv(self)

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self):
        return format_monomial(self)

    @property
    def items_sorted(self) -> tuple:
        return self._items

    @property
    def is_one(self) -> bool:
        return not self._items

    def row(self, i: int) -> list[int]:
        """Exponents y_{i,0..K_i}; ``[0]`` for an empty row."""
        ks = [k for (j, k) in self._map if j == i]
        top = max(ks) if ks else 0
        return [self._map.get((i, k), 0) for k in range(top + 1)]

    def max_level(self) -> int:
        """Largest k with some y_{i,k} != 0, or -1 for the empty monomial."""
        return max((k for (_, k) in self._map), default=-1)

    def max_index(self) -> int:
        return max((i for (i, _) in self._map), default=-1)


ONE = Monomial()


def mul(m1: Monomial, m2: Monomial) -> Monomial:
    acc = dict(m1.items_sorted)
    for key, e in m2.items_sorted:
        acc[key] = acc.get(key, 0) + e
    return Monomial(acc)


def inv(m: Monomial) -> Monomial:
    return Monomial({key: -e for key, e in m.items_sorted})


def wt_classical(m: Monomial, size: int) -> WeightVector:
    lam = [0] * size
    for (i, _), e in m.items_sorted:
        lam[i] += e
    return WeightVector(tuple(lam), 0)


def _prefix_sums(m: Monomial, i: int) -> list[int]:
    out, s = [], 0
    for e in m.row(i):
        s += e
        out.append(s)
    return out


def phi(m: Monomial, i: int, variant: Variant = Variant.INFINITY) -> int:
    sums = _prefix_sums(m, i)
    if variant is Variant.HIGHEST:
        # the empty prefix (k = -1) takes part for highest weight crystals
        return max(0, max(sums))
    return max(sums)


def eps(m: Monomial, i: int, variant: Variant = Variant.INFINITY) -> int:
    if variant is Variant.HIGHEST:
        row = m.row(i)
        best, tail = 0, 0
        for e in reversed(row):
            tail += e
            best = max(best, -tail)
        return best
    return phi(m, i) - sum(m.row(i))


def kf(m: Monomial, i: int, variant: Variant = Variant.INFINITY) -> int:
    sums = _prefix_sums(m, i)
    target = phi(m, i, variant)
    return next(k for k, s in enumerate(sums) if s == target)


def ke(m: Monomial, i: int, variant: Variant = Variant.INFINITY) -> int:
    sums = _prefix_sums(m, i)
    target = phi(m, i, variant)
    hits = [k for k, s in enumerate(sums) if s == target]
    if not hits:
        raise ValueError(f"raising operator e_{i} would need Y at level -1")
    return hits[-1]


@lru_cache(maxsize=None)
def a_variable(datum: CartanDatum, i: int, k: int) -> Monomial:
    if not 0 <= i < datum.size:
        raise IndexError(f"index {i} not in I")
    exps = {(i, k): 1}
    exps[(i, k + 1)] = exps.get((i, k + 1), 0) + 1
    for j in datum.indices:
        if j == i or datum.matrix[j][i] == 0:
            continue
        key = (j, k + datum.o(j, i))
        exps[key] = exps.get(key, 0) + datum.matrix[j][i]
    return Monomial(exps)


def apply_f(
    datum: CartanDatum, variant: Variant, m: Monomial, i: int
) -> Optional[Monomial]:
    """Lowering operator; ``None`` plays the role of the crystal zero."""
    if variant is Variant.HIGHEST and phi(m, i, variant) <= 0:
        return None
    return mul(inv(a_variable(datum, i, kf(m, i, variant))), m)


def apply_e(
    datum: CartanDatum, variant: Variant, m: Monomial, i: int
) -> Optional[Monomial]:
    if eps(m, i, variant) == 0:
        return None
    return mul(a_variable(datum, i, ke(m, i, variant)), m)


def apply_word(
    datum: CartanDatum,
    variant: Variant,
    start: Monomial,
    word: Sequence[int],
) -> Optional[Monomial]:
    m: Optional[Monomial] = start
    for i in reversed(tuple(word)):
        if m is None:
            return None
        m = apply_f(datum, variant, m, i)
    return m


def h_lambda(p: Sequence[int]) -> Monomial:
    """Highest weight monomial prod Y_{i,0}^{p_i} of a dominant weight."""
    if any(x < 0 for x in p):
        raise ValueError("dominant weight needs nonnegative coefficients")
    return Monomial({(i, 0): x for i, x in enumerate(p)})


def embed_lambda(m: Monomial, p: Sequence[int]) -> Monomial:
    return mul(inv(h_lambda(p)), m)


def expand_a_product(datum: CartanDatum, table: Mapping[tuple[int, int], int]) -> Monomial:
    acc: dict[tuple[int, int], int] = {}
    for (i, k), a in table.items():
        if not a:
            continue
        for key, e in a_variable(datum, i, k).items_sorted:
            acc[key] = acc.get(key, 0) + a * e
    return Monomial(acc)


_TERM_RE = re.compile(r"Y\(\s*(\d+)\s*,\s*(\d+)\s*\)(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?")


def parse_monomial(text: str) -> Monomial:
    """Parse ``"1"`` or space separated terms ``Y(i,k)^e``."""
    s = text.strip()
    if s in ("", "1"):
        return ONE
    exps: dict[tuple[int, int], int] = {}
    pos = 0
    for m in _TERM_RE.finditer(s):
        if s[pos : m.start()].strip():
            raise ParseError(f"unexpected text {s[pos:m.start()]!r} in monomial")
        key = (int(m.group(1)), int(m.group(2)))
        exps[key] = exps.get(key, 0) + (int(m.group(3)) if m.group(3) else 1)
        pos = m.end()
    if s[pos:].strip() or pos == 0:
        raise ParseError(f"cannot parse monomial {text!r}")
    return Monomial(exps)


def format_monomial(m: Monomial) -> str:
    if m.is_one:
        return "1"
    parts = []
    for (i, k), e in m.items_sorted:
        parts.append(f"Y({i},{k})" if e == 1 else f"Y({i},{k})^{e}")
    return " ".join(parts)
