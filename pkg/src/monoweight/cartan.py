"""Affine Cartan data for types A_n^(1) and B_n^(1) and the weight lattice.

Weights are written in the basis Lambda_0, ..., Lambda_n, delta.  A simple root
alpha_j has Lambda-coordinates given by column j of the Cartan matrix
(alpha_j(h_i) = C[i][j]); only alpha_0 carries a delta component, since the
fundamental weights vanish on d.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence

from .errors import UnsupportedTypeError

__all__ = [
    "Family",
    "AffineType",
    "CartanDatum",
    "WeightVector",
    "build_datum",
    "parse_type",
    "simple_root",
    "delta_in_roots",
]


class Family(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class AffineType:
    family: Family
    rank: int

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        minimum = 1 if family is Family.A else 3
        if not isinstance(self.rank, int) or self.rank < minimum:
            raise UnsupportedTypeError(
                f"type {family.value}{self.rank}^(1) needs rank >= {minimum}"
            )

    def __str__(self):
        return f"{self.family.value}{self.rank}"


_TYPE_RE = re.compile(r"^\s*([AaBb])\s*(\d+)\s*$")


def parse_type(text: str) -> AffineType:
    """Parse strings such as ``"A1"``, ``"b3"`` (case-insensitive)."""
    m = _TYPE_RE.match(text)
    if m is None:
        raise UnsupportedTypeError(f"cannot parse affine type {text!r}")
    return AffineType(Family(m.group(1).upper()), int(m.group(2)))


@dataclass(frozen=True)
class WeightVector:
    """Element sum(lam[i] * Lambda_i) + dcoef * delta of the affine weight lattice."""

    lam: tuple[int, ...]
    dcoef: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        object.__setattr__(self, "dcoef", int(self.dcoef))

    @classmethod
    def zero(cls, size: int) -> "WeightVector":
        return cls((0,) * size, 0)

    def _check(self, other: "WeightVector"):
        if len(self.lam) != len(other.lam):
            raise ValueError("weights of different ranks")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(
            tuple(a + b for a, b in zip(self.lam, other.lam)), self.dcoef + other.dcoef
        )

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(
            tuple(a - b for a, b in zip(self.lam, other.lam)), self.dcoef - other.dcoef
        )

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.lam), -self.dcoef)

    def __mul__(self, c: int) -> "WeightVector":
        return WeightVector(tuple(c * a for a in self.lam), c * self.dcoef)

    __rmul__ = __mul__

    def pair(self, i: int) -> int:
        """<h_i, self>; delta(h_i) = 0 so only the Lambda_i coefficient survives."""
        return self.lam[i]

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "delta": self.dcoef}

    def __str__(self):
        terms = []
        for i, c in enumerate(self.lam):
            if c:
                terms.append((c, f"Λ{i}"))
        if self.dcoef:
            terms.append((self.dcoef, "δ"))
        if not terms:
            return "0"
        out = []
        for idx, (c, sym) in enumerate(terms):
            sign = "-" if c < 0 else ("+" if idx else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out.append(f"{sign}{mag}{sym}")
        return " ".join(out)


@dataclass(frozen=True)
class CartanDatum:
    type: AffineType
    matrix: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.type.rank

    @property
    def size(self) -> int:
        return self.type.rank + 1

    @property
    def indices(self) -> range:
        return range(self.size)

    @property
    def family(self) -> Family:
        return self.type.family

    def o(self, i: int, j: int) -> int:
        """Orientation integer o_{i,j} (i != j)."""
        if i == j:
            raise ValueError("o_{i,i} is undefined")
        if self.family is Family.A:
            n = self.n
            if (i, j) == (0, n):
                return 0
            if (i, j) == (n, 0):
                return 1
        return 1 if i < j else 0

    @cached_property
    def deltas(self) -> tuple[int, ...]:
        if self.family is Family.A:
            return (1,) * self.size
        return (1, 1) + (2,) * (self.n - 1)

    def __str__(self):
        return f"{self.type}^(1)"


def _matrix_a(n: int) -> list[list[int]]:
    size = n + 1
    if n == 1:
        return [[2, -2], [-2, 2]]
    c = [[0] * size for _ in range(size)]
    for i in range(size):
        c[i][i] = 2
        c[i][(i + 1) % size] = -1
        c[i][(i - 1) % size] = -1
    return c


def _matrix_b(n: int) -> list[list[int]]:
    size = n + 1
    c = [[0] * size for _ in range(size)]
    for i in range(size):
        c[i][i] = 2
    for i in (0, 1):
        c[i][2] = c[2][i] = -1
    for i in range(2, n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    # short simple root alpha_n: alpha_n(h_{n-1}) = -1, alpha_{n-1}(h_n) = -2
    c[n - 1][n] = -1
    c[n][n - 1] = -2
    return c


def build_datum(affine_type: AffineType | str) -> CartanDatum:
    if isinstance(affine_type, str):
        affine_type = parse_type(affine_type)
    if affine_type.family is Family.A:
        rows = _matrix_a(affine_type.rank)
    else:
        rows = _matrix_b(affine_type.rank)
    return CartanDatum(affine_type, tuple(tuple(r) for r in rows))


def simple_root(datum: CartanDatum, j: int) -> WeightVector:
    if not 0 <= j < datum.size:
        raise IndexError(f"index {j} not in I = {{0..{datum.n}}}")
    return WeightVector(
        tuple(datum.matrix[i][j] for i in datum.indices), 1 if j == 0 else 0
    )


def delta_in_roots(datum: CartanDatum) -> tuple[int, ...]:
    return datum.deltas


def root_combination(datum: CartanDatum, coeffs: Sequence[int]) -> WeightVector:
    """sum(coeffs[j] * alpha_j)."""
    total = WeightVector.zero(datum.size)
    for j, c in enumerate(coeffs):
        if c:
            total = total + c * simple_root(datum, j)
    return total
