"""Strict partitions, shifted diagrams, and skew shapes.

Conventions: matrix coordinates, 1-based.  Row i of the shifted diagram of a
strict partition nu occupies columns i .. nu_i + i - 1, so the diagonal boxes
are exactly (i, i) for i <= len(nu).  A diagonal edge (the southern edge of a
diagonal box) exists for every diagonal box of the outer shape, whether or not
that box lies inside the inner shape.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import ContainmentError


class Box(NamedTuple):
    row: int
    col: int


class StrictPartition:
    """Finite strictly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {parts}")
            if i + 1 < len(parts) and parts[i + 1] >= p:
                raise ValueError(f"parts must strictly decrease, got {parts}")
        self.parts = parts

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, StrictPartition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"StrictPartition{self.parts}"

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def has_box(self, row: int, col: int) -> bool:
        return 1 <= row <= len(self.parts) and row <= col <= self.parts[row - 1] + row - 1

    def boxes(self) -> list[Box]:
        """Boxes of the shifted diagram in row-major order."""
        out = []
        for i, p in enumerate(self.parts, start=1):
            for j in range(i, p + i):
                out.append(Box(i, j))
        return out

    def row_cols(self, row: int) -> range:
        """Column range occupied by the given row."""
        return range(row, self.parts[row - 1] + row)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "StrictPartition":
        return cls(data)


EMPTY = StrictPartition()


def rho(n: int) -> StrictPartition:
    """The staircase (n, n-1, ..., 1); empty when n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return StrictPartition(range(n, 0, -1))


def rho_nm(n: int, m: int) -> StrictPartition:
    """First m parts of the staircase rho(n)."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    return StrictPartition(range(n, n - m, -1))


def contains(inner: StrictPartition, outer: StrictPartition) -> bool:
    """Shifted-diagram containment: inner_i <= outer_i for all i."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner.parts, outer.parts))


class SkewShape:
    """The boxes of outer not in inner, with per-diagonal-box edges."""

    __slots__ = ("outer", "inner", "_boxes", "_box_set")

    def __init__(self, outer: StrictPartition, inner: StrictPartition):
        if not isinstance(outer, StrictPartition):
            outer = StrictPartition(outer)
        if not isinstance(inner, StrictPartition):
            inner = StrictPartition(inner)
        if not contains(inner, outer):
            raise ContainmentError(f"{inner!r} is not contained in {outer!r}")
        self.outer = outer
        self.inner = inner
        boxes = []
        for i, p in enumerate(outer.parts, start=1):
            start = i + (inner.parts[i - 1] if i <= len(inner) else 0)
            for j in range(start, p + i):
                boxes.append(Box(i, j))
        self._boxes = tuple(boxes)
        self._box_set = frozenset(boxes)

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewShape):
            return self.outer == other.outer and self.inner == other.inner
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.outer.parts, self.inner.parts))

    def __repr__(self) -> str:
        return f"SkewShape({self.outer.parts}/{self.inner.parts})"

    def boxes(self) -> tuple[Box, ...]:
        return self._boxes

    def has_box(self, row: int, col: int) -> bool:
        return (row, col) in self._box_set

    def diagonal_edges(self) -> range:
        """Edge indices; edge i exists for every diagonal box (i, i) of outer."""
        return range(1, len(self.outer) + 1)

    def column_boxes(self, col: int) -> list[Box]:
        """Skew boxes in the given column, north to south."""
        return [b for b in self._boxes if b.col == col]

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "inner": self.inner.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        return cls(StrictPartition(data["outer"]), StrictPartition(data["inner"]))


def skew(nu: StrictPartition, lam: StrictPartition) -> SkewShape:
    """The skew shape nu/lam."""
    return SkewShape(nu, lam)


def inner_corners(shape: SkewShape) -> list[Box]:
    """Maximally southeast boxes of the inner shape, north to south.

    A box (i, j) of the inner shape is a corner when neither (i+1, j) nor
    (i, j+1) belongs to the inner shape.
    """
    lam = shape.inner
    out = []
    for i, p in enumerate(lam.parts, start=1):
        j = p + i - 1  # only the last box of a row can be maximal
        if not lam.has_box(i + 1, j) and not lam.has_box(i, j + 1):
            out.append(Box(i, j))
    return out
