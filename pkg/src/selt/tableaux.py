"""Shifted edge labeled tableaux: representation, axioms, enumeration.

A tableau assigns one label to every box of a skew shape and a (possibly
empty) set of labels to every diagonal edge, the labels being 1..n with each
used exactly once.  Rows and columns of box labels strictly increase, and
every label on diagonal edge i exceeds every box label directly north of it
(boxes of the skew shape in column i); boxes of the inner shape carry no
labels and impose no constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import CapacityError
from .shapes import Box, SkewShape, StrictPartition, skew

EMPTY_EDGE: tuple[int, ...] = ()


class EdgeTableau:
    """Box labels plus per-edge label sets on a shifted skew shape.

    The constructor is structural only; use :func:`validate` to check the
    axioms.  Edge sets are stored as sorted tuples; empty edges are dropped.
    """

    __slots__ = ("shape", "boxes", "edges", "n")

    def __init__(self, shape: SkewShape, boxes: Mapping, edges: Mapping, n: int):
        self.shape = shape
        self.boxes = {Box(*k): int(v) for k, v in boxes.items()}
        self.edges = {
            int(i): tuple(sorted(int(v) for v in vals))
            for i, vals in edges.items()
            if len(tuple(vals)) > 0
        }
        self.n = int(n)

    def entry(self, row: int, col: int) -> int | None:
        return self.boxes.get((row, col))

    def edge(self, i: int) -> tuple[int, ...]:
        return self.edges.get(i, EMPTY_EDGE)

    def labels(self) -> list[int]:
        """All labels, boxes first (row-major) then edges by index."""
        out = [self.boxes[b] for b in sorted(self.boxes)]
        for i in sorted(self.edges):
            out.extend(self.edges[i])
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, EdgeTableau):
            return (
                self.shape == other.shape
                and self.n == other.n
                and self.boxes == other.boxes
                and self.edges == other.edges
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash(
            (
                self.shape,
                self.n,
                frozenset(self.boxes.items()),
                frozenset(self.edges.items()),
            )
        )

    def __repr__(self) -> str:
        return f"EdgeTableau({self.shape!r}, boxes={self.boxes}, edges={self.edges}, n={self.n})"

    def serialization(self) -> tuple:
        """Canonical key: box labels row-major, then edge sets by index."""
        boxes = tuple(self.boxes[b] for b in sorted(self.boxes))
        edges = tuple(self.edge(i) for i in self.shape.diagonal_edges())
        return (boxes, edges)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "boxes": [
                {"row": b.row, "col": b.col, "label": v}
                for b, v in sorted(self.boxes.items())
            ],
            "edges": {str(i): list(self.edges[i]) for i in sorted(self.edges)},
            "n": self.n,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EdgeTableau":
        shape = SkewShape.from_json(data["shape"])
        boxes = {(b["row"], b["col"]): b["label"] for b in data["boxes"]}
        edges = {int(i): vals for i, vals in data.get("edges", {}).items()}
        return cls(shape, boxes, edges, data["n"])


@dataclass(frozen=True)
class Violation:
    axiom: str  # "i", "ii", "iii" or "iv"
    location: object
    message: str


def validate(t: EdgeTableau) -> list[Violation]:
    """All axiom violations of the tableau; an empty list means valid."""
    out: list[Violation] = []
    shape_boxes = set(t.shape.boxes())
    for b in sorted(shape_boxes - set(t.boxes)):
        out.append(Violation("i", b, f"box {tuple(b)} has no label"))
    for b in sorted(set(t.boxes) - shape_boxes):
        out.append(Violation("i", b, f"label in {tuple(b)}, outside the skew shape"))
    valid_edges = set(t.shape.diagonal_edges())
    for i in sorted(t.edges):
        if i not in valid_edges:
            out.append(Violation("ii", i, f"labels on nonexistent diagonal edge {i}"))

    seen: dict[int, int] = {}
    for v in t.labels():
        seen[v] = seen.get(v, 0) + 1
    for v in sorted(seen):
        if not 1 <= v <= t.n:
            out.append(Violation("iii", v, f"label {v} outside 1..{t.n}"))
        elif seen[v] > 1:
            out.append(Violation("iii", v, f"label {v} appears {seen[v]} times"))
    for v in range(1, t.n + 1):
        if v not in seen:
            out.append(Violation("iii", v, f"label {v} missing"))

    by_row: dict[int, list[Box]] = {}
    by_col: dict[int, list[Box]] = {}
    for b in t.shape.boxes():
        by_row.setdefault(b.row, []).append(b)
        by_col.setdefault(b.col, []).append(b)
    for row, bs in by_row.items():
        vals = [t.boxes[b] for b in sorted(bs) if b in t.boxes]
        if any(x >= y for x, y in zip(vals, vals[1:])):
            out.append(Violation("iv", row, f"row {row} not strictly increasing"))
    for col, bs in by_col.items():
        vals = [t.boxes[b] for b in sorted(bs) if b in t.boxes]
        if any(x >= y for x, y in zip(vals, vals[1:])):
            out.append(Violation("iv", col, f"column {col} not strictly increasing"))
    for i in sorted(t.edges):
        if i not in valid_edges:
            continue
        north = [t.boxes[b] for b in by_col.get(i, []) if b in t.boxes]
        if north and t.edges[i] and min(t.edges[i]) <= max(north):
            out.append(
                Violation(
                    "iv", i, f"edge {i} label {min(t.edges[i])} not above column maximum"
                )
            )
    return out


def superstandard(mu: StrictPartition) -> EdgeTableau:
    """Straight shape mu filled 1..|mu| in English reading order, no edge labels."""
    shape = skew(mu, StrictPartition())
    boxes = {}
    v = 0
    for b in shape.boxes():
        v += 1
        boxes[b] = v
    return EdgeTableau(shape, boxes, {}, v)


def col_set(t: EdgeTableau, k: int) -> frozenset[int]:
    """Edge labels of edge k together with box labels in column k."""
    max_col = t.shape.outer[0] if len(t.shape.outer) else 0
    if not 1 <= k <= max_col:
        raise IndexError(f"column {k} outside shape")
    vals = set(t.edge(k))
    for b in t.shape.column_boxes(k):
        if b in t.boxes:
            vals.add(t.boxes[b])
    return frozenset(vals)


def row_set(t: EdgeTableau, r: int) -> frozenset[int]:
    """Box labels in row r; meaningful for straight-shape tableaux."""
    if not 1 <= r <= len(t.shape.outer):
        raise IndexError(f"row {r} outside shape")
    return frozenset(
        t.boxes[b] for b in t.shape.boxes() if b.row == r and b in t.boxes
    )


def _subsets_lex(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Subsets of a sorted tuple as sorted tuples, in lexicographic order."""
    yield ()
    for i, x in enumerate(items):
        for rest in _subsets_lex(items[i + 1 :]):
            yield (x,) + rest


def _enumerate_states(shape: SkewShape, n: int) -> Iterator[tuple[dict, list]]:
    """Yield (boxes dict, edge lists) of every valid filling, deterministically.

    Boxes are filled in row-major order with increasing label choices, then the
    remaining labels are distributed over the edges in lexicographic order of
    the edge-set sequence, so the stream is sorted by the canonical
    serialization (box labels row-major, then edge sets by index).
    """
    boxes = shape.boxes()
    if n < len(boxes):
        raise CapacityError(f"{n} labels cannot fill {len(boxes)} boxes")
    n_edges = len(shape.outer)
    box_list = list(boxes)
    box_index = {b: i for i, b in enumerate(box_list)}

    def fill_boxes(pos: int, used: set[int], assign: list[int]) -> Iterator[list[int]]:
        if pos == len(box_list):
            yield assign
            return
        r, c = box_list[pos]
        lo = 0
        w = box_index.get((r, c - 1))
        if w is not None:
            lo = max(lo, assign[w])
        nth = box_index.get((r - 1, c))
        if nth is not None:
            lo = max(lo, assign[nth])
        for v in range(lo + 1, n + 1):
            if v in used:
                continue
            used.add(v)
            assign.append(v)
            yield from fill_boxes(pos + 1, used, assign)
            assign.pop()
            used.remove(v)

    def edge_thresholds(assign: list[int]) -> list[int]:
        thr = [0] * n_edges
        for b, v in zip(box_list, assign):
            if b.col <= n_edges and v > thr[b.col - 1]:
                thr[b.col - 1] = v
        return thr

    def fill_edges(
        k: int,
        avail: tuple[int, ...],
        suffix_min: list[int],
        thr: list[int],
        acc: list[tuple[int, ...]],
    ) -> Iterator[list[tuple[int, ...]]]:
        if k == n_edges:
            if not avail:
                yield acc
            return
        # every leftover label needs some remaining edge with a smaller threshold
        if avail and avail[0] <= suffix_min[k]:
            return
        allowed = tuple(v for v in avail if v > thr[k])
        # labels no later edge can hold must be taken here; they are all smaller
        # than the free choices, so prefixing keeps the stream lexicographic
        forced = tuple(v for v in allowed if v <= suffix_min[k + 1])
        optional = tuple(v for v in allowed if v > suffix_min[k + 1])
        for subset in _subsets_lex(optional):
            chosen = forced + subset
            rest = tuple(v for v in avail if v not in chosen)
            acc.append(chosen)
            yield from fill_edges(k + 1, rest, suffix_min, thr, acc)
            acc.pop()

    for assign in fill_boxes(0, set(), []):
        remaining = tuple(v for v in range(1, n + 1) if v not in set(assign))
        thr = edge_thresholds(assign)
        suffix_min = [n + 1] * (n_edges + 1)
        for k in range(n_edges - 1, -1, -1):
            suffix_min[k] = min(suffix_min[k + 1], thr[k])
        for edge_sets in fill_edges(0, remaining, suffix_min, thr, []):
            yield (
                {b: v for b, v in zip(box_list, assign)},
                [list(e) for e in edge_sets],
            )


def enumerate_selt(shape: SkewShape, n: int) -> Iterator[EdgeTableau]:
    """All valid tableaux of the shape with labels 1..n, exactly once each."""
    for boxes, edge_sets in _enumerate_states(shape, n):
        yield EdgeTableau(
            shape, boxes, {i + 1: e for i, e in enumerate(edge_sets)}, n
        )
