"""Slide calculus on all-edge staircase tableaux.

Everything here lives on the shape rho_n/rho_n carrying the labels of
S_{rho_{n,m}}: the reference tableau whose edge i holds column i of the
superstandard filling, single-edge slides that push a label set one diagonal
east, the unique slide decomposition of a good tableau, the per-step
minimality (slidable) criterion, and the shading bijection it induces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadTableau, NotASubset, NotSlidable
from .jdt import _remove_corner, _slide, _southmost_corner, _state_from, rectify
from .shapes import StrictPartition, rho, rho_nm, skew
from .tableaux import EdgeTableau, col_set, superstandard, validate


def _staircase_params(t: EdgeTableau) -> tuple[int, int]:
    """Recover (n, m) from a tableau of shape rho_n/rho_n with |rho_{n,m}| labels."""
    n = len(t.shape.outer)
    if t.shape.outer != rho(n) or t.shape.inner != rho(n):
        raise ValueError(f"expected a staircase-over-staircase shape, got {t.shape!r}")
    for m in range(n + 1):
        if rho_nm(n, m).size() == t.n:
            return n, m
    raise ValueError(f"label count {t.n} matches no row-truncated staircase of {n}")


def _reference(n: int, m: int) -> EdgeTableau:
    return superstandard(rho_nm(n, m))


def _column_of(n: int, m: int) -> dict[int, int]:
    """Label -> its column in the superstandard reference filling."""
    s = _reference(n, m)
    return {v: b.col for b, v in s.boxes.items()}


def _row_of(n: int, m: int) -> dict[int, int]:
    s = _reference(n, m)
    return {v: b.row for b, v in s.boxes.items()}


def u_tableau(n: int, m: int) -> EdgeTableau:
    """The tableau whose edge i carries column i of the reference filling."""
    s = _reference(n, m)
    shape = skew(rho(n), rho(n))
    width = s.shape.outer[0] if s.shape.outer.parts else 0
    edges = {i: sorted(col_set(s, i)) for i in range(1, min(n, width) + 1)}
    t = EdgeTableau(shape, {}, edges, s.n)
    assert not validate(t)
    return t


def i_slide(t: EdgeTableau, h: int, labels) -> EdgeTableau:
    """Move the label set from edge h to edge h+1; other edges unchanged."""
    n = len(t.shape.outer)
    if not 1 <= h <= n - 1:
        raise IndexError(f"edge index {h} outside 1..{n - 1}")
    moved = frozenset(labels)
    if not moved <= set(t.edge(h)):
        raise NotASubset(f"{sorted(moved)} is not a subset of edge {h} = {t.edge(h)}")
    edges = {i: list(t.edge(i)) for i in range(1, n + 1)}
    edges[h] = [v for v in edges[h] if v not in moved]
    edges[h + 1] = sorted(set(edges[h + 1]) | moved)
    out = EdgeTableau(t.shape, t.boxes, edges, t.n)
    assert not validate(out)
    return out


def is_bad(t: EdgeTableau) -> tuple[bool, tuple[int, int, int] | None]:
    """True with a witness (label, reference column, found column) if some
    label sits strictly west of its column in the reference filling."""
    n, m = _staircase_params(t)
    col = _column_of(n, m)
    for i in range(1, n + 1):
        for v in t.edge(i):
            if i < col[v]:
                return True, (v, col[v], i)
    return False, None


def slide_decomposition(t: EdgeTableau) -> tuple[frozenset[int], ...]:
    """The unique slide sequence producing t from the reference edge tableau.

    Closed form: label j belongs to step k exactly when its reference column
    is at most k and its edge in t is beyond k.  The reconstruction identity
    is verified before returning.
    """
    n, m = _staircase_params(t)
    bad, witness = is_bad(t)
    if bad:
        raise BadTableau(f"label {witness[0]} sits west of column {witness[1]}")
    col = _column_of(n, m)
    edge_of = {v: i for i in range(1, n + 1) for v in t.edge(i)}
    decomposition = tuple(
        frozenset(v for v in edge_of if col[v] <= k < edge_of[v])
        for k in range(1, n)
    )
    rebuilt = u_tableau(n, m)
    for k, part in enumerate(decomposition, start=1):
        rebuilt = i_slide(rebuilt, k, part)
    assert rebuilt == t, "slide decomposition failed to reconstruct the tableau"
    return decomposition


def _intermediates(t: EdgeTableau) -> list[EdgeTableau]:
    """States T^(1)..T^(n-1): T^(k) is the reference tableau slid through the
    first k-1 steps of t's decomposition."""
    n, m = _staircase_params(t)
    decomposition = slide_decomposition(t)
    states = [u_tableau(n, m)]
    for k in range(1, n - 1):
        states.append(i_slide(states[-1], k, decomposition[k - 1]))
    return states


def shift_op(t: EdgeTableau, j: int, h: int) -> EdgeTableau:
    """Move label j from column h+1 back onto edge h, closing the gap.

    Acts on intermediate rectification states.  Trivial unless j appears in
    column h+1 and the diagonal box (h, h) is empty or holds a smaller label.
    """
    n = len(t.shape.outer)
    diag = t.entry(h, h)
    in_col = j in col_set(t, h + 1) if h + 1 <= t.shape.outer[0] else False
    if not in_col or (diag is not None and diag >= j):
        return t
    boxes = dict(t.boxes)
    old = t.boxes
    vacated = None
    for b in old:
        if b.col != h + 1:
            continue
        v = old[b]
        if v < j:
            continue
        if b.row <= h:
            below = old.get((b.row + 1, h + 1))
            if below is None:
                del boxes[b]
                vacated = b
            else:
                boxes[b] = below
        elif b.row == h + 1:
            replacement = min(t.edge(h + 1)) if t.edge(h + 1) else None
            if replacement is None:
                del boxes[b]
                vacated = b
            else:
                boxes[b] = replacement
    edges = {i: list(t.edge(i)) for i in range(1, n + 1)}
    edges[h] = sorted(set(t.edge(h)) | {j})
    at_least_j = [v for v in t.edge(h + 1) if v >= j]
    if at_least_j:
        edges[h + 1] = [v for v in t.edge(h + 1) if v != min(at_least_j)]
    # a vacated outer corner leaves the shape, as in a rectification state
    outer_parts = list(t.shape.outer.parts)
    if vacated is not None:
        r, c = vacated
        last_in_row = c == outer_parts[r - 1] + r - 1
        below_in_shape = r < len(outer_parts) and c <= outer_parts[r] + r
        if last_in_row and not below_in_shape:
            outer_parts[r - 1] -= 1
            if outer_parts[r - 1] == 0:
                outer_parts.pop()
    outer = StrictPartition(outer_parts)
    # any other vacated cell joins the unfilled inner region
    inner_parts = []
    for r in range(1, len(outer) + 1):
        c = r
        while c <= outer[r - 1] + r - 1 and (r, c) not in boxes:
            c += 1
        inner_parts.append(c - r)
    while inner_parts and inner_parts[-1] == 0:
        inner_parts.pop()
    out = EdgeTableau(
        skew(outer, StrictPartition(inner_parts)), boxes, edges, t.n
    )
    assert not validate(out), f"shift produced an invalid tableau: {validate(out)}"
    return out


def _trace_box_states(t: EdgeTableau) -> list[dict]:
    """Box dicts of every rectification state of t, cheap form of the trace."""
    outer, inner, boxes, edges = _state_from(t)
    states = [dict(boxes)]
    while inner:
        r, c = _southmost_corner(inner)
        _remove_corner(inner, r, c)
        _slide(outer, inner, boxes, edges, r, c)
        states.append(dict(boxes))
    return states


def is_r_compatible(t: EdgeTableau, r: int) -> bool:
    """No label of the first r reference rows ever visits a box (c'-2, c')
    strictly east of its reference column during rectification."""
    n, m = _staircase_params(t)
    s = _reference(n, m)
    targets = [(v, b.col) for b, v in s.boxes.items() if b.row <= r]
    states = _trace_box_states(t)
    for boxes in states:
        for v, c in targets:
            for cp in range(c + 1, n + 1):
                if boxes.get((cp - 2, cp)) == v:
                    return False
    return True


@dataclass(frozen=True)
class SlidableReport:
    k: int
    step: frozenset[int]
    candidates: frozenset[int]

    @property
    def ok(self) -> bool:
        return self.step <= self.candidates


def slidable_candidates(t: EdgeTableau, k: int, state: EdgeTableau) -> frozenset[int]:
    """Per-row minima of edge k of the k-th intermediate state: the labels a
    slidable step k may move."""
    n, m = _staircase_params(t)
    row = _row_of(n, m)
    by_row: dict[int, int] = {}
    for v in state.edge(k):
        i = row[v]
        if i <= k and (i not in by_row or v < by_row[i]):
            by_row[i] = v
    return frozenset(by_row.values())


def is_slidable(t: EdgeTableau) -> tuple[bool, list[SlidableReport]]:
    """Check the per-step minimality criterion; returns the per-step report."""
    n, m = _staircase_params(t)
    decomposition = slide_decomposition(t)
    states = _intermediates(t)
    report = []
    for k in range(1, n):
        report.append(
            SlidableReport(
                k, decomposition[k - 1], slidable_candidates(t, k, states[k - 1])
            )
        )
    return all(item.ok for item in report), report


@dataclass(frozen=True)
class Shading:
    """Subset of boxes in the first n-1 columns of the reference shape,
    stored as (column, row) pairs."""

    n: int
    m: int
    shaded: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        for col, row in self.shaded:
            if not (1 <= col <= self.n - 1 and 1 <= row <= min(col, self.m)):
                raise ValueError(f"box (col={col}, row={row}) outside the shading grid")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "shaded": [[c, r] for c, r in sorted(self.shaded)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Shading":
        return cls(
            data["n"], data["m"], frozenset((c, r) for c, r in data["shaded"])
        )


def shading_boxes(n: int, m: int) -> list[tuple[int, int]]:
    """All shadable (column, row) positions."""
    return [(c, r) for c in range(1, n) for r in range(1, min(c, m) + 1)]


def shading_to_tableau(s: Shading) -> EdgeTableau:
    """Build the tableau whose slide decomposition picks, at each shaded
    (column, row), the row minimum of that column's current edge."""
    n, m = s.n, s.m
    row = _row_of(n, m)
    t = u_tableau(n, m)
    for k in range(1, n):
        chosen = set()
        for r in range(1, min(k, m) + 1):
            if (k, r) not in s.shaded:
                continue
            in_row = [v for v in t.edge(k) if row[v] == r]
            if not in_row:
                raise NotSlidable(f"no label of row {r} on edge {k}")
            chosen.add(min(in_row))
        t = i_slide(t, k, chosen)
    return t


def tableau_to_shading(t: EdgeTableau) -> Shading:
    """Inverse of the forward map on good, slidable tableaux."""
    n, m = _staircase_params(t)
    bad, witness = is_bad(t)
    if bad:
        v, want, got = witness
        raise NotSlidable(f"label {v} sits in column {got}, west of column {want}")
    ok, report = is_slidable(t)
    if not ok:
        failing = [item.k for item in report if not item.ok]
        raise NotSlidable(f"decomposition steps {failing} exceed their candidates")
    row = _row_of(n, m)
    shaded = set()
    for item in report:
        for v in item.step:
            shaded.add((item.k, row[v]))
    return Shading(n, m, frozenset(shaded))


def count_d_staircase(n: int, m: int) -> int:
    """Number of good, slidable tableaux: two choices per shadable box."""
    rho_nm(n, m)  # parameter validation
    return 2 ** len(shading_boxes(n, m))
