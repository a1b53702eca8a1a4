"""Jeu de taquin slides, row rectification, and the tableau count d.

A slide starts with a hole at an inner corner and repeatedly applies exactly
one of four moves: (1) pull the smaller south label north, (2) pull the
smaller east label west, (3) in a diagonal box, pull the east label west when
it beats the edge minimum, or (4) absorb the minimum of the edge set below a
diagonal box, which ends the slide.  A slide that ends with the hole in a box
with nothing south or east removes that box from the outer shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotACorner
from .shapes import Box, SkewShape, StrictPartition, contains, inner_corners, skew
from .tableaux import EdgeTableau, superstandard, validate, _enumerate_states

# Mutable slide state: (outer parts list, inner parts list, boxes dict,
# edge label lists).  Edge k is edges[k-1]; lists are kept sorted.


def _state_from(t: EdgeTableau) -> tuple[list, list, dict, list]:
    outer = list(t.shape.outer.parts)
    inner = list(t.shape.inner.parts)
    boxes = dict(t.boxes)
    edges = [list(t.edge(i)) for i in range(1, len(outer) + 1)]
    return outer, inner, boxes, edges


def _tableau_from(state, n: int) -> EdgeTableau:
    outer, inner, boxes, edges = state
    shape = skew(StrictPartition(outer), StrictPartition(inner))
    return EdgeTableau(shape, boxes, {i + 1: e for i, e in enumerate(edges)}, n)


def _remove_corner(inner: list, r: int, c: int) -> None:
    if inner[r - 1] == 1:
        inner.pop()  # strictness forces a one-box row to be the last row
    else:
        inner[r - 1] -= 1


def _slide(outer: list, inner: list, boxes: dict, edges: list, r: int, c: int) -> list:
    """Run one slide with the hole starting at (r, c); returns the hole path.

    The caller removes (r, c) from the inner shape first.  Exactly one move
    must apply at each step; anything else indicates a corrupted tableau.
    """
    path = [(r, c)]
    while True:
        east = boxes.get((r, c + 1))
        if r == c:
            edge = edges[r - 1]
            rule3 = east is not None and (not edge or east < edge[0])
            rule4 = bool(edge) and (east is None or edge[0] < east)
            if rule3 and rule4:
                raise AssertionError(f"both diagonal moves apply at {(r, c)}")
            if rule4:
                boxes[(r, c)] = edge.pop(0)
                return path
            if rule3:
                boxes[(r, c)] = east
                del boxes[(r, c + 1)]
                c += 1
            else:
                break
        else:
            south = boxes.get((r + 1, c))
            rule1 = south is not None and (east is None or south < east)
            rule2 = east is not None and (south is None or east < south)
            if rule1 and rule2:
                raise AssertionError(f"both moves apply at {(r, c)}")
            if rule1:
                boxes[(r, c)] = south
                del boxes[(r + 1, c)]
                r += 1
            elif rule2:
                boxes[(r, c)] = east
                del boxes[(r, c + 1)]
                c += 1
            else:
                break
        path.append((r, c))
    # hole exits here: drop box (r, c) from the outer shape
    assert c == outer[r - 1] + r - 1, "hole did not stop at the end of its row"
    outer[r - 1] -= 1
    if outer[r - 1] == 0:
        assert r == len(outer)
        outer.pop()
        dropped = edges.pop()
        assert not dropped, "removed a diagonal box with a nonempty edge"
    return path


def jdt_slide(t: EdgeTableau, c: Box) -> EdgeTableau:
    """One slide of the tableau from the inner corner c."""
    c = Box(*c)
    if c not in inner_corners(t.shape):
        raise NotACorner(f"{tuple(c)} is not an inner corner of {t.shape!r}")
    outer, inner, boxes, edges = _state_from(t)
    _remove_corner(inner, c.row, c.col)
    _slide(outer, inner, boxes, edges, c.row, c.col)
    return _tableau_from((outer, inner, boxes, edges), t.n)


@dataclass
class RectificationTrace:
    """All intermediate tableaux of a row rectification.

    states[0] is the input and states[k] the result of the k-th slide;
    corners[k] is the chosen inner corner and paths[k] the boxes the hole
    visited during that slide.
    """

    states: list[EdgeTableau]
    corners: list[Box]
    paths: list[list[Box]]

    @property
    def result(self) -> EdgeTableau:
        return self.states[-1]

    def to_json(self) -> dict:
        return {
            "states": [s.to_json() for s in self.states],
            "corners": [[c.row, c.col] for c in self.corners],
            "paths": [[[r, c] for r, c in p] for p in self.paths],
        }


def _southmost_corner(inner: list) -> tuple[int, int]:
    r = len(inner)
    return r, inner[r - 1] + r - 1


def rectify(t: EdgeTableau) -> RectificationTrace:
    """Slide from the southmost inner corner until the shape is straight."""
    violations = validate(t)
    if violations:
        raise ValueError(f"input tableau is invalid: {violations}")
    outer, inner, boxes, edges = _state_from(t)
    states = [t]
    corners: list[Box] = []
    paths: list[list[Box]] = []
    while inner:
        r, c = _southmost_corner(inner)
        corners.append(Box(r, c))
        _remove_corner(inner, r, c)
        path = _slide(outer, inner, boxes, edges, r, c)
        paths.append([Box(*p) for p in path])
        states.append(_tableau_from((outer, list(inner), dict(boxes), [list(e) for e in edges]), t.n))
    return RectificationTrace(states, corners, paths)


def rect(t: EdgeTableau) -> EdgeTableau:
    """Rectification result only, without trace snapshots or validation."""
    outer, inner, boxes, edges = _state_from(t)
    while inner:
        r, c = _southmost_corner(inner)
        _remove_corner(inner, r, c)
        _slide(outer, inner, boxes, edges, r, c)
    return _tableau_from((outer, inner, boxes, edges), t.n)


def count_d(lam: StrictPartition, mu: StrictPartition, nu: StrictPartition) -> int:
    """Number of tableaux of shape nu/lam rectifying to the superstandard mu.

    Exhausts the full enumeration with |mu| labels; incompatible shapes give 0.
    """
    if not contains(lam, nu):
        return 0
    shape = skew(nu, lam)
    n = mu.size()
    if n < len(shape.boxes()):
        return 0
    target = superstandard(mu)
    t_boxes = target.boxes
    t_outer = tuple(target.shape.outer.parts)
    count = 0
    outer0 = list(nu.parts)
    for boxes, edge_lists in _enumerate_states(shape, n):
        outer = outer0.copy()
        inner = list(lam.parts)
        edges = [e.copy() for e in edge_lists]
        while inner:
            r, c = _southmost_corner(inner)
            _remove_corner(inner, r, c)
            _slide(outer, inner, boxes, edges, r, c)
        if (
            boxes == t_boxes
            and tuple(outer) == t_outer
            and not any(edges)
        ):
            count += 1
    return count
