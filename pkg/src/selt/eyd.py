"""Excited Young diagrams on shifted shapes and the localization count.

A diagram is a set of plus marks inside an ambient strict partition.  The
local move takes a plus at (i, j) to (i+1, j+1) when both (i, j+1) and
(i+1, j+1) are unoccupied boxes of the ambient shape and (i+1, j) either is
not a box of the ambient shape or is unoccupied.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import ContainmentError
from .shapes import Box, StrictPartition, contains, rho


@dataclass(frozen=True)
class ExcitedDiagram:
    ambient: StrictPartition
    pluses: frozenset[Box] = field(default_factory=frozenset)

    def key(self) -> tuple:
        return tuple(sorted(self.pluses))

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "pluses": [[b.row, b.col] for b in sorted(self.pluses)],
        }


def initial_diagram(lam: StrictPartition, mu: StrictPartition) -> ExcitedDiagram:
    """Pluses at exactly the shifted boxes of lam, inside ambient mu."""
    if not contains(lam, mu):
        raise ContainmentError(f"{lam!r} is not contained in {mu!r}")
    return ExcitedDiagram(mu, frozenset(lam.boxes()))


def local_moves(d: ExcitedDiagram) -> list[ExcitedDiagram]:
    """All diagrams reachable from d by a single local move."""
    mu = d.ambient
    occupied = d.pluses
    out = []
    for b in sorted(occupied):
        i, j = b
        if (
            mu.has_box(i, j + 1)
            and Box(i, j + 1) not in occupied
            and mu.has_box(i + 1, j + 1)
            and Box(i + 1, j + 1) not in occupied
            and (not mu.has_box(i + 1, j) or Box(i + 1, j) not in occupied)
        ):
            out.append(
                ExcitedDiagram(mu, (occupied - {b}) | {Box(i + 1, j + 1)})
            )
    return out


def enumerate_eyd(lam: StrictPartition, mu: StrictPartition) -> set[ExcitedDiagram]:
    """Closure of the initial diagram under local moves; empty if lam is not in mu."""
    if not contains(lam, mu):
        return set()
    start = initial_diagram(lam, mu)
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for nxt in local_moves(d):
            k = nxt.key()
            if k not in seen:
                seen[k] = nxt
                queue.append(nxt)
    return set(seen.values())


def frakd_localization(lam: StrictPartition, mu: StrictPartition) -> int:
    """Diagram count of mu inside the staircase of height len(lam), times 2^(|mu|-len(mu))."""
    ambient = rho(len(lam))
    return len(enumerate_eyd(mu, ambient)) * 2 ** (mu.size() - len(mu))
