"""Plain-text rendering of tableaux and excited diagrams."""

from __future__ import annotations

from .eyd import ExcitedDiagram
from .tableaux import EdgeTableau


def render_tableau(t: EdgeTableau) -> str:
    """Grid of box labels (inner boxes as dots) with each nonempty edge set
    printed under its diagonal box."""
    outer = t.shape.outer
    if not len(outer):
        return "(empty)"
    width = max(
        [len(str(v)) for v in t.boxes.values()]
        + [len(str(v)) for e in t.edges.values() for v in e]
        + [1]
    )
    lines = []
    for i in range(1, len(outer) + 1):
        cells = []
        for j in range(1, outer[0] + 1):
            if j < i or j > outer[i - 1] + i - 1:
                cells.append(" " * width)
            elif (i, j) in t.boxes:
                cells.append(str(t.boxes[(i, j)]).rjust(width))
            elif t.shape.has_box(i, j):
                cells.append("?".rjust(width))
            else:
                cells.append(".".rjust(width))
        lines.append(" ".join(cells).rstrip())
        edge = t.edge(i)
        if edge:
            indent = " " * ((width + 1) * (i - 1))
            lines.append(indent + "{" + ",".join(str(v) for v in edge) + "}")
    return "\n".join(lines)


def render_diagram(d: ExcitedDiagram) -> str:
    """Ambient shape with plus marks."""
    mu = d.ambient
    if not len(mu):
        return "(empty)"
    lines = []
    for i in range(1, len(mu) + 1):
        cells = []
        for j in range(1, mu[0] + 1):
            if not mu.has_box(i, j):
                cells.append(" ")
            elif (i, j) in d.pluses:
                cells.append("+")
            else:
                cells.append(".")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
