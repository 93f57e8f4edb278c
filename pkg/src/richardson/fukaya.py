"""Fukaya diagrams: matchings, decorations, text and SVG rendering.

Grid points are (row, col) with row 1 at the top.  Row k carries the bent
strand starting at i_k; column j carries a vertical strand for every j in J.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .perm import Permutation
from .shapes import Shape, weq_set, wle_set

Point = tuple[int, int]


class InadmissibleError(ValueError):
    """Raised when no diagram of the requested kind exists for (shape, w)."""


@dataclass(frozen=True)
class MatchedDiagram:
    shape: Shape
    w: Permutation
    marks: frozenset[Point]
    strong: bool

    def mark_col(self, row: int) -> int:
        """Column of the mark on the strand of row ``row``."""
        return self.shape.J[self.w.inverse()(row) - 1]


@dataclass(frozen=True)
class DecoratedDiagram:
    base: MatchedDiagram
    gm_nodes: frozenset[Point]
    a1_nodes: frozenset[Point]
    kind: str


def build_matched(sh: Shape, w: Permutation) -> MatchedDiagram:
    if w.n != sh.d:
        raise InadmissibleError(f"w={w} is not in S_{sh.d}")
    if w not in wle_set(sh):
        raise InadmissibleError(f"w={w} violates the monotonicity condition (<=) for {sh}")
    marks = frozenset((w(k), sh.J[k - 1]) for k in range(1, sh.d + 1))
    return MatchedDiagram(sh, w, marks, w in weq_set(sh))


def _gm_nodes(md: MatchedDiagram) -> set[Point]:
    I = md.shape.I
    return {(r, c) for r, c in md.marks if I[r - 1] != c}


def _between(md: MatchedDiagram, skip_j: bool) -> set[Point]:
    I, J = md.shape.I, set(md.shape.J)
    out = set()
    for r in range(1, md.shape.d + 1):
        for c in range(I[r - 1] + 1, md.mark_col(r)):
            if not (skip_j and c in J):
                out.add((r, c))
    return out


def gauss_decorate(md: MatchedDiagram) -> DecoratedDiagram:
    crosses = {
        (r, c) for r, c in _between(md, skip_j=False) if not any(mc == c and mr > r for mr, mc in md.marks)
    }
    return DecoratedDiagram(md, frozenset(_gm_nodes(md)), frozenset(crosses), "gauss")


def deodhar_decorate(md: MatchedDiagram) -> DecoratedDiagram:
    if not md.strong:
        raise InadmissibleError(f"w={md.w} violates the equality condition (=) for {md.shape}")
    sh, w = md.shape, md.w
    crosses = _between(md, skip_j=True)
    for r in range(1, sh.d + 1):
        left = md.mark_col(r)
        for kp in range(1, sh.d + 1):
            if w(kp) < r and left < sh.J[kp - 1]:
                crosses.add((r, sh.J[kp - 1]))
    return DecoratedDiagram(md, frozenset(_gm_nodes(md)), frozenset(crosses), "deodhar")


def decorate(sh: Shape, w: Permutation, kind: str) -> DecoratedDiagram:
    md = build_matched(sh, w)
    if kind == "gauss":
        return gauss_decorate(md)
    if kind == "deodhar":
        return deodhar_decorate(md)
    raise ValueError(f"kind must be 'gauss' or 'deodhar', got {kind!r}")


def node_counts(dd: DecoratedDiagram) -> tuple[int, int]:
    return (len(dd.gm_nodes), len(dd.a1_nodes))


def cohomological_choices(dd: DecoratedDiagram) -> list[frozenset[Point]]:
    """Subsets of Gm nodes to circle, in lexicographic order of sorted subsets."""
    nodes = sorted(dd.gm_nodes)
    subs = []
    for mask in range(1 << len(nodes)):
        subs.append(tuple(p for b, p in enumerate(nodes) if mask >> b & 1))
    return [frozenset(s) for s in sorted(subs)]


# Text grids.  Glyph priority: node, mark, leading entry, strand.

GLYPHS = {"lead": "1", "gm": "O", "circled": "o", "crossed": "X", "a1": "x", "mark": "*"}


def _strand_glyph(sh: Shape, r: int, c: int) -> str:
    horizontal = c > sh.I[r - 1]
    vertical = c in sh.J or any(c == sh.I[k - 1] for k in range(1, r))
    if horizontal and vertical:
        return "+"
    if horizontal:
        return "-"
    if vertical:
        return "|"
    return "."


def render_text(dd: DecoratedDiagram, circled: Iterable[Point] | None = None) -> str:
    md = dd.base
    sh = md.shape
    circ = None if circled is None else frozenset(circled)
    header = (
        f"kind={dd.kind} n={sh.n} I={','.join(map(str, sh.I))} "
        f"J={','.join(map(str, sh.J))} w={','.join(map(str, md.w.images))}"
    )
    if circ is not None:
        header += " cohomological"
    lines = [header, "   " + "".join(str(c % 10) for c in range(1, sh.n + 1))]
    for r in range(1, sh.d + 1):
        row = []
        for c in range(1, sh.n + 1):
            p = (r, c)
            if p in dd.gm_nodes:
                if circ is None:
                    g = GLYPHS["gm"]
                else:
                    g = GLYPHS["circled"] if p in circ else GLYPHS["crossed"]
            elif p in dd.a1_nodes:
                g = GLYPHS["a1"]
            elif p in md.marks:
                g = GLYPHS["mark"]
            elif c == sh.I[r - 1]:
                g = GLYPHS["lead"]
            else:
                g = _strand_glyph(sh, r, c)
            row.append(g)
        lines.append(f"{r:>2} " + "".join(row))
    return "\n".join(lines) + "\n"


_HEADER = re.compile(r"kind=(\w+) n=(\d+) I=([\d,]*) J=([\d,]*) w=([\d,]*)( cohomological)?")


def parse_text(text: str) -> tuple[DecoratedDiagram, frozenset[Point] | None]:
    """Inverse of render_text: rebuild the decoration from the grid glyphs."""
    lines = text.rstrip("\n").split("\n")
    m = _HEADER.fullmatch(lines[0].strip())
    if not m:
        raise ValueError(f"bad diagram header: {lines[0]!r}")
    kind, n = m.group(1), int(m.group(2))
    nums = lambda s: tuple(int(a) for a in s.split(",") if a)
    sh = Shape(n, nums(m.group(3)), nums(m.group(4)))
    w = Permutation(nums(m.group(5)))
    gm, a1, marks, circled = set(), set(), set(), set()
    has_choice = m.group(6) is not None
    for r, line in enumerate(lines[2:], start=1):
        for c, g in enumerate(line[3:], start=1):
            if g in "OoX":
                gm.add((r, c))
                marks.add((r, c))
                if g == "o":
                    circled.add((r, c))
            elif g == "x":
                a1.add((r, c))
            elif g == "*":
                marks.add((r, c))
    md = build_matched(sh, w)
    if marks != md.marks:
        raise ValueError("marks in grid disagree with the header permutation")
    dd = DecoratedDiagram(md, frozenset(gm), frozenset(a1), kind)
    return dd, (frozenset(circled) if has_choice else None)


# SVG.  Every Gm node is the only <circle> element; every A1 node is two
# <line> elements of class "a1".  Bare marks are drawn as small squares.

_CELL = 30.0


def _xy(r: float, c: float) -> tuple[float, float]:
    return (c * _CELL, r * _CELL)


def render_svg(dd: DecoratedDiagram, path: str | Path, circled: Iterable[Point] | None = None) -> Path:
    md = dd.base
    sh = md.shape
    circ = None if circled is None else frozenset(circled)
    width = (sh.n + 1) * _CELL
    height = (sh.d + 1) * _CELL
    out = [
        '<?xml version="1.0" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    top, bottom = 0.5, sh.d + 0.5
    for j in sh.J:
        (x0, y0), (x1, y1) = _xy(top, j), _xy(bottom, j)
        out.append(
            f'<polyline class="strand-j" points="{x0:.1f},{y0:.1f} {x1:.1f},{y1:.1f}" '
            'fill="none" stroke="firebrick" stroke-width="2"/>'
        )
    for r, i in enumerate(sh.I, start=1):
        pts = [_xy(top, i), _xy(r, i), _xy(r, sh.n + 0.5)]
        coords = " ".join(f"{x:.1f},{y:.1f}" for x, y in pts)
        out.append(f'<polyline class="strand-i" points="{coords}" fill="none" stroke="black" stroke-width="2"/>')
    for r, c in sorted(md.marks - dd.gm_nodes):
        x, y = _xy(r, c)
        out.append(f'<rect class="mark" x="{x - 4:.1f}" y="{y - 4:.1f}" width="8" height="8" fill="black"/>')
    for r, c in sorted(dd.gm_nodes):
        x, y = _xy(r, c)
        fill = "white" if circ is None or (r, c) in circ else "lightgray"
        out.append(
            f'<circle class="gm" cx="{x:.1f}" cy="{y:.1f}" r="9" fill="{fill}" stroke="black" stroke-width="2"/>'
        )
    h = 8.0
    for r, c in sorted(dd.a1_nodes):
        x, y = _xy(r, c)
        for dx in (h, -h):
            out.append(
                f'<line class="a1" x1="{x - h:.1f}" y1="{y - dx:.1f}" x2="{x + h:.1f}" y2="{y + dx:.1f}" '
                'stroke="navy" stroke-width="2"/>'
            )
    out.append("</svg>")
    path = Path(path)
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    return path
