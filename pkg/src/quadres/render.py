"""Deterministic ASCII and SVG renderings of paths and boards.

SVG output uses only rect, line, polyline, circle, and text elements, with
the y axis flipped so the origin renders at the lower left.  Identical
inputs always produce byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .billiards import BilliardPath, Wall, bottom_bounce_times
from .checkers import Board, CheckerSet, PebbleSet


@dataclass(frozen=True)
class RenderSpec:
    cell_px: int = 24
    show_grid: bool = True
    color_before: str = "steelblue"
    color_after: str = "darkorange"
    annotate_signs: bool = True

    def __post_init__(self) -> None:
        if self.cell_px < 4:
            raise ValueError(f"cell_px must be >= 4, got {self.cell_px}")


def render_path_svg(path: BilliardPath, spec: RenderSpec | None = None, split_k: int | None = None) -> str:
    """Standalone SVG of a billiard path.

    With split_k the polyline is cut at the bottom bounce at (2k, 0) and the
    two halves get distinct stroke colors; without it the whole path uses
    color_before.  Bottom bounces are labeled +/- below the base when
    annotate_signs is set.
    """
    spec = spec or RenderSpec()
    m, n = path.rect.m, path.rect.n
    px = spec.cell_px
    margin = px
    width = n * px + 2 * margin
    height = m * px + 2 * margin

    def sx(x: int) -> int:
        return margin + x * px

    def sy(y: int) -> int:
        return margin + (m - y) * px

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f'<rect x="{sx(0)}" y="{sy(m)}" width="{n * px}" height="{m * px}" fill="white" stroke="black"/>',
    ]
    if spec.show_grid:
        for gx in range(1, n):
            parts.append(
                f'<line x1="{sx(gx)}" y1="{sy(0)}" x2="{sx(gx)}" y2="{sy(m)}" stroke="lightgray"/>'
            )
        for gy in range(1, m):
            parts.append(
                f'<line x1="{sx(0)}" y1="{sy(gy)}" x2="{sx(n)}" y2="{sy(gy)}" stroke="lightgray"/>'
            )

    def polyline(points: list[tuple[int, int]], color: str) -> str:
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in points)
        return f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'

    vertices = list(path.vertices)
    if split_k is None:
        parts.append(polyline(vertices, spec.color_before))
    else:
        tk = bottom_bounce_times(path).get(2 * split_k)
        if tk is None:
            raise ValueError(f"no bottom bounce at ({2 * split_k}, 0) to split at")
        times = path.vertex_times()
        cut = times.index(tk)
        parts.append(polyline(vertices[: cut + 1], spec.color_before))
        parts.append(polyline(vertices[cut:], spec.color_after))

    if spec.annotate_signs:
        for b in path.bounces:
            if b.wall is Wall.BOTTOM:
                label = "+" if b.sign > 0 else "-"
                parts.append(
                    f'<text x="{sx(b.x)}" y="{sy(0) + px // 2 + 4}" '
                    f'text-anchor="middle" font-size="{px // 2 + 4}">{label}</text>'
                )

    parts.append("</svg>")
    return "\n".join(parts)


def render_board_ascii(board: Board, pebbles: PebbleSet | None = None, checkers: CheckerSet | None = None) -> str:
    """One character per square: '#' dark, '.' light, 'o' pebble, 'O' checker.

    The top row is printed first so the bottom row comes last, matching the
    board's row-0-at-the-bottom convention.
    """
    pebble_squares = pebbles.squares if pebbles else frozenset()
    checker_squares = checkers.squares if checkers else frozenset()
    lines = []
    for row in range(board.rows - 1, -1, -1):
        chars = []
        for col in range(board.cols):
            if (col, row) in checker_squares:
                chars.append("O")
            elif (col, row) in pebble_squares:
                chars.append("o")
            elif board.is_dark(col, row):
                chars.append("#")
            else:
                chars.append(".")
        lines.append("".join(chars))
    return "\n".join(lines)


def render_board_svg(board: Board, pebbles: PebbleSet | None = None, checkers: CheckerSet | None = None,
                     cell_px: int = 24) -> str:
    """Standalone SVG of a checkerboard with pebbles and checkers as circles."""
    if cell_px < 4:
        raise ValueError(f"cell_px must be >= 4, got {cell_px}")
    px = cell_px
    width = max(board.cols, 1) * px
    height = max(board.rows, 1) * px

    def corner(col: int, row: int) -> tuple[int, int]:
        return col * px, (board.rows - 1 - row) * px

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">']
    for row in range(board.rows):
        for col in range(board.cols):
            x, y = corner(col, row)
            fill = "lightgray" if board.is_dark(col, row) else "white"
            parts.append(f'<rect x="{x}" y="{y}" width="{px}" height="{px}" fill="{fill}" stroke="gray"/>')
    pebble_squares = pebbles.squares if pebbles else frozenset()
    checker_squares = checkers.squares if checkers else frozenset()
    for col, row in sorted(pebble_squares):
        x, y = corner(col, row)
        parts.append(f'<circle cx="{x + px // 2}" cy="{y + px // 2}" r="{px // 5}" fill="black"/>')
    for col, row in sorted(checker_squares):
        x, y = corner(col, row)
        parts.append(
            f'<circle cx="{x + px // 2}" cy="{y + px // 2}" r="{px // 3}" fill="firebrick" stroke="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
