"""Deterministic SVG figures for counting problems.

Everything is emitted as plain strings with integer coordinates, in a fixed
element order, so identical inputs produce byte-identical files.  Square
problems draw the point grid with every counted square as a polygon; word
problems draw the letter table.  A highlight either marks one size class of
squares or traces one enumerated witness as an arrowed polyline.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .budget import DEFAULT_ORACLE_BUDGET
from .geometry import LatticeGrid, square_vertices
from .speclang import ProblemSpec
from .squares import enumerate_all_squares, enumerate_axis_squares
from .wordgrid import enumerate_word_paths, generate_manhattan_rings, letter_grid_from_rows

Highlight = tuple[str, int]  # ("class", k) or ("witness", index)


def _document(width: int, height: int, cell_size: int, body: list[str]) -> str:
    font = max(cell_size // 2, 6)
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<style>",
        ".pt { fill: #333333; }",
        ".sq { fill: none; stroke: #999999; stroke-width: 2; }",
        ".sq.hl { fill: none; stroke: #cc3333; stroke-width: 3; }",
        ".cell { fill: #ffffff; stroke: #555555; }",
        f".glyph {{ font-family: monospace; font-size: {font}px; text-anchor: middle; }}",
        ".witness { fill: none; stroke: #cc3333; stroke-width: 3; }",
        "</style>",
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto">',
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#cc3333"/>',
        "</marker>",
        "</defs>",
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _squares_figure(spec: ProblemSpec, cell_size: int, highlight: Highlight | None) -> str:
    grid = LatticeGrid(spec.cols, spec.rows)
    if spec.variant == "axis":
        squares = enumerate_axis_squares(grid, max_candidates=DEFAULT_ORACLE_BUDGET)
    else:
        squares = enumerate_all_squares(grid, max_candidates=DEFAULT_ORACLE_BUDGET)

    highlighted = set()
    if highlight is not None:
        mode, value = highlight
        if mode == "class":
            highlighted = {i for i, s in enumerate(squares) if s.k == value}
            if not highlighted:
                raise ValueError(f"no squares in size class k={value}")
        else:
            if not 0 <= value < len(squares):
                raise ValueError(f"witness index {value} out of range (have {len(squares)})")
            highlighted = {value}

    margin = cell_size
    width = 2 * margin + (grid.cols - 1) * cell_size
    height = 2 * margin + (grid.rows - 1) * cell_size

    def px(x: int) -> int:
        return margin + x * cell_size

    def py(y: int) -> int:
        # lattice y grows upward, svg y grows downward
        return margin + (grid.rows - 1 - y) * cell_size

    body = []
    for i, s in enumerate(squares):
        pts = " ".join(f"{px(v.x)},{py(v.y)}" for v in square_vertices(s))
        cls = "sq hl" if i in highlighted else "sq"
        body.append(f'<polygon class="{cls}" points="{pts}"/>')
    radius = max(cell_size // 10, 2)
    for x in range(grid.cols):
        for y in range(grid.rows):
            body.append(f'<circle class="pt" cx="{px(x)}" cy="{py(y)}" r="{radius}"/>')
    return _document(width, height, cell_size, body)


def _word_figure(spec: ProblemSpec, cell_size: int, highlight: Highlight | None) -> str:
    if spec.layout == "explicit":
        grid = letter_grid_from_rows(spec.rows_data)
    else:
        grid = generate_manhattan_rings(spec.word)

    witness = None
    if highlight is not None:
        mode, value = highlight
        if mode == "class":
            raise ValueError("size-class highlight only applies to squares problems")
        witnesses = enumerate_word_paths(
            grid, spec.word, spec.adjacency, spec.distinct_cells,
            max_visits=DEFAULT_ORACLE_BUDGET,
        )
        if not 0 <= value < len(witnesses):
            raise ValueError(f"witness index {value} out of range (have {len(witnesses)})")
        witness = witnesses[value]

    margin = cell_size // 2
    width = 2 * margin + grid.cols * cell_size
    height = 2 * margin + grid.rows * cell_size
    font = max(cell_size // 2, 6)

    body = []
    for y in range(grid.rows):
        for x in range(grid.cols):
            left = margin + x * cell_size
            top = margin + y * cell_size
            body.append(
                f'<rect class="cell" x="{left}" y="{top}" '
                f'width="{cell_size}" height="{cell_size}"/>'
            )
    for y in range(grid.rows):
        for x in range(grid.cols):
            cx = margin + x * cell_size + cell_size // 2
            cy = margin + y * cell_size + cell_size // 2 + font // 3
            body.append(
                f'<text class="glyph" x="{cx}" y="{cy}">{escape(grid.cells[(x, y)])}</text>'
            )
    if witness is not None:
        pts = " ".join(
            f"{margin + x * cell_size + cell_size // 2},{margin + y * cell_size + cell_size // 2}"
            for x, y in witness.cells
        )
        body.append(f'<polyline class="witness" points="{pts}" marker-end="url(#arrow)"/>')
    return _document(width, height, cell_size, body)


def render_problem(
    spec: ProblemSpec, cell_size: int = 40, highlight: Highlight | None = None
) -> str:
    """The SVG figure for one problem, as text."""
    if cell_size < 1:
        raise ValueError("cell size must be positive")
    if spec.kind == "squares":
        return _squares_figure(spec, cell_size, highlight)
    return _word_figure(spec, cell_size, highlight)
