"""Letter grids and word-reading paths.

A reading of a word in a letter grid is a sequence of cells that spells the
word, with consecutive cells constrained by an adjacency rule:

* ``side``: consecutive cells must share an edge,
* ``king``: share an edge or a corner,
* ``none``: unconstrained (any cell holding the next symbol, repeats allowed).

``enumerate_word_paths`` is the brute-force oracle: depth-first extension from
every starting cell, emitting witnesses in lexicographic order of their
coordinate sequences (cells compare as (x, y) tuples).

The manhattan-rings layout is the symmetric board the closed form applies to:
an LxL grid (L odd) whose cell at Manhattan distance d from the center holds
the d-th symbol of the word.  Under side adjacency and pairwise-distinct
symbols, every reading walks strictly outward from the center to one of the
four corners, and each corner class is a count of U/R move interleavings:

    total = 4 * C(L-1, (L-1)/2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .budget import OracleBudgetError
from .counting import MoveWord, count_move_words

AdjacencyRule = Literal["side", "king", "none"]

ADJACENCY_RULES = ("side", "king", "none")

_SIDE_OFFSETS = ((-1, 0), (0, -1), (0, 1), (1, 0))
_KING_OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


@dataclass(frozen=True)
class LetterGrid:
    """A cols x rows table of single symbols, keyed by (x, y) cell coordinates."""

    cols: int
    rows: int
    cells: dict[tuple[int, int], str]

    def __post_init__(self):
        if self.cols < 1 or self.rows < 1:
            raise ValueError("letter grid needs at least one cell")
        expected = {(x, y) for x in range(self.cols) for y in range(self.rows)}
        if set(self.cells) != expected:
            raise ValueError("cells must cover every (x, y) in the grid exactly")
        for xy, sym in self.cells.items():
            if len(sym) != 1:
                raise ValueError(f"cell {xy} must hold a single symbol")


@dataclass(frozen=True)
class PathWitness:
    """One concrete reading: the cell coordinates visited, in order."""

    cells: tuple[tuple[int, int], ...]

    @property
    def final_cell(self) -> tuple[int, int]:
        return self.cells[-1]


@dataclass(frozen=True)
class CornerClassReport:
    """Witness counts grouped by terminal cell."""

    classes: dict[tuple[int, int], int]
    total: int


@dataclass(frozen=True)
class CountReport:
    """A closed-form count with its per-terminal-cell class sizes."""

    total: int
    per_class: dict[tuple[int, int], int]
    formula: str


def letter_grid_from_rows(rows_data) -> LetterGrid:
    """Build a grid from equal-length row strings, top row first.

    Cell (x, y) is character x of row y, so y counts downward in reading
    order.
    """
    rows = list(rows_data)
    if not rows or any(not row for row in rows):
        raise ValueError("rows must be non-empty")
    if len({len(row) for row in rows}) != 1:
        raise ValueError("rows must all have the same length")
    cells = {(x, y): ch for y, row in enumerate(rows) for x, ch in enumerate(row)}
    return LetterGrid(len(rows[0]), len(rows), cells)


def generate_manhattan_rings(word: str) -> LetterGrid:
    """The LxL grid (L = len(word), odd) with word[d] at Manhattan distance d.

    The center holds the first symbol and the four corners the last one; ring
    d holds 4*min(d, L-d) cells.
    """
    length = len(word)
    if length < 1 or length % 2 == 0:
        raise ValueError("manhattan-rings layout requires odd word length")
    c = (length - 1) // 2
    cells = {
        (x, y): word[abs(x - c) + abs(y - c)]
        for x in range(length)
        for y in range(length)
    }
    return LetterGrid(length, length, cells)


def _cells_by_symbol(grid: LetterGrid) -> dict[str, list[tuple[int, int]]]:
    by_sym: dict[str, list[tuple[int, int]]] = {}
    for xy in sorted(grid.cells):
        by_sym.setdefault(grid.cells[xy], []).append(xy)
    return by_sym


def enumerate_word_paths(
    grid: LetterGrid,
    word: str,
    adjacency: AdjacencyRule = "side",
    distinct_cells: bool = False,
    max_visits: int | None = None,
) -> list[PathWitness]:
    """All readings of ``word`` in the grid, in lexicographic coordinate order.

    Depth-first search from every cell holding the first symbol; candidates
    are tried in ascending (x, y) order, which makes the output order
    lexicographic.  ``max_visits`` caps the number of cells the search may
    touch; exceeding it raises OracleBudgetError.
    """
    if adjacency not in ADJACENCY_RULES:
        raise ValueError(f"unknown adjacency rule: {adjacency!r}")
    if len(word) < 1:
        raise ValueError("word must be non-empty")

    by_sym = _cells_by_symbol(grid)
    offsets = _SIDE_OFFSETS if adjacency == "side" else _KING_OFFSETS
    witnesses: list[PathWitness] = []
    path: list[tuple[int, int]] = []
    on_path: set[tuple[int, int]] = set()
    visits = 0

    def candidates(cell: tuple[int, int], symbol: str) -> list[tuple[int, int]]:
        if adjacency == "none":
            return by_sym.get(symbol, [])
        found = [
            (cell[0] + dx, cell[1] + dy)
            for dx, dy in offsets
            if grid.cells.get((cell[0] + dx, cell[1] + dy)) == symbol
        ]
        found.sort()
        return found

    def extend(i: int, cell: tuple[int, int]) -> None:
        nonlocal visits
        visits += 1
        if max_visits is not None and visits > max_visits:
            raise OracleBudgetError(
                f"oracle budget exceeded: more than {max_visits} cell visits"
            )
        path.append(cell)
        on_path.add(cell)
        if i == len(word) - 1:
            witnesses.append(PathWitness(tuple(path)))
        else:
            for nxt in candidates(cell, word[i + 1]):
                if distinct_cells and nxt in on_path:
                    continue
                extend(i + 1, nxt)
        path.pop()
        if cell not in path:
            on_path.discard(cell)

    for start in by_sym.get(word[0], []):
        extend(0, start)
    return witnesses


def corner_class_decomposition(witnesses) -> CornerClassReport:
    """Group witnesses by their final cell."""
    classes: dict[tuple[int, int], int] = {}
    total = 0
    for w in witnesses:
        classes[w.final_cell] = classes.get(w.final_cell, 0) + 1
        total += 1
    return CornerClassReport(dict(sorted(classes.items())), total)


def count_word_paths_closed(word: str) -> CountReport:
    """Closed-form reading count on the manhattan-rings board, side adjacency.

    Valid when the word's symbols are pairwise distinct (each ring then holds
    exactly one symbol and every path moves strictly outward).  The four
    corner classes are symmetric; each one counts the interleavings of
    (L-1)/2 upward and (L-1)/2 sideways moves.
    """
    length = len(word)
    if length < 1 or length % 2 == 0:
        raise ValueError("manhattan-rings layout requires odd word length")
    if length == 1:
        return CountReport(1, {(0, 0): 1}, "1")
    half = (length - 1) // 2
    per_corner = count_move_words(MoveWord(half, half))
    corners = {
        (x, y): per_corner for x in (0, length - 1) for y in (0, length - 1)
    }
    return CountReport(
        4 * per_corner, dict(sorted(corners.items())), f"4 × {per_corner} = {4 * per_corner}"
    )


def count_paths_by_symbol_product(grid: LetterGrid, word: str) -> int:
    """Unconstrained reading count: the product of per-symbol cell counts.

    With no adjacency rule every cell tuple spelling the word is a reading,
    so the count multiplies out one factor per position.
    """
    if len(word) < 1:
        raise ValueError("word must be non-empty")
    by_sym = _cells_by_symbol(grid)
    total = 1
    for ch in word:
        total *= len(by_sym.get(ch, ()))
    return total
