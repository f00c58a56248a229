"""Counting and enumerating squares whose vertices lie on a lattice grid.

Two problem variants share the size-class structure:

* axis: only squares with sides parallel to the axes.  A square of side k
  fits in (cols-k)(rows-k) positions, which is exactly the rail picture:
  rows-k pairs of horizontal rails k units apart, cols-k slots per pair.
* all: tilted squares included.  Grouped by bounding-box size k, each box
  position admits k tilt offsets (a = 0..k-1), giving k(cols-k)(rows-k)
  squares per class.

``count_squares_by_point_subsets`` is a deliberately naive cross-check that
never looks at the (anchor, k, a) encoding: it tests every 4-point subset of
the grid for being a square.  Keep it slow and independent; its whole value
is that it can disagree with the enumerators above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .budget import OracleBudgetError
from .geometry import LatticeGrid, LatticePoint, Square


@dataclass(frozen=True)
class SizeClassBreakdown:
    """Counts per size class k, plus their sum.  Zero classes are omitted."""

    per_k: dict[int, int]
    total: int


@dataclass(frozen=True)
class RailReport:
    """One size class counted as rail pairs times positions per pair."""

    k: int
    rail_pairs: int
    per_pair: int
    total: int


def _check_grid_args(cols: int, rows: int) -> None:
    if cols < 1 or rows < 1:
        raise ValueError("grid needs at least one point column and row")


def count_axis_squares(cols: int, rows: int) -> SizeClassBreakdown:
    """Axis-aligned squares per side length k: (cols-k)(rows-k)."""
    _check_grid_args(cols, rows)
    per_k = {k: (cols - k) * (rows - k) for k in range(1, min(cols, rows))}
    return SizeClassBreakdown(per_k, sum(per_k.values()))


def count_all_squares(cols: int, rows: int) -> SizeClassBreakdown:
    """All squares per bounding-box size k: k(cols-k)(rows-k).

    Every bounding box admits one square per tilt offset, so the class for
    bounding size k is k times the axis class.
    """
    _check_grid_args(cols, rows)
    per_k = {k: k * (cols - k) * (rows - k) for k in range(1, min(cols, rows))}
    return SizeClassBreakdown(per_k, sum(per_k.values()))


def rail_decomposition(grid: LatticeGrid, k: int) -> RailReport:
    """Count the size-k axis class by sliding a pair of horizontal rails.

    The rails sit k units apart; there are rows-k positions for the pair and
    cols-k squares between each pair.
    """
    if not 1 <= k <= min(grid.cols, grid.rows) - 1:
        raise ValueError("no squares of this size fit")
    rail_pairs = grid.rows - k
    per_pair = grid.cols - k
    return RailReport(k, rail_pairs, per_pair, rail_pairs * per_pair)


def _guard_candidates(count: int, max_candidates: int | None) -> None:
    if max_candidates is not None and count > max_candidates:
        raise OracleBudgetError(
            f"oracle budget exceeded: {count} candidate squares > {max_candidates}"
        )


def enumerate_axis_squares(
    grid: LatticeGrid, max_candidates: int | None = None
) -> list[Square]:
    """Every axis-aligned square on the grid, ordered by (k, anchor.y, anchor.x)."""
    total = sum((grid.cols - k) * (grid.rows - k) for k in range(1, min(grid.cols, grid.rows)))
    _guard_candidates(total, max_candidates)
    return [
        Square(LatticePoint(x, y), k, 0)
        for k in range(1, min(grid.cols, grid.rows))
        for y in range(grid.rows - k)
        for x in range(grid.cols - k)
    ]


def enumerate_all_squares(
    grid: LatticeGrid, max_candidates: int | None = None
) -> list[Square]:
    """Every square (tilted or not) on the grid, ordered by (k, a, anchor.y, anchor.x)."""
    total = sum(
        k * (grid.cols - k) * (grid.rows - k) for k in range(1, min(grid.cols, grid.rows))
    )
    _guard_candidates(total, max_candidates)
    return [
        Square(LatticePoint(x, y), k, a)
        for k in range(1, min(grid.cols, grid.rows))
        for a in range(k)
        for y in range(grid.rows - k)
        for x in range(grid.cols - k)
    ]


def _is_square_quad(quad) -> bool:
    # Four distinct points form a square iff of the six pairwise squared
    # distances the four smallest are equal and the two largest equal twice that.
    ds = sorted(
        (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 for p, q in combinations(quad, 2)
    )
    return ds[0] > 0 and ds[0] == ds[1] == ds[2] == ds[3] and ds[4] == ds[5] == 2 * ds[0]


def _is_axis_square_quad(quad) -> bool:
    xs = sorted({p[0] for p in quad})
    ys = sorted({p[1] for p in quad})
    if len(xs) != 2 or len(ys) != 2 or xs[1] - xs[0] != ys[1] - ys[0]:
        return False
    return set(quad) == {(x, y) for x in xs for y in ys}


@lru_cache(maxsize=None)
def _subset_square_counts(cols: int, rows: int) -> tuple[int, int]:
    pts = [(x, y) for x in range(cols) for y in range(rows)]
    axis = every = 0
    for quad in combinations(pts, 4):
        if _is_square_quad(quad):
            every += 1
        if _is_axis_square_quad(quad):
            axis += 1
    return axis, every


def count_squares_by_point_subsets(grid: LatticeGrid, variant: str = "all") -> int:
    """Naive oracle: test all 4-point subsets of the grid for squareness.

    ``variant`` is "axis" or "all".  Runtime is O(points^4); intended for
    desk-scale grids only.
    """
    axis, every = _subset_square_counts(grid.cols, grid.rows)
    if variant == "axis":
        return axis
    if variant == "all":
        return every
    raise ValueError(f"unknown variant: {variant!r}")
