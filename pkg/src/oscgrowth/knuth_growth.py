"""Knuth-type growth sweeps for integer fillings, by refinement to 0-1 grids.

Every cell entry e is split into e crosses forming a chain inside the cell,
and coarse rows/columns are split into enough fine lines that the refined
filling is standard.  The chain orientation is one module-wide convention:
with rows read bottom-to-top and columns right-to-left (the frame all the
in-place sweeps here use), crosses sharing a coarse line are stacked so that
lower crosses sit further right — the mirrored directions flip this together
with the geometry.  Boundary words refine correspondingly: vertical-strip
steps split top row first, horizontal-strip steps split leftmost column
first.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable, Sequence

from .growth import (
    FROM_TOP_LEFT,
    FROM_TOP_RIGHT,
    TO_TOP_RIGHT,
    BoundaryError,
    CellArrangement,
    Corner,
    Filling,
    backward_sweep,
    forward_sweep,
)
from .partitions import (
    Partition,
    format_partition,
    is_horizontal_step,
    is_vertical_step,
    skew_cells,
)

TO_TOP_LEFT = "to_top_left"


class RefinedIndexMap:
    """Bookkeeping between coarse grid lines and their fine expansions."""

    __slots__ = ("col_starts", "row_starts")

    def __init__(self, col_starts: Sequence[int], row_starts: Sequence[int]):
        self.col_starts = tuple(col_starts)
        self.row_starts = tuple(row_starts)

    def fine_corner(self, a: int, b: int) -> Corner:
        return (self.col_starts[a], self.row_starts[b])

    def coarse_cell(self, fx: int, fy: int) -> Corner:
        return (
            bisect_right(self.col_starts, fx) - 1,
            bisect_right(self.row_starts, fy) - 1,
        )

    def col_interval(self, x: int) -> tuple[int, int]:
        return (self.col_starts[x], self.col_starts[x + 1])

    def row_interval(self, y: int) -> tuple[int, int]:
        return (self.row_starts[y], self.row_starts[y + 1])


class GeneralizedBoundaryWord:
    """Partitions at every corner (outer and inner) along a boundary."""

    __slots__ = ("corners", "partitions")

    def __init__(self, corners: Iterable[Corner], partitions: Iterable[Partition]):
        self.corners = tuple(corners)
        self.partitions = tuple(partitions)
        if len(self.corners) != len(self.partitions):
            raise ValueError("one partition per corner, please")

    def __iter__(self):
        return iter(self.partitions)

    def __len__(self):
        return len(self.partitions)

    def __getitem__(self, i):
        return self.partitions[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, GeneralizedBoundaryWord):
            return other.partitions == self.partitions and other.corners == self.corners
        return tuple(other) == self.partitions

    def __hash__(self) -> int:
        return hash((self.corners, self.partitions))

    def __repr__(self) -> str:
        return "GeneralizedBoundaryWord(" + ", ".join(format_partition(p) for p in self.partitions) + ")"


def _starts(sums: Sequence[int]) -> tuple[int, ...]:
    starts = [0]
    for s in sums:
        starts.append(starts[-1] + max(1, s))
    return tuple(starts)


def refine(arr: CellArrangement, filling: Filling) -> tuple[CellArrangement, Filling, RefinedIndexMap]:
    """Standardize an integer filling into a 0-1 filling on a finer grid."""
    if filling.arrangement != arr:
        raise ValueError("filling belongs to a different arrangement")
    col_sums = filling.col_sums()
    row_sums = filling.row_sums()
    index = RefinedIndexMap(_starts(col_sums), _starts(row_sums))
    fine_heights: list[int] = []
    for x, h in enumerate(arr.heights):
        fine_heights.extend([index.row_starts[h]] * max(1, col_sums[x]))
    fine_arr = CellArrangement(fine_heights)
    fine_col: dict[tuple[int, int, int], int] = {}
    fine_row: dict[tuple[int, int, int], int] = {}
    for x in range(arr.width):
        pos = 0
        for y in range(arr.height):
            for t in range(filling.value(x, y)):
                fine_col[(x, y, t)] = index.col_starts[x + 1] - 1 - pos
                pos += 1
    for y in range(arr.height):
        pos = 0
        for x in range(arr.width - 1, -1, -1):
            for t in range(filling.value(x, y)):
                fine_row[(x, y, t)] = index.row_starts[y] + pos
                pos += 1
    entries = {
        (fine_col[key], fine_row[key]): 1 for key in fine_col
    }
    return fine_arr, Filling(fine_arr, entries), index


def _coarsen(fine: Filling, arr: CellArrangement, index: RefinedIndexMap) -> Filling:
    entries: dict[Corner, int] = {}
    for (fx, fy), v in fine.entries.items():
        cell = index.coarse_cell(fx, fy)
        entries[cell] = entries.get(cell, 0) + v
    return Filling(arr, entries)


def _strip_path(mu: Partition, lam: Partition, kind: str) -> list[Partition]:
    """Single-square chain from mu to lam through a strip, endpoints included.

    Vertical strips are filled top row first, horizontal strips leftmost
    column first; both orders always pass through valid partitions.
    """
    cells = skew_cells(mu, lam)
    if kind == "vertical":
        cells.sort(key=lambda rc: rc[0])
    else:
        cells.sort(key=lambda rc: rc[1])
    path = [mu]
    for (r, _) in cells:
        path.append(path[-1].add_cell(r))
    assert path[-1] == lam
    return path


def _refined_word(
    word: Sequence[Partition],
    edges: Sequence[tuple[str, int]],
    sums_by_edge: Sequence[int],
    kind: str,
) -> list[Partition]:
    """Expand each coarse boundary step into its single-square fine steps."""
    fine = [word[0]]
    for i, ((direction, _), s) in enumerate(zip(edges, sums_by_edge)):
        a, b = word[i], word[i + 1]
        if direction == "grow":
            path = _strip_path(a, b, kind)
        else:
            path = list(reversed(_strip_path(b, a, kind)))
        if s == 0:
            # a zero-sum line still occupies one fine line: one equal step
            path = [a, b]
        fine.extend(path[1:])
    return fine


def knuth_forward_sweep(
    arr: CellArrangement, filling: Filling, direction: str = TO_TOP_RIGHT
) -> GeneralizedBoundaryWord:
    """Forward sweep of an integer filling, read at every coarse corner.

    TO_TOP_RIGHT labels the top-right boundary (top-left end first).
    TO_TOP_LEFT (rectangles only) sweeps from empty bottom/right boundaries
    and labels the top-left boundary from its bottom-left end.
    """
    if direction == TO_TOP_LEFT:
        if not arr.is_rectangle:
            raise ValueError(f"{direction} needs a rectangular arrangement")
        fine_arr, fine_filling, index = refine(arr, filling)
        diagram = forward_sweep(fine_arr, fine_filling.mirror_x())
        fine_width = fine_arr.width
        corners = [(0, b) for b in range(arr.height + 1)]
        corners += [(a, arr.height) for a in range(1, arr.width + 1)]
        parts = [
            diagram.label(fine_width - index.col_starts[a], index.row_starts[b])
            for (a, b) in corners
        ]
        return GeneralizedBoundaryWord(corners, parts)
    if direction != TO_TOP_RIGHT:
        raise ValueError(f"unknown forward direction {direction!r}")
    fine_arr, fine_filling, index = refine(arr, filling)
    diagram = forward_sweep(fine_arr, fine_filling)
    corners = arr.boundary_corners()
    parts = [diagram.label(*index.fine_corner(a, b)) for (a, b) in corners]
    return GeneralizedBoundaryWord(corners, parts)


def _step_sums_top_right(arr: CellArrangement, word: Sequence[Partition]):
    """Column/row sums and edge descriptors for a top-right boundary word."""
    corners = arr.boundary_corners()
    if len(word) != len(corners):
        raise BoundaryError(f"word has {len(word)} labels for {len(corners)} boundary corners")
    col_sums = [0] * arr.width
    row_sums = [0] * arr.height
    edges: list[tuple[str, int]] = []
    sums: list[int] = []
    for i, edge in enumerate(arr.boundary_edges()):
        a, b = word[i], word[i + 1]
        if edge == "H":
            x = corners[i][0]
            if not is_vertical_step(a, b):
                raise BoundaryError(
                    f"boundary step {i}: {format_partition(a)} -> {format_partition(b)} is not a vertical strip"
                )
            col_sums[x] = b.size - a.size
            edges.append(("grow", x))
            sums.append(col_sums[x])
        else:
            y = corners[i + 1][1]
            if not is_vertical_step(b, a):
                raise BoundaryError(
                    f"boundary step {i}: {format_partition(a)} -> {format_partition(b)} is not a vertical co-strip"
                )
            row_sums[y] = a.size - b.size
            edges.append(("shrink", y))
            sums.append(row_sums[y])
    return col_sums, row_sums, edges, sums


def knuth_backward_sweep(
    arr: CellArrangement,
    word: Sequence[Partition] | GeneralizedBoundaryWord,
    direction: str = FROM_TOP_RIGHT,
) -> Filling:
    """Reconstruct the integer filling from a coarse boundary labelling.

    FROM_TOP_RIGHT consumes a generalized word (vertical-strip steps) along
    the top-right boundary.  FROM_TOP_LEFT (rectangles only) consumes a
    horizontal-strip chain word running up the left boundary and back along
    the top, as a tableau pair placed on a square.
    """
    word = list(word)
    if direction == FROM_TOP_RIGHT:
        col_sums, row_sums, edges, sums = _step_sums_top_right(arr, word)
        index = RefinedIndexMap(_starts(col_sums), _starts(row_sums))
        fine_heights: list[int] = []
        for x, h in enumerate(arr.heights):
            fine_heights.extend([index.row_starts[h]] * max(1, col_sums[x]))
        fine_arr = CellArrangement(fine_heights)
        fine_word = _refined_word(word, edges, sums, "vertical")
        fine = backward_sweep(fine_arr, fine_word, FROM_TOP_RIGHT)
        return _coarsen(fine, arr, index)
    if direction != FROM_TOP_LEFT:
        raise ValueError(f"unknown backward direction {direction!r}")
    if not arr.is_rectangle:
        raise ValueError(f"{direction} needs a rectangular arrangement")
    expected = arr.width + arr.height + 1
    if len(word) != expected:
        raise BoundaryError(f"word has {len(word)} labels, expected {expected}")
    row_sums = [0] * arr.height
    col_sums = [0] * arr.width
    edges = []
    sums = []
    for b in range(arr.height):
        a_part, b_part = word[b], word[b + 1]
        if not is_horizontal_step(a_part, b_part):
            raise BoundaryError(
                f"left step {b}: {format_partition(a_part)} -> {format_partition(b_part)} is not a horizontal strip"
            )
        row_sums[b] = b_part.size - a_part.size
        edges.append(("grow", b))
        sums.append(row_sums[b])
    for a in range(arr.width):
        i = arr.height + a
        a_part, b_part = word[i], word[i + 1]
        if not is_horizontal_step(b_part, a_part):
            raise BoundaryError(
                f"top step {a}: {format_partition(a_part)} -> {format_partition(b_part)} is not a horizontal co-strip"
            )
        col_sums[a] = a_part.size - b_part.size
        edges.append(("shrink", a))
        sums.append(col_sums[a])
    index = RefinedIndexMap(_starts(col_sums), _starts(row_sums))
    fine_arr = CellArrangement.rectangle(index.col_starts[-1], index.row_starts[-1])
    fine_word = _refined_word(word, edges, sums, "horizontal")
    fine = backward_sweep(fine_arr, fine_word, FROM_TOP_LEFT)
    return _coarsen(fine, arr, index)
