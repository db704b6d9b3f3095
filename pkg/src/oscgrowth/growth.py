"""The 0-1 growth-diagram engine.

Cell arrangements live in Cartesian coordinates: column x (from the left),
row y (from the bottom), cells indexed by their lower-left unit corner.
Forward sweeps label every corner starting from empty partitions on the left
and bottom boundaries; backward sweeps reconstruct the filling from a
labelling of the top-right boundary.  Mirrored sweep directions are realized
by reflecting the arrangement, so only one forward and one backward kernel
exist.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .jeu_de_taquin import schensted
from .partitions import EMPTY, Partition, contains, format_partition, intersection, union
from .tableaux import StandardTableau, from_chain

Corner = tuple[int, int]

TO_TOP_RIGHT = "to_top_right"
TO_BOTTOM_RIGHT = "to_bottom_right"
FROM_TOP_RIGHT = "from_top_right"
FROM_TOP_LEFT = "from_top_left"


class GrowthError(ValueError):
    """Malformed local data in a growth diagram."""


class FillingError(GrowthError):
    """A filling is not a standard 0-1 filling where one is required."""


class BoundaryError(GrowthError):
    """A boundary word violates the oscillation/containment conditions."""


class ReconstructionError(GrowthError):
    """A backward sweep met an inconsistent cell."""


class CapacityError(GrowthError):
    """A brute-force oracle was asked for more than it can chew."""


class CellArrangement:
    """Left- and bottom-justified cells given by weakly decreasing column heights."""

    __slots__ = ("heights",)

    def __init__(self, heights: Iterable[int]):
        heights = tuple(int(h) for h in heights)
        while heights and heights[-1] == 0:
            heights = heights[:-1]
        for i, h in enumerate(heights):
            if h < 0:
                raise ValueError(f"negative column height at column {i}")
            if i and h > heights[i - 1]:
                raise ValueError(f"column heights must weakly decrease: {heights}")
        self.heights = heights

    @classmethod
    def square(cls, n: int) -> "CellArrangement":
        return cls((n,) * n)

    @classmethod
    def rectangle(cls, width: int, height: int) -> "CellArrangement":
        return cls((height,) * width)

    @classmethod
    def staircase(cls, n: int) -> "CellArrangement":
        """Heights n-1, n-2, ..., 1: the lower half of the n x n square."""
        return cls(range(n - 1, 0, -1))

    @property
    def width(self) -> int:
        return len(self.heights)

    @property
    def height(self) -> int:
        return self.heights[0] if self.heights else 0

    @property
    def num_cells(self) -> int:
        return sum(self.heights)

    @property
    def is_rectangle(self) -> bool:
        return all(h == self.height for h in self.heights)

    def has_cell(self, x: int, y: int) -> bool:
        return 0 <= x < self.width and 0 <= y < self.heights[x]

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells in sweep order: bottom row first, left to right."""
        for y in range(self.height):
            for x in range(self.width):
                if y < self.heights[x]:
                    yield (x, y)

    def column_height(self, x: int) -> int:
        return self.heights[x] if x < self.width else 0

    def boundary_corners(self) -> list[Corner]:
        """Corners along the top-right boundary, top-left end first."""
        if not self.heights:
            return [(0, 0)]
        corners = [(0, self.heights[0])]
        for x, h in enumerate(self.heights):
            corners.append((x + 1, h))
            nxt = self.column_height(x + 1)
            corners.extend((x + 1, y) for y in range(h - 1, nxt - 1, -1))
        return corners

    def boundary_edges(self) -> list[str]:
        """Orientation tags ('H'/'V') between consecutive boundary corners."""
        corners = self.boundary_corners()
        return ["H" if b[0] != a[0] else "V" for a, b in zip(corners, corners[1:])]

    def transpose(self) -> "CellArrangement":
        return CellArrangement(
            sum(1 for h in self.heights if h > y) for y in range(self.height)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, CellArrangement) and other.heights == self.heights

    def __hash__(self) -> int:
        return hash(self.heights)

    def __repr__(self) -> str:
        return f"CellArrangement({list(self.heights)})"


class Filling:
    """Non-negative integer entries on the cells of an arrangement."""

    __slots__ = ("arrangement", "entries")

    def __init__(self, arrangement: CellArrangement, entries: Mapping[Corner, int] | Iterable[tuple[Corner, int]] = ()):
        self.arrangement = arrangement
        items = entries.items() if isinstance(entries, Mapping) else entries
        store: dict[Corner, int] = {}
        for (x, y), v in items:
            if v < 0:
                raise ValueError(f"negative entry at cell ({x}, {y})")
            if v == 0:
                continue
            if not arrangement.has_cell(x, y):
                raise ValueError(f"cell ({x}, {y}) lies outside the arrangement")
            store[(x, y)] = store.get((x, y), 0) + v
        self.entries = store

    def value(self, x: int, y: int) -> int:
        return self.entries.get((x, y), 0)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def is_standard01(self) -> bool:
        try:
            self.require_standard01()
        except FillingError:
            return False
        return True

    def require_standard01(self) -> None:
        rows: set[int] = set()
        cols: set[int] = set()
        for (x, y), v in self.entries.items():
            if v != 1:
                raise FillingError(f"entry {v} at cell ({x}, {y}) is not 0 or 1")
            if x in cols:
                raise FillingError(f"column {x} holds more than one 1")
            if y in rows:
                raise FillingError(f"row {y} holds more than one 1")
            cols.add(x)
            rows.add(y)

    def ones(self) -> list[Corner]:
        return sorted(c for c, v in self.entries.items() if v)

    def col_sums(self) -> list[int]:
        sums = [0] * self.arrangement.width
        for (x, _), v in self.entries.items():
            sums[x] += v
        return sums

    def row_sums(self) -> list[int]:
        sums = [0] * self.arrangement.height
        for (_, y), v in self.entries.items():
            sums[y] += v
        return sums

    def mirror_x(self) -> "Filling":
        """Left-right mirror; only meaningful on rectangles."""
        if not self.arrangement.is_rectangle:
            raise ValueError("mirroring needs a rectangular arrangement")
        w = self.arrangement.width
        return Filling(self.arrangement, {(w - 1 - x, y): v for (x, y), v in self.entries.items()})

    def transpose(self) -> "Filling":
        return Filling(self.arrangement.transpose(), {(y, x): v for (x, y), v in self.entries.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Filling)
            and other.arrangement == self.arrangement
            and other.entries == self.entries
        )

    def __hash__(self) -> int:
        return hash((self.arrangement, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        cells = ", ".join(f"({x},{y})={v}" for (x, y), v in sorted(self.entries.items()))
        return f"Filling({list(self.arrangement.heights)}; {cells})"


def format_filling(f: Filling) -> str:
    """Heights on the first line, then one ``x y value`` triple per line."""
    lines = [" ".join(str(h) for h in f.arrangement.heights)]
    lines.extend(f"{x} {y} {v}" for (x, y), v in sorted(f.entries.items()))
    return "\n".join(lines)


def parse_filling(text: str) -> Filling:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty filling file")
    arrangement = CellArrangement(int(tok) for tok in lines[0].split())
    entries = {}
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 3:
            raise ValueError(f"expected 'x y value', got {ln!r}")
        x, y, v = (int(t) for t in toks)
        entries[(x, y)] = entries.get((x, y), 0) + v
    return Filling(arrangement, entries)


class BoundaryWord:
    """Partitions along a boundary, in the corner order of the sweep direction."""

    __slots__ = ("partitions",)

    def __init__(self, partitions: Iterable[Partition]):
        self.partitions = tuple(partitions)

    def __iter__(self):
        return iter(self.partitions)

    def __len__(self):
        return len(self.partitions)

    def __getitem__(self, i):
        return self.partitions[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, BoundaryWord):
            return other.partitions == self.partitions
        return tuple(other) == self.partitions

    def __hash__(self) -> int:
        return hash(self.partitions)

    def __repr__(self) -> str:
        return "BoundaryWord(" + ", ".join(format_partition(p) for p in self.partitions) + ")"


class GrowthDiagram:
    """A full corner labelling of a filled arrangement."""

    __slots__ = ("arrangement", "filling", "labels")

    def __init__(self, arrangement: CellArrangement, filling: Filling, labels: dict[Corner, Partition]):
        self.arrangement = arrangement
        self.filling = filling
        self.labels = labels

    def label(self, x: int, y: int) -> Partition:
        return self.labels[(x, y)]

    def boundary_word(self) -> BoundaryWord:
        return BoundaryWord(self.labels[c] for c in self.arrangement.boundary_corners())

    def to_text(self) -> str:
        """Structured dump, one ``x y partition`` line per corner."""
        lines = [" ".join(str(h) for h in self.arrangement.heights)]
        for (x, y) in sorted(self.labels):
            lines.append(f"{x} {y} {format_partition(self.labels[(x, y)])}")
        return "\n".join(lines)


def _added_row(small: Partition, big: Partition) -> int:
    """The 1-based row where big exceeds small by a single square."""
    for r in range(1, len(big) + 1):
        if big.part(r) != small.part(r):
            return r
    raise GrowthError(f"{big} does not exceed {small}")


def _check_cocover(small: Partition, big: Partition, what: str) -> None:
    if not contains(small, big) or big.size - small.size > 1:
        raise GrowthError(f"{what}: {small} -> {big} is not an at-most-one-square growth")


def forward_local(rho: Partition, mu: Partition, nu: Partition, cross: bool) -> Partition:
    """One cell of the forward rules: bottom-left rho, bottom-right mu, top-left nu."""
    _check_cocover(rho, mu, "bottom edge")
    _check_cocover(rho, nu, "left edge")
    if cross and not (rho == mu == nu):
        raise GrowthError("a crossed cell needs equal surrounding labels")
    if rho == mu == nu:
        return rho.add_cell(1) if cross else rho
    if rho == mu:
        return nu
    if rho == nu:
        return mu
    if mu != nu:
        return union(mu, nu)
    return mu.add_cell(_added_row(rho, mu) + 1)


def backward_local(lam: Partition, mu: Partition, nu: Partition) -> tuple[Partition, bool]:
    """One cell of the backward rules; returns (bottom-left label, cross flag)."""
    _check_cocover(mu, lam, "right edge")
    _check_cocover(nu, lam, "top edge")
    if lam == mu == nu:
        return lam, False
    if lam == mu:
        return nu, False
    if lam == nu:
        return mu, False
    if mu != nu:
        return intersection(mu, nu), False
    row = _added_row(mu, lam)
    if row == 1:
        return mu, True
    return mu.remove_cell(row - 1), False


def forward_sweep(arr: CellArrangement, filling: Filling, direction: str = TO_TOP_RIGHT) -> GrowthDiagram:
    """Label all corners from empty left/bottom boundaries via the forward rules."""
    if filling.arrangement != arr:
        raise ValueError("filling belongs to a different arrangement")
    if direction == TO_BOTTOM_RIGHT:
        if not arr.is_rectangle:
            raise ValueError(f"{direction} needs a rectangular arrangement")
        h = arr.height
        flipped = Filling(arr, {(x, h - 1 - y): v for (x, y), v in filling.entries.items()})
        diagram = forward_sweep(arr, flipped, TO_TOP_RIGHT)
        labels = {(a, h - b): p for (a, b), p in diagram.labels.items()}
        return GrowthDiagram(arr, filling, labels)
    if direction != TO_TOP_RIGHT:
        raise ValueError(f"unknown forward direction {direction!r}")
    filling.require_standard01()
    labels: dict[Corner, Partition] = {}
    for y in range(arr.height + 1):
        labels[(0, y)] = EMPTY
    for x in range(arr.width + 1):
        labels[(x, 0)] = EMPTY
    for (x, y) in arr.cells():
        try:
            labels[(x + 1, y + 1)] = forward_local(
                labels[(x, y)], labels[(x + 1, y)], labels[(x, y + 1)],
                filling.value(x, y) == 1,
            )
        except GrowthError as exc:
            raise GrowthError(f"cell ({x}, {y}): {exc}") from None
    return GrowthDiagram(arr, filling, labels)


def _check_boundary_word(arr: CellArrangement, word: Sequence[Partition]) -> None:
    corners = arr.boundary_corners()
    if len(word) != len(corners):
        raise BoundaryError(f"word has {len(word)} labels for {len(corners)} boundary corners")
    for i, edge in enumerate(arr.boundary_edges()):
        a, b = word[i], word[i + 1]
        small, big = (a, b) if edge == "H" else (b, a)
        if not contains(small, big) or big.size - small.size > 1:
            raise BoundaryError(
                f"boundary step {i} ({edge} edge) {format_partition(a)} -> {format_partition(b)} is illegal"
            )
    if word[0] != EMPTY or word[-1] != EMPTY:
        raise BoundaryError("boundary word must start and end empty")


def backward_sweep(arr: CellArrangement, word: Sequence[Partition] | BoundaryWord, direction: str = FROM_TOP_RIGHT) -> Filling:
    """Reconstruct the unique standard 0-1 filling matching a boundary labelling.

    FROM_TOP_RIGHT reads the word along the top-right boundary, top-left end
    first.  FROM_TOP_LEFT (rectangles only) reads it from the bottom-left
    corner up the left boundary and then rightward along the top.
    """
    word = list(word)
    if direction == FROM_TOP_LEFT:
        if not arr.is_rectangle:
            raise ValueError(f"{direction} needs a rectangular arrangement")
        mirrored = backward_sweep(arr, list(reversed(word)), FROM_TOP_RIGHT)
        return mirrored.mirror_x()
    if direction != FROM_TOP_RIGHT:
        raise ValueError(f"unknown backward direction {direction!r}")
    _check_boundary_word(arr, word)
    labels: dict[Corner, Partition] = dict(zip(arr.boundary_corners(), word))
    entries: dict[Corner, int] = {}
    for y in range(arr.height - 1, -1, -1):
        for x in range(arr.width - 1, -1, -1):
            if not arr.has_cell(x, y):
                continue
            try:
                rho, cross = backward_local(
                    labels[(x + 1, y + 1)], labels[(x + 1, y)], labels[(x, y + 1)]
                )
            except GrowthError as exc:
                raise ReconstructionError(f"cell ({x}, {y}): {exc}") from None
            labels[(x, y)] = rho
            if cross:
                entries[(x, y)] = 1
    for y in range(arr.height + 1):
        if labels[(0, y)] != EMPTY:
            raise ReconstructionError(f"left boundary corner (0, {y}) reconstructs to {labels[(0, y)]}")
    for x in range(arr.width + 1):
        if labels[(x, 0)] != EMPTY:
            raise ReconstructionError(f"bottom boundary corner ({x}, 0) reconstructs to {labels[(x, 0)]}")
    return Filling(arr, entries)


def longest_ne_chain(filling: Filling) -> int:
    """Length of the longest strictly north-east chain of 1s."""
    pts = filling.ones()
    lengths: list[int] = []
    for i, (x, y) in enumerate(pts):
        best = 0
        for j in range(i):
            if pts[j][0] < x and pts[j][1] < y and lengths[j] > best:
                best = lengths[j]
        lengths.append(best + 1)
    return max(lengths, default=0)


@lru_cache(maxsize=4096)
def _union_vectors(points: tuple[Corner, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For a set of cells (distinct x and y), the vectors of maximal sizes of
    unions of k NE-chains and of k SE-chains, indexed by k = 0..len(points)."""
    pts = sorted(points)
    n = len(pts)
    ne_after = [0] * n
    se_after = [0] * n
    for i, (xi, yi) in enumerate(pts):
        for j, (xj, yj) in enumerate(pts):
            if xj > xi and yj > yi:
                ne_after[i] |= 1 << j
            if xj > xi and yj < yi:
                se_after[i] |= 1 << j
    ne_len = [0] * (1 << n)
    se_len = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        ne_len[mask] = max(ne_len[rest], 1 + ne_len[mask & ne_after[low]])
        se_len[mask] = max(se_len[rest], 1 + se_len[mask & se_after[low]])
    ne_best = [0] * (n + 1)
    se_best = [0] * (n + 1)
    for mask in range(1 << n):
        size = mask.bit_count()
        # a set is a union of k NE-chains iff its longest SE-chain is <= k
        if size > ne_best[se_len[mask]]:
            ne_best[se_len[mask]] = size
        if size > se_best[ne_len[mask]]:
            se_best[ne_len[mask]] = size
    for k in range(1, n + 1):
        ne_best[k] = max(ne_best[k], ne_best[k - 1])
        se_best[k] = max(se_best[k], se_best[k - 1])
    return tuple(ne_best), tuple(se_best)


def greene_ranks_bruteforce(filling: Filling, corner: Corner, k: int) -> tuple[int, int]:
    """Exact maxima of unions of k NE-chains and k SE-chains left-below a corner.

    Exponential-time oracle; refuses regions with more than 16 ones.
    """
    filling.require_standard01()
    cx, cy = corner
    region = tuple(sorted((x, y) for (x, y) in filling.ones() if x < cx and y < cy))
    if len(region) > 16:
        raise CapacityError(f"{len(region)} ones in the region; the oracle caps at 16")
    ne_vec, se_vec = _union_vectors(region)
    k = max(0, min(k, len(region)))
    return ne_vec[k], se_vec[k]


def rs_correspondence(perm: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Robinson-Schensted pair of a permutation via the growth diagram.

    Crosses sit at (position, value); P is read up the right boundary, Q along
    the top.  The result is checked against classical row insertion.
    """
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    arr = CellArrangement.square(n)
    filling = Filling(arr, {(i, v - 1): 1 for i, v in enumerate(perm)})
    diagram = forward_sweep(arr, filling)
    p = from_chain([diagram.label(n, y) for y in range(n + 1)], semistandard=False)
    q = from_chain([diagram.label(x, n) for x in range(n + 1)], semistandard=False)
    p_ins, q_ins = schensted(perm)
    if p != p_ins or q != q_ins:
        raise GrowthError(f"growth and insertion disagree on {perm}")
    return p, q
