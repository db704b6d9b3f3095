"""End-to-end maps between (semi)standard tableaux and oscillating tableaux.

Both pipelines run marker injection, an inverse growth sweep on a square
(placing the tableau chain along the top and left boundaries), a forward
sweep on the staircase left after dropping the upper half, and a reading of
the staircase boundary; the single-square machinery handles standard
tableaux, the refined (Knuth) machinery handles semistandard ones.  The
odd-column-bound reduction via inverse row insertion lives here too.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .growth import (
    FROM_TOP_LEFT,
    CellArrangement,
    Filling,
    backward_sweep,
    forward_sweep,
    longest_ne_chain,
)
from .jeu_de_taquin import eject_markers, inject_markers, inverse_rs_extract, row_insert
from .knuth_growth import (
    TO_TOP_LEFT,
    knuth_backward_sweep,
    knuth_forward_sweep,
)
from .partitions import (
    EMPTY,
    Partition,
    format_partition,
    intersection,
    is_vertical_step,
    parse_partition,
)
from .tableaux import (
    SemistandardTableau,
    StandardTableau,
    TableauError,
    from_chain,
    to_chain,
)


def _one_column(m: int) -> Partition:
    return Partition([1] * m)


class OscillatingTableau:
    """A walk in Young's lattice by single squares, from empty to one column."""

    __slots__ = ("shapes", "k")

    def __init__(self, shapes: Iterable[Partition], k: int | None = None):
        self.shapes = tuple(Partition(s) for s in shapes)
        if not self.shapes or self.shapes[0] != EMPTY:
            raise ValueError("an oscillating tableau starts at the empty shape")
        for i in range(1, len(self.shapes)):
            a, b = self.shapes[i - 1], self.shapes[i]
            if abs(a.size - b.size) != 1 or (a.size < b.size and not _covers(a, b)) or (
                a.size > b.size and not _covers(b, a)
            ):
                raise ValueError(
                    f"step {i}: {format_partition(a)} -> {format_partition(b)} is not a one-square move"
                )
        final = self.shapes[-1]
        if final.num_cols > 1:
            raise ValueError(f"final shape {format_partition(final)} is not a single column")
        widest = max(s.num_cols for s in self.shapes)
        if k is None:
            k = widest
        elif widest > k:
            raise ValueError(f"a shape uses {widest} columns, more than k={k}")
        self.k = k

    @property
    def n(self) -> int:
        return len(self.shapes) - 1

    @property
    def m(self) -> int:
        return self.shapes[-1].size

    def __eq__(self, other) -> bool:
        return isinstance(other, OscillatingTableau) and other.shapes == self.shapes

    def __hash__(self) -> int:
        return hash(self.shapes)

    def __repr__(self) -> str:
        return "OscillatingTableau(" + ", ".join(format_partition(s) for s in self.shapes) + ")"


class GeneralizedOscillatingTableau:
    """Alternating shrink/grow walk by vertical strips, empty to one column."""

    __slots__ = ("shapes", "k")

    def __init__(self, shapes: Iterable[Partition], k: int | None = None):
        self.shapes = tuple(Partition(s) for s in shapes)
        if not self.shapes or self.shapes[0] != EMPTY:
            raise ValueError("a generalized oscillating tableau starts at the empty shape")
        if len(self.shapes) % 2 == 0:
            raise ValueError("a generalized oscillating tableau has odd length 2n+1")
        for i in range(1, len(self.shapes)):
            a, b = self.shapes[i - 1], self.shapes[i]
            small, big = (b, a) if i % 2 == 1 else (a, b)
            if not is_vertical_step(small, big):
                raise ValueError(
                    f"step {i}: {format_partition(a)} -> {format_partition(b)} is not a vertical strip move"
                )
        final = self.shapes[-1]
        if final.num_cols > 1:
            raise ValueError(f"final shape {format_partition(final)} is not a single column")
        widest = max(s.num_cols for s in self.shapes)
        if k is None:
            k = widest
        elif widest > k:
            raise ValueError(f"a shape uses {widest} columns, more than k={k}")
        self.k = k

    @property
    def n(self) -> int:
        return (len(self.shapes) - 1) // 2

    @property
    def m(self) -> int:
        return self.shapes[-1].size

    @property
    def content(self) -> tuple[int, ...]:
        """The letter multiplicities j_1..j_n accounted for by the size changes."""
        n = self.n
        j = [0] * n
        for i in range(1, n + 1):
            j[n - i] = (
                self.shapes[2 * i - 2].size
                - 2 * self.shapes[2 * i - 1].size
                + self.shapes[2 * i].size
            )
        return tuple(j)

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneralizedOscillatingTableau) and other.shapes == self.shapes

    def __hash__(self) -> int:
        return hash(self.shapes)

    def __repr__(self) -> str:
        return "GeneralizedOscillatingTableau(" + ", ".join(format_partition(s) for s in self.shapes) + ")"


def _covers(small: Partition, big: Partition) -> bool:
    if big.size != small.size + 1:
        return False
    return all(big.part(r) >= small.part(r) for r in range(1, len(big) + 1))


def _check_square_filling(filling: Filling, side: int, m: int, max_ne: int | None = None) -> None:
    """Invariants of the reconstructed square: symmetry, empty diagonal,
    cross-free marker block, marker rows forming one SE-chain."""
    entries = filling.entries
    for (x, y), v in entries.items():
        assert entries.get((side - 1 - y, side - 1 - x), 0) == v, "square filling is not symmetric"
        assert x + y != side - 1, f"cross on the main diagonal at ({x}, {y})"
        assert not (x >= side - m and y < m), f"occupied marker block cell ({x}, {y})"
    marker_crosses = sorted(((y, x) for (x, y), v in entries.items() if y < m), reverse=True)
    assert len(marker_crosses) == m, "each marker row holds exactly one cross"
    assert all(entries[(x, y)] == 1 for (y, x) in marker_crosses)
    for (y1, x1), (y2, x2) in zip(marker_crosses, marker_crosses[1:]):
        # one SE-chain after refinement: x weakly grows as the row drops
        assert y1 > y2 and x1 <= x2, "marker-row crosses do not form one SE-chain"
    if max_ne is not None:
        assert longest_ne_chain(filling) <= max_ne, "NE-chain longer than the column bound allows"


def _lower_staircase(filling: Filling, side: int) -> Filling:
    stair = CellArrangement.staircase(side)
    entries = {
        (x, y): v for (x, y), v in filling.entries.items() if x + y <= side - 2
    }
    return Filling(stair, entries)


def _symmetric_square(stair_filling: Filling, side: int) -> Filling:
    square = CellArrangement.square(side)
    entries: dict[tuple[int, int], int] = {}
    for (x, y), v in stair_filling.entries.items():
        entries[(x, y)] = v
        entries[(side - 1 - y, side - 1 - x)] = v
    return Filling(square, entries)


def _top_left_word(chain: Sequence[Partition]) -> list[Partition]:
    """The chain placed up the left boundary and back along the top."""
    return list(chain) + list(reversed(chain[:-1]))


def syt_to_oscillating(t: StandardTableau, k: int) -> OscillatingTableau:
    """Map a standard tableau with columns of length at most 2k to an
    oscillating tableau of the same length ending at (1^m), m = odd columns."""
    if not t.is_initial:
        raise TableauError("expected entries exactly 1..n")
    if t.shape.num_rows > 2 * k:
        raise ValueError(f"shape {t.shape} has a column longer than 2k={2 * k}")
    n = t.size
    aug = inject_markers(t)
    m = aug.marker_count
    side = n + m
    if side == 0:
        return OscillatingTableau([EMPTY], k)
    chain = to_chain(aug)
    square = CellArrangement.square(side)
    filling = backward_sweep(square, _top_left_word(chain), FROM_TOP_LEFT)
    _check_square_filling(filling, side, m, max_ne=2 * k)
    diagram = forward_sweep(CellArrangement.staircase(side), _lower_staircase(filling, side))
    # diagonal corners read from the top-left end; the marker rows force the
    # final m+1 labels down to empty
    word = [EMPTY]
    word.extend(diagram.label(i, side - i) for i in range(1, side))
    word.append(EMPTY)
    for j in range(m + 1):
        assert word[n + j] == _one_column(m - j), "forced tail of the diagonal word is off"
    assert all(s.num_cols <= k for s in word[: n + 1]), "diagonal shape exceeds k columns"
    return OscillatingTableau(word[: n + 1], k)


def oscillating_to_syt(o: OscillatingTableau) -> StandardTableau:
    """Inverse of :func:`syt_to_oscillating`."""
    n, m, k = o.n, o.m, o.k
    side = n + m
    if side == 0:
        return StandardTableau([])
    full = list(o.shapes) + [_one_column(m - j) for j in range(1, m + 1)]
    stair = CellArrangement.staircase(side)
    word: list[Partition] = []
    for (a, b) in stair.boundary_corners():
        if a + b == side:
            word.append(full[a])
        else:
            # inner corners are forced: both neighbors cover them by <= 1 square
            word.append(intersection(full[a], full[a + 1]))
    stair_filling = backward_sweep(stair, word)
    square_filling = _symmetric_square(stair_filling, side)
    _check_square_filling(square_filling, side, m)
    diagram = forward_sweep(CellArrangement.square(side), square_filling.mirror_x())
    chain = [diagram.label(x, side) for x in range(side + 1)]
    for y in range(side + 1):
        assert diagram.label(side, y) == chain[y], "square sweep lost its symmetry"
    rebuilt = from_chain(chain, marker_count=m, semistandard=False)
    t = eject_markers(rebuilt) if m else rebuilt
    if t.shape.num_rows > 2 * k:
        raise ValueError(f"reconstructed shape {t.shape} breaks the column bound 2k={2 * k}")
    return t


def ssyt_to_gen_oscillating(t: SemistandardTableau, k: int) -> GeneralizedOscillatingTableau:
    """Knuth-type analogue of :func:`syt_to_oscillating` for semistandard input."""
    if t.shape.num_rows > 2 * k:
        raise ValueError(f"shape {t.shape} has a column longer than 2k={2 * k}")
    n = len(t.content)
    aug = inject_markers(t)
    m = aug.marker_count
    side = n + m
    if side == 0:
        return GeneralizedOscillatingTableau([EMPTY], k)
    chain = to_chain(aug)
    square = CellArrangement.square(side)
    matrix = knuth_backward_sweep(square, _top_left_word(chain), FROM_TOP_LEFT)
    _check_square_filling(matrix, side, m)
    gw = knuth_forward_sweep(CellArrangement.staircase(side), _lower_staircase(matrix, side))
    word = [EMPTY, *gw.partitions, EMPTY]
    assert len(word) == 2 * side + 1
    assert word[2 * n] == _one_column(m), "word does not reach the one-column shape in time"
    for j in range(1, m + 1):
        assert word[2 * n + 2 * j - 1] == word[2 * n + 2 * j] == _one_column(m - j), (
            "forced tail of the generalized word is off"
        )
    assert all(s.num_cols <= k for s in word[: 2 * n + 1]), "shape exceeds k columns"
    out = GeneralizedOscillatingTableau(word[: 2 * n + 1], k)
    assert out.content == t.content, "content bookkeeping failed"
    return out


def gen_oscillating_to_ssyt(o: GeneralizedOscillatingTableau) -> SemistandardTableau:
    """Inverse of :func:`ssyt_to_gen_oscillating`."""
    n, m, k = o.n, o.m, o.k
    side = n + m
    if side == 0:
        return SemistandardTableau([])
    full = list(o.shapes)
    for j in range(1, m + 1):
        full.extend([_one_column(m - j), _one_column(m - j)])
    stair = CellArrangement.staircase(side)
    stair_filling = knuth_backward_sweep(stair, full[1:2 * side])
    matrix = _symmetric_square(stair_filling, side)
    _check_square_filling(matrix, side, m)
    gw = knuth_forward_sweep(CellArrangement.square(side), matrix, TO_TOP_LEFT)
    chain = list(gw.partitions[: side + 1])
    for a in range(1, side + 1):
        assert gw.partitions[side + a] == chain[side - a], "square sweep lost its symmetry"
    rebuilt = from_chain(chain, marker_count=m, semistandard=True)
    t = eject_markers(rebuilt) if m else rebuilt
    if t.shape.num_rows > 2 * k:
        raise ValueError(f"reconstructed shape {t.shape} breaks the column bound 2k={2 * k}")
    return t


def odd_bound_reduce(t: StandardTableau) -> tuple[StandardTableau, frozenset[int]]:
    """Strip the odd columns by inverse row insertion, rightmost odd column first.

    Returns the all-even-column core (entry values preserved) and the set of
    extracted values.
    """
    if not t.is_initial:
        raise TableauError("expected entries exactly 1..n")
    marks: set[int] = set()
    while True:
        conj = t.shape.conjugate()
        odd = [c for c, h in enumerate(conj, start=1) if h % 2 == 1]
        if not odd:
            return t, frozenset(marks)
        col = odd[-1]
        t, value = inverse_rs_extract(t, (conj[col - 1], col))
        marks.add(value)


def odd_bound_expand(core: StandardTableau, marks: Iterable[int]) -> StandardTableau:
    """Inverse of :func:`odd_bound_reduce`: row-insert the marks, smallest first."""
    marks = frozenset(marks)
    conj = core.shape.conjugate()
    if any(h % 2 == 1 for h in conj):
        raise ValueError(f"core shape {core.shape} has odd columns")
    n = core.size + len(marks)
    if core.entry_set | marks != frozenset(range(1, n + 1)) or core.entry_set & marks:
        raise ValueError("marks must be exactly the entries missing from 1..n")
    t = core
    for v in sorted(marks):
        t = row_insert(t, v)
    return t


def format_oscillating(shapes: Sequence[Partition]) -> str:
    """One partition per line in bracket form."""
    return "\n".join(format_partition(s) for s in shapes)


def parse_oscillating_shapes(text: str) -> list[Partition]:
    shapes = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        shapes.append(parse_partition(line))
    return shapes
