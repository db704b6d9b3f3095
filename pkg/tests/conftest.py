"""Shared fixtures: the two worked examples and their figure data, plus small
generators used across the suite."""

from __future__ import annotations

import random
from itertools import permutations

import pytest

from oscgrowth.growth import CellArrangement, Filling
from oscgrowth.partitions import Partition
from oscgrowth.tableaux import SemistandardTableau, StandardTableau

P = Partition


def p(*parts: int) -> Partition:
    return Partition(parts)


# --- running example of the standard-tableau bijection (n=12, k=3, m=2) ----

RUN_SYT = StandardTableau([[1, 3, 4, 8], [2, 6, 7], [5, 10], [9, 12], [11]])

RUN_SYT_AUGMENTED_ROWS = "I II 3 4\n1 6 7 8\n2 10\n5 12\n9\n11"

# the diagonal labels of the swept staircase, read from the top-left end so
# that the forced run (1^m), ..., (1), [] is the part discarded
RUN_OSC_WORD = [
    p(), p(1), p(1, 1), p(2, 1), p(2, 2), p(2, 1), p(3, 1),
    p(3, 1, 1), p(3, 1, 1, 1), p(3, 1, 1), p(3, 1), p(2, 1), p(1, 1),
]

# crosses of the reconstructed 14 x 14 square (columns from the left, rows
# from the bottom); the pairs (I,5)(II,11)(1,9)(2,6)(3,7)(4,12)(8,10)
RUN_SQUARE_CROSSES = {
    (7, 0), (1, 1), (3, 2), (6, 3), (5, 4), (0, 5), (13, 6),
    (10, 7), (9, 8), (2, 9), (11, 10), (4, 11), (12, 12), (8, 13),
}

# a sample of printed corner labels of the square diagram, keyed (x, y)
RUN_SQUARE_LABELS = {
    (0, 1): p(1), (1, 1): p(1), (2, 1): p(1), (3, 1): p(1), (4, 1): p(1),
    (5, 1): p(1), (6, 1): p(1), (7, 1): p(1), (8, 1): p(), (9, 1): p(),
    (10, 1): p(), (11, 1): p(), (12, 1): p(), (13, 1): p(),
    (0, 6): p(4, 1, 1), (1, 6): p(3, 1, 1), (2, 6): p(3, 1), (3, 6): p(3, 1),
    (4, 6): p(3), (5, 6): p(3), (6, 6): p(2), (7, 6): p(1), (8, 6): p(),
    (9, 6): p(), (10, 6): p(), (11, 6): p(), (12, 6): p(), (13, 6): p(),
    (0, 10): p(4, 4, 1, 1), (1, 10): p(4, 3, 1, 1), (2, 10): p(4, 3, 1), (3, 10): p(3, 3, 1),
    (4, 10): p(3, 3), (5, 10): p(3, 3), (6, 10): p(3, 2), (7, 10): p(3, 1),
    (8, 10): p(3), (9, 10): p(3), (10, 10): p(2), (11, 10): p(1),
    (12, 10): p(1), (13, 10): p(1),
    (0, 14): p(4, 4, 2, 2, 1, 1), (1, 14): p(4, 4, 2, 1, 1, 1), (2, 14): p(4, 4, 2, 1, 1),
    (3, 14): p(4, 4, 1, 1, 1), (4, 14): p(4, 4, 1, 1), (5, 14): p(4, 3, 1, 1),
    (6, 14): p(4, 2, 1, 1), (7, 14): p(4, 1, 1, 1), (8, 14): p(4, 1, 1),
    (9, 14): p(3, 1, 1), (10, 14): p(2, 1, 1), (11, 14): p(2, 1),
    (12, 14): p(2), (13, 14): p(1), (14, 14): p(),
}

# every corner label of the swept staircase (figure with the diagonal word)
RUN_STAIR_LABELS = {
    (1, 1): p(), (2, 1): p(), (3, 1): p(), (4, 1): p(), (5, 1): p(), (6, 1): p(),
    (7, 1): p(), (8, 1): p(1), (9, 1): p(1), (10, 1): p(1), (11, 1): p(1),
    (12, 1): p(1), (13, 1): p(1),
    (1, 2): p(), (2, 2): p(1), (3, 2): p(1), (4, 2): p(1), (5, 2): p(1),
    (6, 2): p(1), (7, 2): p(1), (8, 2): p(1, 1), (9, 2): p(1, 1),
    (10, 2): p(1, 1), (11, 2): p(1, 1), (12, 2): p(1, 1),
    (1, 3): p(), (2, 3): p(1), (3, 3): p(1), (4, 3): p(2), (5, 3): p(2),
    (6, 3): p(2), (7, 3): p(2), (8, 3): p(2, 1), (9, 3): p(2, 1),
    (10, 3): p(2, 1), (11, 3): p(2, 1),
    (1, 4): p(), (2, 4): p(1), (3, 4): p(1), (4, 4): p(2), (5, 4): p(2),
    (6, 4): p(2), (7, 4): p(3), (8, 4): p(3, 1), (9, 4): p(3, 1), (10, 4): p(3, 1),
    (1, 5): p(), (2, 5): p(1), (3, 5): p(1), (4, 5): p(2), (5, 5): p(2),
    (6, 5): p(3), (7, 5): p(3, 1), (8, 5): p(3, 1, 1), (9, 5): p(3, 1, 1),
    (1, 6): p(1), (2, 6): p(1, 1), (3, 6): p(1, 1), (4, 6): p(2, 1),
    (5, 6): p(2, 1), (6, 6): p(3, 1), (7, 6): p(3, 1, 1), (8, 6): p(3, 1, 1, 1),
    (1, 7): p(1), (2, 7): p(1, 1), (3, 7): p(1, 1), (4, 7): p(2, 1),
    (5, 7): p(2, 1), (6, 7): p(3, 1), (7, 7): p(3, 1, 1),
    (1, 8): p(1), (2, 8): p(1, 1), (3, 8): p(1, 1), (4, 8): p(2, 1),
    (5, 8): p(2, 1), (6, 8): p(3, 1),
    (1, 9): p(1), (2, 9): p(1, 1), (3, 9): p(1, 1), (4, 9): p(2, 1), (5, 9): p(2, 1),
    (1, 10): p(1), (2, 10): p(1, 1), (3, 10): p(2, 1), (4, 10): p(2, 2),
    (1, 11): p(1), (2, 11): p(1, 1), (3, 11): p(2, 1),
    (1, 12): p(1), (2, 12): p(1, 1),
    (1, 13): p(1),
}


# --- running example of the semistandard bijection (n=4, m=2, k=2) ---------

RUN_SSYT = SemistandardTableau([[1, 1, 1, 1, 1, 3, 3], [2, 2, 3, 3, 4, 4], [3, 3], [4]])

RUN_SSYT_AUGMENTED_ROWS = "I II 1 1 1 3 3\n1 1 2 3 3 4 4\n2 3\n3 4"

# the symmetric matrix on the 6 x 6 square, rows listed top row first
RUN_MATRIX_ROWS_TOP_DOWN = [
    [0, 2, 0, 1, 0, 0],
    [2, 0, 1, 2, 1, 0],
    [0, 1, 0, 1, 0, 0],
    [1, 2, 1, 0, 0, 1],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
]

RUN_GEN_WORD = [
    p(), p(), p(1, 1, 1), p(1), p(2, 1, 1, 1), p(1, 1, 1, 1),
    p(2, 1, 1, 1), p(1), p(1, 1),
]

# printed corner labels of the square sweep, keyed (x, y)
RUN_KNUTH_SQUARE_LABELS = {
    (0, 1): p(1), (1, 1): p(1), (2, 1): p(1), (3, 1): p(1), (4, 1): p(), (5, 1): p(),
    (0, 2): p(2), (1, 2): p(2), (2, 2): p(1), (3, 2): p(1), (4, 2): p(), (5, 2): p(),
    (0, 3): p(5, 2), (1, 3): p(4, 2), (2, 3): p(2, 1), (3, 3): p(1, 1), (4, 3): p(1), (5, 3): p(1),
    (0, 4): p(5, 3, 1), (1, 4): p(5, 2, 1), (2, 4): p(2, 2), (3, 4): p(2, 1), (4, 4): p(1), (5, 4): p(1),
    (0, 5): p(7, 5, 2, 1), (1, 5): p(5, 5, 1, 1), (2, 5): p(5, 2, 1), (3, 5): p(4, 2), (4, 5): p(2), (5, 5): p(1),
    (0, 6): p(7, 7, 2, 2), (1, 6): p(7, 5, 2, 1), (2, 6): p(5, 3, 1), (3, 6): p(5, 2), (4, 6): p(2), (5, 6): p(1),
}

# printed corner labels of the staircase sweep, keyed (x, y)
RUN_KNUTH_STAIR_LABELS = {
    (1, 1): p(), (2, 1): p(), (3, 1): p(), (4, 1): p(1), (5, 1): p(1),
    (1, 2): p(), (2, 2): p(1), (3, 2): p(1), (4, 2): p(1, 1),
    (1, 3): p(1), (2, 3): p(1, 1, 1, 1), (3, 3): p(2, 1, 1, 1),
    (1, 4): p(1), (2, 4): p(2, 1, 1, 1),
    (1, 5): p(1, 1, 1),
}


# --- the small growth diagram used to introduce the local rules ------------

FIG2_ARRANGEMENT = CellArrangement([6, 5, 3, 1, 1])
FIG2_CROSSES = {(0, 3), (1, 1), (4, 0)}

FIG2_LABELS = {
    (0, 0): p(), (0, 1): p(), (0, 2): p(), (0, 3): p(), (0, 4): p(), (0, 5): p(), (0, 6): p(),
    (1, 0): p(), (1, 1): p(), (1, 2): p(), (1, 3): p(), (1, 4): p(1), (1, 5): p(1), (1, 6): p(1),
    (2, 0): p(), (2, 1): p(), (2, 2): p(1), (2, 3): p(1), (2, 4): p(1, 1), (2, 5): p(1, 1),
    (3, 0): p(), (3, 1): p(), (3, 2): p(1), (3, 3): p(1),
    (4, 0): p(), (4, 1): p(),
    (5, 0): p(), (5, 1): p(1),
}

FIG2_BOUNDARY = [
    p(), p(1), p(1), p(1, 1), p(1, 1), p(1), p(1), p(1), p(), p(), p(1), p(),
]


def fig2_filling() -> Filling:
    return Filling(FIG2_ARRANGEMENT, {c: 1 for c in FIG2_CROSSES})


def run_square_filling() -> Filling:
    return Filling(CellArrangement.square(14), {c: 1 for c in RUN_SQUARE_CROSSES})


def run_matrix_filling() -> Filling:
    rows = list(reversed(RUN_MATRIX_ROWS_TOP_DOWN))
    return Filling(
        CellArrangement.square(6),
        {(x, y): rows[y][x] for y in range(6) for x in range(6)},
    )


# --- generators -------------------------------------------------------------


def all_syt_upto(n_max: int, max_rows: int | None = None):
    """All standard tableaux of sizes 0..n_max (optionally row-bounded)."""
    from oscgrowth.counting import iter_syt

    for n in range(n_max + 1):
        yield from iter_syt(n, max_rows if max_rows is not None else n)


def involutions(n: int):
    for perm in permutations(range(1, n + 1)):
        if all(perm[perm[i] - 1] == i + 1 for i in range(n)):
            yield perm


def random_standard_filling(rng: random.Random, max_side: int = 7, max_ones: int = 12,
                            density: float = 0.9) -> Filling:
    w = rng.randint(1, max_side)
    heights = sorted((rng.randint(1, max_side) for _ in range(w)), reverse=True)
    arr = CellArrangement(heights)
    cols = list(range(arr.width))
    rng.shuffle(cols)
    used_rows: set[int] = set()
    entries = {}
    for x in cols:
        if len(entries) >= max_ones:
            break
        rows = [y for y in range(arr.heights[x]) if y not in used_rows]
        if rows and rng.random() < density:
            y = rng.choice(rows)
            entries[(x, y)] = 1
            used_rows.add(y)
    return Filling(arr, entries)


def random_content(rng: random.Random, letters: int, max_mult: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_mult) for _ in range(letters))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(987654321)
