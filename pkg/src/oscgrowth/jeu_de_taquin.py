"""Marker injection/ejection by jeu de taquin, and classical row insertion.

Markers are pushed from the feet of the odd-length columns to the first row
by inverse slides; ejection runs the slides forward in reverse order.  The
module also houses classical (inverse) Schensted/RSK row insertion, which the
growth-diagram code uses as an independent cross-check.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Sequence

from .tableaux import (
    AugmentedTableau,
    Letter,
    Marker,
    SemistandardTableau,
    StandardTableau,
    TableauError,
    letter_key,
)

Cell = tuple[int, int]  # 0-based (row, col) internally


def _numeral_at(rows: list[list[Letter]], r: int, c: int) -> Letter | None:
    if 0 <= r < len(rows) and 0 <= c < len(rows[r]):
        x = rows[r][c]
        if not isinstance(x, Marker):
            return x
    return None


def _odd_columns(shape) -> list[int]:
    """0-based indices of odd-length columns, left to right."""
    conj = shape.conjugate()
    return [c for c, h in enumerate(conj) if h % 2 == 1]


def _slide_marker_in(rows: list[list[Letter]], r: int, c: int) -> list[Cell]:
    """Inverse-slide the marker at (r, c) towards the top-left; returns its path."""
    path = [(r, c)]
    while True:
        above = _numeral_at(rows, r - 1, c)
        left = _numeral_at(rows, r, c - 1)
        if above is None and left is None:
            return path
        # swap with the larger neighbor; on a tie the above entry moves down,
        # the only choice that keeps columns strict
        if left is None or (above is not None and letter_key(above) >= letter_key(left)):
            rows[r][c], rows[r - 1][c] = rows[r - 1][c], rows[r][c]
            r -= 1
        else:
            rows[r][c], rows[r][c - 1] = rows[r][c - 1], rows[r][c]
            c -= 1
        path.append((r, c))


def _check_paths_noncrossing(paths: Sequence[Sequence[Cell]]) -> None:
    """Consecutive marker paths must not cross (strictly so on vertical moves)."""
    details = []
    for path in paths:
        cols_by_row: dict[int, list[int]] = {}
        vertical: dict[int, int] = {}  # row reached from below -> column
        for i, (r, c) in enumerate(path):
            cols_by_row.setdefault(r, []).append(c)
            if i and path[i - 1][0] == r + 1:
                vertical[r] = c
        details.append((cols_by_row, vertical))
    for (cols_a, vert_a), (cols_b, vert_b) in zip(details, details[1:]):
        for r in cols_a.keys() & cols_b.keys():
            assert max(cols_a[r]) <= max(cols_b[r]) and min(cols_a[r]) <= min(cols_b[r]), (
                f"marker paths cross in row {r + 1}"
            )
        for r in vert_a.keys() & vert_b.keys():
            assert vert_a[r] < vert_b[r], f"marker paths share a vertical line at row {r + 1}"


def inject_markers(t: StandardTableau | SemistandardTableau) -> AugmentedTableau:
    """Put markers at the feet of the odd columns and slide them to row one.

    The result has the same numeral content and a shape whose columns, ignoring
    the first-row markers, all have even length.
    """
    rows: list[list[Letter]] = [list(row) for row in t.rows]
    conj = t.shape.conjugate()
    paths = []
    feet = [(conj[c], c) for c in _odd_columns(t.shape)]
    for p, (r, c) in enumerate(feet, start=1):
        if r == len(rows):
            rows.append([])
        assert len(rows[r]) == c, f"marker {p} foot is not an addable cell"
        rows[r].append(Marker(p))
    for p, (r, c) in enumerate(feet, start=1):
        paths.append(_slide_marker_in(rows, r, c))
    _check_paths_noncrossing(paths)
    semistandard = isinstance(t, SemistandardTableau)
    content = t.content if semistandard else None
    out = AugmentedTableau(rows, content=content, semistandard=semistandard)
    assert out.marker_count == len(feet)
    return out


def eject_markers(t: AugmentedTableau) -> StandardTableau | SemistandardTableau:
    """Slide the markers back out, last marker first; inverse of injection."""
    rows: list[list[Letter]] = [list(row) for row in t.rows]
    for p in range(t.marker_count, 0, -1):
        r, c = 0, p - 1
        if not (isinstance(rows[0][c], Marker) and rows[0][c].ordinal == p):
            raise TableauError(f"marker {p} is not at row 1, column {p}")
        while True:
            below = _numeral_at(rows, r + 1, c)
            right = _numeral_at(rows, r, c + 1)
            if below is None and right is None:
                break
            # swap with the smaller neighbor; on a tie the below entry moves up
            if right is None or (below is not None and letter_key(below) <= letter_key(right)):
                rows[r][c], rows[r + 1][c] = rows[r + 1][c], rows[r][c]
                r += 1
            else:
                rows[r][c], rows[r][c + 1] = rows[r][c + 1], rows[r][c]
                c += 1
        if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
            raise TableauError(f"marker {p} stalled at ({r + 1}, {c + 1}), not an outer corner")
        rows[r].pop()
        if not rows[r]:
            rows.pop(r)
    if t.semistandard:
        return SemistandardTableau(rows, content=t.content)
    return StandardTableau(rows)


def is_outer_corner(shape, row: int, col: int) -> bool:
    """1-based test that (row, col) is a removable cell of the shape."""
    return (
        1 <= row <= shape.num_rows
        and col == shape.part(row)
        and shape.part(row + 1) < col
    )


def inverse_rs_extract(t: StandardTableau, cell: Cell) -> tuple[StandardTableau, int]:
    """Classical inverse row insertion from a 1-based outer corner.

    Removes the corner entry and bumps upward; returns the reduced tableau
    (entry values preserved) and the value expelled from row one.
    """
    row, col = cell
    if not is_outer_corner(t.shape, row, col):
        raise TableauError(f"({row}, {col}) is not an outer corner of shape {t.shape}")
    rows = [list(r) for r in t.rows]
    value = rows[row - 1].pop()
    if not rows[row - 1]:
        rows.pop(row - 1)
    for q in range(row - 2, -1, -1):
        idx = bisect_left(rows[q], value) - 1
        if idx < 0:
            raise TableauError(f"no entry smaller than {value} in row {q + 1}")
        rows[q][idx], value = value, rows[q][idx]
    return StandardTableau(rows), value


def _bump_insert(rows: list[list[int]], value: int) -> Cell:
    """Row-insert a value (weak bumping), returning the 0-based new cell."""
    r = 0
    while r < len(rows):
        idx = bisect_right(rows[r], value)
        if idx == len(rows[r]):
            rows[r].append(value)
            return (r, idx)
        rows[r][idx], value = value, rows[r][idx]
        r += 1
    rows.append([value])
    return (r, 0)


def row_insert(t: StandardTableau, value: int) -> StandardTableau:
    """Classical Schensted row insertion of a fresh value."""
    if value in t.entry_set:
        raise TableauError(f"value {value} already present")
    rows = [list(r) for r in t.rows]
    _bump_insert(rows, value)
    return StandardTableau(rows)


def schensted(perm: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row-insertion Robinson-Schensted pair (P, Q) of a permutation."""
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, v in enumerate(perm, start=1):
        r, _ = _bump_insert(p_rows, v)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(i)
    return StandardTableau(p_rows), StandardTableau(q_rows)


def rsk(matrix: Sequence[Sequence[int]]) -> tuple[SemistandardTableau, SemistandardTableau]:
    """Classical RSK of a non-negative integer matrix via its two-line array.

    ``matrix[i][j]`` is the multiplicity of the biletter (i+1, j+1); P receives
    the column letters, Q records the row letters.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, row in enumerate(matrix, start=1):
        for j, mult in enumerate(row, start=1):
            if mult < 0:
                raise ValueError(f"negative multiplicity at ({i}, {j})")
            for _ in range(mult):
                r, _ = _bump_insert(p_rows, j)
                if r == len(q_rows):
                    q_rows.append([])
                q_rows[r].append(i)
    return SemistandardTableau(p_rows), SemistandardTableau(q_rows)
