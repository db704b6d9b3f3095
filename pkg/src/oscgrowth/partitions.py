"""Integer partitions and basic Ferrers-diagram arithmetic.

Partitions are stored canonically: weakly decreasing positive parts, no
trailing zeros, the empty partition being ``()``.  All operations are pure.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator


class StripType(enum.Enum):
    """Classification of a skew diagram lambda/mu."""

    NOT_CONTAINED = "not_contained"
    EQUAL = "equal"
    ONE_SQUARE = "one_square"
    HORIZONTAL_STRIP = "horizontal_strip"
    VERTICAL_STRIP = "vertical_strip"
    HORIZONTAL_AND_VERTICAL = "horizontal_and_vertical"
    OTHER = "other"


class Partition(tuple):
    """A partition as a tuple of weakly decreasing positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        prev = None
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p <= 0:
                raise ValueError(f"part {i + 1} is {p!r}, expected a positive integer")
            if prev is not None and p > prev:
                raise ValueError(f"parts not weakly decreasing: {parts}")
            prev = p
        return tuple.__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), with implicit trailing zeros."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def num_rows(self) -> int:
        return len(self)

    @property
    def num_cols(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        """Transpose the Ferrers diagram."""
        return Partition(
            sum(1 for p in self if p >= i) for i in range(1, self.num_cols + 1)
        )

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield (row, col) cells, 1-based, row by row."""
        for r, p in enumerate(self, start=1):
            for c in range(1, p + 1):
                yield (r, c)

    def add_cell(self, row: int) -> "Partition":
        """Partition with one extra cell in the given 1-based row."""
        if row < 1 or row > len(self) + 1:
            raise ValueError(f"cannot add a cell in row {row} of {self}")
        parts = list(self) + [0] * (row - len(self))
        parts[row - 1] += 1
        if row > 1 and parts[row - 1] > parts[row - 2]:
            raise ValueError(f"adding a cell in row {row} of {self} breaks monotonicity")
        return Partition(parts)

    def remove_cell(self, row: int) -> "Partition":
        """Partition with one cell removed from the given 1-based row."""
        if row < 1 or row > len(self):
            raise ValueError(f"cannot remove a cell from row {row} of {self}")
        parts = list(self)
        parts[row - 1] -= 1
        if row < len(self) and parts[row - 1] < parts[row]:
            raise ValueError(f"removing a cell from row {row} of {self} breaks monotonicity")
        return Partition(parts)

    def up_steps(self, max_cols: int | None = None) -> Iterator["Partition"]:
        """All partitions one square larger, optionally with a column bound."""
        for row in range(1, len(self) + 2):
            if row == 1 or self.part(row) < self.part(row - 1):
                mu = self.add_cell(row)
                if max_cols is None or mu.num_cols <= max_cols:
                    yield mu

    def down_steps(self) -> Iterator["Partition"]:
        """All partitions one square smaller."""
        for row in range(1, len(self) + 1):
            if self.part(row) > self.part(row + 1):
                yield self.remove_cell(row)


EMPTY = Partition()


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff mu fits inside lam componentwise (mu <= lam as diagrams)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def union(mu: Partition, nu: Partition) -> Partition:
    """Componentwise maximum of the two diagrams."""
    if len(mu) < len(nu):
        mu, nu = nu, mu
    return Partition(
        tuple(max(m, n) for m, n in zip(mu, nu)) + mu[len(nu):]
    )


def intersection(mu: Partition, nu: Partition) -> Partition:
    """Componentwise minimum of the two diagrams."""
    return Partition(min(m, n) for m, n in zip(mu, nu))


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def skew_cells(mu: Partition, lam: Partition) -> list[tuple[int, int]]:
    """Cells of lam/mu as (row, col) pairs; requires mu inside lam."""
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    return [
        (r, c)
        for r in range(1, len(lam) + 1)
        for c in range(mu.part(r) + 1, lam.part(r) + 1)
    ]


def strip_type(mu: Partition, lam: Partition) -> StripType:
    """Classify the skew diagram lam/mu."""
    if not contains(mu, lam):
        return StripType.NOT_CONTAINED
    cells = skew_cells(mu, lam)
    if not cells:
        return StripType.EQUAL
    if len(cells) == 1:
        return StripType.ONE_SQUARE
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    horizontal = len(set(cols)) == len(cols)
    vertical = len(set(rows)) == len(rows)
    if horizontal and vertical:
        return StripType.HORIZONTAL_AND_VERTICAL
    if horizontal:
        return StripType.HORIZONTAL_STRIP
    if vertical:
        return StripType.VERTICAL_STRIP
    return StripType.OTHER


def is_horizontal_step(mu: Partition, lam: Partition) -> bool:
    """True iff lam/mu is empty or a strip with at most one cell per column."""
    return strip_type(mu, lam) in (
        StripType.EQUAL,
        StripType.ONE_SQUARE,
        StripType.HORIZONTAL_STRIP,
        StripType.HORIZONTAL_AND_VERTICAL,
    )


def is_vertical_step(mu: Partition, lam: Partition) -> bool:
    """True iff lam/mu is empty or a strip with at most one cell per row."""
    return strip_type(mu, lam) in (
        StripType.EQUAL,
        StripType.ONE_SQUARE,
        StripType.VERTICAL_STRIP,
        StripType.HORIZONTAL_AND_VERTICAL,
    )


def column_stats(lam: Partition) -> tuple[int, int, int]:
    """(number of columns, longest column, number of odd-length columns)."""
    conj = lam.conjugate()
    return (lam.num_cols, lam.num_rows, sum(1 for c in conj if c % 2 == 1))


def format_partition(lam: Partition) -> str:
    """Bracketed text form, e.g. ``[3,1,1]``; empty partition is ``[]``."""
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed partition {text!r}, expected e.g. [3,1]")
    inner = text[1:-1].strip()
    if not inner:
        return EMPTY
    try:
        parts = [int(x) for x in inner.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: non-integer part") from None
    return Partition(parts)
