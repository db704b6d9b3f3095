"""Standard, semistandard and marker-augmented Young tableaux.

A tableau is stored as a tuple of rows.  Entries are positive integers
("numerals") or :class:`Marker` objects; markers compare strictly below every
numeral and among themselves by ordinal, so the working alphabet is
I < II < III < ... < 1 < 2 < ...
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .partitions import EMPTY, Partition, StripType, skew_cells, strip_type


class TableauError(ValueError):
    """A filling violates a tableau condition; messages carry 1-based coordinates."""


class ChainError(ValueError):
    """A partition chain has an illegal step; messages carry the step index."""


_ROMAN = (
    ("M", 1000), ("CM", 900), ("D", 500), ("CD", 400), ("C", 100), ("XC", 90),
    ("L", 50), ("XL", 40), ("X", 10), ("IX", 9), ("V", 5), ("IV", 4), ("I", 1),
)


def to_roman(n: int) -> str:
    if n <= 0:
        raise ValueError(f"no roman numeral for {n}")
    out = []
    for sym, val in _ROMAN:
        while n >= val:
            out.append(sym)
            n -= val
    return "".join(out)


def from_roman(text: str) -> int:
    values = {"I": 1, "V": 5, "X": 10, "L": 50, "C": 100, "D": 500, "M": 1000}
    total = 0
    for i, ch in enumerate(text):
        if ch not in values:
            raise ValueError(f"bad roman numeral {text!r}")
        v = values[ch]
        if i + 1 < len(text) and values[text[i + 1]] > v:
            total -= v
        else:
            total += v
    if not text or to_roman(total) != text:
        raise ValueError(f"bad roman numeral {text!r}")
    return total


class Marker:
    """Auxiliary letter; the p-th marker sorts below every numeral."""

    __slots__ = ("ordinal",)

    def __init__(self, ordinal: int):
        if ordinal < 1:
            raise ValueError("marker ordinals start at 1")
        self.ordinal = ordinal

    def __repr__(self) -> str:
        return f"Marker({self.ordinal})"

    def __str__(self) -> str:
        return to_roman(self.ordinal)

    def __eq__(self, other) -> bool:
        return isinstance(other, Marker) and other.ordinal == self.ordinal

    def __hash__(self) -> int:
        return hash(("marker", self.ordinal))


Letter = Union[int, Marker]


def letter_key(letter: Letter) -> tuple[int, int]:
    """Sort key realizing the alphabet I < II < ... < 1 < 2 < ..."""
    if isinstance(letter, Marker):
        return (0, letter.ordinal)
    return (1, letter)


def format_letter(letter: Letter) -> str:
    return str(letter)


def parse_letter(text: str) -> Letter:
    if text and text[0].isdigit():
        return int(text)
    return Marker(from_roman(text))


def _check_monotone(rows, *, strict_rows: bool) -> None:
    for r, row in enumerate(rows, start=1):
        for c in range(1, len(row)):
            a, b = letter_key(row[c - 1]), letter_key(row[c])
            if b < a or (strict_rows and a == b):
                raise TableauError(f"row {r} decreases at column {c + 1}")
    for r in range(1, len(rows)):
        upper, lower = rows[r - 1], rows[r]
        for c in range(len(lower)):
            if letter_key(lower[c]) <= letter_key(upper[c]):
                raise TableauError(f"column {c + 1} fails to increase at row {r + 1}")


class _BaseTableau:
    """Shared storage and geometry for all tableau flavors."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Letter]]):
        self.rows = tuple(tuple(row) for row in rows)
        if self.rows:
            lengths = [len(row) for row in self.rows]
            if any(n == 0 for n in lengths):
                raise TableauError("empty rows are not allowed")
            try:
                Partition(lengths)
            except ValueError:
                raise TableauError(f"row lengths {lengths} do not form a partition") from None

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, row: int, col: int) -> Letter:
        """Entry at 1-based (row, col)."""
        return self.rows[row - 1][col - 1]

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other.rows == self.rows

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_letter(x) for x in row) for row in self.rows)
        return f"{type(self).__name__}({body})"


class StandardTableau(_BaseTableau):
    """Rows and columns strictly increasing, entries distinct positive integers.

    Freshly built tableaux have entries exactly 1..n (``is_initial``); inverse
    row insertion produces tableaux on a thinned-out entry set, values kept.
    """

    def __init__(self, rows: Iterable[Iterable[int]]):
        super().__init__(rows)
        _check_monotone(self.rows, strict_rows=True)
        entries = [x for row in self.rows for x in row]
        if any(not isinstance(x, int) or x < 1 for x in entries):
            raise TableauError("standard entries must be positive integers")
        if len(set(entries)) != len(entries):
            raise TableauError("standard entries must be distinct")

    @property
    def is_initial(self) -> bool:
        """True iff the entry set is exactly {1, ..., n}."""
        entries = sorted(x for row in self.rows for x in row)
        return entries == list(range(1, len(entries) + 1))

    @property
    def entry_set(self) -> frozenset[int]:
        return frozenset(x for row in self.rows for x in row)


class SemistandardTableau(_BaseTableau):
    """Rows weakly increasing, columns strictly increasing.

    ``content[i-1]`` counts the entries equal to i; an explicit content vector
    may carry trailing zeros (letters of the alphabet that do not occur).
    """

    __slots__ = ("content",)

    def __init__(self, rows: Iterable[Iterable[int]], content: Sequence[int] | None = None):
        super().__init__(rows)
        _check_monotone(self.rows, strict_rows=False)
        entries = [x for row in self.rows for x in row]
        if any(not isinstance(x, int) or x < 1 for x in entries):
            raise TableauError("semistandard entries must be positive integers")
        self.content = _checked_content(entries, content)


class AugmentedTableau(_BaseTableau):
    """A tableau over markers-then-numerals with all markers in the first row.

    The numeral part may be standard or semistandard; ``content`` refers to
    the numerals only (as in :class:`SemistandardTableau`), and
    ``semistandard`` records which flavor the numerals came from.
    """

    __slots__ = ("marker_count", "content", "semistandard")

    def __init__(
        self,
        rows: Iterable[Iterable[Letter]],
        content: Sequence[int] | None = None,
        semistandard: bool | None = None,
    ):
        super().__init__(rows)
        _check_monotone(self.rows, strict_rows=False)
        markers = sorted(
            x.ordinal for row in self.rows for x in row if isinstance(x, Marker)
        )
        if markers != list(range(1, len(markers) + 1)):
            raise TableauError(f"marker ordinals {markers} are not exactly I..{len(markers)}")
        self.marker_count = len(markers)
        first = self.rows[0] if self.rows else ()
        for p in range(self.marker_count):
            if not (isinstance(first[p], Marker) and first[p].ordinal == p + 1):
                raise TableauError("markers must sit in the first row, in order")
        numerals = [x for row in self.rows for x in row if isinstance(x, int)]
        self.content = _checked_content(numerals, content)
        if semistandard is None:
            semistandard = not all(c == 1 for c in self.content)
        elif not semistandard and not all(c == 1 for c in self.content):
            raise TableauError("repeated numerals need the semistandard flavor")
        self.semistandard = semistandard

    @property
    def numerals_standard(self) -> bool:
        return all(c == 1 for c in self.content)


Tableau = Union[StandardTableau, SemistandardTableau, AugmentedTableau]


def _checked_content(entries: list[int], content: Sequence[int] | None) -> tuple[int, ...]:
    largest = max(entries, default=0)
    counts = [0] * largest
    for x in entries:
        counts[x - 1] += 1
    if content is None:
        return tuple(counts)
    content = list(content)
    if content[:largest] != counts or any(c != 0 for c in content[largest:]):
        raise TableauError(f"content {content} does not match the filling")
    return tuple(content)


def _alphabet(t: Tableau) -> list[Letter]:
    """The full ordered alphabet the tableau is read over."""
    letters: list[Letter] = []
    if isinstance(t, AugmentedTableau):
        letters.extend(Marker(p) for p in range(1, t.marker_count + 1))
        letters.extend(range(1, len(t.content) + 1))
    elif isinstance(t, SemistandardTableau):
        letters.extend(range(1, len(t.content) + 1))
    else:
        letters.extend(range(1, t.size + 1))
    return letters


def to_chain(t: Tableau) -> tuple[Partition, ...]:
    """Read a tableau as the chain of shapes cut out by growing letter prefixes."""
    if isinstance(t, StandardTableau) and not t.is_initial:
        raise TableauError("chain reading needs entries exactly 1..n")
    alphabet = _alphabet(t)
    index = {letter_key(x): i for i, x in enumerate(alphabet)}
    rows_per_letter: list[list[int]] = [[] for _ in alphabet]
    for r, row in enumerate(t.rows):
        for x in row:
            k = letter_key(x)
            if k not in index:
                raise TableauError(f"entry {x} outside the declared alphabet")
            rows_per_letter[index[k]].append(r)
    counts = [0] * len(t.rows)
    chain = [EMPTY]
    for hit_rows in rows_per_letter:
        for r in hit_rows:
            counts[r] += 1
        chain.append(Partition(c for c in counts if c))
    return tuple(chain)


def validate_chain(chain: Sequence[Partition], *, one_square: bool = False) -> None:
    """Check containment (and optionally one-square steps) along a chain."""
    if not chain or chain[0] != EMPTY:
        raise ChainError("chain must start at the empty partition (step 0)")
    for i in range(1, len(chain)):
        kind = strip_type(chain[i - 1], chain[i])
        if kind == StripType.NOT_CONTAINED:
            raise ChainError(f"step {i} is not growing: {chain[i - 1]} -> {chain[i]}")
        if one_square and kind != StripType.ONE_SQUARE:
            raise ChainError(f"step {i} is not a single square: {chain[i - 1]} -> {chain[i]}")


def from_chain(
    chain: Sequence[Partition],
    marker_count: int = 0,
    *,
    semistandard: bool | None = None,
) -> Tableau:
    """Rebuild the tableau whose letter-prefix shapes are the given chain.

    The first ``marker_count`` letters become markers I, II, ...; their steps
    must each add a single square.  With ``semistandard=None`` the flavor is
    inferred: one-square steps throughout give a standard tableau.
    """
    if not chain or chain[0] != EMPTY:
        raise ChainError("chain must start at the empty partition (step 0)")
    grid: dict[tuple[int, int], Letter] = {}
    steps: list[StripType] = []
    horizontal_kinds = (StripType.EQUAL, StripType.ONE_SQUARE,
                        StripType.HORIZONTAL_STRIP, StripType.HORIZONTAL_AND_VERTICAL)
    for i in range(1, len(chain)):
        kind = strip_type(chain[i - 1], chain[i])
        steps.append(kind)
        if kind not in horizontal_kinds:
            raise ChainError(f"step {i} is not a horizontal strip: {chain[i - 1]} -> {chain[i]}")
        if i <= marker_count:
            if kind != StripType.ONE_SQUARE:
                raise ChainError(f"marker step {i} must add exactly one square")
            letter: Letter = Marker(i)
        else:
            letter = i - marker_count
        for cell in skew_cells(chain[i - 1], chain[i]):
            grid[cell] = letter
    shape = chain[-1]
    rows = [
        [grid[(r, c)] for c in range(1, shape.part(r) + 1)]
        for r in range(1, shape.num_rows + 1)
    ]
    if marker_count:
        content = [chain[i].size - chain[i - 1].size for i in range(marker_count + 1, len(chain))]
        return AugmentedTableau(rows, content=content, semistandard=semistandard)
    if semistandard is None:
        semistandard = not all(k == StripType.ONE_SQUARE for k in steps)
    if semistandard:
        content = [chain[i].size - chain[i - 1].size for i in range(1, len(chain))]
        return SemistandardTableau(rows, content=content)
    return StandardTableau(rows)


def validate_bounds(t: Tableau, max_col_len: int, required_odd_cols: int) -> bool:
    """True iff all columns are short enough and the odd-column count matches."""
    conj = t.shape.conjugate()
    longest = conj[0] if conj else 0
    odd = sum(1 for c in conj if c % 2 == 1)
    return longest <= max_col_len and odd == required_odd_cols


def format_tableau(t: Tableau) -> str:
    """One row per line, entries space-separated, markers as roman numerals."""
    return "\n".join(" ".join(format_letter(x) for x in row) for row in t.rows)


def parse_tableau(text: str, *, content: Sequence[int] | None = None) -> Tableau:
    """Parse the text form; flavor is inferred from the letters present."""
    rows: list[list[Letter]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([parse_letter(tok) for tok in line.split()])
    has_markers = any(isinstance(x, Marker) for row in rows for x in row)
    if has_markers:
        return AugmentedTableau(rows, content=content)
    entries = sorted(x for row in rows for x in row)
    if content is None and entries == list(range(1, len(entries) + 1)):
        return StandardTableau(rows)
    return SemistandardTableau(rows, content=content)
