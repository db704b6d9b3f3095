"""Exhaustive counters for both sides of the bijections, and the exact
Bessel-determinant evaluation of the oscillating-tableau count.

Everything here is an independent oracle: plain depth-first generation with
memoized counting, and exact rational series arithmetic.  Nothing imports
the growth-diagram machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

from .partitions import EMPTY, Partition
from .tableaux import from_chain


# ---------------------------------------------------------------------------
# shape enumeration


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, optionally bounding the number or size of parts."""
    if max_parts is None:
        max_parts = n
    if max_part is None:
        max_part = n

    def rec(remaining: int, limit: int, slots: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(acc)
            return
        if slots == 0:
            return
        for p in range(min(limit, remaining), 0, -1):
            acc.append(p)
            yield from rec(remaining - p, p, slots - 1, acc)
            acc.pop()

    yield from rec(n, max_part, max_parts, [])


def vertical_strips_below(lam: Partition) -> Iterator[Partition]:
    """All mu inside lam with lam/mu having at most one cell per row."""

    def rec(r: int, acc: list[int]) -> Iterator[Partition]:
        if r > len(lam):
            yield Partition(acc)
            return
        ceiling = acc[-1] if acc else lam.part(1)
        for v in (lam.part(r), lam.part(r) - 1):
            if 0 <= v <= ceiling:
                acc.append(v)
                yield from rec(r + 1, acc)
                acc.pop()

    yield from rec(1, [])


def vertical_strips_above(lam: Partition, size: int, max_cols: int) -> Iterator[Partition]:
    """All mu containing lam with mu/lam a vertical strip of the given size,
    every part of mu at most max_cols wide."""

    def rec(r: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if left == 0 and r > len(lam):
            yield Partition(acc)
            return
        ceiling = min(acc[-1] if acc else max_cols, max_cols)
        base = lam.part(r)
        choices = (base,) if left == 0 else (base, base + 1)
        for v in choices:
            if 1 <= v <= ceiling:
                acc.append(v)
                yield from rec(r + 1, left - (v - base), acc)
                acc.pop()

    yield from rec(1, size, [])


def horizontal_strips_above(lam: Partition, size: int, max_rows: int) -> Iterator[Partition]:
    """All mu containing lam with mu/lam a horizontal strip of the given size
    and at most max_rows parts."""

    def rec(r: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if left == 0 and r > len(lam):
            yield Partition(acc)
            return
        if r > max_rows:
            return
        base = lam.part(r)
        hi = base + left
        if r >= 2:
            # mu_r <= lam_{r-1} keeps the strip horizontal
            hi = min(hi, lam.part(r - 1))
        for v in range(hi, max(base, 1) - 1, -1):
            acc.append(v)
            yield from rec(r + 1, left - (v - base), acc)
            acc.pop()

    yield from rec(1, size, [])


# ---------------------------------------------------------------------------
# standard and semistandard tableaux


@lru_cache(maxsize=None)
def syt_count_of_shape(shape: Partition) -> int:
    """Number of standard tableaux of a shape, by chain extension."""
    if shape == EMPTY:
        return 1
    return sum(syt_count_of_shape(down) for down in shape.down_steps())


def hook_length_count(shape: Partition) -> int:
    """Hook-length formula; cross-check for :func:`syt_count_of_shape`."""
    n = shape.size
    if n == 0:
        return 1
    conj = shape.conjugate()
    product = 1
    for r, row_len in enumerate(shape, start=1):
        for c in range(1, row_len + 1):
            product *= (row_len - c) + (conj[c - 1] - r) + 1
    return factorial(n) // product


def _odd_cols(shape: Partition) -> int:
    return sum(1 for h in shape.conjugate() if h % 2 == 1)


def count_syt(n: int, max_col_len: int, odd_cols: int) -> int:
    """Standard tableaux of size n, columns at most max_col_len long, with the
    given number of odd columns."""
    total = 0
    for shape in partitions_of(n, max_parts=max_col_len):
        if _odd_cols(shape) == odd_cols:
            total += syt_count_of_shape(shape)
    return total


def iter_syt(n: int, max_col_len: int, odd_cols: int | None = None):
    """Yield the matching standard tableaux (as tableau objects)."""

    def rec(chain: list[Partition]) -> Iterator:
        if len(chain) == n + 1:
            if odd_cols is None or _odd_cols(chain[-1]) == odd_cols:
                yield from_chain(chain, semistandard=False)
            return
        for up in chain[-1].up_steps():
            if up.num_rows <= max_col_len:
                chain.append(up)
                yield from rec(chain)
                chain.pop()

    yield from rec([EMPTY])


def count_ssyt(j: Sequence[int], max_col_len: int, odd_cols: int) -> int:
    """Semistandard tableaux with j[i-1] entries i, columns at most
    max_col_len long, and the given number of odd columns."""
    j = tuple(j)

    @lru_cache(maxsize=None)
    def rec(i: int, shape: Partition) -> int:
        if i == len(j):
            return 1 if _odd_cols(shape) == odd_cols else 0
        return sum(
            rec(i + 1, up) for up in horizontal_strips_above(shape, j[i], max_col_len)
        )

    return rec(0, EMPTY)


def iter_ssyt(j: Sequence[int], max_col_len: int, odd_cols: int | None = None):
    """Yield the matching semistandard tableaux."""
    j = tuple(j)

    def rec(chain: list[Partition]) -> Iterator:
        if len(chain) == len(j) + 1:
            if odd_cols is None or _odd_cols(chain[-1]) == odd_cols:
                yield from_chain(chain, semistandard=True)
            return
        for up in horizontal_strips_above(chain[-1], j[len(chain) - 1], max_col_len):
            chain.append(up)
            yield from rec(chain)
            chain.pop()

    yield from rec([EMPTY])


# ---------------------------------------------------------------------------
# oscillating tableaux


def count_oscillating(n: int, k: int, m: int) -> int:
    """Oscillating tableaux of length n, at most k columns, ending at (1^m)."""
    target = Partition([1] * m)

    @lru_cache(maxsize=None)
    def rec(steps_left: int, shape: Partition) -> int:
        gap = abs(shape.size - m)
        if gap > steps_left or (steps_left - gap) % 2 == 1:
            return 0
        if steps_left == 0:
            return 1 if shape == target else 0
        total = sum(rec(steps_left - 1, up) for up in shape.up_steps(max_cols=k))
        total += sum(rec(steps_left - 1, down) for down in shape.down_steps())
        return total

    return rec(n, EMPTY)


def iter_oscillating(n: int, k: int, m: int) -> Iterator[tuple[Partition, ...]]:
    """Yield every oscillating tableau as a tuple of shapes."""
    target = Partition([1] * m)

    def rec(chain: list[Partition]) -> Iterator[tuple[Partition, ...]]:
        steps_left = n - (len(chain) - 1)
        gap = abs(chain[-1].size - m)
        if gap > steps_left or (steps_left - gap) % 2 == 1:
            return
        if steps_left == 0:
            if chain[-1] == target:
                yield tuple(chain)
            return
        for up in chain[-1].up_steps(max_cols=k):
            chain.append(up)
            yield from rec(chain)
            chain.pop()
        for down in chain[-1].down_steps():
            chain.append(down)
            yield from rec(chain)
            chain.pop()

    yield from rec([EMPTY])


def count_gen_oscillating(j: Sequence[int], k: int, m: int) -> int:
    """Generalized oscillating tableaux with the Knuth-side constraints:
    length 2n, vertical-strip alternation, at most k columns, size bookkeeping
    against the reversed content, ending at (1^m)."""
    j = tuple(j)
    n = len(j)
    target = Partition([1] * m)

    @lru_cache(maxsize=None)
    def rec(i: int, shape: Partition) -> int:
        if i == n:
            return 1 if shape == target else 0
        budget = j[n - 1 - i]
        total = 0
        for mid in vertical_strips_below(shape):
            drop = shape.size - mid.size
            if drop > budget:
                continue
            for up in vertical_strips_above(mid, budget - drop, k):
                total += rec(i + 1, up)
        return total

    return rec(0, EMPTY)


def iter_gen_oscillating(j: Sequence[int], k: int, m: int) -> Iterator[tuple[Partition, ...]]:
    """Yield every generalized oscillating tableau as a tuple of 2n+1 shapes."""
    j = tuple(j)
    n = len(j)
    target = Partition([1] * m)

    def rec(chain: list[Partition]) -> Iterator[tuple[Partition, ...]]:
        i = (len(chain) - 1) // 2
        if i == n:
            if chain[-1] == target:
                yield tuple(chain)
            return
        budget = j[n - 1 - i]
        shape = chain[-1]
        for mid in vertical_strips_below(shape):
            drop = shape.size - mid.size
            if drop > budget:
                continue
            for up in vertical_strips_above(mid, budget - drop, k):
                chain.extend([mid, up])
                yield from rec(chain)
                del chain[-2:]

    yield from rec([EMPTY])


# ---------------------------------------------------------------------------
# exact exponential series and the Bessel determinant


class ExpSeries:
    """A truncated power series with exact rational coefficients.

    ``coeffs[i]`` is the ordinary coefficient of t^i; the series order is
    fixed at construction and preserved by arithmetic.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def zero(cls, order: int) -> "ExpSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "ExpSeries":
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "ExpSeries") -> "ExpSeries":
        return ExpSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "ExpSeries") -> "ExpSeries":
        return ExpSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "ExpSeries":
        return ExpSeries(-a for a in self.coeffs)

    def __mul__(self, other: "ExpSeries") -> "ExpSeries":
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for jj, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + jj] += a * b
        return ExpSeries(out)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExpSeries) and other.coeffs == self.coeffs

    def __repr__(self) -> str:
        return f"ExpSeries({[str(c) for c in self.coeffs]})"


def bessel_series(alpha: int, order: int) -> ExpSeries:
    """The series of I_alpha(2t) up to t^order, with I_(-alpha) = I_alpha."""
    alpha = abs(alpha)
    coeffs = [Fraction(0)] * (order + 1)
    ell = 0
    while 2 * ell + alpha <= order:
        coeffs[2 * ell + alpha] = Fraction(1, factorial(ell) * factorial(ell + alpha))
        ell += 1
    return ExpSeries(coeffs)


def series_determinant(matrix: Sequence[Sequence[ExpSeries]], order: int) -> ExpSeries:
    """Exact determinant by signed permutation expansion."""
    k = len(matrix)
    det = ExpSeries.zero(order)
    for perm in permutations(range(k)):
        inversions = sum(
            1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b]
        )
        term = ExpSeries.one(order)
        for i in range(k):
            term = term * matrix[i][perm[i]]
        det = det + term if inversions % 2 == 0 else det - term
    return det


def bessel_count(n: int, k: int, m: int) -> int:
    """n! times the t^n coefficient of the k x k Bessel determinant whose
    (i, j) entry is I(i-j+m*[i=k])(2t) - I(i+j+m*[i=k])(2t)."""
    if n < 0 or k < 1 or m < 0:
        raise ValueError("need n >= 0, k >= 1, m >= 0")
    matrix = [
        [
            bessel_series(i - j + (m if i == k else 0), n)
            - bessel_series(i + j + (m if i == k else 0), n)
            for j in range(1, k + 1)
        ]
        for i in range(1, k + 1)
    ]
    det = series_determinant(matrix, n)
    value = det.coefficient(n) * factorial(n)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value} for (n={n}, k={k}, m={m})")
    return int(value)
