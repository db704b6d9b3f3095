from itertools import zip_longest

import pytest

from oscgrowth.partitions import (
    EMPTY,
    Partition,
    StripType,
    column_stats,
    conjugate,
    contains,
    format_partition,
    intersection,
    parse_partition,
    skew_cells,
    strip_type,
    union,
)

from conftest import p


def box_partitions(max_parts, max_part):
    """All partitions fitting in a max_parts x max_part box."""
    out = [EMPTY]
    def rec(acc, limit):
        for v in range(min(limit, max_part), 0, -1):
            cand = acc + [v]
            out.append(Partition(cand))
            if len(cand) < max_parts:
                rec(cand, v)
    rec([], max_part)
    return out


def oracle_contains(mu, lam):
    return all(a <= b for a, b in zip_longest(mu, lam, fillvalue=0))


def oracle_union(mu, nu):
    return Partition(max(a, b) for a, b in zip_longest(mu, nu, fillvalue=0))


def oracle_intersection(mu, nu):
    return Partition(min(a, b) for a, b in zip_longest(mu, nu, fillvalue=0))


def test_constructor_canonicalizes():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([]) == EMPTY
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_contains_examples():
    assert contains(EMPTY, p(3, 1))
    assert contains(p(2, 1), p(2, 1))
    assert not contains(p(2, 2), p(3, 1))


def test_union_examples():
    assert union(p(2), p(1, 1)) == p(2, 1)
    assert union(EMPTY, p(3, 2)) == p(3, 2)
    assert union(p(3, 1, 1), p(2, 2)) == p(3, 2, 1)


def test_intersection_examples():
    assert intersection(p(2), p(1, 1)) == p(1)
    assert intersection(EMPTY, p(3, 2)) == EMPTY
    assert intersection(p(3, 1, 1), p(2, 2)) == p(2, 1)


def test_conjugate_examples():
    assert conjugate(p(3, 1)) == p(2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(p(1, 1, 1, 1)) == p(4)


def test_strip_type_examples():
    assert strip_type(p(1), p(2, 1)) == StripType.HORIZONTAL_AND_VERTICAL
    assert strip_type(p(2, 1), p(2, 2)) == StripType.ONE_SQUARE
    assert strip_type(p(1, 1, 1), p(2, 1, 1)) == StripType.ONE_SQUARE
    assert strip_type(p(2, 1), p(2, 1)) == StripType.EQUAL
    assert strip_type(p(2), p(1)) == StripType.NOT_CONTAINED
    assert strip_type(p(1), p(3)) == StripType.HORIZONTAL_STRIP
    assert strip_type(p(1), p(1, 1, 1)) == StripType.VERTICAL_STRIP
    assert strip_type(p(1), p(3, 3)) == StripType.OTHER


def test_strip_type_against_cell_listing_oracle():
    shapes = box_partitions(4, 4)
    for mu in shapes:
        for lam in shapes:
            got = strip_type(mu, lam)
            if not oracle_contains(mu, lam):
                assert got == StripType.NOT_CONTAINED
                continue
            cells = [(r, c) for r in range(1, len(lam) + 1)
                     for c in range(mu.part(r) + 1, lam.part(r) + 1)]
            assert cells == skew_cells(mu, lam)
            rows = [r for r, _ in cells]
            cols = [c for _, c in cells]
            if not cells:
                assert got == StripType.EQUAL
            elif len(cells) == 1:
                assert got == StripType.ONE_SQUARE
            else:
                h = len(set(cols)) == len(cols)
                v = len(set(rows)) == len(rows)
                expected = {
                    (True, True): StripType.HORIZONTAL_AND_VERTICAL,
                    (True, False): StripType.HORIZONTAL_STRIP,
                    (False, True): StripType.VERTICAL_STRIP,
                    (False, False): StripType.OTHER,
                }[(h, v)]
                assert got == expected


def test_column_stats():
    assert column_stats(p(4, 3, 2, 2, 1)) == (4, 5, 2)
    assert column_stats(EMPTY) == (0, 0, 0)
    assert column_stats(p(1, 1)) == (1, 2, 0)


def test_lattice_identities_exhaustive():
    shapes = box_partitions(6, 6)
    for a in shapes:
        for b in shapes:
            u = union(a, b)
            i = intersection(a, b)
            assert u == oracle_union(a, b)
            assert i == oracle_intersection(a, b)
            assert intersection(a, u) == a
            assert union(a, i) == a
            assert u.size + i.size == a.size + b.size
            assert contains(a, b) == oracle_contains(a, b)


def test_conjugate_is_involution():
    for n in range(13):
        for shape in _partitions_of(n):
            assert conjugate(conjugate(shape)) == shape


def test_containment_conjugate_duality():
    shapes = box_partitions(4, 4)
    for mu in shapes:
        for lam in shapes:
            assert contains(mu, lam) == contains(conjugate(mu), conjugate(lam))


def test_strip_conjugate_duality():
    shapes = box_partitions(4, 4)
    for mu in shapes:
        for lam in shapes:
            if lam.size - mu.size < 2:
                continue
            h = strip_type(mu, lam) == StripType.HORIZONTAL_STRIP
            v = strip_type(conjugate(mu), conjugate(lam)) == StripType.VERTICAL_STRIP
            assert h == v


def test_add_remove_cell():
    assert p(2, 1).add_cell(1) == p(3, 1)
    assert p(2, 1).add_cell(3) == p(2, 1, 1)
    with pytest.raises(ValueError):
        p(2, 1).add_cell(4)
    with pytest.raises(ValueError):
        p(2, 2).add_cell(2)
    assert p(2, 1).remove_cell(2) == p(2)
    with pytest.raises(ValueError):
        p(2, 2).remove_cell(1)


def test_up_down_steps():
    ups = set(p(2, 1).up_steps())
    assert ups == {p(3, 1), p(2, 2), p(2, 1, 1)}
    assert set(p(2, 1).up_steps(max_cols=2)) == {p(2, 2), p(2, 1, 1)}
    downs = set(p(2, 1).down_steps())
    assert downs == {p(1, 1), p(2)}


def test_text_form():
    assert format_partition(p(3, 1, 1)) == "[3,1,1]"
    assert format_partition(EMPTY) == "[]"
    assert parse_partition("[3,1,1]") == p(3, 1, 1)
    assert parse_partition(" [] ") == EMPTY
    with pytest.raises(ValueError):
        parse_partition("3,1")
    with pytest.raises(ValueError):
        parse_partition("[a]")


def _partitions_of(n):
    from oscgrowth.counting import partitions_of

    return partitions_of(n)
