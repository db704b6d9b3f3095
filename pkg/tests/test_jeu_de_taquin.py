import random
from itertools import permutations

import pytest

from oscgrowth.counting import iter_ssyt, iter_syt
from oscgrowth.jeu_de_taquin import (
    eject_markers,
    inject_markers,
    inverse_rs_extract,
    is_outer_corner,
    row_insert,
    rsk,
    schensted,
)
from oscgrowth.tableaux import (
    SemistandardTableau,
    StandardTableau,
    TableauError,
    format_tableau,
    parse_tableau,
)

from conftest import RUN_SSYT, RUN_SSYT_AUGMENTED_ROWS, RUN_SYT, RUN_SYT_AUGMENTED_ROWS


def test_inject_running_example_standard():
    aug = inject_markers(RUN_SYT)
    assert format_tableau(aug) == RUN_SYT_AUGMENTED_ROWS
    assert aug.marker_count == 2


def test_inject_running_example_semistandard():
    aug = inject_markers(RUN_SSYT)
    assert format_tableau(aug) == RUN_SSYT_AUGMENTED_ROWS
    assert aug.content == RUN_SSYT.content


def test_inject_no_odd_columns_is_noop():
    t = StandardTableau([[1, 3], [2, 4]])
    aug = inject_markers(t)
    assert aug.marker_count == 0
    assert aug.rows == t.rows
    assert eject_markers(aug) == t


def test_eject_running_examples():
    assert eject_markers(inject_markers(RUN_SYT)) == RUN_SYT
    assert eject_markers(inject_markers(RUN_SSYT)) == RUN_SSYT


def test_eject_requires_markers_in_first_row():
    aug = parse_tableau("I II 1\n1 2")
    # tamper: markers not leading the first row is caught at construction
    with pytest.raises(TableauError):
        parse_tableau("1 I\nII 2")
    assert eject_markers(aug).size == 3


def test_inject_eject_round_trip_exhaustive():
    for n in range(9):
        for t in iter_syt(n, n if n else 1):
            aug = inject_markers(t)
            # the point of the markers: every column of the new shape is even
            assert all(c % 2 == 0 for c in aug.shape.conjugate())
            assert eject_markers(aug) == t


def test_inject_eject_round_trip_random_ssyt():
    rng = random.Random(5)
    done = 0
    while done < 150:
        letters = rng.randint(1, 4)
        content = tuple(rng.randint(0, 3) for _ in range(letters))
        if not 0 < sum(content) <= 10:
            continue
        pool = list(iter_ssyt(content, 10))
        if not pool:
            continue
        t = rng.choice(pool)
        assert eject_markers(inject_markers(t)) == t
        done += 1


def test_inverse_rs_extract_examples():
    t, v = inverse_rs_extract(StandardTableau([[1, 2]]), (1, 2))
    assert (t.rows, v) == (((1,),), 2)
    # frozen from the forward-insertion oracle: inserting the extracted value
    # into the reduced tableau must restore the input
    t, v = inverse_rs_extract(StandardTableau([[1, 3], [2]]), (2, 1))
    assert (t.rows, v) == (((2, 3),), 1)
    assert row_insert(t, v) == StandardTableau([[1, 3], [2]])
    t, v = inverse_rs_extract(StandardTableau([[1, 2], [3]]), (2, 1))
    assert (t.rows, v) == (((1, 3),), 2)
    assert row_insert(t, v) == StandardTableau([[1, 2], [3]])


def test_inverse_rs_extract_requires_corner():
    with pytest.raises(TableauError, match="outer corner"):
        inverse_rs_extract(StandardTableau([[1, 2], [3]]), (1, 1))


def test_extract_insert_round_trip_all_corners():
    for n in range(1, 8):
        for t in iter_syt(n, n):
            shape = t.shape
            for row in range(1, shape.num_rows + 1):
                col = shape.part(row)
                if not is_outer_corner(shape, row, col):
                    continue
                reduced, value = inverse_rs_extract(t, (row, col))
                assert value not in reduced.entry_set
                assert row_insert(reduced, value) == t


def test_schensted_basics():
    p_t, q_t = schensted((1, 2, 3))
    assert p_t.rows == q_t.rows == ((1, 2, 3),)
    p_t, q_t = schensted((3, 2, 1))
    assert p_t.rows == q_t.rows == ((1,), (2,), (3,))
    p_t, q_t = schensted((3, 1, 2))
    assert p_t.rows == ((1, 2), (3,))
    assert q_t.rows == ((1, 3), (2,))


def test_schensted_shapes_match():
    for perm in permutations(range(1, 6)):
        p_t, q_t = schensted(perm)
        assert p_t.shape == q_t.shape


def test_rsk_small_matrix():
    # biletters (1,1), (2,1), (2,2): equal inserts never bump each other
    p_t, q_t = rsk([[1, 0], [1, 1]])
    assert p_t.rows == ((1, 1, 2),)
    assert q_t.rows == ((1, 2, 2),)
    p_t, q_t = rsk([[0, 1], [1, 0]])
    assert p_t.rows == ((1,), (2,))
    assert q_t.rows == ((1,), (2,))
    p0, q0 = rsk([[0]])
    assert p0.rows == () and q0.rows == ()


def test_rsk_matches_schensted_on_permutation_matrices():
    for perm in permutations(range(1, 5)):
        matrix = [[1 if perm[i] == j + 1 else 0 for j in range(4)] for i in range(4)]
        p_t, q_t = rsk(matrix)
        ps, qs = schensted(perm)
        assert p_t.rows == ps.rows and q_t.rows == qs.rows
