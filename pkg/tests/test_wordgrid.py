"""Letter grids, path enumeration, and the symmetric closed form."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from configcount.budget import OracleBudgetError
from configcount.counting import MoveWord, count_move_words
from configcount.wordgrid import (
    corner_class_decomposition,
    count_paths_by_symbol_product,
    count_word_paths_closed,
    enumerate_word_paths,
    generate_manhattan_rings,
    letter_grid_from_rows,
)

DISTINCT_WORDS = {1: "a", 3: "abc", 5: "abcde", 7: "abcdefg"}


def _center_distance(grid, cell):
    c = (grid.cols - 1) // 2
    return abs(cell[0] - c) + abs(cell[1] - c)


def test_rings_layout_for_open():
    g = generate_manhattan_rings("Open!")
    assert (g.cols, g.rows) == (5, 5)
    assert g.cells[(2, 2)] == "O"
    for corner in [(0, 0), (4, 0), (0, 4), (4, 4)]:
        assert g.cells[corner] == "!"
    assert Counter(g.cells.values()) == {"O": 1, "p": 4, "e": 8, "n": 8, "!": 4}


def test_rings_sizes_follow_min_formula():
    for word in ("abcde", "abcdefg"):
        g = generate_manhattan_rings(word)
        length = len(word)
        by_distance = Counter(_center_distance(g, cell) for cell in g.cells)
        assert by_distance[0] == 1
        for d in range(1, length):
            assert by_distance[d] == 4 * min(d, length - d)


def test_rings_degenerate_and_small():
    g = generate_manhattan_rings("X")
    assert (g.cols, g.rows) == (1, 1)
    assert g.cells == {(0, 0): "X"}
    g = generate_manhattan_rings("aba")
    assert g.cells[(1, 1)] == "a"
    assert all(g.cells[c] == "b" for c in [(0, 1), (1, 0), (2, 1), (1, 2)])
    assert all(g.cells[c] == "a" for c in [(0, 0), (2, 0), (0, 2), (2, 2)])


def test_rings_rejects_even_length():
    with pytest.raises(ValueError, match="requires odd word length"):
        generate_manhattan_rings("Open")
    with pytest.raises(ValueError, match="requires odd word length"):
        generate_manhattan_rings("")


def test_letter_grid_from_rows_reading_order():
    g = letter_grid_from_rows(["abc", "def"])
    assert (g.cols, g.rows) == (3, 2)
    assert g.cells[(0, 0)] == "a"
    assert g.cells[(2, 1)] == "f"


def test_letter_grid_from_rows_validation():
    with pytest.raises(ValueError):
        letter_grid_from_rows([])
    with pytest.raises(ValueError):
        letter_grid_from_rows(["ab", "c"])
    with pytest.raises(ValueError):
        letter_grid_from_rows(["ab", ""])


def test_enumerate_open_side_adjacency():
    g = generate_manhattan_rings("Open!")
    witnesses = enumerate_word_paths(g, "Open!", "side")
    assert len(witnesses) == 24
    assert witnesses == sorted(witnesses, key=lambda w: w.cells)
    assert witnesses[0].cells == ((2, 2), (1, 2), (0, 2), (0, 1), (0, 0))


def test_enumerate_single_symbol_word():
    g = generate_manhattan_rings("Open!")
    witnesses = enumerate_word_paths(g, "O", "side")
    assert [w.cells for w in witnesses] == [((2, 2),)]


def test_enumerate_open_unconstrained():
    g = generate_manhattan_rings("Open!")
    witnesses = enumerate_word_paths(g, "Open!", "none")
    assert len(witnesses) == 1024
    assert len(witnesses) == count_paths_by_symbol_product(g, "Open!")


def test_closed_form_examples():
    report = count_word_paths_closed("Open!")
    assert report.total == 24
    assert report.per_class == {(0, 0): 6, (0, 4): 6, (4, 0): 6, (4, 4): 6}
    assert report.formula == "4 × 6 = 24"
    assert count_word_paths_closed("X").total == 1
    report = count_word_paths_closed("abc")
    assert report.total == 8
    assert set(report.per_class.values()) == {2}
    with pytest.raises(ValueError, match="requires odd word length"):
        count_word_paths_closed("ab")


def test_closed_form_matches_enumeration_for_distinct_words():
    for length, word in DISTINCT_WORDS.items():
        grid = generate_manhattan_rings(word)
        witnesses = enumerate_word_paths(grid, word, "side")
        report = count_word_paths_closed(word)
        assert report.total == len(witnesses)
        if length > 1:
            assert report.total == 4 * count_move_words(
                MoveWord((length - 1) // 2, (length - 1) // 2)
            )


def test_corner_class_decomposition():
    g = generate_manhattan_rings("Open!")
    side = corner_class_decomposition(enumerate_word_paths(g, "Open!", "side"))
    assert side.total == 24
    assert side.classes == {(0, 0): 6, (0, 4): 6, (4, 0): 6, (4, 4): 6}
    empty = corner_class_decomposition([])
    assert empty.total == 0 and empty.classes == {}
    free = corner_class_decomposition(enumerate_word_paths(g, "Open!", "none"))
    assert free.classes == {(0, 0): 256, (0, 4): 256, (4, 0): 256, (4, 4): 256}


def test_class_sizes_sum_to_total():
    g = generate_manhattan_rings("abcde")
    for adjacency in ("side", "king", "none"):
        witnesses = enumerate_word_paths(g, "abcde", adjacency)
        report = corner_class_decomposition(witnesses)
        assert sum(report.classes.values()) == report.total == len(witnesses)


def test_four_fold_symmetry_of_corner_classes():
    for word in ("abc", "abcde", "abcdefg"):
        g = generate_manhattan_rings(word)
        for adjacency in ("side", "none"):
            classes = corner_class_decomposition(
                enumerate_word_paths(g, word, adjacency)
            ).classes
            assert len(classes) == 4
            assert len(set(classes.values())) == 1


def test_side_witnesses_walk_strictly_outward():
    # With pairwise-distinct symbols each step must move one ring further out.
    for word in DISTINCT_WORDS.values():
        g = generate_manhattan_rings(word)
        for w in enumerate_word_paths(g, word, "side"):
            distances = [_center_distance(g, cell) for cell in w.cells]
            assert distances == list(range(len(word)))


def test_diagonal_contact_cannot_bridge_adjacent_rings():
    # A king step changes the center distance by 0 or 2, so on distinct-symbol
    # rings the king rule adds nothing over the side rule.
    for word in ("abc", "abcde", "abcdefg"):
        g = generate_manhattan_rings(word)
        assert enumerate_word_paths(g, word, "king") == enumerate_word_paths(g, word, "side")


def test_repeated_symbols_allow_revisits_unless_distinct():
    g = letter_grid_from_rows(["aaa"])
    assert len(enumerate_word_paths(g, "aaa", "side", distinct_cells=False)) == 6
    straight = enumerate_word_paths(g, "aaa", "side", distinct_cells=True)
    assert [w.cells for w in straight] == [
        ((0, 0), (1, 0), (2, 0)),
        ((2, 0), (1, 0), (0, 0)),
    ]
    g2 = letter_grid_from_rows(["aa"])
    assert len(enumerate_word_paths(g2, "aa", "none", distinct_cells=False)) == 4
    assert len(enumerate_word_paths(g2, "aa", "none", distinct_cells=True)) == 2


def test_symbol_product_with_missing_symbol_is_zero():
    g = letter_grid_from_rows(["ab"])
    assert count_paths_by_symbol_product(g, "az") == 0
    assert enumerate_word_paths(g, "az", "none") == []


def test_budget_guard():
    g = generate_manhattan_rings("Open!")
    with pytest.raises(OracleBudgetError, match="oracle budget exceeded"):
        enumerate_word_paths(g, "Open!", "none", max_visits=10)
    assert len(enumerate_word_paths(g, "Open!", "side", max_visits=10_000)) == 24


def test_bad_arguments_rejected():
    g = generate_manhattan_rings("Open!")
    with pytest.raises(ValueError, match="unknown adjacency"):
        enumerate_word_paths(g, "Open!", "diagonal")
    with pytest.raises(ValueError, match="non-empty"):
        enumerate_word_paths(g, "", "side")
    with pytest.raises(ValueError, match="non-empty"):
        count_paths_by_symbol_product(g, "")


_tiny_grids = st.integers(min_value=1, max_value=4).flatmap(
    lambda cols: st.lists(
        st.text(alphabet="ab", min_size=cols, max_size=cols),
        min_size=1,
        max_size=4,
    )
)


@settings(max_examples=60, deadline=None)
@given(
    rows=_tiny_grids,
    word=st.text(alphabet="ab", min_size=1, max_size=4),
    adjacency=st.sampled_from(["side", "king", "none"]),
    distinct=st.booleans(),
)
def test_reversal_bijection(rows, word, adjacency, distinct):
    """Reading the reversed word reverses each witness, so counts agree."""
    grid = letter_grid_from_rows(rows)
    forward = enumerate_word_paths(grid, word, adjacency, distinct)
    backward = enumerate_word_paths(grid, word[::-1], adjacency, distinct)
    assert len(forward) == len(backward)
    assert {w.cells[::-1] for w in forward} == {w.cells for w in backward}


@settings(max_examples=60, deadline=None)
@given(
    rows=_tiny_grids,
    word=st.text(alphabet="ab", min_size=1, max_size=4),
    distinct=st.booleans(),
)
def test_adjacency_monotonicity(rows, word, distinct):
    grid = letter_grid_from_rows(rows)
    side = len(enumerate_word_paths(grid, word, "side", distinct))
    king = len(enumerate_word_paths(grid, word, "king", distinct))
    free = len(enumerate_word_paths(grid, word, "none", distinct))
    assert side <= king <= free


@settings(max_examples=60, deadline=None)
@given(rows=_tiny_grids, word=st.text(alphabet="ab", min_size=1, max_size=4))
def test_symbol_product_matches_unconstrained_enumeration(rows, word):
    grid = letter_grid_from_rows(rows)
    assert count_paths_by_symbol_product(grid, word) == len(
        enumerate_word_paths(grid, word, "none")
    )
