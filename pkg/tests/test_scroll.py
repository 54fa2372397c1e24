"""Cylinder coordinates, successor maps, snake partitions."""

import json

import pytest

from snakescroll.scroll import (
    cell_to_tape,
    fiber,
    lift,
    project,
    same_fiber,
    scroll_from_seed,
    snakes_and_cosnakes,
    tape_to_cell,
)

SEED11 = "00001010000"


def test_project_normalizes_columns():
    assert project(0, 12, 11) == (1, 1)
    assert project(-1, -5, 11) == (-2, 6)
    assert project(3, 7, 11) == (3, 7)
    assert project(0, 11, 11) == (0, 11)
    assert project(0, 22, 11) == (1, 11)


def test_lift_inverts_project():
    for row in range(-3, 4):
        for col in range(-25, 26):
            i, j = project(row, col, 11)
            assert 1 <= j <= 11
            for k in range(-2, 3):
                li, lj = lift(i, j, k, 11)
                assert project(li, lj, 11) == (i, j)


def test_tape_cell_round_trip():
    for t in range(-40, 41):
        i, j = tape_to_cell(t, 11)
        assert 1 <= j <= 11
        assert cell_to_tape(i, j, 11) == t


def test_scroll_reads_repeat_the_orbit():
    s = scroll_from_seed(SEED11)
    assert s.m == 7
    for i in range(7):
        for j in range(1, 12):
            assert s.read(i, j) == s.read(i + 7, j)
            assert s.read(i, j + 11) == s.read(i + 1, j)


def test_successor_steps_on_the_running_example():
    s = scroll_from_seed(SEED11)
    # row 0 live columns are 5 and 7: tape indices 5 and 7
    assert s.tape(5) == 1 and s.tape(7) == 1
    assert s.successor_step(5) == (7, "E")
    t, letter = s.successor_step(7)
    assert (t, letter) == (19, "D")  # lands in row 1
    assert s.predecessor(7) == 5
    assert s.co_predecessor(s.co_successor(5)) == 5


def test_successor_and_co_successor_commute():
    s = scroll_from_seed(SEED11)
    live = [t for t in range(1, 7 * 11 + 1) if s.tape(t) == 1]
    for t in live:
        assert s.successor(s.co_successor(t)) == s.co_successor(s.successor(t))


def test_steps_reject_dead_indices():
    s = scroll_from_seed(SEED11)
    with pytest.raises(ValueError):
        s.successor(6)


def test_snake_partition_counts():
    s = scroll_from_seed(SEED11)
    part = snakes_and_cosnakes(s)
    assert part.sigma == 42
    assert part.alpha == 2
    assert part.beta == 6
    assert len(part.window) == 12  # alpha * beta


def test_snake_labels_invariant_under_steps():
    s = scroll_from_seed(SEED11)
    part = snakes_and_cosnakes(s)
    for t in part.window:
        assert part.snake_of(s.successor(t)) == part.snake_of(t)
        assert part.cosnake_of(s.co_successor(t)) == part.cosnake_of(t)


def test_fibers_are_singletons():
    s = scroll_from_seed(SEED11)
    part = snakes_and_cosnakes(s)
    for t in part.window:
        assert fiber(t, part) == frozenset({t})
    assert same_fiber(5, 5 + 42, part)
    assert not same_fiber(5, 7, part)


def test_to_json_layout():
    s = scroll_from_seed("00")
    payload = json.loads(s.to_json())
    assert payload["n"] == 2
    assert payload["rows"] == ["00", "10", "01"]
    assert payload["liveEntries"] == [[1, 1], [2, 2]]


def test_metrics_raise_on_inconsistent_use():
    s = scroll_from_seed(SEED11)
    assert s.tape_period == 7
