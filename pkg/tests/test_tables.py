"""Finite orbit tables: ouroboros counts, swallows, group structure."""

import pytest

from snakescroll.cycles import all_orbits
from snakescroll.scroll import Scroll, scroll_from_seed
from snakescroll.tables import (
    co_swallow,
    fundamental_degrees,
    group_invariants,
    is_color_preserving,
    omega_table,
    ouroboros_partition,
    permutation_group_invariants,
    predicted_counts,
    product_invariants,
    smith_invariants,
    swallow,
    table_coslither,
    table_degrees,
    table_slither,
)

SEED11 = "00001010000"


def test_table_shape():
    s = scroll_from_seed(SEED11)
    t = omega_table(s, 2)
    assert t.r == 14
    assert t.size == 154
    assert t.eta == 44  # 22 live entries per fundamental vector
    with pytest.raises(ValueError):
        omega_table(s, 0)


def test_running_example_fundamental_counts():
    s = scroll_from_seed(SEED11)
    tab = ouroboros_partition(omega_table(s, 1))
    assert (tab.bar_alpha, tab.bar_beta) == (1, 2)
    assert fundamental_degrees(s) == (2, 3)


def test_running_example_predicted_counts():
    s = scroll_from_seed(SEED11)
    for omega in range(1, 13):
        tab = ouroboros_partition(omega_table(s, omega))
        assert (tab.bar_alpha, tab.bar_beta) == predicted_counts(s, omega)
    assert predicted_counts(s, 2) == (2, 2)
    assert predicted_counts(s, 6) == (2, 6)


def test_running_example_co_swallow():
    s = scroll_from_seed(SEED11)
    cs = co_swallow(omega_table(s, 1))
    assert cs.shift == 4
    assert cs.cycle_type == (3, 3)
    sw = swallow(omega_table(s, 1))
    assert sw.cycle_type == (2,)  # alpha=2 snakes folded into one ouroboros


def test_swallow_cycle_structure_everywhere():
    for n in range(2, 10):
        for o in all_orbits(n):
            s = Scroll(o)
            for omega in (1, 2, 3):
                table = omega_table(s, omega)
                tab = ouroboros_partition(table)
                deg_p, codeg_p = table_degrees(s, omega)
                assert swallow(table).cycle_type == tuple([deg_p] * tab.bar_alpha)
                assert co_swallow(table).cycle_type == tuple(
                    [codeg_p] * tab.bar_beta
                )


def test_running_example_group():
    s = scroll_from_seed(SEED11)
    inv = group_invariants(omega_table(s, 1))
    assert inv.nontrivial == (22,)
    assert inv.order == 22


def test_smith_invariants_basics():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariants([[6, 0], [0, 10]]) == [2, 30]
    assert smith_invariants([[1, 0], [0, 1]]) == [1, 1]


def test_product_invariants():
    assert product_invariants(2, 11) == (22,)
    assert product_invariants(2, 4) == (2, 4)
    assert product_invariants(1, 5) == (5,)


def test_presentation_matches_permutation_group():
    # brute-force relation lattice of the two reduced maps as an oracle
    for n in range(2, 9):
        for o in all_orbits(n):
            s = Scroll(o)
            for omega in (1, 2, 3, 4):
                table = omega_table(s, omega)
                inv = group_invariants(table)
                assert (inv.nontrivial or (1,)) == (
                    permutation_group_invariants(table) or (1,)
                )


def test_direct_product_forms_fail_on_some_tables():
    # Z_bar_alpha x Z_(eta/bar_alpha) is not always the table group
    inv = group_invariants(omega_table(scroll_from_seed("0000"), 1))
    assert inv.nontrivial == (8,)
    assert not inv.matches_co_ouro_product  # product form says (2, 4)
    inv = group_invariants(omega_table(scroll_from_seed("000100"), 1))
    assert inv.nontrivial == (12,)
    assert not inv.matches_ouro_product  # product form says (2, 6)


def test_table_words_power_up_to_scroll_words():
    s = scroll_from_seed(SEED11)
    t1 = omega_table(s, 1)
    assert table_slither(t1) == "ED"
    assert table_coslither(t1) == "S"
    deg_p, codeg_p = table_degrees(s, 1)
    assert table_slither(t1) * codeg_p == s.metrics.slither.word
    assert table_coslither(t1) * deg_p == s.metrics.coslither.word


def test_color_preserving_running_example():
    s = scroll_from_seed(SEED11)
    for omega in range(1, 13):
        assert is_color_preserving(s, omega) == (omega % 6 == 0)


def test_crossed_degree_divisibility():
    for n in range(2, 11):
        for o in all_orbits(n):
            s = Scroll(o)
            met = s.metrics
            deg_p1, codeg_p1 = fundamental_degrees(s)
            assert met.codeg % deg_p1 == 0
            assert met.deg % codeg_p1 == 0


def test_same_side_divisibility_fails_on_running_example():
    # deg(p_1) = 2 does not divide deg = 3: only the crossed law holds
    s = scroll_from_seed(SEED11)
    deg_p1, _ = fundamental_degrees(s)
    assert s.metrics.deg % deg_p1 != 0
