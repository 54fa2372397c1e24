"""Feasible pairs, first-row construction, tape enumeration."""

import pytest

from snakescroll.classify import (
    FeasibleQuadruple,
    canonical_tape,
    construct_first_row,
    enumerate_ticker_tapes,
    feasible_quadruples,
    gf_count,
)
from snakescroll.cyclic import canonical, cyclically_equal
from snakescroll.scroll import scroll_from_seed
from snakescroll.slither import coslither_from_row, slither_from_row


def test_quadruple_constraints():
    for n in range(2, 30):
        for quad in feasible_quadruples(n):
            assert quad.beta_d == 2 * (quad.alpha_s + quad.alpha_l) - 1
            assert 2 * quad.beta_e + 3 * quad.alpha_s + 4 * quad.alpha_l == n + 1
            assert quad.alpha > 0


def test_gf_count_small_values():
    # solutions of 2a+3b+4c = n+1 with (b,c) != (0,0), counted by hand
    assert [gf_count(n) for n in range(2, 14)] == [1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 5, 7]


def test_gf_count_equals_enumeration():
    for n in range(2, 41):
        assert gf_count(n) == len(feasible_quadruples(n))


def test_construct_running_example():
    row = construct_first_row("EDEDED", "SS", 11)
    assert cyclically_equal(
        canonical_tape(scroll_from_seed(row)),
        canonical_tape(scroll_from_seed("00001010000")),
    )


def test_construct_round_trip():
    for n in range(2, 15):
        for rec in enumerate_ticker_tapes(n):
            back_s = slither_from_row(rec.first_row).word
            back_c = coslither_from_row(rec.first_row).word
            assert cyclically_equal(back_s, rec.slither)
            assert cyclically_equal(back_c, rec.coslither)


def test_construct_rejects_mismatched_words():
    with pytest.raises(ValueError):
        construct_first_row("EDEDED", "SSS", 11)
    with pytest.raises(ValueError):
        construct_first_row("EEE", "S", 7)  # no D: no grammar rotation


def test_n13_classification_table():
    recs = enumerate_ticker_tapes(13)
    assert len(feasible_quadruples(13)) == 7
    assert len(recs) == 17
    got = sorted(
        (
            (q.beta_e, q.alpha_s, q.alpha_l, q.beta_d),
            canonical(rec.slither),
            canonical(rec.coslither),
        )
        for rec in recs
        for q in [rec.quadruple]
    )
    expected = sorted(
        ((be, as_, al, bd), canonical(ws), canonical(wc))
        for be, as_, al, bd, ws, wc in [
            (5, 0, 1, 1, "EEEEED", "L"),
            (3, 0, 2, 3, "EEEDDD", "LL"),
            (3, 0, 2, 3, "EEDEDD", "LL"),
            (3, 0, 2, 3, "EEDDED", "LL"),
            (3, 0, 2, 3, "EDEDED", "LL"),
            (1, 0, 3, 5, "EDDDDD", "LLL"),
            (4, 2, 0, 3, "EEEEDDD", "SS"),
            (4, 2, 0, 3, "EEEDEDD", "SS"),
            (4, 2, 0, 3, "EEEDDED", "SS"),
            (4, 2, 0, 3, "EEDEEDD", "SS"),
            (4, 2, 0, 3, "EEDEDED", "SS"),
            (2, 2, 1, 5, "EEDDDDD", "SSL"),
            (2, 2, 1, 5, "EDEDDDD", "SSL"),
            (2, 2, 1, 5, "EDDEDDD", "SSL"),
            (0, 2, 2, 7, "DDDDDDD", "SSLL"),
            (0, 2, 2, 7, "DDDDDDD", "SLSL"),
            (1, 4, 0, 7, "EDDDDDDD", "SSSS"),
        ]
    )
    assert got == expected


def test_tapes_are_distinct():
    for n in range(2, 13):
        recs = enumerate_ticker_tapes(n)
        assert len({rec.tape for rec in recs}) == len(recs)


def test_quadruple_ordering_is_stable():
    quads = feasible_quadruples(13)
    assert quads[0] == FeasibleQuadruple(0, 2, 2, 7)
    assert quads == sorted(quads)
