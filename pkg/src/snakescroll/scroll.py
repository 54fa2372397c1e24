"""Scroll and ticker-tape coordinates, successor maps, snake partitions.

The scroll repeats the fundamental orbit rows cyclically; reads accept
any integer row.  Column overflow wraps into the next row (the cylinder
identification: position (i, j+n) reads the same cell as (i+1, j)), and
the ticker tape is the row-major reading X_k with k = i*n + j, columns
j in 1..n.

All snake and co-snake computation happens on the live tape indices of
one window [0, sigma).  Shifting by sigma fixes every snake and every
co-snake (it is the advance of a full slither), and distinct snakes
cannot merge under that shift, so the finite quotient is faithful.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .cycles import Orbit, orbit
from .dsu import DisjointSet
from .slither import ScrollMetrics, metrics_from_row


def project(row: int, col: int, n: int) -> tuple[int, int]:
    """Normalize an unbounded coordinate to column range 1..n.

    Each full column overflow carries into the next row, so (0, n+1)
    lands at (1, 1) and negative columns borrow rows.
    """
    k = (col - 1) // n
    return row + k, col - k * n


def lift(row: int, col: int, k: int, n: int) -> tuple[int, int]:
    """Sheet-k preimage of a normalized coordinate; inverse of project."""
    return row - k, col + k * n


def tape_to_cell(t: int, n: int) -> tuple[int, int]:
    """Tape index k = i*n + j with j in 1..n."""
    j = (t - 1) % n + 1
    return (t - j) // n, j


def cell_to_tape(row: int, col: int, n: int) -> int:
    return row * n + col


@dataclass(frozen=True)
class Scroll:
    base: Orbit

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    def read(self, row: int, col: int) -> int:
        row, col = project(row, col, self.n)
        return int(self.base.rows[row % self.m][col - 1])

    def tape(self, t: int) -> int:
        row, col = tape_to_cell(t, self.n)
        return self.read(row, col)

    def live_in_rows(self, row_lo: int, row_hi: int) -> list[tuple[int, int]]:
        """Live entries (i, j) with row_lo <= i < row_hi."""
        out = []
        for i in range(row_lo, row_hi):
            for j, b in enumerate(self.base.rows[i % self.m], start=1):
                if b == "1":
                    out.append((i, j))
        return out

    @cached_property
    def metrics(self) -> ScrollMetrics:
        for row in self.base.rows:
            if "1" in row:
                met = metrics_from_row(row, self.n)
                if met.T_scroll != self.m:
                    raise AssertionError(
                        f"scroll period formula {met.T_scroll} != orbit length {self.m}"
                    )
                return met
        raise ValueError("orbit contains no live entries")

    @cached_property
    def tape_period(self) -> int:
        return self.metrics.T_tape

    def _pick(self, t: int, cands: list[tuple[int, str]], what: str) -> tuple[int, str]:
        hits = [(u, step) for u, step in cands if self.tape(u) == 1]
        if len(hits) != 1:
            raise AssertionError(
                f"{what} of live index {t}: {len(hits)} live candidates, expected 1"
            )
        return hits[0]

    def _require_live(self, t: int) -> None:
        if self.tape(t) != 1:
            raise ValueError(f"tape index {t} is not live")

    def successor_step(self, t: int) -> tuple[int, str]:
        self._require_live(t)
        n = self.n
        return self._pick(t, [(t + 2, "E"), (t + n + 1, "D")], "successor")

    def successor(self, t: int) -> int:
        return self.successor_step(t)[0]

    def co_successor_step(self, t: int) -> tuple[int, str]:
        self._require_live(t)
        n = self.n
        return self._pick(t, [(t + 2 * n - 1, "S"), (t + 2 * n - 2, "L")], "co-successor")

    def co_successor(self, t: int) -> int:
        return self.co_successor_step(t)[0]

    def predecessor_step(self, t: int) -> tuple[int, str]:
        self._require_live(t)
        n = self.n
        return self._pick(t, [(t - 2, "E"), (t - n - 1, "D")], "predecessor")

    def predecessor(self, t: int) -> int:
        return self.predecessor_step(t)[0]

    def co_predecessor_step(self, t: int) -> tuple[int, str]:
        self._require_live(t)
        n = self.n
        return self._pick(
            t, [(t - 2 * n + 1, "S"), (t - 2 * n + 2, "L")], "co-predecessor"
        )

    def co_predecessor(self, t: int) -> int:
        return self.co_predecessor_step(t)[0]

    def to_json(self) -> str:
        live = [[i, j] for (i, j) in self.live_in_rows(0, self.m)]
        return json.dumps(
            {"n": self.n, "rows": list(self.base.rows), "liveEntries": live}
        )


def scroll_from_seed(bits: str) -> Scroll:
    return Scroll(orbit(bits))


@dataclass(frozen=True)
class SnakePartition:
    sigma: int
    window: tuple[int, ...]  # live tape indices in [0, sigma)
    snake_label: dict[int, int]
    cosnake_label: dict[int, int]

    @property
    def alpha(self) -> int:
        return len(set(self.snake_label.values()))

    @property
    def beta(self) -> int:
        return len(set(self.cosnake_label.values()))

    def snake_of(self, t: int) -> int:
        return self.snake_label[t % self.sigma]

    def cosnake_of(self, t: int) -> int:
        return self.cosnake_label[t % self.sigma]


@lru_cache(maxsize=128)
def snakes_and_cosnakes(s: Scroll) -> SnakePartition:
    sigma = s.metrics.sigma
    window = tuple(t for t in range(sigma) if s.tape(t) == 1)
    if not window:
        raise ValueError("scroll window has no live entries")
    snakes = DisjointSet(window)
    cosnakes = DisjointSet(window)
    for t in window:
        snakes.union(t, s.successor(t) % sigma)
        cosnakes.union(t, s.co_successor(t) % sigma)
    return SnakePartition(sigma, window, snakes.components(), cosnakes.components())


def fiber(t: int, part: SnakePartition) -> frozenset[int]:
    """Window residues in the same snake and the same co-snake as t."""
    return frozenset(
        u
        for u in part.window
        if part.snake_label[u] == part.snake_label[t % part.sigma]
        and part.cosnake_label[u] == part.cosnake_label[t % part.sigma]
    )


def same_fiber(t1: int, t2: int, part: SnakePartition) -> bool:
    return (t1 - t2) % part.sigma == 0
