"""Column-sum vectors of orbit tables and the period-lambda constructions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .classify import construct_first_row, feasible_quadruples
from .scroll import Scroll, scroll_from_seed
from .tables import OrbitTable


@dataclass(frozen=True)
class SumVector:
    sums: tuple[int, ...]
    lam: int  # least cyclic period


def vector_period(values: tuple[int, ...]) -> int:
    """Least d dividing len(values) with the vector fixed by a shift of d."""
    n = len(values)
    for d in range(1, n + 1):
        if n % d == 0 and all(values[i] == values[(i + d) % n] for i in range(n)):
            return d
    return n


def sum_vector(t: OrbitTable) -> SumVector:
    sums = [0] * t.n
    for row in t.rows:
        for j, b in enumerate(row):
            sums[j] += int(b)
    sums = tuple(sums)
    return SumVector(sums, vector_period(sums))


def col_scale(s: Scroll) -> int:
    """Scale mod n; both letter-count forms evaluated and checked."""
    met = s.metrics
    via_slither = met.slither.beta_d + 2 * met.slither.beta_e
    via_coslither = s.n - met.coslither.alpha_s - 2 * met.coslither.alpha_l
    if via_slither != via_coslither or via_slither != met.sigma % s.n:
        raise AssertionError(
            f"ColScale forms disagree: {via_slither}, {via_coslither}, "
            f"{met.sigma % s.n}"
        )
    return via_slither


def period_lambda_words(lam: int, k: int) -> tuple[str, str]:
    """The slither/co-slither pair whose orbit table has sum period lam."""
    if lam % 2 == 0 or lam < 3:
        raise ValueError("construction targets odd lambda >= 3")
    if k < 4:
        raise ValueError("k must be at least 4")
    if k % 2 == 0:
        ws = "D" * (lam - 2) + "E" + "D" * 2 + "E" * (lam * k // 2 - lam - 1)
        wc = "S" + "L" * ((lam - 1) // 2)
    else:
        ws = "D" * (2 * lam + 1) + "E" * (((k - 4) * lam - 1) // 2)
        wc = "S" * 2 + "L" * (lam - 1)
    return ws, wc


def _constant_sum_seed(n: int) -> str:
    # Any pair with gcd(n, ColScale) = 1 forces sum period 1.
    for quad in feasible_quadruples(n):
        if gcd(n, quad.beta_d + 2 * quad.beta_e) == 1:
            ws = "D" * quad.beta_d + "E" * quad.beta_e
            wc = "S" * quad.alpha_s + "L" * quad.alpha_l
            return construct_first_row(ws, wc, n)
    raise ValueError(f"no coprime-ColScale pair found for n={n}")


def construct_period_lambda(lam: int, k: int) -> Scroll:
    """A scroll with n = k*lambda whose sum vector has period exactly lambda.

    lambda = 1 falls back to any constant-sum orbit; the two-case word
    construction needs lambda >= 3.
    """
    if lam < 1 or lam % 2 == 0:
        raise ValueError("lambda must be a positive odd integer")
    if k < 4:
        raise ValueError("k must be at least 4")
    n = lam * k
    if lam == 1:
        seed = _constant_sum_seed(n)
    else:
        ws, wc = period_lambda_words(lam, k)
        seed = construct_first_row(ws, wc, n)
    s = scroll_from_seed(seed)
    achieved = sum_vector(OrbitTable(s, 1)).lam
    if achieved != lam:
        raise AssertionError(
            f"construction for (lambda={lam}, k={k}) achieved period {achieved}"
        )
    return s
