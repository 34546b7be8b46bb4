"""Reference solver: exact win probability by collision recurrence.

Conditioning on the first collision removes one particle: with front
speeds a and b, side A keeps its particle with probability a/(a+b) and the
duel continues one B short, otherwise one A short.  Tabulating that
recurrence over suffix pairs of the two speed lists costs O(m*n) exact
rational operations.  Every other solver in this package is checked
against this one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import Instance, parse_speed


@dataclass(frozen=True)
class DpTable:
    """Win probabilities of every suffix duel a[i:] versus b[j:].

    The key (i, j) means i A-particles and j B-particles are already dead.
    (m, n) is absent: the empty-vs-empty duel has no defined winner.
    """

    m: int
    n: int
    memo: dict[tuple[int, int], Fraction]

    @property
    def value(self) -> Fraction:
        """P(A wins) for the full duel."""
        return self.memo[0, 0]


def fill_table(inst: Instance) -> DpTable:
    """Tabulate all suffix duels bottom-up (no recursion depth limit)."""
    a, b = inst.a, inst.b
    m, n = len(a), len(b)
    memo: dict[tuple[int, int], Fraction] = {}
    for i in range(m, -1, -1):
        for j in range(n, -1, -1):
            if i == m and j == n:
                continue
            if j == n:
                memo[i, j] = Fraction(1)
            elif i == m:
                memo[i, j] = Fraction(0)
            else:
                p_front = a[i] / (a[i] + b[j])
                memo[i, j] = p_front * memo[i, j + 1] + (1 - p_front) * memo[i + 1, j]
    return DpTable(m, n, memo)


def p_a_wins_recursive(inst: Instance) -> Fraction:
    """Exact probability that side A annihilates all of side B."""
    return fill_table(inst).value


def p_a_wins_single_a(a1, b) -> Fraction:
    """One A particle must win every collision in turn: a product, no table."""
    speed = parse_speed(a1)
    result = Fraction(1)
    for bj in b:
        bj = parse_speed(bj)
        result *= speed / (speed + bj)
    return result
