"""Win probability as an exact residue sum over the a-side poles.

Encode the duel in the rational function

    Phi(w) = (1/w) * prod_i (1 - a_i*w)^-x_i * prod_j (1 + b_j*w)^-y_j

where x_i and y_j are the multiplicities of the distinct speeds.  Phi has a
simple pole at the origin with residue 1, a pole of order x_i at w = 1/a_i
for every distinct A speed, and a pole of order y_j at w = -1/b_j for every
distinct B speed; all residues sum to zero.  P(A wins) is minus the sum of
the a-pole residues, so swapping the sides gives the complement.

Routes provided here, all exact:

* `p_a_wins_distinct`: simple poles only, closed product formula.
* `p_a_wins_series`: poles of any order, local truncated-series expansion.
* `p_equal_speeds` / `p_two_speeds`: closed forms for one speed per side.
* `p_a_wins_epsilon`: split repeated speeds apart by a small rational
  perturbation and fall back to the simple-pole formula; approximate in a
  controlled way, since the error vanishes with the perturbation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    GroupedInstance,
    Instance,
    InvalidInstance,
    decimal_str,
    parse_speed,
)
from .series import TruncatedSeries


@dataclass(frozen=True)
class MethodReport:
    """Solver outcome: the exact value, the route taken, per-pole residues.

    `residues` lists the residue of Phi at each a-pole, in the order the
    corresponding speeds were given; their negated sum is `value`.
    """

    value: Fraction
    method: str
    residues: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "value": str(self.value),
            "decimal": decimal_str(self.value),
            "method": self.method,
            "residues": [str(r) for r in self.residues],
        }


def p_a_wins_distinct(inst: Instance) -> MethodReport:
    """Residue sum when every A speed is distinct (all a-poles simple).

    residue_i = -prod_{k != i} a_i/(a_i - a_k) * prod_j a_i/(a_i + b_j).
    B speeds may repeat freely; only the a-poles are evaluated.
    """
    a, b = inst.a, inst.b
    if len(set(a)) != len(a):
        raise InvalidInstance(
            "repeated a-speed: the simple-pole formula needs distinct A speeds"
        )
    residues = []
    for i, ai in enumerate(a):
        term = Fraction(1)
        for k, ak in enumerate(a):
            if k != i:
                term *= ai / (ai - ak)
        for bj in b:
            term *= ai / (ai + bj)
        residues.append(-term)
    residues = tuple(residues)
    return MethodReport(-_total(residues), "distinct", residues)


def p_a_wins_series(grouped: GroupedInstance) -> MethodReport:
    """Exact residues at a-poles of any order via local series expansion.

    Substituting w = 1/a_i + u isolates the pole factor:
    (1 - a_i*w)^-x_i = (-a_i*u)^-x_i.  The residue is therefore
    (-a_i)^-x_i times the u^(x_i - 1) Taylor coefficient of the remaining,
    regular factors.  Each of those is an affine jet in u, inverted and
    powered at truncation degree x_i - 1, so the whole computation is a
    handful of exact polynomial multiplications per pole.
    """
    residues = []
    for i, (ai, xi) in enumerate(grouped.a_groups):
        regular = _regular_part(grouped, i, ai, xi - 1)
        coefficient = regular.coefficients[xi - 1]
        residues.append((-1) ** xi * coefficient / ai**xi)
    residues = tuple(residues)
    return MethodReport(-_total(residues), "series", residues)


def _regular_part(
    grouped: GroupedInstance, pole_index: int, ai: Fraction, degree: int
) -> TruncatedSeries:
    """Taylor jet around w = 1/a_i of every factor except the pole itself."""
    # 1/w = a_i/(1 + a_i*u)
    regular = TruncatedSeries.affine(1, ai, degree).inverse() * ai
    for k, (ak, xk) in enumerate(grouped.a_groups):
        if k == pole_index:
            continue
        # 1 - a_k*w = (a_i - a_k)/a_i - a_k*u
        regular = regular * TruncatedSeries.affine((ai - ak) / ai, -ak, degree).inverse() ** xk
    for bj, yj in grouped.b_groups:
        # 1 + b_j*w = (a_i + b_j)/a_i + b_j*u
        regular = regular * TruncatedSeries.affine((ai + bj) / ai, bj, degree).inverse() ** yj
    return regular


def _total(residues) -> Fraction:
    return sum(residues, Fraction(0))


def p_equal_speeds(m: int, n: int) -> Fraction:
    """m attackers versus n defenders, all at one common speed.

    Every collision is then a fair coin: sum over how many attackers die
    before the last defender does.
    """
    _check_counts(m, n)
    return sum(
        (math.comb(n + i - 1, i) * Fraction(1, 2 ** (n + i)) for i in range(m)),
        Fraction(0),
    )


def p_two_speeds(m: int, n: int, v) -> Fraction:
    """m speed-1 attackers versus n speed-v defenders.

    Generalizes `p_equal_speeds` (v = 1); each collision now has odds
    1 : v.  Any duel with one speed per side scales to this form.
    """
    _check_counts(m, n)
    v = parse_speed(v)
    return sum(
        (
            math.comb(n + i - 1, i) * v**i / (1 + v) ** (n + i)
            for i in range(m)
        ),
        Fraction(0),
    )


def _check_counts(m: int, n: int) -> None:
    for count in (m, n):
        if isinstance(count, bool) or not isinstance(count, int) or count < 1:
            raise InvalidInstance(f"side sizes must be positive integers, got {count!r}")


def closed_form_report(grouped: GroupedInstance) -> MethodReport:
    """Fast path when each side fields a single speed, possibly repeated."""
    if len(grouped.a_groups) != 1 or len(grouped.b_groups) != 1:
        raise InvalidInstance("closed form needs exactly one distinct speed per side")
    (a0, m), (b0, n) = grouped.a_groups[0], grouped.b_groups[0]
    value = p_two_speeds(m, n, b0 / a0)
    method = "all-equal" if a0 == b0 else "per-type-equal"
    return MethodReport(value, method, (-value,))


def perturb(grouped: GroupedInstance, eps) -> Instance:
    """Split repeated speeds apart: q-th copy of speed s becomes s + q*eps.

    Raises if eps is so large that two perturbed speeds on one side
    coincide (possible when different base speeds sit close together).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidInstance("perturbation must be positive")
    a = tuple(ai + q * eps for ai, xi in grouped.a_groups for q in range(1, xi + 1))
    b = tuple(bj + r * eps for bj, yj in grouped.b_groups for r in range(1, yj + 1))
    for side, speeds in (("a", a), ("b", b)):
        if len(set(speeds)) != len(speeds):
            raise InvalidInstance(
                f"eps={eps} makes two perturbed {side}-speeds coincide"
            )
    return Instance(a, b)


def p_a_wins_epsilon(grouped: GroupedInstance, eps) -> MethodReport:
    """Approximate a repeated-speed duel by a nearby all-distinct one.

    The perturbed instance is solved with exact rational arithmetic, so the
    only error is the perturbation itself, which vanishes as eps does.
    """
    report = p_a_wins_distinct(perturb(grouped, eps))
    return MethodReport(report.value, "epsilon", report.residues)


def default_epsilon(grouped: GroupedInstance) -> Fraction:
    """A perturbation small enough to keep every pole well separated.

    gap / (1000 * (N + 1)), where N is the particle count and gap is the
    smallest spacing among the speeds and their cross-side pairwise sums
    (the quantities whose collisions would break the simple-pole formula).
    A single-element value set has no spacing; the element itself is the
    scale then.
    """
    values = {s for s, _ in grouped.a_groups} | {s for s, _ in grouped.b_groups}
    values |= {
        ai + bj for ai, _ in grouped.a_groups for bj, _ in grouped.b_groups
    }
    ordered = sorted(values)
    if len(ordered) > 1:
        gap = min(hi - lo for lo, hi in zip(ordered, ordered[1:]))
    else:
        gap = ordered[0]
    return gap / (1000 * (grouped.total_particles + 1))
