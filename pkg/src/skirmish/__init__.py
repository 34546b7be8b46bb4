"""Solvers for the one-dimensional two-beam annihilation duel.

Side A fires particles rightward at speeds a_1..a_m, side B leftward at
b_1..b_n; when opposite particles meet, the speed-u one survives against
the speed-v one with probability u/(u+v), and side A wins once every B
particle is annihilated.

The package computes P(A wins) by several independent routes and checks
them against each other:

* exact suffix recurrence (`recurrence`), the reference for everything;
* exact residue sums of the duel's rational generating function, for
  simple poles, higher-order poles via truncated-series jets, single-speed
  closed forms, and the small-perturbation approximation (`residues`,
  `series`);
* reproducible Monte Carlo play-out (`montecarlo`) and hypercube-volume
  sampling (`volume`), the stochastic corroboration;
* matching/beating verdicts, matching curves, and intransitivity
  witnesses between groups (`relations`).

Everything deterministic is exact rational arithmetic; floats appear only
in the two stochastic estimators.  The `skirmish` console script fronts
all of it.
"""

from .model import (
    GroupedInstance,
    Instance,
    InvalidInstance,
    canonical_key,
    decimal_str,
    group,
    parse_instance,
    parse_speed,
)
from .recurrence import DpTable, fill_table, p_a_wins_recursive, p_a_wins_single_a
from .relations import (
    CycleWitness,
    RelationVerdict,
    matching_curve,
    matching_curve_grid,
    relate,
    verify_cycle,
)
from .residues import (
    MethodReport,
    closed_form_report,
    default_epsilon,
    p_a_wins_distinct,
    p_a_wins_epsilon,
    p_a_wins_series,
    p_equal_speeds,
    p_two_speeds,
    perturb,
)
from .series import TruncatedSeries
from .montecarlo import (
    POLICIES,
    SimConfig,
    SimReport,
    collide,
    order_invariance_probe,
    simulate,
    win_threshold,
)
from .volume import VolumeEstimate, complement_estimates, estimate_volume

__version__ = "0.1.0"

__all__ = [
    "CycleWitness",
    "DpTable",
    "GroupedInstance",
    "Instance",
    "InvalidInstance",
    "MethodReport",
    "POLICIES",
    "RelationVerdict",
    "SimConfig",
    "SimReport",
    "TruncatedSeries",
    "VolumeEstimate",
    "canonical_key",
    "closed_form_report",
    "collide",
    "complement_estimates",
    "decimal_str",
    "default_epsilon",
    "estimate_volume",
    "fill_table",
    "group",
    "matching_curve",
    "matching_curve_grid",
    "order_invariance_probe",
    "p_a_wins_distinct",
    "p_a_wins_epsilon",
    "p_a_wins_recursive",
    "p_a_wins_series",
    "p_a_wins_single_a",
    "p_equal_speeds",
    "p_two_speeds",
    "parse_instance",
    "parse_speed",
    "perturb",
    "relate",
    "simulate",
    "verify_cycle",
    "win_threshold",
    "__version__",
]
