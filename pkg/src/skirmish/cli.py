"""Command-line front end.

Subcommands map one-to-one onto the library: solve (exact and
perturbation solvers), simulate (Monte Carlo play-out), volume (hypercube
sampling), relate / curve / cycle (group relations), and crosscheck, which
runs every route on one instance and verifies they agree.

Exit codes: 0 success, 1 cross-method inconsistency (the CI tripwire),
2 usage or validation error.  Reports go to standard output as compact
JSON (or --format plain); diagnostics go to standard error.  Output is
deterministic for fixed arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .model import (
    Instance,
    InvalidInstance,
    decimal_str,
    group,
    parse_instance,
)
from .recurrence import p_a_wins_recursive
from .relations import matching_curve_grid, relate, verify_cycle
from .residues import (
    closed_form_report,
    default_epsilon,
    p_a_wins_distinct,
    p_a_wins_epsilon,
    p_a_wins_series,
)
from .montecarlo import POLICIES, SimConfig, simulate
from .volume import estimate_volume

STOCHASTIC_SIGMAS = 4.0


class Inconsistency(Exception):
    """Two routes to the same value disagree; the exit-1 condition."""


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except Inconsistency as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1
    except (InvalidInstance, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skirmish",
        description="Exact and stochastic solvers for the two-beam annihilation duel.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="exact (or perturbed) win probability")
    _instance_flags(solve)
    solve.add_argument(
        "--method",
        choices=("auto", "recursive", "distinct", "series", "epsilon", "closed-form"),
        default="auto",
        help="solver route; auto picks distinct or series by repetition",
    )
    solve.add_argument("--epsilon", help="perturbation for --method epsilon (exact rational)")
    _format_flag(solve)
    solve.set_defaults(handler=_run_solve)

    sim = commands.add_parser("simulate", help="Monte Carlo play-out of the duel")
    _instance_flags(sim)
    sim.add_argument("--trials", type=int, default=100_000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--policy", choices=POLICIES, default="frontmost")
    _format_flag(sim)
    sim.set_defaults(handler=_run_simulate)

    vol = commands.add_parser("volume", help="hypercube-volume estimate of the win probability")
    _instance_flags(vol)
    vol.add_argument("--samples", type=int, default=1_000_000)
    vol.add_argument("--seed", type=int, default=0)
    _format_flag(vol)
    vol.set_defaults(handler=_run_volume)

    rel = commands.add_parser("relate", help="beats / matched / loses verdict for --a against --b")
    _instance_flags(rel)
    _format_flag(rel)
    rel.set_defaults(handler=_run_relate)

    curve = commands.add_parser(
        "curve", help="pairs (x, y) that exactly match a lone speed-1 particle"
    )
    curve.add_argument("--points", type=int, default=100, help="grid size; x = k/(points+1)")
    _format_flag(curve, default="plain")
    curve.set_defaults(handler=_run_curve)

    cycle = commands.add_parser("cycle", help="check three groups for a beats-cycle")
    cycle.add_argument(
        "groups", nargs=3, metavar="GROUP", help="comma-separated speeds, three groups"
    )
    _format_flag(cycle)
    cycle.set_defaults(handler=_run_cycle)

    cross = commands.add_parser(
        "crosscheck", help="run every solver route on one instance and compare"
    )
    _instance_flags(cross)
    cross.add_argument("--trials", type=int, default=200_000)
    cross.add_argument("--samples", type=int, default=1_000_000)
    cross.add_argument("--seed", type=int, default=0)
    cross.add_argument("--epsilon", help="override the default perturbation")
    _format_flag(cross)
    cross.set_defaults(handler=_run_crosscheck)

    return parser


def _instance_flags(command: argparse.ArgumentParser) -> None:
    command.add_argument("--a", help='comma-separated A speeds, e.g. "30,20" (may be empty)')
    command.add_argument("--b", help="comma-separated B speeds")
    command.add_argument("--input", help='path to a JSON file {"a": [...], "b": [...]}')


def _format_flag(command: argparse.ArgumentParser, default: str = "json") -> None:
    command.add_argument("--format", choices=("json", "plain"), default=default)


def _read_instance(args) -> Instance:
    if args.input is not None:
        if args.a is not None or args.b is not None:
            raise InvalidInstance("give either --input or --a/--b, not both")
        return parse_instance(Path(args.input).read_text())
    if args.a is None and args.b is None:
        raise InvalidInstance("an instance is required: --a/--b or --input")
    return Instance(_split_speeds(args.a), _split_speeds(args.b))


def _split_speeds(text) -> tuple:
    if text is None or text.strip() == "":
        return ()
    return tuple(part.strip() for part in text.split(","))


def _emit(args, payload: dict, plain: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(plain)


def _run_solve(args) -> int:
    inst = _read_instance(args)
    method = args.method
    if method == "auto":
        method = "distinct" if len(set(inst.a)) == len(inst.a) else "series"

    if method == "recursive":
        value = p_a_wins_recursive(inst)
        payload = {"value": str(value), "decimal": decimal_str(value), "method": "recursive"}
        _emit(args, payload, _plain_value(payload))
        return 0

    if method == "distinct":
        report = p_a_wins_distinct(inst)
    elif method == "series":
        report = p_a_wins_series(group(inst))
    elif method == "closed-form":
        report = closed_form_report(group(inst))
    else:
        grouped = group(inst)
        eps = Fraction(args.epsilon) if args.epsilon else default_epsilon(grouped)
        report = p_a_wins_epsilon(grouped, eps)

    if report.method != "epsilon":
        # Exact routes are always cross-verified against the reference solver.
        reference = p_a_wins_recursive(inst)
        if report.value != reference:
            _emit(args, report.to_json(), _plain_value(report.to_json()))
            raise Inconsistency(
                f"{report.method} gave {report.value}, recursive reference gives {reference}"
            )
    _emit(args, report.to_json(), _plain_value(report.to_json()))
    return 0


def _plain_value(payload: dict) -> str:
    line = f"P(A wins) = {payload['value']} = {payload['decimal']} [{payload['method']}]"
    residues = payload.get("residues")
    if residues:
        line += "\nresidues: " + ", ".join(residues)
    return line


def _run_simulate(args) -> int:
    inst = _read_instance(args)
    report = simulate(inst, SimConfig(args.trials, args.seed, args.policy))
    plain = (
        f"A wins {report.a_wins}/{report.trials} = {report.estimate:.6f} "
        f"+/- {report.std_error:.6f} (seed {report.seed}, policy {report.policy})"
    )
    _emit(args, report.to_json(), plain)
    return 0


def _run_volume(args) -> int:
    inst = _read_instance(args)
    estimate = estimate_volume(inst, args.samples, args.seed)
    plain = (
        f"hit fraction {estimate.hits}/{estimate.samples} = {estimate.estimate:.6f} "
        f"+/- {estimate.std_error:.6f} (seed {estimate.seed})"
    )
    _emit(args, estimate.to_json(), plain)
    return 0


def _run_relate(args) -> int:
    inst = _read_instance(args)
    verdict = relate(inst.a, inst.b)
    payload = verdict.to_json()
    _emit(args, payload, f"p = {payload['p']} = {payload['decimal']}: {payload['verdict']}")
    return 0


def _run_curve(args) -> int:
    points = matching_curve_grid(1, args.points)
    if args.format == "json":
        payload = {"points": [{"x": str(x), "y": str(y)} for x, y in points]}
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print("x,y")
        for x, y in points:
            print(f"{decimal_str(x)},{decimal_str(y)}")
    return 0


def _run_cycle(args) -> int:
    witness = verify_cycle(*(_split_speeds(text) for text in args.groups))
    payload = witness.to_json()
    lines = [
        f"P vs Q: {payload['pPQ']} = {decimal_str(witness.p_pq)}",
        f"Q vs R: {payload['pQR']} = {decimal_str(witness.p_qr)}",
        f"R vs P: {payload['pRP']} = {decimal_str(witness.p_rp)}",
        f"beats-cycle: {'yes' if witness.is_cycle else 'no'}",
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _run_crosscheck(args) -> int:
    inst = _read_instance(args)
    if not inst.a or not inst.b:
        raise InvalidInstance("crosscheck needs particles on both sides")
    grouped = group(inst)
    exact = p_a_wins_recursive(inst)
    failures: list[str] = []
    rows: list[dict] = [{"method": "recursive", "value": str(exact), "agree": True}]

    if len(set(inst.a)) == len(inst.a):
        residue_report = p_a_wins_distinct(inst)
    else:
        residue_report = p_a_wins_series(grouped)
    agree = residue_report.value == exact
    rows.append(
        {"method": residue_report.method, "value": str(residue_report.value), "agree": agree}
    )
    if not agree:
        failures.append(
            f"{residue_report.method} gave {residue_report.value}, expected {exact}"
        )

    eps = Fraction(args.epsilon) if args.epsilon else default_epsilon(grouped)
    eps_report = p_a_wins_epsilon(grouped, eps)
    # Informational row: the perturbation is approximate by design, so its
    # deviation is reported but never gates the exit code.
    rows.append(
        {
            "method": "epsilon",
            "value": str(eps_report.value),
            "epsilon": str(eps),
            "absError": decimal_str(abs(eps_report.value - exact), 3),
        }
    )

    sim = simulate(inst, SimConfig(args.trials, args.seed))
    rows.append(_stochastic_row("montecarlo", sim.estimate, sim.std_error, exact, failures))
    vol = estimate_volume(inst, args.samples, args.seed)
    rows.append(_stochastic_row("hypervolume", vol.estimate, vol.std_error, exact, failures))

    payload = {
        "value": str(exact),
        "decimal": decimal_str(exact),
        "methods": rows,
        "agree": not failures,
    }
    _emit(args, payload, _plain_crosscheck(payload))
    if failures:
        print(f"inconsistency: {failures[0]}", file=sys.stderr)
        return 1
    return 0


def _stochastic_row(
    name: str, estimate: float, std_error: float, exact: Fraction, failures: list[str]
) -> dict:
    deviation = abs(estimate - float(exact))
    if std_error > 0:
        agree = deviation <= STOCHASTIC_SIGMAS * std_error
        sigmas = deviation / std_error
    else:
        agree = deviation == 0.0
        sigmas = 0.0 if agree else float("inf")
    if not agree:
        failures.append(
            f"{name} estimate {estimate} is {sigmas:.1f} sigma from exact {exact}"
        )
    return {
        "method": name,
        "estimate": estimate,
        "stdError": std_error,
        "sigmas": sigmas,
        "agree": agree,
    }


def _plain_crosscheck(payload: dict) -> str:
    lines = [f"exact value: {payload['value']} = {payload['decimal']}"]
    for row in payload["methods"]:
        if row["method"] == "recursive":
            lines.append(f"  recursive    {row['value']}  (reference)")
        elif "estimate" in row:
            lines.append(
                f"  {row['method']:<12} {row['estimate']:.6f} +/- {row['stdError']:.6f}"
                f"  [{row['sigmas']:.2f} sigma]"
            )
        elif row["method"] == "epsilon":
            lines.append(
                f"  epsilon      abs error {row['absError']} at eps = {row['epsilon']}"
            )
        else:
            verdict = "exact match" if row["agree"] else "MISMATCH"
            lines.append(f"  {row['method']:<12} {row['value']}  ({verdict})")
    lines.append("agreement: " + ("yes" if payload["agree"] else "NO"))
    return "\n".join(lines)


if __name__ == "__main__":
    sys.exit(main())
