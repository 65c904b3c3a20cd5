"""Command-line surface: classification, verification, sweeps, and figures.

Exit codes follow the verdict convention throughout: 0 for a member or
affirmative result, 1 for a non-member or negative result, 2 for usage,
parse, or output errors.  All numeric output is exact ``p/q`` text; floats
appear only inside SVG coordinates.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .beatty import beatty_contains, beatty_pos_contains, reduced_contains, reduced_disjoint, disjointness_witness
from .classify import (
    AxisZero,
    MixedNegPos,
    NegHyperbola,
    NegSporadic,
    NegVertical,
    PositiveLinear,
    Verdict,
    Witness,
    classify,
)
from .exact import Rat, format_rat, parse_rat
from .floorfn import DilationPair, OracleReport, oracle_verify
from .plot import PlotSpec, build_plot_model, render_svg
from .preorder import audit_transitivity, equivalence_classes, precedes
from .semigroup import SemigroupPair, frobenius_number, nonrealizing_set, sylvester_duality_holds

_WITNESS_TYPES = {
    cls.kind: cls
    for cls in (AxisZero, MixedNegPos, PositiveLinear, NegHyperbola, NegVertical, NegSporadic)
}

# lets bare negative rationals like -3/2 pass as positional arguments
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def witness_to_dict(witness: Witness | None) -> dict[str, Any] | None:
    if witness is None:
        return None
    payload: dict[str, Any] = {"kind": witness.kind}
    payload.update(dataclasses.asdict(witness))
    return payload


def witness_from_dict(data: dict[str, Any] | None) -> Witness | None:
    if data is None:
        return None
    cls = _WITNESS_TYPES[data["kind"]]
    return cls(**{key: value for key, value in data.items() if key != "kind"})


def verdict_to_dict(verdict: Verdict) -> dict[str, Any]:
    return {
        "alpha": format_rat(verdict.pair.alpha),
        "beta": format_rat(verdict.pair.beta),
        "member": verdict.member,
        "witness": witness_to_dict(verdict.witness),
        "counterexample": None if verdict.counterexample is None else format_rat(verdict.counterexample),
    }


def verdict_from_dict(data: dict[str, Any]) -> Verdict:
    counterexample = data.get("counterexample")
    return Verdict(
        pair=DilationPair(parse_rat(data["alpha"]), parse_rat(data["beta"])),
        member=data["member"],
        witness=witness_from_dict(data.get("witness")),
        counterexample=None if counterexample is None else parse_rat(counterexample),
    )


def report_to_dict(report: OracleReport) -> dict[str, Any]:
    return {
        "period": format_rat(report.period),
        "min_value": report.min_value,
        "argmin": format_rat(report.argmin),
        "breakpoints_checked": report.breakpoints_checked,
        "samples_checked": report.samples_checked,
    }


def _witness_params(witness: Witness | None) -> str:
    if witness is None:
        return ""
    return ";".join(f"{key}={value}" for key, value in dataclasses.asdict(witness).items())


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def cmd_classify(args: argparse.Namespace) -> int:
    pair = DilationPair(args.alpha, args.beta)
    verdict = classify(pair)
    payload = verdict_to_dict(verdict)
    report = None
    if not args.no_oracle:
        report = oracle_verify(pair)
        payload["oracle"] = report_to_dict(report) | {"agrees": report.member == verdict.member}
    if args.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        status = "member" if verdict.member else "non-member"
        print(f"({payload['alpha']}, {payload['beta']}): {status}")
        if verdict.witness is not None:
            params = " ".join(
                f"{key}={value}" for key, value in dataclasses.asdict(verdict.witness).items()
            )
            print(f"witness: {verdict.witness.kind}" + (f" {params}" if params else ""))
        if verdict.counterexample is not None:
            print(f"counterexample: x = {format_rat(verdict.counterexample)}")
        if report is not None:
            agrees = "agrees" if report.member == verdict.member else "DISAGREES"
            print(
                f"oracle: period {format_rat(report.period)}, min {report.min_value}"
                f" at {format_rat(report.argmin)} ({agrees})"
            )
    return 0 if verdict.member else 1


def cmd_verify(args: argparse.Namespace) -> int:
    pair = DilationPair(args.alpha, args.beta)
    report = oracle_verify(pair)
    payload = {"alpha": format_rat(pair.alpha), "beta": format_rat(pair.beta)}
    payload.update(report_to_dict(report))
    payload["member"] = report.member
    if args.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        status = "member" if report.member else "non-member"
        print(
            f"({payload['alpha']}, {payload['beta']}): {status};"
            f" min {report.min_value} at {format_rat(report.argmin)}"
            f" over period {format_rat(report.period)}"
            f" ({report.breakpoints_checked} breakpoints, {report.samples_checked} samples)"
        )
    return 0 if report.member else 1


_QUADRANT_TESTS = {
    "all": lambda a, b: True,
    "++": lambda a, b: a > 0 and b > 0,
    "+-": lambda a, b: a > 0 and b < 0,
    "-+": lambda a, b: a < 0 and b > 0,
    "--": lambda a, b: a < 0 and b < 0,
}


def sweep_values(num_bound: int, den_bound: int) -> list[Rat]:
    """All distinct rationals p/q with |p| <= num_bound, 1 <= q <= den_bound, plus 0."""
    if num_bound < 1 or den_bound < 1:
        raise ValueError("sweep bounds must be >= 1")
    values = {Fraction(0)}
    for q in range(1, den_bound + 1):
        for p in range(1, num_bound + 1):
            values.add(Fraction(p, q))
            values.add(Fraction(-p, q))
    return sorted(values)


SWEEP_COLUMNS = ("alpha", "beta", "member", "witness_kind", "witness_params", "oracle_min", "agree")


def cmd_sweep(args: argparse.Namespace) -> int:
    values = sweep_values(args.num_bound, args.den_bound)
    in_quadrant = _QUADRANT_TESTS[args.quadrant]
    rows = []
    members = disagreements = 0
    for alpha in values:
        for beta in values:
            if not in_quadrant(alpha, beta):
                continue
            pair = DilationPair(alpha, beta)
            verdict = classify(pair)
            report = oracle_verify(pair)
            agree = verdict.member == report.member
            members += verdict.member
            disagreements += not agree
            witness = verdict.witness
            rows.append(
                {
                    "alpha": format_rat(alpha),
                    "beta": format_rat(beta),
                    "member": verdict.member,
                    "witness_kind": "" if witness is None else witness.kind,
                    "witness_params": _witness_params(witness),
                    "oracle_min": report.min_value,
                    "agree": agree,
                }
            )
    summary = {"pairs": len(rows), "members": members, "disagreements": disagreements}
    if args.fmt == "json":
        _emit(json.dumps({"rows": rows, "summary": summary}, indent=2) + "\n", args.out)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row["alpha"],
                    row["beta"],
                    str(row["member"]).lower(),
                    row["witness_kind"],
                    row["witness_params"],
                    row["oracle_min"],
                    str(row["agree"]).lower(),
                ]
            )
        _emit(buffer.getvalue(), args.out)
    print(
        f"sweep: {summary['pairs']} pairs, {summary['members']} members,"
        f" {summary['disagreements']} disagreements",
        file=sys.stderr,
    )
    return 0 if disagreements == 0 else 1


def cmd_beatty(args: argparse.Namespace) -> int:
    u, v = args.u, args.v
    criterion = disjointness_witness(u, v)
    disjoint = reduced_disjoint(u, v)
    lo, hi = args.window
    window = range(lo, hi + 1)

    def membership(value: Rat) -> dict[str, list[int]]:
        return {
            "pos": [m for m in window if beatty_pos_contains(value, m)],
            "full": [m for m in window if beatty_contains(value, m)],
            "reduced": [m for m in window if reduced_contains(value, m)],
        }

    payload = {
        "u": format_rat(u),
        "v": format_rat(v),
        "criterion": None if criterion is None else {"m": criterion[0], "n": criterion[1]},
        "reduced_disjoint": disjoint,
        "agree": (criterion is not None) == disjoint,
        "window": {"lo": lo, "hi": hi, "u": membership(u), "v": membership(v)},
    }
    if args.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        crit = "none" if criterion is None else f"m={criterion[0]} n={criterion[1]}"
        print(f"u = {payload['u']}, v = {payload['v']}")
        print(f"criterion witness: {crit}")
        print(f"reduced sequences disjoint: {disjoint} (agree: {payload['agree']})")
        print(f"reduced({payload['u']}) in [{lo},{hi}]: {payload['window']['u']['reduced']}")
        print(f"reduced({payload['v']}) in [{lo},{hi}]: {payload['window']['v']['reduced']}")
    return 0 if disjoint else 1


def cmd_frobenius(args: argparse.Namespace) -> int:
    sg = SemigroupPair(args.a, args.b)
    gaps = nonrealizing_set(sg)
    payload = {
        "a": sg.a,
        "b": sg.b,
        "frobenius_number": frobenius_number(sg),
        "nonrealizing_set": gaps,
        "gap_count": len(gaps),
        "sylvester_duality": sylvester_duality_holds(sg),
    }
    if args.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"S({sg.a}, {sg.b}): frobenius number {payload['frobenius_number']}")
        print(f"non-realizing set: {gaps}")
        print(f"sylvester duality: {payload['sylvester_duality']}")
    return 0


def cmd_preorder(args: argparse.Namespace) -> int:
    values = [v for v in sweep_values(args.num_bound, args.den_bound) if v != 0]
    matrix = [[precedes(a, b) for b in values] for a in values]
    violation = audit_transitivity(values)
    if args.fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["alpha\\beta"] + [format_rat(v) for v in values])
        for value, row in zip(values, matrix):
            writer.writerow([format_rat(value)] + [str(flag).lower() for flag in row])
        _emit(buffer.getvalue(), args.out)
    else:
        payload = {
            "values": [format_rat(v) for v in values],
            "precedes": matrix,
            "transitivity_counterexample": None
            if violation is None
            else [format_rat(v) for v in violation],
            "equivalence_classes": [
                [format_rat(v) for v in cls] for cls in equivalence_classes(values)
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    print(
        f"preorder: {len(values)} values, transitivity"
        f" {'violated: ' + str(violation) if violation else 'holds'}",
        file=sys.stderr,
    )
    return 0 if violation is None else 1


def cmd_plot(args: argparse.Namespace) -> int:
    amin, amax, bmin, bmax = args.viewbox
    spec = PlotSpec(
        alpha_min=amin,
        alpha_max=amax,
        beta_min=bmin,
        beta_max=bmax,
        curve_bound=args.curve_bound,
        sporadic_r_bound=args.sporadic_r_bound,
        den_bound=args.den_bound,
        samples=args.samples,
    )
    _emit(render_svg(build_plot_model(spec), width=args.width), args.out)
    return 0


def _allow_negative_rationals(parser: argparse.ArgumentParser) -> None:
    # argparse only waves through option-like tokens that look like negative
    # numbers; widen that to negative p/q so `classify -3/2 -3/4` parses
    parser._negative_number_matcher = _NEGATIVE_RATIONAL  # noqa: SLF001


def _add_format_flags(parser: argparse.ArgumentParser, *, plain_name: str = "--plain") -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    group.add_argument(plain_name, dest="fmt", action="store_const", const="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floorcomm",
        description="Exact classification of dilated floor function pairs by commutator sign.",
    )
    _allow_negative_rationals(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="membership verdict with certifying witness")
    _allow_negative_rationals(p)
    p.add_argument("alpha", type=parse_rat, help="dilation factor, p or p/q")
    p.add_argument("beta", type=parse_rat, help="dilation factor, p or p/q")
    p.add_argument("--no-oracle", action="store_true", help="skip the exhaustive cross-check")
    _add_format_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustive commutator minimum over one period")
    _allow_negative_rationals(p)
    p.add_argument("alpha", type=parse_rat)
    p.add_argument("beta", type=parse_rat)
    _add_format_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="classify a rational grid and cross-check every verdict")
    _allow_negative_rationals(p)
    p.add_argument("-P", "--num-bound", type=int, default=4, help="max |numerator| (default 4)")
    p.add_argument("-Q", "--den-bound", type=int, default=4, help="max denominator (default 4)")
    p.add_argument(
        "--quadrant",
        choices=sorted(_QUADRANT_TESTS),
        default="all",
        help="restrict the grid; write --quadrant=-- and --quadrant=-+ with '='",
    )
    p.add_argument("--out", help="output path (default stdout)")
    _add_format_flags(p, plain_name="--csv")
    p.set_defaults(func=cmd_sweep, fmt="plain")

    p = sub.add_parser("beatty", help="Beatty sequence windows and disjointness")
    _allow_negative_rationals(p)
    p.add_argument("u", type=parse_rat)
    p.add_argument("v", type=parse_rat)
    p.add_argument("--window", type=int, nargs=2, default=(-10, 20), metavar=("LO", "HI"))
    _add_format_flags(p)
    p.set_defaults(func=cmd_beatty)

    p = sub.add_parser("frobenius", help="two-generator numerical semigroup report")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    _add_format_flags(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("preorder", help="pairwise precedence matrix over a rational grid")
    p.add_argument("-P", "--num-bound", type=int, default=3)
    p.add_argument("-Q", "--den-bound", type=int, default=3)
    p.add_argument("--out", help="output path (default stdout)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    p.set_defaults(func=cmd_preorder)

    p = sub.add_parser("plot", help="SVG map of the member set")
    _allow_negative_rationals(p)
    p.add_argument(
        "--viewbox",
        type=parse_rat,
        nargs=4,
        default=(Fraction(-2), Fraction(2), Fraction(-2), Fraction(2)),
        metavar=("AMIN", "AMAX", "BMIN", "BMAX"),
    )
    p.add_argument("-M", "--curve-bound", type=int, default=2, help="max m, n of curve families")
    p.add_argument("-R", "--sporadic-r-bound", type=int, default=2, help="max r of sporadic points")
    p.add_argument("-D", "--den-bound", type=int, default=2, help="max p of segments and sporadics")
    p.add_argument("--samples", type=int, default=64, help="polyline samples per curve")
    p.add_argument("--width", type=int, default=640, help="SVG width in pixels")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
