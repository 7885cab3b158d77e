"""Command-line interface with JSON input and output.

Every subcommand reads JSON files in the documented formats and writes one
JSON report (stdout by default, or --out FILE).  Reports carry no
timestamps and are rendered with sorted keys, so a fixed seed reproduces
identical bytes.  Exit codes: 0 when all mathematical assertions passed
(or the command is a pure query), 1 when a verification pipeline found a
violated assertion, 2 for usage or input errors, reported as
{"error": ..., "detail": ...}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize
from .errors import UplabError
from .curves import gcd_of_system, is_absolutely_irreducible, linear_system, minimal_degree
from .harness import (
    frobenius_curve,
    frobenius_pipeline,
    verify_decreasing_type,
    verify_minimal_irreducibility,
)
from .hilbert import classify_minimal_system, profile
from .geometry import plane_section
from .upp import upp_check


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from exc


def _emit(payload, out_path):
    text = serialize.dumps(payload)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_thread_cap():
    raw = os.environ.get("UPLAB_THREADS")
    if raw is None:
        return
    try:
        cap = int(raw)
    except ValueError as exc:
        raise _UsageError(f"UPLAB_THREADS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise _UsageError("UPLAB_THREADS must be at least 1")
    # execution is single-flight per invocation, which satisfies any cap


def _build_parser():
    parser = _Parser(prog="uplab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert profile of a configuration")
    p.add_argument("--points", required=True)
    p.add_argument("--out")

    p = sub.add_parser("upp", help="uniform position check")
    p.add_argument("--points", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sizes", help="comma-separated subset sizes")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--out")

    p = sub.add_parser("minsys", help="minimal degree and its linear system")
    p.add_argument("--points", required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--out")

    p = sub.add_parser("irreducible", help="absolute irreducibility of a form")
    p.add_argument("--form", required=True)
    p.add_argument("--max-conj", type=int)
    p.add_argument("--out")

    p = sub.add_parser("gcd", help="gcd of the degree-s system through points")
    p.add_argument("--points", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("section", help="plane section of a parametrized curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--plane", required=True)
    p.add_argument("--max-ext", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("rathmann", help="the (t, t^q, t^(q^2), 1) curve family")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--members", type=int, default=50)
    p.add_argument("--ext-m", type=int, default=4)
    p.add_argument("--out")

    p = sub.add_parser("verify-theorem3", help="irreducibility of minimal curves over random sections")
    p.add_argument("--curve", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--members", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-ext", type=int)
    p.add_argument("--threshold", type=float, default=0.95)
    p.add_argument("--out")

    p = sub.add_parser("verify-decreasing-type", help="decreasing-type differences over random sections")
    p.add_argument("--curve", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-ext", type=int)
    p.add_argument("--out")

    p = sub.add_parser("prop2", help="minimal-system irreducibility classifier")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--out")

    return parser


def _cmd_hilbert(args):
    config = serialize.points_from_json(_load_json(args.points))
    return 0, serialize.profile_to_json(profile(config))


def _cmd_upp(args):
    config = serialize.points_from_json(_load_json(args.points))
    sizes = None
    if args.sizes:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    if args.samples is not None:
        report = upp_check(
            config, mode="sampled", sample_count=args.samples, seed=args.seed,
            sizes=sizes, budget=args.budget,
        )
    else:
        report = upp_check(config, mode="exhaustive", sizes=sizes, budget=args.budget)
    return 0, serialize.upp_report_to_json(report)


def _cmd_minsys(args):
    config = serialize.points_from_json(_load_json(args.points))
    s = minimal_degree(config)
    degree = args.degree if args.degree is not None else s
    system = linear_system(config, degree)
    return 0, {
        "minimal_degree": s,
        "system": serialize.system_to_json(system),
    }


def _cmd_irreducible(args):
    form = serialize.form_from_json(_load_json(args.form))
    verdict = is_absolutely_irreducible(form, args.max_conj)
    status = {True: "irreducible", False: "reducible", None: "inconclusive"}[verdict]
    return 0, {
        "status": status,
        "absolutely_irreducible": verdict,
        "degree": form.degree,
    }


def _cmd_gcd(args):
    config = serialize.points_from_json(_load_json(args.points))
    system = linear_system(config, args.degree)
    common = gcd_of_system(system)
    return 0, {
        "degree": args.degree,
        "system_dimension": system.dimension,
        "gcd_degree": common.degree,
        "gcd": serialize.form_to_json(common),
    }


def _cmd_section(args):
    curve = serialize.curve_from_json(_load_json(args.curve))
    plane = serialize.plane_from_json(_load_json(args.plane))
    section = plane_section(curve, plane, args.max_ext)
    return 0, serialize.section_to_json(section)


def _cmd_rathmann(args):
    if not args.verify:
        curve = frobenius_curve(args.p, args.f)
        return 0, {
            "q": args.p**args.f,
            "curve": serialize.curve_to_json(curve),
        }
    report = frobenius_pipeline(
        args.p, args.f, seed=args.seed, members=args.members, ext_m=args.ext_m
    )
    return (0 if report["all_pass"] else 1), report


def _cmd_verify_theorem3(args):
    curve = serialize.curve_from_json(_load_json(args.curve))
    report = verify_minimal_irreducibility(
        curve,
        trials=args.trials,
        members_per_trial=args.members,
        seed=args.seed,
        max_ext=args.max_ext,
        threshold=args.threshold,
    )
    return (0 if report.all_passed else 1), serialize.trial_report_to_json(report)


def _cmd_verify_decreasing(args):
    curve = serialize.curve_from_json(_load_json(args.curve))
    report = verify_decreasing_type(
        curve, trials=args.trials, seed=args.seed, max_ext=args.max_ext
    )
    return (0 if report.all_passed else 1), serialize.trial_report_to_json(report)


def _cmd_prop2(args):
    verdict = classify_minimal_system(args.n, args.g)
    return 0, serialize.verdict_to_json(verdict)


_HANDLERS = {
    "hilbert": _cmd_hilbert,
    "upp": _cmd_upp,
    "minsys": _cmd_minsys,
    "irreducible": _cmd_irreducible,
    "gcd": _cmd_gcd,
    "section": _cmd_section,
    "rathmann": _cmd_rathmann,
    "verify-theorem3": _cmd_verify_theorem3,
    "verify-decreasing-type": _cmd_verify_decreasing,
    "prop2": _cmd_prop2,
}


def run(argv) -> int:
    """Parse and execute; returns the exit code."""
    parser = _build_parser()
    try:
        _check_thread_cap()
        args = parser.parse_args(argv)
        code, payload = _HANDLERS[args.command](args)
        _emit(payload, getattr(args, "out", None))
        return code
    except _UsageError as exc:
        _emit({"error": "usage", "detail": str(exc)}, None)
        return 2
    except UplabError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)}, None)
        return 2
    except (ValueError, KeyError) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)}, None)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
