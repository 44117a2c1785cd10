"""Command-line surface.

One JSON document per invocation on standard output, diagnostics on
standard error.  Exit codes: 0 for success or a certified verdict, 3
for an inconclusive check, 2 for bad input, 4 for an exhausted work
budget or a numeric failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .arith import weighted_degree
from .errors import InputError, NumericError, ResourceError
from .ideal import DEFAULT_STEP_BUDGET
from .missing import implicitize, missing_candidates
from .parser import parse_poly, parse_source
from .report import (
    envelope,
    implicit_json,
    missing_json,
    render,
    sample_json,
    surjectivity_json,
    value_json,
)
from .sampler import (
    DEFAULT_BRANCH_TOL,
    confirm_candidates,
    default_samples,
    sample_images,
    write_csv,
)
from .surjcheck import check_surjective
from .tower import normal_form, normalized_remainder

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3
EXIT_RESOURCE = 4


def build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="radsurj",
        description="Certify surjectivity of radical curve parametrizations "
        "and locate candidate missing points.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="input file (tower and param blocks)")
        p.add_argument(
            "--stable",
            action="store_true",
            help="report timing as 0.0 so output is reproducible",
        )
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_STEP_BUDGET,
            help="work budget for exact ideal computations",
        )

    check = sub.add_parser("check", help="certify surjectivity or report inconclusive")
    add_common(check)
    check.add_argument(
        "--mode",
        choices=["guilty", "suspicious"],
        default=None,
        help="numerator screening: exact degree drop, or its syntactic over-approximation",
    )
    check.add_argument(
        "--ideal",
        choices=["exact", "gcd", "auto"],
        default=None,
        help="how to decide triviality of the denominator ideal",
    )

    missing = sub.add_parser("missing", help="candidate missing points and bounds")
    add_common(missing)

    sample = sub.add_parser("sample", help="numeric image cloud and candidate probing")
    add_common(sample)
    sample.add_argument(
        "--points", type=int, default=None, help="samples per schedule part (default 200)"
    )
    sample.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_BRANCH_TOL,
        help="reject samples whose denominator magnitude falls below this",
    )
    sample.add_argument("--csv", default=None, help="also dump the image cloud as CSV")

    imp = sub.add_parser("implicitize", help="defining equations of the image closure")
    add_common(imp)

    for name, doc in (
        ("nf", "tower normal form of an expression"),
        ("rrem", "normalized remainder, radicals eliminated"),
        ("degree", "weighted degree of the normal form"),
    ):
        p = sub.add_parser(name, help=doc)
        add_common(p)
        p.add_argument("--expr", required=True, help="polynomial in t and the radicals")

    return ap


def _merged(args: argparse.Namespace, settings: dict[str, str]) -> tuple[str, str]:
    """Flags win over the file's settings block, which wins over defaults."""
    mode = args.mode or settings.get("mode", "guilty")
    ideal = args.ideal or settings.get("ideal", "auto")
    if mode not in ("guilty", "suspicious"):
        raise InputError(f"settings: unknown mode {mode!r}")
    if ideal not in ("exact", "gcd", "auto"):
        raise InputError(f"settings: unknown ideal strategy {ideal!r}")
    return mode, ideal


def _run(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    src = parse_source(text)
    param = src.param
    for note in src.notes:
        print(f"note: {note}", file=sys.stderr)

    started = time.perf_counter()
    doc = envelope(args.command, param)
    code = EXIT_OK

    if args.command == "check":
        mode, ideal = _merged(args, src.settings)
        report = check_surjective(param, mode=mode, strategy=ideal, step_budget=args.budget)
        doc["surjectivity"] = surjectivity_json(report, param)
        code = EXIT_OK if report.certified else EXIT_INCONCLUSIVE
    elif args.command == "missing":
        report = missing_candidates(param, step_budget=args.budget)
        doc["missing"] = missing_json(report, param)
    elif args.command == "sample":
        points = args.points
        if points is None and "points" in src.settings:
            points = int(src.settings["points"])
        samples = None if points is None else default_samples(points)
        cand = missing_candidates(param, step_budget=args.budget)
        for note in cand.notes:
            print(f"note: {note}", file=sys.stderr)
        cloud = sample_images(param, samples, tol=args.tol, implicit=cand.implicit)
        verdicts = confirm_candidates(cloud, cand.candidates, param)
        if args.csv:
            write_csv(cloud, param, args.csv)
        doc["sample"] = sample_json(cloud, verdicts)
    elif args.command == "implicitize":
        doc["implicit"] = implicit_json(implicitize(param, step_budget=args.budget))
    else:  # nf, rrem, degree
        f = parse_poly(args.expr, param.tower.table)
        if args.command == "nf":
            value = normal_form(f, param.tower)
        elif args.command == "rrem":
            value = normalized_remainder(f, param.tower)
        else:
            nf = normal_form(f, param.tower)
            value = weighted_degree(nf, param.tower.weights)
        doc["value"] = value_json(args.command, value)

    elapsed = 0.0 if args.stable else round(time.perf_counter() - started, 6)
    doc["timing"] = {"seconds": elapsed}
    sys.stdout.write(render(doc))
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_argparser().parse_args(argv)
    try:
        return _run(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
