"""Command-line interface.

Subcommands: images, upper, lower, expand, transitions, classify, sweep,
table.  Exit codes: 0 success, 2 invalid configuration, 3 hypothesis not
satisfied for a single requested bound.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from . import algebraic, analytic, coverage, expansions, transitions
from .analytic import BoundMethod
from .ifs import IFSSpec, Interval, SpecError, build_bernoulli, build_convolution, spec_from_json

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_HYPOTHESIS = 3

CSV_COLUMNS = [
    "rho", "method", "n", "interval_lo", "interval_hi",
    "value", "valid", "awsc_certified", "is_transition",
]

#: ranges of the reproduced lower-bound table
TABLE3_RANGES = [
    (0.50, 0.55), (0.55, 0.60), (0.60, 0.65), (0.65, 0.70),
    (0.70, 0.75), (0.75, 0.80), (0.80, 0.851),
]


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _spec_from_args(args) -> IFSSpec:
    if getattr(args, "ifs", None):
        text = args.ifs
        if not text.lstrip().startswith("{"):
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        return spec_from_json(text)
    if args.rho is None:
        raise CLIError("one of --ifs or --rho is required", EXIT_CONFIG)
    base = build_bernoulli(args.rho, args.p0, allow_cantor=args.m > 1)
    if args.m > 1:
        return build_convolution(base, args.m)
    return base


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rho", type=float, default=None, help="contraction factor")
    parser.add_argument("--p0", type=float, default=0.5, help="probability of the first map")
    parser.add_argument("--m", type=int, default=1, help="self-convolution folds (1 = plain)")
    parser.add_argument("--ifs", type=str, default=None,
                        help="IFS as JSON text or a path to a JSON file")


def _parse_interval(text: str) -> Interval:
    try:
        lo, hi = (float(t) for t in text.split(","))
        return Interval(lo, hi)
    except ValueError as exc:
        raise CLIError(f"bad interval {text!r}: {exc}", EXIT_CONFIG) from None


def _emit(args, rows: list[dict], fmt_hint: str | None = None) -> None:
    fmt = getattr(args, "format", None) or fmt_hint or "tsv"
    out = io.StringIO()
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        delim = "," if fmt == "csv" else "\t"
        writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()) if rows else [],
                                delimiter=delim, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    text = out.getvalue()
    path = getattr(args, "out", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_images(args) -> int:
    spec = _spec_from_args(args)
    interval = _parse_interval(args.interval)
    images = coverage.enumerate_images(spec, interval, args.n)
    images.sort(key=lambda im: (im.lo, im.word))
    rows = [
        {
            "word": "".join(map(str, im.word)),
            "lo": f"{im.lo:.5f}",
            "hi": f"{im.hi:.5f}",
            "weight": repr(im.weight),
        }
        for im in images
    ]
    _emit(args, rows)
    return EXIT_OK


def cmd_upper(args) -> int:
    spec = _spec_from_args(args)
    intervals = None
    if args.intervals:
        intervals = [_parse_interval(part) for part in args.intervals.split(";")]
    result = coverage.upper_bound(spec, n_max=args.n_max, intervals=intervals)
    if not result.valid:
        print(f"hypothesis not satisfied: {result.reason}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    interval = result.interval
    rows = [{
        "rho": repr(spec.rho), "method": result.method.value, "n": result.n,
        "interval_lo": repr(interval.lo), "interval_hi": repr(interval.hi),
        "value": repr(result.value),
    }]
    _emit(args, rows)
    return EXIT_OK


def cmd_lower(args) -> int:
    spec = _spec_from_args(args)
    if args.n is not None:
        result = coverage.lower_bound(spec, args.n)
    else:
        result = coverage.best_lower_bound(spec, n_max=args.n_max)
    rows = [{
        "rho": repr(spec.rho), "method": result.method.value, "n": result.n,
        "value": repr(result.value),
        "awsc_required": result.awsc_required,
        "awsc_certified": result.awsc_certified,
    }]
    _emit(args, rows)
    return EXIT_OK


def cmd_expand(args) -> int:
    spec = _spec_from_args(args)
    try:
        if args.kind == "lazy":
            exp = expansions.lazy_expansion(spec, args.x, args.n)
        else:
            exp = expansions.lmr_expansion(spec, args.x, args.n)
    except SpecError as exc:
        print(f"hypothesis not satisfied: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    print("".join(map(str, exp.digits)))
    return EXIT_OK


def cmd_transitions(args) -> int:
    lo, hi = (float(t) for t in args.range.split(","))
    tset = transitions.transition_set(args.n, lo, hi)
    rows = [
        {
            "root": f"{root:.12f}",
            "sigma": "".join(map(str, sig)),
            "tau": "".join(map(str, tau)),
        }
        for root, (sig, tau) in zip(tset.roots, tset.witnesses)
    ]
    _emit(args, rows)
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        poly = algebraic.IntPolynomial.parse(args.poly)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_CONFIG) from None
    cls = algebraic.classify(poly)
    row = {
        "kind": cls.kind,
        "dominant_root": f"{cls.dominant_root:.10f}",
        "reciprocal": f"{cls.reciprocal:.10f}",
    }
    if args.rho is not None:
        cert = algebraic.certify_rho(args.rho, poly)
        row["awsc_known"] = cert.awsc_known
        row["note"] = cert.note
    _emit(args, [row])
    return EXIT_OK


@dataclass
class SweepConfig:
    rho_min: float = 0.5
    rho_max: float = 0.851
    step: float = 0.001
    grid: list[float] = field(default_factory=list)
    n_max: int = 10
    p0: float = 0.5
    folds: int = 1
    include_transitions: bool = False
    certificate_poly: str | None = None

    def validate(self) -> None:
        if not (0.0 < self.rho_min < self.rho_max < 1.0):
            raise CLIError("need 0 < rho_min < rho_max < 1", EXIT_CONFIG)
        if self.step <= 0:
            raise CLIError("step must be positive", EXIT_CONFIG)
        if self.n_max < 1:
            raise CLIError("n_max must be >= 1", EXIT_CONFIG)

    def rho_values(self) -> list[float]:
        if self.grid:
            return sorted(self.grid)
        count = int(round((self.rho_max - self.rho_min) / self.step))
        vals = [self.rho_min + i * self.step for i in range(count + 1)]
        return [v for v in vals if v < 1.0]


def _build_family_spec(config: SweepConfig, rho: float) -> IFSSpec | None:
    try:
        base = build_bernoulli(rho, config.p0, allow_cantor=True)
        return build_convolution(base, config.folds) if config.folds > 1 else base
    except SpecError:
        return None


def _row(rho, method, n="", ilo="", ihi="", value=math.nan, valid=False,
         certified=False, is_transition=False) -> dict:
    cells = (
        f"{rho:.12g}",
        method.value if isinstance(method, BoundMethod) else method,
        n,
        f"{ilo:.12g}" if ilo != "" else "",
        f"{ihi:.12g}" if ihi != "" else "",
        f"{value:.12g}" if value == value else "",
        str(bool(valid)).lower(),
        str(bool(certified)).lower(),
        str(bool(is_transition)).lower(),
    )
    return dict(zip(CSV_COLUMNS, cells))


def sweep(config: SweepConfig) -> list[dict]:
    """Rows of every bound across the contraction-factor grid, plus
    right-hand transition limits when requested; deterministic order."""
    config.validate()
    unbiased = abs(config.p0 - 0.5) <= 1e-12 and config.folds == 1
    rows: list[tuple] = []

    def bounds_at(rho: float, is_transition: bool) -> None:
        spec = _build_family_spec(config, rho)
        if spec is None:
            return
        rows.append((rho, 0, _row(rho, BoundMethod.DIM_AT_ZERO,
                                  value=analytic.dim_at_zero(spec), valid=True,
                                  is_transition=is_transition)))
        if unbiased:
            eb = analytic.erdos_upper_bound(rho)
            rows.append((rho, 1, _row(rho, BoundMethod.ERDOS_UPPER, value=eb.value,
                                      valid=eb.valid, is_transition=is_transition)))
        else:
            xb = analytic.xi_biased_upper_bound(spec)
            rows.append((rho, 1, _row(rho, BoundMethod.XI_BIASED_UPPER, value=xb.value,
                                      valid=xb.valid, is_transition=is_transition)))
            if config.folds == 1:
                cb = analytic.biased_corollary_bound(rho, config.p0)
                rows.append((rho, 2, _row(rho, BoundMethod.BIASED_COROLLARY,
                                          value=cb.value, valid=cb.valid,
                                          is_transition=is_transition)))
        ub = coverage.upper_bound(spec, n_max=config.n_max)
        rows.append((rho, 3, _row(
            rho, BoundMethod.COVERAGE_UPPER, n=ub.n,
            ilo=ub.interval.lo if ub.interval else "",
            ihi=ub.interval.hi if ub.interval else "",
            value=ub.value, valid=ub.valid, is_transition=is_transition)))
        lb = coverage.best_lower_bound(spec, n_max=config.n_max)
        cert = False
        if config.certificate_poly:
            poly = algebraic.IntPolynomial.parse(config.certificate_poly)
            cert = algebraic.certify_rho(rho, poly).awsc_known
        rows.append((rho, 4, _row(rho, BoundMethod.COVERAGE_LOWER, n=lb.n,
                                  value=lb.value, valid=lb.valid, certified=cert,
                                  is_transition=is_transition)))

    for rho in config.rho_values():
        bounds_at(rho, is_transition=False)
    if config.include_transitions and config.folds == 1:
        tset = transitions.transition_set(
            min(config.n_max, transitions.MAX_TRANSITION_N),
            config.rho_min, config.rho_max,
        )
        for root in tset.roots:
            # right-hand limit: the infimum contribution of the cell edge
            bounds_at(float(root) + transitions.CELL_STEP, is_transition=True)
    rows.sort(key=lambda t: (t[0], t[1]))
    return [r for _, _, r in rows]


def table_report(which: int, n_max: int = 10) -> tuple[str, list[dict]]:
    """Regenerate one of the three reference tables as text plus rows."""
    if which in (1, 2):
        spec = build_bernoulli(0.8, 0.5)
        interval = Interval(0.3, 0.7) if which == 1 else Interval(0.0, 1.0)
        images = coverage.enumerate_images(spec, interval, 4)
        images.sort(key=lambda im: (im.lo, im.word))
        rows = [
            {"word": "".join(map(str, im.word)),
             "lo": f"{im.lo:.5f}", "hi": f"{im.hi:.5f}"}
            for im in images
        ]
        lines = [f"{r['word']}\t[{r['lo']}, {r['hi']}]" for r in rows]
        return "\n".join(lines) + "\n", rows
    if which == 3:
        family = transitions.BernoulliFamily(p0=0.5)
        rows = []
        lines = []
        for lo, hi in TABLE3_RANGES:
            res = transitions.lower_bound_over_range(family, n_max, lo, hi)
            hi_txt = f"{hi:.2f}" if round(hi, 2) == hi else f"{hi:.3f}"
            rows.append({"rho_lo": f"{lo:.2f}", "rho_hi": hi_txt,
                         "lower_bound": f"{res.value:.6f}"})
            lines.append(f"[{lo:.2f}, {hi_txt}]\t{res.value:.6f}")
        return "\n".join(lines) + "\n", rows
    raise CLIError(f"unknown table {which}", EXIT_CONFIG)


def cmd_sweep(args) -> int:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
        config = SweepConfig(**raw)
    else:
        config = SweepConfig(
            rho_min=args.rho_min, rho_max=args.rho_max, step=args.step,
            n_max=args.n_max, p0=args.p0, folds=args.m,
            include_transitions=args.include_transitions,
            certificate_poly=args.certificate,
        )
    rows = sweep(config)
    _emit(args, rows, fmt_hint="csv")
    return EXIT_OK


def cmd_table(args) -> int:
    text, rows = table_report(args.which, n_max=args.n_max)
    if getattr(args, "format", None):
        _emit(args, rows)
    elif getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locdim",
        description="Bounds on local dimensions of overlapping self-similar measures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("images", help="weighted word images of an interval")
    _add_spec_flags(p)
    p.add_argument("--interval", required=True, help="lo,hi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"])
    p.set_defaults(func=cmd_images)

    p = sub.add_parser("upper", help="coverage upper bound")
    _add_spec_flags(p)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--intervals", default=None,
                   help='candidate intervals, e.g. "0.3,0.7;0.2,0.8" (default: built-in list)')
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"])
    p.set_defaults(func=cmd_upper)

    p = sub.add_parser("lower", help="conditional coverage lower bound")
    _add_spec_flags(p)
    p.add_argument("--n", type=int, default=None, help="exact word length")
    p.add_argument("--n-max", type=int, default=10, help="best over lengths <= n_max")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"])
    p.set_defaults(func=cmd_lower)

    p = sub.add_parser("expand", help="digit expansion of a point")
    _add_spec_flags(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--n", type=int, default=40, help="number of digits")
    p.add_argument("--kind", choices=["lazy", "lmr"], default="lazy")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("transitions", help="transition points of a level")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--range", required=True, help="lo,hi")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"])
    p.set_defaults(func=cmd_transitions)

    p = sub.add_parser("classify", help="Pisot/Salem classification")
    p.add_argument("--poly", required=True,
                   help="integer coefficients, degree-descending, e.g. 1,0,-1,-1")
    p.add_argument("--rho", type=float, default=None,
                   help="also certify this contraction factor")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="all bounds across a rho grid")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--rho-min", type=float, default=0.5)
    p.add_argument("--rho-max", type=float, default=0.851)
    p.add_argument("--step", type=float, default=0.001)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--p0", type=float, default=0.5)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--include-transitions", action="store_true")
    p.add_argument("--certificate", help="minimal polynomial for awsc certification")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", help="regenerate a reference table")
    p.add_argument("--which", type=int, required=True, choices=[1, 2, 3])
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "tsv", "json"])
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
