"""Command-line front end.

Exit codes: 0 on success, HOLDS or VALIDATED; 1 on FAILS or any
CONTRADICTION; 2 on configuration or usage errors. Reports go to stdout
as JSON, curves to ``--out`` as CSV with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

import numpy as np

from ._numerics import DomainError
from .config import ConfigError, load_model
from .copula import Generator
from .mc import SamplingError, sample_extreme
from .orders import Verdict, check_order
from .theorems import (
    THEOREM_IDS,
    VARIANTS,
    ConfigurationError,
    Outcome,
    check_theorem,
    random_validation_suite,
    run_counterexample,
    scan,
)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
_WHAT = ("cdf", "sf", "pdf", "hazard", "rhazard")


def _fmt(v) -> str:
    return format(float(v), ".17g")


def _write_csv(path, header, rows):
    fh = open(path, "w", newline="") if path and path != "-" else sys.stdout
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])
    finally:
        if fh is not sys.stdout:
            fh.close()


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True, default=_json_default)
    sys.stdout.write("\n")


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, Generator):
        return o.to_config()
    return str(o)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("STOCHORD_THREADS", "1")))
    except ValueError:
        return 1


# subcommands ----------------------------------------------------------------------------

def cmd_eval(args) -> int:
    m = load_model(args.model)
    if not 0.0 < args.xmin < args.xmax:
        raise ConfigError("--xmin/--xmax: need 0 < xmin < xmax")
    if args.points < 2:
        raise ConfigError("--points: need at least 2")
    x = np.geomspace(args.xmin, args.xmax, args.points) if args.log else np.linspace(args.xmin, args.xmax, args.points)
    fn = {"cdf": m.cdf, "sf": m.sf, "pdf": m.pdf, "hazard": m.hazard, "rhazard": m.reversed_hazard}[args.what]
    _write_csv(args.out, ["x", args.what], zip(x, np.asarray(fn(x))))
    return EXIT_OK


def cmd_check_order(args) -> int:
    a, b = load_model(args.a), load_model(args.b)
    rep = check_order(args.order, a, b)
    _emit({"order": args.order, "A": a.digest(), "B": b.digest(), **rep.to_dict()})
    return EXIT_FAIL if rep.verdict is Verdict.FAILS else EXIT_OK


def cmd_verify_theorem(args) -> int:
    if args.random:
        if args.a or args.b:
            raise ConfigError("--random excludes --a/--b")
        s = random_validation_suite(args.id, args.trials, args.seed, variant=args.variant, workers=_threads())
        _emit(s.to_dict())
        return EXIT_FAIL if s.contradictions else EXIT_OK
    if not (args.a and args.b):
        raise ConfigError("verify-theorem needs --a and --b, or --random")
    case = check_theorem(args.id, load_model(args.a), load_model(args.b), variant=args.variant)
    _emit(case.to_dict())
    return EXIT_FAIL if case.overall is Outcome.CONTRADICTION else EXIT_OK


def cmd_counterexample(args) -> int:
    res = run_counterexample(args.which)
    if args.out:
        _write_csv(args.out, ["x", "diff", "model_A_value", "model_B_value"], res.rows())
    _emit(res.report())
    return EXIT_OK


def cmd_scan(args) -> int:
    out = scan(args.id, args.trials, args.seed)
    _emit(out)
    return EXIT_FAIL if out["contradictions"] else EXIT_OK


def cmd_sample(args) -> int:
    m = load_model(args.model)
    if args.size < 1:
        raise ConfigError("--size: need at least 1")
    batch = sample_extreme(m, args.size, args.seed, workers=_threads())
    _write_csv(args.out, ["draw"], ((v,) for v in batch.draws))
    meta = dict(batch.metadata, size=batch.size, side=m.side.value.lower())
    if args.out and args.out != "-":
        Path(str(args.out) + ".meta.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    else:
        sys.stderr.write(json.dumps(meta, sort_keys=True) + "\n")
    return EXIT_OK


# parser -----------------------------------------------------------------------------------

def _theorem_id(s: str) -> str:
    key = s.upper().replace("T4B", "T4b")
    if key not in THEOREM_IDS:
        raise argparse.ArgumentTypeError(f"expected one of {', '.join(THEOREM_IDS)}")
    return key


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stochord", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a curve of a model on a grid")
    e.add_argument("--model", required=True)
    e.add_argument("--what", choices=_WHAT, required=True)
    e.add_argument("--xmin", type=float, required=True)
    e.add_argument("--xmax", type=float, required=True)
    e.add_argument("--points", type=int, default=512)
    e.add_argument("--log", action="store_true", help="log-spaced grid")
    e.add_argument("--out", default="-")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("check-order", help="check A <= B in a stochastic order")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--order", choices=("st", "hr", "rh", "lr", "disp"), required=True)
    c.set_defaults(func=cmd_check_order)

    v = sub.add_parser("verify-theorem", help="check a theorem on two models or on random draws")
    v.add_argument("--id", type=_theorem_id, required=True)
    v.add_argument("--a")
    v.add_argument("--b")
    v.add_argument("--random", action="store_true")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--variant", choices=VARIANTS, default="corrected")
    v.set_defaults(func=cmd_verify_theorem)

    x = sub.add_parser("counterexample", help="survival-difference curve of a shipped counterexample")
    x.add_argument("--which", choices=("ce1", "ce2", "ce3"), required=True)
    x.add_argument("--out")
    x.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("scan", help="search for violations of a statement as written")
    s.add_argument("--id", type=_theorem_id, required=True)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=7)
    s.set_defaults(func=cmd_scan)

    m = sub.add_parser("sample", help="Monte Carlo draws of a model's random extreme")
    m.add_argument("--model", required=True)
    m.add_argument("--size", type=int, required=True)
    m.add_argument("--seed", type=int, required=True)
    m.add_argument("--out", default="-")
    m.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ConfigurationError, SamplingError, DomainError) as exc:
        sys.stderr.write(f"stochord: error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
