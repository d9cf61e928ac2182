"""Run the seeded random suites for every theorem in one or both readings.

Usage: python scripts/theorem_suites.py [--trials 200] [--seed 7] [--variant corrected|literal|both]
"""

import argparse
import time

from stochord.theorems import THEOREM_IDS, VARIANTS, random_validation_suite


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--variant", choices=VARIANTS + ("both",), default="corrected")
    args = p.parse_args(argv)
    variants = VARIANTS if args.variant == "both" else (args.variant,)
    print(f"{'id':5} {'variant':10} {'valid':>6} {'unmet':>6} {'contra':>6}  worst")
    for v in variants:
        for tid in THEOREM_IDS:
            t0 = time.perf_counter()
            s = random_validation_suite(tid, args.trials, args.seed, variant=v)
            print(f"{tid:5} {v:10} {s.validated:6d} {s.hypotheses_unmet:6d} {s.contradictions:6d}  "
                  f"{s.worst_violation:.3g}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
