"""Write the survival-difference curves of the three shipped counterexamples.

Usage: python scripts/reproduce_counterexamples.py [outdir]
"""

import json
import sys
from pathlib import Path

from stochord.cli import _write_csv
from stochord.theorems import run_counterexample


def main(outdir="counterexamples"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for which in ("ce1", "ce2", "ce3"):
        res = run_counterexample(which)
        _write_csv(out / f"{which}.csv", ["x", "diff", "model_A_value", "model_B_value"], res.rows())
        rep = res.report()
        (out / f"{which}.json").write_text(json.dumps(rep, indent=2) + "\n")
        print(f"{which}: sign_change={rep['sign_change']} crossings={rep['crossing_locations']} "
              f"diff range [{rep['min_diff']:.3g}, {rep['max_diff']:.3g}]")


if __name__ == "__main__":
    main(*sys.argv[1:])
