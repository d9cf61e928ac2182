"""Regenerate the shipped model fixtures from their in-code definitions."""

from pathlib import Path

from stochord import Baseline, ExtremeModel, Generator, NDist, ParamVector
from stochord.config import save_model
from stochord.theorems import counterexample_models

OUT = Path(__file__).resolve().parents[1] / "src" / "stochord" / "fixtures"


def application_models():
    weib = ExtremeModel(
        "max", Baseline("weibull", (1.0, 1.5)),
        ParamVector((1.2, 1.5, 2.0, 2.4, 3.0), (1.0, 1.3, 1.6, 2.0, 2.5)),
        Generator("clayton", 1.5), NDist.poisson(3.0), recycle=True,
    )
    expo = ExtremeModel(
        "min", Baseline("exponential", (0.5,)),
        ParamVector((0.8, 1.0, 1.4, 1.9, 2.5), (0.6, 0.9, 1.1, 1.5, 2.0)),
        Generator("gumbel", 1.5), NDist.poisson(2.0), recycle=True,
    )
    return {"app_kw_weibull": weib, "app_kw_exponential": expo}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for which in ("ce1", "ce2", "ce3"):
        a, b, _ = counterexample_models(which)
        save_model(a, OUT / f"{which}_A.json")
        save_model(b, OUT / f"{which}_B.json")
    for name, m in application_models().items():
        save_model(m, OUT / f"{name}.json")
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
