import warnings

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from stochord import Baseline, ExtremeModel, Generator, NDist, ParamVector

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

warnings.filterwarnings("ignore", category=RuntimeWarning)


def model(side="min", baseline=("exponential", (1.0,)), alphas=(1.0,), gammas=(1.0,),
          generator=("independence", None), ndist=None, recycle=False):
    b = baseline if isinstance(baseline, Baseline) else Baseline(*baseline)
    g = generator if isinstance(generator, Generator) else Generator(*generator)
    nd = NDist.point(len(alphas)) if ndist is None else ndist
    return ExtremeModel(side, b, ParamVector(tuple(alphas), tuple(gammas)), g, nd, recycle)


def random_model(rng, side=None, family=None, n=None):
    """A random valid model; used by property and acceptance tests."""
    n = int(rng.integers(1, 6)) if n is None else n
    side = side or rng.choice(["min", "max"])
    kind = rng.integers(0, 3)
    if kind == 0:
        b = Baseline("exponential", (float(rng.uniform(0.3, 3.0)),))
    elif kind == 1:
        b = Baseline("weibull", (float(rng.uniform(0.3, 3.0)), float(rng.uniform(0.5, 3.0))))
    else:
        b = Baseline("inverse_exponential", (float(rng.uniform(0.3, 3.0)),))
    family = family or rng.choice(["independence", "clayton", "gumbel", "amh", "frank", "gumbel_hougaard"])
    theta = {
        "independence": None,
        "clayton": float(rng.uniform(0.2, 5.0)),
        "gumbel": float(rng.uniform(1.0, 4.0)),
        "gumbel_hougaard": float(rng.uniform(1.0, 4.0)),
        "amh": float(rng.uniform(-0.9, 0.9)),
        "frank": float(rng.choice([-1, 1]) * rng.uniform(0.5, 8.0)),
    }[family]
    k = int(rng.integers(1, n + 1))
    sup = np.sort(rng.choice(np.arange(1, n + 1), size=k, replace=False))
    probs = rng.dirichlet(np.ones(k))
    nd = NDist.from_pmf({int(s): float(p) for s, p in zip(sup, probs)})
    return ExtremeModel(side, b, ParamVector(tuple(rng.uniform(0.3, 3.0, n)), tuple(rng.uniform(0.3, 3.0, n))),
                        Generator(family, theta), nd)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
