import numpy as np
import pytest
from scipy import stats

from conftest import model
from stochord import NDist
from stochord.config import load_fixture
from stochord.mc import (
    BLOCK,
    SampleBatch,
    SamplingError,
    _log_uniforms,
    empirical_cdf,
    empirical_vs_analytic,
    sample_extreme,
    sample_frailty,
)


def test_frailty_laplace_transforms():
    rng = np.random.default_rng(1)
    for fam, th in (("clayton", 2.0), ("gumbel", 1.8)):
        m = model("min", generator=(fam, th))
        v = sample_frailty(fam, th, 200_000, rng)
        for t in (0.3, 1.0, 3.0):
            assert np.exp(-t * v).mean() == pytest.approx(float(m.generator.psi(t)), abs=5e-3)


@pytest.mark.parametrize("fam,theta,tau", [("clayton", 2.0, 0.5), ("gumbel", 2.0, 0.5), ("gumbel", 3.0, 2 / 3)])
def test_kendall_tau(fam, theta, tau):
    m = model("max", alphas=(1.0, 1.0), gammas=(1.0, 1.0), generator=(fam, theta))
    u = np.exp(_log_uniforms(m, 4000, 2, np.random.default_rng(2)))
    assert stats.kendalltau(u[:, 0], u[:, 1])[0] == pytest.approx(tau, abs=0.04)


def test_exponential_minimum_mean():
    # min of 3 independent exponential(1) components with gammas summing to 6
    m = model("min", alphas=(1.0, 1.0, 1.0), gammas=(1.0, 2.0, 3.0))
    batch = sample_extreme(m, 50_000, seed=4)
    assert batch.draws.mean() == pytest.approx(1 / 6, rel=0.02)


def test_determinism_and_worker_independence():
    m = load_fixture("app_kw_exponential")
    n = 2 * BLOCK + 17
    a = sample_extreme(m, n, seed=9, workers=1)
    b = sample_extreme(m, n, seed=9, workers=3)
    assert np.array_equal(a.draws, b.draws)
    assert not np.array_equal(a.draws, sample_extreme(m, n, seed=10).draws)
    assert a.metadata["seed"] == 9 and a.metadata["model"] == m.digest()


def test_agreement_and_discrimination():
    m = model("max", alphas=(0.7, 1.5, 2.5), gammas=(1.0, 2.0, 0.5), generator=("clayton", 2.0),
              ndist=NDist.from_pmf({1: 0.3, 3: 0.7}))
    other = model("max", alphas=(0.7, 1.5, 2.5), gammas=(1.0, 2.0, 0.5), generator=("clayton", 2.0),
                  ndist=NDist.point(3))
    batch = sample_extreme(m, 40_000, seed=5)
    x = np.asarray(m.quantile(np.linspace(0.01, 0.99, 99)))
    assert empirical_vs_analytic(batch, x) < 0.015
    wrong = SampleBatch(batch.draws, other, 5, batch.size)
    assert empirical_vs_analytic(wrong, x) >= 0.04


def test_errors():
    with pytest.raises(SamplingError):
        sample_extreme(model("min", generator=("frank", 2.0)), 10, seed=0)
    with pytest.raises(ValueError):
        sample_extreme(model("min"), -1, seed=0)
    with pytest.raises(ValueError):
        SampleBatch(np.zeros(3), model("min"), 0, 4)
    assert sample_extreme(model("min"), 0, seed=0).size == 0


def test_empirical_cdf_steps():
    assert np.allclose(empirical_cdf([1.0, 2.0, 3.0, 4.0], [0.5, 2.0, 2.5, 9.0]), [0, 0.5, 0.5, 1.0])
