import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import model, random_model
from stochord import Baseline, NDist
from stochord.extremes import (
    extreme_quantile,
    fixed_max_cdf,
    fixed_max_density,
    fixed_min_density,
    fixed_min_sf,
    max_reversed_hazard_independent,
    max_reversed_hazard_terms,
    min_hazard_independent,
    random_max_cdf,
    random_min_density,
    random_min_sf,
)
from stochord.kwg import KwGParams, kwg_cdf, kwg_hazard, kwg_pdf

LN2 = math.log(2)
EXP1 = ("exponential", (1.0,))


def test_single_component_reduces_to_marginal():
    for fam, th in (("gumbel", 2.0), ("clayton", 1.5), ("frank", -3.0)):
        mx = model("max", alphas=(2.0,), gammas=(3.0,), generator=(fam, th))
        assert fixed_max_cdf(mx, 1, LN2) == pytest.approx(1 - 0.75 ** 3, rel=1e-13)
        mn = model("min", alphas=(2.0,), gammas=(3.0,), generator=(fam, th))
        assert fixed_min_sf(mn, 1, LN2) == pytest.approx(0.75 ** 3, rel=1e-13)


def test_independence_products():
    mx = model("max", alphas=(1.0, 2.0), gammas=(1.0, 3.0))
    assert fixed_max_cdf(mx, 2, LN2) == pytest.approx(0.5 * 0.578125, rel=1e-14)
    b = Baseline(*EXP1)
    x = 1.0
    mn = model("min", alphas=(1.0, 1.0), gammas=(1.5, 2.5))
    assert fixed_min_sf(mn, 2, x) == pytest.approx(math.exp(-4.0), rel=1e-13)
    assert min_hazard_independent(mn, 2, x) == pytest.approx(4.0, rel=1e-13)
    assert fixed_min_density(mn, 2, x) == pytest.approx(4.0 * math.exp(-4.0), rel=1e-12)
    del b


def test_gumbel_identical_components_closed_form():
    m = model("max", alphas=(1.0, 1.0), gammas=(1.0, 1.0), generator=("gumbel", 2.0))
    assert fixed_max_cdf(m, 2, LN2) == pytest.approx(0.5 ** math.sqrt(2), rel=1e-13)
    p = 0.3
    # u^(sqrt 2) = p with u = 1 - e^-x
    assert extreme_quantile(m, p) == pytest.approx(-math.log1p(-p ** (1 / math.sqrt(2))), rel=1e-10)


def test_mixture_values():
    m = model("max", alphas=(1.0, 1.0), gammas=(1.0, 1.0), ndist=NDist.from_pmf({1: 0.5, 2: 0.5}))
    assert random_max_cdf(m, LN2) == pytest.approx(0.375, rel=1e-14)
    pt = model("min", alphas=(1.2, 0.7, 2.0), gammas=(0.5, 1.5, 1.0), generator=("clayton", 2.0),
               ndist=NDist.point(2))
    assert random_min_sf(pt, 0.7) == pytest.approx(fixed_min_sf(pt, 2, 0.7), rel=1e-14)


def test_min_quantile_closed_form():
    m = model("min", alphas=(1.0, 1.0, 1.0), gammas=(0.5, 1.0, 2.0))
    p = np.linspace(0.01, 0.99, 9)
    assert np.allclose(extreme_quantile(m, p), -np.log1p(-p) / 3.5, rtol=1e-12)


def test_n1_density_and_hazard_reduce_to_kwg():
    b = Baseline("weibull", (0.9, 1.6))
    x = np.geomspace(0.05, 4, 30)
    mn = model("min", baseline=b, alphas=(1.7,), gammas=(0.8,), generator=("clayton", 3.0))
    assert np.allclose(fixed_min_density(mn, 1, x), kwg_pdf(KwGParams(1.7, 0.8), b, x), rtol=1e-11)
    ind = model("min", baseline=b, alphas=(1.7,), gammas=(0.8,))
    assert np.allclose(min_hazard_independent(ind, 1, x), kwg_hazard(KwGParams(1.7, 0.8), b, x), rtol=1e-11)


def test_generic_min_hazard_sums_component_terms():
    m = model("min", alphas=(2.0, 3.0), gammas=(1.0, 1.0))
    g = 0.5
    terms = [a * g * g ** (a - 1) / (1 - g ** a) for a in (2.0, 3.0)]  # g(x) = 1 - G = 0.5 at ln 2
    assert min_hazard_independent(m, 2, LN2) == pytest.approx(sum(terms), rel=1e-13)


def test_reversed_hazard_terms():
    b = Baseline("exponential", (1.3,))
    x = np.geomspace(0.05, 5, 40)
    m1 = model("max", baseline=b, alphas=(1.8,), gammas=(1.0,))
    rh = kwg_pdf(KwGParams(1.8, 1.0), b, x) / kwg_cdf(KwGParams(1.8, 1.0), b, x)
    assert np.allclose(max_reversed_hazard_independent(m1, 1, x), rh, rtol=1e-11)
    m = model("max", baseline=b, alphas=(0.6, 1.8, 3.0), gammas=(2.0, 2.0, 2.0))
    terms = max_reversed_hazard_terms(m, 3, x)
    assert np.all(terms >= 0)
    for n in (1, 2):
        step = max_reversed_hazard_independent(m, n + 1, x) - max_reversed_hazard_independent(m, n, x)
        assert np.allclose(step, terms[n], rtol=1e-10)
    # agrees with the log-derivative of the fixed-size maximum's cdf
    h = 1e-6
    fd = (np.log(fixed_max_cdf(m, 3, x * (1 + h))) - np.log(fixed_max_cdf(m, 3, x * (1 - h)))) / (2 * h * x)
    assert np.allclose(max_reversed_hazard_independent(m, 3, x), fd, rtol=1e-6)


@pytest.mark.parametrize("seed", range(8))
def test_density_matches_finite_difference(seed):
    rng = np.random.default_rng(seed)
    m = random_model(rng)
    x = np.asarray(m.quantile(np.linspace(0.05, 0.95, 15)))
    h = 1e-5 * x
    if m.side.value == "MIN":
        fd = -(m.sf(x + h) - m.sf(x - h)) / (2 * h)
    else:
        fd = (m.cdf(x + h) - m.cdf(x - h)) / (2 * h)
    assert np.allclose(m.pdf(x), fd, rtol=1e-4)


@given(st.integers(0, 10_000))
def test_distribution_functions_are_monotone(seed):
    m = random_model(np.random.default_rng(seed))
    x = np.geomspace(1e-3, 50, 300)
    c = np.asarray(m.cdf(x))
    assert np.all((c >= 0) & (c <= 1))
    assert np.all(np.diff(c) >= -1e-15)


def test_random_density_is_mixture_of_fixed_densities():
    nd = NDist.from_pmf({1: 0.2, 3: 0.8})
    m = model("min", alphas=(0.5, 1.5, 2.5), gammas=(1.0, 2.0, 0.7), generator=("gumbel", 1.7), ndist=nd)
    x = np.geomspace(0.01, 3, 25)
    expected = 0.2 * fixed_min_density(m, 1, x) + 0.8 * fixed_min_density(m, 3, x)
    assert np.allclose(random_min_density(m, x), expected, rtol=1e-12)
    mx = model("max", alphas=(0.5, 1.5), gammas=(1.0, 2.0), generator=("clayton", 1.2))
    assert np.all(fixed_max_density(mx, 2, x) > 0)


def test_poisson_sample_size():
    nd = NDist.poisson(2.0)
    assert nd.support[0] == 1
    assert math.fsum(nd.probs) == pytest.approx(1.0, abs=1e-12)
    lam = 2.0
    assert nd.probs[0] == pytest.approx(lam * math.exp(-lam) / (1 - math.exp(-lam)), rel=1e-8)
    assert nd.sf(1) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        model("min", alphas=(1.0,), gammas=(1.0,), ndist=nd)
    m = model("min", alphas=(1.0,), gammas=(1.0,), ndist=nd, recycle=True)
    assert 0 < float(m.sf(1.0)) < 1


def test_model_validation():
    with pytest.raises(ValueError):
        NDist((0, 1), (0.5, 0.5))
    with pytest.raises(ValueError):
        NDist((1, 2), (0.5, 0.4))
    with pytest.raises(ValueError):
        model("max", alphas=(1.0,), gammas=(1.0,), ndist=NDist.point(3))
    m = model("max", alphas=(1.0,), gammas=(1.0,))
    with pytest.raises(ValueError):
        fixed_min_sf(m, 1, 1.0)
    with pytest.raises(ValueError):
        min_hazard_independent(model("min", generator=("clayton", 1.0)), 1, 1.0)


def test_extreme_sf_near_one_stays_accurate():
    m = model("min", baseline=("inverse_exponential", (1.0,)), alphas=(0.01, 7.0), gammas=(3.9, 3.1),
              generator=("gumbel", 1.4), ndist=NDist.from_pmf({1: 0.5, 2: 0.5}))
    x = np.geomspace(1e-3, 1e-1, 20)
    ls = np.asarray(m.log_sf(x))
    lc = np.asarray(m.log_cdf(x))
    assert np.all(ls <= 0) and np.all(np.isfinite(lc))
    # the two logs must describe complementary probabilities, including where the cdf is tiny
    assert np.allclose(np.exp(ls) + np.exp(lc), 1.0, rtol=0, atol=1e-14)
    assert np.allclose(ls[:3], np.log1p(-np.exp(lc[:3])), rtol=1e-12)
