import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stochord._numerics import DomainError
from stochord.baseline import BASELINE_NAMES, Baseline, baseline_hazard, baseline_quantile, baseline_reversed_hazard

E = math.e


@pytest.mark.parametrize("b, x, attr, expected", [
    (Baseline("exponential", (1.0,)), math.log(2), "cdf", 0.5),
    (Baseline("inverse_exponential"), 1.0, "cdf", 1 / E),
    (Baseline("weibull", (1.0, 2.0)), 1.0, "pdf", 2 / E),
])
def test_point_values(b, x, attr, expected):
    assert getattr(b, attr)(x) == pytest.approx(expected, rel=1e-14)


def test_weibull_pdf_matches_finite_difference():
    b = Baseline("weibull", (1.0, 2.0))
    h = 1e-6
    fd = (b.cdf(1 + h) - b.cdf(1 - h)) / (2 * h)
    assert b.pdf(1.0) == pytest.approx(fd, rel=1e-8)


def test_hazards():
    assert baseline_hazard(Baseline("exponential", (1.0,)), 3.0) == pytest.approx(1.0, rel=1e-14)
    rh = baseline_reversed_hazard(Baseline("exponential", (2.0,)), 0.5)
    assert rh == pytest.approx(2 * math.exp(-1) / (1 - math.exp(-1)), rel=1e-12)
    hz = baseline_hazard(Baseline("inverse_exponential"), 1.0)
    assert hz == pytest.approx(math.exp(-1) / (1 - math.exp(-1)), rel=1e-12)


def test_quantiles():
    assert baseline_quantile(Baseline("exponential", (1.0,)), 0.5) == pytest.approx(math.log(2), rel=1e-14)
    assert baseline_quantile(Baseline("inverse_exponential"), 1 / E) == pytest.approx(1.0, rel=1e-14)
    assert baseline_quantile(Baseline("weibull", (1.0, 2.0)), 0.75) == pytest.approx(math.sqrt(math.log(4)), rel=1e-13)


BUILTINS = {"exponential": (1.7,), "weibull": (0.8, 2.5), "inverse_exponential": (1.0,), "uniform01": ()}


@pytest.mark.parametrize("name", BASELINE_NAMES)
def test_quantile_roundtrip(name):
    b = Baseline(name, BUILTINS[name])
    p = np.linspace(0.01, 0.99, 99)
    assert np.abs(b.cdf(b.quantile(p)) - p).max() <= 1e-8


@given(st.floats(0.05, 20.0), st.floats(1e-3, 50.0))
def test_tail_functions_complement(rate, x):
    b = Baseline("exponential", (rate,))
    assert b.cdf(x) + b.sf(x) == pytest.approx(1.0, abs=1e-15)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        Baseline("gamma", (1.0,))
    with pytest.raises(ValueError):
        Baseline("exponential", (-1.0,))
    with pytest.raises(DomainError):
        Baseline("exponential", (1.0,)).cdf(-1.0)
    with pytest.raises(DomainError):
        Baseline("exponential", (1.0,)).quantile(1.0)
