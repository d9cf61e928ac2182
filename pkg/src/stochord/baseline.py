"""Baseline lifetime distributions G (and H) on the positive half-line.

Every family is evaluated in log space (``log_cdf``, ``log_sf``,
``log_pdf``) so that the Kumaraswamy transform and the copula
compositions built on top of it keep full relative precision in both
tails. The plain ``cdf``/``pdf``/... methods are thin wrappers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._numerics import LOG_TINY, DomainError, as_array, log1mexp, unwrap

__all__ = ["Baseline", "baseline_make", "BASELINE_NAMES"]


@dataclass(frozen=True)
class _Family:
    nparams: tuple[int, int]  # (min, max) number of parameters
    defaults: tuple[float, ...]
    upper: Callable[[tuple[float, ...]], float]
    log_cdf: Callable
    log_sf: Callable
    log_pdf: Callable
    quantile_log: Callable  # x from log(p)


def _exp_log_cdf(x, lam):
    return log1mexp(-lam * x)


def _exp_log_sf(x, lam):
    return -lam * x


def _exp_log_pdf(x, lam):
    return math.log(lam) - lam * x


def _exp_quantile(lp, lam):
    return -log1mexp(lp) / lam


def _weibull_log_cdf(x, eta, k):
    return log1mexp(-((eta * x) ** k))


def _weibull_log_sf(x, eta, k):
    return -((eta * x) ** k)


def _weibull_log_pdf(x, eta, k):
    with np.errstate(divide="ignore"):
        return math.log(k) + math.log(eta) + (k - 1.0) * np.log(eta * x) - (eta * x) ** k


def _weibull_quantile(lp, eta, k):
    return (-log1mexp(lp)) ** (1.0 / k) / eta


def _invexp_log_cdf(x, lam):
    with np.errstate(divide="ignore"):
        return -lam / x


def _invexp_log_sf(x, lam):
    with np.errstate(divide="ignore"):
        return log1mexp(-lam / x)


def _invexp_log_pdf(x, lam):
    with np.errstate(divide="ignore"):
        return math.log(lam) - 2.0 * np.log(x) - lam / x


def _invexp_quantile(lp, lam):
    with np.errstate(divide="ignore"):
        return -lam / lp


def _unif_log_cdf(x):
    with np.errstate(divide="ignore"):
        return np.log(np.minimum(x, 1.0))


def _unif_log_sf(x):
    with np.errstate(divide="ignore"):
        return np.log1p(-np.minimum(x, 1.0))


def _unif_log_pdf(x):
    with np.errstate(divide="ignore"):
        return np.where(x < 1.0, 0.0, -np.inf)


def _unif_quantile(lp):
    return np.exp(lp)


_FAMILIES: dict[str, _Family] = {
    "exponential": _Family((1, 1), (1.0,), lambda p: math.inf,
                           _exp_log_cdf, _exp_log_sf, _exp_log_pdf, _exp_quantile),
    "weibull": _Family((2, 2), (1.0, 1.0), lambda p: math.inf,
                       _weibull_log_cdf, _weibull_log_sf, _weibull_log_pdf, _weibull_quantile),
    "inverse_exponential": _Family((0, 1), (1.0,), lambda p: math.inf,
                                   _invexp_log_cdf, _invexp_log_sf, _invexp_log_pdf, _invexp_quantile),
    "uniform01": _Family((0, 0), (), lambda p: 1.0,
                         _unif_log_cdf, _unif_log_sf, _unif_log_pdf, _unif_quantile),
}

BASELINE_NAMES = tuple(_FAMILIES)


@dataclass(frozen=True)
class Baseline:
    """A continuous lifetime distribution on ``(0, upper)``.

    Parameters: ``exponential(rate)``, ``weibull(eta, shape)`` with
    cdf ``1 - exp(-(eta*x)**shape)``, ``inverse_exponential(scale=1)`` with
    cdf ``exp(-scale/x)``, and ``uniform01()`` (test use only).
    """

    name: str
    params: tuple[float, ...] = ()
    _family: _Family = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            fam = _FAMILIES[self.name]
        except KeyError:
            raise ValueError(f"unknown baseline {self.name!r}; expected one of {BASELINE_NAMES}") from None
        params = tuple(float(p) for p in self.params)
        lo, hi = fam.nparams
        if not lo <= len(params) <= hi:
            raise ValueError(f"baseline {self.name!r} takes {lo}..{hi} parameters, got {len(params)}")
        params = params + fam.defaults[len(params):]
        if any(not (math.isfinite(p) and p > 0.0) for p in params):
            raise ValueError(f"baseline {self.name!r} parameters must be positive and finite, got {params}")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "_family", fam)

    @property
    def support(self) -> tuple[float, float]:
        return 0.0, self._family.upper(self.params)

    def to_config(self) -> dict:
        return {"name": self.name, "params": list(self.params)}

    # log-space primitives -------------------------------------------------

    def _check_x(self, x):
        xs, scalar = as_array(x)
        if np.any(~(xs > 0.0)):
            raise DomainError(f"baseline {self.name!r} is defined on x > 0")
        return xs, scalar

    def log_cdf(self, x):
        xs, scalar = self._check_x(x)
        return unwrap(np.asarray(self._family.log_cdf(xs, *self.params), dtype=float), scalar)

    def log_sf(self, x):
        xs, scalar = self._check_x(x)
        return unwrap(np.asarray(self._family.log_sf(xs, *self.params), dtype=float), scalar)

    def log_pdf(self, x):
        xs, scalar = self._check_x(x)
        return unwrap(np.asarray(self._family.log_pdf(xs, *self.params), dtype=float), scalar)

    # plain values ---------------------------------------------------------

    def cdf(self, x):
        return np.exp(self.log_cdf(x))

    def sf(self, x):
        return np.exp(self.log_sf(x))

    def pdf(self, x):
        return np.exp(self.log_pdf(x))

    def hazard(self, x):
        """``pdf / (1 - cdf)``; raises where the survival underflows 1e-300."""
        ls = np.asarray(self.log_sf(x))
        if np.any(ls < LOG_TINY):
            raise DomainError("survival function underflows; hazard undefined")
        return np.exp(self.log_pdf(x) - ls)

    def reversed_hazard(self, x):
        """``pdf / cdf``; raises where the cdf underflows 1e-300."""
        lc = np.asarray(self.log_cdf(x))
        if np.any(lc < LOG_TINY):
            raise DomainError("cdf underflows; reversed hazard undefined")
        return np.exp(self.log_pdf(x) - lc)

    def quantile(self, p):
        ps, scalar = as_array(p)
        if np.any(~((ps > 0.0) & (ps < 1.0))):
            raise DomainError("quantile level must lie in (0, 1)")
        return unwrap(np.asarray(self._family.quantile_log(np.log(ps), *self.params), dtype=float), scalar)

    def quantile_from_log(self, log_p):
        """Quantile at ``exp(log_p)``; keeps precision for p far below 1e-300."""
        lp, scalar = as_array(log_p)
        return unwrap(np.asarray(self._family.quantile_log(lp, *self.params), dtype=float), scalar)


def baseline_make(name: str, params=()) -> Baseline:
    return Baseline(name, tuple(params))


def baseline_hazard(b: Baseline, x):
    return b.hazard(x)


def baseline_reversed_hazard(b: Baseline, x):
    return b.reversed_hazard(x)


def baseline_quantile(b: Baseline, p):
    return b.quantile(p)
