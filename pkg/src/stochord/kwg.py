"""Kumaraswamy-generalized (Kw-G) transform of a baseline distribution.

For a baseline G the Kw-G(alpha, gamma; G) law has

    cdf(x) = 1 - (1 - G(x)**alpha)**gamma.

All evaluations run through ``log G`` so that ``1 - G**alpha`` is formed
with ``expm1`` and stays accurate for tiny or huge ``alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numerics import LOG_TINY, DomainError, log1mexp
from .baseline import Baseline

__all__ = [
    "KwGParams",
    "ParamVector",
    "kwg_log_sf",
    "kwg_log_cdf",
    "kwg_log_pdf",
    "kwg_cdf",
    "kwg_sf",
    "kwg_pdf",
    "kwg_hazard",
    "kwg_reversed_hazard",
    "kwg_quantile",
]


def _positive(name, value):
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")
    return value


@dataclass(frozen=True)
class KwGParams:
    alpha: float
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _positive("alpha", self.alpha))
        object.__setattr__(self, "gamma", _positive("gamma", self.gamma))


@dataclass(frozen=True)
class ParamVector:
    """Per-component shape parameters of a heterogeneous Kw-G sample."""

    alphas: tuple[float, ...]
    gammas: tuple[float, ...]

    def __post_init__(self):
        alphas = tuple(_positive("alpha", a) for a in self.alphas)
        gammas = tuple(_positive("gamma", g) for g in self.gammas)
        if len(alphas) != len(gammas):
            raise ValueError(f"alphas and gammas differ in length ({len(alphas)} vs {len(gammas)})")
        if not alphas:
            raise ValueError("parameter vectors must be nonempty")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "gammas", gammas)

    def __len__(self):
        return len(self.alphas)

    def component(self, i: int) -> KwGParams:
        return KwGParams(self.alphas[i], self.gammas[i])


# Vectorised kernels. ``alpha``/``gamma`` broadcast against ``log_g``.

def _log_one_minus_g_alpha(alpha, log_g):
    """log(1 - G**alpha)."""
    return log1mexp(alpha * log_g)


def kwg_log_sf_from_log_g(alpha, gamma, log_g):
    return gamma * _log_one_minus_g_alpha(alpha, log_g)


def kwg_log_cdf_from_log_g(alpha, gamma, log_g):
    return log1mexp(kwg_log_sf_from_log_g(alpha, gamma, log_g))


def kwg_log_pdf_from_logs(alpha, gamma, log_g, log_dens):
    with np.errstate(invalid="ignore"):
        return (
            np.log(alpha) + np.log(gamma) + log_dens
            + (alpha - 1.0) * log_g
            + (gamma - 1.0) * _log_one_minus_g_alpha(alpha, log_g)
        )


def kwg_log_hazard_from_logs(alpha, gamma, log_g, log_dens):
    return (
        np.log(alpha) + np.log(gamma) + log_dens
        + (alpha - 1.0) * log_g
        - _log_one_minus_g_alpha(alpha, log_g)
    )


# Public scalar/array API -------------------------------------------------

def kwg_log_sf(p: KwGParams, b: Baseline, x):
    return kwg_log_sf_from_log_g(p.alpha, p.gamma, b.log_cdf(x))


def kwg_log_cdf(p: KwGParams, b: Baseline, x):
    return kwg_log_cdf_from_log_g(p.alpha, p.gamma, b.log_cdf(x))


def kwg_log_pdf(p: KwGParams, b: Baseline, x):
    return kwg_log_pdf_from_logs(p.alpha, p.gamma, b.log_cdf(x), b.log_pdf(x))


def kwg_cdf(p: KwGParams, b: Baseline, x):
    return np.exp(kwg_log_cdf(p, b, x))


def kwg_sf(p: KwGParams, b: Baseline, x):
    return np.exp(kwg_log_sf(p, b, x))


def kwg_pdf(p: KwGParams, b: Baseline, x):
    return np.exp(kwg_log_pdf(p, b, x))


def kwg_hazard(p: KwGParams, b: Baseline, x):
    """``alpha*gamma*g*G**(alpha-1) / (1 - G**alpha)``."""
    log_g = b.log_cdf(x)
    if np.any(np.asarray(kwg_log_sf_from_log_g(p.alpha, p.gamma, log_g)) < LOG_TINY):
        raise DomainError("Kw-G survival underflows; hazard undefined")
    return np.exp(kwg_log_hazard_from_logs(p.alpha, p.gamma, log_g, b.log_pdf(x)))


def kwg_reversed_hazard(p: KwGParams, b: Baseline, x):
    log_g = b.log_cdf(x)
    log_cdf = kwg_log_cdf_from_log_g(p.alpha, p.gamma, log_g)
    if np.any(np.asarray(log_cdf) < LOG_TINY):
        raise DomainError("Kw-G cdf underflows; reversed hazard undefined")
    return np.exp(kwg_log_pdf_from_logs(p.alpha, p.gamma, log_g, b.log_pdf(x)) - log_cdf)


def kwg_quantile_from_log_sf(alpha, gamma, b: Baseline, log_s):
    """x with Kw-G survival exp(log_s); vectorised over all arguments."""
    # G**alpha = 1 - s**(1/gamma)
    log_g = log1mexp(np.asarray(log_s, dtype=float) / gamma) / alpha
    return b.quantile_from_log(log_g)


def kwg_quantile(p: KwGParams, b: Baseline, q):
    q = np.asarray(q, dtype=float)
    if np.any(~((q > 0.0) & (q < 1.0))):
        raise DomainError("quantile level must lie in (0, 1)")
    out = kwg_quantile_from_log_sf(p.alpha, p.gamma, b, np.log1p(-q))
    return float(out) if np.ndim(out) == 0 else out
