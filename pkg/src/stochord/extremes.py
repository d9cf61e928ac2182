"""Distributions of sample extremes of dependent Kw-G components.

For a fixed sample size n the components are coupled by an Archimedean
copula with generator ``psi`` (distributional copula for maxima,
survival copula for minima):

    P(X_{n:n} < x) = psi(sum_i phi(F_i(x)))
    P(X_{1:n} > x) = psi(sum_i phi(1 - F_i(x)))

With a random sample size N independent of the components, both are
mixed over the pmf of N. Every quantity is computed for all sample
sizes at once from cumulative sums over the component axis.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.special import logsumexp
from scipy.stats import poisson

from ._numerics import DomainError, as_array, invert_increasing, log1mexp, logcumsumexp, unwrap
from .baseline import Baseline
from .copula import Generator
from .kwg import (
    ParamVector,
    kwg_log_cdf_from_log_g,
    kwg_log_hazard_from_logs,
    kwg_log_pdf_from_logs,
    kwg_log_sf_from_log_g,
)

__all__ = [
    "Side",
    "NDist",
    "ExtremeModel",
    "fixed_max_cdf",
    "fixed_min_sf",
    "random_max_cdf",
    "random_min_sf",
    "fixed_max_density",
    "fixed_min_density",
    "random_max_density",
    "random_min_density",
    "min_hazard_independent",
    "max_reversed_hazard_independent",
    "extreme_quantile",
]


class Side(str, Enum):
    MIN = "MIN"
    MAX = "MAX"


@dataclass(frozen=True)
class NDist:
    """Distribution of the random sample size on a finite support."""

    support: tuple[int, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        support = tuple(int(k) for k in self.support)
        probs = tuple(float(p) for p in self.probs)
        if not support or len(support) != len(probs):
            raise ValueError("support and probs must be nonempty and of equal length")
        if support[0] < 1 or any(b <= a for a, b in zip(support, support[1:])):
            raise ValueError("support must be strictly increasing positive integers")
        if any(not (p >= 0.0) for p in probs):
            raise ValueError("probabilities must be nonnegative")
        if abs(math.fsum(probs) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {math.fsum(probs)!r}, not 1")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def point(cls, k: int) -> "NDist":
        return cls((k,), (1.0,))

    @classmethod
    def from_pmf(cls, pmf: dict) -> "NDist":
        items = sorted((int(k), float(v)) for k, v in pmf.items())
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items))

    @classmethod
    def poisson(cls, lam: float, truncate_mass: float = 1e-9) -> "NDist":
        """Zero-truncated Poisson, cut at the smallest k holding 1 - truncate_mass."""
        if not lam > 0.0:
            raise ValueError("poisson mean must be positive")
        if not 0.0 < truncate_mass < 1.0:
            raise ValueError("truncate_mass must lie in (0, 1)")
        p0 = poisson.pmf(0, lam)
        k = 1
        mass = 0.0
        probs = []
        while True:
            q = poisson.pmf(k, lam) / (1.0 - p0)
            probs.append(q)
            mass += q
            if mass >= 1.0 - truncate_mass:
                break
            k += 1
        total = math.fsum(probs)
        return cls(tuple(range(1, k + 1)), tuple(p / total for p in probs))

    @property
    def max(self) -> int:
        return self.support[-1]

    def sf(self, k: int) -> float:
        """P(N >= k)."""
        return math.fsum(p for s, p in zip(self.support, self.probs) if s >= k)

    def to_config(self) -> dict:
        return {"support": list(self.support), "probs": list(self.probs)}


@dataclass(frozen=True)
class ExtremeModel:
    """Random minimum or maximum of dependent heterogeneous Kw-G components.

    ``recycle=True`` lets sample sizes beyond ``len(params)`` reuse the
    parameter vector cyclically (needed for unbounded sample-size laws).
    """

    side: Side
    baseline: Baseline
    params: ParamVector
    generator: Generator
    ndist: NDist
    recycle: bool = False
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.side, Side):
            object.__setattr__(self, "side", Side(str(self.side).upper()))
        if self.ndist.max > len(self.params) and not self.recycle:
            raise ValueError(
                f"sample-size support reaches {self.ndist.max} but only {len(self.params)} "
                "components are parameterised (set recycle=True to reuse them cyclically)"
            )

    # component parameters ------------------------------------------------------

    def _arrays(self, n: int):
        key = ("arr", n)
        if key not in self._cache:
            idx = np.arange(n) % len(self.params)
            self._cache[key] = (
                np.asarray(self.params.alphas)[idx],
                np.asarray(self.params.gammas)[idx],
            )
        return self._cache[key]

    def _check_n(self, n: int) -> int:
        n = int(n)
        if n < 1 or (n > len(self.params) and not self.recycle):
            raise ValueError(f"sample size {n} outside 1..{len(self.params)}")
        return n

    @property
    def alphas(self):
        return self.params.alphas

    @property
    def gammas(self):
        return self.params.gammas

    def with_ndist(self, ndist: NDist) -> "ExtremeModel":
        return ExtremeModel(self.side, self.baseline, self.params, self.generator, ndist, self.recycle)

    def to_config(self) -> dict:
        cfg = {
            "side": self.side.value.lower(),
            "baseline": self.baseline.to_config(),
            "alphas": list(self.params.alphas),
            "gammas": list(self.params.gammas),
            "generator": self.generator.to_config(),
            "ndist": self.ndist.to_config(),
        }
        if self.recycle:
            cfg["recycle"] = True
        return cfg

    def digest(self) -> str:
        blob = json.dumps(self.to_config(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    # core evaluation -----------------------------------------------------------

    def _components(self, n: int, x: np.ndarray):
        """Per-component log marginal level and log density, shape (n, len(x)).

        The marginal level is ``log F_i`` for maxima and ``log(1 - F_i)``
        for minima, i.e. the argument of the copula.
        """
        a, g = self._arrays(n)
        a = a[:, None]
        g = g[:, None]
        log_g = np.asarray(self.baseline.log_cdf(x))[None, :]
        log_dens = np.asarray(self.baseline.log_pdf(x))[None, :]
        if self.side is Side.MAX:
            level = kwg_log_cdf_from_log_g(a, g, log_g)
        else:
            level = kwg_log_sf_from_log_g(a, g, log_g)
        with np.errstate(divide="ignore", invalid="ignore"):
            dens = kwg_log_pdf_from_logs(a, g, log_g, log_dens)
        return level, dens

    def _sizes(self, sizes):
        return np.asarray(sizes, dtype=int)

    def fixed_log_value(self, sizes, x) -> np.ndarray:
        """log of the copula value (max cdf or min sf) for each size, shape (len(sizes), len(x))."""
        sizes = self._sizes(sizes)
        level, _ = self._components(int(sizes.max()), x)
        t = self.generator.phi_log(level)
        cum = np.cumsum(t, axis=0)[sizes - 1]
        return np.asarray(self.generator.log_psi(cum.ravel())).reshape(cum.shape)

    def fixed_log_density(self, sizes, x) -> np.ndarray:
        """log density of the fixed-size extreme by the chain rule, shape (len(sizes), len(x))."""
        sizes = self._sizes(sizes)
        level, dens = self._components(int(sizes.max()), x)
        gen = self.generator
        t = gen.phi_log(level)
        cum = np.cumsum(t, axis=0)[sizes - 1]
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            d_t = np.asarray(gen.log_neg_psi_d1(t.ravel())).reshape(t.shape)
            # components sitting exactly at the copula boundary contribute nothing
            w = np.where(np.isfinite(d_t), dens - d_t, -np.inf)
            w = np.where(np.isnan(w), -np.inf, w)
            inner = logcumsumexp(w, axis=0)[sizes - 1]
            outer = np.asarray(gen.log_neg_psi_d1(cum.ravel())).reshape(cum.shape)
            out = outer + inner
        return np.where(np.isnan(out), -np.inf, out)

    def _mix(self, per_size):
        lp = np.log(np.asarray(self.ndist.probs))[:, None]
        with np.errstate(divide="ignore"):
            return logsumexp(per_size + lp, axis=0)

    def _mix_prob(self, per_size):
        # near 1 the plain log-mixture loses the tiny gap to 1 (and can exceed 0)
        out = self._mix(per_size)
        probs = np.asarray(self.ndist.probs)[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            near_one = np.log1p(np.sum(probs * np.expm1(per_size), axis=0))
        return np.minimum(np.where(out > -0.5, near_one, out), 0.0)

    # native quantities: MAX -> cdf, MIN -> sf
    def log_native(self, x):
        xs, scalar = as_array(x)
        return unwrap(self._mix_prob(self.fixed_log_value(self.ndist.support, xs)), scalar)

    def log_pdf(self, x):
        xs, scalar = as_array(x)
        return unwrap(self._mix(self.fixed_log_density(self.ndist.support, xs)), scalar)

    def log_cdf(self, x):
        ln = self.log_native(x)
        return ln if self.side is Side.MAX else log1mexp(ln)

    def log_sf(self, x):
        ln = self.log_native(x)
        return ln if self.side is Side.MIN else log1mexp(ln)

    def cdf(self, x):
        return np.exp(self.log_cdf(x))

    def sf(self, x):
        return np.exp(self.log_sf(x))

    def pdf(self, x):
        return np.exp(self.log_pdf(x))

    def hazard(self, x):
        return np.exp(self.log_pdf(x) - self.log_sf(x))

    def reversed_hazard(self, x):
        return np.exp(self.log_pdf(x) - self.log_cdf(x))

    def fixed_log_sf(self, sizes, x):
        v = self.fixed_log_value(sizes, np.atleast_1d(np.asarray(x, dtype=float)))
        return v if self.side is Side.MIN else log1mexp(v)

    def fixed_log_cdf(self, sizes, x):
        v = self.fixed_log_value(sizes, np.atleast_1d(np.asarray(x, dtype=float)))
        return v if self.side is Side.MAX else log1mexp(v)

    def quantile(self, p):
        """Right-continuous inverse of the cdf; ``|cdf(q) - p| <= 1e-9``."""
        ps, scalar = as_array(p)
        if np.any(~((ps > 0.0) & (ps < 1.0))):
            raise DomainError("quantile level must lie in (0, 1)")
        upper = self.baseline.support[1]
        bound = None if math.isinf(upper) else upper

        def cdf(v):
            return float(np.exp(self.log_cdf(v)))

        flat = ps.ravel()
        if flat.size <= 2:
            out = np.array([invert_increasing(cdf, float(q), upper_bound=bound) for q in flat])
            return unwrap(out.reshape(ps.shape), scalar)
        # bracket the extreme levels once, then bisect every level together in log x
        lo = np.full(flat.size, invert_increasing(cdf, float(flat.min()), upper_bound=bound))
        hi = np.full(flat.size, invert_increasing(cdf, float(flat.max()), upper_bound=bound))
        log_p = np.log(flat)
        while np.any(self.log_cdf(lo) >= log_p):
            lo = lo * 0.5
        while np.any(self.log_cdf(hi) < log_p):
            hi = hi * 2.0 if bound is None else np.minimum(hi * 2.0, bound)
        for _ in range(200):
            if np.all(hi - lo <= 1e-15 * hi):
                break
            mid = np.sqrt(lo * hi) if lo.min() > 0.0 else 0.5 * (lo + hi)
            above = self.log_cdf(mid) >= log_p
            hi = np.where(above, mid, hi)
            lo = np.where(above, lo, mid)
        return unwrap(hi.reshape(ps.shape), scalar)


# Module-level operations ---------------------------------------------------------

def _need(m: ExtremeModel, side: Side):
    if m.side is not side:
        raise ValueError(f"operation requires a {side.value} model, got {m.side.value}")


def _fixed(m: ExtremeModel, n: int, x, fn):
    n = m._check_n(n)
    xs, scalar = as_array(x)
    return unwrap(np.exp(fn([n], xs)[0]), scalar)


def fixed_max_cdf(m: ExtremeModel, n: int, x):
    _need(m, Side.MAX)
    return _fixed(m, n, x, m.fixed_log_value)


def fixed_min_sf(m: ExtremeModel, n: int, x):
    _need(m, Side.MIN)
    return _fixed(m, n, x, m.fixed_log_value)


def fixed_max_density(m: ExtremeModel, n: int, x):
    _need(m, Side.MAX)
    return _fixed(m, n, x, m.fixed_log_density)


def fixed_min_density(m: ExtremeModel, n: int, x):
    _need(m, Side.MIN)
    return _fixed(m, n, x, m.fixed_log_density)


def random_max_cdf(m: ExtremeModel, x):
    _need(m, Side.MAX)
    return np.exp(m.log_native(x))


def random_min_sf(m: ExtremeModel, x):
    _need(m, Side.MIN)
    return np.exp(m.log_native(x))


def random_max_density(m: ExtremeModel, x):
    _need(m, Side.MAX)
    return m.pdf(x)


def random_min_density(m: ExtremeModel, x):
    _need(m, Side.MIN)
    return m.pdf(x)


def min_hazard_independent(m: ExtremeModel, n: int, x):
    """Sum of component hazards; valid only under the independence copula."""
    if m.generator.family != "independence":
        raise ValueError("min_hazard_independent requires the independence generator")
    n = m._check_n(n)
    xs, scalar = as_array(x)
    a, g = m._arrays(n)
    log_g = np.asarray(m.baseline.log_cdf(xs))[None, :]
    log_dens = np.asarray(m.baseline.log_pdf(xs))[None, :]
    terms = np.exp(kwg_log_hazard_from_logs(a[:, None], g[:, None], log_g, log_dens))
    return unwrap(terms.sum(axis=0), scalar)


def max_reversed_hazard_terms(m: ExtremeModel, n: int, x) -> np.ndarray:
    """Per-component terms ``A(alpha_i) * B(alpha_i)``, shape (n, len(x)).

    ``A = alpha*g*G**(alpha-1)/(1-G**alpha)`` and
    ``B = gamma*(1-G**alpha)**gamma / (1-(1-G**alpha)**gamma)``.
    """
    if m.generator.family != "independence":
        raise ValueError("max_reversed_hazard_independent requires the independence generator")
    n = m._check_n(n)
    a, g = m._arrays(n)
    if np.ptp(g) != 0.0:
        raise ValueError("max_reversed_hazard_independent requires equal gammas")
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    log_g = np.asarray(m.baseline.log_cdf(xs))[None, :]
    log_dens = np.asarray(m.baseline.log_pdf(xs))[None, :]
    a = a[:, None]
    gam = g[:, None]
    log_1m = log1mexp(a * log_g)
    log_a = np.log(a) + log_dens + (a - 1.0) * log_g - log_1m
    log_b = np.log(gam) + gam * log_1m - log1mexp(gam * log_1m)
    return np.exp(log_a + log_b)


def max_reversed_hazard_independent(m: ExtremeModel, n: int, x):
    xs, scalar = as_array(x)
    return unwrap(max_reversed_hazard_terms(m, n, xs).sum(axis=0), scalar)


def extreme_quantile(m: ExtremeModel, p):
    return m.quantile(p)
