"""Monte Carlo sampling of random extremes through the frailty construction.

Dependent uniforms are ``U_i = psi(E_i / V)`` with ``E_i`` standard
exponential and ``V`` a frailty whose Laplace transform is ``psi``. On
the MAX side they are cdf levels of the components, on the MIN side
survival levels (the survival copula couples the components).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from ._numerics import log1mexp
from .extremes import ExtremeModel, Side
from .kwg import kwg_quantile_from_log_sf

__all__ = [
    "RNG_ALGORITHM",
    "BLOCK",
    "SamplingError",
    "SampleBatch",
    "sample_extreme",
    "sample_frailty",
    "empirical_cdf",
    "empirical_vs_analytic",
    "SAMPLABLE",
]

RNG_ALGORITHM = "numpy.PCG64 via SeedSequence(seed).spawn(block)"
BLOCK = 1 << 15   # draws per sub-stream; fixes the result independent of workers
SAMPLABLE = ("independence", "clayton", "gumbel")


class SamplingError(ValueError):
    """Generator family without a frailty sampler."""


@dataclass
class SampleBatch:
    draws: np.ndarray
    model: ExtremeModel
    seed: int
    size: int
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.size != len(self.draws):
            raise ValueError("size must equal the number of draws")


def sample_frailty(family: str, theta, size: int, rng: np.random.Generator) -> np.ndarray:
    """Frailty V with E[exp(-t V)] = psi(t)."""
    if family == "clayton":
        return rng.gamma(1.0 / theta, theta, size)
    if family == "gumbel":
        a = 1.0 / theta   # stability index
        if a == 1.0:
            return np.ones(size)
        # Kanter's representation of the positive stable law (Chambers-Mallows-Stuck form)
        u = rng.uniform(0.0, math.pi, size)
        e = rng.standard_exponential(size)
        return np.sin(a * u) / np.sin(u) ** (1.0 / a) * (np.sin((1.0 - a) * u) / e) ** ((1.0 - a) / a)
    raise SamplingError(f"no frailty sampler for {family!r}")


def _log_uniforms(m: ExtremeModel, size: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """log U for a (size, n) block of dependent uniforms."""
    g = m.generator
    if g.family == "independence":
        return np.log(rng.uniform(size=(size, n)))
    v = sample_frailty(g.family, g.theta, size, rng)
    e = rng.standard_exponential((size, n))
    return np.asarray(g.log_psi(e / v[:, None]))


def _block(m: ExtremeModel, size: int, ss: np.random.SeedSequence) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(ss))
    n = m.ndist.max
    log_u = _log_uniforms(m, size, n, rng)
    al, ga = m._arrays(n)
    # U are cdf levels on the MAX side and survival levels on the MIN side
    log_s = log_u if m.side is Side.MIN else log1mexp(log_u)
    with np.errstate(divide="ignore", invalid="ignore"):
        comps = kwg_quantile_from_log_sf(al, ga, m.baseline, log_s)
    sizes = rng.choice(np.asarray(m.ndist.support), size=size, p=np.asarray(m.ndist.probs))
    keep = np.arange(n)[None, :] < sizes[:, None]
    if m.side is Side.MAX:
        return np.where(keep, comps, -np.inf).max(axis=1)
    return np.where(keep, comps, np.inf).min(axis=1)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("STOCHORD_THREADS", "1")))
    except ValueError:
        return 1


def sample_extreme(m: ExtremeModel, size: int, seed: int, workers: int | None = None) -> SampleBatch:
    """Draw ``size`` realisations of the random extreme of ``m``."""
    if m.generator.family not in SAMPLABLE:
        raise SamplingError(f"sampling supports {SAMPLABLE}; got {m.generator.family!r}")
    if size < 0:
        raise ValueError("size must be nonnegative")
    nblocks = -(-size // BLOCK)
    children = np.random.SeedSequence(int(seed)).spawn(nblocks)
    sizes = [min(BLOCK, size - i * BLOCK) for i in range(nblocks)]
    workers = _workers() if workers is None else max(1, workers)
    if workers > 1 and nblocks > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_block, [m] * nblocks, sizes, children))
    else:
        parts = [_block(m, k, c) for k, c in zip(sizes, children)]
    draws = np.concatenate(parts) if parts else np.empty(0)
    meta = {"rng": RNG_ALGORITHM, "block": BLOCK, "seed": int(seed), "model": m.digest()}
    return SampleBatch(draws, m, int(seed), int(size), meta)


def empirical_cdf(draws, x) -> np.ndarray:
    s = np.sort(np.asarray(draws, dtype=float))
    return np.searchsorted(s, np.asarray(x, dtype=float), side="right") / s.size


def empirical_vs_analytic(batch: SampleBatch, x_grid) -> float:
    """Largest grid gap between the empirical and the analytic cdf."""
    if batch.size == 0:
        raise ValueError("empty batch")
    x = np.atleast_1d(np.asarray(x_grid, dtype=float))
    return float(np.abs(empirical_cdf(batch.draws, x) - np.asarray(batch.model.cdf(x))).max())
