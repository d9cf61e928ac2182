"""JSON model configuration: parse fail-closed, dump canonically.

Schema (unknown keys are rejected)::

    {
      "side": "min" | "max",
      "baseline": {"name": "exponential", "params": [1.0]},
      "alphas": [...], "gammas": [...],
      "generator": {"family": "gumbel", "theta": 2.0},
      "ndist": {"support": [3, 4, 5], "probs": [0.2, 0.4, 0.4]}
             | {"point": 3}
             | {"poisson": 2.0, "truncate_mass": 1e-9},
      "recycle": false
    }
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .baseline import Baseline
from .copula import Generator
from .extremes import ExtremeModel, NDist, Side
from .kwg import ParamVector

__all__ = ["ConfigError", "parse_model", "load_model", "dump_model", "save_model", "fixture_path", "load_fixture",
           "FIXTURES"]

FIXTURES = ("ce1_A", "ce1_B", "ce2_A", "ce2_B", "ce3_A", "ce3_B", "app_kw_weibull", "app_kw_exponential")

_MODEL_KEYS = {"side", "baseline", "alphas", "gammas", "generator", "ndist", "recycle"}
_REQUIRED = _MODEL_KEYS - {"recycle"}


class ConfigError(ValueError):
    """Invalid configuration; the message starts with the offending field path."""


def _keys(obj, allowed, required, path):
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected an object")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ConfigError(f"{path}.{unknown[0]}: unknown key")
    missing = sorted(required - set(obj))
    if missing:
        raise ConfigError(f"{path}.{missing[0]}: missing")


def _numbers(v, path, integer=False):
    if not isinstance(v, list) or not v:
        raise ConfigError(f"{path}: expected a nonempty array")
    out = []
    for i, x in enumerate(v):
        ok = isinstance(x, int) if integer else isinstance(x, (int, float))
        if isinstance(x, bool) or not ok:
            raise ConfigError(f"{path}[{i}]: expected {'an integer' if integer else 'a number'}")
        out.append(int(x) if integer else float(x))
    return out


def _number(v, path):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{path}: expected a number")
    return float(v)


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _ndist(obj, path):
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected an object")
    if "poisson" in obj:
        _keys(obj, {"poisson", "truncate_mass"}, {"poisson"}, path)
        lam = _number(obj["poisson"], f"{path}.poisson")
        tm = _number(obj.get("truncate_mass", 1e-9), f"{path}.truncate_mass")
        return _wrap(path, NDist.poisson, lam, tm)
    if "point" in obj:
        _keys(obj, {"point"}, {"point"}, path)
        k = obj["point"]
        if isinstance(k, bool) or not isinstance(k, int):
            raise ConfigError(f"{path}.point: expected an integer")
        return _wrap(path, NDist.point, k)
    _keys(obj, {"support", "probs"}, {"support", "probs"}, path)
    support = _numbers(obj["support"], f"{path}.support", integer=True)
    probs = _numbers(obj["probs"], f"{path}.probs")
    return _wrap(path, NDist, tuple(support), tuple(probs))


def parse_model(obj, path: str = "model") -> ExtremeModel:
    """Build an ExtremeModel from a decoded JSON object."""
    _keys(obj, _MODEL_KEYS, _REQUIRED, path)
    side = obj["side"]
    if not isinstance(side, str) or side.upper() not in ("MIN", "MAX"):
        raise ConfigError(f"{path}.side: expected 'min' or 'max'")
    b = obj["baseline"]
    _keys(b, {"name", "params"}, {"name"}, f"{path}.baseline")
    params = _numbers(b["params"], f"{path}.baseline.params") if b.get("params") else []
    baseline = _wrap(f"{path}.baseline", Baseline, b["name"], tuple(params))
    g = obj["generator"]
    _keys(g, {"family", "theta"}, {"family"}, f"{path}.generator")
    theta = None if g.get("theta") is None else _number(g["theta"], f"{path}.generator.theta")
    generator = _wrap(f"{path}.generator", Generator, g["family"], theta)
    alphas = _numbers(obj["alphas"], f"{path}.alphas")
    gammas = _numbers(obj["gammas"], f"{path}.gammas")
    pv = _wrap(f"{path}.alphas", ParamVector, tuple(alphas), tuple(gammas))
    nd = _ndist(obj["ndist"], f"{path}.ndist")
    recycle = obj.get("recycle", False)
    if not isinstance(recycle, bool):
        raise ConfigError(f"{path}.recycle: expected true or false")
    return _wrap(path, ExtremeModel, Side(side.upper()), baseline, pv, generator, nd, recycle)


def load_model(path) -> ExtremeModel:
    p = Path(path)
    try:
        obj = json.loads(p.read_text())
    except OSError as exc:
        raise ConfigError(f"{p}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{p}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_model(obj, path=p.name)


def dump_model(m: ExtremeModel) -> str:
    return json.dumps(m.to_config(), indent=2, sort_keys=True) + "\n"


def save_model(m: ExtremeModel, path) -> None:
    Path(path).write_text(dump_model(m))


def fixture_path(name: str):
    if name not in FIXTURES:
        raise ConfigError(f"unknown fixture {name!r}; expected one of {FIXTURES}")
    return resources.files("stochord") / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> ExtremeModel:
    return parse_model(json.loads(fixture_path(name).read_text()), path=name)
