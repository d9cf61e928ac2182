import csv
import json

import numpy as np
import pytest

from stochord.cli import main
from stochord.config import (
    FIXTURES,
    ConfigError,
    dump_model,
    fixture_path,
    load_fixture,
    load_model,
    parse_model,
    save_model,
)

BASE = {
    "side": "min",
    "baseline": {"name": "exponential", "params": [1.0]},
    "alphas": [1.0, 2.0],
    "gammas": [1.5, 0.5],
    "generator": {"family": "clayton", "theta": 2.0},
    "ndist": {"support": [1, 2], "probs": [0.4, 0.6]},
}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_roundtrip(name, tmp_path):
    m = load_fixture(name)
    save_model(m, tmp_path / "m.json")
    again = load_model(tmp_path / "m.json")
    assert again == m
    assert again.digest() == m.digest()
    assert dump_model(again) == dump_model(m)


def test_ndist_forms():
    m = parse_model(dict(BASE, ndist={"point": 2}))
    assert m.ndist.support == (2,)
    p = parse_model(dict(BASE, ndist={"poisson": 1.5}, recycle=True))
    assert p.ndist.support[0] == 1 and p.recycle


@pytest.mark.parametrize("mutate,field", [
    (lambda d: d.update(extra=1), "model.extra"),
    (lambda d: d.pop("alphas"), "model.alphas"),
    (lambda d: d.update(side="both"), "model.side"),
    (lambda d: d["baseline"].update(name="nope"), "model.baseline"),
    (lambda d: d["generator"].update(theta="x"), "model.generator.theta"),
    (lambda d: d.update(gammas=[1.0, -1.0]), "model.alphas"),
    (lambda d: d.update(ndist={"support": [1, 2], "probs": [0.4, 0.4]}), "model.ndist"),
    (lambda d: d.update(ndist={"point": 1.5}), "model.ndist.point"),
    (lambda d: d.update(recycle="yes"), "model.recycle"),
])
def test_fail_closed(mutate, field):
    d = json.loads(json.dumps(BASE))
    mutate(d)
    with pytest.raises(ConfigError) as exc:
        parse_model(d)
    assert str(exc.value).startswith(field)


def test_missing_file_and_bad_json(tmp_path):
    with pytest.raises(ConfigError):
        load_model(tmp_path / "absent.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ConfigError):
        load_model(bad)
    with pytest.raises(ConfigError):
        fixture_path("nope")


def test_eval_writes_csv(tmp_path):
    model = write(tmp_path, "m.json", BASE)
    out = tmp_path / "c.csv"
    rc = main(["eval", "--model", model, "--what", "sf", "--xmin", "0.1", "--xmax", "3", "--points", "7",
               "--log", "--out", str(out)])
    assert rc == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["x", "sf"] and len(rows) == 8
    x = np.array([float(r[0]) for r in rows[1:]])
    assert np.allclose(x, np.geomspace(0.1, 3, 7), rtol=1e-15)
    assert main(["eval", "--model", model, "--what", "sf", "--xmin", "3", "--xmax", "1"]) == 2


def test_check_order_exit_codes(tmp_path, capsys):
    fast = write(tmp_path, "a.json", dict(BASE, gammas=[3.0, 1.0]))
    slow = write(tmp_path, "b.json", BASE)
    assert main(["check-order", "--a", fast, "--b", slow, "--order", "st"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "HOLDS"
    assert main(["check-order", "--a", slow, "--b", fast, "--order", "st"]) == 1


def test_verify_theorem(tmp_path, capsys):
    m = write(tmp_path, "m.json", dict(BASE, side="max", generator={"family": "independence"},
                                       gammas=[1.0, 1.5]))
    assert main(["verify-theorem", "--id", "t1", "--a", m, "--b", m]) == 0
    assert json.loads(capsys.readouterr().out)["overall"] in ("VALIDATED", "HYPOTHESES_UNMET")
    assert main(["verify-theorem", "--id", "T3", "--a", m, "--b", m]) == 2
    assert main(["verify-theorem", "--id", "T1"]) == 2
    assert main(["verify-theorem", "--id", "T1", "--random", "--trials", "3", "--seed", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["trials"] == 3
    with pytest.raises(SystemExit):
        main(["verify-theorem", "--id", "T42", "--random"])


def test_counterexample_and_scan(tmp_path, capsys):
    out = tmp_path / "ce1.csv"
    assert main(["counterexample", "--which", "ce1", "--out", str(out)]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["sign_change"] is True
    assert out.read_text().startswith("x,diff,model_A_value,model_B_value\n")
    assert main(["scan", "--id", "T9", "--trials", "4", "--seed", "7"]) == 1


def test_sample(tmp_path):
    model = write(tmp_path, "m.json", BASE)
    out = tmp_path / "s.csv"
    assert main(["sample", "--model", model, "--size", "100", "--seed", "3", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 101
    meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
    assert meta["seed"] == 3 and meta["size"] == 100
    frank = write(tmp_path, "f.json", dict(BASE, generator={"family": "frank", "theta": 2.0}))
    assert main(["sample", "--model", frank, "--size", "10", "--seed", "3", "--out", str(out)]) == 2


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
