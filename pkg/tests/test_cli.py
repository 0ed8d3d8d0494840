import io
import json

import pytest

from limitcone.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, json.loads(buf.getvalue())


def test_group():
    code, doc = call("group", "hecke:5")
    assert code == 0 and doc["status"] == "ok"
    assert doc["valid"] and doc["r"] == 2 and doc["degree"] == 2
    assert doc["field"]["minpoly"] == ["-1", "-1", "1"]


def test_group_from_spec_file(tmp_path):
    _, doc = call("group", "hecke:5")
    path = tmp_path / "g.json"
    path.write_text(json.dumps({k: doc[k] for k in ("field", "generators", "embeddings", "label")}))
    code, again = call("group", "--spec", str(path))
    assert code == 0 and again["trusted"] is False and again["label"] == "hecke-5"


def test_enumerate():
    code, doc = call("enumerate", "hecke:5", "--depth", "5", "--seed", "3")
    assert code == 0 and doc["counts_per_length"][:2] == [1, 3]
    assert doc["dedup_clashes"] == 0 and doc["status"] == "complete"
    code, doc = call("enumerate", "hecke:5", "--depth", "8", "--cap", "20")
    assert doc["status"] == "CapExceeded" and doc["elements"] == 20


def test_cone_writes_artifacts(tmp_path):
    code, doc = call("cone", "hecke:5", "--depth", "6", "--out", str(tmp_path))
    assert code == 0 and doc["halfspace"]
    assert {p.name for p in tmp_path.iterdir()} == {"directions.csv", "ratios.svg", "cone.json"}


def test_furstenberg_and_zariski(tmp_path):
    code, doc = call("furstenberg", "pslz-diag:x^2-5", "--depth", "6", "--out", str(tmp_path))
    assert code == 0 and doc["statistic"] >= 0.5
    assert (tmp_path / "torus.csv").exists() and (tmp_path / "torus.svg").exists()
    code, doc = call("zariski", "pslz-diag:x^2-5", "--depth", "6")
    assert doc["verdict"] == "NotDense" and doc["proof"]
    code, doc = call("zariski", "hecke:5", "--depth", "4")
    assert doc["verdict"] == "Dense"


def test_parabolic_family(tmp_path):
    code, doc = call("parabolic-family", "--n", "1,1000", "--out", str(tmp_path))
    assert code == 0 and [r["n"] for r in doc["rows"]] == [1, 1000]
    assert doc["rows"][0]["ratio"][0] == pytest.approx(0.36591, abs=1e-5)
    assert (tmp_path / "parabolic_family.csv").exists()
    code, doc = call("parabolic-family", "--tr-u", "1,1", "--tr-v", "1,1", "--n", "1,2,3,4")
    assert [s["n"] for s in doc["skipped"]] == [1, 2, 3]


def test_schottky_and_not_found():
    code, doc = call("schottky", "hecke:5")
    assert code == 0 and doc["status"] == "certified"
    assert doc["certificate"]["n"] >= 1
    code, doc = call("schottky", "hecke:5", "--max-power", "1")
    if doc["status"] != "certified":
        assert code == 0 and doc["status"] == "NotFound"


def test_torus_orbit(tmp_path):
    code, doc = call("torus-orbit", "--alpha", "0.35604", "--beta", "0.43878", "-N", "1000", "--out", str(tmp_path))
    assert code == 0 and doc["checkpoints"][-1]["N"] == 1000
    assert (tmp_path / "torus_orbit.csv").read_text().startswith("N,discrepancy\n")


@pytest.mark.parametrize(
    "argv, code, error",
    [
        (["cone"], 2, "BadSpec"),
        (["cone", "nonsense:1"], 2, "BadSpec"),
        (["cone", "hecke:5", "--depth", "-1"], 2, "BadFlag"),
        (["bogus"], 2, "BadFlag"),
        ([], 2, "BadFlag"),
        (["cone", "hecke:3", "--depth", "2"], 1, "DegreeOne"),
        (["torus-orbit", "--alpha", "0.1"], 2, "BadFlag"),
    ],
)
def test_errors_are_json(argv, code, error):
    got, doc = call(*argv)
    assert got == code and doc["status"] == "error" and doc["error"] == error


def test_io_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, doc = call("zariski", "hecke:5", "--depth", "2", "--out", str(blocker / "sub"))
    assert code == 3 and doc["error"] == "IoError"


def _artifacts(path):
    return {p.name: p.read_bytes() for p in sorted(path.iterdir())}


@pytest.mark.parametrize("command", ["cone", "furstenberg"])
def test_artifacts_byte_identical(tmp_path, monkeypatch, command):
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    call(command, "hecke:5", "--depth", "6", "--out", str(a), "--threads", "1")
    call(command, "hecke:5", "--depth", "6", "--out", str(b), "--threads", "1")
    monkeypatch.setenv("LIMITCONE_THREADS", "2")
    call(command, "hecke:5", "--depth", "6", "--out", str(c))
    assert _artifacts(a) == _artifacts(b) == _artifacts(c)
