import json

import jsonschema
import pytest

from hyperterrain.schemas import SCHEMA_NAMES, load_schema

from conftest import run_cli, run_json


def valid(payload, name):
    jsonschema.validate(payload, load_schema(name))
    return payload


@pytest.mark.parametrize("name", SCHEMA_NAMES)
def test_schemas_are_valid(name):
    jsonschema.Draft7Validator.check_schema(load_schema(name))


def test_gen_roundtrip(tmp_path):
    code, out, _ = run_cli("gen", "--gen", "grid(3,4)")
    assert code == 0
    f = tmp_path / "g.txt"
    f.write_text(out, encoding="utf-8")
    _, a = run_json("stats", f)
    _, b = run_json("stats", "--gen", "grid(3,4)")
    assert {k: v for k, v in a.items() if k != "source"} == \
        {k: v for k, v in b.items() if k != "source"}
    _, payload = run_json("gen", "--gen", "fig3(1,1)")
    valid(payload, "gen")
    assert payload["names"]["x"] == 0


def test_stats_examples():
    _, s = run_json("stats", "--gen", "path(5)")
    valid(s, "stats")
    assert (s["rad"], s["diam"], s["delta2"]) == (2, 4, 0)
    _, s = run_json("stats", "--gen", "fig3(2,1)")
    assert (s["rad"], s["diam"]) == (5, 8)
    assert s["delta2"] == 4 and s["delta2_status"] == "ok"
    _, s = run_json("stats", "--gen", "path(30)", "--delta-cap", "10")
    valid(s, "stats")
    assert s["delta2"] is None and s["delta2_status"] == "skipped"


@pytest.mark.parametrize("mode", ["exact", "pair", "tree", "tree-fast"])
def test_ecc_on_tree_has_zero_error(mode):
    _, e = run_json("ecc", "--gen", "random_tree(20,seed=3)", "--mode", mode, "--with-exact")
    valid(e, "ecc")
    assert e["exact"]["status"] == "ok"
    assert {r["error"] for r in e["rows"]} == {0}


def test_ecc_errors_within_bounds():
    spec = "gnm_connected(40,80,seed=2)"
    _, s = run_json("stats", "--gen", spec)
    t = s["delta2"]
    _, e = run_json("ecc", "--gen", spec, "--mode", "pair", "--with-exact", "--delta2", t)
    assert all(0 <= r["error"] <= t for r in e["rows"])
    assert e["guarantee"] == {"side": "left", "additive": "2d", "bound": t}
    _, e = run_json("ecc", "--gen", spec, "--mode", "tree-fast", "--k", 1, "--with-exact")
    assert all(0 <= r["error"] <= 3 * t for r in e["rows"])


def test_ecc_tsv_and_labels(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("10 20\n20 30\n", encoding="utf-8")
    code, out, _ = run_cli("ecc", f, "--mode", "exact", "--format", "tsv", "--start", 20)
    assert code == 0
    assert out.splitlines() == ["vertex\testimate", "10\t2", "20\t1", "30\t2"]


def test_ecc_exact_skipped_above_cap():
    code, e = run_json("ecc", "--gen", "path(50)", "--with-exact", "--apsp-cap", "10")
    assert code == 0
    valid(e, "ecc")
    assert e["exact"]["status"] == "skipped" and "cap" in e["exact"]["reason"]
    assert "exact" not in e["rows"][0]


def test_terrain_examples():
    _, p = run_json("terrain", "--gen", "path(5)", "--from", 0, "--to", 4)
    valid(p, "terrain")
    assert p["strip"] == "\\\\//" and p["classes"] == list("DDUU")
    _, p = run_json("terrain", "--gen", "cycle(6)", "--from", 0, "--to", 3)
    assert p["strip"] == "---"
    _, p = run_json("terrain", "--gen", "fig3(2,1)", "--from", "x*", "--to", "u4")
    valid(p, "terrain")
    i = p["classes"].index("U")
    assert p["classes"].count("U") == 1
    assert p["names"][i:i + 2] == ["x", "u1"]
    ids = p["identities"]
    assert ids["lhs1"] == ids["rhs1"] and ids["lhs2"] == ids["rhs2"]


def test_convexity_modes():
    _, c = run_json("convexity", "--gen", "path(5)", "--set", "0,4")
    valid(c, "convexity")
    assert c["report"]["beta_min"] == 2 and c["report"]["eps_min"] == 2
    _, c = run_json("convexity", "--gen", "cycle(6)", "--disk", 0, 1)
    valid(c, "convexity")
    assert c["report"]["size"] == 3
    _, c = run_json("convexity", "--gen", "grid(4,5)", "--disks", 20)
    valid(c, "convexity")
    assert c["ok"] and len(c["disks"]) == 20
    code, _, err = run_cli("convexity", "--gen", "path(30)", "--delta-cap", "5")
    assert code == 2 and "delta2" in err
    code, _, _ = run_cli("convexity", "--gen", "path(30)", "--delta-cap", "5", "--delta2", 0)
    assert code == 0


def test_verify_single_and_exit_codes():
    code, r = run_json("verify", "--gen", "fig3(1,1)", "--paths", 50)
    assert code == 0
    valid(r, "verify")
    assert r["status"] == "pass" and r["summary"]["graphs"] == 1
    code, r = run_json("verify", "--gen", "complete(4)", "--paths", 10)
    assert code == 1 and r["status"] == "fail"
    valid(r, "verify")


def test_verify_tree_corpus():
    code, r = run_json("verify", "--corpus", "--families", "random_tree", "--sizes", "20",
                       "--seeds", "1,2,3", "--no-fig3", "--paths", 20, "--threads", 1)
    assert code == 0 and r["summary"]["graphs"] == 3


def test_threads_env_var(monkeypatch):
    monkeypatch.setenv("HYPERTERRAIN_THREADS", "zero")
    code, _, err = run_cli("verify", "--gen", "path(4)")
    assert code == 2 and "HYPERTERRAIN_THREADS" in err


@pytest.mark.parametrize("text", ["1 2\n3 4\n", "1 1\n", "x y\n", ""])
def test_bad_input_files_exit_2(tmp_path, text):
    f = tmp_path / "bad.txt"
    f.write_text(text, encoding="utf-8")
    for cmd in ("stats", "verify"):
        code, out, err = run_cli(cmd, f)
        assert code == 2 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("args", [
    ("stats",),
    ("stats", "--gen", "path(3)", "somefile"),
    ("stats", "/nonexistent/file"),
    ("stats", "--gen", "nonsense(3)"),
    ("ecc", "--gen", "path(3)", "--mode", "bogus"),
    ("ecc", "--gen", "path(3)", "--k", "2"),
    ("ecc", "--gen", "path(3)", "--start", "7"),
    ("terrain", "--gen", "path(3)", "--from", "0", "--to", "9"),
    ("stats", "--gen", "path(3)", "--apsp-cap", "0"),
    ("verify", "--gen", "path(3)", "--checks", "XYZ-1"),
])
def test_usage_errors_exit_2(args):
    code, out, err = run_cli(*args)
    assert code == 2, err


def test_stdin_input():
    code, out, _ = run_cli("stats", "-", stdin="0 1\n1 2\n")
    assert code == 0 and "rad\t1" in out
