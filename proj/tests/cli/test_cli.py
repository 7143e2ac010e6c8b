"""End-to-end checks of the command-line interface: pinned outputs,
exit-code contract, determinism, and the result cache."""

import json
import os
import subprocess

import pytest

BIN = os.environ.get("LIECOH_BIN", "./build/liecoh")


def run(*args, **kw):
    return subprocess.run([BIN, *args], capture_output=True, text=True, **kw)


def test_witness_line_bundle_json():
    r = run("hcoh", "--type", "B2", "--word", "1,2,1", "--weight-root-basis", "1,0")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["status"] == "exact"
    assert out["degrees"]["1"] == [
        {"mult": 1, "weight": [-1, 2]},
        {"mult": 1, "weight": [1, 0]},
    ]
    assert out["degrees"]["0"] == [{"mult": 1, "weight": [0, -2]}]


def test_weight_in_omega_coordinates_matches_root_basis():
    a = run("hcoh", "--type", "B2", "--word", "1,2,1", "--weight-root-basis", "1,0")
    b = run("hcoh", "--type", "B2", "--word", "1,2,1", "--weight", "2,-2")
    assert a.stdout == b.stdout


def test_demazure_empty_character():
    r = run("demazure", "--type", "A1", "--word", "1", "--weight=-1")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["character"] == []
    assert out["signed_dimension"] == 0


def test_verify_witness_suite():
    r = run("verify", "--suite", "example-4-12")
    assert r.returncode == 0
    assert "PASS" in r.stdout
    assert "FAIL" not in r.stdout


def test_input_errors_exit_one():
    assert run("roots", "--type", "H3").returncode == 1
    assert run("hcoh", "--type", "A2", "--word", "1,1", "--weight", "0,0").returncode == 1
    assert run("hcoh", "--type", "A2", "--word", "1,x", "--weight", "0,0").returncode == 1
    assert run("hcoh", "--type", "A2", "--word", "1", "--weight", "0,0,0").returncode == 1
    assert run("demazure", "--type", "A2", "--word", "1").returncode == 1  # no weight


def test_uncertified_results_exit_two():
    r = run("twisted-bsdh", "--type", "B2", "--word", "1,2,1")
    assert r.returncode == 2
    out = json.loads(r.stdout)
    assert out["aut0"] == "G"
    assert out["h1"] == {"not_determined": "H^1(G/B, H^0(F, Theta_F)) != 0"}


def test_twisted_simply_laced_certifies():
    r = run("twisted-bsdh", "--type", "A2", "--word", "1,2")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["aut0"] == "G"
    assert out["h1"]["degrees"] == {}


def test_determinism_without_cache():
    a = run("bsdh-tangent", "--type", "B2", "--word", "1,2,1")
    b = run("bsdh-tangent", "--type", "B2", "--word", "1,2,1")
    assert a.stdout == b.stdout


def test_stab_and_jset():
    r = run("stab", "--type", "B2", "--word", "1,2,1")
    assert json.loads(r.stdout)["I"] == [1]
    r = run("bsdh-tangent", "--type", "B2", "--word", "1,2,1")
    out = json.loads(r.stdout)
    assert out["j_set"] == [1]
    assert out["h0_parabolic_bound"] == {"skipped": "asserted for simply-laced types only"}
    r = run("bsdh-tangent", "--type", "A2", "--word", "1,2")
    out = json.loads(r.stdout)
    assert out["h0_parabolic_bound"]["pass"] is True


def test_bwb_closed_form():
    r = run("bwb", "--type", "B2", "--weight-root-basis", "1,0")
    out = json.loads(r.stdout)
    assert out["status"] == "exact"
    assert list(out["degrees"].keys()) == ["1"]
    assert len(out["degrees"]["1"]) == 5


def test_hcoh_mod_parabolic_preset():
    r = run("hcoh-mod", "--type", "A2", "--module", "p", "--j", "1")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["degrees"] == {}
    assert out["status"] == "exact"


def test_weyl_queries():
    r = run("weyl", "--type", "B2", "--word", "1,2,1", "--all-words")
    out = json.loads(r.stdout)
    assert out["length"] == 3
    assert out["left_descents"] == [1]
    assert out["reduced_words"] == ["1,2,1"]
    r = run("weyl", "--type", "A2", "--enumerate")
    assert json.loads(r.stdout)["order"] == 6
    r = run("weyl", "--type", "E8", "--enumerate")
    assert r.returncode == 1
    assert "696729600" in r.stderr


@pytest.fixture()
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def test_cache_roundtrip(cache_dir):
    args = ("hcoh", "--type", "B2", "--word", "1,2,1", "--weight-root-basis", "1,0",
            "--cache-dir", cache_dir)
    first = run(*args)
    assert first.returncode == 0
    entries = os.listdir(cache_dir)
    assert len(entries) == 1
    second = run(*args)
    assert second.stdout == first.stdout
    assert os.listdir(cache_dir) == entries


def test_cache_replays_exit_code(cache_dir):
    args = ("twisted-bsdh", "--type", "B2", "--word", "1,2,1", "--cache-dir", cache_dir)
    first = run(*args)
    assert first.returncode == 2
    second = run(*args)
    assert second.returncode == 2
    assert second.stdout == first.stdout


def test_cache_via_environment(cache_dir):
    env = dict(os.environ, LIECOH_CACHE_DIR=cache_dir)
    r = subprocess.run([BIN, "roots", "--type", "A2"], capture_output=True, text=True, env=env)
    assert r.returncode == 0
    assert len(os.listdir(cache_dir)) == 1


def test_corrupt_cache_entry_recomputed(cache_dir):
    args = ("roots", "--type", "A2", "--cache-dir", cache_dir)
    first = run(*args)
    (entry,) = os.listdir(cache_dir)
    with open(os.path.join(cache_dir, entry), "w") as fh:
        fh.write("{not json")
    second = run(*args)
    assert second.stdout == first.stdout
    assert "recomputing" in second.stderr
    third = run(*args)  # the overwritten entry is used again
    assert third.stdout == first.stdout
    assert third.stderr == ""


def test_table_output():
    r = run("hcoh", "--type", "B2", "--word", "1,2,1", "--weight-root-basis", "1,0",
            "--output", "table")
    assert "H^1" in r.stdout
    assert "status: exact" in r.stdout
