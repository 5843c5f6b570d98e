from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from dedekind_ore.cli import FORMAT_ENV, run
from dedekind_ore.schemas import SCHEMAS

GOLDEN = Path(__file__).parent / "golden"

# (golden name, argv)
CASES = [
    ("classgroup_m5", ["classgroup", "-d", "-5"]),
    ("classgroup_m23", ["classgroup", "-d", "-23"]),
    ("units_m3", ["units", "-d", "-3"]),
    ("primes_m5", ["primes", "-d", "-5", "--norm-bound", "20"]),
    ("ideal_mul", ["ideal", "-d", "-5", "mul", "[2, 1+1*w]", "[2, 1+1*w]"]),
    ("ideal_colon", ["ideal", "-d", "0", "colon", "[3]", "[2]"]),
    ("ideal_crt", ["ideal", "-d", "0", "crt", "1", "[3]", "2", "[5]"]),
    ("ideal_class", ["ideal", "-d", "-23", "class", "<2, w>"]),
    ("closure_axb_z", ["closure", "--semigroup", "axb", "-d", "0", "--norm-bound", "4"]),
    ("closure_mult_m5", ["closure", "--semigroup", "mult", "-d", "-5", "--norm-bound", "6"]),
    ("independence_axb", ["independence", "-d", "0", "--set", "(0 mod [1]) x [1]^x",
                          "--piece", "(0 mod [2]) x [2]^x", "--piece", "(1 mod [2]) x [2]^x"]),
    ("independence_covered", ["independence", "--semigroup", "mult", "-d", "0", "--set", "[2]^x", "--piece", "[2]^x"]),
    ("group_law_axb_m5", ["group-law", "--semigroup", "axb", "-d", "-5", "--samples", "50", "--seed", "3"]),
    ("decompose_principal_m5", ["decompose", "--semigroup", "principal", "-d", "-5"]),
    ("decompose_axb_m5", ["decompose", "--semigroup", "axb", "-d", "-5"]),
    ("decompose_mult_m1", ["decompose", "--semigroup", "mult", "-d", "-1"]),
    ("witness_pi4", ["witness", "pi4", "-d", "-5", "--piece", "[2, 1+1*w]", "--pair", "0", "1+w", "0", "1"]),
    ("witness_pi5", ["witness", "pi5", "-d", "-1", "--piece", "<2>"]),
    ("verify_mult_z", ["verify-identities", "--semigroup", "mult", "-d", "0", "--p", "m:(2)", "--x", "[3]^x",
                       "--radius", "100", "--positive"]),
    ("verify_axb_z", ["verify-identities", "--semigroup", "axb", "-d", "0", "--p", "axb:(1|2)",
                      "--x", "(0 mod [3]) x [3]^x", "--radius", "20"]),
]


def invoke(argv, env_format=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name, argv", CASES, ids=[c[0] for c in CASES])
def test_golden_text(name, argv):
    code, out, _ = invoke(argv)
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name, argv", CASES, ids=[c[0] for c in CASES])
def test_golden_json_and_schema(name, argv):
    code, out, _ = invoke(argv + ["--json"])
    assert code == 0
    assert out.count("\n") == 1
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[argv[0]])
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_spec_examples():
    doc = json.loads(invoke(["classgroup", "-d", "-5", "--json"])[1])
    assert doc["h"] == 2
    doc = json.loads(invoke(["decompose", "--semigroup", "principal", "-d", "-5", "--json"])[1])
    assert doc["total"]["k0_rank"] == 2 and doc["total"]["k1_rank"] == 0
    doc = json.loads(invoke(["closure", "--semigroup", "axb", "-d", "0", "--norm-bound", "4", "--json"])[1])
    assert doc["nonempty"] == 10 and doc["count"] == 11 and "{}" in doc["sets"]


def test_env_default_format(monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, "json")
    code, out, _ = invoke(["units", "-d", "-1"])
    assert code == 0 and json.loads(out)["torsion_order"] == 4
    code, out, _ = invoke(["units", "-d", "-1", "--format", "text"])
    assert out.startswith("d=-1")
    monkeypatch.setenv(FORMAT_ENV, "yaml")
    assert invoke(["units"])[0] == 1


@pytest.mark.parametrize(
    "argv, code",
    [
        (["classgroup", "-d", "5"], 2),
        (["classgroup", "-d", "4"], 2),
        (["ideal", "-d", "-5", "show", "[2, 0+1*w]"], 2),
        (["ideal", "-d", "0", "crt", "1", "[4]", "0", "[6]"], 2),
        (["independence", "-d", "0", "--set", "(0 mod [2]) x [2]^x", "--piece", "(1 mod [2]) x [2]^x"], 2),
        (["closure", "-d", "0", "--norm-bound", "100000", "--max-iterations", "2"], 3),
        (["no-such-command"], 1),
        (["classgroup", "-d", "x"], 1),
        ([], 1),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = invoke(argv)
    assert got == code
    assert err
    if code == 1:
        assert "usage" in err


def test_error_document_in_json_mode():
    code, out, _ = invoke(["classgroup", "-d", "5", "--json"])
    assert code == 2
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS["error"])


def test_user_ktable(tmp_path):
    f = tmp_path / "k.json"
    f.write_text(json.dumps({"Z^2 x| Z/2": [6, 0]}))
    code, out, _ = invoke(["decompose", "--semigroup", "axb", "-d", "-5", "--ktable", str(f), "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["total"] == {"k0_rank": 12, "k1_rank": 0, "symbolic": [], "complete": True}
    f.write_text("[1]")
    assert invoke(["decompose", "-d", "-5", "--ktable", str(f)])[0] == 2


def test_seed_controls_only_sampling():
    a = invoke(["group-law", "-d", "0", "--samples", "20", "--seed", "1", "--json"])[1]
    b = invoke(["group-law", "-d", "0", "--samples", "20", "--seed", "1", "--json"])[1]
    c = invoke(["group-law", "-d", "0", "--samples", "20", "--seed", "2", "--json"])[1]
    assert a == b and a != c
    x = invoke(["classgroup", "-d", "-23", "--seed", "1"])[1]
    assert x == invoke(["classgroup", "-d", "-23", "--seed", "9"])[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dedekind_ore", "units", "-d", "-3", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["torsion_order"] == 6


def test_help_lists_subcommands():
    proc = subprocess.run([sys.executable, "-m", "dedekind_ore", "--help"], capture_output=True, text=True)
    for name in ("classgroup", "closure", "group-law", "verify-identities", "witness"):
        assert name in proc.stdout
