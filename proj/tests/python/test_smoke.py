import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import postlab

ROOT = pathlib.Path(__file__).resolve().parents[2]
CIRCUITS = ROOT / "circuits"
SCHEMAS = ROOT / "schemas"


def load(name):
    return postlab.parse_circuit((CIRCUITS / name).read_text())


def test_clone_of_examples():
    assert load("and_or.bc").clone == "M2"
    assert load("xor_chain.bc").clone == "L"
    assert load("majority.bc").clone == "D2"
    assert postlab.clone_of(["x & y", "x | y"]) == "M2"
    assert postlab.clone_of(["x ^ y"]) == "L0"
    assert postlab.clone_of(["x ^ y ^ z"]) == "L2"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        postlab.parse_circuit("input x1\noutput nowhere\n")


def test_decisions_agree_with_count():
    c = load("and_or.bc")
    assert postlab.sat(c)["answer"]
    assert c.count_sat() == 3
    assert postlab.unique_sat(c)["answer"] is False
    assert postlab.frozen(c, ["x2"])["answer"]
    efv = postlab.exists_frozen(c)["answer"]
    assert efv == (postlab.sat(c)["answer"] and postlab.audit(c)["answer"])


def test_classify_labels():
    c = load("and_or.bc")
    assert postlab.classify("SAT", c)["label"] == "PolynomialTime"
    mixed = load("mixed.bc")
    assert postlab.classify("SAT", mixed)["label"] == "NPComplete"


def test_self_dual_counts_half():
    c = load("majority.bc")
    assert c.count_sat() == 2 ** (c.num_variables - 1)


def test_enumeration_matches_evaluation():
    c = load("and_or.bc")
    report = postlab.enumerate(c)
    assert report["algorithm"] == "Backtrack"
    assert report["solutions"] == sorted(report["solutions"])
    expected = []
    for i in range(2 ** c.num_variables):
        bits = format(i, "0{}b".format(c.num_variables))
        if c.evaluate([int(b) for b in bits]):
            expected.append(bits)
    assert report["solutions"] == expected


def test_gadgets_verify():
    assert postlab.taut_to_eq("x | !x").verify()
    c = load("and_or.bc")
    g = postlab.iso_restricted(c, c)
    assert set(g.circuits) == {"P1", "P2", "C1", "C2"}
    assert g.verify()
    assert len(postlab.gadget_names()) == 12


def test_lattice_dot():
    dot = postlab.lattice_dot(2)
    assert dot.startswith("digraph")
    assert "BF" in postlab.all_clones(2)


def run_cli(*args):
    binary = os.environ.get("POSTLAB_BIN", str(ROOT / "build" / "postlab"))
    out = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
    return out.returncode, json.loads(out.stdout)


def schema(name):
    return json.loads((SCHEMAS / (name + ".json")).read_text())


@pytest.mark.parametrize(
    "command,schema_name",
    [
        (["clone-of", "and_or.bc"], "clone-of"),
        (["classify", "-p", "EQ", "xor_chain.bc"], "classify"),
        (["solve", "-p", "SAT", "mixed.bc"], "solve"),
        (["solve", "-p", "ISO", "and_or.bc", "and_or.bc"], "solve"),
        (["enum", "--stats", "majority.bc"], "enum"),
        (["gadget", "unsat-to-frozen", "and_or.bc", "--check"], "gadget"),
        (["lattice", "--max-n", "2"], "lattice"),
    ],
)
def test_cli_json_matches_schema(command, schema_name):
    args = [str(CIRCUITS / a) if a.endswith(".bc") else a for a in command]
    code, doc = run_cli(*args)
    assert code == 0
    jsonschema.validate(doc, schema(schema_name))
