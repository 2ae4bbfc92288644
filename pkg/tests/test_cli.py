import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from lipfree.cli import run
from lipfree.metric_space import line_space


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    space = tmp_path / "line.json"
    space.write_text(json.dumps(line_space([0, 1, 2, 3]).to_json()))
    elem = tmp_path / "m.json"
    elem.write_text(json.dumps({"weights": {"2": "1", "3": "1", "1": "-2"}}))
    mol = tmp_path / "mol.json"
    mol.write_text(json.dumps({"weights": {"2": "1", "1": "-1"}}))
    return tmp_path, str(space), str(elem), str(mol)


def test_norm(files):
    _, space, elem, _ = files
    code, out, _ = invoke("norm", space, elem)
    assert code == 0
    assert json.loads(out)["value"] == "3"


def test_norm_table(files):
    _, space, elem, _ = files
    code, out, _ = invoke("norm", space, elem, "--format", "table")
    assert code == 0 and out.splitlines()[0].split() == ["value", "3"]


def test_represent(files):
    _, space, elem, _ = files
    code, out, _ = invoke("represent", space, elem)
    assert json.loads(out) == {"mass": {"2->1": "1", "3->1": "2"}}


def test_extreme_pair(files):
    _, space, _, _ = files
    code, out, _ = invoke("extreme", space, "--pair", "2", "0")
    cert = json.loads(out)
    assert code == 0
    assert cert["verdict"] == "NotExtreme" and cert["violating_point"] == "1"


def test_extreme_all_and_enumerate(files):
    _, space, _, _ = files
    code, out, _ = invoke("extreme", space, "--all")
    certs = json.loads(out)["certificates"]
    assert len(certs) == 6
    extreme = [c["pair"] for c in certs if c["verdict"] == "Extreme"]
    code, out, _ = invoke("enumerate", space)
    assert json.loads(out)["extreme_pairs"] == extreme == [["0", "1"], ["1", "2"], ["2", "3"]]


def test_localize_and_oracle(files):
    _, space, _, mol = files
    code, out, _ = invoke("localize", space, mol)
    assert json.loads(out)["verdict"] == "Extreme"
    code, out, _ = invoke("oracle", space, mol)
    assert json.loads(out) == {"extreme": True}


def test_localize_not_unit_norm(files):
    _, space, elem, _ = files
    code, out, err = invoke("localize", space, elem)
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "NotUnitNorm"


def test_domain_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"points": ["0", "1", "2"], "dist": [["0", "1", "5"], ["1", "0", "1"], ["5", "1", "0"]]}))
    code, _, err = invoke("validate", str(bad))
    payload = json.loads(err)
    assert code == 1
    assert payload["error"] == "TriangleViolation"
    assert payload["details"] == {"i": 0, "j": 1, "k": 2}


def test_unknown_label_is_domain_error(files):
    _, space, _, _ = files
    code, _, err = invoke("extreme", space, "--pair", "2", "9")
    assert code == 1 and json.loads(err)["error"] == "UnknownPoint"


def test_io_and_parse_errors(tmp_path):
    code, _, err = invoke("validate", str(tmp_path / "missing.json"))
    assert code == 2 and json.loads(err)["error"] == "InputError"
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert invoke("validate", str(junk))[0] == 2
    junk.write_text(json.dumps({"points": ["a", "b"], "dist": [[0, 0.5], [0.5, 0]]}))
    assert invoke("validate", str(junk))[0] == 2
    assert invoke("frobnicate")[0] == 2


def test_generate_round_trip(tmp_path):
    for argv in (["--chain", "4"], ["--random", "6", "--seed", "3"], ["--random", "5", "--seed", "1", "--scale", "2/3"]):
        target = tmp_path / "g.json"
        assert invoke("generate", *argv, "-o", str(target))[0] == 0
        code, out, _ = invoke("validate", str(target))
        assert code == 0 and json.loads(out)["valid"] is True


def test_deterministic_output(files):
    _, space, elem, _ = files
    assert invoke("norm", space, elem)[1] == invoke("norm", space, elem)[1]
    assert invoke("generate", "--random", "7", "--seed", "9")[1] == invoke("generate", "--random", "7", "--seed", "9")[1]


def test_represent_then_oracle_pipeline(tmp_path):
    # a represented molecule, fed back through the oracle, agrees with the criterion
    target = tmp_path / "s.json"
    invoke("generate", "--random", "5", "--seed", "12", "-o", str(target))
    space = json.loads(target.read_text())
    _, out, _ = invoke("extreme", str(target), "--all")
    for cert in json.loads(out)["certificates"]:
        p, q = cert["pair"]
        elem = tmp_path / "e.json"
        d = space["dist"][space["points"].index(p)][space["points"].index(q)]
        w = 1 / Fraction(d)
        elem.write_text(json.dumps({"weights": {p: str(w), q: str(-w)}}))
        _, rep, _ = invoke("represent", str(target), str(elem))
        _, orc, _ = invoke("oracle", str(target), str(elem))
        assert json.loads(orc)["extreme"] == (cert["verdict"] == "Extreme")
        if cert["verdict"] == "Extreme":
            assert json.loads(rep) == {"mass": {f"{p}->{q}": "1"}}


def test_module_entry_point(files):
    _, space, elem, _ = files
    proc = subprocess.run(
        [sys.executable, "-m", "lipfree", "norm", space, elem], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == "3"
