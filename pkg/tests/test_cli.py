import io
import json
import subprocess
import sys

import pytest

from polymat.cli import main
from polymat.verify import THREE_PRIME_QUADRICS, ASTAB_ABOVE_DSTAB


@pytest.fixture
def files(tmp_path):
    a = tmp_path / "ex22.txt"
    a.write_text(THREE_PRIME_QUADRICS)
    b = tmp_path / "ex211.txt"
    b.write_text(ASTAB_ABOVE_DSTAB)
    return str(a), str(b)


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_ass(capsys, files):
    code, out, _ = run(capsys, ["ass", "-t", "1", files[0]])
    assert code == 0
    assert out.split() == ["(x1,x2,x3,x4)", "(x1,x2,x5,x6)", "(x3,x4,x5,x6)"]


def test_astab_dstab(capsys, files):
    assert run(capsys, ["dstab", files[1]])[1].strip() == "1"
    assert run(capsys, ["astab", files[1]])[1].strip() == "2"


def test_pipe_veronese_into_astab(capsys, monkeypatch):
    code, text, _ = run(capsys, ["veronese", "4", "2", "--caps", "1,1,1,1"])
    assert code == 0
    code, out, _ = run(capsys, ["astab"], stdin=text, monkeypatch=monkeypatch)
    assert out.strip() == "2"


def test_info_fields(capsys, files):
    code, out, _ = run(capsys, ["info", "--json", files[1]])
    data = json.loads(out)
    assert data["polymatroidal"] and not data["matroidal"]
    assert data["n"] == 4 and data["generators"] == 10 and data["ell"] == 4
    assert data["gcd"] == "1" and data["support"] == [1, 2, 3, 4]


def test_json_schemas(capsys, files):
    gamma = json.loads(run(capsys, ["gamma", "--json", files[0]])[1])
    assert set(gamma) == {"vertices", "edges", "components"}
    dec = json.loads(run(capsys, ["decompose", "--json", files[0]])[1])
    assert set(dec) == {"components", "ass"} and len(dec["ass"]) == 3
    rep = json.loads(run(capsys, ["astab", "--json", files[1]])[1])
    assert set(rep) == {"astab", "dstab", "certified", "ell", "trace"}
    loc = json.loads(run(capsys, ["localize", "--json", "--prime", "2,3,4,5,6", files[0]])[1])
    assert loc == {"n": 6, "generators": [[0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]}
    dep = json.loads(run(capsys, ["depth", "--json", "-t", "2", files[0]])[1])
    assert dep["depth"] == 0


def test_power_and_family_verbs(capsys):
    code, out, _ = run(capsys, ["asfv", "5", "3", "--omit", "3,4,5"])
    assert out.startswith("ring 5\n") and len(out.splitlines()[1].split(", ")) == 9
    code, out, _ = run(capsys, ["enumerate", "3", "2", "--all"])
    assert out.count("ring 3") == 7
    code, out, _ = run(capsys, ["enumerate", "7", "3", "--mode", "random", "--count", "3", "--json"])
    data = json.loads(out)
    assert data["seed"] == 2026 and len(data["ideals"]) == 3


def test_parse_error_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, ["info"], stdin="ring 2\nx1*x3\n", monkeypatch=monkeypatch)
    assert code == 2 and "line 2, column 4" in err


def test_budget_exit_code(capsys, monkeypatch):
    text = "ring 5\nx1*x2*x3, x4^2*x5, x1^2*x4, x2*x5^3\n"
    code, _, err = run(capsys, ["depth", "--budget", "5"], stdin=text, monkeypatch=monkeypatch)
    assert code == 3 and "budget" in err


def test_verify_regressions(capsys):
    code, out, _ = run(capsys, ["verify", "--regressions"])
    assert code == 0 and "ex-2.2" in out and "PASS" in out


def test_verify_fail_exit_code(capsys):
    code, out, _ = run(capsys, ["verify", "--only", "lem-2.4", "--json"])
    assert code == 1
    assert json.loads(out)["checks"][0]["status"] == "FAIL"


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "polymat", "dstab", files[1]], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
