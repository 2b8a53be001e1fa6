import json
import subprocess
import sys

import pytest

from hwfactor.cli import main
from hwfactor.serialization import dumps, from_json, from_text, loads, to_json, to_text, CertificateFormatError
from hwfactor.dispatcher import construct_hw


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "--k", "1", "--t", "3", "--r", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    kinds = [f["kind"] for f in data["factors"]]
    assert kinds.count("hamilton") == 4 and kinds.count("c4k") == 1


def test_construct_unsupported(capsys):
    code, _, err = run(capsys, "construct", "--k", "2", "--t", "2", "--r", "3")
    assert code == 2
    assert "8k" in err


@pytest.mark.parametrize("argv", [["--k", "1", "--t", "1", "--r", "9"], ["--k", "1"], ["--hamilton-only"], ["--hamilton-only", "--n", "2"]])
def test_construct_invalid(capsys, argv):
    assert run(capsys, "construct", *argv)[0] == 3


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_construct_then_verify(capsys, tmp_path, fmt):
    path = tmp_path / f"cert.{fmt}"
    assert run(capsys, "construct", "--k", "2", "--t", "3", "--r", "7", "--format", fmt, "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "VALID" in out


def test_hamilton_only_cli(capsys, tmp_path):
    path = tmp_path / "h.json"
    assert run(capsys, "construct", "--hamilton-only", "--n", "9", "--out", str(path))[0] == 0
    assert run(capsys, "verify", str(path))[0] == 0


def test_verify_corrupted(capsys, tmp_path):
    data = json.loads(to_json(construct_hw(1, 3, 4)))
    cyc = data["factors"][0]["cycles"][0]
    cyc[1], cyc[2] = cyc[2], cyc[1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "edge_partition" in out and "FAIL" in out


def test_verify_unreadable(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 4
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "verify", str(junk))[0] == 4
    junk.write_text("factor hamilton: cycle 0 1 x\n")
    assert run(capsys, "verify", str(junk))[0] == 4


def test_round_trips():
    cert = construct_hw(2, 3, 5)
    text = to_json(cert)
    assert to_json(from_json(text)) == text
    assert from_text(to_text(cert)) == cert
    assert loads(to_text(cert)) == loads(text) == cert
    assert dumps(cert, "text") == to_text(cert)
    with pytest.raises(CertificateFormatError):
        loads("")


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--k", "1", "--t", "3")
    assert code == 0
    rows = out.strip().splitlines()[2:]
    assert len(rows) == 6 and all(row.endswith("pass") for row in rows)

    code, out, _ = run(capsys, "sweep", "--k", "2", "--t", "2")
    assert code == 0
    status = {int(row.split()[0]): row.split()[-1] for row in out.strip().splitlines()[2:]}
    assert status[3] == "unsupported_by_paper"
    assert all(v == "pass" for r, v in status.items() if r != 3)

    code, out, _ = run(capsys, "sweep", "--k", "1", "--t", "1")
    assert len(out.strip().splitlines()[2:]) == 2

    assert run(capsys, "sweep", "--k", "0", "--t", "1")[0] == 3


def test_sweep_parallel(capsys):
    serial = run(capsys, "sweep", "--k", "2", "--t", "3")
    parallel = run(capsys, "sweep", "--k", "2", "--t", "3", "--jobs", "2")
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hwfactor", "construct", "--k", "1", "--t", "2", "--r", "1", "--format", "text"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("n 8")
