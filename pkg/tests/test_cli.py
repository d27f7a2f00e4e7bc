import json
import subprocess
import sys
from pathlib import Path

import pytest

from simniven.cli import SIZE_CAP_ENV, from_document, main, to_document
from simniven.construction import ConstructionParams, construct, construct_tower
from simniven.oracle import verify_certificate

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "golden,argv",
    [
        ("construct_b2_k3_m5_r3_s3.json", "construct --b 2 --k 3 --m 5 --r 3 --s 3"),
        ("construct_b2_k3_m1_r0_s7.json", "construct --b 2 --k 3 --m 1 --r 0 --s 7"),
        ("tower_b2_k3_m5_r3_s3.json", "construct --b 2 --k 3 --m 5 --r 3 --s 3 --tower"),
        ("construct_b2_k3_m5_r3_s3.txt", "construct --b 2 --k 3 --m 5 --r 3 --s 3 --format text"),
    ],
)
def test_golden_output(golden, argv, capsys):
    code, out, _ = run(argv.split(), capsys)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_worked_example_document(capsys):
    code, out, _ = run("construct --b 2 --k 3 --m 5 --r 3 --s 3".split(), capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["value_decimal"] == "16781313"
    assert doc["digit_sums"] == {"2": "3", "8": "3"}
    assert doc["renderings"]["8"] == "100010001"
    assert all(c["pass"] for c in doc["claims"])
    assert set(doc) == {
        "schema_version", "params", "s", "omega", "value_decimal", "renderings", "digit_sums", "claims"
    }
    for c in doc["claims"]:
        assert set(c) == {"name", "expected", "actual", "pass"}
        assert isinstance(c["expected"], str) and isinstance(c["actual"], str)


def test_text_mode_annotates_positions(capsys):
    _, out, _ = run("construct --b 2 --k 3 --m 5 --r 3 --s 3 --format text".split(), capsys)
    assert "1s at positions 0, 4, 8" in out
    assert "1s at positions 0, 12, 24" in out


def test_s_min(capsys):
    code, out, _ = run("construct --b 2 --k 3 --m 5 --r 3 --s-min 4".split(), capsys)
    assert code == 0
    assert json.loads(out)["s"] == "13"


@pytest.mark.parametrize(
    "argv,code",
    [
        ("construct --b 2 --k 3 --m 5 --r 3 --s 4", 3),
        ("construct --b 2 --k 3 --m 5 --r 3 --s 8", 3),
        ("construct --b 10 --k 1 --m 5 --r 0 --s 1", 2),
        ("construct --b 2 --k 0 --m 5 --r 3 --s 3", 2),
        ("construct --b 2 --k 3 --m 5 --r 5 --s 3", 2),
        ("construct --b 2 --k 3 --m 5 --r 3 --s-min 0", 2),
        ("construct --b 2 --k 3 --m 5 --r 3 --s 3 --size-cap 10", 4),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv.split(), capsys)[0] == code


def test_size_cap_env(monkeypatch, capsys):
    monkeypatch.setenv(SIZE_CAP_ENV, "10")
    assert run("construct --b 2 --k 3 --m 5 --r 3 --s 3".split(), capsys)[0] == 4
    monkeypatch.setenv(SIZE_CAP_ENV, "25")
    assert run("construct --b 2 --k 3 --m 5 --r 3 --s 3".split(), capsys)[0] == 0
    monkeypatch.setenv(SIZE_CAP_ENV, "lots")
    assert run("construct --b 2 --k 3 --m 5 --r 3 --s 3".split(), capsys)[0] == 2


def test_construct_then_verify(tmp_path, capsys):
    for argv in ("--s 3", "--s 3 --tower", "--s-min 50", "--s-min 50 --tower"):
        path = tmp_path / "doc.json"
        assert main(f"construct --b 2 --k 3 --m 5 --r 3 {argv} --output {path}".split()) == 0
        assert main(["verify", str(path)]) == 0
    assert "verdict: PASS" in capsys.readouterr().out


def test_verify_golden(capsys):
    code, out, _ = run(["verify", str(GOLDEN / "construct_b2_k3_m5_r3_s3.json")], capsys)
    assert code == 0 and "verdict: PASS" in out


def test_verify_mutated(tmp_path, capsys):
    doc = json.loads((GOLDEN / "construct_b2_k3_m5_r3_s3.json").read_text())
    doc["value_decimal"] = "16781314"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1
    assert "FAIL membership" in out


@pytest.mark.parametrize(
    "content",
    ["not json", "[]", '{"schema_version": "1"}', '{"schema_version": "9"}'],
)
def test_verify_malformed(tmp_path, content, capsys):
    path = tmp_path / "doc.json"
    path.write_text(content)
    assert run(["verify", str(path)], capsys)[0] == 2


def test_verify_malformed_integer(tmp_path, capsys):
    doc = json.loads((GOLDEN / "construct_b2_k3_m5_r3_s3.json").read_text())
    doc["value_decimal"] = 16781313
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc))
    assert run(["verify", str(path)], capsys)[0] == 2
    assert run(["verify", str(tmp_path / "missing.json")], capsys)[0] == 2


def test_verify_bare_value(capsys):
    assert run("verify --value 299593 --b 2 --k 3 --m 1 --r 0 --s 7".split(), capsys)[0] == 0
    assert run("verify --value 299593 --b 2 --k 3 --m 1 --r 0 --s 7 --tower".split(), capsys)[0] == 1
    assert run("verify --value 299593 --b 2 --k 3".split(), capsys)[0] == 2


def test_verify_requires_exactly_one_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_document_round_trip():
    for build in (construct, construct_tower):
        res = build(ConstructionParams(3, 2, 7, 2), 16)
        doc = to_document(res)
        back = from_document(json.loads(json.dumps(doc)))
        assert back == res
        assert verify_certificate(back) == verify_certificate(res)


def test_deterministic_bytes(capsys):
    outs = {run("construct --b 5 --k 2 --m 3 --r 2 --s-min 10 --tower".split(), capsys)[1] for _ in range(3)}
    assert len(outs) == 1


def test_scan_jsonl(capsys):
    code, out, _ = run("scan --b 2 --k 3 --m 5 --r 3 --limit 100".split(), capsys)
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    assert {"n": "8"} in lines
    assert lines[-1]["summary"]["count"] == str(len(lines) - 1)


def test_scan_empty_and_table(capsys):
    code, out, _ = run("scan --b 2 --k 3 --m 5 --r 3 --limit 1".split(), capsys)
    assert code == 0 and json.loads(out.splitlines()[-1])["summary"]["count"] == "0"
    code, out, _ = run("scan --b 2 --k 3 --m 5 --r 3 --limit 100 --format table".split(), capsys)
    assert "2 hits <= 100" in out


def test_scan_footnote_and_shards(capsys):
    _, one, _ = run("scan --b 2 --k 3 --m 1 --r 0 --limit 300000".split(), capsys)
    _, four, _ = run("scan --b 2 --k 3 --m 1 --r 0 --limit 300000 --shards 4".split(), capsys)
    assert one == four
    assert '{"n": "299593"}' in one.splitlines()


def test_scan_invalid(capsys):
    assert run("scan --b 10 --k 1 --m 5 --r 0 --limit 10".split(), capsys)[0] == 2
    assert run("scan --b 2 --k 1 --m 5 --r 0 --limit 0".split(), capsys)[0] == 2


@pytest.mark.parametrize("a,n,expected", [(8, 15, "4"), (8, 7, "1"), (5, 1, "1")])
def test_order(a, n, expected, capsys):
    code, out, _ = run(["order", "--a", str(a), "--n", str(n)], capsys)
    assert code == 0 and out.strip() == expected


def test_order_errors(capsys):
    assert run("order --a 10 --n 15".split(), capsys)[0] == 2
    assert run("order --a 2 --n 1000003 --cap 5".split(), capsys)[0] == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "simniven", "order", "--a", "8", "--n", "15"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
