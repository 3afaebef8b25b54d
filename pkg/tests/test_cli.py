"""Command line behavior: output formats, exit codes, overrides."""
import csv
import io
import json

import pytest

from surdseq.cli import main
from surdseq.newton import newton_run


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_plain(capsys):
    code, out, _ = run(capsys, "seq", "--family", "ab", "--k", "2", "--count", "3")
    assert code == 0
    assert out.splitlines() == ["0 1 1", "1 3 2", "2 7 5"]


def test_seq_csv(capsys):
    code, out, _ = run(capsys, "seq", "--family", "uv", "--k", "2", "--h", "3",
                       "--count", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "a", "b"], ["0", "1", "0"], ["1", "1", "3"], ["2", "7", "6"]]


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "--family", "w", "--k", "2",
                       "--seed", "1,3", "--count", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "seq"
    assert doc["params"]["seed"] == [1, 3]
    assert [row["value"] for row in doc["rows"]] == ["1", "3", "17", "99"]


def test_seq_cd_and_u2(capsys):
    code, out, _ = run(capsys, "seq", "--family", "cd", "--m", "1", "--count", "4")
    assert code == 0
    assert out.splitlines() == ["0 1 1", "1 2 1", "2 5 3", "3 7 4"]
    code, out, _ = run(capsys, "seq", "--family", "u2", "--k", "3",
                       "--seed", "1,5", "--count", "3")
    assert code == 0
    assert out.splitlines() == ["0 1", "1 5", "2 19"]


def test_seq_newton_and_product(capsys):
    code, out, _ = run(capsys, "seq", "--family", "newton", "--k", "2", "--count", "4")
    assert code == 0
    assert out.splitlines()[-1] == "3 577 408"
    code, out, _ = run(capsys, "seq", "--family", "product", "--r", "3", "--count", "3")
    assert code == 0
    assert out.splitlines() == ["0 1 1", "1 3 1", "2 17 6"]


def test_seq_plain_truncates_wide_integers(capsys):
    code, out, _ = run(capsys, "seq", "--family", "newton", "--k", "2", "--count", "9")
    assert code == 0
    last = out.splitlines()[-1]
    expected = newton_run(2, 8)[8]
    assert "…(" in last and last.endswith("bits)")
    assert str(expected.a)[:60] in last


def test_seq_json_keeps_full_integers(capsys):
    code, out, _ = run(capsys, "seq", "--family", "newton", "--k", "2",
                       "--count", "9", "--format", "json")
    doc = json.loads(out)
    expected = newton_run(2, 8)[8]
    assert int(doc["rows"][8]["a"]) == expected.a


@pytest.mark.parametrize("argv,fragment", [
    (["seq", "--family", "ab", "--count", "3"], "k"),
    (["seq", "--family", "w", "--k", "2", "--count", "3"], "seed"),
    (["seq", "--family", "product", "--count", "3"], "--r"),
    (["seq", "--family", "product", "--r", "3", "--k", "2", "--count", "3"], "--r"),
    (["seq", "--family", "ab", "--k", "2", "--r", "3", "--count", "3"], "product"),
    (["seq", "--family", "ab", "--k", "2", "--count", "0"], "count"),
    (["seq", "--family", "cd", "--k", "4", "--count", "3"], "odd"),
])
def test_seq_usage_errors(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err


def test_approx_plain_record(capsys):
    code, out, _ = run(capsys, "approx", "--k", "2", "--digits", "6")
    assert code == 0
    lines = dict(line.split(" ", 1) for line in out.splitlines())
    assert lines["digits"] == "1.414213"
    assert lines["method"] == "linear"
    assert int(lines["n_used"]) > 0


def test_approx_json(capsys):
    code, out, _ = run(capsys, "approx", "--k", "2", "--h", "3", "--digits", "8",
                       "--method", "newton", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    row = doc["rows"][0]
    assert row["digits"] == "0.81649658"
    assert "/" in row["error_bound"]


def test_approx_usage_errors(capsys):
    assert run(capsys, "approx", "--k", "0", "--digits", "5")[0] == 2
    assert run(capsys, "approx", "--k", "2", "--digits", "0")[0] == 2
    assert run(capsys, "approx", "--k", "2", "--h", "3", "--digits", "5",
               "--method", "jump")[0] == 2
    assert run(capsys, "approx", "--k", "2", "--digits", "5",
               "--method", "zigzag")[0] == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities",
                       "--k-min", "2", "--k-max", "3", "--n-max", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].endswith("0 failed")
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "products",
                       "--k-min", "2", "--k-max", "2", "--n-max", "6",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all(row["result"] == "PASS" for row in doc["rows"])


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2
    code, _, err = run(capsys, "verify", "--suite", "identities",
                       "--k-min", "5", "--k-max", "3")
    assert code == 2 and "empty" in err
    assert run(capsys, "verify", "--suite", "identities", "--n-max", "0")[0] == 2


def test_bench_plain_and_csv(capsys):
    code, out, _ = run(capsys, "bench", "--k", "2", "--digits", "20")
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out, _ = run(capsys, "bench", "--k", "2", "--digits", "20",
                       "--methods", "newton,linear", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["method", "k", "digits_requested"]
    assert {row[0] for row in rows[1:]} == {"newton", "linear"}
    digits = {row[-1] for row in rows[1:]}
    assert len(digits) == 1


def test_bench_usage_errors(capsys):
    assert run(capsys, "bench", "--k", "2", "--digits", "10",
               "--methods", "walking")[0] == 2
    assert run(capsys, "bench", "--k", "2", "--digits", "10", "--methods", ",")[0] == 2


def test_oeis_pass(capsys):
    code, out, _ = run(capsys, "oeis", "--check", "A001601,A051009")
    assert code == 0
    assert out.splitlines() == ["A001601 8 PASS", "A051009 8 PASS"]


def test_oeis_detects_tampering(tmp_path, capsys):
    (tmp_path / "A001601.txt").write_text("1\n3\n17\n577\n665857\n999\n")
    code, out, _ = run(capsys, "oeis", "--check", "A001601",
                       "--data-dir", str(tmp_path))
    assert code == 1
    assert "FAIL" in out


def test_oeis_env_overrides_flag(tmp_path, capsys, monkeypatch):
    (tmp_path / "A001601.txt").write_text("1\n3\n17\n577\n665857\n999\n")
    monkeypatch.setenv("SURDSEQ_DATA_DIR", str(tmp_path))
    code, out, _ = run(capsys, "oeis", "--check", "A001601",
                       "--data-dir", "/unused/elsewhere")
    assert code == 1 and "FAIL" in out


def test_oeis_usage_errors(capsys, tmp_path):
    assert run(capsys, "oeis", "--check", "A000045")[0] == 2
    code, _, err = run(capsys, "oeis", "--check", "A001601",
                       "--data-dir", str(tmp_path / "missing"))
    assert code == 2 and "not found" in err


def test_parser_level_exits(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
    assert main([]) == 2
    capsys.readouterr()
    assert main(["unknown"]) == 2
    capsys.readouterr()
    assert main(["seq", "--family", "nosuch", "--count", "2"]) == 2
    capsys.readouterr()
    assert main(["seq", "--family", "w", "--k", "2", "--seed", "1;3",
                 "--count", "3"]) == 2
    capsys.readouterr()
