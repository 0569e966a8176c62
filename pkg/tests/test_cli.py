import subprocess
import sys

import pytest

from skewbrace.brace import trivial_brace
from skewbrace.catalog import write_brace
from skewbrace.cli import main, parse_config
from skewbrace.library import named_group

Z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]


def write_tables(path, add, mul):
    n = len(add)
    lines = [f"brace {n}"] + [" ".join(map(str, r)) for r in add] + [""] + [" ".join(map(str, r)) for r in mul]
    path.write_text("\n".join(lines) + "\n")


def test_validate_ok(tmp_path, capsys):
    f = tmp_path / "z4.brace"
    write_brace(trivial_brace(named_group("C4")), f)
    assert main(["validate", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "OK: skew brace of order 4"


def test_validate_brace_law_violation(tmp_path, capsys):
    # Z/4 transported along the transposition (1 2) is a group but not a brace over Z/4
    s = [0, 2, 1, 3]
    mul = [[s[(s[a] + s[b]) % 4] for b in range(4)] for a in range(4)]
    f = tmp_path / "bad.brace"
    write_tables(f, Z4, mul)
    assert main(["validate", str(f)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("INVALID:")
    assert "(2, 1, 1)" in out


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "none.brace")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_validate_parse_error(tmp_path, capsys):
    f = tmp_path / "garbage.brace"
    f.write_text("hello\n")
    assert main(["validate", str(f)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_analyze_trivial_Z4(tmp_path, capsys):
    f = tmp_path / "z4.brace"
    write_brace(trivial_brace(named_group("C4")), f)
    assert main(["analyze", str(f), "--tsv"]) == 0
    rows = dict(line.split("\t", 1) for line in capsys.readouterr().out.splitlines())
    assert rows["Fix"].startswith("4\t")
    assert rows["[B,B]^B"].startswith("1\t")
    assert rows["trivial"] == "1" and rows["abelian"] == "1"


def test_analyze_trivial_S3(tmp_path, capsys):
    f = tmp_path / "s3.brace"
    write_brace(trivial_brace(named_group("S3")), f)
    assert main(["analyze", str(f), "--tsv"]) == 0
    rows = dict(line.split("\t", 1) for line in capsys.readouterr().out.splitlines())
    assert rows["B*B"].startswith("1\t")
    assert rows["[B,B]^B"].startswith("3\t")


def test_analyze_one_element(tmp_path, capsys):
    f = tmp_path / "one.brace"
    write_brace(trivial_brace(named_group("C1")), f)
    assert main(["analyze", str(f)]) == 0
    out = capsys.readouterr().out
    assert "subbraces: 1" in out and "ideals: 1" in out


def test_enumerate_order2(tmp_path, capsys):
    assert main(["enumerate", "2", "--out", str(tmp_path)]) == 0
    assert "1 braces of order 2" in capsys.readouterr().out
    assert len(list((tmp_path / "order02").glob("*.brace"))) == 1


def test_enumerate_oracle(tmp_path, capsys):
    assert main(["enumerate", "4", "--oracle", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "4 braces of order 4" in out and "oracle: 4 braces" in out


def test_enumerate_gate(tmp_path, capsys):
    assert main(["enumerate", "24", "--out", str(tmp_path)]) == 2
    assert "--allow-large" in capsys.readouterr().err


def test_enumerate_additive_mismatch(tmp_path, capsys):
    assert main(["enumerate", "8", "--additive", "C4", "--out", str(tmp_path)]) == 2


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as e:
        parse_config(["verify", "x", "--bogus"])
    assert e.value.code == 2


def test_verify_empty_catalog(tmp_path, capsys):
    assert main(["verify", str(tmp_path)]) == 0
    assert capsys.readouterr().out.startswith("0 braces, 0 instances")


def test_verify_missing_catalog(tmp_path):
    assert main(["verify", str(tmp_path / "nowhere")]) == 2


def test_verify_unknown_theorem(tmp_path):
    assert main(["verify", str(tmp_path), "--theorem", "nope"]) == 2


def test_verify_dictionary_selector(tmp_path, capsys):
    main(["enumerate", "4", "--out", str(tmp_path)])
    capsys.readouterr()
    assert main(["verify", str(tmp_path), "--theorem", "dictionary", "--tsv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert {line.split("\t")[0] for line in lines if not line.startswith("#")} == {"dict-prop2"}
    assert lines[-1].startswith("#\tdict-prop2\t")


def test_verify_reports_failure(tmp_path, capsys, monkeypatch):
    from skewbrace import audit

    def broken(e, res):
        res.scanned += 1
        res.rows.append(audit.Row("ybe", e.id, "B", "forced", False))

    monkeypatch.setitem(audit.SUITES, "ybe", broken)
    main(["enumerate", "2", "--out", str(tmp_path)])
    capsys.readouterr()
    assert main(["verify", str(tmp_path), "--theorem", "ybe"]) == 1
    assert "FAIL ybe o02-" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    f = tmp_path / "c2.brace"
    write_brace(trivial_brace(named_group("C2")), f)
    out = subprocess.run([sys.executable, "-m", "skewbrace", "validate", str(f)], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "OK: skew brace of order 2"
