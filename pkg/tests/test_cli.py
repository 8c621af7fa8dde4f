import io
import json
import subprocess
import sys

import pytest

from ptperm import cli, oracle, verify


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def cache_file(tmp_path, monkeypatch):
    path = tmp_path / "counts.csv"
    monkeypatch.setenv("PTPERM_CACHE", str(path))
    return path


def test_count_examples():
    assert run("count", "--stat", "z", "--p", "2", "--q", "2", "--method", "oracle") == (0, "12\n")
    assert run("count", "--stat", "ze", "--p", "2", "--q", "2", "--method", "formula") == (0, "10\n")
    assert run("count", "--stat", "zt-fixed", "--p", "1", "--q", "3", "--method", "oracle") == (0, "4\n")
    assert run("count", "--stat", "z", "--p", "2", "--q", "5", "--method", "backtrack") == (0, "86400\n")


def test_count_exclude_identity():
    code, text = run("count", "--stat", "zt-fixed", "--p", "2", "--q", "2", "--method", "oracle",
                     "--exclude-identity")
    assert (code, text) == (0, "7\n")


def test_count_usage_errors(capsys):
    assert run("count", "--stat", "z", "--p", "3", "--q", "4", "--method", "oracle")[0] == 2
    assert "guard" in capsys.readouterr().err
    assert run("count", "--stat", "ze", "--p", "2", "--q", "2", "--method", "backtrack")[0] == 2
    assert run("count", "--stat", "nope", "--p", "2", "--q", "2")[0] == 2
    assert run("count", "--stat", "z", "--p", "0", "--q", "2")[0] == 2
    assert run("count", "--stat", "z", "--p", "6", "--q", "1", "--method", "formula")[0] == 2


def test_guard_override():
    assert run("count", "--stat", "z", "--p", "2", "--q", "2", "--method", "oracle", "--max-n", "3")[0] == 2


def test_formats_agree():
    _, plain = run("count", "--stat", "z", "--p", "2", "--q", "3", "--format", "plain", "--no-cache")
    _, js = run("count", "--stat", "z", "--p", "2", "--q", "3", "--format", "json", "--no-cache")
    _, cs = run("count", "--stat", "z", "--p", "2", "--q", "3", "--format", "csv", "--no-cache")
    header, row = cs.strip().split("\n")
    csv_value = dict(zip(header.split(","), row.split(",")))["value"]
    assert plain.strip() == json.loads(js)["value"] == csv_value == "144"


def test_cache_roundtrip(cache_file):
    for stat, method in [("z", "formula"), ("ze", "oracle"), ("zt-perm", "oracle"), ("zt-fixed", "formula")]:
        run("count", "--stat", stat, "--p", "2", "--q", "3", "--method", method)
    run("count", "--stat", "z", "--p", "2", "--q", "30", "--method", "formula")
    records = cli.read_cache(cache_file)
    assert len(records) == 5
    for rec in records:
        again = cli.compute(rec["stat"], rec["p"], rec["q"], rec["method"])
        assert again.value == rec["value"]
    lines = cache_file.read_text().splitlines()
    assert all(len(line.split(",")) == 6 for line in lines)


def test_no_cache(cache_file):
    run("count", "--stat", "z", "--p", "2", "--q", "2", "--no-cache")
    assert not cache_file.exists()


def test_jobs_flag_does_not_change_output():
    a = run("count", "--stat", "ze", "--p", "2", "--q", "4", "--method", "oracle", "--jobs", "1", "--no-cache")
    b = run("count", "--stat", "ze", "--p", "2", "--q", "4", "--method", "oracle", "--jobs", "2", "--no-cache")
    assert a == b == (0, "424\n")


def test_table_2x2():
    code, text = run("table", "--n", "4", "--p", "2")
    assert code == 0
    rows = text.splitlines()
    assert len(rows) == 24
    cells = {r.split()[0]: r.split()[1] for r in rows}
    assert cells["2314"] == "4114"
    assert cells["3142"] == "2323"
    assert cells["3124"] == "2314"
    assert any(r.startswith("3124 2314  #") for r in rows)


def test_table_trivial_and_errors():
    assert run("table", "--n", "2", "--p", "2") == (0, "12 12\n21 21\n")
    assert run("table", "--n", "4", "--p", "3")[0] == 2
    assert run("table", "--n", "9", "--p", "3")[0] == 2


@pytest.mark.parametrize("perm, expected", [("3142", "2323"), ("1234", "1234"), ("4321", "4321")])
def test_profile(perm, expected):
    assert run("profile", "--perm", perm, "--p", "2") == (0, expected + "\n")


def test_profile_errors():
    assert run("profile", "--perm", "3143", "--p", "2")[0] == 2
    assert run("profile", "--perm", "312", "--p", "2")[0] == 2


@pytest.mark.parametrize("stat, values", [
    ("zt-diag-half", [1, 9, 30, 70]),
    ("telephone", [1, 2, 4, 10, 26]),
    ("z2", [2, 12, 144]),
    ("zt-square", [0, 8, 36]),
    ("ze2-corrected", [2, 10, 56]),
])
def test_bfile(stat, values):
    code, text = run("bfile", "--stat", stat, "--count", str(len(values)))
    assert code == 0
    assert text == "".join(f"{k} {v}\n" for k, v in enumerate(values, start=1))


def test_bfile_out(tmp_path):
    path = tmp_path / "b.txt"
    assert run("bfile", "--stat", "z2", "--count", "2", "--out", str(path)) == (0, "")
    assert path.read_text() == "1 2\n2 12\n"


def test_bfile_unknown():
    assert run("bfile", "--stat", "fib", "--count", "3")[0] == 2


def test_verify_exit_and_report(tmp_path):
    path = tmp_path / "report.json"
    code, text = run("verify", "--max-n", "6", "--report", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["ok"] is True
    assert "ze2-printed" in text


def test_verify_fails_on_broken_anchor(monkeypatch):
    monkeypatch.setattr(verify.formulas, "Zt_closed", lambda p, q: 9)
    assert run("verify", "--max-n", "4")[0] == 1


def test_argparse_usage_exit():
    assert run("count", "--p", "2")[0] == 2
    assert run()[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ptperm", "profile", "--perm", "3142", "--p", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2323\n"
