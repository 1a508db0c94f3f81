import json

import pytest

from sumdiff import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_no_command_is_usage_error(capsys):
    code, out, err = run(capsys)
    assert code == 2
    assert "usage" in err.lower()


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_parse_range():
    assert cli.parse_range("5") == [5]
    assert cli.parse_range("2..6") == [2, 3, 4, 5, 6]
    assert cli.parse_range("3..9:odd") == [3, 5, 7, 9]
    assert cli.parse_range("3..9:even") == [4, 6, 8]
    for bad in ("", "5..2", "2..4:odd..", "x"):
        with pytest.raises(Exception):
            cli.parse_range(bad)


def test_table_csv_header_and_values(capsys):
    code, out, err = run(
        capsys, "table", "--family", "dic", "--n", "2", "--sizes", "2..4",
        "--format", "csv", "--workers", "1",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "family,n,order,size,mstd,mdts,balanced,total"
    assert lines[1] == "dic,2,8,2,0,0,28,28"
    assert lines[2] == "dic,2,8,3,0,24,32,56"
    assert lines[3] == "dic,2,8,4,16,24,30,70"


def test_table_zero_rows_beyond_order(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "dic", "--n", "2", "--sizes", "9..10",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[1] == "dic,2,8,9,0,0,0,0"
    assert lines[2] == "dic,2,8,10,0,0,0,0"


def test_table_expect_paper_slice(capsys):
    code, out, err = run(
        capsys, "table", "--family", "dihedral", "--n", "2..3", "--sizes", "2..5",
        "--expect", "paper", "--format", "md",
    )
    assert code == 0
    assert "AllPass" in out


def test_table_expect_paper_outside_grid(capsys):
    code, out, err = run(
        capsys, "table", "--family", "cyclic", "--n", "8", "--expect", "paper",
    )
    assert code == 2
    assert "no published values" in err


def test_table_mismatch_exits_1(capsys, monkeypatch):
    wrong = {("dic", 2, size): (1, 1) for size in (2, 3)}
    monkeypatch.setattr(cli, "published_counts", lambda: wrong)
    code, out, err = run(
        capsys, "table", "--family", "dic", "--n", "2", "--sizes", "2..3",
        "--expect", "paper", "--format", "md",
    )
    assert code == 1
    assert "Mismatch" in out
    assert "mismatch at dic n=2 size=2" in err


def test_table_rejects_tiny_sizes(capsys):
    code, _, err = run(capsys, "table", "--family", "dic", "--n", "2", "--sizes", "1..3")
    assert code == 2
    assert "sizes start at 2" in err


def test_table_rejects_huge_order(capsys):
    code, _, err = run(capsys, "table", "--family", "dic", "--n", "17")
    assert code == 2


def test_table_json_roundtrip_and_string_counts(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "dic", "--n", "3", "--sizes", "2..3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert out == cli.canonical_json(payload)
    row = payload["rows"][1]
    assert row["mstd"] == "24"
    assert row["total"] == "220"
    assert row["n"] == 3
    assert payload["status"] == "AllPass"


def test_table_workers_do_not_change_rows(capsys):
    outs = []
    for w in ("1", "2", "8"):
        code, out, _ = run(
            capsys, "table", "--family", "dic", "--n", "5", "--sizes", "6..7",
            "--format", "csv", "--workers", w,
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_workers_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("SUMDIFF_WORKERS", "3")
    code, out, _ = run(
        capsys, "table", "--family", "dic", "--n", "2", "--sizes", "2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["parameters"]["workers"] == 3


def test_workers_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("SUMDIFF_WORKERS", "3")
    code, out, _ = run(
        capsys, "table", "--family", "dic", "--n", "2", "--sizes", "2",
        "--format", "json", "--workers", "2",
    )
    assert code == 0
    assert json.loads(out)["parameters"]["workers"] == 2


def test_workers_env_invalid(capsys, monkeypatch):
    monkeypatch.setenv("SUMDIFF_WORKERS", "zero")
    code, _, err = run(capsys, "table", "--family", "dic", "--n", "2", "--sizes", "2")
    assert code == 2
    assert "SUMDIFF_WORKERS" in err


def test_verify_Tn(capsys):
    code, out, _ = run(capsys, "verify", "Tn", "--n", "3..7:odd", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "check,n,formula,count,match"
    assert lines[1] == "Tn,3,8,8,true"


def test_verify_size3_rejects_even(capsys):
    code, _, err = run(capsys, "verify", "size3", "--n", "4")
    assert code == 2
    assert "odd" in err


def test_verify_lemma22_rejects_odd(capsys):
    code, _, err = run(capsys, "verify", "lemma22", "--n", "7")
    assert code == 2


def test_verify_lemma25_rows(capsys):
    code, out, _ = run(capsys, "verify", "lemma25", "--n", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = payload["rows"]
    assert len(rows) == 7  # r = 0..6
    assert all(r["holds"] is True for r in rows)
    assert all(r["count"] == "52" for r in rows)
    assert rows[0]["bound"] == "52"


def test_verify_lemma23_modes(capsys):
    code, out, _ = run(
        capsys, "verify", "lemma23", "--n", "9", "--sample", "500", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][0]["mode"] == "sampled"
    code, out, _ = run(capsys, "verify", "lemma23", "--n", "7", "--format", "json")
    payload = json.loads(out)
    assert payload["rows"][0]["mode"] == "exhaustive"
    assert payload["rows"][0]["holds"] is True


def test_verify_default_ranges(capsys):
    code, out, _ = run(capsys, "verify", "lemma22", "--format", "json")
    assert code == 0
    assert json.loads(out)["parameters"]["n"] == [6, 8]


def test_boundary_structured(capsys):
    code, out, _ = run(capsys, "boundary", "--n", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = {r["component"]: r for r in payload["rows"]}
    assert rows["mstd"]["count"] == "448"
    assert rows["mstd"]["bound"] == "364"
    assert rows["mdts"]["relation"] == ">="
    assert all(r["ok"] for r in payload["rows"])


def test_boundary_structured_odd_exact(capsys):
    code, out, _ = run(capsys, "boundary", "--n", "7", "--format", "json")
    assert code == 0
    rows = {r["component"]: r for r in json.loads(out)["rows"]}
    assert rows["mdts"]["relation"] == "=="
    assert rows["mdts"]["count"] == "0"


def test_boundary_range_checks(capsys):
    assert run(capsys, "boundary", "--n", "5")[0] == 2
    assert run(capsys, "boundary", "--n", "11")[0] == 2
    assert run(capsys, "boundary", "--n", "8", "--mode", "exhaustive")[0] == 2


def test_classify_known_set(capsys):
    code, out, _ = run(
        capsys, "classify", "--group", "dic:3", "--set", "r1,r4,f0",
        "--format", "json",
    )
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["classification"] == "mstd"
    assert row["sum_size"] == 7
    assert row["diff_size"] == 4
    assert row["group"] == "Dic_12"
    assert row["set"] == "r1 r4 f0"


def test_classify_balanced_cases(capsys):
    code, out, _ = run(capsys, "classify", "--group", "dic:3", "--set", "r0", "--format", "json")
    assert json.loads(out)["rows"][0]["classification"] == "balanced"
    code, out, _ = run(
        capsys, "classify", "--group", "dic:3", "--set", "f0,f1,f2", "--format", "json",
    )
    assert json.loads(out)["rows"][0]["classification"] == "balanced"


def test_classify_parse_errors(capsys):
    assert run(capsys, "classify", "--group", "dic:3", "--set", "x1")[0] == 2
    assert run(capsys, "classify", "--group", "dic:3", "--set", "r12")[0] == 2
    assert run(capsys, "classify", "--group", "dic:3", "--set", "f6")[0] == 2
    assert run(capsys, "classify", "--group", "nope:3", "--set", "r0")[0] == 2
    assert run(capsys, "classify", "--group", "dic:", "--set", "r0")[0] == 2
    assert run(capsys, "classify", "--group", "cyclic:5", "--set", "f0")[0] == 2


def test_classify_cyclic_rotations_only(capsys):
    code, out, _ = run(
        capsys, "classify", "--group", "cyclic:5", "--set", "r0,r1", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["rows"][0]["classification"] == "balanced"


def test_probe_divisibility(capsys):
    code, out, _ = run(
        capsys, "probe", "--n", "2..3", "--sizes", "2..3", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["parameters"]["note"] == "finite-n observations, not limits"
    row = next(
        r for r in payload["rows"] if r["n"] == 3 and r["size"] == 3
    )
    assert row["mstd"] == "24"
    assert row["excess_sign"] == -1


def test_probe_ratios(capsys):
    code, out, _ = run(
        capsys, "probe", "--ratios", "--n", "15", "--format", "json",
    )
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["ratio"] == "4.2683"
    assert row["mstd"] == "175"
    assert row["mdts"] == "41"


def test_probe_ratios_need_odd(capsys):
    assert run(capsys, "probe", "--ratios", "--n", "4")[0] == 2


def test_md_format_shape(capsys):
    code, out, _ = run(capsys, "verify", "Tn", "--n", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("sumdiff verify: AllPass")
    assert lines[2].startswith("| check | n |")
