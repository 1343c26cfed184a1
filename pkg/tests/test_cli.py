import csv
import json
from importlib import resources

from soplr import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table1_bound_one(capsys):
    code, out, _ = run(capsys, "table1", "1")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["r", "s", "n", "m", "count"]
    assert ["1", "1", "1", "-1", "2"] in rows


def test_table1_matches_bundled_reference(capsys):
    code, out, _ = run(capsys, "table1", "3")
    assert code == 0
    got = {tuple(r[:4]): r[4] for r in csv.reader(out.splitlines()[1:])}
    path = resources.files("soplr").joinpath("data", "table_plr_sizes.csv")
    with path.open() as f:
        for row in csv.DictReader(f):
            if int(row["n"]) <= 3:
                key = (row["r"], row["s"], row["n"], row["m"])
                assert got[key] == row["count"]


def test_table_sor_cross_check(capsys):
    code, out, _ = run(capsys, "table-sor", "2", "4",
                       "--strategy", "sum-blocks", "--cross-check")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert ["2", "2", "4", "-1", "209"] in rows


def test_table_sor_json_counts_are_strings(capsys):
    code, out, _ = run(capsys, "table-sor", "2", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(isinstance(row["count"], str) for row in payload)


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "2")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["r", "s", "classes", "sigma"]
    assert ["2", "4", "1", "24"] in rows


def test_classify_r4_not_supported(capsys):
    code, _, err = run(capsys, "classify", "4")
    assert code == 3
    assert "r <= 3" in err


def test_infeasible_strategy_reports_bounds(capsys):
    code, _, err = run(capsys, "table-sor", "4", "9")
    assert code == 3
    assert "max-size" in err


def test_bad_arguments_exit_three(capsys):
    assert run(capsys, "table-sor", "2")[0] == 3
    assert run(capsys, "nonsense")[0] == 3


def test_verify_formulas_passes(capsys):
    code, out, _ = run(capsys, "verify-formulas")
    assert code == 0
    assert "FAIL" not in out
    assert "documented discrepancy" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table-sor", "2", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("r,s,n,m,count")


def test_determinism_across_worker_counts(capsys):
    _, a, _ = run(capsys, "table-sor", "3", "2", "--strategy", "sum-blocks",
                  "--workers", "1")
    _, b, _ = run(capsys, "table-sor", "3", "2", "--strategy", "sum-blocks",
                  "--workers", "2")
    assert a == b
