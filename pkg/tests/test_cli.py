import pytest

from suffixlab import cli
from suffixlab.counting import CountTable
from suffixlab.experiments import ExpectationRow, GrowthCountRow, SizeRow, rows_from_csv


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tree_stats_line(capsys):
    code, out, _ = run_cli(["tree", "aabccb"], capsys)
    assert code == 0
    assert out == "n=6 sigma=3 nodes=25 internal=19 leaves=6 growth=5\n"


def test_tree_compact_dot(capsys):
    code, out, _ = run_cli(["tree", "aabccb", "--compact", "--dot"], capsys)
    assert code == 0
    assert out.startswith("digraph suffixtree {")
    assert 'label="abccb$"' in out


def test_tree_dot_is_deterministic(capsys):
    _, first, _ = run_cli(["tree", "abcabc", "--dot"], capsys)
    _, second, _ = run_cli(["tree", "abcabc", "--dot"], capsys)
    assert first == second


def test_growth_command(capsys):
    code, out, _ = run_cli(["growth", "abcdefabcdab"], capsys)
    assert code == 0
    assert out == "8\n"


def test_mu_table_csv(capsys):
    code, out, _ = run_cli(["mu", "--sigma", "3", "--max-j", "8"], capsys)
    assert code == 0
    table = CountTable.from_csv(out)
    assert table.entries[8] == 6480
    assert table.entries[1] == 3


def test_mu_table_json(capsys):
    code, out, _ = run_cli(["mu", "--sigma", "4", "--max-j", "5", "--format", "json"], capsys)
    assert code == 0
    table = CountTable.from_json(out)
    assert table.entries == {1: 4, 2: 12, 3: 60, 4: 240, 5: 1020}


def test_phi_table_csv(capsys):
    code, out, _ = run_cli(["phi", "--sigma", "2", "--max-k", "3"], capsys)
    assert code == 0
    table = CountTable.from_csv(out)
    assert table.entries == {1: 2, 2: 4, 3: 12}


def test_omega_table(capsys):
    code, out, _ = run_cli(["omega", "--sigma", "2", "--n", "4"], capsys)
    assert code == 0
    rows = rows_from_csv(GrowthCountRow, out)
    assert sum(row.count for row in rows) == 16
    assert all(row.holds for row in rows)


def test_omega_budget_error_exits_2(capsys):
    code, _, err = run_cli(["omega", "--sigma", "2", "--n", "30"], capsys)
    assert code == 2
    assert "budget" in err


def test_bad_input_text_exits_2(capsys):
    code, _, err = run_cli(["tree", "ab9"], capsys)
    assert code == 2
    assert "error" in err


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["frobnicate"])
    assert excinfo.value.code == 2


def test_search_command(capsys):
    code, out, _ = run_cli(["search", "aabccb", "b"], capsys)
    assert code == 0
    assert out == "3 6\n"


def test_search_no_match(capsys):
    code, out, _ = run_cli(["search", "aabccb", "ba"], capsys)
    assert code == 0
    assert out == "\n"


def test_verify_passes(capsys):
    code, out, _ = run_cli(["verify"], capsys)
    assert code == 0
    assert "verification PASSED" in out
    assert out.count("PASS") >= 10


def test_expect_growth_exhaustive(capsys):
    code, out, _ = run_cli(
        ["expect-growth", "--sigma", "2", "--n", "2", "--mode", "exhaustive"], capsys
    )
    assert code == 0
    (row,) = rows_from_csv(ExpectationRow, out)
    assert row.mean == 1.5
    assert str(row.mean_exact) == "3/2"


def test_expect_growth_seeded_output_is_byte_identical(tmp_path, capsys):
    args = ["expect-growth", "--sigma", "2", "--n", "32", "--samples", "50", "--seed", "9"]
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert cli.main(args + ["--out", str(first)]) == 0
    assert cli.main(args + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    rows = rows_from_csv(ExpectationRow, first.read_text())
    assert [row.regime for row in rows] == ["uniform", "prefix"]


def test_expect_size_table(tmp_path):
    out = tmp_path / "size.csv"
    code = cli.main(
        ["expect-size", "--sigma", "2", "--n-list", "8,16", "--samples", "20", "--seed", "4", "--out", str(out)]
    )
    assert code == 0
    rows = rows_from_csv(SizeRow, out.read_text())
    assert [row.n for row in rows] == [8, 16]


def test_expect_size_rejects_unsorted_n_list(capsys):
    code, _, err = run_cli(["expect-size", "--n-list", "16,8", "--samples", "5"], capsys)
    assert code == 2
    assert "ascending" in err


def test_expect_size_json(capsys):
    code, out, _ = run_cli(
        ["expect-size", "--sigma", "2", "--n-list", "4", "--mode", "exhaustive", "--format", "json"],
        capsys,
    )
    assert code == 0
    assert '"mean_exact"' in out
