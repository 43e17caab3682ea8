import json
from io import StringIO

import pytest

from posetrank.cli import CliUsageError, main, parse_config, run
from posetrank.core.comparison import PairMode
from posetrank.core.ranks import OrderTag, standard_interval_rank
from posetrank.core.report_writer import write_rank_csv
from posetrank.service import Command


def _run(*argv):
    stdout, stderr = StringIO(), StringIO()
    code = run(parse_config(list(argv)), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_parse_config(data_dir):
    config = parse_config(["compare", "-i", str(data_dir / "ex9.tsv"), "--pairs", "covers", "--grouped"])
    assert config.command is Command.COMPARE
    assert config.pairs is PairMode.COVERS
    assert config.grouped
    assert config.output_format is None

    config = parse_config(["check", "-i", "x.tsv", "--ranks", "r.json", "--order", "superset", "--strict"])
    assert config.order_tag is OrderTag.SUPERSET
    assert config.strict
    assert config.ranks_path == "r.json"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["rank"],
        ["rank", "--input", "x.tsv", "--pairs", "all"],
        ["rank", "--input", "x.tsv", "--output", "dot"],
        ["compare", "--input", "x.tsv", "--grouped", "--output", "json"],
        ["check", "--input", "x.tsv"],
        ["stats", "--input", "x.tsv", "--chain-cap", "0"],
        ["enumerate", "--input", "x.tsv", "--order", "sideways"],
        ["layout", "--input", "x.tsv", "--bottom-name", ""],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(CliUsageError):
        parse_config(argv)


def test_main_reports_usage_errors(capsys):
    assert main(["rank"]) == 1
    assert "posetrank: error:" in capsys.readouterr().err


def test_main_runs(data_dir, capsys, ex9):
    assert main(["rank", "--input", str(data_dir / "ex9.tsv"), "--output", "csv"]) == 0
    assert capsys.readouterr().out == write_rank_csv(standard_interval_rank(ex9))


def test_rank_csv(data_dir, ex9):
    code, out, err = _run("rank", "--input", str(data_dir / "ex9.tsv"), "--output", "csv")
    assert code == 0
    assert out.splitlines()[3] == "C,2,3,1,2,1,4,1.5,6"
    assert out.splitlines()[1] == "⊤,1,5,0,0,0,5,0.0,9"
    assert err == ""
    assert _run("rank", "--input", str(data_dir / "ex9.tsv"), "--output", "csv")[1] == out


def test_rank_defaults_to_json_off_terminal(data_dir):
    code, out, _ = _run("rank", "--input", str(data_dir / "ex9.tsv"))
    assert code == 0
    assert json.loads(out)["meta"]["height"] == 5


def test_compare_covers(data_dir):
    code, out, _ = _run("compare", "--input", str(data_dir / "ex9.tsv"), "--pairs", "covers")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 14
    assert "⊤,B,<_S,1,3,1,3,2" in lines


def test_compare_json(data_dir):
    code, out, _ = _run("compare", "--input", str(data_dir / "ex9.tsv"), "--output", "json")
    assert code == 0
    assert len(json.loads(out)["comparisons"]) == 36


def test_layout(data_dir):
    code, out, _ = _run("layout", "--input", str(data_dir / "ex9.tsv"))
    assert code == 0
    assert '"⊤" -> "B" [label="‖·‖=[1,3] W=2"];' in out


def test_check_constant_ranks(data_dir):
    code, out, _ = _run(
        "check",
        "--input",
        str(data_dir / "n5.tsv"),
        "--ranks",
        str(data_dir / "n5_constant_ranks.json"),
        "--order",
        "weak-dual",
        "--strict",
    )
    assert code == 2
    assert out.splitlines()[0] == "24 violations of strict weak-dual rank function"


def test_check_standard_ranks(data_dir):
    code, out, _ = _run(
        "check", "--input", str(data_dir / "n5.tsv"), "--ranks", str(data_dir / "n5_standard_ranks.json"), "--strict"
    )
    assert code == 0
    assert out == "valid strict weak-dual rank function\n"


def test_check_incomplete_ranks(data_dir, tmp_path):
    ranks = tmp_path / "ranks.json"
    ranks.write_text('{"⊤": [0, 0]}', encoding="utf-8")
    code, _, err = _run("check", "--input", str(data_dir / "n5.tsv"), "--ranks", str(ranks))
    assert code == 1
    assert err.startswith("posetrank: error: {}: ".format(ranks))


def test_enumerate(data_dir):
    code, out, _ = _run("enumerate", "--input", str(data_dir / "n5.tsv"), "--order", "weak-dual")
    assert code == 0
    document = json.loads(out)
    assert document["count"] == 3
    assert sorted(a["B"] for a in document["assignments"]) == [[1, 1], [1, 2], [2, 2]]


def test_enumerate_too_large(data_dir):
    code, _, err = _run("enumerate", "--input", str(data_dir / "ex9.tsv"), "--max-enum-elements", "4")
    assert code == 3
    assert "limited to 4 elements" in err


def test_stats(data_dir):
    code, out, _ = _run("stats", "--input", str(data_dir / "ex9.tsv"), "--output", "json", "--list-chains")
    assert code == 0
    document = json.loads(out)
    assert document["chain_count"] == 6
    assert len(document["chains"]) == 6
    assert document["width_histogram"] == {"0": 5, "1": 3, "2": 1}


def test_stats_chain_cap(data_dir):
    ex9 = str(data_dir / "ex9.tsv")
    code, out, _ = _run("stats", "--input", ex9, "--chain-cap", "2")
    assert code == 0
    assert "truncated: true" in out.splitlines()
    code, _, err = _run("stats", "--input", ex9, "--chain-cap", "2", "--require-full-enumeration")
    assert code == 3
    assert "more than the cap of 2" in err


def test_cycle_exits_with_1(data_dir):
    code, out, err = _run("rank", "--input", str(data_dir / "cycle.tsv"))
    assert code == 1
    assert out == ""
    assert "cycle" in err
    assert all(name in err for name in ("a", "b", "c"))
    assert len(err.splitlines()) == 1


def test_parse_error_names_the_line(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("a\tb\nc d\n", encoding="utf-8")
    code, _, err = _run("rank", "--input", str(path))
    assert code == 1
    assert err.startswith("posetrank: error: {}:2: ".format(path))


def test_missing_file(tmp_path):
    code, _, err = _run("rank", "--input", str(tmp_path / "nope.tsv"))
    assert code == 1
    assert "nope.tsv" in err


def test_obo_input(data_dir):
    code, out, _ = _run("rank", "--input", str(data_dir / "sample.obo"), "--output", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("GO:0000001,")


def test_synthetic_bound_names(tmp_path):
    path = tmp_path / "forest.tsv"
    path.write_text("a\tc\nb\tc\n", encoding="utf-8")
    code, out, _ = _run("rank", "--input", str(path), "--output", "csv", "--bottom-name", "root")
    assert code == 0
    assert out.splitlines()[-1].startswith("root,")
    code, _, err = _run("rank", "--input", str(path), "--bottom-name", "a")
    assert code == 1
    assert "collides" in err


def test_out_file(data_dir, tmp_path):
    target = tmp_path / "ranks.csv"
    code, out, _ = _run("rank", "--input", str(data_dir / "ex9.tsv"), "--output", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith("element,up_height")


def test_out_file_in_missing_directory(data_dir, tmp_path):
    target = tmp_path / "missing" / "ranks.csv"
    code, out, err = _run("rank", "--input", str(data_dir / "ex9.tsv"), "--out", str(target))
    assert code == 1
    assert out == ""
    assert err.startswith("posetrank: error: {}: ".format(target))
    assert len(err.splitlines()) == 1


def test_rank_to_file_defaults_to_json(data_dir, tmp_path):
    target = tmp_path / "ranks.json"
    config = parse_config(["rank", "--input", str(data_dir / "ex9.tsv"), "--out", str(target)])
    assert config.resolved_output_format(StringIO()) == "json"
    assert run(config, StringIO(), StringIO()) == 0
    assert json.loads(target.read_text(encoding="utf-8"))["meta"]["height"] == 5


def test_check_ranks_not_utf8(data_dir, tmp_path):
    ranks = tmp_path / "ranks.json"
    ranks.write_bytes(b'{"\xff": [0, 0]}')
    code, _, err = _run("check", "--input", str(data_dir / "n5.tsv"), "--ranks", str(ranks))
    assert code == 1
    assert err.startswith("posetrank: error: {}: File is not valid UTF-8".format(ranks))
    assert len(err.splitlines()) == 1
