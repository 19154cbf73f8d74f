"""
Tests for the nct command line: exit codes, outputs and configuration
"""
import json

import pytest

from src.cli import create_parser, join_option_values, main, resolve_config
from src.utils.config import Config, load_config, read_config_file
from src.utils.errors import UsageError


def run_json(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


def exit_code(capsys, *argv):
    code = main(list(argv))
    capsys.readouterr()
    return code


# -- exit codes ---------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["localzeta", "--theta", "sqrt:2"],
        ["unit", "--theta", "sqrt"],
        ["snf", "--matrix", "1,2;3"],
        ["lfunction", "--matrix", "2,1;1,1", "--s", "two"],
        ["lfunction", "--matrix", "2,1;1,1", "--s", "3", "--precision", "32"],
        ["compare", "--curve", "1", "--matrix", "2,1;1,1"],
        ["compare", "--curve=-1,0"],
        ["characters", "--modulus", "4", "--format", "yaml"],
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    assert exit_code(capsys, *argv) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["lfunction", "--theta", "sqrt:2", "--s", "3"],
        ["compare", "--curve", "0,0", "--matrix", "2,1;1,1"],
        ["unit", "--theta", "int:3"],
        ["localzeta", "--matrix", "2,1;1,1", "--prime", "4"],
        ["normalform", "--skew", "int:1,int:2;int:3"],
        ["lfunction", "--modulus", "4", "--char", "1", "--s", "1"],
        ["characters", "--modulus", "0"],
    ],
)
def test_domain_errors_exit_two(capsys, argv):
    assert exit_code(capsys, *argv) == 2


def test_error_message_goes_to_stderr(capsys):
    assert main(["unit", "--theta", "int:3"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("error:")


# -- outputs ------------------------------------------------------------


def test_localzeta_torus(capsys):
    data = run_json(capsys, "localzeta", "--theta", "sqrt:2", "--prime", "2")
    assert data["denominator"] == [1, -6, 2]
    assert data["matrix"] == "6,2;-1,0"


def test_localzeta_character(capsys):
    data = run_json(capsys, "localzeta", "--modulus", "4", "--char", "1", "--prime", "3")
    assert data == {"p": 3, "modulus": 4, "char": 1, "chi_p": "-1", "denominator": [1, 1]}


def test_lfunction_dirichlet(capsys):
    data = run_json(capsys, "lfunction", "--modulus", "4", "--char", "1", "--s", "2", "--prime-bound", "1000")
    assert data["value"].startswith("0.915")
    assert len(data["value"].replace(".", "").lstrip("0")) == 20
    assert data["prime_bound"] == 1000
    assert data["precision"] == 128


def test_lfunction_complex_point(capsys):
    data = run_json(capsys, "lfunction", "--modulus", "5", "--char", "1", "--s", "2+1j", "--prime-bound", "100")
    assert data["value"].endswith("j")


def test_lfunction_torus_excluded(capsys):
    data = run_json(capsys, "lfunction", "--matrix", "2,1;1,1", "--s", "4", "--prime-bound", "30")
    assert data["excluded"] == [5]
    assert data["factors"] == 9


def test_compare_rows(capsys):
    rows = run_json(capsys, "compare", "--curve=-1,0", "--matrix", "1,1;0,1", "--prime-bound", "20")
    assert [r["p"] for r in rows] == [5, 7, 11, 13, 17, 19]
    assert rows[0] == {
        "p": 5, "ap": -2, "trAp": 2, "curve_factor": [1, 2, 5], "torus_factor": [1, -2, 5],
        "excluded": True, "equal": False,
    }
    assert run_json(capsys, "compare", "--curve=-1,0", "--matrix", "1,1;0,1", "--prime-bound", "2") == []


def test_negative_values_follow_their_option(capsys):
    rows = run_json(capsys, "compare", "--curve", "-1,0", "--matrix", "1,1;2,1", "--prime-bound", "20")
    assert [(r["p"], r["trAp"]) for r in rows][:2] == [(5, 82), (7, 478)]
    assert run_json(capsys, "snf", "--matrix", "-2,4;6,8")["diagonal"] == [2, 20]


def test_join_option_values():
    assert join_option_values(["compare", "--curve", "-1,0", "--theta", "sqrt:2"]) == [
        "compare", "--curve=-1,0", "--theta", "sqrt:2",
    ]
    assert join_option_values(["compare", "--curve", "--theta", "sqrt:2"]) == [
        "compare", "--curve", "--theta", "sqrt:2",
    ]
    assert join_option_values(["localzeta", "--prime", "-3"]) == ["localzeta", "--prime", "-3"]


def test_compare_csv(capsys):
    assert main(["compare", "--curve=0,1", "--theta", "sqrt:3", "--prime-bound", "13", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "p,ap,trAp,curve_factor,torus_factor,excluded,equal"
    assert [line.split(",")[0] for line in lines[1:]] == ["5", "7", "11", "13"]


def test_snf(capsys):
    data = run_json(capsys, "snf", "--matrix", "2,4;6,8")
    assert data["S"] == "2,0;0,4"
    assert data["diagonal"] == [2, 4]


def test_unit(capsys):
    data = run_json(capsys, "unit", "--theta", "sqrt:2")
    assert data["matrix"] == "1,1;2,1"
    assert data["norm"] == -1
    assert data["power"] == 1


def test_unit_text_format(capsys):
    assert main(["unit", "--theta", "sqrt:3", "--format", "text"]) == 0
    assert capsys.readouterr().out.splitlines()[0].startswith("theta: ")


def test_unit_index(capsys):
    assert run_json(capsys, "unit-index", "--theta", "sqrt:2", "--n", "5")["g"] == 3
    table = run_json(capsys, "unit-index", "--theta", "sqrt:2", "--n", "10", "--table")
    assert [entry["g"] for entry in table] == [1, 2, 4, 4, 3, 4, 6, 8, 12, 6]


def test_group_checks(capsys):
    split = "0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0"
    assert run_json(capsys, "so-check", "--matrix", split)["so_nn"] is True
    data = run_json(capsys, "symplectic-check", "--matrix", split)
    assert data["symplectic"] is False
    assert "lift" not in data
    data = run_json(capsys, "symplectic-check", "--matrix", "2,1;1,1")
    assert data["symplectic"] is True
    assert data["lift_so_nn"] is True


def test_cf(capsys):
    data = run_json(capsys, "cf", "--theta", "sqrt:2")
    assert data["period"] == [2]
    assert data["convergents"][:3] == ["1/1", "3/2", "7/5"]


def test_characters(capsys):
    data = run_json(capsys, "characters", "--modulus", "5")
    assert len(data) == 4
    assert data[1]["values"]["2"] == "i"


def test_normalform(capsys):
    data = run_json(capsys, "normalform", "--skew", "int:1,int:2,int:3;int:4,int:5;int:6")
    assert len(data["thetas"]) == 2
    assert float(data["thetas"][0]) > float(data["thetas"][1]) > 0


def test_out_file(tmp_path, capsys):
    out = tmp_path / "snf.json"
    assert main(["snf", "--matrix", "2,4;6,8", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["S"] == "2,0;0,4"


def test_out_file_unwritable(tmp_path, capsys):
    out = tmp_path / "missing" / "snf.json"
    assert exit_code(capsys, "snf", "--matrix", "2,4;6,8", "--out", str(out)) == 1


def test_threads_give_identical_bytes(capsys):
    outputs = []
    for threads in ("1", "8"):
        assert main(["lfunction", "--matrix", "2,1;1,1", "--s", "3", "--prime-bound", "400", "--threads", threads]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    outputs = []
    for threads in ("1", "8"):
        assert main(["compare", "--curve=0,1", "--matrix", "2,1;1,1", "--prime-bound", "300", "--threads", threads]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


# -- configuration ------------------------------------------------------


def test_global_flags_before_or_after_subcommand():
    parser = create_parser()
    before = parser.parse_args(["--precision", "96", "snf", "--matrix", "1"])
    after = parser.parse_args(["snf", "--matrix", "1", "--precision", "96"])
    assert before.precision == after.precision == 96
    assert not hasattr(parser.parse_args(["snf", "--matrix", "1"]), "precision")


def test_config_precedence(tmp_path, monkeypatch):
    monkeypatch.setenv("NCT_PRECISION", "96")
    monkeypatch.setenv("NCT_PRIME_BOUND", "70")
    parser = create_parser()
    cfg = resolve_config(parser.parse_args(["snf", "--matrix", "1"]))
    assert (cfg.precision, cfg.prime_bound) == (96, 70)

    path = tmp_path / "nct.conf"
    path.write_text("# test\nprecision = 192\nprime_bound=50\n\ncm_curves=-35,98,-7; 0,1,-3\n", encoding="utf-8")
    cfg = resolve_config(parser.parse_args(["snf", "--matrix", "1", "--config", str(path)]))
    assert (cfg.precision, cfg.prime_bound) == (192, 50)
    assert cfg.cm_curves == ["-35,98,-7", "0,1,-3"]

    cfg = resolve_config(parser.parse_args(["--prime-bound", "30", "snf", "--matrix", "1", "--config", str(path)]))
    assert (cfg.precision, cfg.prime_bound) == (192, 30)


def test_config_file_flows_into_output(tmp_path, capsys):
    path = tmp_path / "nct.conf"
    path.write_text("precision=160\nprime_bound=40\n", encoding="utf-8")
    data = run_json(capsys, "lfunction", "--modulus", "4", "--char", "1", "--s", "2", "--config", str(path))
    assert (data["precision"], data["prime_bound"]) == (160, 40)


def test_config_file_errors(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text("colour=blue\n", encoding="utf-8")
    with pytest.raises(UsageError):
        read_config_file(path)
    path.write_text("precision\n", encoding="utf-8")
    with pytest.raises(UsageError):
        read_config_file(path)
    path.write_text("threads=many\n", encoding="utf-8")
    with pytest.raises(UsageError):
        load_config(path)
    path.write_text("threads=0\n", encoding="utf-8")
    with pytest.raises(UsageError):
        load_config(path)


def test_config_validation(monkeypatch):
    with pytest.raises(ValueError):
        Config(precision=32)
    with pytest.raises(ValueError):
        Config(output_format="xml")
    monkeypatch.setenv("NCT_THREADS", "lots")
    with pytest.raises(UsageError):
        Config()


if __name__ == "__main__":
    pytest.main([__file__])
