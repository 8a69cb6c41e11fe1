import json

import pytest

from spcdecl.cli import main, parse_years
from spcdecl.ingest import write_elections
from spcdecl.synthetic import synthetic_states
from tests.conftest import EXAMPLE_1, write_csv


@pytest.fixture
def example_csv(tmp_path):
    rows = [("XX", 2012, i + 1, s, None, "O", 0) for i, s in enumerate(EXAMPLE_1)]
    return str(write_csv(tmp_path / "e1.csv", rows))


@pytest.fixture
def synth_csv(tmp_path):
    recs = synthetic_states(30, seed=7, pres_noise=0.05)
    path = tmp_path / "synth.csv"
    write_elections(recs, path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_declination_example1(capsys, example_csv):
    code, out, _ = run(capsys, "declination", "--input", example_csv)
    assert code == 0
    doc = json.loads(out)
    (row,) = doc["rows"]
    assert row["dem_seats"] == 6 and row["rep_seats"] == 4
    assert row["s_declination"] == pytest.approx(10 * 5 / 12 * row["delta"])
    assert doc["meta"]["options"]["input"] == example_csv
    assert doc["meta"]["dataset"]["row_count"] == 10


def test_declination_all_sweeps(capsys, tmp_path):
    path = write_csv(tmp_path / "s.csv", [("AA", 2012, i, 0.6 + i / 100, None, "D", 0) for i in range(5)])
    code, out, _ = run(capsys, "declination", "--input", str(path))
    doc = json.loads(out)
    assert code == 0
    assert all(r["delta"] is None for r in doc["rows"])
    assert doc["meta"]["warnings"]["undefined_declination"] == 1


def test_missing_file(capsys):
    code, _, err = run(capsys, "declination", "--input", "/no/such/file.csv")
    assert code == 2 and "/no/such/file.csv" in err


def test_schema_error_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("state,year\nXX,2012\n")
    assert run(capsys, "net-seats", "--input", str(path))[0] == 2


def test_unknown_flag_rejected(example_csv):
    with pytest.raises(SystemExit) as exc:
        main(["net-seats", "--input", example_csv, "--bogus"])
    assert exc.value.code == 2


def test_net_seats_symmetric_csv(capsys, tmp_path):
    path = write_csv(tmp_path / "sym.csv", [("AA", 2012, i, s, None, "O", 0)
                                            for i, s in enumerate((0.3, 0.4, 0.6, 0.7))])
    code, out, _ = run(capsys, "net-seats", "--input", str(path), "--format", "csv")
    assert code == 0
    assert out == "year,net_seats\n2012,0\n"


def test_spc_trace_example1(capsys, example_csv):
    code, out, _ = run(capsys, "spc", "--input", example_csv, "--variant", "crack", "--beneficiary", "rep")
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert row["status"] == "OK" and row["iterations"] == 2 and row["clamped"]
    assert row["regression_intercept"] == pytest.approx(0.355)
    assert row["after"] == pytest.approx([0.45, 0.45, 0.45, 0.46, 0.45, 0.63, 0.66, 0.69, 0.72, 0.75], abs=1e-12)


def test_spc_no_success_exit_1(capsys, tmp_path):
    path = write_csv(tmp_path / "t.csv", [("AA", 2012, i, s, None, "O", 0)
                                          for i, s in enumerate((0.45, 0.45, 0.45, 0.55, 0.9))])
    code, out, _ = run(capsys, "spc", "--input", str(path), "--variant", "crack", "--beneficiary", "rep")
    assert code == 1
    assert json.loads(out)["rows"][0]["status"] == "NotEnoughRoom"


def test_sweep_and_determinism(capsys, synth_csv, tmp_path):
    outs = []
    target = tmp_path / "sweep.json"
    for _ in range(2):
        code, _, _ = run(capsys, "sweep", "--input", synth_csv, "--metric", "s-declination",
                         "--output", str(target), "--seed", "3")
        assert code == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
    doc = json.loads(outs[0])
    assert doc["meta"]["summary"]["rep"]["count_ok"] > 0
    assert {r["status"] for r in doc["rows"]} <= {"OK", "NotEnoughRoom", "ConstraintViolated"}


def test_sweep_thresholds_and_strategies(capsys, synth_csv):
    code, out, _ = run(capsys, "sweep", "--input", synth_csv, "--threshold", "0.40", "0.49",
                       "--strategy", "even", "greedy", "--format", "csv")
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert "n_jittered" in header and "strategy" in header


@pytest.mark.parametrize("link", ["identity", "fitted"])
def test_sensitivity(capsys, synth_csv, link):
    code, out, _ = run(capsys, "sensitivity", "--input", synth_csv, "--link", link,
                       "--presidential-years-only")
    assert code == 0
    summary = json.loads(out)["meta"]["summary"]
    assert summary["rep"]["median"] > 0 > summary["dem"]["median"]


def test_fit(capsys, synth_csv):
    code, out, _ = run(capsys, "fit", "--input", synth_csv, "--years", "2012")
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert row["beta1"] > 0
    assert row["reference"]["beta1"] == 37.2


def test_parse_years():
    assert parse_years("1972-1978") == {1972, 1974, 1976, 1978}
    assert parse_years("2008,2012") == {2008, 2012}
    assert parse_years(None) is None
