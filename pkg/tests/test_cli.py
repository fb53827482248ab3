import csv
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypagm.cli import TRACE_HEADER, emit_records, format_number, main, read_solutions


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "bogus")
    assert code == 64
    assert "invalid choice" in err


def test_missing_subcommand(capsys):
    assert run(capsys)[0] == 64


def test_missing_required_flag(capsys):
    assert run(capsys, "agm", "--a", "1")[0] == 64


def test_agm_json(capsys):
    code, out, _ = run(capsys, "agm", "--a", "1", "--b", "2")
    assert code == 0
    rec = json.loads(out)
    assert rec["integral"] == pytest.approx(math.pi / (2 * rec["M"]))


def test_domain_error_exit(capsys):
    assert run(capsys, "agm", "--a", "-1", "--b", "2")[0] == 2
    assert run(capsys, "modular", "--ratio", "1/2", "--n", "1")[0] == 0
    assert run(capsys, "periods", "--a", "3", "--g", "0")[0] == 2


def test_convergence_error_exit(capsys, tmp_path):
    # a bracket that cannot be found: a huge step overshoots the branch
    code, _, err = run(capsys, "trace", "--steps", "1", "--step", "2.5", "--out", str(tmp_path / "x.csv"))
    assert code in (0, 3)
    if code == 3:
        assert "convergence" in err


def test_richelot_seeded_reproducible(capsys):
    a = run(capsys, "--seed", "7", "richelot")[1]
    b = run(capsys, "--seed", "7", "richelot")[1]
    c = run(capsys, "--seed", "8", "richelot")[1]
    assert a == b and a != c
    assert json.loads(a)["steps"] <= 8


def test_richelot_table_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "richelot", "--roots", "0,1,2,3,4,5", "--table")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert abs(float(rows[0]["re_I_a"]) + float(rows[0]["re_I_b"]) + float(rows[0]["re_I_c"])) < 1e-12


def test_periods_and_oracle(capsys):
    code, out, _ = run(capsys, "periods", "--a", "1", "--g", "1")
    assert code == 0 and len(json.loads(out)) == 2
    code, out, _ = run(capsys, "oracle-integral", "--roots", "0,1,2,3,4,5", "--start", "0", "--end", "1")
    assert code == 0 and json.loads(out)["im_value"] == pytest.approx(0, abs=1e-14)


def test_es_check(capsys):
    code, out, _ = run(capsys, "es-check", "--a", "0", "--g", str(5 * math.sqrt(2)), "--integers", "4,1,-3,1")
    rec = json.loads(out)
    assert code == 0 and abs(rec["re_c1"]) < 1e-8 and rec["beta"] > 0


def test_verify_tetrahedral(capsys):
    code, out, _ = run(capsys, "verify-tetrahedral")
    recs = json.loads(out)
    assert code == 0 and len(recs) == 2
    assert all(r["abs_c1"] < 1e-8 and r["rel_err_abs_beta"] < 1e-8 for r in recs)


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--a", "0", "--g", "2")
    rec = json.loads(out)
    assert code == 0 and rec["chi30"] == 0


def test_trace_csv_header_and_digits(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HYPAGM_OUTPUT_DIR", str(tmp_path))
    code, _, _ = run(capsys, "trace", "--start", "tetrahedral+", "--steps", "3", "--out", "run.csv")
    assert code == 0
    text = (tmp_path / "run.csv").read_text()
    lines = text.splitlines()
    assert lines[0] == ",".join(TRACE_HEADER)
    assert len(lines) == 5
    g = lines[1].split(",")[1]
    assert g == format_number(5 * math.sqrt(2))
    # second run is byte-identical
    run(capsys, "trace", "--start", "tetrahedral+", "--steps", "3", "--out", "run2.csv")
    assert (tmp_path / "run2.csv").read_text() == text


def test_trace_plot_data(capsys):
    code, out, _ = run(capsys, "trace", "--steps", "2", "--plot-data")
    data = json.loads(out)
    assert code == 0 and len(data["a_g"]) == 3 and len(data["alpha_gamma"]) == 3


def test_elliptic_points_from_file(capsys, tmp_path):
    f = tmp_path / "sol.csv"
    f.write_text("a,g\n2.5,0.795\n2.7,0.795\n")
    code, out, _ = run(capsys, "elliptic-points", "--solutions", str(f), "--no-refine")
    rec = json.loads(out)
    assert code == 0 and isinstance(rec, dict) and 2.5 < rec["a"] < 2.7
    assert read_solutions(str(f)) == [(2.5, 0.795), (2.7, 0.795)]
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n1,2\n")
    assert run(capsys, "elliptic-points", "--solutions", str(bad))[0] == 2


def test_format_number_fifteen_digits():
    assert format_number(math.pi) == "3.14159265358979"
    assert format_number(1e-20) == "1e-20"


@settings(max_examples=50)
@given(st.dictionaries(st.sampled_from(["a", "g", "beta", "x"]), st.floats(allow_nan=False, allow_infinity=False), min_size=1))
def test_json_roundtrip(rec):
    import io
    import sys

    old = sys.stdout
    sys.stdout = io.StringIO()
    try:
        text = emit_records([rec], "json")
    finally:
        sys.stdout = old
    assert json.loads(text) == rec
