import json

import pytest

from twistedtorus.braid import InvalidTorusParameters
from twistedtorus.cli import CSV_HEADER, main, rows_to_csv, scan_rows


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- alex ---------------------------------------------------------------------

def test_alex_trefoil(capsys):
    code, out, _ = run(capsys, "alex", "--p", "2", "--q", "3", "--r", "0", "--form", "paper")
    assert code == 0
    assert out == "t^2 - t + 1\n"


def test_alex_symmetric_form(capsys):
    code, out, _ = run(capsys, "alex", "--p", "2", "--q", "3", "--r", "0", "--form", "symmetric")
    assert code == 0
    assert out == "t - 1 + t^-1\n"


def test_alex_golden(capsys, golden_t7_17_6):
    code, out, _ = run(capsys, "alex", "--p", "7", "--q", "17", "--r", "6", "--form", "paper")
    assert code == 0
    assert out == golden_t7_17_6


def test_alex_rejects_non_coprime(capsys):
    code, out, err = run(capsys, "alex", "--p", "4", "--q", "6", "--r", "0")
    assert code == 2
    assert out == ""
    assert "gcd" in err


def test_alex_rejects_odd_r(capsys):
    code, _, err = run(capsys, "alex", "--p", "2", "--q", "3", "--r", "3")
    assert code == 2
    assert "even" in err


# -- check-lens ------------------------------------------------------------------

def test_check_lens_obstruction_present(capsys):
    code, out, _ = run(capsys, "check-lens", "--p", "7", "--q", "17", "--r", "6")
    assert code == 0  # obstruction PRESENT is the zero exit
    data = json.loads(out)
    assert data["lens_form_ok"] is False
    assert data["lens_witness"] == [37, -2]
    assert data["gamma_primitive_excluded"] is True


def test_check_lens_form_passes(capsys):
    code, out, _ = run(capsys, "check-lens", "--p", "2", "--q", "3", "--r", "0")
    assert code == 1
    data = json.loads(out)
    assert data["lens_form_ok"] is True
    assert data["gamma_primitive_excluded"] is False


def test_check_lens_m2(capsys):
    code, out, _ = run(capsys, "check-lens", "--p", "7", "--q", "17", "--r", "16")
    assert code == 0


def test_check_lens_bad_params(capsys):
    code, _, err = run(capsys, "check-lens", "--p", "9", "--q", "6", "--r", "0")
    assert code == 2
    assert err


# -- scan ---------------------------------------------------------------------------

def test_scan_csv_single_row(capsys):
    code, out, _ = run(
        capsys, "scan", "--p", "7", "--q", "17", "--m-start", "1", "--m-end", "1"
    )
    assert code == 0
    header, row = out.strip().split("\n")
    assert header == CSV_HEADER
    assert row == "1,7,17,6,3,108,102,37,-2,false,true"


def test_scan_csv_m0_has_empty_morton_columns(capsys):
    code, out, _ = run(
        capsys, "scan", "--p", "7", "--q", "17", "--m-start", "0", "--m-end", "0"
    )
    assert code == 0
    row = out.strip().split("\n")[1]
    assert row == "0,7,17,-4,-2,106,92,,,false,true"


def test_scan_rows_increasing_m():
    rows = scan_rows(7, 17, -1, 2, jobs=1)
    assert [row.m for row in rows] == [-1, 0, 1, 2]


def test_scan_json(capsys):
    code, out, _ = run(
        capsys, "scan", "--p", "7", "--q", "17", "--m-start", "1", "--m-end", "2",
        "--out", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert [row["m"] for row in data] == [1, 2]
    assert data[0]["coeff_target_exp"] == 37
    assert data[0]["coeff_value"] == -2
    assert data[0]["lens_form_ok"] is False
    assert data[0]["gamma_primitive_excluded"] is True
    # (7,17) family breadth tracks the twist count: 96 + r
    assert [row["breadth"] for row in data] == [96 + 6, 96 + 16]


def test_scan_bad_range(capsys):
    code, _, err = run(capsys, "scan", "--p", "7", "--q", "17", "--m-start", "3", "--m-end", "1")
    assert code == 2
    assert "range" in err


def test_scan_output_file(tmp_path, capsys):
    target = tmp_path / "scan.csv"
    code, out, _ = run(
        capsys, "scan", "--p", "7", "--q", "17", "--m-start", "1", "--m-end", "1",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith(CSV_HEADER)


def test_scan_failure_leaves_no_file(tmp_path, capsys):
    target = tmp_path / "scan.csv"
    code, _, _ = run(
        capsys, "scan", "--p", "4", "--q", "6", "--m-start", "1", "--m-end", "1",
        "--output", str(target),
    )
    assert code == 2
    assert not target.exists()


def test_scan_pretty(capsys):
    code, out, _ = run(
        capsys, "scan", "--p", "7", "--q", "17", "--m-start", "1", "--m-end", "1", "--pretty"
    )
    assert code == 0
    assert "braid_length" in out and "108" in out


def test_scan_general_family_skips_morton(capsys):
    # s = 2 fails 0 < s < 3/3 for (2, 3), so Morton columns stay empty
    code, out, _ = run(capsys, "scan", "--p", "2", "--q", "3", "--m-start", "1", "--m-end", "1")
    assert code == 0
    row = out.strip().split("\n")[1]
    cells = row.split(",")
    assert cells[7] == "" and cells[8] == ""


def test_scan_csv_parallel_matches_serial():
    serial = rows_to_csv(scan_rows(7, 17, 1, 3, jobs=1))
    parallel = rows_to_csv(scan_rows(7, 17, 1, 3, jobs=4))
    assert serial == parallel


def test_scan_worker_failure_propagates():
    with pytest.raises(InvalidTorusParameters):
        scan_rows(4, 6, 1, 2, jobs=2)


# -- primitive ------------------------------------------------------------------------

def test_primitive_not(capsys):
    code, out, _ = run(capsys, "primitive", "--p", "7", "--q", "17")
    assert code == 0
    assert out.splitlines()[0] == "not primitive"
    assert json.loads("\n".join(out.splitlines()[1:]))["primitive"] is False


def test_primitive_r_branch(capsys):
    code, out, _ = run(capsys, "primitive", "--p", "2", "--q", "5")
    assert code == 0
    assert out.splitlines()[0] == "primitive (r=1, s=3)"


def test_primitive_s_branch(capsys):
    code, out, _ = run(capsys, "primitive", "--p", "3", "--q", "4")
    assert code == 0
    assert out.splitlines()[0] == "primitive (s=1, r=1)"


def test_primitive_bad_params(capsys):
    code, _, err = run(capsys, "primitive", "--p", "6", "--q", "9")
    assert code == 2
    assert err
