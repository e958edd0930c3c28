import json
import os

import pytest

from minorbit import bwb
from minorbit.cli import BundleParseError, main, parse_bundle_spec


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_parse_bundle_spec():
    assert parse_bundle_spec("O(2)", 3) == bwb.BundleExpr.of(bwb.line_bundle(3, 2))
    assert parse_bundle_spec("omega(1, 0)", 3) == bwb.omega(3, 1, 0)
    assert parse_bundle_spec("wedgeT(1,-1)", 3) == bwb.wedge_tangent(3, 1, -1)
    assert parse_bundle_spec("hom(2,1,0)", 3) == bwb.hom_bundle(2, 1, 0, 3)
    combo = parse_bundle_spec("O(1)+O(1)-omega(1,2)", 3)
    assert combo == (
        bwb.BundleExpr.of(bwb.line_bundle(3, 1)).scale(2) - bwb.omega(3, 1, 2)
    )


def test_parse_errors_carry_positions():
    with pytest.raises(BundleParseError) as e:
        parse_bundle_spec("omega(1;2)", 3)
    assert e.value.col == 7
    with pytest.raises(BundleParseError) as e:
        parse_bundle_spec("tangent(1,2)", 3)
    assert e.value.col == 0


def test_coh_subcommand(capsys):
    rc, out, _ = run(capsys, ["coh", "--n", "3", "--bundle", "omega(1,0)"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["cohomology"] == {"1": 1}
    assert "claim" in payload


def test_coh_csv(capsys):
    rc, out, _ = run(capsys, ["coh", "--n", "3", "--bundle", "O(2)", "--output", "csv"])
    assert rc == 0
    assert out.splitlines() == ["degree,dim", "0,6"]


def test_usage_error_exit_code(capsys):
    rc, _, _ = run(capsys, ["coh", "--n", "3", "--bundle", "omega(7,0)"])
    assert rc == 2
    rc, _, _ = run(capsys, ["coh", "--n", "1", "--bundle", "O(0)"])
    assert rc == 2
    assert main(["nonsense"]) == 2


def test_out_of_range_parameters_report_range(capsys):
    rc, _, err = run(capsys, ["tilting", "--family", "Sk", "--k", "9", "--n", "3"])
    assert rc == 2
    assert "range" in err
    rc, _, err = run(capsys, ["hilbert", "--module", "M(7)", "--n", "3"])
    assert rc == 2
    assert "range" in err


def test_quiver_compare(capsys):
    rc, out, _ = run(capsys, ["quiver", "--compare", "--n", "2", "--max-len", "6"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["pass"] is True


def test_quiver_dims_csv(capsys):
    rc, out, _ = run(
        capsys,
        ["quiver", "--dims", "--n", "2", "--max-len", "2", "--output", "csv"],
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "a,b,l,paths,relations_rank,dim"
    assert "0,0,2,4,1,3" in lines


def test_kflop_flopflop(capsys):
    rc, out, _ = run(capsys, ["kflop", "--flopflop", "--k", "0", "--n", "4"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert payload["matrix"] == ident


def test_kflop_ledger(capsys):
    rc, out, _ = run(capsys, ["kflop", "--ptwist-ledger", "--n", "3"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert any(s["step"] == "twisted-class" for s in payload["steps"])


def test_rep_subcommand(capsys):
    rc, out, _ = run(capsys, ["rep", "--alpha", "0,0,1", "--beta", "1/2,0,0"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["simple"] is True
    assert payload["X"][2][0] == "1/2"
    rc, _, err = run(capsys, ["rep", "--alpha", "1,0", "--beta", "1,0"])
    assert rc == 2


def test_hilbert_subcommand(capsys):
    rc, out, _ = run(
        capsys, ["hilbert", "--module", "M(0)", "--n", "2", "--cap", "4", "--output", "csv"]
    )
    assert rc == 0
    assert out.splitlines()[1:] == ["0,1", "1,3", "2,5", "3,7", "4,9"]


def test_mutate_orbit(capsys):
    rc, out, _ = run(capsys, ["mutate", "--orbit", "--n", "3"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["closed_after"] == 4


def test_tilting_subcommand(capsys):
    rc, out, _ = run(capsys, ["tilting", "--family", "Sk", "--k", "1", "--n", "3"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    rc, out, _ = run(capsys, ["tilting", "--family", "TPlus", "--n", "3"])
    assert rc == 0


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("n=2\ncap=3\n")
    rc, out, _ = run(capsys, ["--config", str(cfg), "hilbert", "--module", "M(0)"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["n"] == 2 and len(payload["dims"]) == 4
    rc, out, _ = run(
        capsys, ["--config", str(cfg), "hilbert", "--module", "M(0)", "--cap", "1"]
    )
    payload = json.loads(out)
    assert len(payload["dims"]) == 2


def test_output_dir_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MINORBIT_OUTPUT_DIR", str(tmp_path))
    rc, out, _ = run(
        capsys, ["coh", "--n", "2", "--bundle", "O(1)", "--out", "table.json"]
    )
    assert rc == 0
    written = tmp_path / "table.json"
    assert written.exists()
    assert json.loads(written.read_text())["cohomology"] == {"0": 2}


def test_determinism(capsys):
    rc1, out1, _ = run(capsys, ["coh", "--n", "4", "--bundle", "hom(2,3,1)"])
    rc2, out2, _ = run(capsys, ["coh", "--n", "4", "--bundle", "hom(2,3,1)"])
    assert (rc1, out1) == (rc2, out2)
