"""End-to-end checks of the command line surface."""

import subprocess
import sys

import pytest

from nquandles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- enumerate -----------------------------------------------------------------

def test_enumerate_family(capsys):
    code, out, err = run(capsys, "enumerate", "--family", "T24", "--N", "3,4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "elements: 14"
    assert lines[1] == "N: 3,4"
    assert lines[2].startswith("orbits: 2 (sizes: ")
    assert "verify axioms: ok" in out
    assert err == ""


def test_enumerate_orbit_generator_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "Lk", "--k", "4",
                       "--N", "2,2,3")
    assert code == 0
    assert "orbits: 3 (sizes: 6, 6, 2)" in out
    assert "generators c" in out


def test_enumerate_full_verification(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "T24C",
                       "--verify", "full")
    assert code == 0
    assert "verify full: ok" in out


def test_enumerate_no_verify(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "trefoil", "--N", "3",
                       "--verify", "none")
    assert code == 0
    assert "verify" not in out


def test_enumerate_missing_n(capsys):
    code, out, err = run(capsys, "enumerate", "--family", "T24")
    assert code == 1
    assert "no N values" in err


def test_enumerate_unknown_family(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "T99", "--N", "2")
    assert code == 1
    assert "unknown family" in err


def test_enumerate_cap_exceeded(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "trefoil", "--N", "6",
                       "--max-vertices", "10000")
    assert code == 4
    assert out.startswith("exceeded vertices cap (10000)")


def test_enumerate_from_file(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("gens a b\ncomp a:1 b:1\nN 3\n"
                    "rel a^[b a b]=a\nrel b^[a b a]=b\n")
    code, out, _ = run(capsys, "enumerate", "--file", str(path))
    assert code == 0
    assert out.startswith("elements: 8")


def test_enumerate_missing_file(capsys):
    code, _, err = run(capsys, "enumerate", "--file", "/nonexistent/p.txt")
    assert code == 1
    assert "error:" in err


def test_enumerate_parse_error_position(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("gens a\nrel a^b=a\n")
    code, _, err = run(capsys, "enumerate", "--file", str(path))
    assert code == 1
    assert "line 2" in err


def test_enumerate_writes_dot_and_json(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    js = tmp_path / "g.json"
    code, out, _ = run(capsys, "enumerate", "--family", "T26", "--N", "2,3",
                       "--dot", str(dot), "--json", str(js))
    assert code == 0
    assert f"wrote {dot}" in out
    assert dot.read_text().startswith("digraph quandle {")
    assert js.read_text().startswith("{")


def test_enumerate_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["enumerate", "--family", "T24", "--N", "x,y"])
    assert err.value.code == 2


def test_enumerate_source_required():
    with pytest.raises(SystemExit) as err:
        main(["enumerate"])
    assert err.value.code == 2


def test_timing_line_is_marked(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "hopf", "--N", "2,2",
                       "--timing")
    assert code == 0
    assert out.splitlines()[-1].startswith("time:")


def test_stdout_determinism(capsys):
    argv = ["enumerate", "--family", "Mk", "--k", "2"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


# --- verify-catalog --------------------------------------------------------------

def test_verify_catalog_rows(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--rows", "T24")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ok   T24 N=(3, 3): 8"
    assert lines[-1] == "checks: 3 total, 3 ok, 0 failed"


def test_verify_catalog_unknown_row(capsys):
    code, _, err = run(capsys, "verify-catalog", "--rows", "T99")
    assert code == 1
    assert "no catalog row" in err


def test_verify_catalog_k_range(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--rows", "Mk",
                       "--k-range", "0:2")
    assert code == 0
    assert "checks: 3 total, 3 ok, 0 failed" in out


def test_verify_catalog_parallel_matches_serial(capsys):
    argv = ["verify-catalog", "--rows", "T23,T33", "--jobs", "1"]
    _, serial, _ = run(capsys, *argv)
    argv[-1] = "2"
    code, parallel, _ = run(capsys, *argv)
    assert code == 0
    assert serial == parallel


def test_verify_catalog_empty_selection(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--rows", "Mk",
                       "--k-range", "1:0")
    assert code == 1
    assert "no checks selected" in out


# --- convert ----------------------------------------------------------------------

TREFOIL_PRESENTATION = """gens x0 x1 x2
comp x0:1 x1:1 x2:1
N 4
rel x1^[x0]=x2
rel x0^[x2]=x1
rel x2^[x1]=x0
"""


def test_convert_braid_to_presentation(capsys):
    code, out, _ = run(capsys, "convert", "--braid", "1,1,1", "--strands", "2",
                       "--N", "4")
    assert code == 0
    assert out == TREFOIL_PRESENTATION


def test_convert_round_trip_through_diagram(tmp_path, capsys):
    diag = tmp_path / "t.diag"
    code, _, _ = run(capsys, "convert", "--braid", "1,1,1", "--strands", "2",
                     "--to", "diagram", "-o", str(diag))
    assert code == 0
    code, out, _ = run(capsys, "convert", "--diagram", str(diag), "--N", "4")
    assert code == 0
    assert out == TREFOIL_PRESENTATION


def test_convert_feeds_enumerate(tmp_path, capsys):
    pres = tmp_path / "t.txt"
    code, _, _ = run(capsys, "convert", "--braid", "1,1,1,1,1", "--strands", "2",
                     "--N", "2", "-o", str(pres))
    assert code == 0
    code, out, _ = run(capsys, "enumerate", "--file", str(pres))
    assert code == 0
    assert out.startswith("elements: 5")  # closed 5-crossing 2-braid at n=2


def test_convert_braid_needs_strands(capsys):
    code, _, err = run(capsys, "convert", "--braid", "1,1")
    assert code == 1
    assert "--strands" in err


def test_convert_bad_braid_letter(capsys):
    code, _, err = run(capsys, "convert", "--braid", "3", "--strands", "2")
    assert code == 1
    assert "out of range" in err


def test_convert_n_only_for_presentations(capsys):
    code, _, err = run(capsys, "convert", "--braid", "1", "--strands", "2",
                       "--to", "diagram", "--N", "2")
    assert code == 1
    assert "--N" in err


# --- installed entry point ----------------------------------------------------------

def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "nquandles.cli", "enumerate",
         "--family", "T24", "--N", "3,3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("elements: 8")


def test_console_script_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "nquandles.cli"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
