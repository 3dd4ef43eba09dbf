import io
import json
import subprocess
import sys

import pytest

from hochord.cli import main


def run_cli(args):
    import contextlib
    buf = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(args)
    return code, buf.getvalue(), err.getvalue()


def test_validate_builtin_sets():
    for name in ("point", "interval", "circle", "wedge2", "wedge3", "sphere2"):
        code, out, _ = run_cli(["validate", name])
        assert code == 0
        assert "ok: True" in out


def test_nncmo_exit_codes():
    code, out, _ = run_cli(["nncmo", "circle", "--cutoff", "4"])
    assert code == 0 and "admits" in out
    code, out, _ = run_cli(["nncmo", "sphere2", "--cutoff", "4"])
    assert code == 2
    assert "[00112]" in out and "[01122]" in out
    assert "d1 d3" in out and "d2 d1" in out


def test_nncmo_oracle_flag():
    code, out, _ = run_cli(["nncmo", "wedge2", "--cutoff", "4", "--oracle"])
    assert code == 0
    assert "full_factorization_check: ok" in out


def test_nncmo_rejects_tiny_cutoff():
    code, _, err = run_cli(["nncmo", "circle", "--cutoff", "1"])
    assert code == 1 and "cutoff" in err


def test_cyclic_tables():
    code, out, _ = run_cli(["cyclic", "circle", "--cutoff", "4"])
    assert code == 0
    assert "[001], [011]" in out
    assert "[0001], [0011], [0111]" in out
    code, _, err = run_cli(["cyclic", "sphere2"])
    assert code == 1 and "one-dimensional" in err


def test_actions_report():
    code, out, _ = run_cli(["actions", "circle", "--cutoff", "4"])
    assert code == 0
    assert "type: left" in out and "type: right" in out


def test_cohomology_circle_uppertri():
    code, out, _ = run_cli(["cohomology", "circle", "--algebra", "upper-tri 2",
                            "--module", "regular", "--max-degree", "4"])
    assert code == 0
    assert "beta^0: 1" in out
    assert "square_zero: True" in out


def test_homology_refusal_on_sphere_noncommutative():
    code, out, _ = run_cli(["cohomology", "sphere2", "--algebra", "upper-tri 2",
                            "--module", "regular", "--max-degree", "3"])
    assert code == 2
    assert "refused: True" in out and "[00112]" in out


def test_homology_sphere_commutative_succeeds():
    code, out, _ = run_cli(["homology", "sphere2", "--algebra", "trunc-poly 2",
                            "--module", "symmetric", "--max-degree", "3"])
    assert code == 0
    assert "square_zero: True" in out


def test_json_round_trip_and_determinism():
    args = ["nncmo", "sphere2", "--cutoff", "4", "--json"]
    code1, out1, _ = run_cli(args)
    code2, out2, _ = run_cli(args)
    assert code1 == code2 == 2
    assert out1 == out2
    report = json.loads(out1)
    assert json.loads(json.dumps(report, sort_keys=True)) == report
    assert report["witness"]["fiber"] == ["[00112]", "[01112]", "[00122]", "[01122]"]


def test_pair_constraints_command():
    code, out, _ = run_cli(["pair-constraints", "circle", "circle"])
    assert code == 0 and "both-noncommutative" in out
    code, _, err = run_cli(["pair-constraints", "wedge2", "circle"])
    assert code == 1


def test_sset_file_input(tmp_path):
    p = tmp_path / "torusless.sset"
    p.write_text("""
basepoint v0
simplex v0 dim=0
simplex e dim=1 faces=[v0, v0]
""")
    code, out, _ = run_cli(["nncmo", str(p), "--cutoff", "3"])
    assert code == 0


def test_sset_parse_error_exit_1(tmp_path):
    p = tmp_path / "bad.sset"
    p.write_text("basepoint v0\nsimplex v0 dim=0\nsimplex e dim=1 faces=[w, v0]\n")
    code, _, err = run_cli(["nncmo", str(p)])
    assert code == 1 and "unknown simplex" in err


def test_unknown_set_exit_1():
    code, _, err = run_cli(["validate", "klein-bottle"])
    assert code == 1 and "unknown simplicial set" in err


def test_custom_algebra_file(tmp_path):
    p = tmp_path / "dual_numbers.alg"
    p.write_text("""
# k[x]/(x^2) by hand
algebra custom basis=[one,x] unit=[1,0] field=Q
table:
one*one = one; one*x = x
x*one = x
x*x = 0
""")
    code, out, _ = run_cli(["homology", "circle", "--algebra", str(p),
                            "--module", "symmetric", "--max-degree", "2"])
    assert code == 0
    assert "beta_0: 2" in out


def test_custom_algebra_file_errors(tmp_path):
    p = tmp_path / "broken.alg"
    p.write_text("algebra custom basis=[a,b] unit=[1,0] field=Q\ntable:\na*a = a\n")
    code, _, err = run_cli(["homology", "circle", "--algebra", str(p)])
    assert code == 1 and "missing from the table" in err


def test_custom_module_file(tmp_path):
    p = tmp_path / "sym.mod"
    p.write_text("""
module custom dim=2
action mult tag=lr
op(1) = [[1,0],[0,1]]
op(x) = [[0,0],[1,0]]
""")
    code, out, _ = run_cli(["cohomology", "circle", "--algebra", "trunc-poly 2",
                            "--module", str(p), "--max-degree", "2"])
    assert code == 0


def test_field_option():
    code, out, _ = run_cli(["homology", "circle", "--algebra", "trunc-poly 2",
                            "--module", "symmetric", "--max-degree", "2",
                            "--field", "F(5)"])
    assert code == 0 and "F(5)" in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hochord.cli", "validate", "circle"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
