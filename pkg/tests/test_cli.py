import io
import json
import subprocess
import sys

import pytest

from zinbiel.cli import run

ALPHA = ["--alphabet", "x:odd,y:even"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,expected", [
    (["expand", *ALPHA, "[x,y]"], "xy - yx\n"),
    (["expand", *ALPHA, "[x,x]"], "2 xx\n"),
    (["shuffle", *ALPHA, "x", "y"], "xy + yx\n"),
    (["shuffle", *ALPHA, "--zinbiel", "x", "y o x"], "xyx + yxx\n"),
    (["pmap", *ALPHA, "x o y"], "yx\n"),
])
def test_word_commands(argv, expected):
    code, out, err = call(*argv)
    assert (code, out, err) == (0, expected, "")


def test_is_special():
    code, out, _ = call("is-special", *ALPHA, "bar(x*y*x*y)")
    assert code == 0
    assert out.splitlines()[:2] == ["verdict=special", "special: true"]
    code, out, _ = call("is-special", *ALPHA, "x o y")
    assert code == 1
    assert out.splitlines()[0] == "verdict=exceptional"


def test_ideal_check_exceptional_example():
    code, out, _ = call("ideal-check", *ALPHA, "--gens", "bar(y*y*x); y*x*x", "--degree", "x:2,y:2")
    assert code == 1
    assert out.splitlines() == [
        "verdict=exceptional", "exceptional-witness: yyxx",
        "dim ideal: 2", "dim zinbiel_ideal: 4", "dim intersection: 3", "dim quotient: 1",
    ]


def test_ideal_check_special():
    code, out, _ = call("ideal-check", *ALPHA, "--gens", "[x,y]", "--degree", "x:1,y:2")
    assert code == 0 and out.startswith("verdict=special\n")


def test_verify_entry():
    code, out, _ = call("verify", "--entry", "T8_21", "--identity", "SuperJacobi")
    assert code == 1
    assert out.splitlines() == ["verdict=fails", "SuperJacobi: fails at (e1, e2, e3) -> e3 [J_s(a,b,c) = 0]"]
    code, out, _ = call("verify", "--entry", "T8_21", "--identity", "tortkara")
    assert code == 0 and out.startswith("verdict=holds")


def test_verify_file(fixtures):
    code, out, _ = call("verify", "--algebra", str(fixtures / "t8_corrupted.alg"), "--identity", "SuperTortkara")
    assert code == 1 and out.startswith("verdict=fails")


def test_json_output():
    code, out, _ = call("--json", "verify", "--entry", "T8_21", "--identity", "Lie")
    report = json.loads(out)
    assert code == 1
    assert report["verdict"] == "fails" and report["witness"] == [1, 2, 3] and report["residual"] == "e3"
    assert list(report) == sorted(report)
    code2, out2, _ = call("verify", "--json", "--entry", "T8_21", "--identity", "Lie")
    assert (code2, out2) == (code, out)


def test_catalog_command(tmp_path, fixtures):
    code, out, _ = call("catalog", "--no-envelope", "--export", str(tmp_path))
    lines = out.splitlines()
    assert code == 1  # the T^2_{1|2} Lie flag disagrees
    assert lines[0] == "verdict=fails"
    assert "mismatches: 1" in lines
    assert "  T^2_{1|2}: Lie: expected True, found False" in lines
    written = sorted(p.name for p in tmp_path.iterdir())
    assert written == sorted(p.name for p in (fixtures / "catalog").iterdir())


def test_envelope_command(fixtures):
    code, out, _ = call("envelope", "--entry", "T3_12(2)", "--n", "3")
    assert code == 0 and out.startswith("verdict=holds")
    code, out, _ = call("envelope", "--algebra", str(fixtures / "t8_corrupted.alg"))
    assert code == 1 and out.startswith("verdict=fails")


def test_rb_tower_command(fixtures):
    rb = fixtures / "rb"
    code, out, _ = call("rb-tower", "--algebra", str(rb / "poly3.alg"), "--operator", str(rb / "poly3_even.op"))
    assert code == 0
    assert out.splitlines()[:2] == ["verdict=holds", "operator parity: even"]
    assert sum("binomial formula matches" in line for line in out.splitlines()) == 4
    code, out, _ = call("--json", "rb-tower", "--algebra", str(rb / "unit_0_1.alg"),
                        "--operator", str(rb / "unit_0_1_odd.op"))
    report = json.loads(out)
    assert code == 0 and report["identity"] == "OddZinbiel" and report["levels"] == []


def test_rb_tower_rejects_non_operator(tmp_path, fixtures):
    op = tmp_path / "id.op"
    op.write_text("parity even\n1 1 1\n2 2 1\n3 3 1\n")
    code, out, _ = call("rb-tower", "--algebra", str(fixtures / "rb" / "poly3.alg"), "--operator", str(op))
    assert code == 1 and out.startswith("verdict=fails")


@pytest.mark.parametrize("argv,fragment", [
    (["expand", *ALPHA, "[x,"], "1:4"),
    (["expand", *ALPHA, "[x,q]"], "q"),
    (["expand", "[x,y]"], "alphabet"),
    (["is-special", *ALPHA, "x"], "degree"),
    (["ideal-check", *ALPHA, "--gens", "x o y", "--degree", "x:1,y:1"], "p(f) = -f"),
    (["verify", "--entry", "T5_21", "--identity", "Lie"], "T5_21"),
    (["verify", "--entry", "T8_21", "--identity", "jordan"], "unknown identity"),
    (["verify", "--identity", "Lie"], "exactly one"),
    (["verify", "--algebra", "/nonexistent.alg", "--identity", "Lie"], "nonexistent"),
])
def test_usage_errors(argv, fragment):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.startswith(f"zinbiel {argv[0]}: error:") and fragment in err


def test_argparse_errors_exit_2(capsys):
    assert call("frobnicate")[0] == 2
    assert call("ideal-check", *ALPHA)[0] == 2


def test_alphabet_file(tmp_path):
    f = tmp_path / "alpha.txt"
    f.write_text("x : odd\ny : even\n")
    assert call("expand", "--alphabet-file", str(f), "[x,y]")[1] == "xy - yx\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zinbiel", "expand", *ALPHA, "[x,y]"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "xy - yx\n"
