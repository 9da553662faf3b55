import json
import subprocess
import sys

import pytest

from orthonf import field_of_order, parse_polynomial
from orthonf.cli import main


@pytest.fixture
def points(tmp_path):
    def write(text, name="points.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ring(path, n=2, field="2", order="lex"):
    return ["--field", field, "--nvars", str(n), "--order", order, "--points", path]


def test_normal_form_hand_instance(capsys, points):
    p = points("0,0\n1,1\n")
    code, out, _ = run(capsys, "normal-form", *ring(p), "--poly", "x1")
    assert (code, out) == (0, "x2\n")
    code, out, _ = run(capsys, "normal-form", *ring(p), "--poly", "x1", "--oracle")
    assert (code, out) == (0, "x2\nMATCH\n")


def test_normal_form_zero(capsys, points):
    code, out, _ = run(capsys, "normal-form", *ring(points("0,0\n1,1\n")), "--poly", "0")
    assert (code, out) == (0, "0\n")


def test_normal_form_output_round_trips(capsys, points):
    p = points("# sample\n0,1\n2,2\n\n1,0\n")
    code, out, _ = run(capsys, "normal-form", *ring(p, field="3", order="grevlex"), "--poly", "x1^5*x2 + 2*x2^4 + 1")
    assert code == 0
    F = field_of_order(3)
    nf = parse_polynomial(out.strip(), 2, F)
    code, again, _ = run(capsys, "normal-form", *ring(p, field="3", order="grevlex"), "--poly", out.strip())
    assert parse_polynomial(again.strip(), 2, F) == nf


def test_json_record_is_byte_stable(capsys, points):
    p = points("0,0\n1,1\n")
    argv = ["normal-form", *ring(p), "--poly", "x1", "--oracle", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert first.count("\n") == 1
    record = json.loads(first)
    assert set(record) == {"input", "field", "order", "normal_form", "oracle_match"}
    assert record["normal_form"] == "x2" and record["oracle_match"] is True


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["--poly", "x1 +"], 2),
        (["--poly", "x3"], 2),
        (["--poly", "x1", "--order", "revlex"], 2),
        (["--poly", "x1", "--field", "6"], 5),
        (["--poly", "x1", "--field", "2^5"], 5),
        (["--poly", "x1", "--cap", "2"], 4),
    ],
)
def test_normal_form_exit_codes(capsys, points, argv, expected):
    p = points("0,0\n1,1\n")
    base = ["normal-form", "--nvars", "2", "--points", p]
    code, out, err = run(capsys, *base, *argv)
    assert code == expected
    assert out == "" and err.startswith("orthonf: error:")


@pytest.mark.parametrize("text", ["0,0\n0,0\n", "0,2\n", "0\n", "a,b\n", "# only a comment\n"])
def test_bad_points_exit_3(capsys, points, text):
    code, _, _ = run(capsys, "normal-form", *ring(points(text)), "--poly", "x1")
    assert code == 3


def test_missing_points_file(capsys, tmp_path):
    code, _, _ = run(capsys, "normal-form", *ring(str(tmp_path / "nope.txt")), "--poly", "x1")
    assert code == 2


def test_groebner(capsys, points):
    code, out, _ = run(capsys, "groebner", *ring(points("0,0\n0,1\n1,0\n1,1\n")))
    assert (code, out.splitlines()) == (0, ["x1^2 + x1", "x2^2 + x2"])
    code, out, _ = run(capsys, "groebner", *ring(points("0,0\n1,1\n")), "--check")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5 and lines[3] == "x1 + x2" and lines[4] == "OK"


def test_groebner_custom_order(capsys, points, tmp_path):
    order = tmp_path / "order.txt"
    order.write_text("1,1\n1,0\n0,1\n0,0\n")
    p = points("0,0\n1,1\n")
    code, _, err = run(capsys, "groebner", *ring(p, order=f"custom:{order}"))
    # a custom file is always read as a custom total order, never as a monomial order
    assert code == 2 and "custom total order" in err
    code, out, _ = run(capsys, "normal-form", *ring(p, order=f"custom:{order}"), "--poly", "x1")
    assert (code, out) == (0, "x2\n")
    order.write_text("1,1\n1,0\n0,1\n")
    code, _, _ = run(capsys, "normal-form", *ring(p, order=f"custom:{order}"), "--poly", "x1")
    assert code == 2


def test_interpolate(capsys, points, tmp_path):
    p = points("0,0\n1,2\n2,1\n")
    values = tmp_path / "values.txt"
    values.write_text("0 0 0\n")
    code, out, _ = run(capsys, "interpolate", *ring(p, field="3"), "--values", str(values))
    assert (code, out) == (0, "0\n")
    values.write_text("1, 2\n# last one\n0\n")
    code, out, _ = run(capsys, "interpolate", *ring(p, field="3"), "--values", str(values), "--verify")
    assert code == 0 and out.endswith("VERIFIED\n")
    values.write_text("1 2\n")
    code, _, _ = run(capsys, "interpolate", *ring(p, field="3"), "--values", str(values))
    assert code == 7
    values.write_text("1 2 3\n")
    code, _, _ = run(capsys, "interpolate", *ring(p, field="3"), "--values", str(values))
    assert code == 2


def test_interpolate_complete_data(capsys, points, tmp_path):
    p = points("".join(f"{a},{b}\n" for a in range(3) for b in range(3)))
    values = tmp_path / "values.txt"
    values.write_text(" ".join(str((a * b + 1) % 3) for a in range(3) for b in range(3)))
    code, out, _ = run(capsys, "interpolate", *ring(p, field="3"), "--values", str(values), "--verify", "--json")
    record = json.loads(out)
    assert code == 0 and record["verified"] is True
    assert record["interpolant"] == "x1*x2 + 1"


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--count", "0")
    assert code == 0 and "0 failed" in out
    code, out, _ = run(capsys, "selftest", "--count", "20", "--seed", "5", "--json")
    record = json.loads(out)
    assert code == 0 and record == {"seed": 5, "instances": 20, "checks": 60, "passed": 60, "failed": 0}
    code, out, err = run(capsys, "selftest", "--count", "5", "--corrupt")
    assert code == 6 and "mismatch" in err
    code, _, _ = run(capsys, "selftest", "--count", "3", "--fields", "4", "--max-nvars", "2")
    assert code == 0


def test_selftest_is_deterministic(capsys):
    _, first, _ = run(capsys, "selftest", "--count", "10", "--seed", "3", "--json")
    _, second, _ = run(capsys, "selftest", "--count", "10", "--seed", "3", "--json")
    assert first == second


def test_field_table(capsys):
    code, out, _ = run(capsys, "field-table", "--field", "2^2", "--json")
    record = json.loads(out)
    assert code == 0 and record["mul"][2][2] == 3 and record["add"][2][3] == 1
    code, out, _ = run(capsys, "field-table", "--field", "3")
    assert code == 0 and "* | 0 1 2" in out
    code, _, _ = run(capsys, "field-table", "--field", "x")
    assert code == 5


def test_module_entry_point(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("0,0\n1,1\n")
    proc = subprocess.run(
        [sys.executable, "-m", "orthonf", "normal-form", *ring(str(path)), "--poly", "x1", "--oracle"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "x2\nMATCH\n"
