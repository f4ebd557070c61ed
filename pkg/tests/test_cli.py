from __future__ import annotations

import pytest

from braidmono import default_targets, dump_targets
from braidmono.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_tangency(capsys):
    code, out, _ = _run(capsys, "compute", "--curve", "(y+x^2)(y-x^2)")
    assert code == 0
    assert "letters: s1 s1 s1 s1" in out
    assert "exponent-sum: 4" in out


def test_compute_single_line_is_empty_braid(capsys):
    code, out, _ = _run(capsys, "compute", "--curve", "y")
    assert code == 0
    assert "letters: (empty)" in out


def test_compute_vertical_tangency_permutation(capsys):
    code, out, _ = _run(capsys, "compute", "--curve", "y(y^2+x)(y^2-x)")
    assert code == 0
    assert "permutation: 5 4 3 2 1" in out


def test_compute_half_arc(capsys):
    code, out, _ = _run(capsys, "compute", "--curve", "(y+x^2)(y-x^2)", "--arc", "half")
    assert code == 0
    assert "letters: s1 s1\n" in out


def test_compute_structured_format(capsys):
    code, out, _ = _run(
        capsys, "compute", "--curve", "(y^2-x)", "--format", "structured"
    )
    assert code == 0
    assert "letters=s1\n" in out
    assert ": " not in out


def test_compute_center_and_radius(capsys):
    code, out, _ = _run(
        capsys, "compute", "--curve", "(y^2-x)",
        "--center", "5", "--radius", "1/2",
    )
    assert code == 0
    assert "letters: (empty)" in out


def test_parse_error_exits_two(capsys):
    code, _, err = _run(capsys, "compute", "--curve", "(y+x^2")
    assert code == 2
    assert "error" in err


def test_missing_curve_exits_two(capsys):
    code, _, err = _run(capsys, "compute")
    assert code == 2


def test_tracking_error_exits_three(capsys):
    code, _, err = _run(capsys, "compute", "--curve", "(y-x)(y-x)")
    assert code == 3
    assert "tracking error" in err


def test_vankampen_from_braid(capsys):
    code, out, _ = _run(capsys, "vankampen", "--braid", "s1 s1 s1 s1")
    assert code == 0
    assert "raw:" in out
    assert "final:" in out


def test_vankampen_signed_integer_letters(capsys):
    code, out, _ = _run(capsys, "vankampen", "--braid", "1 -1", "--strands", "3")
    assert code == 0
    assert "free group of rank 3" in out


def test_vankampen_empty_braid_is_free(capsys):
    code, out, _ = _run(capsys, "vankampen", "--braid", "", "--strands", "2")
    assert code == 0
    assert "free group of rank 2" in out


def test_vankampen_from_curve(capsys):
    code, out, _ = _run(capsys, "vankampen", "--curve", "(y+x^2)(y-x^2)")
    assert code == 0
    assert "final:" in out


def test_vankampen_bad_letter_exits_two(capsys):
    code, _, err = _run(capsys, "vankampen", "--braid", "sX")
    assert code == 2


def test_verify_single_fixture(capsys):
    code, out, _ = _run(capsys, "verify", "two-tangent-conics")
    assert code == 0
    assert "all checks passed" in out


def test_verify_unknown_id_exits_two(capsys):
    code, _, err = _run(capsys, "verify", "bogus-id")
    assert code == 2


def test_verify_structured_output(capsys):
    code, out, _ = _run(capsys, "verify", "n-tangency-2", "--format", "structured")
    assert code == 0
    assert "all-passed=true" in out
    assert "check=tracked-vs-model passed=true" in out


def test_verify_with_targets_file(tmp_path, capsys):
    path = tmp_path / "targets.txt"
    path.write_text(dump_targets(default_targets()[:3]), encoding="utf-8")
    code, out, _ = _run(
        capsys, "verify", "two-tangent-conics", "--targets", str(path)
    )
    assert code == 0


def test_verify_is_deterministic(capsys):
    first = _run(capsys, "verify", "two-tangent-conics")
    second = _run(capsys, "verify", "two-tangent-conics")
    assert first == second
