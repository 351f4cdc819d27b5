from __future__ import annotations

import subprocess
import sys

import pytest

from magmalab.cli import main
from magmalab.textio import load_magma, load_multi


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_table(capsys):
    rc, out, _ = run(capsys, "table", "Ln(5,2)")
    assert rc == 0
    assert out.splitlines()[3].split() == ["1", "|", "1", "e", "3", "5", "2", "4"]


def test_build_round_trips(capsys, tmp_path):
    rc, out, _ = run(capsys, "build", "N(Ln(5,2))")
    assert rc == 0 and load_magma(out).order == 12
    rc, out, _ = run(capsys, "build", "U(Zmul(12),N(Zmul(5)))")
    assert load_multi(out).order == 21


def test_classify_loop_extension(capsys):
    rc, out, _ = run(capsys, "classify", "N(Ln(5,3))")
    assert rc == 0
    assert "LAGRANGE=lagrange" in out
    assert out.count("witness.sylow.2=") == 5


def test_classify_union(capsys):
    rc, out, _ = run(capsys, "classify", "U(N(Zmul(5;1,2,3,4)),C(9))", "--flavor", "neutrosophic")
    assert rc == 0 and "order=17" in out and "LAGRANGE=free" in out


def test_classify_deficit(capsys):
    rc, out, _ = run(capsys, "classify", "U(C(4),C(3),D2n(4))", "--deficit")
    assert rc == 0 and "DEFICIT live=0,2 order=12" in out


def test_props_and_subs(capsys):
    rc, out, _ = run(capsys, "props", "N(Zmul(5;1,2,3,4))")
    assert "order=8" in out and "neutrosophic_idempotents=I" in out
    rc, out, _ = run(capsys, "subs", "Ln(5,3)")
    assert "count=7" in out
    rc, out, _ = run(capsys, "subs", "N(Ln(5,2))", "--flavor", "neutrosophic")
    assert rc == 0 and "flavor=neutrosophic" in out


def test_parse_error_exit_code(capsys):
    rc, _, err = run(capsys, "table", "Ln(9,3)")
    assert rc == 2 and "position 0" in err
    rc, _, err = run(capsys, "table", "Ln(5,2")
    assert rc == 2 and "position 6" in err


def test_verify_writes_report(capsys, tmp_path):
    path = tmp_path / "r.txt"
    rc, out, _ = run(capsys, "--out", str(path), "verify", "T-count-Ln", "--range", "n=5..15")
    assert rc == 0 and out.startswith("PASS T-count-Ln")
    text = path.read_text()
    assert "param.n=5..15" in text and "summary.passed=1" in text


def test_verify_mutate_fails(capsys, tmp_path):
    path = tmp_path / "r.txt"
    rc, out, _ = run(capsys, "verify", "T-golden", "--mutate", "--out", str(path))
    assert rc == 1 and out.startswith("FAIL")
    assert "status=fail" in path.read_text()


def test_verify_unknown_check(capsys):
    rc, _, err = run(capsys, "verify", "T-none")
    assert rc == 2 and "no check named" in err


def test_bad_range_argument(capsys):
    rc, _, err = run(capsys, "verify", "T-count-Ln", "--range", "n")
    assert rc == 2


def test_scan(capsys):
    rc, out, _ = run(capsys, "scan", "Ln", "--n-range", "5..7")
    assert out.splitlines()[1].startswith("n=7 count=5 formula=5")
    rc, out, _ = run(capsys, "scan", "Zn", "--n-range", "3")
    assert "associative=" in out
    rc, out, _ = run(capsys, "scan", "NLn", "--n-range", "5")
    assert out.count("LAGRANGE=lagrange") == 3
    rc, _, _ = run(capsys, "scan", "Foo", "--n-range", "5")
    assert rc == 2


def test_checks_listing(capsys):
    rc, out, _ = run(capsys, "checks")
    assert rc == 0 and "T-biloop" in out


def test_repeated_verify_reports_identical(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "verify", "T-multi", "--out", str(a))
    run(capsys, "verify", "T-multi", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "magmalab.cli", "table", "Zn(1,2;3)"], capture_output=True, text=True, check=False
    )
    assert res.returncode == 0 and "0 | 0 2 1" in res.stdout


def test_missing_command_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
