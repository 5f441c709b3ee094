import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

import jacobidim as jd


def test_hurwitz_values():
    assert jd.as_fraction(jd.hurwitz_h1(0)) == Fraction(-1, 12)
    assert jd.as_fraction(jd.hurwitz_h1(-3)) == Fraction(1, 3)
    assert jd.as_fraction(jd.hurwitz_h1(-4)) == Fraction(1, 2)
    assert jd.as_fraction(jd.hurwitz_h1(-23)) == 3
    assert jd.hurwitz_h1(-1) == jd.Rational(0)
    with pytest.raises(ValueError):
        jd.hurwitz_h1(5)


def test_reduced_forms():
    forms = jd.enumerate_reduced_forms(-4)
    assert [(f.a, f.b, f.c) for f in forms] == [(1, 0, 1)]
    forms = jd.enumerate_reduced_forms(-23)
    assert len(forms) == 3


def test_rational_arithmetic():
    r = jd.Rational(6, -4)
    assert str(r) == "-3/2"
    assert r.num == -3 and r.den == 2
    assert float(r) == -1.5
    assert r + jd.Rational(1, 2) == jd.Rational(-1)
    with pytest.raises(ValueError):
        jd.Rational(1, 0)


def test_schemes_and_dimensions():
    g3 = jd.principal_congruence_scheme(3)
    assert g3.psl_index() == 12
    assert not g3.contains_minus_one
    assert jd.as_fraction(jd.dim_jacobi(3, 1, g3)) == 2
    assert jd.as_fraction(jd.dim_corollary_gammaN(8, 3, 2)) == 48
    assert jd.as_fraction(jd.dim_jacobi(10, 1, jd.gamma0_scheme(1))) == 1
    assert jd.dim_jacobi(10, 1, jd.gamma0_scheme(1)).plain

    widths = list(g3.regular_cusp_widths)
    assert jd.dim_theorem1(3, 2, widths).value == jd.dim_theorem2(3, 2, widths).value

    round_trip = jd.BranchingScheme.from_json(g3.to_json())
    assert round_trip == g3
    assert jd.dim_jacobi(3, 1, round_trip).value == jd.dim_jacobi(3, 1, g3).value

    with pytest.raises(ValueError):
        jd.dim_jacobi(1, 1, g3)
    with pytest.raises(ValueError):
        jd.principal_congruence_scheme(0)


def test_s_functions_and_gegenbauer():
    assert jd.as_fraction(jd.s_top(3, 1, 1, 1)) == Fraction(-1, 4)
    assert jd.as_fraction(jd.s_par(3, 1, 1, 1)) == Fraction(1, 4)
    assert jd.as_fraction(jd.s_ell(3, 2, 2, 0)) == Fraction(-1, 2)
    assert jd.s_ell(3, 2, 2, -1) == jd.Rational(0)  # p_4 at u = 1 vanishes
    assert jd.p_even(4, 2) == 1
    assert jd.p_even(8, 3) == -1
    # for m = 1 the s-function identity sum collapses to a single triple
    triple = jd.s_triple(5, 1, 1, 1)
    assert triple.sum() == jd.s_identity_dim(5, 1)


def test_crosscheck_entry_points():
    assert jd.classical_dim_cusp_forms(12, 1) == 1
    assert jd.as_fraction(jd.s_identity_dim(10, 1)) == 1
    assert jd.lifting_identity_check(13, 4)
    report = jd.lemma_check(3, 9)
    assert jd.as_fraction(report.rhs_exact) == -2
    assert report.abs_error < 1e-7
    suite = jd.run_lemma_suite(6, 6)
    assert suite.passed() and suite.checks == 36
    summary = json.loads(suite.summary_json())
    assert summary["failures"] == 0


# ---- CLI round trip (covers the executable end to end) ----

CLI = os.environ.get("JACOBIDIM_CLI")

needs_cli = pytest.mark.skipif(not CLI, reason="JACOBIDIM_CLI not set")


def run_cli(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


@needs_cli
def test_cli_dim_json_round_trip(tmp_path):
    proc = run_cli("dim", "--group", "gammaN:8", "--weight", "3", "--index", "2",
                   "--format", "json")
    assert proc.returncode == 0, proc.stderr
    record = json.loads(proc.stdout)
    assert record["value"] == {"num": 48, "den": 1}
    assert record["plain"] is True

    # feed the library's scheme JSON back through the CLI
    scheme_path = tmp_path / "scheme.json"
    scheme_path.write_text(jd.principal_congruence_scheme(8).to_json())
    proc2 = run_cli("dim", "--group", f"scheme:{scheme_path}", "--weight", "3",
                    "--index", "2", "--format", "json")
    assert proc2.returncode == 0, proc2.stderr
    assert json.loads(proc2.stdout)["value"] == record["value"]


@needs_cli
def test_cli_table_and_hurwitz():
    proc = run_cli("table", "--group", "gammaN:4", "--weights", "3..6",
                   "--indices", "1..4", "--format", "csv")
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "group,k,m,value_num,value_den,plain"
    assert len(lines) == 17
    assert lines[1].startswith("gammaN:4,3,1,0,1")

    proc = run_cli("hurwitz", "--from", "-4", "--to", "-4", "--forms")
    assert proc.returncode == 0
    assert "(1,0,1)" in proc.stdout


@needs_cli
def test_cli_exit_codes():
    assert run_cli("dim", "--group", "gammaN:3", "--weight", "3", "--index", "1").returncode == 0
    # domain error (weight below 2) -> 2
    assert run_cli("dim", "--group", "gammaN:3", "--weight", "1", "--index", "1").returncode == 2
    # unknown family -> 2
    assert run_cli("dim", "--group", "gamma9:3", "--weight", "3", "--index", "1").returncode == 2
    # usage error -> 2
    assert run_cli("dim", "--weight", "3").returncode == 2
    # help -> 0
    assert run_cli("--help").returncode == 0
    # suite runs -> 0
    assert run_cli("check", "lemma", "--max-a", "4", "--max-f", "4").returncode == 0
    # positive delta -> 2
    assert run_cli("hurwitz", "--from", "-2", "--to", "2").returncode == 2
