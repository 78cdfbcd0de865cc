"""Smoke tests for the Python bindings."""

import json
from fractions import Fraction

import pytest

import qformlab


def test_characters():
    assert qformlab.kronecker(-4, 3) == -1
    assert qformlab.char_eval(-3, 2) == -1
    assert [qformlab.gen_bernoulli3(t) for t in (-3, -4, -8, -24)] == ["2/3", "3/2", "9", "138"]
    assert qformlab.sigma_twisted(2, 1, -4, 5) == 26


def test_eta_expand_is_the_pentagonal_series():
    coeffs = qformlab.eta_expand("eta24[24,0,0,0,0,0,0,0]", 4)
    # eta(z)^24 = q - 24 q^2 + 252 q^3 - ...
    assert coeffs == ["0", "1", "-24", "252"]


def test_ligozat_and_basis():
    report = qformlab.ligozat_check("eta24[0,3,0,-4,-5,2,16,-6]")
    assert report["holomorphic"] and report["cusp_form"]
    assert report["character"] == -3
    assert len(qformlab.basis_names(-8)) == 10
    assert qformlab.verify_basis(-24)["ok"]


def test_rep_counts_agree():
    assert qformlab.classify((6, 0, 0, 0)) == -4
    assert qformlab.rep_count_bruteforce([1, 1, 1, 1, 3, 3], 10) == 496
    assert Fraction(qformlab.rep_count_formula((4, 0, 2, 0), 10)) == 496
    row = qformlab.derive_formula((5, 0, 0, 1))
    assert row["character"] == -24
    assert [Fraction(x) for x in row["eisenstein"]] == [
        Fraction(-1, 23), Fraction(144, 23), Fraction(16, 23), Fraction(-9, 23)]


def test_newform_f1():
    result = qformlab.verify_newform(1)
    assert result["ok"] and result["solve_back"]


def test_remarks():
    checks = qformlab.verify_remark_identities()
    assert len(checks) == 9
    assert all(ok for _, ok in checks)


def test_cli_round_trip():
    code, out, err = qformlab.run_cli(["rep-count", "--form", "1,1,1,1,1,1", "--n", "2", "--json"])
    assert code == 0 and err == ""
    assert json.loads(out)["count"] == "60"
    code, _, err = qformlab.run_cli(["census", "--char", "7"])
    assert code == 2 and err


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        qformlab.eta_expand("eta24[1,2,3]")
