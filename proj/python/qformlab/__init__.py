"""Exact weight-3 modular forms on Gamma_0(24).

Rational results are returned as "p/q" strings; integers as Python ints.
"""

from ._qformlab import (
    basis_names,
    census,
    char_eval,
    classify,
    derive_formula,
    eisenstein,
    eta_expand,
    gen_bernoulli3,
    kronecker,
    ligozat_check,
    rep_count_bruteforce,
    rep_count_formula,
    run_cli,
    sigma_twisted,
    verify_basis,
    verify_newform,
    verify_remark_identities,
    verify_tables,
)

__all__ = [
    "basis_names",
    "census",
    "char_eval",
    "classify",
    "derive_formula",
    "eisenstein",
    "eta_expand",
    "gen_bernoulli3",
    "kronecker",
    "ligozat_check",
    "rep_count_bruteforce",
    "rep_count_formula",
    "run_cli",
    "sigma_twisted",
    "verify_basis",
    "verify_newform",
    "verify_remark_identities",
    "verify_tables",
]
