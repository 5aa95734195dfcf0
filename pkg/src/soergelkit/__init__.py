"""Kazhdan-Lusztig polynomials, Hecke algebras and Soergel bimodule classes.

The KL table kernel is compiled when the ``_klcore`` extension is available
and falls back to pure Python otherwise; see :mod:`soergelkit.klkernel`.
"""

__version__ = "0.1.0"

from .laurent import LaurentPoly
from .coxeter import (
    CoxeterMatrix,
    CoxeterSystem,
    GroupTooLarge,
    InvalidMatrix,
    bruhat_leq,
    build_system,
    coxeter_matrix,
    format_word,
    length_gen_poly,
    longest_element,
    named_system,
    parse_word,
)
from .hecke import (
    HeckeElt,
    KLTable,
    b_s,
    build_kl_table,
    delta,
    hk_bar,
    hk_mul,
    inversion_defect,
    kl_basis_direct,
    kl_basis_mu_recursion,
    kl_expand,
    kl_polynomial,
    mu,
    pairing,
    specialize_v1,
)
from .categorify import SBimClass, bs_class, chi, hom_graded_rank, phi, polo_search, positivity_scan
from .category_o import GrothOElt, bgg_check, proj_class, simple_class, theta_action, verma_class
from .klkernel import BACKEND, available_backends

__all__ = [
    "__version__",
    "LaurentPoly",
    "CoxeterMatrix",
    "CoxeterSystem",
    "GroupTooLarge",
    "InvalidMatrix",
    "bruhat_leq",
    "build_system",
    "coxeter_matrix",
    "format_word",
    "length_gen_poly",
    "longest_element",
    "named_system",
    "parse_word",
    "HeckeElt",
    "KLTable",
    "b_s",
    "build_kl_table",
    "delta",
    "hk_bar",
    "hk_mul",
    "inversion_defect",
    "kl_basis_direct",
    "kl_basis_mu_recursion",
    "kl_expand",
    "kl_polynomial",
    "mu",
    "pairing",
    "specialize_v1",
    "SBimClass",
    "bs_class",
    "chi",
    "hom_graded_rank",
    "phi",
    "polo_search",
    "positivity_scan",
    "GrothOElt",
    "bgg_check",
    "proj_class",
    "simple_class",
    "theta_action",
    "verma_class",
    "BACKEND",
    "available_backends",
]
