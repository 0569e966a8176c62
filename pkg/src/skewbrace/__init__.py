"""Finite skew braces: table arithmetic, ideals, the trifactorised group and theorem audits."""

from .brace import (
    SkewBrace,
    brace_validate,
    centre,
    commutator_ideal,
    fix,
    is_abelian_brace,
    is_ideal,
    is_isomorphic,
    is_left_ideal,
    is_right_ideal,
    is_strong_left_ideal,
    is_subbrace,
    is_trivial_brace,
    ker_lambda,
    opposite,
    soc,
    star_span,
    trivial_brace,
)
from .catalog import (
    BraceCatalog,
    brute_force_enumerate,
    canonical_form,
    canonical_id,
    enumerate_braces,
    enumerate_order,
    load_catalog,
    read_brace,
    write_brace,
)
from .groups import ElementSet, FiniteGroup, group_from_table
from .library import named_group
from .trifact import TrifactorisedGroup, TrifactTuple, build_trifactorised
from .ybe import verify_ybe, yb_map

__all__ = [
    "BraceCatalog",
    "ElementSet",
    "FiniteGroup",
    "SkewBrace",
    "TrifactTuple",
    "TrifactorisedGroup",
    "brace_validate",
    "brute_force_enumerate",
    "build_trifactorised",
    "canonical_form",
    "canonical_id",
    "centre",
    "commutator_ideal",
    "enumerate_braces",
    "enumerate_order",
    "fix",
    "group_from_table",
    "is_abelian_brace",
    "is_ideal",
    "is_isomorphic",
    "is_left_ideal",
    "is_right_ideal",
    "is_strong_left_ideal",
    "is_subbrace",
    "is_trivial_brace",
    "ker_lambda",
    "load_catalog",
    "named_group",
    "opposite",
    "read_brace",
    "soc",
    "star_span",
    "trivial_brace",
    "verify_ybe",
    "write_brace",
    "yb_map",
]
