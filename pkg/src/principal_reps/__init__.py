"""Weyl-group set combinatorics, Boolean incidence algebras and the bound quivers of their representations.

Subsets of a finite index set are Python ints used as bitmasks (bit ``i`` is
index ``i``); see :mod:`principal_reps.subsets`.
"""

from .bound_quiver import BoundQuiver, TitsForm, emit_dot, hasse_quiver, path_normal_form, tits_form
from .characters import CharacterValue, ThetaContext, i_theta, orbit_and_stabilizer, w_action
from .classify import a3_trichotomy_check, classify, gluing_search
from .errors import (
    AlgebraMismatch, BudgetExceeded, CapExceeded, DecompositionFailed, FieldMismatch, IncomparableCharacters,
    InvalidPath, InvalidSubset, PrincipalRepsError, ShapeMismatch,
)
from .fields import QQ, PrimeField, parse_field
from .groth import GrothClass, IntPoly, ModuleLabel, comp_factors, dim_E, dim_M, dim_para_M
from .incidence import IncidenceAlgebra, build_A_theta, build_incidence, heredity_check, reciprocity_check
from .reps import (
    QuiverRep, decompose, hom, hom_dim, is_indecomposable, is_isomorphic, load_rep, projective_rep, random_rep,
    simple_rep,
)
from .roots import CartanMatrix, RootDatum, WeylGroup, build_weyl_group, load_cartan
from .tits import substitution_report, weak_positivity_search
from .weyl_sets import j_w_theta, omega, x_theta_summands, xi, y_set, z_set

__version__ = "0.1.0"

__all__ = [
    "AlgebraMismatch", "BoundQuiver", "BudgetExceeded", "CapExceeded", "CartanMatrix", "CharacterValue",
    "DecompositionFailed", "FieldMismatch", "GrothClass", "IncidenceAlgebra", "IncomparableCharacters", "IntPoly",
    "InvalidPath", "InvalidSubset", "ModuleLabel", "PrimeField", "PrincipalRepsError", "QQ", "QuiverRep",
    "RootDatum", "ShapeMismatch", "ThetaContext", "TitsForm", "WeylGroup", "a3_trichotomy_check",
    "build_A_theta", "build_incidence", "build_weyl_group", "classify", "comp_factors", "decompose", "dim_E",
    "dim_M", "dim_para_M", "emit_dot", "gluing_search", "hasse_quiver", "heredity_check", "hom", "hom_dim", "i_theta",
    "is_indecomposable", "is_isomorphic", "j_w_theta", "load_cartan", "load_rep", "omega", "orbit_and_stabilizer",
    "parse_field", "path_normal_form", "projective_rep", "random_rep", "reciprocity_check", "simple_rep",
    "substitution_report", "tits_form", "w_action",
    "weak_positivity_search", "x_theta_summands", "xi", "y_set", "z_set",
]
