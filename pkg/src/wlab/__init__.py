"""Exact character theory for finite groups given by presentations.

Builds a group by coset enumeration, computes its conjugacy classes,
subgroups up to conjugacy and irreducible character table, and analyses the
tensor powers of its faithful transitive permutation representations.
"""
from .character_table import CharTable, ClassFunction, dixon_schneider, inner_product, sum_of_degrees
from .exact_algebra import CycNum, FpElem, cyc_conj, cyc_mul, fp_discrete_root_table
from .group_engine import (
    ClassData,
    CosetTable,
    FinGroup,
    Presentation,
    build_group,
    conjugacy_classes,
    element_order,
    group_from_presentation,
    load_presentation,
    parse_presentation,
    todd_coxeter,
)
from .perm_characters import (
    MultVector,
    PermChar,
    contains_identity_once,
    decompose,
    is_doubly_transitive,
    is_multiplicity_free,
    permutation_character,
)
from .pipeline import Analysis, analyze
from .subgroup_lattice import CosetAction, SubgroupRecord, coset_action, core_of, enumerate_subgroups
from .tensor_centralizer import (
    ClosedForm,
    TensorAnalysis,
    WedderburnStructure,
    closed_forms,
    dim_centralizer,
    tensor_multiplicities,
    transition_matrix,
    wedderburn,
)

__version__ = "0.1.0"
