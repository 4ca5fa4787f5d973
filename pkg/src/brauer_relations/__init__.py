"""Brauer relations between permutation characters of small finite groups."""

from .characters import (
    CharacterVector,
    FormalCombination,
    combination_character,
    mackey_restrict_normal,
    perm_character,
)
from .classify import Classification, Kind, classify, is_p_quasi_elementary, predicted_ideal
from .errors import (
    BrauerError,
    GroupTooLargeError,
    InvalidInputError,
    NotARelationError,
    NotNormalError,
    NotQuasiElementaryError,
)
from .groups import (
    MAX_ORDER,
    FiniteGroup,
    Homomorphism,
    Subgroup,
    conjugacy_classes,
    conjugation_kernel,
    element_order,
    frattini_subgroup,
    from_permutations,
    is_cyclic_group,
    is_normal,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_quaternion8,
    make_semidirect_cyclic,
    make_symmetric,
    p_residual,
    perm_from_cycles,
    quotient_map,
    subgroup_generated,
    sylow_subgroup,
    trivial_subgroup,
    whole_group,
)
from .groupspec import build_group, parse_group_spec, render
from .relations import (
    BaseCaseParams,
    InductionMatrix,
    RelationLattice,
    Step,
    base_relation,
    coefficient_ideal,
    induction_matrix,
    is_brauer_relation,
    lift_relation,
    mackey_obstruction,
    minimal_top_relation,
    relation_lattice,
    solomon_relation,
)
from .subgroups import SubgroupClass, all_subgroups, class_of, preimage_subgroup, subgroup_classes
from .theorem import TheoremReport, verify_theorem

__version__ = "0.1.0"
