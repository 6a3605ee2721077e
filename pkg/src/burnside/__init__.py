"""Burnside rings, the Burnside category and the J_n filtration for small finite groups."""
from .bisets import (
    BisetElement,
    biset_basis,
    compose,
    hom_biset,
    identity_biset,
    jn_bivariant,
    quotient_to_burnside,
    transfer_biset,
)
from .burnside_ring import (
    BurnsideElement,
    MarkVector,
    TableOfMarks,
    augmentation,
    from_marks,
    induce,
    marks_of,
    multiply,
    restrict_along,
    table_of_marks,
)
from .catalog import catalog_group
from .errors import (
    BurnsideError,
    GroupMismatch,
    InternalDefect,
    InvalidAction,
    NotAGroup,
    NotAHomomorphism,
    NotInImage,
    NotInjective,
    TooLarge,
    UnknownName,
)
from .filtration import (
    generalized_character,
    jn_ideal,
    jn_membership,
    linearization_kernel,
    permutation_character,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    classify_subgroups,
    conjugacy_classes_of_elements,
    direct_product,
    group_from_cayley,
    group_from_permutations,
    min_generator_count,
)
from .lattice import IntegerLattice, hermite_normal_form

__all__ = [name for name in dir() if not name.startswith("_")]
