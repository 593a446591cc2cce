from .nmv import (
    NmvAlgebra,
    check_nmv_axioms,
    derive_ops,
    induced_order,
    check_derived_identities,
    check_structure_facts,
    check_sai,
)
from .residuation import (
    CondResPoset,
    ResiduatedPoset,
    check_crp,
    check_residuated,
    check_properties,
    adjointness_failures,
    check_conditional_adjointness_lemmas,
    check_crp_consequences,
)
from .tables import (
    PartialOrder,
    Directoid,
    validate_partial_order,
    build_directoid,
    is_monotone,
    is_antitone_involution,
)
from .transforms import (
    InvolutivePosetWithProduct,
    nmv_to_crp,
    crp_to_nmv,
    crp_to_nmv_verified,
    poset_to_residuated,
    residuated_to_poset,
)
from .search import (
    enumerate_algebras,
    iter_algebras,
    canonical_form,
    find_counterexamples,
)
from .algebra_file import (
    parse_algebra_file,
    serialize_algebra_file,
    load_structure,
    structure_to_file,
)
from .reports import emit_dot, to_report_document

__all__ = [
    "NmvAlgebra",
    "check_nmv_axioms",
    "derive_ops",
    "induced_order",
    "check_derived_identities",
    "check_structure_facts",
    "check_sai",
    "CondResPoset",
    "ResiduatedPoset",
    "check_crp",
    "check_residuated",
    "check_properties",
    "adjointness_failures",
    "check_conditional_adjointness_lemmas",
    "check_crp_consequences",
    "PartialOrder",
    "Directoid",
    "validate_partial_order",
    "build_directoid",
    "is_monotone",
    "is_antitone_involution",
    "InvolutivePosetWithProduct",
    "nmv_to_crp",
    "crp_to_nmv",
    "crp_to_nmv_verified",
    "poset_to_residuated",
    "residuated_to_poset",
    "enumerate_algebras",
    "iter_algebras",
    "canonical_form",
    "find_counterexamples",
    "parse_algebra_file",
    "serialize_algebra_file",
    "load_structure",
    "structure_to_file",
    "emit_dot",
    "to_report_document",
]
