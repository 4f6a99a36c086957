"""Finite-semigroup toolkit: idempotent-product-free sequences, the
Erdos-Burgess constants I(S) and SI(S), the Davenport constant D(S), and
machine checks of the extremal-sequence structure at small orders."""

from .constants import (
    KIND_DAVENPORT,
    KIND_ERDOS_BURGESS,
    KIND_STRONG_ERDOS_BURGESS,
    ConstantReport,
    davenport,
    erdos_burgess,
    ghw_bound,
    strong_erdos_burgess,
)
from .construct import (
    ExtremalSpec,
    GroupByNil,
    Monogenic,
    NotAssociativeAfterGlue,
    OrderTooLarge,
    adjoin_identity,
    canonical_form,
    chain_glue,
    cyclic_group,
    cyclic_nil,
    enumerate_semigroups,
    extremal_pair,
    group_nil_chain,
    trivial_ideal_extension,
)
from .core import (
    CyclicData,
    ElementId,
    EmptyGeneratorSet,
    FiniteSemigroup,
    InvalidParameters,
    NotAssociative,
    NotClosed,
    NotCommutative,
    SemigroupError,
    cyclic_data,
    format_cayley_table,
    generated_subsemigroup,
    idempotents,
    identity_element,
    is_commutative,
    is_nilsemigroup,
    monogenic,
    parse_cayley_table,
    unique_cycle_idempotent,
    validate,
    zero_element,
)
from .seqprod import (
    DEFAULT_DP_CAP,
    EmptySequence,
    ProductSets,
    Seq,
    SequenceTooLong,
    any_order_products,
    is_strongly_free,
    is_weakly_free,
    natural_order_products,
    ordered_product,
    product_gain,
    product_sets,
)
from .structure import (
    GROUP_BY_NIL_EXTENSION,
    MONOGENIC_ONLY,
    ArchDecomposition,
    ComponentData,
    ExtremalCertificate,
    GeneratorData,
    NotArchimedean,
    NotInNilPart,
    WrongLength,
    archimedean_decomposition,
    divides_power,
    extremal_equivalence,
    extremal_main_form,
    extremal_structure_check,
    is_chain_lower_absorbing,
    kernel_group,
    partial_hom,
)

__all__ = [
    "ArchDecomposition",
    "ComponentData",
    "ConstantReport",
    "CyclicData",
    "DEFAULT_DP_CAP",
    "ElementId",
    "EmptyGeneratorSet",
    "EmptySequence",
    "ExtremalCertificate",
    "ExtremalSpec",
    "FiniteSemigroup",
    "GROUP_BY_NIL_EXTENSION",
    "GeneratorData",
    "GroupByNil",
    "InvalidParameters",
    "KIND_DAVENPORT",
    "KIND_ERDOS_BURGESS",
    "KIND_STRONG_ERDOS_BURGESS",
    "MONOGENIC_ONLY",
    "Monogenic",
    "NotArchimedean",
    "NotAssociative",
    "NotAssociativeAfterGlue",
    "NotClosed",
    "NotCommutative",
    "NotInNilPart",
    "OrderTooLarge",
    "ProductSets",
    "SemigroupError",
    "Seq",
    "SequenceTooLong",
    "WrongLength",
    "adjoin_identity",
    "any_order_products",
    "archimedean_decomposition",
    "canonical_form",
    "chain_glue",
    "cyclic_data",
    "cyclic_group",
    "cyclic_nil",
    "davenport",
    "divides_power",
    "enumerate_semigroups",
    "erdos_burgess",
    "extremal_equivalence",
    "extremal_main_form",
    "extremal_pair",
    "extremal_structure_check",
    "format_cayley_table",
    "generated_subsemigroup",
    "ghw_bound",
    "group_nil_chain",
    "idempotents",
    "identity_element",
    "is_chain_lower_absorbing",
    "is_commutative",
    "is_nilsemigroup",
    "is_strongly_free",
    "is_weakly_free",
    "kernel_group",
    "monogenic",
    "natural_order_products",
    "ordered_product",
    "parse_cayley_table",
    "partial_hom",
    "product_gain",
    "product_sets",
    "strong_erdos_burgess",
    "trivial_ideal_extension",
    "unique_cycle_idempotent",
    "validate",
    "zero_element",
]
