"""Finite fibrous preorders, finite topologies, the conversions between
them, and lazy neighborhood oracles with seeded sampled checking."""

from .core import (
    EquivalenceWitness,
    FinFibrousPreorder,
    SpatialWitness,
    check_axioms,
    find_equivalence,
    find_umap,
    neighborhood,
    preorder_from_json,
    preorder_to_json,
    verify_equivalence,
)
from .functors import (
    GImage,
    NotContinuousError,
    functor_F_obj,
    functor_G_mor,
    functor_G_obj,
    random_spatial_preorder,
    roundtrip_FG,
    roundtrip_GF,
)
from .lazy import (
    ModulusMorphism,
    NeighborhoodOracle,
    Word,
    broken_metric_q,
    broken_padic,
    check_modulus,
    indexed_metric,
    metric_q,
    metric_q2,
    mk_cantor,
    mk_indexed_family,
    mk_metric,
    mk_natural_space,
    mk_normed_group,
    mk_padic,
    mk_tangent_disk,
    morphism_from_modulus,
    named_instance,
    named_modulus,
    natural_metric,
    normed_q,
    sample_check,
)
from .morphisms import (
    FibrousMorphism,
    compose,
    equivalent,
    identity_morphism,
    morphism_from_json,
    morphism_to_json,
    verify_morphism,
)
from .report import AxiomReport, FormatError, StructureError
from .topology import (
    FiniteTopology,
    enumerate_topologies,
    enumerate_topologies_brute,
    enumerate_topologies_closure,
    specialization,
    topology_from_json,
    topology_to_json,
    union_closure,
    validate_topology,
)

__all__ = [
    "AxiomReport",
    "EquivalenceWitness",
    "FibrousMorphism",
    "FinFibrousPreorder",
    "FiniteTopology",
    "FormatError",
    "GImage",
    "ModulusMorphism",
    "NeighborhoodOracle",
    "NotContinuousError",
    "SpatialWitness",
    "StructureError",
    "Word",
    "broken_metric_q",
    "broken_padic",
    "check_axioms",
    "check_modulus",
    "compose",
    "enumerate_topologies",
    "enumerate_topologies_brute",
    "enumerate_topologies_closure",
    "equivalent",
    "find_equivalence",
    "find_umap",
    "functor_F_obj",
    "functor_G_mor",
    "functor_G_obj",
    "identity_morphism",
    "indexed_metric",
    "metric_q",
    "metric_q2",
    "mk_cantor",
    "mk_indexed_family",
    "mk_metric",
    "mk_natural_space",
    "mk_normed_group",
    "mk_padic",
    "mk_tangent_disk",
    "morphism_from_json",
    "morphism_from_modulus",
    "morphism_to_json",
    "named_instance",
    "named_modulus",
    "natural_metric",
    "neighborhood",
    "normed_q",
    "preorder_from_json",
    "preorder_to_json",
    "random_spatial_preorder",
    "roundtrip_FG",
    "roundtrip_GF",
    "sample_check",
    "specialization",
    "topology_from_json",
    "topology_to_json",
    "union_closure",
    "validate_topology",
    "verify_equivalence",
    "verify_morphism",
]
