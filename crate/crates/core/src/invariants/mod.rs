//! Structural invariants of concrete finite groups: subgroups, quotients,
//! central series, abelian-structure recognition, generating tuples.

mod analysis;
mod quotient;
mod recognize;
mod series;
mod subgroup;

pub use analysis::{
    analyze, central_quotient_order, derived, structure_triple, GroupAnalysis, StructureTriple,
};
pub use quotient::{quotient, Quotient};
pub use recognize::{
    abelian_basis, abelian_coordinates, abelian_structure, exponent, min_generators,
    minimal_generating_tuples,
};
pub use series::{
    all_subgroups, conjugacy_class_index, conjugacy_classes, frattini_by_hyperplanes,
    frattini_subgroup, lower_central_series, maximal_subgroups, nilpotency_class, p_group_prime,
    upper_central_next, upper_central_series,
};
pub use subgroup::{
    center, commutator_set, commutator_subgroup_with, commutator_with, derived_subgroup,
    StructureError, Subgroup,
};
