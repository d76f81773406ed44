//! Reduction to maximal subgroups, induction back up, and the resulting
//! catalogs of irreducible representations of inverse monoids.

mod catalog;
mod induce;
mod reduce;
mod semisimple;

pub use catalog::{
    cm_catalog, cm_roundtrip_check, composition_poset, factor_label, refines, renner_permutohedron_catalog,
    sgl_mapping_rep, Catalog, CatalogEntry, CatalogMonoid, CompositionPosetReport, RennerReport,
    YoungStructure,
};
pub use induce::{annihilator, induce, induce_raw, induce_raw_with, induce_sgl, quotient_by_annihilator, InducedRaw};
pub use reduce::{apex, reduce, support, ApexReport, ReducedRep};
pub use semisimple::{
    character_multiset, decompose, is_group, is_inverse_monoid, semisimple_predicate, Semisimplicity,
    SemisimpleVerdict,
};

#[cfg(test)]
mod tests;
