//! Partitions, tableaux, tabloid modules and the Specht representations of
//! symmetric groups.

mod module;
mod partition;
mod tableau;

pub use module::{
    polytabloid, specht_on, specht_rep, tabloid_module, tabloid_module_on, tabloids, young_group,
    young_tensor, young_tensor_on, SpechtData,
};
pub use partition::{
    compositions, p_count, partition_generating_coefficients, partitions, Composition, IntegerPartition,
};
pub use tableau::{all_tableaux, column_group, standard_tableaux_count, ColumnPermutation, Tableau, Tabloid};
