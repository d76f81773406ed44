//! Exact linear algebra over `Q` and representations of finite monoids.

mod construct;
mod matrix;
mod rep;
mod search;
mod serialize;
mod subspace;

pub use construct::{exterior_power, inner_tensor, outer_tensor, subsets_of_size};
pub use matrix::{format_rational, parse_rational, q, q_frac, Matrix, Rational, Rref};
pub use rep::{char_equal, mapping_matrix, mapping_rep, Character, PointMap, Representation};
pub use search::{
    characteristic_polynomial, commutant, commutant_dim, commutant_splittings, equivariant_projection,
    find_invariant_subspace, find_invariant_subspace_with, hom_space, intertwiner_space, is_irreducible, iso_test,
    one_dim_invariant_lines, rational_eigenvalues, spin, Irreducibility, IrreducibilityMode, IsoResult,
    LineFamily, SeedOrder, SemisimpleCertificate,
};
pub use serialize::{parse_representation, write_matrix, write_representation};
pub use subspace::{unit_vector, Subspace};
