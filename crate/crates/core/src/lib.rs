pub mod cliffmunn;
pub mod elements;
pub mod error;
pub mod green;
pub mod lattice;
pub mod linrep;
pub mod specht;

pub use error::{Error, Result};
