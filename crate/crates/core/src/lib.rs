//! Generalized coronas of graphs: construction, coronals of matrices
//! constrained by index sets, and exact characteristic polynomials of the
//! adjacency, Laplacian and signless Laplacian matrices.

pub mod corona;
pub mod coronal;
pub mod discrepancy;
pub mod error;
pub mod exec;
pub mod graph;
pub mod polyrat;
pub mod spectra;
pub mod suite;
pub mod table;

pub use error::{Error, Result};
pub use exec::Strategy;
