//! Characteristic polynomials of the adjacency, Laplacian and signless
//! Laplacian matrices of generalized coronas: the Schur-complement theorem
//! path, an explicit oracle, equal-coronal fast paths, closed-form
//! corollaries, and numeric roots for display.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::polyrat::IntMatrix;

mod cospectral;
mod fast;
mod lht;
mod printed;
mod report;
mod roots;
mod theorem;

pub use cospectral::{cospectral_family, search_equal_coronal, CospectralOptions, CospectralReport};
pub use fast::{
    block_structured_charpoly, cluster_charpolys, equal_coronal_charpoly, induced_profile, laplacian_block_corollary,
    laplacian_block_params, split_profile, BlockVariant, LaplacianBlockParams,
};
pub use lht::{
    lht_charpoly, lht_closed_form, lht_closed_form_as_printed, lht_instance_complete, lht_instance_complete_bipartite,
    perturbed_laplacian, LhtProfile,
};
pub use printed::{
    block_cubic, corrected_kpq_laplacian, corrected_semiregular_adjacency, corrected_km_laplacian, printed_kpq_adjacency, printed_kpq_laplacian,
    printed_km_adjacency, printed_km_laplacian, printed_semiregular_adjacency, printed_semiregular_laplacian,
    EigenFamily, SemiRegularPart,
};
pub use report::{charpoly_report, CharPolyReport, ReportOptions, Verdict};
pub use roots::{numeric_roots, Root};
pub use theorem::{
    adjacency_charpoly, base_matrix, constituent_matrix, constituents, laplacian_charpoly, oracle_charpoly,
    oracle_charpoly_with, signless_charpoly, theorem_charpoly, theorem_charpoly_with, Constituent,
    DEFAULT_ORACLE_LIMIT, DEFAULT_THEOREM_LIMIT,
};

/// The three graph matrices whose spectra are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralKind {
    Adjacency,
    Laplacian,
    Signless,
}

impl SpectralKind {
    pub const ALL: [SpectralKind; 3] = [SpectralKind::Adjacency, SpectralKind::Laplacian, SpectralKind::Signless];

    pub fn name(self) -> &'static str {
        match self {
            SpectralKind::Adjacency => "adjacency",
            SpectralKind::Laplacian => "laplacian",
            SpectralKind::Signless => "signless",
        }
    }

    pub fn matrix(self, g: &Graph) -> IntMatrix {
        g.matrix(self.into())
    }
}

impl From<SpectralKind> for MatrixKind {
    fn from(k: SpectralKind) -> Self {
        match k {
            SpectralKind::Adjacency => MatrixKind::Adjacency,
            SpectralKind::Laplacian => MatrixKind::Laplacian,
            SpectralKind::Signless => MatrixKind::Signless,
        }
    }
}

impl fmt::Display for SpectralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpectralKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" | "A" => Ok(SpectralKind::Adjacency),
            "laplacian" | "L" => Ok(SpectralKind::Laplacian),
            "signless" | "Q" => Ok(SpectralKind::Signless),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}
