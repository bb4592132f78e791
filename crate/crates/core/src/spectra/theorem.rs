use std::collections::HashMap;

use crate::coronal::{coronal_from_adjugate, IndexSet};
use crate::corona::{build, CopySpec, CoronaSpec};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::polyrat::{charpoly_and_adjugate_with, charpoly_with, polymatrix_det_with, IntMatrix, Poly, PolyMatrix, RatFun};

use super::SpectralKind;

/// Vertex bound for the oracle unless overridden.
pub const DEFAULT_ORACLE_LIMIT: usize = 64;
/// Vertex bound for the theorem path unless overridden.
pub const DEFAULT_THEOREM_LIMIT: usize = 256;

/// `M(H)` plus `R_T` for the Laplacian kinds.
pub fn constituent_matrix(copy: &CopySpec, kind: SpectralKind) -> IntMatrix {
    let g = copy.graph();
    match kind {
        SpectralKind::Adjacency => g.adjacency(),
        SpectralKind::Laplacian | SpectralKind::Signless => {
            let mut m = kind.matrix(g);
            for &i in copy.subset().indices() {
                m[(i, i)] += 1;
            }
            m
        }
    }
}

/// `M(G)` plus `diag(t_i)` for the Laplacian kinds.
pub fn base_matrix(spec: &CoronaSpec, kind: SpectralKind) -> IntMatrix {
    let mut m = kind.matrix(spec.base());
    if kind != SpectralKind::Adjacency {
        for (i, c) in spec.copies().iter().enumerate() {
            m[(i, i)] += c.t() as i64;
        }
    }
    m
}

/// Characteristic polynomial of a copy's matrix and its coronal constrained by `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    pub charpoly: Poly,
    pub coronal: RatFun,
}

/// Evaluates each distinct `(matrix, T)` pair once, in parallel under
/// [`Strategy::Parallel`], and returns one entry per copy.
pub fn constituents(spec: &CoronaSpec, kind: SpectralKind, strategy: Strategy) -> Result<Vec<Constituent>> {
    let keys: Vec<(IntMatrix, IndexSet)> = spec
        .copies()
        .iter()
        .map(|c| (constituent_matrix(c, kind), c.subset().clone()))
        .collect();
    let mut slot: HashMap<&(IntMatrix, IndexSet), usize> = HashMap::new();
    let mut unique: Vec<&(IntMatrix, IndexSet)> = Vec::new();
    let index: Vec<usize> = keys
        .iter()
        .map(|k| {
            *slot.entry(k).or_insert_with(|| {
                unique.push(k);
                unique.len() - 1
            })
        })
        .collect();
    // nested parallelism is left to the outer map
    let inner = Strategy::Sequential;
    let values = strategy.try_map(&unique, |(m, t)| -> Result<Constituent> {
        if t.is_empty() {
            return Ok(Constituent {
                charpoly: charpoly_with(m, inner)?,
                coronal: RatFun::zero(),
            });
        }
        let (p, adj) = charpoly_and_adjugate_with(m, inner)?;
        let coronal = coronal_from_adjugate(&p, &adj, t)?;
        Ok(Constituent { charpoly: p, coronal })
    })?;
    Ok(index.into_iter().map(|i| values[i].clone()).collect())
}

/// Characteristic polynomial of the corona through the Schur complement:
/// `∏ P_i(x) · det(xI − M_base − diag(Γ_i))`, with row `i` cleared by the
/// reduced denominator `q_i` of `Γ_i` and `∏ P_i/q_i` divided exactly.
pub fn theorem_charpoly(spec: &CoronaSpec, kind: SpectralKind) -> Result<Poly> {
    theorem_charpoly_with(spec, kind, Strategy::default())
}

pub fn theorem_charpoly_with(spec: &CoronaSpec, kind: SpectralKind, strategy: Strategy) -> Result<Poly> {
    let parts = constituents(spec, kind, strategy)?;
    let base = base_matrix(spec, kind);
    let n = spec.n();
    let mut cleared = PolyMatrix::zeros(n, n);
    let mut prefactor = Poly::one();
    for (i, part) in parts.iter().enumerate() {
        let (p, q) = (part.coronal.num(), part.coronal.den());
        for j in 0..n {
            let entry = if i == j {
                &(&Poly::from_i64s(&[-base[(i, i)], 1]) * q) - p
            } else {
                q.scale(&crate::polyrat::rational(-base[(i, j)]))
            };
            cleared[(i, j)] = entry;
        }
        prefactor = &prefactor * &part.charpoly.div_exact(q)?;
    }
    let det = polymatrix_det_with(&cleared, strategy)?;
    Ok(&prefactor * &det)
}

pub fn adjacency_charpoly(spec: &CoronaSpec) -> Result<Poly> {
    theorem_charpoly(spec, SpectralKind::Adjacency)
}

pub fn laplacian_charpoly(spec: &CoronaSpec) -> Result<Poly> {
    theorem_charpoly(spec, SpectralKind::Laplacian)
}

pub fn signless_charpoly(spec: &CoronaSpec) -> Result<Poly> {
    theorem_charpoly(spec, SpectralKind::Signless)
}

/// Characteristic polynomial of the explicitly built corona's matrix.
pub fn oracle_charpoly(spec: &CoronaSpec, kind: SpectralKind, bound: usize) -> Result<Poly> {
    oracle_charpoly_with(spec, kind, bound, Strategy::default())
}

pub fn oracle_charpoly_with(spec: &CoronaSpec, kind: SpectralKind, bound: usize, strategy: Strategy) -> Result<Poly> {
    let size = spec.total_vertices();
    if size > bound {
        return Err(Error::SizeBoundExceeded { size, bound });
    }
    charpoly_with(&kind.matrix(&build(spec)), strategy)
}
