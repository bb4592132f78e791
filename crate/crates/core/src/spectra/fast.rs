use num_rational::BigRational;
use num_traits::Zero;

use crate::coronal::{coronal_generic, IndexSet};
use crate::corona::{CopySpec, CoronaSpec};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::graph::{block_profile, BlockProfile, Graph};
use crate::polyrat::{charpoly, rational, IntMatrix, Poly};

use super::printed::{block_cubic, EigenFamily};
use super::theorem::{constituents, Constituent};
use super::SpectralKind;

/// Characteristic polynomial when every copy has the same coronal (and, for
/// the Laplacian kinds, the same `t`): `∏ P_i · ∏_j (x − t − λ_j − Γ)`,
/// assembled by substituting `Γ = p/q` into the base characteristic
/// polynomial instead of taking an `n×n` determinant.
pub fn equal_coronal_charpoly(spec: &CoronaSpec, kind: SpectralKind) -> Result<Poly> {
    let parts = constituents(spec, kind, Strategy::default())?;
    let first = &parts[0];
    if parts.iter().any(|p| p.coronal != first.coronal) {
        return Err(Error::CoronalsNotEqual);
    }
    let t = match kind {
        SpectralKind::Adjacency => 0,
        _ => {
            let t = spec.copies()[0].t();
            if spec.copies().iter().any(|c| c.t() != t) {
                return Err(Error::CoronalsNotEqual);
            }
            t as i64
        }
    };
    let n = spec.n();
    let base = charpoly(&kind.matrix(spec.base()))?;
    let (p, q) = (first.coronal.num(), first.coronal.den());
    let shifted = &(&Poly::from_i64s(&[-t, 1]) * q) - p;
    let det = base.substitute_cleared(&shifted, q, n);
    let prefactor = constituent_prefactor(&parts, q)?;
    Ok(&prefactor * &det)
}

fn constituent_prefactor(parts: &[Constituent], q: &Poly) -> Result<Poly> {
    parts
        .iter()
        .map(|c| c.charpoly.div_exact(q))
        .try_fold(Poly::one(), |acc, p| Ok(&acc * &p?))
}

/// Block profile of `A(H)` with `first` moved to the front.
pub fn split_profile(h: &Graph, first: &IndexSet) -> Result<BlockProfile> {
    let mut order = first.indices().to_vec();
    order.extend(first.complement());
    block_profile(&h.adjacency().permute(&order), first.len())?
        .profile()
        .ok_or_else(|| Error::Precondition("blocks do not have constant row sums".into()))
}

/// Block profile of a copy with `T` as the first block.
pub fn induced_profile(copy: &CopySpec) -> Result<BlockProfile> {
    split_profile(copy.graph(), copy.subset())
}

/// Which coronal the block-structured corollary uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockVariant {
    /// Every vertex of `H_i` is joined; the profile describes some 2-block split.
    Full,
    /// `T_i` is the first block.
    Induced,
}

/// Adjacency characteristic polynomial for copies that share one block
/// profile: `∏ P_{H_i} / d^n · ∏_j (cubic in λ_j)` with
/// `d = x² − k1·x + k2`, `k1 = a1 + a4`, `k2 = a1a4 − a2a3`.
pub fn block_structured_charpoly(spec: &CoronaSpec, profiles: &[BlockProfile], variant: BlockVariant) -> Result<Poly> {
    let n = spec.n();
    if profiles.len() != n {
        return Err(Error::CopyCountMismatch {
            expected: n,
            got: profiles.len(),
        });
    }
    let profile = &profiles[0];
    if let Some(other) = profiles.iter().find(|p| *p != profile) {
        return Err(Error::HeterogeneousProfiles(format!("{profile:?} vs {other:?}")));
    }
    for copy in spec.copies() {
        if copy.h() != profile.n1 + profile.n2 {
            return Err(Error::HeterogeneousProfiles(format!(
                "copy on {} vertices for blocks of {} and {}",
                copy.h(),
                profile.n1,
                profile.n2
            )));
        }
        let ok = match variant {
            BlockVariant::Full => copy.t() == copy.h(),
            BlockVariant::Induced => copy.t() == profile.n1 && &induced_profile(copy)? == profile,
        };
        if !ok {
            return Err(Error::Precondition(format!(
                "copy does not fit the {variant:?} block variant"
            )));
        }
    }
    let family = block_cubic(profile, variant);
    let cubics = family.product_over_roots(&charpoly(&spec.base().adjacency())?);
    let hs = spec
        .copies()
        .iter()
        .map(|c| charpoly(&c.graph().adjacency()))
        .try_fold(Poly::one(), |acc, p| Ok::<_, Error>(&acc * &p?))?;
    (&hs * &cubics).div_exact(&family.denominator.pow(n))
}

/// `(t, a2, a3)` of a copy: `|T|` and the row sums of the blocks of `A(H)`
/// joining `T` to the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianBlockParams {
    pub t: usize,
    pub a2: BigRational,
    pub a3: BigRational,
}

impl LaplacianBlockParams {
    /// `s = a2 + a3 + 1`
    pub fn s(&self) -> BigRational {
        &self.a2 + &self.a3 + rational(1)
    }
}

pub fn laplacian_block_params(copy: &CopySpec) -> Result<LaplacianBlockParams> {
    let t = copy.t();
    if t == 0 || t == copy.h() {
        return Ok(LaplacianBlockParams {
            t,
            a2: BigRational::zero(),
            a3: BigRational::zero(),
        });
    }
    let mut order = copy.subset().indices().to_vec();
    order.extend(copy.subset().complement());
    let rs = block_profile(&copy.graph().adjacency().permute(&order), t)?;
    match (rs.blocks[1], rs.blocks[2]) {
        (Some(a2), Some(a3)) => Ok(LaplacianBlockParams {
            t,
            a2: rational(a2),
            a3: rational(a3),
        }),
        _ => Err(Error::Precondition(
            "edges between T and the rest are not biregular".into(),
        )),
    }
}

/// Laplacian characteristic polynomial for copies sharing `(t, a2, a3)`:
/// `∏ L_{H_i}^{T_i} / (x² − sx + a3)^n · ∏_j (x³ − (s+t+μ_j)x² + (s(t+μ_j) + a3 − t)x − a3μ_j)`
/// with `s = a2 + a3 + 1`.
pub fn laplacian_block_corollary(spec: &CoronaSpec) -> Result<Poly> {
    let params: Vec<LaplacianBlockParams> = spec.copies().iter().map(laplacian_block_params).collect::<Result<_>>()?;
    let p = &params[0];
    if let Some(other) = params.iter().find(|q| *q != p) {
        return Err(Error::HeterogeneousProfiles(format!("{p:?} vs {other:?}")));
    }
    let family = laplacian_block_cubic(p);
    let cubics = family.product_over_roots(&charpoly(&spec.base().laplacian())?);
    let lhts = spec
        .copies()
        .iter()
        .map(|c| super::lht_charpoly(c.graph(), c.subset()))
        .try_fold(Poly::one(), |acc, q| Ok::<_, Error>(&acc * &q?))?;
    (&lhts * &cubics).div_exact(&family.denominator.pow(spec.n()))
}

pub(super) fn laplacian_block_cubic(p: &LaplacianBlockParams) -> EigenFamily {
    let s = p.s();
    let t = rational(p.t as i64);
    let a3 = p.a3.clone();
    // x³ − (s+t)x² + (st + a3 − t)x  +  μ(−x² + sx − a3)
    let a = Poly::new(vec![BigRational::zero(), &s * &t + &a3 - &t, -(&s + &t), rational(1)]);
    let b = Poly::new(vec![-a3.clone(), s.clone(), rational(-1)]);
    let denominator = Poly::new(vec![a3, -s, rational(1)]);
    EigenFamily { a, b, denominator }
}

/// Adjacency and Laplacian characteristic polynomials of the cluster `G{H}`:
/// `P_H^n · P_G(x − Γ_H^u)` and `(L_H^u)^n · L_G(x − 1 − Γ_{L(H)+R}^u)`, cleared.
pub fn cluster_charpolys(g: &Graph, h: &Graph) -> Result<(Poly, Poly)> {
    let root = h.root().ok_or(Error::MissingRoot)?;
    let u = IndexSet::new(vec![root], h.n())?;
    let n = g.n();
    let assemble = |base: &IntMatrix, m: &IntMatrix, shift: i64| -> Result<Poly> {
        let gamma = coronal_generic(m, &u)?;
        let (p, q) = (gamma.num(), gamma.den());
        let inner = &(&Poly::from_i64s(&[-shift, 1]) * q) - p;
        let det = charpoly(base)?.substitute_cleared(&inner, q, n);
        Ok(&charpoly(m)?.div_exact(q)?.pow(n) * &det)
    };
    let adjacency = assemble(&g.adjacency(), &h.adjacency(), 0)?;
    let mut lr = h.laplacian();
    lr[(root, root)] += 1;
    let laplacian = assemble(&g.laplacian(), &lr, 1)?;
    Ok((adjacency, laplacian))
}
