//! Closed-form characteristic polynomials for special copy families, in
//! the shape they are usually stated: a fixed prefactor times one low-degree
//! factor per base eigenvalue. Products over base eigenvalues are formed
//! exactly from the base characteristic polynomial, so irrational
//! eigenvalues never appear.
//!
//! The `printed_*` functions reproduce the statements as typeset, including
//! known misprints; the `corrected_*` functions are the versions that agree
//! with direct computation.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{semiregular_params, two_coloring, BlockProfile, Graph};
use crate::polyrat::{charpoly, rational, Poly};

use super::fast::BlockVariant;

/// Polynomial family `a(x) + λ·b(x)` in an eigenvalue `λ`, with the
/// denominator the closed form divides by (`1` when there is none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenFamily {
    pub a: Poly,
    pub b: Poly,
    pub denominator: Poly,
}

impl EigenFamily {
    fn new(a: Poly, b: Poly) -> Self {
        Self {
            a,
            b,
            denominator: Poly::one(),
        }
    }

    /// `∏_j (a + λ_j b)` over the roots `λ_j` of `charpoly`:
    /// `Σ c_k a^k (−b)^(n−k)`.
    pub fn product_over_roots(&self, charpoly: &Poly) -> Poly {
        let n = charpoly.degree().unwrap_or(0);
        charpoly.substitute_cleared(&self.a, &-&self.b, n)
    }

    /// The factor for one concrete eigenvalue.
    pub fn at(&self, lambda: &BigRational) -> Poly {
        &self.a + &self.b.scale(lambda)
    }
}

fn p(c: &[i64]) -> Poly {
    Poly::from_i64s(c)
}

fn power_of_linear(root: i64, e: usize) -> Poly {
    p(&[-root, 1]).pow(e)
}

/// `x·d − N` and `−d` for the block-structured adjacency corollary.
pub fn block_cubic(profile: &BlockProfile, variant: BlockVariant) -> EigenFamily {
    let BlockProfile { a1, a2, a3, a4, n1, n2 } = profile;
    let t = rational(*n1 as i64);
    let h = rational((*n1 + *n2) as i64);
    let d = Poly::new(vec![a1 * a4 - a2 * a3, -(a1 + a4), rational(1)]);
    let num = match variant {
        BlockVariant::Full => Poly::new(vec![&t * (a2 - a4) + (&h - &t) * (a3 - a1), h.clone()]),
        BlockVariant::Induced => Poly::new(vec![-(&t * a4), t.clone()]),
    };
    EigenFamily {
        a: &(&Poly::x() * &d) - &num,
        b: -&d,
        denominator: d,
    }
}

/// `(x+1)^{n(m−2)} · ∏_j (x³ − (m+λ_j−2)x² + ((m−2)λ_j − m + 1 − t)x + (m−1)λ_j + t(m−t−1))`
/// for copies of `K_m` joined on `t` vertices.
pub fn printed_km_adjacency(base: &Graph, m: usize, t: usize) -> Result<Poly> {
    if m < 2 || t > m {
        return Err(Error::Precondition(format!("needs m >= 2 and t <= m, got m = {m}, t = {t}")));
    }
    let (mi, ti) = (m as i64, t as i64);
    let family = EigenFamily::new(
        p(&[ti * (mi - ti - 1), 1 - mi - ti, 2 - mi, 1]),
        p(&[mi - 1, mi - 2, -1]),
    );
    let n = base.n();
    Ok(&power_of_linear(-1, n * (m - 2)) * &family.product_over_roots(&charpoly(&base.adjacency())?))
}

/// `x^{n(p+q−3)} · ∏_j (x⁴ − λ_j x³ − (pq+s1+s2)x² + (pqλ_j − 2s1s2)x + (s1+s2)pq − s1²q − s2²p)`
/// for copies of `K_{p,q}` joined on `s1` vertices of one side and `s2` of the other.
pub fn printed_kpq_adjacency(base: &Graph, pp: usize, q: usize, s1: usize, s2: usize) -> Result<Poly> {
    if pp + q < 3 || s1 > pp || s2 > q {
        return Err(Error::Precondition("needs p + q >= 3, s1 <= p, s2 <= q".into()));
    }
    let (pi, qi, a, b) = (pp as i64, q as i64, s1 as i64, s2 as i64);
    let family = EigenFamily::new(
        p(&[(a + b) * pi * qi - a * a * qi - b * b * pi, -2 * a * b, -(pi * qi + a + b), 0, 1]),
        p(&[0, pi * qi, 0, -1]),
    );
    let n = base.n();
    Ok(&power_of_linear(0, n * (pp + q - 3)) * &family.product_over_roots(&charpoly(&base.adjacency())?))
}

/// Which semi-regular corollary: all vertices joined, or the first part only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemiRegularPart {
    Full,
    FirstPart,
}

/// `P_H^n / (x² − r1r2)^n` times, per base eigenvalue, either
/// `x³ − λx² − (r1r2 + n1 + n2)x + r1r2λ + 2n1r1` (all joined) or
/// `x³ − λx² − (n1 + r1r2)x + r1r2λ` (first part joined).
pub fn printed_semiregular_adjacency(base: &Graph, h: &Graph, part: SemiRegularPart) -> Result<Poly> {
    semiregular_adjacency(base, h, part, 1)
}

/// The all-joined form with constant `r1r2λ − 2n1r1`.
pub fn corrected_semiregular_adjacency(base: &Graph, h: &Graph) -> Result<Poly> {
    semiregular_adjacency(base, h, SemiRegularPart::Full, -1)
}

fn semiregular_adjacency(base: &Graph, h: &Graph, part: SemiRegularPart, sign: i64) -> Result<Poly> {
    let sr = semiregular_params(h).ok_or_else(|| Error::Precondition("copy is not semi-regular bipartite".into()))?;
    let (n1, n2, r1, r2) = (sr.n1 as i64, sr.n2 as i64, sr.r1 as i64, sr.r2 as i64);
    let a = match part {
        SemiRegularPart::Full => p(&[sign * 2 * n1 * r1, -(r1 * r2 + n1 + n2), 0, 1]),
        SemiRegularPart::FirstPart => p(&[0, -(n1 + r1 * r2), 0, 1]),
    };
    let family = EigenFamily::new(a, p(&[r1 * r2, 0, -1]));
    let n = base.n();
    let num = &charpoly(&h.adjacency())?.pow(n) * &family.product_over_roots(&charpoly(&base.adjacency())?);
    num.div_exact(&p(&[-r1 * r2, 0, 1]).pow(n))
}

/// Laplacian closed form for semi-regular copies joined on the first part:
/// `(x − r2)^{n(n2−n1)} · [∏_{j≥2} (x² − sx + r2(r1+1) − λ_j(WWᵀ))]^n ·
/// ∏_i (x³ − (s+b_i)x² + (s·b_i + r2 − n1)x − r2μ_i)` with `s = r1+r2+1`,
/// `b_i = n1 + μ_i`.
pub fn printed_semiregular_laplacian(base: &Graph, h: &Graph) -> Result<Poly> {
    let sr = semiregular_params(h).ok_or_else(|| Error::Precondition("copy is not semi-regular bipartite".into()))?;
    let side = two_coloring(h).expect("semi-regular graphs are bipartite");
    let xs: Vec<usize> = (0..h.n()).filter(|&v| side[v] == 0).collect();
    let ys: Vec<usize> = (0..h.n()).filter(|&v| side[v] == 1).collect();
    let w = h.adjacency().select(&xs, &ys);
    let wwt = w.mul(&w.transpose())?;
    let (n1, n2, r1, r2) = (sr.n1 as i64, sr.n2 as i64, sr.r1 as i64, sr.r2 as i64);
    let s = r1 + r2 + 1;
    let quad = p(&[r2 * (r1 + 1), -s, 1]);
    let others = charpoly(&wwt)?.compose(&quad).div_exact(&(&quad - &Poly::constant(rational(r1 * r2))))?;
    let n = base.n();
    // x³ − (s + n1)x² + (s·n1 + r2 − n1)x  +  μ(−x² + sx − r2)
    let family = EigenFamily::new(p(&[0, s * n1 + r2 - n1, -(s + n1), 1]), p(&[-r2, s, -1]));
    let body = &others.pow(n) * &family.product_over_roots(&charpoly(&base.laplacian())?);
    let shift = n2 - n1;
    let lin = p(&[-r2, 1]);
    if shift >= 0 {
        Ok(&lin.pow(n * shift as usize) * &body)
    } else {
        body.div_exact(&lin.pow(n * (-shift) as usize))
    }
}

fn km_laplacian(base: &Graph, m: usize, t: usize, x_sign: i64, mu_x_sign: i64) -> Result<Poly> {
    if t == 0 || t >= m {
        return Err(Error::Precondition(format!("needs 1 <= t <= m - 1, got m = {m}, t = {t}")));
    }
    let (mi, ti) = (m as i64, t as i64);
    let family = EigenFamily::new(
        p(&[0, x_sign * (mi + 1) * ti, -(ti + mi + 1), 1]),
        p(&[-ti, mu_x_sign * (mi + 1), -1]),
    );
    let n = base.n();
    let prefactor = &power_of_linear(mi, n * (m - t - 1)) * &power_of_linear(mi + 1, n * (t - 1));
    Ok(&prefactor * &family.product_over_roots(&charpoly(&base.laplacian())?))
}

/// As typeset: `(x−m)^{n(m−t−1)} (x−m−1)^{n(t−1)} · ∏ (x³ − (t+μ+m+1)x² − (m+1)(t+μ)x − tμ)`.
pub fn printed_km_laplacian(base: &Graph, m: usize, t: usize) -> Result<Poly> {
    km_laplacian(base, m, t, -1, -1)
}

/// Same prefactor with the cubic `x³ − (t+μ+m+1)x² + (m+1)(t+μ)x − tμ`.
pub fn corrected_km_laplacian(base: &Graph, m: usize, t: usize) -> Result<Poly> {
    km_laplacian(base, m, t, 1, 1)
}

fn kpq_laplacian(base: &Graph, pp: usize, q: usize, printed: bool) -> Result<Poly> {
    if pp == 0 || q == 0 {
        return Err(Error::Precondition("needs p, q >= 1".into()));
    }
    let (pi, qi) = (pp as i64, q as i64);
    let s = pi + qi + 1;
    let (c, roots) = if printed { (qi, (pi + 1, qi)) } else { (pi, (qi + 1, pi)) };
    let family = EigenFamily::new(p(&[0, s * pi, -(2 * pi + qi + 1), 1]), p(&[-c, s, -1]));
    let n = base.n();
    let prefactor = &power_of_linear(roots.0, n * (pp - 1)) * &power_of_linear(roots.1, n * (q - 1));
    Ok(&prefactor * &family.product_over_roots(&charpoly(&base.laplacian())?))
}

/// As typeset, reading the multiplicities per copy:
/// `(x−p−1)^{n(p−1)} (x−q)^{n(q−1)} · ∏ (x³ − (2p+μ+q+1)x² + (p+q+1)(p+μ)x − qμ)`.
pub fn printed_kpq_laplacian(base: &Graph, pp: usize, q: usize) -> Result<Poly> {
    kpq_laplacian(base, pp, q, true)
}

/// `(x−q−1)^{n(p−1)} (x−p)^{n(q−1)} · ∏ (x³ − (2p+μ+q+1)x² + (p+q+1)(p+μ)x − pμ)`.
pub fn corrected_kpq_laplacian(base: &Graph, pp: usize, q: usize) -> Result<Poly> {
    kpq_laplacian(base, pp, q, false)
}
