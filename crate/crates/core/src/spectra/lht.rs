use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coronal::IndexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polyrat::{charpoly, rational, IntMatrix, Poly};

/// `L(H) + R_T`, where `R_T` is the 0/1 diagonal with ones on `T`.
pub fn perturbed_laplacian(h: &Graph, t: &IndexSet) -> Result<IntMatrix> {
    if t.source_n() != h.n() {
        return Err(Error::DimensionMismatch(format!(
            "subset over {} vertices for a graph on {}",
            t.source_n(),
            h.n()
        )));
    }
    let mut m = h.laplacian();
    for &i in t.indices() {
        m[(i, i)] += 1;
    }
    Ok(m)
}

/// `L_H^T(x)`, the characteristic polynomial of `L(H) + R_T`.
pub fn lht_charpoly(h: &Graph, t: &IndexSet) -> Result<Poly> {
    charpoly(&perturbed_laplacian(h, t)?)
}

/// Parameters of a graph on `n` vertices whose adjacency splits as
/// `[[A1, A2], [A2ᵀ, A4]]` with `|T| = t`, `A2` having row sums `a2` and
/// column sums `a3`, and `A4 = t1·I + t2·J + t3·A2ᵀA2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LhtProfile {
    pub n: usize,
    pub t: usize,
    pub a2: BigRational,
    pub a3: BigRational,
    pub t1: BigRational,
    pub t2: BigRational,
    pub t3: BigRational,
}

impl LhtProfile {
    /// `c = t2(n − t) + t3·a2·a3 + a3`
    pub fn c(&self) -> BigRational {
        &self.t2 * rational((self.n - self.t) as i64) + &self.t3 * &self.a2 * &self.a3 + &self.a3
    }

    fn check(&self, pairs: &[(BigRational, BigRational)]) -> Result<()> {
        if self.t == 0 || self.t > self.n {
            return Err(Error::Precondition(format!("needs 1 <= t <= n, got t = {}", self.t)));
        }
        if self.a3.is_zero() {
            return Err(Error::Precondition("a3 must be nonzero".into()));
        }
        if pairs.len() != self.t - 1 {
            return Err(Error::PairCountMismatch {
                expected: self.t - 1,
                got: pairs.len(),
            });
        }
        Ok(())
    }
}

/// `(x − c)^{n−2t} · (x² − (a2+a3+1)x + a3) ·
/// ∏_{i≥2} [(x − c + t3λ_i)(x − a2 − 1 − μ_i) − λ_i]`, where each pair
/// `(μ_i, λ_i)` holds eigenvalues of `L(F1)` and `A2A2ᵀ` on a common
/// eigenvector orthogonal to the all-ones vector.
///
/// When `n < 2t` the power of `(x − c)` is divided out exactly.
pub fn lht_closed_form(profile: &LhtProfile, pairs: &[(BigRational, BigRational)]) -> Result<Poly> {
    profile.check(pairs)?;
    let c = profile.c();
    let one = BigRational::one();
    let a2p1 = &profile.a2 + &one;
    let lead = Poly::new(vec![profile.a3.clone(), -(&a2p1 + &profile.a3), one.clone()]);
    let mut body = lead;
    for (mu, lambda) in pairs {
        let left = Poly::linear_root(&(&c - &profile.t3 * lambda));
        let right = Poly::linear_root(&(&a2p1 + mu));
        body = &body * &(&(&left * &right) - &Poly::constant(lambda.clone()));
    }
    apply_c_power(profile, &c, body)
}

/// The same product with the leading quadratic
/// `x² − ((n−t)t2 + a3 − (t2/a3)·t·a2 + a2 + 1)x + (a2+1)((n−t)t2 + a3 − (t2/a3)·t·a2)`
/// and per-pair constant `(c + t3λ_i)(a2 + μ_i + 1) − λ_i`, as typeset.
pub fn lht_closed_form_as_printed(profile: &LhtProfile, pairs: &[(BigRational, BigRational)]) -> Result<Poly> {
    profile.check(pairs)?;
    let c = profile.c();
    let one = BigRational::one();
    let a2p1 = &profile.a2 + &one;
    let nt = rational((profile.n - profile.t) as i64);
    let inner = &nt * &profile.t2 + &profile.a3
        - &profile.t2 / &profile.a3 * rational(profile.t as i64) * &profile.a2;
    let lead = Poly::new(vec![&a2p1 * &inner, -(&inner + &a2p1), one.clone()]);
    let mut body = lead;
    for (mu, lambda) in pairs {
        let shift = &a2p1 + mu;
        let linear = -(&c - &profile.t3 * lambda + &shift);
        let constant = (&c + &profile.t3 * lambda) * &shift - lambda;
        body = &body * &Poly::new(vec![constant, linear, one.clone()]);
    }
    apply_c_power(profile, &c, body)
}

fn apply_c_power(profile: &LhtProfile, c: &BigRational, body: Poly) -> Result<Poly> {
    let lin = Poly::linear_root(c);
    let (n, t2) = (profile.n, 2 * profile.t);
    if n >= t2 {
        Ok(&lin.pow(n - t2) * &body)
    } else {
        body.div_exact(&lin.pow(t2 - n))
    }
}

/// `K_m` split at `T` of size `t`: `F1 = K_t`, `A2 = J`, `A4 = J − I`;
/// the pairs are `(t, 0)` repeated `t − 1` times.
pub fn lht_instance_complete(m: usize, t: usize) -> Result<(LhtProfile, Vec<(BigRational, BigRational)>)> {
    if t == 0 || t >= m {
        return Err(Error::Precondition(format!("needs 1 <= t <= m - 1, got m = {m}, t = {t}")));
    }
    let profile = LhtProfile {
        n: m,
        t,
        a2: rational((m - t) as i64),
        a3: rational(t as i64),
        t1: rational(-1),
        t2: rational(1),
        t3: rational(0),
    };
    Ok((profile, vec![(rational(t as i64), rational(0)); t - 1]))
}

/// `K_{p,q}` with `T` the side of size `p`: `F1` edgeless, `A2 = J`,
/// `A4 = 0`; the pairs are `(0, 0)` repeated `p − 1` times.
pub fn lht_instance_complete_bipartite(p: usize, q: usize) -> Result<(LhtProfile, Vec<(BigRational, BigRational)>)> {
    if p == 0 || q == 0 {
        return Err(Error::Precondition("needs p, q >= 1".into()));
    }
    let profile = LhtProfile {
        n: p + q,
        t: p,
        a2: rational(q as i64),
        a3: rational(p as i64),
        t1: rational(0),
        t2: rational(0),
        t3: rational(0),
    };
    Ok((profile, vec![(rational(0), rational(0)); p - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: Vec<usize>, n: usize) -> IndexSet {
        IndexSet::new(v, n).unwrap()
    }

    #[test]
    fn small_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(lht_charpoly(&k1, &IndexSet::all(1)).unwrap(), Poly::from_i64s(&[-1, 1]));
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(lht_charpoly(&k2, &IndexSet::all(2)).unwrap(), Poly::from_i64s(&[3, -4, 1]));
    }

    #[test]
    fn complete_graph_identity() {
        for m in 2..=6 {
            for t in 1..m {
                let km = Graph::complete(m).unwrap();
                let direct = lht_charpoly(&km, &set((0..t).collect(), m)).unwrap();
                let mi = m as i64;
                let expected = &(&Poly::from_i64s(&[-mi, 1]).pow(m - t - 1)
                    * &Poly::from_i64s(&[-mi - 1, 1]).pow(t - 1))
                    * &Poly::from_i64s(&[t as i64, -mi - 1, 1]);
                assert_eq!(direct, expected);
                let (profile, pairs) = lht_instance_complete(m, t).unwrap();
                assert_eq!(lht_closed_form(&profile, &pairs).unwrap(), direct, "m = {m}, t = {t}");
            }
        }
    }

    #[test]
    fn complete_bipartite_instances() {
        for (p, q) in [(1, 1), (1, 3), (2, 3), (3, 2), (3, 3), (2, 4)] {
            let g = Graph::complete_bipartite(p, q).unwrap();
            let direct = lht_charpoly(&g, &set((0..p).collect(), p + q)).unwrap();
            let (profile, pairs) = lht_instance_complete_bipartite(p, q).unwrap();
            assert_eq!(lht_closed_form(&profile, &pairs).unwrap(), direct, "K_{p},{q}");
        }
    }

    #[test]
    fn printed_leading_quadratic_differs_on_k2() {
        let k2 = Graph::complete(2).unwrap();
        let direct = lht_charpoly(&k2, &set(vec![0], 2)).unwrap();
        assert_eq!(direct, Poly::from_i64s(&[1, -3, 1]));
        let (profile, pairs) = lht_instance_complete_bipartite(1, 1).unwrap();
        assert_eq!(lht_closed_form(&profile, &pairs).unwrap(), direct);
        assert_eq!(
            lht_closed_form_as_printed(&profile, &pairs).unwrap(),
            Poly::from_i64s(&[2, -3, 1])
        );
    }

    #[test]
    fn printed_form_fails_for_complete_graphs() {
        let (profile, pairs) = lht_instance_complete(4, 2).unwrap();
        let direct = lht_charpoly(&Graph::complete(4).unwrap(), &set(vec![0, 1], 4)).unwrap();
        assert_ne!(lht_closed_form_as_printed(&profile, &pairs).unwrap(), direct);
    }

    #[test]
    fn pair_count_checked() {
        let (profile, _) = lht_instance_complete(5, 3).unwrap();
        assert_eq!(
            lht_closed_form(&profile, &[]),
            Err(Error::PairCountMismatch { expected: 2, got: 0 })
        );
    }

    #[test]
    fn collapse_with_t_half() {
        // 2K_2 matched across T = {0, 1}: t = n/2, t2 = t3 = 0, c = a3
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let profile = LhtProfile {
            n: 4,
            t: 2,
            a2: rational(1),
            a3: rational(1),
            t1: rational(0),
            t2: rational(0),
            t3: rational(0),
        };
        // L(F1) = 0, A2A2ᵀ = I: the second pair is (0, 1)
        let got = lht_closed_form(&profile, &[(rational(0), rational(1))]).unwrap();
        assert_eq!(got, lht_charpoly(&g, &set(vec![0, 1], 4)).unwrap());
    }
}
