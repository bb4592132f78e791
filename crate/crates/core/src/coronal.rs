//! Coronals of square matrices constrained by index sets.
//!
//! The coronal of `M` constrained by `α` is `r_α (xI − M)^{-1} r_αᵀ`, the sum
//! of the entries of the principal submatrix of the resolvent on `α`.
//! [`coronal_generic`] computes it from the adjugate and is the reference;
//! the remaining functions are closed forms checked against it.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{BlockProfile, SemiRegularParams, UnaryKind};
use crate::polyrat::{charpoly_and_adjugate, rational, IntMatrix, Poly, PolyMatrix, RatFun};
use crate::table::{table_row, SubsetRole};

/// Sorted set of distinct indices into `0..source_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    indices: Vec<usize>,
    source_n: usize,
}

impl IndexSet {
    /// Sorts and validates; duplicates and out-of-range indices are rejected.
    pub fn new(mut indices: Vec<usize>, source_n: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("index {} repeated", w[0])));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= source_n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: source_n,
            });
        }
        Ok(Self { indices, source_n })
    }

    pub fn all(n: usize) -> Self {
        Self {
            indices: (0..n).collect(),
            source_n: n,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            indices: Vec::new(),
            source_n: n,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Indices outside the set, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.source_n).filter(|&i| !self.contains(i)).collect()
    }

    /// Image under a relabeling where old index `i` becomes `relabel[i]`.
    pub fn mapped(&self, relabel: &[usize]) -> Result<Self> {
        Self::new(self.indices.iter().map(|&i| relabel[i]).collect(), self.source_n)
    }
}

/// Sum of the α-principal block of `(xI − M)^{-1}`, as `r_α·adj·r_αᵀ / det`.
pub fn coronal_generic(m: &IntMatrix, alpha: &IndexSet) -> Result<RatFun> {
    let n = m.ensure_square()?;
    check_source(alpha, n)?;
    if alpha.is_empty() {
        return Ok(RatFun::zero());
    }
    let (p, adj) = charpoly_and_adjugate(m)?;
    coronal_from_adjugate(&p, &adj, alpha)
}

/// Same as [`coronal_generic`] for a precomputed characteristic polynomial
/// and adjugate.
pub fn coronal_from_adjugate(charpoly: &Poly, adj: &PolyMatrix, alpha: &IndexSet) -> Result<RatFun> {
    let mut num = Poly::zero();
    for &i in alpha.indices() {
        for &j in alpha.indices() {
            num = &num + &adj[(i, j)];
        }
    }
    RatFun::new(num, charpoly.clone())
}

fn check_source(alpha: &IndexSet, n: usize) -> Result<()> {
    if alpha.source_n() != n {
        return Err(Error::DimensionMismatch(format!(
            "index set over {} for a {n}x{n} matrix",
            alpha.source_n()
        )));
    }
    Ok(())
}

/// `n/(x − s)`, the coronal of any `n×n` matrix with all row sums `s`.
pub fn coronal_equal_rowsum(n: usize, s: &BigRational) -> Result<RatFun> {
    if n == 0 {
        return Err(Error::Precondition("equal row sum coronal needs n >= 1".into()));
    }
    RatFun::new(Poly::constant(rational(n as i64)), Poly::linear_root(s))
}

/// Shared denominator `x² − (a1 + a4)x + a1·a4 − a2·a3`.
pub fn profile_denominator(p: &BlockProfile) -> Poly {
    Poly::new(vec![
        &p.a1 * &p.a4 - &p.a2 * &p.a3,
        -(&p.a1 + &p.a4),
        rational(1),
    ])
}

/// Unconstrained coronal of a 2×2-block matrix with constant block row sums:
/// `((n1+n2)x + n1(a2 − a4) + n2(a3 − a1)) / (x² − (a1+a4)x + a1a4 − a2a3)`.
pub fn coronal_partitioned(p: &BlockProfile) -> Result<RatFun> {
    let n1 = rational(p.n1 as i64);
    let n2 = rational(p.n2 as i64);
    let num = Poly::new(vec![
        &n1 * (&p.a2 - &p.a4) + &n2 * (&p.a3 - &p.a1),
        &n1 + &n2,
    ]);
    RatFun::new(num, profile_denominator(p))
}

/// Coronal constrained by the first block: `n1(x − a4) / (x² − (a1+a4)x + a1a4 − a2a3)`.
pub fn coronal_constrained_partitioned(p: &BlockProfile) -> Result<RatFun> {
    let num = Poly::linear_root(&p.a4).scale(&rational(p.n1 as i64));
    RatFun::new(num, profile_denominator(p))
}

/// Coronal constrained by `α` through the Schur reduction: with `α` moved to
/// the front, it is the plain coronal of the rational-function matrix
/// `A1 + A2 (xI − A4)^{-1} A3`, evaluated here by solving
/// `(xI − A1 − A2 (xI − A4)^{-1} A3) y = 1` over ℚ(x) and summing `y`.
pub fn coronal_schur_reduction(m: &IntMatrix, alpha: &IndexSet) -> Result<RatFun> {
    let n = m.ensure_square()?;
    check_source(alpha, n)?;
    let front = alpha.indices().to_vec();
    let back = alpha.complement();
    if front.is_empty() || back.is_empty() {
        return Err(Error::Precondition(
            "Schur reduction needs a nonempty proper index set".into(),
        ));
    }
    let a1 = m.select(&front, &front);
    let a2 = m.select(&front, &back);
    let a3 = m.select(&back, &front);
    let a4 = m.select(&back, &back);
    let (p4, adj4) = charpoly_and_adjugate(&a4)?;

    // S = A2 · adj(xI − A4) · A3, polynomial entries
    let k = front.len();
    let h = back.len();
    let mut s = PolyMatrix::zeros(k, k);
    for i in 0..k {
        // row i of A2·adj
        let mut tmp = vec![Poly::zero(); h];
        for (c, t) in tmp.iter_mut().enumerate() {
            for b in 0..h {
                let w = a2[(i, b)];
                if w != 0 {
                    *t = &*t + &adj4[(b, c)].scale(&rational(w));
                }
            }
        }
        for j in 0..k {
            let mut acc = Poly::zero();
            for (c, t) in tmp.iter().enumerate() {
                let w = a3[(c, j)];
                if w != 0 {
                    acc = &acc + &t.scale(&rational(w));
                }
            }
            s[(i, j)] = acc;
        }
    }

    let mut rows: Vec<Vec<RatFun>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k + 1);
        for j in 0..k {
            let diag = if i == j { 1 } else { 0 };
            let lin = Poly::from_i64s(&[-a1[(i, j)], diag]);
            row.push(RatFun::new(&(&lin * &p4) - &s[(i, j)], p4.clone())?);
        }
        row.push(RatFun::constant(rational(1)));
        rows.push(row);
    }
    let y = solve_in_place(rows)?;
    Ok(y.iter().fold(RatFun::zero(), |acc, v| &acc + v))
}

/// Gauss–Jordan elimination over ℚ(x) on an augmented `k × (k+1)` system.
fn solve_in_place(mut rows: Vec<Vec<RatFun>>) -> Result<Vec<RatFun>> {
    let k = rows.len();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::Precondition("singular system over Q(x)".into()))?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip()?;
        for x in &mut rows[col][col..=k] {
            *x = &*x * &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..=k].iter_mut().zip(&pivot_row[col..=k]) {
                *x = &*x - &(&f * p);
            }
        }
    }
    Ok(rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

/// Coronal of `K_{p,q}` constrained by `s1` vertices of the `p`-side and
/// `s2` of the `q`-side:
/// `((s1+s2)x² + 2s1s2x − (s1+s2)pq + s1²q + s2²p) / (x(x² − pq))`.
pub fn coronal_kpq_subsets(p: usize, q: usize, s1: usize, s2: usize) -> Result<RatFun> {
    if s1 > p || s2 > q {
        return Err(Error::Precondition(format!(
            "subset sizes ({s1}, {s2}) exceed parts ({p}, {q})"
        )));
    }
    let (p, q, s1, s2) = (p as i64, q as i64, s1 as i64, s2 as i64);
    let num = Poly::from_i64s(&[
        -(s1 + s2) * p * q + s1 * s1 * q + s2 * s2 * p,
        2 * s1 * s2,
        s1 + s2,
    ]);
    let den = Poly::from_i64s(&[0, -p * q, 0, 1]);
    RatFun::new(num, den)
}

/// Semi-regular bipartite graph, unconstrained: `((n1+n2)x + 2n1r1) / (x² − r1r2)`.
pub fn coronal_semiregular(p: &SemiRegularParams) -> Result<RatFun> {
    let (n1, n2, r1, r2) = (p.n1 as i64, p.n2 as i64, p.r1 as i64, p.r2 as i64);
    RatFun::new(Poly::from_i64s(&[2 * n1 * r1, n1 + n2]), Poly::from_i64s(&[-r1 * r2, 0, 1]))
}

/// Semi-regular bipartite graph constrained by the first part: `n1·x / (x² − r1r2)`.
pub fn coronal_semiregular_part(p: &SemiRegularParams) -> Result<RatFun> {
    let (n1, r1, r2) = (p.n1 as i64, p.r1 as i64, p.r2 as i64);
    RatFun::new(Poly::from_i64s(&[0, n1]), Poly::from_i64s(&[-r1 * r2, 0, 1]))
}

/// Join of an `r1`-regular graph on `n1` vertices with an `r2`-regular graph
/// on `n2` vertices:
/// `((n1+n2)x + n1(n2 − r2) + n2(n1 − r1)) / (x² − (r1+r2)x + r1r2 − n1n2)`.
pub fn coronal_join(n1: usize, r1: usize, n2: usize, r2: usize) -> Result<RatFun> {
    let (n1, r1, n2, r2) = (n1 as i64, r1 as i64, n2 as i64, r2 as i64);
    RatFun::new(
        Poly::from_i64s(&[n1 * (n2 - r2) + n2 * (n1 - r1), n1 + n2]),
        Poly::from_i64s(&[r1 * r2 - n1 * n2, -(r1 + r2), 1]),
    )
}

/// `K_n` constrained by `t` vertices: `t(x − n + t + 1) / ((x + 1)(x − n + 1))`.
pub fn coronal_kn_subset(n: usize, t: usize) -> Result<RatFun> {
    if t > n {
        return Err(Error::Precondition(format!("subset size {t} exceeds {n}")));
    }
    let (n, t) = (n as i64, t as i64);
    RatFun::new(
        Poly::from_i64s(&[t * (t + 1 - n), t]),
        &Poly::from_i64s(&[1, 1]) * &Poly::from_i64s(&[1 - n, 1]),
    )
}

/// Coronal of `U(G)` for an `r`-regular `G` with `n` vertices and `m` edges,
/// from the tabulated block row sums. `All` uses the unconstrained
/// partitioned form; `V` and `I` use the constrained one with the
/// corresponding block first.
pub fn coronal_unary_table(kind: UnaryKind, subset: SubsetRole, n: usize, m: usize, r: usize) -> Result<RatFun> {
    let row = table_row(kind);
    let a = row.values(subset, n as i64, m as i64, r as i64);
    let inserted = kind.inserted_count(n, m);
    match subset {
        SubsetRole::All => coronal_partitioned(&BlockProfile::new(a, n, inserted)),
        SubsetRole::Original => coronal_constrained_partitioned(&BlockProfile::new(a, n, inserted)),
        SubsetRole::Inserted => coronal_constrained_partitioned(&BlockProfile::new(a, inserted, n)),
    }
}

/// Which route [`coronal_auto`] took.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoronalRoute {
    Empty,
    EqualRowSum,
    ConstrainedPartitioned,
    Generic,
}

/// Uses a closed form when the matrix shape allows it, otherwise the
/// generic path.
pub fn coronal_auto(m: &IntMatrix, alpha: &IndexSet) -> Result<(RatFun, CoronalRoute)> {
    let n = m.ensure_square()?;
    check_source(alpha, n)?;
    if alpha.is_empty() {
        return Ok((RatFun::zero(), CoronalRoute::Empty));
    }
    if alpha.len() == n {
        let sums = m.row_sums();
        if sums.iter().all(|&s| s == sums[0]) {
            return Ok((coronal_equal_rowsum(n, &rational(sums[0]))?, CoronalRoute::EqualRowSum));
        }
        return Ok((coronal_generic(m, alpha)?, CoronalRoute::Generic));
    }
    let mut order = alpha.indices().to_vec();
    order.extend(alpha.complement());
    let permuted = m.permute(&order);
    if let Some(profile) = crate::graph::block_profile(&permuted, alpha.len())?.profile() {
        let c = coronal_constrained_partitioned(&profile)?;
        return Ok((c, CoronalRoute::ConstrainedPartitioned));
    }
    Ok((coronal_generic(m, alpha)?, CoronalRoute::Generic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{unary_op, Graph};

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(Poly::from_i64s(num), Poly::from_i64s(den)).unwrap()
    }

    #[test]
    fn index_set_validation() {
        assert_eq!(IndexSet::new(vec![2, 0], 3).unwrap().indices(), &[0, 2]);
        assert!(IndexSet::new(vec![1, 1], 3).is_err());
        assert!(matches!(
            IndexSet::new(vec![3], 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(IndexSet::new(vec![1], 4).unwrap().complement(), vec![0, 2, 3]);
    }

    #[test]
    fn generic_examples() {
        let zero = IntMatrix::zeros(1, 1);
        assert_eq!(coronal_generic(&zero, &IndexSet::all(1)).unwrap(), rf(&[1], &[0, 1]));
        let k2 = Graph::complete(2).unwrap().adjacency();
        let a0 = IndexSet::new(vec![0], 2).unwrap();
        assert_eq!(coronal_generic(&k2, &a0).unwrap(), rf(&[0, 1], &[-1, 0, 1]));
        let c4 = Graph::cycle(4).unwrap().adjacency();
        assert_eq!(coronal_generic(&c4, &IndexSet::all(4)).unwrap(), rf(&[4], &[-2, 1]));
    }

    #[test]
    fn empty_set_is_zero() {
        let a = Graph::complete(4).unwrap().adjacency();
        assert!(coronal_generic(&a, &IndexSet::empty(4)).unwrap().is_zero());
    }

    #[test]
    fn equal_rowsum_examples() {
        assert_eq!(coronal_equal_rowsum(3, &rational(2)).unwrap(), rf(&[3], &[-2, 1]));
        assert_eq!(coronal_equal_rowsum(1, &rational(0)).unwrap(), rf(&[1], &[0, 1]));
        let c4 = Graph::cycle(4).unwrap().adjacency();
        assert_eq!(
            coronal_equal_rowsum(4, &rational(2)).unwrap(),
            coronal_generic(&c4, &IndexSet::all(4)).unwrap()
        );
        assert!(coronal_equal_rowsum(0, &rational(0)).is_err());
    }

    #[test]
    fn partitioned_matches_generic_on_k4() {
        let k4 = Graph::complete(4).unwrap().adjacency();
        let p = BlockProfile::new([1, 2, 2, 1], 2, 2);
        assert_eq!(coronal_partitioned(&p).unwrap(), rf(&[4], &[-3, 1]));
        assert_eq!(
            coronal_partitioned(&p).unwrap(),
            coronal_generic(&k4, &IndexSet::all(4)).unwrap()
        );
        let front = IndexSet::new(vec![0, 1], 4).unwrap();
        let expected = RatFun::new(Poly::from_i64s(&[-2, 2]), Poly::from_i64s(&[-3, -2, 1])).unwrap();
        assert_eq!(coronal_constrained_partitioned(&p).unwrap(), expected);
        assert_eq!(coronal_generic(&k4, &front).unwrap(), expected);
    }

    #[test]
    fn schur_reduction_examples() {
        let k2 = Graph::complete(2).unwrap().adjacency();
        let a0 = IndexSet::new(vec![0], 2).unwrap();
        assert_eq!(coronal_schur_reduction(&k2, &a0).unwrap(), rf(&[0, 1], &[-1, 0, 1]));
        assert!(matches!(
            coronal_schur_reduction(&k2, &IndexSet::all(2)),
            Err(Error::Precondition(_))
        ));
        let c4 = Graph::cycle(4).unwrap().adjacency();
        let a = IndexSet::new(vec![0, 2], 4).unwrap();
        assert_eq!(
            coronal_schur_reduction(&c4, &a).unwrap(),
            coronal_generic(&c4, &a).unwrap()
        );
    }

    #[test]
    fn kpq_examples() {
        // full parts reduce to ((p+q)x + 2pq)/(x² − pq)
        assert_eq!(coronal_kpq_subsets(2, 3, 2, 3).unwrap(), rf(&[12, 5], &[-6, 0, 1]));
        assert!(coronal_kpq_subsets(2, 3, 0, 0).unwrap().is_zero());
        let g = Graph::complete_bipartite(2, 3).unwrap().adjacency();
        let s = IndexSet::new(vec![0, 2], 5).unwrap();
        assert_eq!(
            coronal_kpq_subsets(2, 3, 1, 1).unwrap(),
            coronal_generic(&g, &s).unwrap()
        );
        assert!(coronal_kpq_subsets(2, 3, 3, 0).is_err());
    }

    #[test]
    fn printed_corollaries_match_generic() {
        let p = crate::graph::semiregular_params(&Graph::complete_bipartite(2, 3).unwrap()).unwrap();
        let a = Graph::complete_bipartite(2, 3).unwrap().adjacency();
        assert_eq!(coronal_semiregular(&p).unwrap(), coronal_generic(&a, &IndexSet::all(5)).unwrap());
        let x = IndexSet::new(vec![0, 1], 5).unwrap();
        assert_eq!(coronal_semiregular_part(&p).unwrap(), coronal_generic(&a, &x).unwrap());
        let j = crate::graph::join(&Graph::complete(2).unwrap(), &Graph::cycle(4).unwrap());
        assert_eq!(coronal_join(2, 1, 4, 2).unwrap(), coronal_generic(&j.adjacency(), &IndexSet::all(6)).unwrap());
        let k5 = Graph::complete(5).unwrap().adjacency();
        for t in 0..=5 {
            let s = IndexSet::new((0..t).collect(), 5).unwrap();
            assert_eq!(coronal_kn_subset(5, t).unwrap(), coronal_generic(&k5, &s).unwrap());
        }
    }

    #[test]
    fn unary_table_subdivision() {
        let got = coronal_unary_table(UnaryKind::Subdivision, SubsetRole::Original, 4, 4, 2).unwrap();
        assert_eq!(got, rf(&[0, 4], &[-4, 0, 1]));
        let s = unary_op(UnaryKind::Subdivision, &Graph::cycle(4).unwrap());
        let all = coronal_unary_table(UnaryKind::Subdivision, SubsetRole::All, 4, 4, 2).unwrap();
        assert_eq!(all, coronal_generic(&s.adjacency(), &IndexSet::all(8)).unwrap());
    }

    #[test]
    fn unary_table_total_inserted() {
        let t = unary_op(UnaryKind::Total, &Graph::cycle(4).unwrap());
        let got = coronal_unary_table(UnaryKind::Total, SubsetRole::Inserted, 4, 4, 2).unwrap();
        let inserted = IndexSet::new((4..8).collect(), 8).unwrap();
        assert_eq!(got, coronal_generic(&t.adjacency(), &inserted).unwrap());
        // (2,2,2,2): 4(x − 2)/(x² − 4x) = 4(x − 2)/(x(x − 4))
        assert_eq!(got, rf(&[-8, 4], &[0, -4, 1]));
    }

    #[test]
    fn auto_route_selection() {
        let k4 = Graph::complete(4).unwrap().adjacency();
        let (_, r) = coronal_auto(&k4, &IndexSet::all(4)).unwrap();
        assert_eq!(r, CoronalRoute::EqualRowSum);
        let (c, r) = coronal_auto(&k4, &IndexSet::new(vec![1, 3], 4).unwrap()).unwrap();
        assert_eq!(r, CoronalRoute::ConstrainedPartitioned);
        assert_eq!(c, coronal_generic(&k4, &IndexSet::new(vec![1, 3], 4).unwrap()).unwrap());
        let p4 = Graph::path(4).unwrap().adjacency();
        let (_, r) = coronal_auto(&p4, &IndexSet::new(vec![0], 4).unwrap()).unwrap();
        assert_eq!(r, CoronalRoute::Generic);
    }

    #[test]
    fn dimension_mismatch() {
        let a = Graph::complete(3).unwrap().adjacency();
        assert!(coronal_generic(&a, &IndexSet::all(4)).is_err());
    }
}
