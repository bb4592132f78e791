use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::coronal::{coronal_from_adjugate, IndexSet};
use crate::corona::{build, CopySpec, CoronaSpec};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::graph::{graph_to_json, Graph};
use crate::polyrat::{charpoly_and_adjugate_with, poly_to_json, Poly, RatFun};

use super::theorem::{constituent_matrix, constituents, oracle_charpoly_with, theorem_charpoly_with, DEFAULT_ORACLE_LIMIT};
use super::SpectralKind;

#[derive(Clone, Debug)]
pub struct CospectralOptions {
    /// Orderings checked; all of them when `n!` does not exceed this.
    pub max_permutations: usize,
    pub seed: u64,
    /// Members up to this many vertices are also checked by the oracle.
    pub oracle_bound: usize,
    pub strategy: Strategy,
}

impl Default for CospectralOptions {
    fn default() -> Self {
        Self {
            max_permutations: 120,
            seed: 0,
            oracle_bound: DEFAULT_ORACLE_LIMIT,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CospectralReport {
    pub kind: SpectralKind,
    pub n: usize,
    pub exhaustive: bool,
    pub permutations: Vec<Vec<usize>>,
    #[serde(serialize_with = "ser_poly")]
    pub charpoly: Poly,
    pub all_equal: bool,
    pub oracle_checked: usize,
    pub oracle_agrees: bool,
    pub family: Vec<Value>,
}

impl CospectralReport {
    pub fn passes(&self) -> bool {
        self.all_equal && self.oracle_agrees
    }
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    poly_to_json(p).serialize(s)
}

/// Checks that reordering the copies leaves the charpoly unchanged. Needs
/// equal constrained coronals, and equal `|T_i|` for the Laplacian kinds.
pub fn cospectral_family(spec: &CoronaSpec, kind: SpectralKind, opts: &CospectralOptions) -> Result<CospectralReport> {
    let parts = constituents(spec, kind, opts.strategy)?;
    let same_coronal = parts.windows(2).all(|w| w[0].coronal == w[1].coronal);
    let same_t = kind == SpectralKind::Adjacency || spec.copies().windows(2).all(|w| w[0].t() == w[1].t());
    if !same_coronal || !same_t {
        return Err(Error::CoronalsNotEqual);
    }
    let n = spec.n();
    let (orders, exhaustive) = orderings(n, opts.max_permutations, opts.seed);
    let reference = theorem_charpoly_with(spec, kind, opts.strategy)?;
    let mut all_equal = true;
    let mut oracle_agrees = true;
    let mut oracle_checked = 0;
    let mut family = Vec::with_capacity(orders.len());
    for order in &orders {
        let member = spec.permuted_copies(order)?;
        let p = theorem_charpoly_with(&member, kind, opts.strategy)?;
        all_equal &= p == reference;
        if member.total_vertices() <= opts.oracle_bound {
            oracle_checked += 1;
            oracle_agrees &= oracle_charpoly_with(&member, kind, opts.oracle_bound, opts.strategy)? == p;
        }
        family.push(graph_to_json(&build(&member)));
    }
    Ok(CospectralReport {
        kind,
        n,
        exhaustive,
        permutations: orders,
        charpoly: reference,
        all_equal,
        oracle_checked,
        oracle_agrees,
        family,
    })
}

fn orderings(n: usize, max: usize, seed: u64) -> (Vec<Vec<usize>>, bool) {
    let total = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
    if total.is_some_and(|t| t <= max.max(1)) {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        return (out, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    while out.len() < max.max(1) {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        out.push(p);
    }
    (out, false)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All labeled graphs on `1..=max_vertices` vertices with every nonempty
/// subset, searched for two copies whose constrained coronals agree (and
/// whose `|T|` agree for the Laplacian kinds) but whose matrices have
/// different characteristic polynomials.
pub fn search_equal_coronal(kind: SpectralKind, max_vertices: usize) -> Result<Option<(CopySpec, CopySpec)>> {
    let mut seen: HashMap<(RatFun, usize), Vec<(Poly, CopySpec)>> = HashMap::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges)?;
            for sub in 1u64..(1 << n) {
                let t: Vec<usize> = (0..n).filter(|i| sub >> i & 1 == 1).collect();
                let copy = CopySpec::new(g.clone(), IndexSet::new(t, n)?)?;
                let m = constituent_matrix(&copy, kind);
                let (cp, adj) = charpoly_and_adjugate_with(&m, Strategy::Sequential)?;
                let gamma = coronal_from_adjugate(&cp, &adj, copy.subset())?;
                let t_key = if kind == SpectralKind::Adjacency { 0 } else { copy.t() };
                let bucket = seen.entry((gamma, t_key)).or_default();
                if let Some((_, other)) = bucket.iter().find(|(p, _)| *p != cp) {
                    return Ok(Some((other.clone(), copy)));
                }
                if bucket.len() < 4 {
                    bucket.push((cp, copy));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::CoronaSpec;

    #[test]
    fn permutation_enumeration() {
        let (all, ex) = orderings(3, 10, 0);
        assert!(ex);
        assert_eq!(all.len(), 6);
        let (some, ex) = orderings(6, 10, 7);
        assert!(!ex);
        assert_eq!(some.len(), 10);
        assert_eq!(some, orderings(6, 10, 7).0);
    }

    #[test]
    fn identical_rooted_copies() {
        let h = Graph::complete(2).unwrap().with_root(0).unwrap();
        let copies = vec![CopySpec::rooted(h).unwrap(); 3];
        let spec = CoronaSpec::new(Graph::path(3).unwrap(), copies).unwrap();
        for kind in [SpectralKind::Adjacency, SpectralKind::Laplacian] {
            let r = cospectral_family(&spec, kind, &CospectralOptions::default()).unwrap();
            assert!(r.exhaustive && r.passes());
            assert_eq!(r.permutations.len(), 6);
        }
    }

    #[test]
    fn unequal_coronals_rejected() {
        let spec = CoronaSpec::new(
            Graph::complete(2).unwrap(),
            vec![CopySpec::all(Graph::cycle(4).unwrap()), CopySpec::all(Graph::complete(2).unwrap())],
        )
        .unwrap();
        assert!(matches!(
            cospectral_family(&spec, SpectralKind::Adjacency, &CospectralOptions::default()),
            Err(Error::CoronalsNotEqual)
        ));
    }

    #[test]
    fn searched_pair_gives_cospectral_family() {
        for kind in [SpectralKind::Adjacency, SpectralKind::Laplacian] {
            let (a, b) = search_equal_coronal(kind, 4).unwrap().expect("a pair exists");
            let spec = CoronaSpec::new(Graph::path(3).unwrap(), vec![a.clone(), b.clone(), a]).unwrap();
            let r = cospectral_family(&spec, kind, &CospectralOptions::default()).unwrap();
            assert!(r.passes(), "{kind:?}");
            assert_eq!(r.oracle_checked, 6);
        }
    }
}
