use std::collections::VecDeque;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::polyrat::{rational, IntMatrix};

/// Constant row sums `(a1, a2, a3, a4)` of a 2×2-partitioned matrix with
/// diagonal blocks of sizes `n1` and `n2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    pub a1: BigRational,
    pub a2: BigRational,
    pub a3: BigRational,
    pub a4: BigRational,
    pub n1: usize,
    pub n2: usize,
}

impl BlockProfile {
    pub fn new(a: [i64; 4], n1: usize, n2: usize) -> Self {
        Self {
            a1: rational(a[0]),
            a2: rational(a[1]),
            a3: rational(a[2]),
            a4: rational(a[3]),
            n1,
            n2,
        }
    }
}

/// Row sums per block; `None` where a block's rows do not share a sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSums {
    pub n1: usize,
    pub n2: usize,
    pub blocks: [Option<i64>; 4],
}

impl RowSums {
    pub fn profile(&self) -> Option<BlockProfile> {
        let [a1, a2, a3, a4] = self.blocks;
        Some(BlockProfile::new([a1?, a2?, a3?, a4?], self.n1, self.n2))
    }
}

/// Partitions `m` at index `n1` and reports each block's constant row sum.
pub fn block_profile(m: &IntMatrix, n1: usize) -> Result<RowSums> {
    let n = m.ensure_square()?;
    if n1 == 0 || n1 >= n {
        return Err(Error::Precondition(format!("split {n1} must lie strictly inside 0..{n}")));
    }
    let constant = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| -> Option<i64> {
        let mut sums = rows.map(|i| cols.clone().map(|j| m[(i, j)]).sum::<i64>());
        let first = sums.next()?;
        sums.all(|s| s == first).then_some(first)
    };
    Ok(RowSums {
        n1,
        n2: n - n1,
        blocks: [
            constant(0..n1, 0..n1),
            constant(0..n1, n1..n),
            constant(n1..n, 0..n1),
            constant(n1..n, n1..n),
        ],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemiRegularParams {
    pub n1: usize,
    pub n2: usize,
    pub r1: usize,
    pub r2: usize,
}

/// Parameters `(n1, n2, r1, r2)` of a semi-regular bipartite graph, or
/// `None`. Parts come from a 2-coloring that puts the lowest vertex of each
/// component on the first side.
pub fn semiregular_params(g: &Graph) -> Option<SemiRegularParams> {
    let side = two_coloring(g)?;
    let deg = g.degrees();
    let mut parts: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for v in 0..g.n() {
        parts[side[v]].push(deg[v]);
    }
    let common = |ds: &[usize]| -> Option<usize> {
        let first = *ds.first()?;
        ds.iter().all(|&d| d == first).then_some(first)
    };
    let r1 = common(&parts[0])?;
    let r2 = common(&parts[1])?;
    Some(SemiRegularParams {
        n1: parts[0].len(),
        n2: parts[1].len(),
        r1,
        r2,
    })
}

/// Side (0 or 1) of every vertex, or `None` for non-bipartite graphs.
pub(crate) fn two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{unary_op, UnaryKind};

    #[test]
    fn semiregular_detection() {
        let p = |n1, n2, r1, r2| Some(SemiRegularParams { n1, n2, r1, r2 });
        assert_eq!(semiregular_params(&Graph::complete_bipartite(2, 3).unwrap()), p(2, 3, 3, 2));
        assert_eq!(semiregular_params(&Graph::cycle(6).unwrap()), p(3, 3, 2, 2));
        assert_eq!(semiregular_params(&Graph::complete(3).unwrap()), None);
        assert_eq!(semiregular_params(&Graph::path(4).unwrap()), None);
    }

    #[test]
    fn subdivided_cycle_profile() {
        let s = unary_op(UnaryKind::Subdivision, &Graph::cycle(4).unwrap());
        let rs = block_profile(&s.adjacency(), 4).unwrap();
        assert_eq!(rs.profile(), Some(BlockProfile::new([0, 2, 2, 0], 4, 4)));
    }

    #[test]
    fn complete_graph_profile() {
        let rs = block_profile(&Graph::complete(4).unwrap().adjacency(), 2).unwrap();
        assert_eq!(rs.profile(), Some(BlockProfile::new([1, 2, 2, 1], 2, 2)));
    }

    #[test]
    fn total_graph_profile() {
        let t = unary_op(UnaryKind::Total, &Graph::cycle(4).unwrap());
        let rs = block_profile(&t.adjacency(), 4).unwrap();
        assert_eq!(rs.profile(), Some(BlockProfile::new([2, 2, 2, 2], 4, 4)));
    }

    #[test]
    fn nonconstant_block_reported() {
        let rs = block_profile(&Graph::path(4).unwrap().adjacency(), 2).unwrap();
        assert_eq!(rs.blocks, [Some(1), None, None, Some(1)]);
        assert_eq!(rs.profile(), None);
    }

    #[test]
    fn split_must_be_interior() {
        let a = Graph::complete(3).unwrap().adjacency();
        assert!(block_profile(&a, 0).is_err());
        assert!(block_profile(&a, 3).is_err());
    }
}
