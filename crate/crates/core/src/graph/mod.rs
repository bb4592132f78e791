//! Simple undirected graphs, their standard matrices, generators, and the
//! unary operation catalog.

mod json;
mod ops;
mod profile;

use std::collections::{BTreeMap, BTreeSet};

pub use json::{graph_from_json, graph_to_json};
pub use ops::{complement, join, line_graph, unary_op, UnaryKind, INSERTED_TAG, ORIGINAL_TAG};
pub(crate) use profile::two_coloring;
pub use profile::{block_profile, semiregular_params, BlockProfile, RowSums, SemiRegularParams};

use crate::error::{Error, Result};
use crate::polyrat::IntMatrix;

/// Labeled simple undirected graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`; iteration order
/// is lexicographic, which fixes incidence-matrix columns and the numbering
/// of vertices inserted by unary operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    root: Option<usize>,
    tags: BTreeMap<usize, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Incidence,
    Degree,
    Laplacian,
    Signless,
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "adjacency" | "A" => MatrixKind::Adjacency,
            "incidence" | "B" => MatrixKind::Incidence,
            "degree" | "D" => MatrixKind::Degree,
            "laplacian" | "L" => MatrixKind::Laplacian,
            "signless" | "Q" => MatrixKind::Signless,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

impl Graph {
    /// Validating constructor: rejects loops, duplicates and out-of-range
    /// endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v, "loop".into()));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v, format!("endpoint out of range for n = {n}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidEdge(u, v, "duplicate edge".into()));
            }
        }
        Ok(Self {
            n,
            edges: set,
            root: None,
            tags: BTreeMap::new(),
        })
    }

    /// Internal constructor that tolerates repeated pairs (used by the
    /// operations, which may produce the same pair from two rules).
    pub(crate) fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let edges = pairs
            .into_iter()
            .map(|(u, v)| {
                debug_assert!(u != v && u < n && v < n);
                (u.min(v), u.max(v))
            })
            .collect();
        Self {
            n,
            edges,
            root: None,
            tags: BTreeMap::new(),
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_size(n, "complete")?;
        Ok(Self::from_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))))
    }

    /// `K_{p,q}`; the first `p` vertices are tagged `X`, the rest `Y`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        check_size(p, "complete_bipartite p")?;
        check_size(q, "complete_bipartite q")?;
        let mut g = Self::from_pairs(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))));
        for v in 0..p + q {
            g.tags.insert(v, if v < p { "X" } else { "Y" }.to_string());
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        check_size(n, "path")?;
        Ok(Self::from_pairs(n, (1..n).map(|v| (v - 1, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize(format!("cycle needs n >= 3, got {n}")));
        }
        Ok(Self::from_pairs(n, (0..n).map(|v| (v, (v + 1) % n))))
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_size(n, "empty")?;
        Ok(Self::from_pairs(n, []))
    }

    pub fn with_root(mut self, root: usize) -> Result<Self> {
        if root >= self.n {
            return Err(Error::IndexOutOfRange {
                index: root,
                size: self.n,
            });
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn with_tags(mut self, tags: BTreeMap<usize, String>) -> Result<Self> {
        if let Some((&v, _)) = tags.iter().find(|(&v, _)| v >= self.n) {
            return Err(Error::IndexOutOfRange { index: v, size: self.n });
        }
        self.tags = tags;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn tags(&self) -> &BTreeMap<usize, String> {
        &self.tags
    }

    pub fn tag(&self, v: usize) -> Option<&str> {
        self.tags.get(&v).map(String::as_str)
    }

    /// Vertices carrying `tag`, ascending.
    pub fn tagged(&self, tag: &str) -> Vec<usize> {
        self.tags
            .iter()
            .filter(|(_, t)| t.as_str() == tag)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for (u, v) in self.edges() {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    pub fn matrix(&self, kind: MatrixKind) -> IntMatrix {
        match kind {
            MatrixKind::Adjacency => self.adjacency(),
            MatrixKind::Incidence => self.incidence(),
            MatrixKind::Degree => self.degree_matrix(),
            MatrixKind::Laplacian => self.laplacian(),
            MatrixKind::Signless => self.signless_laplacian(),
        }
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for (u, v) in self.edges() {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    /// Vertex–edge incidence matrix, `n × m`, columns in lexicographic edge order.
    pub fn incidence(&self) -> IntMatrix {
        let mut b = IntMatrix::zeros(self.n, self.m());
        for (k, (u, v)) in self.edges().enumerate() {
            b[(u, k)] = 1;
            b[(v, k)] = 1;
        }
        b
    }

    pub fn degree_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.n, self.n);
        for (v, deg) in self.degrees().into_iter().enumerate() {
            d[(v, v)] = deg as i64;
        }
        d
    }

    pub fn laplacian(&self) -> IntMatrix {
        let mut l = self.adjacency().scale(-1);
        for (v, deg) in self.degrees().into_iter().enumerate() {
            l[(v, v)] = deg as i64;
        }
        l
    }

    pub fn signless_laplacian(&self) -> IntMatrix {
        let mut q = self.adjacency();
        for (v, deg) in self.degrees().into_iter().enumerate() {
            q[(v, v)] = deg as i64;
        }
        q
    }

    /// Disjoint union, `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        Graph::from_pairs(
            self.n + other.n,
            self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
    }

    /// Relabels vertices so that old vertex `order[k]` becomes `k`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let mut inv = vec![0; self.n];
        for (k, &v) in order.iter().enumerate() {
            inv[v] = k;
        }
        let mut g = Graph::from_pairs(self.n, self.edges().map(|(u, v)| (inv[u], inv[v])));
        g.root = self.root.map(|r| inv[r]);
        g.tags = self.tags.iter().map(|(&v, t)| (inv[v], t.clone())).collect();
        g
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.n;
        for (u, v) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }
}

fn check_size(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSize(format!("{what} needs at least one vertex")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.m(), 6);
        assert_eq!(k23.tagged("X"), vec![0, 1]);
        assert_eq!(k23.tagged("Y"), vec![2, 3, 4]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.m(), 4);
        assert_eq!(c4.regularity(), Some(2));
        assert_eq!(Graph::path(4).unwrap().m(), 3);
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(Graph::complete(0), Err(Error::InvalidSize(_))));
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidSize(_))));
        assert!(matches!(Graph::from_edges(3, &[(0, 0)]), Err(Error::InvalidEdge(..))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidEdge(..))
        ));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(Error::InvalidEdge(..))));
        assert!(Graph::path(2).unwrap().with_root(2).is_err());
    }

    #[test]
    fn standard_matrices() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.laplacian().to_rows(), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(k2.signless_laplacian().to_rows(), vec![vec![1, 1], vec![1, 1]]);
        let b = Graph::complete(3).unwrap().incidence();
        assert_eq!(b.transpose().row_sums(), vec![2, 2, 2]);
        let l = Graph::cycle(5).unwrap().laplacian();
        assert!(l.row_sums().iter().all(|&s| s == 0));
    }

    #[test]
    fn incidence_identities() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let b = g.incidence();
        let bbt = b.mul(&b.transpose()).unwrap();
        assert_eq!(bbt, g.adjacency().add(&g.degree_matrix()).unwrap());
        let btb = b.transpose().mul(&b).unwrap();
        let lg = line_graph(&g);
        assert_eq!(btb, lg.adjacency().add(&IntMatrix::identity(g.m()).scale(2)).unwrap());
    }

    #[test]
    fn components_and_permutation() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), 3);
        let p = g.permuted(&[4, 3, 2, 1, 0]);
        assert!(p.has_edge(0, 1) && p.has_edge(3, 4));
    }
}
