use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Tag carried by the vertices of the input graph after a unary operation.
pub const ORIGINAL_TAG: &str = "V";
/// Tag carried by the vertices a unary operation inserts.
pub const INSERTED_TAG: &str = "I";

/// The eighteen unary operations, in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnaryKind {
    Subdivision,
    RGraph,
    QGraph,
    Central,
    Total,
    QuasiTotal,
    Duplication,
    CGraph,
    NGraph,
    PointCompleteSubdivision,
    QComplemented,
    TotalComplemented,
    QuasitotalComplemented,
    CompleteQComplemented,
    CompleteSubdivision,
    CompleteRGraph,
    CompleteCentral,
    FullyCompleteSubdivision,
}

impl UnaryKind {
    pub const ALL: [UnaryKind; 18] = [
        UnaryKind::Subdivision,
        UnaryKind::RGraph,
        UnaryKind::QGraph,
        UnaryKind::Central,
        UnaryKind::Total,
        UnaryKind::QuasiTotal,
        UnaryKind::Duplication,
        UnaryKind::CGraph,
        UnaryKind::NGraph,
        UnaryKind::PointCompleteSubdivision,
        UnaryKind::QComplemented,
        UnaryKind::TotalComplemented,
        UnaryKind::QuasitotalComplemented,
        UnaryKind::CompleteQComplemented,
        UnaryKind::CompleteSubdivision,
        UnaryKind::CompleteRGraph,
        UnaryKind::CompleteCentral,
        UnaryKind::FullyCompleteSubdivision,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UnaryKind::Subdivision => "subdivision",
            UnaryKind::RGraph => "r_graph",
            UnaryKind::QGraph => "q_graph",
            UnaryKind::Central => "central",
            UnaryKind::Total => "total",
            UnaryKind::QuasiTotal => "quasi_total",
            UnaryKind::Duplication => "duplication",
            UnaryKind::CGraph => "c_graph",
            UnaryKind::NGraph => "n_graph",
            UnaryKind::PointCompleteSubdivision => "point_complete_subdivision",
            UnaryKind::QComplemented => "q_complemented",
            UnaryKind::TotalComplemented => "total_complemented",
            UnaryKind::QuasitotalComplemented => "quasitotal_complemented",
            UnaryKind::CompleteQComplemented => "complete_q_complemented",
            UnaryKind::CompleteSubdivision => "complete_subdivision",
            UnaryKind::CompleteRGraph => "complete_r_graph",
            UnaryKind::CompleteCentral => "complete_central",
            UnaryKind::FullyCompleteSubdivision => "fully_complete_subdivision",
        }
    }

    /// 1-based row number in the coronal table.
    pub fn row(self) -> usize {
        Self::ALL.iter().position(|&k| k == self).expect("listed") + 1
    }

    /// True for the operations that insert one vertex per vertex of `G`
    /// (duplication, C-graph, N-graph) rather than one per edge.
    pub fn inserts_per_vertex(self) -> bool {
        matches!(self, UnaryKind::Duplication | UnaryKind::CGraph | UnaryKind::NGraph)
    }

    /// Number of inserted vertices for a graph with `n` vertices and `m` edges.
    pub fn inserted_count(self, n: usize, m: usize) -> usize {
        if self.inserts_per_vertex() {
            n
        } else {
            m
        }
    }
}

impl fmt::Display for UnaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for UnaryKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for UnaryKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        UnaryKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Which edges a rule joins among the original vertices.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Among {
    Nothing,
    Same,
    Complement,
    All,
}

/// Edge-vertex based operations are composed from four ingredients:
/// what to place among originals, whether the originals attach to their
/// edge-vertices (always), and what to place among edge-vertices.
struct EdgeRecipe {
    originals: Among,
    inserted: Among,
}

fn recipe(kind: UnaryKind) -> Option<EdgeRecipe> {
    use Among::*;
    use UnaryKind::*;
    let (originals, inserted) = match kind {
        Subdivision => (Nothing, Nothing),
        RGraph => (Same, Nothing),
        QGraph => (Nothing, Same),
        Central => (Complement, Nothing),
        Total => (Same, Same),
        QuasiTotal => (Complement, Same),
        PointCompleteSubdivision => (All, Nothing),
        QComplemented => (Nothing, Complement),
        TotalComplemented => (Same, Complement),
        QuasitotalComplemented => (Complement, Complement),
        CompleteQComplemented => (All, Complement),
        CompleteSubdivision => (Nothing, All),
        CompleteRGraph => (Same, All),
        CompleteCentral => (Complement, All),
        FullyCompleteSubdivision => (All, All),
        Duplication | CGraph | NGraph => return None,
    };
    Some(EdgeRecipe { originals, inserted })
}

/// Applies a catalog operation. Original vertices keep their indices and
/// are tagged [`ORIGINAL_TAG`]; inserted vertices follow, in lexicographic
/// edge order (or vertex order for duplication, C- and N-graphs), tagged
/// [`INSERTED_TAG`].
pub fn unary_op(kind: UnaryKind, g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edge_list();
    let m = edges.len();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    match recipe(kind) {
        Some(r) => {
            // "adjacent" and "non-adjacent" are read with respect to G for
            // vertices and to the line graph of G for edge-vertices.
            for u in 0..n {
                for v in u + 1..n {
                    let adjacent = g.has_edge(u, v);
                    if joins(r.originals, adjacent) {
                        pairs.push((u, v));
                    }
                }
            }
            for (k, &(u, v)) in edges.iter().enumerate() {
                pairs.push((u, n + k));
                pairs.push((v, n + k));
            }
            for a in 0..m {
                for b in a + 1..m {
                    let adjacent = share_endpoint(edges[a], edges[b]);
                    if joins(r.inserted, adjacent) {
                        pairs.push((n + a, n + b));
                    }
                }
            }
        }
        None => {
            if kind != UnaryKind::Duplication {
                pairs.extend(edges.iter().copied());
            }
            for i in 0..n {
                match kind {
                    UnaryKind::CGraph => pairs.push((i, n + i)),
                    _ => pairs.extend(g.neighbors(i).into_iter().map(|j| (j, n + i))),
                }
            }
        }
    }

    let total = n + kind.inserted_count(n, m);
    let mut out = Graph::from_pairs(total, pairs);
    let tags: BTreeMap<usize, String> = (0..total)
        .map(|v| (v, if v < n { ORIGINAL_TAG } else { INSERTED_TAG }.to_string()))
        .collect();
    out.tags = tags;
    out
}

fn joins(rule: Among, adjacent: bool) -> bool {
    match rule {
        Among::Nothing => false,
        Among::Same => adjacent,
        Among::Complement => !adjacent,
        Among::All => true,
    }
}

fn share_endpoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::from_pairs(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)),
    );
    out.root = g.root;
    out.tags = g.tags.clone();
    out
}

/// Line graph; vertex `k` is the `k`-th edge in lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edge_list();
    let m = edges.len();
    Graph::from_pairs(
        m,
        (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| share_endpoint(edges[a], edges[b])),
    )
}

/// Join: disjoint union plus every edge between the two parts. Vertices of
/// `g1` come first.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let cross = (0..g1.n()).flat_map(|u| (0..g2.n()).map(move |v| (u, off + v)));
    let mut out = Graph::from_pairs(
        g1.n() + g2.n(),
        g1.edges().chain(g2.edges().map(|(u, v)| (u + off, v + off))).chain(cross),
    );
    out.root = g1.root;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn same_edges(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n() && a.edge_list() == b.edge_list()
    }

    #[test]
    fn subdivision_of_c4_is_c8() {
        let s = unary_op(UnaryKind::Subdivision, &Graph::cycle(4).unwrap());
        assert_eq!((s.n(), s.m()), (8, 8));
        assert_eq!(s.regularity(), Some(2));
        assert_eq!(s.components(), 1);
        assert_eq!(s.tagged(ORIGINAL_TAG), vec![0, 1, 2, 3]);
        assert_eq!(s.tagged(INSERTED_TAG), vec![4, 5, 6, 7]);
    }

    #[test]
    fn total_of_k2_is_k3() {
        let t = unary_op(UnaryKind::Total, &Graph::complete(2).unwrap());
        assert!(same_edges(&t, &Graph::complete(3).unwrap()));
    }

    #[test]
    fn duplication_of_k2() {
        let d = unary_op(UnaryKind::Duplication, &Graph::complete(2).unwrap());
        assert_eq!(d.n(), 4);
        assert_eq!(d.edge_list(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn counts_for_every_kind() {
        let g = Graph::cycle(5).unwrap();
        for kind in UnaryKind::ALL {
            let u = unary_op(kind, &g);
            assert_eq!(u.n(), 5 + kind.inserted_count(5, 5), "{kind}");
            assert_eq!(u.tagged(INSERTED_TAG).len(), kind.inserted_count(5, 5));
        }
        let s = unary_op(UnaryKind::Subdivision, &g);
        assert_eq!(s.m(), 2 * g.m());
    }

    #[test]
    fn edgeless_input() {
        let g = Graph::empty(3).unwrap();
        for kind in UnaryKind::ALL {
            let u = unary_op(kind, &g);
            assert!(u.n() >= 3);
        }
        assert_eq!(unary_op(UnaryKind::Subdivision, &g).n(), 3);
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in UnaryKind::ALL {
            assert_eq!(kind.name().parse::<UnaryKind>().unwrap(), kind);
        }
        assert!("mystery".parse::<UnaryKind>().is_err());
        assert_eq!(UnaryKind::CompleteCentral.row(), 17);
    }

    #[test]
    fn complement_line_join() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(complement(&k4).m(), 0);
        let g = Graph::from_edges(5, &[(0, 1), (1, 4), (2, 3)]).unwrap();
        assert_eq!(complement(&complement(&g)), g);
        let l = line_graph(&Graph::path(3).unwrap());
        assert!(same_edges(&l, &Graph::complete(2).unwrap()));
        let star = join(&Graph::complete(1).unwrap(), &Graph::empty(4).unwrap());
        assert!(same_edges(&star, &Graph::complete_bipartite(1, 4).unwrap()));
    }
}
