//! Generalized corona `G ⊛_𝒯 𝓗`: one copy of `G` and graphs `H_1..H_n`,
//! with base vertex `v_i` joined to every vertex of `T_i ⊆ V(H_i)`.

use serde_json::{json, Map, Value};

use crate::coronal::IndexSet;
use crate::error::{Error, Result};
use crate::graph::{graph_from_json, graph_to_json, unary_op, Graph, UnaryKind, INSERTED_TAG, ORIGINAL_TAG};
use crate::table::SubsetRole;

/// One constituent graph with the vertex subset its base vertex joins.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CopySpec {
    graph: Graph,
    subset: IndexSet,
}

impl CopySpec {
    pub fn new(graph: Graph, subset: IndexSet) -> Result<Self> {
        if subset.source_n() != graph.n() {
            return Err(Error::DimensionMismatch(format!(
                "subset over {} vertices for a graph on {}",
                subset.source_n(),
                graph.n()
            )));
        }
        Ok(Self { graph, subset })
    }

    pub fn from_indices(graph: Graph, indices: Vec<usize>) -> Result<Self> {
        let subset = IndexSet::new(indices, graph.n())?;
        Ok(Self { graph, subset })
    }

    /// Joined to every vertex.
    pub fn all(graph: Graph) -> Self {
        let subset = IndexSet::all(graph.n());
        Self { graph, subset }
    }

    /// Joined to the vertices carrying `tag`.
    pub fn tagged(graph: Graph, tag: &str) -> Self {
        let subset = IndexSet::new(graph.tagged(tag), graph.n()).expect("tagged vertices are in range");
        Self { graph, subset }
    }

    /// Joined to the root only.
    pub fn rooted(graph: Graph) -> Result<Self> {
        let root = graph.root().ok_or(Error::MissingRoot)?;
        Self::from_indices(graph, vec![root])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn subset(&self) -> &IndexSet {
        &self.subset
    }

    /// `h_i`
    pub fn h(&self) -> usize {
        self.graph.n()
    }

    /// `t_i`
    pub fn t(&self) -> usize {
        self.subset.len()
    }
}

/// A base graph with exactly one copy per base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoronaSpec {
    base: Graph,
    copies: Vec<CopySpec>,
}

impl CoronaSpec {
    pub fn new(base: Graph, copies: Vec<CopySpec>) -> Result<Self> {
        if copies.len() != base.n() {
            return Err(Error::CopyCountMismatch {
                expected: base.n(),
                got: copies.len(),
            });
        }
        Ok(Self { base, copies })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn copies(&self) -> &[CopySpec] {
        &self.copies
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// `n + Σ h_i`
    pub fn total_vertices(&self) -> usize {
        self.base.n() + self.copies.iter().map(CopySpec::h).sum::<usize>()
    }

    /// `|E(G)| + Σ |E(H_i)| + Σ t_i`
    pub fn total_edges(&self) -> usize {
        self.base.m() + self.copies.iter().map(|c| c.graph.m() + c.t()).sum::<usize>()
    }

    /// Same base with copy `k` taken from old position `order[k]`.
    pub fn permuted_copies(&self, order: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Precondition(format!("{order:?} is not a permutation of 0..{n}")));
        }
        Ok(Self {
            base: self.base.clone(),
            copies: order.iter().map(|&i| self.copies[i].clone()).collect(),
        })
    }
}

/// The corona graph: base vertices first, then `H_1`, `H_2`, … in order.
pub fn build(spec: &CoronaSpec) -> Graph {
    let total = spec.total_vertices();
    let mut pairs: Vec<(usize, usize)> = spec.base.edges().collect();
    let mut offset = spec.n();
    for (i, copy) in spec.copies.iter().enumerate() {
        pairs.extend(copy.graph.edges().map(|(u, v)| (u + offset, v + offset)));
        pairs.extend(copy.subset.indices().iter().map(|&u| (i, u + offset)));
        offset += copy.h();
    }
    Graph::from_pairs(total, pairs)
}

/// Classical corona `G ∘ H`: every base vertex joined to all of its copy.
pub fn corona(g: &Graph, h: &Graph) -> CoronaSpec {
    CoronaSpec {
        base: g.clone(),
        copies: vec![CopySpec::all(h.clone()); g.n()],
    }
}

/// Cluster `G{H}`: every base vertex joined to the root of its copy.
pub fn cluster(g: &Graph, h: &Graph) -> Result<CoronaSpec> {
    let copy = CopySpec::rooted(h.clone())?;
    Ok(CoronaSpec {
        base: g.clone(),
        copies: vec![copy; g.n()],
    })
}

/// Generalized corona `G ⊛ 𝓗`: one graph per base vertex, joined fully.
pub fn generalized(g: &Graph, hs: &[Graph]) -> Result<CoronaSpec> {
    CoronaSpec::new(g.clone(), hs.iter().cloned().map(CopySpec::all).collect())
}

/// Copies of `S(H)` joined to their original vertices.
pub fn corona_vertex_subdivision(g: &Graph, h: &Graph) -> CoronaSpec {
    let s = unary_op(UnaryKind::Subdivision, h);
    CoronaSpec {
        base: g.clone(),
        copies: vec![CopySpec::tagged(s, ORIGINAL_TAG); g.n()],
    }
}

/// Copies of `S(H)` joined to their inserted vertices.
pub fn corona_edge_subdivision(g: &Graph, h: &Graph) -> CoronaSpec {
    let s = unary_op(UnaryKind::Subdivision, h);
    CoronaSpec {
        base: g.clone(),
        copies: vec![CopySpec::tagged(s, INSERTED_TAG); g.n()],
    }
}

/// Copies `U(H_i′)` joined to all, original or inserted vertices.
pub fn unary_variant(g: &Graph, hs: &[Graph], kind: UnaryKind, role: SubsetRole) -> Result<CoronaSpec> {
    let copies = hs
        .iter()
        .map(|h| {
            let u = unary_op(kind, h);
            match role {
                SubsetRole::All => CopySpec::all(u),
                SubsetRole::Original => CopySpec::tagged(u, ORIGINAL_TAG),
                SubsetRole::Inserted => CopySpec::tagged(u, INSERTED_TAG),
            }
        })
        .collect();
    CoronaSpec::new(g.clone(), copies)
}

/// Parses `{"base": <graph>, "copies": [{"h": <graph>, "t": ...}, ...]}`
/// where `t` is an index array, `"all"`, `"root"`, or `"tag:<label>"`.
pub fn spec_from_json(v: &Value) -> Result<CoronaSpec> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Malformed("corona spec must be a JSON object".into()))?;
    let base = graph_from_json(obj.get("base").ok_or_else(|| Error::Malformed("missing `base`".into()))?)?;
    let copies = obj
        .get("copies")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed("missing `copies` array".into()))?
        .iter()
        .map(copy_from_json)
        .collect::<Result<Vec<_>>>()?;
    CoronaSpec::new(base, copies)
}

fn copy_from_json(v: &Value) -> Result<CopySpec> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Malformed("copy must be a JSON object".into()))?;
    let h = graph_from_json(obj.get("h").ok_or_else(|| Error::Malformed("copy is missing `h`".into()))?)?;
    match obj.get("t") {
        None => Err(Error::Malformed("copy is missing `t`".into())),
        Some(Value::String(s)) if s == "all" => Ok(CopySpec::all(h)),
        Some(Value::String(s)) if s == "root" => CopySpec::rooted(h),
        Some(Value::String(s)) => match s.strip_prefix("tag:") {
            Some(tag) => Ok(CopySpec::tagged(h, tag)),
            None => Err(Error::Malformed(format!("unknown subset selector `{s}`"))),
        },
        Some(Value::Array(items)) => {
            let idx = items
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|i| i as usize)
                        .ok_or_else(|| Error::Malformed(format!("subset index {x} is not a nonnegative integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            CopySpec::from_indices(h, idx)
        }
        Some(other) => Err(Error::Malformed(format!("bad subset {other}"))),
    }
}

/// Explicit JSON with index arrays.
pub fn spec_to_json(spec: &CoronaSpec) -> Value {
    let copies: Vec<Value> = spec
        .copies
        .iter()
        .map(|c| json!({"h": graph_to_json(&c.graph), "t": c.subset.indices()}))
        .collect();
    let mut obj = Map::new();
    obj.insert("base".into(), graph_to_json(&spec.base));
    obj.insert("copies".into(), Value::Array(copies));
    Value::Object(obj)
}
