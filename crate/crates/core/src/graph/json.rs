use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{unary_op, Graph, UnaryKind};
use crate::error::{Error, Result};

/// Parses a graph object: either explicit
/// `{"n": 4, "edges": [[0,1],...], "root": 0, "tags": {"0": "V"}}` or an
/// inline generator such as `{"gen": "cycle", "n": 6}` or
/// `{"gen": "unary", "op": "subdivision", "of": {...}}`.
pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Malformed("graph must be a JSON object".into()))?;
    let g = match obj.get("gen") {
        Some(gen) => generated(gen, obj)?,
        None => explicit(obj)?,
    };
    decorate(g, obj)
}

fn explicit(obj: &Map<String, Value>) -> Result<Graph> {
    let n = count(obj, "n")?;
    let edges = match obj.get("edges") {
        None => Vec::new(),
        Some(Value::Array(items)) => items
            .iter()
            .map(|e| match e.as_array().map(Vec::as_slice) {
                Some([a, b]) => Ok((index(a)?, index(b)?)),
                _ => Err(Error::Malformed(format!("edge must be a pair, got {e}"))),
            })
            .collect::<Result<Vec<_>>>()?,
        Some(other) => return Err(Error::Malformed(format!("edges must be an array, got {other}"))),
    };
    Graph::from_edges(n, &edges)
}

fn generated(gen: &Value, obj: &Map<String, Value>) -> Result<Graph> {
    let name = gen
        .as_str()
        .ok_or_else(|| Error::Malformed("gen must be a string".into()))?;
    match name {
        "complete" => Graph::complete(count(obj, "n")?),
        "complete_bipartite" => Graph::complete_bipartite(count(obj, "p")?, count(obj, "q")?),
        "cycle" => Graph::cycle(count(obj, "n")?),
        "path" => Graph::path(count(obj, "n")?),
        "empty" => Graph::empty(count(obj, "n")?),
        "unary" => {
            let op: UnaryKind = obj
                .get("op")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Malformed("unary generator needs an `op` string".into()))?
                .parse()?;
            let of = obj
                .get("of")
                .ok_or_else(|| Error::Malformed("unary generator needs `of`".into()))?;
            Ok(unary_op(op, &graph_from_json(of)?))
        }
        other => Err(Error::UnknownKind(other.to_string())),
    }
}

/// Applies optional `root` and `tags` on top of a parsed or generated graph.
fn decorate(mut g: Graph, obj: &Map<String, Value>) -> Result<Graph> {
    if let Some(tags) = obj.get("tags") {
        let tags = tags
            .as_object()
            .ok_or_else(|| Error::Malformed("tags must be an object".into()))?;
        let mut map = BTreeMap::new();
        for (k, t) in tags {
            let v: usize = k
                .parse()
                .map_err(|_| Error::Malformed(format!("tag key `{k}` is not a vertex index")))?;
            let t = t
                .as_str()
                .ok_or_else(|| Error::Malformed("tag values must be strings".into()))?;
            map.insert(v, t.to_string());
        }
        g = g.with_tags(map)?;
    }
    match obj.get("root") {
        None | Some(Value::Null) => Ok(g),
        Some(r) => g.with_root(index(r)?),
    }
}

fn count(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .ok_or_else(|| Error::Malformed(format!("missing `{key}`")))
        .and_then(index)
}

fn index(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Malformed(format!("expected a nonnegative integer, got {v}")))
}

/// Explicit graph JSON; `root` and `tags` appear only when set.
pub fn graph_to_json(g: &Graph) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(g.n()));
    obj.insert(
        "edges".into(),
        Value::Array(g.edges().map(|(u, v)| json!([u, v])).collect()),
    );
    if let Some(r) = g.root() {
        obj.insert("root".into(), json!(r));
    }
    if !g.tags().is_empty() {
        let tags: Map<String, Value> = g
            .tags()
            .iter()
            .map(|(v, t)| (v.to_string(), Value::String(t.clone())))
            .collect();
        obj.insert("tags".into(), Value::Object(tags));
    }
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_round_trip() {
        let v = json!({"n": 4, "edges": [[0, 1], [2, 1]], "root": 2, "tags": {"0": "V", "3": "I"}});
        let g = graph_from_json(&v).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.root(), Some(2));
        assert_eq!(g.tag(3), Some("I"));
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn generators() {
        let g = graph_from_json(&json!({"gen": "complete_bipartite", "p": 2, "q": 3})).unwrap();
        assert_eq!(g.m(), 6);
        let s = graph_from_json(&json!({"gen": "unary", "op": "subdivision", "of": {"gen": "cycle", "n": 4}})).unwrap();
        assert_eq!((s.n(), s.m()), (8, 8));
        let r = graph_from_json(&json!({"gen": "path", "n": 3, "root": 0})).unwrap();
        assert_eq!(r.root(), Some(0));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(graph_from_json(&json!([1, 2])), Err(Error::Malformed(_))));
        assert!(matches!(graph_from_json(&json!({"edges": []})), Err(Error::Malformed(_))));
        assert!(matches!(
            graph_from_json(&json!({"n": 2, "edges": [[0, 1, 2]]})),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            graph_from_json(&json!({"gen": "hypercube", "n": 3})),
            Err(Error::UnknownKind(_))
        ));
        assert!(matches!(
            graph_from_json(&json!({"n": 2, "edges": [[0, 0]]})),
            Err(Error::InvalidEdge(..))
        ));
    }
}
