use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::corona::CoronaSpec;
use crate::error::Result;
use crate::exec::Strategy;
use crate::polyrat::{poly_to_json, Poly};

use super::roots::{numeric_roots, Root};
use super::theorem::{oracle_charpoly_with, theorem_charpoly_with, DEFAULT_ORACLE_LIMIT};
use super::SpectralKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    /// Nothing to compare against.
    Unchecked,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub oracle: bool,
    pub oracle_bound: usize,
    pub roots: bool,
    pub tol: f64,
    pub corollary: Option<Poly>,
    pub strategy: Strategy,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            oracle: false,
            oracle_bound: DEFAULT_ORACLE_LIMIT,
            roots: false,
            tol: 1e-9,
            corollary: None,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharPolyReport {
    pub kind: SpectralKind,
    pub theorem: Poly,
    pub oracle: Option<Poly>,
    pub corollary: Option<Poly>,
    pub verdict: Verdict,
    /// `theorem − reference` for the first reference that disagrees.
    pub diff: Option<Poly>,
    pub roots: Vec<Root>,
}

impl CharPolyReport {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind));
        m.insert("theorem".into(), poly_to_json(&self.theorem));
        m.insert("oracle".into(), self.oracle.as_ref().map_or(Value::Null, poly_to_json));
        if let Some(c) = &self.corollary {
            m.insert("corollary".into(), poly_to_json(c));
        }
        m.insert("verdict".into(), json!(self.verdict));
        if let Some(d) = &self.diff {
            m.insert("diff".into(), poly_to_json(d));
        }
        m.insert("roots".into(), json!(self.roots));
        Value::Object(m)
    }
}

pub fn charpoly_report(spec: &CoronaSpec, kind: SpectralKind, opts: &ReportOptions) -> Result<CharPolyReport> {
    let theorem = theorem_charpoly_with(spec, kind, opts.strategy)?;
    let oracle = if opts.oracle {
        Some(oracle_charpoly_with(spec, kind, opts.oracle_bound, opts.strategy)?)
    } else {
        None
    };
    let references: Vec<&Poly> = oracle.iter().chain(opts.corollary.iter()).collect();
    let diff = references.iter().find(|r| ***r != theorem).map(|r| &theorem - *r);
    let verdict = match (references.is_empty(), &diff) {
        (true, _) => Verdict::Unchecked,
        (false, None) => Verdict::Match,
        (false, Some(_)) => Verdict::Mismatch,
    };
    let roots = if opts.roots { numeric_roots(&theorem, opts.tol) } else { Vec::new() };
    Ok(CharPolyReport {
        kind,
        theorem,
        oracle,
        corollary: opts.corollary.clone(),
        verdict,
        diff,
        roots,
    })
}
