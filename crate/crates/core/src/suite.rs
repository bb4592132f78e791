//! Built-in small-instance suite and theorem-versus-oracle verification.

use serde::Serialize;

use crate::corona::{cluster, corona, corona_edge_subdivision, corona_vertex_subdivision, CopySpec, CoronaSpec};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::graph::{unary_op, Graph, UnaryKind, INSERTED_TAG, ORIGINAL_TAG};
use crate::polyrat::{rational, Poly};
use crate::spectra::{
    block_structured_charpoly, cluster_charpolys, equal_coronal_charpoly, induced_profile, laplacian_block_corollary,
    oracle_charpoly_with, theorem_charpoly_with, BlockVariant, SpectralKind,
};

#[derive(Clone, Debug)]
pub struct SuiteCase {
    pub name: String,
    pub spec: CoronaSpec,
}

#[derive(Clone, Copy, Debug)]
enum Mode {
    All,
    Empty,
    Single,
    Original,
    Inserted,
}

const MODES: [Mode; 5] = [Mode::All, Mode::Empty, Mode::Single, Mode::Original, Mode::Inserted];

fn copy_pool() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![
        ("K_1", Graph::complete(1)?),
        ("K_2", Graph::complete(2)?),
        ("K_3", Graph::complete(3)?),
        ("P_3", Graph::path(3)?),
        ("K_{1,2}", Graph::complete_bipartite(1, 2)?),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)?),
        ("C_4", Graph::cycle(4)?),
        ("S(P_3)", unary_op(UnaryKind::Subdivision, &Graph::path(3)?)),
        ("S(K_3)", unary_op(UnaryKind::Subdivision, &Graph::complete(3)?)),
    ])
}

fn base_pool() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![
        ("K_1", Graph::complete(1)?),
        ("K_2", Graph::complete(2)?),
        ("P_3", Graph::path(3)?),
        ("C_4", Graph::cycle(4)?),
        ("K_3", Graph::complete(3)?),
    ])
}

/// Tag modes fall back to a singleton on untagged graphs.
fn make_copy(name: &str, h: &Graph, mode: Mode, salt: usize) -> Result<(String, CopySpec)> {
    let tagged = !h.tags().is_empty();
    let single = || CopySpec::from_indices(h.clone(), vec![salt % h.n()]);
    let (label, copy) = match mode {
        Mode::All => ("all".to_string(), CopySpec::all(h.clone())),
        Mode::Empty => ("none".to_string(), CopySpec::from_indices(h.clone(), vec![])?),
        Mode::Original if tagged => ("tag:V".to_string(), CopySpec::tagged(h.clone(), ORIGINAL_TAG)),
        Mode::Inserted if tagged => ("tag:I".to_string(), CopySpec::tagged(h.clone(), INSERTED_TAG)),
        _ => (format!("{{{}}}", salt % h.n()), single()?),
    };
    Ok((format!("{name}[{label}]"), copy))
}

/// At least 30 specs: bases {K_1, K_2, P_3, C_4, K_3}, copies from
/// {K_1, K_2, K_3, P_3, K_{1,2}, K_{2,3}, C_4, S(P_3), S(K_3)} with subsets
/// all, empty, singleton, V-tagged or I-tagged, plus the named constructions.
pub fn small_suite() -> Result<Vec<SuiteCase>> {
    let pool = copy_pool()?;
    let mut cases = Vec::new();
    for (b, (bname, base)) in base_pool()?.into_iter().enumerate() {
        for k in 0..7 {
            let mut names = Vec::new();
            let mut copies = Vec::new();
            for i in 0..base.n() {
                let (hname, h) = &pool[(3 * b + 2 * k + i) % pool.len()];
                let mode = MODES[(b + k + 2 * i) % MODES.len()];
                let (label, copy) = make_copy(hname, h, mode, k + i)?;
                names.push(label);
                copies.push(copy);
            }
            cases.push(SuiteCase {
                name: format!("{bname} ⊛ ({})", names.join(", ")),
                spec: CoronaSpec::new(base.clone(), copies)?,
            });
        }
    }
    let k = |n| Graph::complete(n);
    let named = [
        ("K_1 ∘ K_2", corona(&k(1)?, &k(2)?)),
        ("K_3 ∘ C_4", corona(&k(3)?, &Graph::cycle(4)?)),
        ("K_2{K_2 rooted}", cluster(&k(2)?, &k(2)?.with_root(0)?)?),
        ("P_3{P_3 rooted at 1}", cluster(&Graph::path(3)?, &Graph::path(3)?.with_root(1)?)?),
        ("C_4 vertex-subdivision K_3", corona_vertex_subdivision(&Graph::cycle(4)?, &k(3)?)),
        ("P_3 edge-subdivision P_3", corona_edge_subdivision(&Graph::path(3)?, &Graph::path(3)?)),
    ];
    cases.extend(named.into_iter().map(|(name, spec)| SuiteCase { name: name.into(), spec }));
    Ok(cases)
}

/// Pairs of specs built from `Du(H)` joined on the original versus the
/// inserted vertices; each pair should be cospectral for every kind.
pub fn duplication_pairs() -> Result<Vec<(String, CoronaSpec, CoronaSpec)>> {
    let mut out = Vec::new();
    for (bname, base) in [("K_2", Graph::complete(2)?), ("P_3", Graph::path(3)?)] {
        for (hname, h) in [("P_3", Graph::path(3)?), ("K_3", Graph::complete(3)?), ("C_4", Graph::cycle(4)?)] {
            let du = unary_op(UnaryKind::Duplication, &h);
            let v = CoronaSpec::new(base.clone(), vec![CopySpec::tagged(du.clone(), ORIGINAL_TAG); base.n()])?;
            let i = CoronaSpec::new(base.clone(), vec![CopySpec::tagged(du, INSERTED_TAG); base.n()])?;
            out.push((format!("{bname} with Du({hname})"), v, i));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FastCheck {
    pub path: &'static str,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub kind: SpectralKind,
    pub vertices: usize,
    pub oracle_matches: bool,
    /// Trace-linked coefficients of the theorem polynomial.
    pub identities_hold: bool,
    pub fast_paths: Vec<FastCheck>,
}

impl CaseResult {
    pub fn passes(&self) -> bool {
        self.oracle_matches && self.identities_hold && self.fast_paths.iter().all(|f| f.matches)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub cases: Vec<CaseResult>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.cases.iter().all(CaseResult::passes)
    }

    pub fn failures(&self) -> Vec<&CaseResult> {
        self.cases.iter().filter(|c| !c.passes()).collect()
    }
}

fn identities_hold(p: &Poly, spec: &CoronaSpec, kind: SpectralKind) -> bool {
    let n = spec.total_vertices();
    if p.degree() != Some(n) || !p.is_monic() {
        return false;
    }
    let trace = match kind {
        SpectralKind::Adjacency => 0,
        _ => 2 * spec.total_edges() as i64,
    };
    let next = if n == 0 { rational(0) } else { p.coeff(n - 1) };
    let ok = next == rational(-trace);
    match kind {
        SpectralKind::Laplacian => ok && p.coeff(0) == rational(0),
        _ => ok,
    }
}

/// Fast paths whose preconditions fail are skipped, not counted as failures.
fn fast_checks(spec: &CoronaSpec, kind: SpectralKind, theorem: &Poly) -> Result<Vec<FastCheck>> {
    let mut out = Vec::new();
    let mut record = |path, r: Result<Poly>| -> Result<()> {
        match r {
            Ok(p) => out.push(FastCheck { path, matches: p == *theorem }),
            Err(Error::CoronalsNotEqual | Error::HeterogeneousProfiles(_) | Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
        Ok(())
    };
    record("equal_coronal", equal_coronal_charpoly(spec, kind))?;
    if kind == SpectralKind::Laplacian {
        record("laplacian_block", laplacian_block_corollary(spec))?;
    }
    let copies = spec.copies();
    let proper = copies.iter().all(|c| 0 < c.t() && c.t() < c.h());
    if kind == SpectralKind::Adjacency && proper {
        let profiles: Result<Vec<_>> = copies.iter().map(induced_profile).collect();
        if let Ok(profiles) = profiles {
            record("block_structured", block_structured_charpoly(spec, &profiles, BlockVariant::Induced))?;
        }
    }
    let first = &copies[0];
    let is_cluster = copies.iter().all(|c| c == first)
        && first.graph().root().is_some_and(|r| first.subset().indices() == [r]);
    if is_cluster && kind != SpectralKind::Signless {
        let (a, l) = cluster_charpolys(spec.base(), first.graph())?;
        record("cluster", Ok(if kind == SpectralKind::Adjacency { a } else { l }))?;
    }
    Ok(out)
}

pub fn verify_case(case: &SuiteCase, kind: SpectralKind, oracle_bound: usize, strategy: Strategy) -> Result<CaseResult> {
    let theorem = theorem_charpoly_with(&case.spec, kind, strategy)?;
    let oracle = oracle_charpoly_with(&case.spec, kind, oracle_bound, strategy)?;
    Ok(CaseResult {
        name: case.name.clone(),
        kind,
        vertices: case.spec.total_vertices(),
        oracle_matches: theorem == oracle,
        identities_hold: identities_hold(&theorem, &case.spec, kind),
        fast_paths: fast_checks(&case.spec, kind, &theorem)?,
    })
}

/// Every case against every kind; cases run in parallel under
/// [`Strategy::Parallel`] with sequential inner loops.
pub fn verify(cases: &[SuiteCase], kinds: &[SpectralKind], oracle_bound: usize, strategy: Strategy) -> Result<VerifyReport> {
    let jobs: Vec<(&SuiteCase, SpectralKind)> =
        cases.iter().flat_map(|c| kinds.iter().map(move |&k| (c, k))).collect();
    let results = strategy.try_map(&jobs, |(c, k)| verify_case(c, *k, oracle_bound, Strategy::Sequential))?;
    Ok(VerifyReport { cases: results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::DEFAULT_ORACLE_LIMIT;

    #[test]
    fn suite_shape() {
        let cases = small_suite().unwrap();
        assert!(cases.len() >= 30);
        let names: String = cases.iter().map(|c| c.name.as_str()).collect();
        for needle in ["tag:V", "tag:I", "none", "all", "S(K_3)", "K_{2,3}"] {
            assert!(names.contains(needle), "{needle}");
        }
    }

    #[test]
    fn named_cases_verify() {
        let cases: Vec<SuiteCase> = small_suite().unwrap().into_iter().rev().take(6).collect();
        let report = verify(&cases, &SpectralKind::ALL, DEFAULT_ORACLE_LIMIT, Strategy::default()).unwrap();
        assert!(report.passes(), "{:?}", report.failures());
        let paths: std::collections::BTreeSet<&str> =
            report.cases.iter().flat_map(|c| c.fast_paths.iter().map(|f| f.path)).collect();
        assert_eq!(
            paths.into_iter().collect::<Vec<_>>(),
            ["block_structured", "cluster", "equal_coronal", "laplacian_block"]
        );
    }

    #[test]
    fn duplication_remark() {
        for (name, v, i) in duplication_pairs().unwrap() {
            for kind in SpectralKind::ALL {
                assert_eq!(
                    theorem_charpoly_with(&v, kind, Strategy::Sequential).unwrap(),
                    theorem_charpoly_with(&i, kind, Strategy::Sequential).unwrap(),
                    "{name} {kind}"
                );
            }
        }
    }
}
