//! Machine-checked record of closed forms that do not hold as typeset.
//!
//! Each finding evaluates the printed form, a corrected form and the general
//! path on concrete instances against the explicit-matrix oracle.

use serde::Serialize;
use serde_json::Value;

use crate::corona::{CopySpec, CoronaSpec};
use crate::coronal::IndexSet;
use crate::error::Result;
use crate::graph::{Graph, UnaryKind};
use crate::polyrat::{poly_to_json, Poly};
use crate::spectra::{
    corrected_kpq_laplacian, corrected_km_laplacian, corrected_semiregular_adjacency, laplacian_block_corollary,
    lht_charpoly, lht_closed_form, lht_closed_form_as_printed, lht_instance_complete, lht_instance_complete_bipartite,
    oracle_charpoly, printed_kpq_laplacian, printed_km_laplacian, printed_semiregular_adjacency, theorem_charpoly,
    SemiRegularPart, SpectralKind, DEFAULT_ORACLE_LIMIT,
};
use crate::table::{table_check, TableMismatch};

/// One instance: the oracle polynomial and how each form compares to it.
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub label: String,
    pub oracle: Value,
    pub printed: Value,
    pub corrected: Value,
    /// The general path and the corrected closed form both equal the oracle.
    pub general_matches: bool,
    pub printed_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub id: &'static str,
    pub printed_form: &'static str,
    pub corrected_form: &'static str,
    pub instances: Vec<Instance>,
}

impl Finding {
    pub fn general_holds(&self) -> bool {
        self.instances.iter().all(|i| i.general_matches)
    }

    /// At least one instance refutes the printed form.
    pub fn printed_refuted(&self) -> bool {
        self.instances.iter().any(|i| !i.printed_matches)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscrepancyReport {
    pub findings: Vec<Finding>,
    pub table: Vec<TableMismatch>,
    pub notes: Vec<String>,
}

impl DiscrepancyReport {
    /// Every general path agrees with the oracle and every printed form is
    /// refuted somewhere.
    pub fn passes(&self) -> bool {
        self.findings.iter().all(|f| f.general_holds() && f.printed_refuted())
    }

    pub fn finding(&self, id: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.id == id)
    }
}

fn instance(label: String, oracle: &Poly, printed: Result<Poly>, corrected: &Poly, general: &Poly) -> Instance {
    let printed = printed.ok();
    Instance {
        label,
        oracle: poly_to_json(oracle),
        printed: printed.as_ref().map_or(Value::Null, poly_to_json),
        corrected: poly_to_json(corrected),
        general_matches: corrected == oracle && general == oracle,
        printed_matches: printed.as_ref() == Some(oracle),
    }
}

fn uniform(base: &Graph, h: &Graph, t: Vec<usize>) -> Result<CoronaSpec> {
    let copy = CopySpec::new(h.clone(), IndexSet::new(t, h.n())?)?;
    CoronaSpec::new(base.clone(), vec![copy; base.n()])
}

fn bases() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![("K_2", Graph::complete(2)?), ("P_3", Graph::path(3)?)])
}

fn km_laplacian() -> Result<Finding> {
    let mut instances = Vec::new();
    for (name, g) in bases()? {
        for m in 2..=5 {
            for t in 1..m {
                let spec = uniform(&g, &Graph::complete(m)?, (0..t).collect())?;
                let oracle = oracle_charpoly(&spec, SpectralKind::Laplacian, DEFAULT_ORACLE_LIMIT)?;
                instances.push(instance(
                    format!("{name} with K_{m} copies, t = {t}"),
                    &oracle,
                    printed_km_laplacian(&g, m, t),
                    &corrected_km_laplacian(&g, m, t)?,
                    &laplacian_block_corollary(&spec)?,
                ));
            }
        }
    }
    Ok(Finding {
        id: "km-laplacian",
        printed_form: "x^3 - (t+mu+m+1)x^2 - (m+1)(t+mu)x - t*mu",
        corrected_form: "x^3 - (t+mu+m+1)x^2 + (m+1)(t+mu)x - t*mu",
        instances,
    })
}

fn kpq_laplacian() -> Result<Finding> {
    let mut instances = Vec::new();
    for (name, g) in bases()? {
        for (p, q) in [(1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (1, 3), (2, 4)] {
            let spec = uniform(&g, &Graph::complete_bipartite(p, q)?, (0..p).collect())?;
            let oracle = oracle_charpoly(&spec, SpectralKind::Laplacian, DEFAULT_ORACLE_LIMIT)?;
            instances.push(instance(
                format!("{name} with K_{{{p},{q}}} copies, T = part of size {p}"),
                &oracle,
                printed_kpq_laplacian(&g, p, q),
                &corrected_kpq_laplacian(&g, p, q)?,
                &laplacian_block_corollary(&spec)?,
            ));
        }
    }
    Ok(Finding {
        id: "kpq-laplacian",
        printed_form: "(x-p-1)^{n(p-1)} (x-q)^{n(q-1)} * prod(x^3 - (2p+mu+q+1)x^2 + (p+q+1)(p+mu)x - q*mu)",
        corrected_form: "(x-q-1)^{n(p-1)} (x-p)^{n(q-1)} * prod(x^3 - (2p+mu+q+1)x^2 + (p+q+1)(p+mu)x - p*mu)",
        instances,
    })
}

fn semiregular_adjacency() -> Result<Finding> {
    let mut instances = Vec::new();
    let copies = [
        ("K_2", Graph::complete(2)?),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)?),
        ("C_6", Graph::cycle(6)?),
    ];
    for (name, g) in bases()?.into_iter().chain([("K_1", Graph::complete(1)?)]) {
        for (hname, h) in &copies {
            let spec = uniform(&g, h, (0..h.n()).collect())?;
            let oracle = oracle_charpoly(&spec, SpectralKind::Adjacency, DEFAULT_ORACLE_LIMIT)?;
            instances.push(instance(
                format!("{name} with {hname} copies, T = all"),
                &oracle,
                printed_semiregular_adjacency(&g, h, SemiRegularPart::Full),
                &corrected_semiregular_adjacency(&g, h)?,
                &theorem_charpoly(&spec, SpectralKind::Adjacency)?,
            ));
        }
    }
    Ok(Finding {
        id: "semiregular-adjacency",
        printed_form: "x^3 - lambda x^2 - (r1r2+n1+n2)x + r1r2 lambda + 2n1r1",
        corrected_form: "x^3 - lambda x^2 - (r1r2+n1+n2)x + r1r2 lambda - 2n1r1",
        instances,
    })
}

fn lht_proposition() -> Result<Finding> {
    let mut instances = Vec::new();
    for m in 2..=6 {
        for t in 1..m {
            let (profile, pairs) = lht_instance_complete(m, t)?;
            let direct = lht_charpoly(&Graph::complete(m)?, &IndexSet::new((0..t).collect(), m)?)?;
            let closed = lht_closed_form(&profile, &pairs)?;
            instances.push(instance(
                format!("K_{m}, T of size {t}"),
                &direct,
                lht_closed_form_as_printed(&profile, &pairs),
                &closed,
                &closed,
            ));
        }
    }
    for (p, q) in [(1, 1), (1, 3), (2, 3), (3, 2), (3, 3)] {
        let (profile, pairs) = lht_instance_complete_bipartite(p, q)?;
        let direct = lht_charpoly(&Graph::complete_bipartite(p, q)?, &IndexSet::new((0..p).collect(), p + q)?)?;
        let closed = lht_closed_form(&profile, &pairs)?;
        instances.push(instance(
            format!("K_{{{p},{q}}}, T = part of size {p}"),
            &direct,
            lht_closed_form_as_printed(&profile, &pairs),
            &closed,
            &closed,
        ));
    }
    Ok(Finding {
        id: "lht-closed-form",
        printed_form: "leading x^2 - ((n-t)t2 + a3 - (t2/a3)t a2 + a2 + 1)x + (a2+1)((n-t)t2 + a3 - (t2/a3)t a2); pair constant (c + t3 lambda)(a2 + mu + 1) - lambda",
        corrected_form: "leading x^2 - (a2+a3+1)x + a3; pair constant (c - t3 lambda)(a2 + mu + 1) - lambda",
        instances,
    })
}

pub fn discrepancy_report() -> Result<DiscrepancyReport> {
    let findings = vec![km_laplacian()?, kpq_laplacian()?, semiregular_adjacency()?, lht_proposition()?];
    let table = table_check(&Graph::cycle(4)?, &UnaryKind::ALL)?;
    let mut notes = table.notes.clone();
    notes.push(
        "K_{p,q} Laplacian: the printed form agrees with the oracle exactly when p = q, where both misprints cancel"
            .into(),
    );
    Ok(DiscrepancyReport {
        findings,
        table: table.mismatches,
        notes,
    })
}
