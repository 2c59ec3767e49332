use serde::{Deserialize, Serialize};

use crate::cycles::{find_long_cycle, log2k, DetectorBudget, LongCycleQuery};
use crate::error::Result;
use crate::graph::{Cycle, EdgeId, EdgeSubset, MultiGraph};

/// `⌈210·k²·log₂k + 10·ell·(k−1)⌉`.
pub fn f_bound(k: usize, ell: usize) -> usize {
    let k_f = k as f64;
    (210.0 * k_f * k_f * log2k(k) + 10.0 * ell as f64 * (k_f - 1.0)).ceil() as usize
}

/// Largest structures seen while solving.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub ds: usize,
    pub hubs: usize,
    pub recursion_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Packing {
        k: usize,
        ell: usize,
        cycles: Vec<Cycle>,
        f_bound: usize,
        #[serde(default)]
        stats: Stats,
    },
    HittingSet {
        k: usize,
        ell: usize,
        edges: Vec<EdgeId>,
        f_bound: usize,
        #[serde(default)]
        stats: Stats,
    },
}

impl Certificate {
    pub fn k(&self) -> usize {
        match self {
            Certificate::Packing { k, .. } | Certificate::HittingSet { k, .. } => *k,
        }
    }

    pub fn ell(&self) -> usize {
        match self {
            Certificate::Packing { ell, .. } | Certificate::HittingSet { ell, .. } => *ell,
        }
    }

    pub fn stats(&self) -> Stats {
        match self {
            Certificate::Packing { stats, .. } | Certificate::HittingSet { stats, .. } => *stats,
        }
    }

    pub fn is_packing(&self) -> bool {
        matches!(self, Certificate::Packing { .. })
    }

    /// "packing" or "hitting_set".
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Packing { .. } => "packing",
            Certificate::HittingSet { .. } => "hitting_set",
        }
    }

    /// Number of cycles or of hitting edges.
    pub fn size(&self) -> usize {
        match self {
            Certificate::Packing { cycles, .. } => cycles.len(),
            Certificate::HittingSet { edges, .. } => edges.len(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| crate::Error::invalid(format!("certificate: {e}")))
    }
}

/// Outcome of checking a certificate against a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

impl Verdict {
    fn from(diagnostics: Vec<String>) -> Verdict {
        Verdict { valid: diagnostics.is_empty(), diagnostics }
    }
}

fn header_checks(k: usize, ell: usize, bound: usize, out: &mut Vec<String>) {
    if k == 0 || ell == 0 {
        out.push(format!("k = {k} and ell = {ell} must both be positive"));
    } else if bound != f_bound(k, ell) {
        out.push(format!("f_bound {bound} differs from the bound {} for k = {k}, ell = {ell}", f_bound(k, ell)));
    }
}

/// Exactly `k` valid, pairwise edge-disjoint cycles of length at least `ell`.
pub fn verify_packing(g: &MultiGraph, cert: &Certificate) -> Verdict {
    let Certificate::Packing { k, ell, cycles, f_bound: bound, .. } = cert else {
        return Verdict::from(vec!["not a packing certificate".into()]);
    };
    let mut out = Vec::new();
    header_checks(*k, *ell, *bound, &mut out);
    if cycles.len() != *k {
        out.push(format!("{} cycles listed, {k} required", cycles.len()));
    }
    let mut used = EdgeSubset::empty(g.edge_count());
    for (i, c) in cycles.iter().enumerate() {
        if !c.is_valid_in(g) {
            out.push(format!("cycle {i} is not a cycle of the graph"));
            continue;
        }
        if c.len() < *ell {
            out.push(format!("cycle {i} has length {} < {ell}", c.len()));
        }
        for &e in c.edges() {
            if used.contains(e) {
                out.push(format!("edge {e} is used by two cycles"));
            }
            used.insert(e);
        }
    }
    Verdict::from(out)
}

/// At most `f_bound(k, ell)` distinct edges whose removal leaves no long cycle.
pub fn verify_hitting_set(g: &MultiGraph, cert: &Certificate, budget: &DetectorBudget) -> Result<Verdict> {
    let Certificate::HittingSet { k, ell, edges, f_bound: bound, .. } = cert else {
        return Ok(Verdict::from(vec!["not a hitting-set certificate".into()]));
    };
    let mut out = Vec::new();
    header_checks(*k, *ell, *bound, &mut out);
    let m = g.edge_count();
    let mut x = EdgeSubset::empty(m);
    for &e in edges {
        if e.0 >= m {
            out.push(format!("edge {e} is out of range"));
        } else if x.contains(e) {
            out.push(format!("edge {e} is listed twice"));
        } else {
            x.insert(e);
        }
    }
    if *k > 0 && edges.len() > f_bound(*k, (*ell).max(1)) {
        out.push(format!("{} edges exceed the bound {}", edges.len(), f_bound(*k, (*ell).max(1))));
    }
    if out.is_empty() {
        let rest = g.full().without(&x);
        if let Some(c) = find_long_cycle(&rest, &LongCycleQuery::any_long(*ell), budget)? {
            out.push(format!("a cycle of length {} avoids the set: {:?}", c.len(), c.sorted_ids()));
        }
    }
    Ok(Verdict::from(out))
}

/// Dispatches on the certificate type.
pub fn verify(g: &MultiGraph, cert: &Certificate, budget: &DetectorBudget) -> Result<Verdict> {
    match cert {
        Certificate::Packing { .. } => Ok(verify_packing(g, cert)),
        Certificate::HittingSet { .. } => verify_hitting_set(g, cert, budget),
    }
}
