//! Random sweeps comparing certificate sizes with the bound and with the
//! exhaustive optimum.

use std::fmt::Write as _;
use std::time::Instant;

use crate::cycles::oracle_min_hitting;
use crate::error::Result;
use crate::gen::{random_connected, rng};
use crate::solver::{solve, verify, Certificate, SolverConfig};

pub const CSV_HEADER: &str = "seed,n,m,ell,k,type,size,f_bound,oracle,ms";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchSpec {
    pub seeds: Vec<u64>,
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub k: usize,
    /// The oracle column is filled only up to this many edges.
    pub oracle_max_m: usize,
    /// When false the `ms` column is left empty so reruns compare equal.
    pub timing: bool,
    pub config: SolverConfig,
}

impl BenchSpec {
    pub fn new(n: usize, m: usize, ell: usize, k: usize, seeds: usize) -> Self {
        BenchSpec { seeds: (0..seeds as u64).collect(), n, m, ell, k, oracle_max_m: 20, timing: true, config: SolverConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub k: usize,
    pub kind: &'static str,
    /// Hitting-set size or number of cycles.
    pub size: usize,
    pub f_bound: usize,
    /// Minimum hitting-set size, when computed.
    pub oracle: Option<usize>,
    pub ms: Option<u128>,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            self.n,
            self.m,
            self.ell,
            self.k,
            self.kind,
            self.size,
            self.f_bound,
            opt(self.oracle.map(|o| o.to_string())),
            opt(self.ms.map(|t| t.to_string()))
        )
    }
}

pub fn bench_row(spec: &BenchSpec, seed: u64) -> Result<BenchRow> {
    let g = random_connected(&mut rng(seed), spec.n, spec.m, true)?;
    let start = Instant::now();
    let cert = solve(&g, spec.k, spec.ell, &spec.config)?;
    let ms = start.elapsed().as_millis();
    let verdict = verify(&g, &cert, &spec.config.budget)?;
    crate::ensure_claim!(verdict.valid, "bench certificates verify", "seed {seed}: {:?}", verdict.diagnostics);
    let oracle =
        if g.edge_count() <= spec.oracle_max_m { Some(oracle_min_hitting(&g.full(), spec.ell, &spec.config.budget)?.0) } else { None };
    let (kind, f_bound) = match &cert {
        Certificate::Packing { f_bound, .. } => ("packing", *f_bound),
        Certificate::HittingSet { f_bound, .. } => ("hitting_set", *f_bound),
    };
    Ok(BenchRow {
        seed,
        n: spec.n,
        m: spec.m,
        ell: spec.ell,
        k: spec.k,
        kind,
        size: cert.size(),
        f_bound,
        oracle,
        ms: spec.timing.then_some(ms),
    })
}

/// Runs every seed in order and renders the CSV, header included.
pub fn bench(spec: &BenchSpec) -> Result<String> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for &seed in &spec.seeds {
        let _ = writeln!(out, "{}", bench_row(spec, seed)?.to_csv());
    }
    Ok(out)
}
