//! Argument handling for the `longcycles` binary, kept in a library so the
//! tests can drive it in process.

use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use longcycles::bench::{bench, BenchSpec};
use longcycles::cycles::{oracle_max_packing, oracle_min_hitting, DetectorBudget};
use longcycles::gen::{cycle_graph, random_connected, rng, theta};
use longcycles::graph::{parse_graph, write_graph, EdgeSubset, MultiGraph};
use longcycles::solver::{solve_with_structure, verify_hitting_set, verify_packing, AssertLevel, Certificate, SolverConfig};
use longcycles::suns::{make_lower_bound_family, make_sun, sun_p};
use longcycles::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "longcycles", version, about = "Edge-disjoint long cycles or a small edge hitting set")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Produce a packing or hitting-set certificate for a graph.
    Solve(SolveArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Write a generated graph in the edge-list format.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
    /// Exhaustive packing number and minimum hitting set (small graphs only).
    Oracle(OracleArgs),
    /// Random sweep reported as CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    /// Wall-clock limit for the whole run in milliseconds, 0 for none.
    #[arg(long, default_value_t = 0)]
    budget_ms: u64,
    /// Search nodes per detector call, 0 for none.
    #[arg(long, default_value_t = DetectorBudget::default().max_nodes_expanded)]
    budget_nodes: u64,
}

impl BudgetArgs {
    fn budget(&self) -> DetectorBudget {
        DetectorBudget::new(self.budget_nodes, self.budget_ms).start_clock()
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Level {
    Low,
    High,
    Auto,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = Level::Auto)]
    assert_level: Level,
    /// Directory receiving one edge list and one JSON file per frame.
    #[arg(long)]
    dump_structure: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CertKind {
    Packing,
    Hitting,
    Any,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum, default_value_t = CertKind::Any)]
    kind: CertKind,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    cert: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    /// The sun, or `copies` disjoint suns.
    Sun {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
    /// A connected multigraph with random extra edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Two vertices joined by paths of the given lengths.
    Theta {
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
    },
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    k: usize,
    /// Seeds 0..seeds.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 20)]
    oracle_max_m: usize,
    /// Leave the ms column empty so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Runs one command and returns the process exit code: 0 on success, 2 for
/// invalid input, 3 when the budget ran out, 4 when an internal assertion
/// failed.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_graph(path: &FsPath) -> Result<MultiGraph> {
    let text = fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

fn emit(out: &mut dyn Write, target: Option<&PathBuf>, text: &str) -> Result<()> {
    match target {
        Some(p) => fs::write(p, text).map_err(|e| Error::invalid(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::invalid(format!("stdout: {e}"))),
    }
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Solve(a) => {
            let g = read_graph(&a.input)?;
            let cfg = SolverConfig {
                budget: a.budget.budget(),
                assert_level: match a.assert_level {
                    Level::Low => AssertLevel::Low,
                    Level::High => AssertLevel::High,
                    Level::Auto => AssertLevel::Auto,
                },
                seed: a.seed,
            };
            let (cert, dumps) = solve_with_structure(&g, a.k, a.ell, &cfg, a.dump_structure.is_some())?;
            if let Some(dir) = &a.dump_structure {
                fs::create_dir_all(dir).map_err(|e| Error::invalid(format!("{}: {e}", dir.display())))?;
                for (i, d) in dumps.iter().enumerate() {
                    let mut frame = MultiGraph::new(g.vertex_count());
                    for &e in &d.frame_edges {
                        let (u, v) = g.endpoints(e);
                        frame.add_edge(u, v);
                    }
                    let ids: Vec<String> = d.frame_edges.iter().map(|e| e.0.to_string()).collect();
                    let comments = vec![
                        format!("frame {i} at depth {}, k = {}, ds = {}", d.depth, d.k, d.ds),
                        format!("input edge ids: {}", ids.join(" ")),
                    ];
                    let write = |name: String, text: String| {
                        let p = dir.join(name);
                        fs::write(&p, text).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))
                    };
                    write(format!("frame_{i}.txt"), write_graph(&frame, &comments))?;
                    write(format!("frame_{i}.json"), serde_json::to_string_pretty(d).expect("serializable"))?;
                }
            }
            emit(out, a.output.as_ref(), &format!("{}\n", cert.to_json()))
        }
        Command::Verify(a) => {
            let g = read_graph(&a.input)?;
            let text = fs::read_to_string(&a.cert).map_err(|e| Error::invalid(format!("{}: {e}", a.cert.display())))?;
            let cert = Certificate::from_json(&text)?;
            let verdict = match (a.kind, cert.is_packing()) {
                (CertKind::Packing, false) | (CertKind::Hitting, true) => {
                    return Err(Error::invalid(format!("certificate is a {}", cert.kind())));
                }
                (_, true) => verify_packing(&g, &cert),
                (_, false) => verify_hitting_set(&g, &cert, &a.budget.budget())?,
            };
            emit(out, a.output.as_ref(), &json_line(serde_json::to_value(&verdict).expect("serializable")))
        }
        Command::Gen { family, output } => {
            let (g, comments) = match family {
                GenFamily::Sun { ell, copies } => {
                    let g = if copies == 1 { make_sun(ell)? } else { make_lower_bound_family(copies + 1, ell)? };
                    let p = sun_p(ell);
                    let comments = vec![
                        format!("sun ell={ell} p={p} copies={copies}"),
                        format!("clique v0..v{} on ids 0..{}, rim w_i adjacent to v_(i-1) and v_i on ids {p}..{}", p - 1, p - 1, 2 * p - 1),
                    ];
                    (g, comments)
                }
                GenFamily::Random { n, m, seed } => {
                    (random_connected(&mut rng(seed), n, m, true)?, vec![format!("random connected n={n} m={m} seed={seed}")])
                }
                GenFamily::Cycle { n } => {
                    if n == 0 {
                        return Err(Error::invalid("cycle needs n >= 1"));
                    }
                    (cycle_graph(n), vec![format!("cycle n={n}")])
                }
                GenFamily::Theta { lengths } => {
                    if lengths.contains(&0) {
                        return Err(Error::invalid("theta path lengths must be positive"));
                    }
                    let l: Vec<String> = lengths.iter().map(|x| x.to_string()).collect();
                    (theta(&lengths), vec![format!("theta lengths={}", l.join(","))])
                }
            };
            emit(out, output.as_ref(), &write_graph(&g, &comments))
        }
        Command::Oracle(a) => {
            let g = read_graph(&a.input)?;
            if a.ell == 0 {
                return Err(Error::invalid("ell must be at least 1"));
            }
            let b = a.budget.budget();
            let (pack, cycles) = oracle_max_packing(&g.full(), a.ell, &b)?;
            let (hit, x): (usize, EdgeSubset) = oracle_min_hitting(&g.full(), a.ell, &b)?;
            let report = serde_json::json!({
                "ell": a.ell,
                "max_packing": pack,
                "packing": cycles.iter().map(|c| c.edges().iter().map(|e| e.0).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "min_hitting": hit,
                "hitting_set": x.iter().map(|e| e.0).collect::<Vec<_>>(),
            });
            emit(out, a.output.as_ref(), &json_line(report))
        }
        Command::Bench(a) => {
            if a.k == 0 || a.ell == 0 {
                return Err(Error::invalid("k and ell must be at least 1"));
            }
            let mut spec = BenchSpec::new(a.n, a.m, a.ell, a.k, 0);
            spec.seeds = (0..a.seeds).collect();
            spec.oracle_max_m = a.oracle_max_m;
            spec.timing = !a.no_timing;
            spec.config.budget = a.budget.budget();
            emit(out, a.output.as_ref(), &bench(&spec)?)
        }
    }
}
