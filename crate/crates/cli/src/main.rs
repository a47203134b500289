mod input;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use vertex_position::bench::{exponent_in_n, exponent_in_nm, run_sweep, Density};
use vertex_position::census;
use vertex_position::format::{encode_edge_list, encode_graph6};
use vertex_position::generators::FamilySpec;
use vertex_position::oracle::{oracle_px, OracleBudget};
use vertex_position::solver::{solve_all_with, solve_px_with, CrossCheck, PositionResult, SolveOptions, VpSummary};
use vertex_position::theorems::{builtin_checks, find_check, max_ratio, run_check_on, Corpus, Instance, RunOptions};
use vertex_position::Error;

use input::{load, parse_text, read_source, Loaded};

/// Vertex position numbers: exact solver, exhaustive oracle, generators and
/// a theorem-check harness.
#[derive(Parser)]
#[command(name = "vpos", version, about)]
struct Cli {
    /// Worker threads (default: all cores for vp/verify/bench, 1 for oracle).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Table,
    Json,
    Tsv,
}

#[derive(Args)]
struct Source {
    /// Graph file (edge list or graph6 lines); `-` reads stdin.
    #[arg(conflicts_with = "gen")]
    file: Option<String>,
    /// Generate the input instead, e.g. `cycle:6`, `petersen`, `gnp:50,0.1,seed=3`.
    #[arg(long)]
    gen: Option<String>,
    /// Seed for random families, overriding any `seed=` in the spec.
    #[arg(long)]
    seed: Option<u64>,
}

impl Source {
    fn load(&self) -> Result<Vec<Loaded>, CliError> {
        load(self.file.as_deref(), self.gen.as_deref(), self.seed)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Largest x-position set for one root.
    Px {
        #[command(flatten)]
        src: Source,
        /// Root vertex: an id or a label.
        #[arg(long)]
        root: String,
        #[arg(long, value_enum, default_value = "table")]
        format: OutFormat,
        /// Re-derive and check every solver certificate.
        #[arg(long)]
        audit: bool,
        /// Also run the exhaustive oracle and record agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// p_x for every root, with vp and vp-.
    Vp {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value = "table")]
        format: OutFormat,
        #[arg(long)]
        audit: bool,
    },
    /// Exhaustive search for p_x (one root, or all roots).
    Oracle {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        root: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutFormat,
        /// Largest graph the search accepts.
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        /// Search-node budget per root.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Wall-clock budget per root, in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Run theorem checks; exits 1 if any counterexample is found.
    Verify {
        /// A check id, or `all`.
        #[arg(default_value = "all")]
        check: String,
        /// Corpus spec (`n<=7`, `all:n<=6`, `family:cycle:5;petersen`,
        /// `random:100,10,seed=1`, ... joined with `+`), or `-` for a graph6
        /// stream on stdin. Defaults to each check's own corpus.
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutFormat,
        #[arg(long)]
        audit: bool,
        /// Vertex limit for oracle-backed checks.
        #[arg(long, default_value_t = 12)]
        oracle_max_vertices: usize,
        /// Also report the largest vp / vp- ratio seen in each corpus.
        #[arg(long)]
        ratio: bool,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print graphs in graph6 (or edge-list) form.
    Gen {
        /// Family spec; omit when using --census.
        spec: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Every connected graph on this many vertices (1..=8).
        #[arg(long, conflicts_with = "spec")]
        census: Option<usize>,
        /// With --census, include disconnected graphs.
        #[arg(long, requires = "census")]
        all: bool,
        /// Write an edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Time solve_all on G(n, p) over a sweep of sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "250,500,1000,2000")]
        sizes: Vec<usize>,
        /// Fixed edge probability.
        #[arg(long, conflicts_with = "degree")]
        p: Option<f64>,
        /// Target mean degree (p = degree / (n - 1)); default 20.
        #[arg(long)]
        degree: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutFormat,
    },
    /// p_x at the representative roots x, c1, b1, a1 of the bundled 13-vertex example.
    Table1 {
        #[arg(long, value_enum, default_value = "table")]
        format: OutFormat,
    },
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => 3,
            Error::Invariant(_) => 4,
            _ => 2,
        };
        CliError { code, msg: e.to_string() }
    }
}

fn set_threads(n: Option<usize>, default_one: bool) {
    let n = n.or(default_one.then_some(1));
    if let Some(n) = n {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn label_list(l: &Loaded, vs: &[usize]) -> String {
    vs.iter().map(|&v| l.label(v)).collect::<Vec<_>>().join(" ")
}

fn ids(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn px_out(l: &Loaded, r: &PositionResult, format: OutFormat, out: &mut String) {
    match format {
        OutFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(r).expect("serialisable"));
        }
        OutFormat::Tsv => {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", r.n, r.root, r.value, ids(&r.witness));
        }
        OutFormat::Table => {
            let _ = writeln!(out, "root {} (vertex {}), n = {}", l.label(r.root), r.root, r.n);
            let _ = writeln!(out, "p_x = {}  [{}]", r.value, serde_json::to_value(r.method).unwrap().as_str().unwrap());
            let _ = writeln!(out, "witness: {}", label_list(l, &r.witness));
            if let Some(c) = r.cross_check {
                let _ = writeln!(out, "oracle: {} ({})", c.oracle_value, if c.agrees { "agrees" } else { "DISAGREES" });
            }
        }
    }
}

fn vp_out(l: &Loaded, s: &VpSummary, format: OutFormat, out: &mut String) {
    match format {
        OutFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(s).expect("serialisable"));
        }
        OutFormat::Tsv => {
            for r in &s.per_vertex {
                let _ = writeln!(out, "{}\t{}\t{}", r.root, r.value, ids(&r.witness));
            }
        }
        OutFormat::Table => {
            let w = (0..s.n).map(|v| l.label(v).len()).max().unwrap_or(1).max(6);
            let _ = writeln!(out, "{:w$}  p_x  witness", "vertex");
            for r in &s.per_vertex {
                let _ = writeln!(out, "{:w$}  {:>3}  {}", l.label(r.root), r.value, label_list(l, &r.witness));
            }
            let name = |v: Option<usize>| v.map_or("-".to_string(), |v| l.label(v));
            let _ = writeln!(out, "n = {}  vp = {} (at {})  vp- = {} (at {})", s.n, s.vp, name(s.argmax), s.vp_minus, name(s.argmin));
        }
    }
}

fn budget(max_vertices: usize, max_nodes: Option<u64>, time_limit: Option<f64>) -> OracleBudget {
    let mut b = OracleBudget::default().with_max_vertices(max_vertices);
    if let Some(m) = max_nodes {
        b.max_nodes = m;
    }
    if let Some(t) = time_limit {
        b = b.with_time_limit(Duration::from_secs_f64(t.max(0.0)));
    }
    b
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    let mut out = String::new();
    let mut code = 0;
    match cli.cmd {
        Cmd::Px { src, root, format, audit, cross_check } => {
            set_threads(cli.threads, false);
            for l in src.load()? {
                let x = l.resolve(&root)?;
                let mut r = solve_px_with(&l.graph, x, SolveOptions { audit, parallel: false })?;
                if cross_check {
                    let o = oracle_px(&l.graph, x, &OracleBudget::default().with_max_vertices(64))?.value;
                    r.cross_check = Some(CrossCheck { oracle_value: o, agrees: o == r.value });
                    if o != r.value {
                        code = 1;
                    }
                }
                px_out(&l, &r, format, &mut out);
            }
        }
        Cmd::Vp { src, format, audit } => {
            set_threads(cli.threads, false);
            for l in src.load()? {
                let s = solve_all_with(&l.graph, SolveOptions { audit, parallel: true })?;
                vp_out(&l, &s, format, &mut out);
            }
        }
        Cmd::Oracle { src, root, format, max_vertices, max_nodes, time_limit } => {
            set_threads(cli.threads, true);
            let b = budget(max_vertices, max_nodes, time_limit);
            for l in src.load()? {
                match &root {
                    Some(root) => {
                        let x = l.resolve(root)?;
                        px_out(&l, &oracle_px(&l.graph, x, &b)?, format, &mut out);
                    }
                    None => {
                        let per_vertex = (0..l.graph.n()).map(|x| oracle_px(&l.graph, x, &b)).collect::<Result<Vec<_>, _>>()?;
                        let argmax = per_vertex.iter().rev().max_by_key(|r| r.value).map(|r| r.root);
                        let argmin = per_vertex.iter().min_by_key(|r| r.value).map(|r| r.root);
                        let s = VpSummary {
                            n: l.graph.n(),
                            vp: argmax.map_or(0, |v| per_vertex[v].value),
                            vp_minus: argmin.map_or(0, |v| per_vertex[v].value),
                            argmax,
                            argmin,
                            per_vertex,
                        };
                        vp_out(&l, &s, format, &mut out);
                    }
                }
            }
        }
        Cmd::Verify { check, corpus, format, audit, oracle_max_vertices, ratio, list } => {
            set_threads(cli.threads, false);
            if list {
                for c in builtin_checks() {
                    let _ = writeln!(out, "{:24} {}  [{}]", c.id, c.statement, c.default_corpus);
                }
                return Ok((out, 0));
            }
            let checks = if check == "all" { builtin_checks() } else { vec![find_check(&check)?] };
            let shared: Option<(String, Vec<Instance>)> = match corpus.as_deref() {
                None => None,
                Some("-") => {
                    let graphs = parse_text(&read_source("-")?)?;
                    Some(("stdin".to_string(), graphs.into_iter().map(|l| Instance::census(l.graph)).collect()))
                }
                Some(spec) => {
                    let c: Corpus = spec.parse()?;
                    Some((c.to_string(), c.instances()?))
                }
            };
            let opts = RunOptions {
                solve: SolveOptions { audit, parallel: false },
                budget: OracleBudget::default().with_max_vertices(oracle_max_vertices),
                parallel: true,
            };
            let mut reports = Vec::new();
            let mut ratios = Vec::new();
            for c in &checks {
                let (name, instances) = match &shared {
                    Some((name, inst)) => (name.clone(), std::borrow::Cow::Borrowed(inst)),
                    None => (c.default_corpus.to_string(), std::borrow::Cow::Owned(c.corpus().instances()?)),
                };
                let r = run_check_on(c, &name, &instances, &opts);
                if !r.ok() {
                    code = 1;
                }
                if ratio && (shared.is_none() || ratios.is_empty()) {
                    ratios.push((name.clone(), max_ratio(&instances)?));
                }
                reports.push(r);
            }
            match format {
                OutFormat::Json => {
                    let ratio_json: Vec<_> = ratios
                        .iter()
                        .map(|(c, r)| json!({"corpus": c, "max_ratio": r.as_ref().map(|(a, b, g)| json!({"vp": a, "vp_minus": b, "graph6": g}))}))
                        .collect();
                    let doc = if ratio { json!({"reports": reports, "ratios": ratio_json}) } else { json!(reports) };
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
                }
                OutFormat::Tsv => {
                    for r in &reports {
                        let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}", r.check, r.corpus, r.tested, r.skipped, r.passed, r.counterexamples.len());
                    }
                }
                OutFormat::Table => {
                    let _ = writeln!(out, "{:24} {:>7} {:>7} {:>7} {:>5}  status", "check", "tested", "skipped", "passed", "fail");
                    for r in &reports {
                        let status = if r.ok() { "ok" } else { "FAIL" };
                        let _ = writeln!(
                            out,
                            "{:24} {:>7} {:>7} {:>7} {:>5}  {status}",
                            r.check,
                            r.tested,
                            r.skipped,
                            r.passed,
                            r.counterexamples.len()
                        );
                        for ce in r.counterexamples.iter().take(5) {
                            let _ = writeln!(out, "    {}  {}", ce.graph6, ce.detail);
                        }
                    }
                    for (c, r) in &ratios {
                        if let Some((a, b, g)) = r {
                            let _ = writeln!(out, "max vp/vp- on {c}: {a}/{b} ({g})");
                        }
                    }
                }
            }
        }
        Cmd::Gen { spec, seed, census: census_n, all, edges } => {
            let graphs: Vec<vertex_position::Graph> = match (spec, census_n) {
                (_, Some(n)) if all => census::all_graphs(n)?.collect(),
                (_, Some(n)) => census::enumerate_small_connected(n)?.collect(),
                (Some(spec), None) => vec![input::generate(&spec, seed)?.graph],
                (None, None) => return Err(CliError::usage("give a family spec or --census N")),
            };
            for g in graphs {
                if edges {
                    out.push_str(&encode_edge_list(&g));
                } else {
                    let _ = writeln!(out, "{}", encode_graph6(&g));
                }
            }
        }
        Cmd::Bench { sizes, p, degree, seed, format } => {
            set_threads(cli.threads, false);
            let density = match p {
                Some(p) => Density::Probability(p),
                None => Density::MeanDegree(degree.unwrap_or(20.0)),
            };
            if let Density::Probability(p) = density {
                if !(0.0..=1.0).contains(&p) {
                    return Err(CliError::usage("p must lie in [0, 1]"));
                }
            }
            let rows = run_sweep(&sizes, density, seed, cli.threads != Some(1))?;
            let (enm, en) = (exponent_in_nm(&rows), exponent_in_n(&rows));
            match format {
                OutFormat::Json => {
                    let doc = json!({"rows": rows, "exponent_in_nm": enm, "exponent_in_n": en});
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
                }
                OutFormat::Tsv => {
                    for r in &rows {
                        let _ = writeln!(out, "{}\t{}\t{}\t{:.6}", r.n, r.m, r.p, r.seconds);
                    }
                }
                OutFormat::Table => {
                    let _ = writeln!(out, "{:>7} {:>9} {:>9} {:>10} {:>6} {:>6}", "n", "m", "p", "seconds", "vp", "vp-");
                    for r in &rows {
                        let _ = writeln!(out, "{:>7} {:>9} {:>9.5} {:>10.4} {:>6} {:>6}", r.n, r.m, r.p, r.seconds, r.vp, r.vp_minus);
                    }
                    let fmt = |e: Option<f64>| e.map_or("-".to_string(), |e| format!("{e:.2}"));
                    let _ = writeln!(out, "fitted exponent: time ~ (n*m)^{}, time ~ n^{}", fmt(enm), fmt(en));
                }
            }
        }
        Cmd::Table1 { format } => {
            let lg = FamilySpec::Table1.generate()?;
            let l = Loaded { graph: lg.graph, labels: lg.labels };
            let mut rows = Vec::new();
            for name in ["x", "c1", "b1", "a1"] {
                let v = l.resolve(name)?;
                let r = solve_px_with(&l.graph, v, SolveOptions::audited())?;
                rows.push((name, v, r));
            }
            match format {
                OutFormat::Json => {
                    let doc: Vec<_> = rows
                        .iter()
                        .map(|(name, v, r)| json!({"label": name, "vertex": v, "p_x": r.value, "witness": r.witness}))
                        .collect();
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
                }
                OutFormat::Tsv => {
                    for (name, _, r) in &rows {
                        let _ = writeln!(out, "{name}\t{}", r.value);
                    }
                }
                OutFormat::Table => {
                    let _ = writeln!(out, "{:6} {:>4}  witness", "vertex", "p_x");
                    for (name, _, r) in &rows {
                        let _ = writeln!(out, "{name:6} {:>4}  {}", r.value, label_list(&l, &r.witness));
                    }
                }
            }
        }
    }
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
