use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use locdom::certify::{self, LandmarkSet};
use locdom::families::{generate, prufer_tree, FamilySpec};
use locdom::graph::Graph;
use locdom::harness::{self, HarnessConfig, SelfCheck, CHECK_GROUPS};
use locdom::metric::TruncatedMetric;
use locdom::report::{CheckRecord, InputDigest, Report};
use locdom::solve::{solve, Parameter};

#[derive(Parser)]
#[command(name = "locdom", about = "Exact distance-k domination, truncated dimension, and locating-dominating sets", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParamKind {
    Gamma,
    Dim,
    #[value(name = "gammaL")]
    GammaL,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a parameter exactly on an edge-list graph
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        param: ParamKind,
        /// Distance level; for gammaL this sets both s and t unless overridden
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Resolving level for gammaL
        #[arg(long)]
        s: Option<usize>,
        /// Dominating level for gammaL
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Check whether a vertex set is distance-s resolving and distance-t dominating
    Verify {
        file: PathBuf,
        /// Comma-separated vertex ids, e.g. 0,3,5
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Generate a named graph family as an edge list
    Family {
        /// Family kind; see --list
        kind: Option<String>,
        /// Kind-specific parameters
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// List available kinds and their parameters
        #[arg(long)]
        list: bool,
    },
    /// Exhaustively check the tree bound and its equality characterization
    TreeSweep {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Comma-separated distance levels
        #[arg(long, default_value = "1,2")]
        k: String,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Delete each non-bridge edge and tabulate parameter deltas
    EdgeSweep {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the theorem-verification harness
    Harness {
        /// Restrict to one check group
        #[arg(long)]
        only: Option<String>,
        /// Cap for path/cycle orders and the tree sweep
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        random_count: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
}

fn load_graph(path: &PathBuf) -> Result<(Graph, InputDigest), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let g = Graph::from_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let digest = InputDigest {
        n: g.n(),
        m: g.edge_count(),
        sha256: format!("{:x}", Sha256::digest(text.as_bytes())),
    };
    Ok((g, digest))
}

fn parse_id_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad vertex id {t:?}")))
        .collect()
}

fn emit(report: Report, path: Option<&PathBuf>) -> Result<ExitCode, String> {
    for check in &report.checks {
        let tag = if check.passed() { "PASS" } else { "FAIL" };
        println!("[{tag}] {}: {}", check.name, check.details);
    }
    let passed = report.checks.iter().filter(|c| c.passed()).count();
    println!("{passed}/{} checks passed", report.checks.len());
    if let Some(p) = path {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        fs::write(p, json).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
        println!("report written to {}", p.display());
    }
    Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn finish(mut report: Report, started: Instant, no_timing: bool, path: Option<&PathBuf>) -> Result<ExitCode, String> {
    if !no_timing {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    emit(report.finish(), path)
}

fn cmd_solve(
    file: PathBuf,
    param: ParamKind,
    k: usize,
    s: Option<usize>,
    t: Option<usize>,
    report_path: Option<PathBuf>,
    no_timing: bool,
) -> Result<ExitCode, String> {
    let started = Instant::now();
    let (g, digest) = load_graph(&file)?;
    let parameter = match param {
        ParamKind::Gamma => Parameter::GammaK { k },
        ParamKind::Dim => Parameter::DimK { k },
        ParamKind::GammaL => Parameter::GammaLst { s: s.unwrap_or(k), t: t.unwrap_or(k) },
    };
    let result = solve(&g, parameter).map_err(|e| e.to_string())?;
    println!("{} = {}", result.parameter, result.value);
    println!("witness: {:?}", result.witness.sorted_members());
    println!("lower bound used: {}", result.lower_bound_used);
    println!("nodes explored: {}", result.nodes_explored);

    let mut report = Report::new(format!("solve --param {param:?} k={k} s={s:?} t={t:?}"));
    report.input = Some(digest);
    report.checks.push(CheckRecord::from_violations(
        "solve",
        "exact minimum via iterative deepening with twin and packing lower bounds",
        format!(
            "{} = {}; witness {:?}; lower bound {}; nodes {}",
            result.parameter,
            result.value,
            result.witness.sorted_members(),
            result.lower_bound_used,
            result.nodes_explored
        ),
        &[],
    ));
    finish(report, started, no_timing, report_path.as_ref())
}

fn cmd_verify(
    file: PathBuf,
    set: String,
    k: usize,
    s: Option<usize>,
    t: Option<usize>,
    report_path: Option<PathBuf>,
    no_timing: bool,
) -> Result<ExitCode, String> {
    let started = Instant::now();
    let (g, digest) = load_graph(&file)?;
    let ids = parse_id_list(&set)?;
    if let Some(&bad) = ids.iter().find(|&&v| v >= g.n()) {
        return Err(format!("unknown vertex label {bad} (graph has n = {})", g.n()));
    }
    let (s, t) = (s.unwrap_or(k), t.unwrap_or(k));
    let landmarks = LandmarkSet::new(ids);

    let resolving_metric = TruncatedMetric::new(&g, s);
    let dominating_metric = if s == t { resolving_metric.clone() } else { TruncatedMetric::new(&g, t) };

    let resolving_violations: Vec<String> = certify::unresolved_pair(&resolving_metric, &landmarks)
        .map(|(x, y)| format!("vertices {x} and {y} share a code at level s = {s}"))
        .into_iter()
        .collect();
    let dominating_violations: Vec<String> = certify::undominated_vertex(&dominating_metric, &landmarks)
        .map(|v| format!("vertex {v} is beyond distance t = {t} from every member"))
        .into_iter()
        .collect();
    let both_ok = resolving_violations.is_empty() && dominating_violations.is_empty();
    let conjunction_violations: Vec<String> =
        if both_ok { Vec::new() } else { vec!["see the resolving/dominating records".into()] };

    let mut report = Report::new(format!("verify set={landmarks:?} s={s} t={t}"));
    report.input = Some(digest);
    report.checks.push(CheckRecord::from_violations(
        "resolving",
        "all code vectors under the truncated metric d_s are pairwise distinct",
        format!("distance-{s} resolving"),
        &resolving_violations,
    ));
    report.checks.push(CheckRecord::from_violations(
        "dominating",
        "every vertex lies within distance t of some member",
        format!("distance-{t} dominating"),
        &dominating_violations,
    ));
    report.checks.push(CheckRecord::from_violations(
        "locating-dominating",
        "the set is simultaneously distance-s resolving and distance-t dominating",
        format!("({s},{t})-locating-dominating"),
        &conjunction_violations,
    ));
    finish(report, started, no_timing, report_path.as_ref())
}

const FAMILY_KINDS: &[(&str, &str)] = &[
    ("path", "n"),
    ("cycle", "n (n >= 3)"),
    ("complete", "n"),
    ("star", "n (center plus n-1 leaves)"),
    ("multipartite", "a,b,... part sizes (at least 2 parts)"),
    ("spider", "legs leg_len"),
    ("remark-tree", "x alpha k (spine of x majors, alpha terminal paths each)"),
    ("fig2", "a (gadget count; designated edge is (0,1))"),
    ("petersen", "(no parameters)"),
    ("caterpillar", "l1,l2,... leaves per spine vertex"),
    ("prufer", "s1,s2,... a Prufer sequence over 0..n-1"),
];

fn parse_family(kind: &str, params: &[String]) -> Result<FamilySpec, String> {
    let one = |name: &str| -> Result<usize, String> {
        if params.len() != 1 {
            return Err(format!("{name} takes exactly one parameter"));
        }
        params[0].parse().map_err(|_| format!("bad parameter {:?}", params[0]))
    };
    match kind {
        "path" => Ok(FamilySpec::Path(one("path")?)),
        "cycle" => Ok(FamilySpec::Cycle(one("cycle")?)),
        "complete" => Ok(FamilySpec::Complete(one("complete")?)),
        "star" => Ok(FamilySpec::Star(one("star")?)),
        "multipartite" => {
            if params.len() != 1 {
                return Err("multipartite takes one comma-separated part list".into());
            }
            Ok(FamilySpec::CompleteMultipartite(parse_id_list(&params[0])?))
        }
        "spider" => {
            if params.len() != 2 {
                return Err("spider takes: legs leg_len".into());
            }
            Ok(FamilySpec::Spider {
                legs: params[0].parse().map_err(|_| "bad legs".to_string())?,
                leg_len: params[1].parse().map_err(|_| "bad leg_len".to_string())?,
            })
        }
        "remark-tree" => {
            if params.len() != 3 {
                return Err("remark-tree takes: x alpha k".into());
            }
            Ok(FamilySpec::RemarkTree {
                x: params[0].parse().map_err(|_| "bad x".to_string())?,
                alpha: params[1].parse().map_err(|_| "bad alpha".to_string())?,
                k: params[2].parse().map_err(|_| "bad k".to_string())?,
            })
        }
        "fig2" => Ok(FamilySpec::Fig2 { a: one("fig2")? }),
        "petersen" => {
            if !params.is_empty() {
                return Err("petersen takes no parameters".into());
            }
            Ok(FamilySpec::Petersen)
        }
        "caterpillar" => {
            if params.len() != 1 {
                return Err("caterpillar takes one comma-separated leaf-count list".into());
            }
            Ok(FamilySpec::Caterpillar { leaf_counts: parse_id_list(&params[0])? })
        }
        "prufer" => {
            if params.len() != 1 {
                return Err("prufer takes one comma-separated sequence".into());
            }
            // a standalone check so the error names the kind
            let seq = parse_id_list(&params[0])?;
            prufer_tree(&seq).map_err(|e| e.to_string())?;
            Ok(FamilySpec::PruferTree(seq))
        }
        other => Err(format!("unknown family kind {other:?}; try --list")),
    }
}

fn cmd_family(kind: Option<String>, params: Vec<String>, out: Option<PathBuf>, list: bool) -> Result<ExitCode, String> {
    if list {
        for (kind, usage) in FAMILY_KINDS {
            println!("{kind:<13} {usage}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let kind = kind.ok_or("missing family kind; try --list")?;
    let spec = parse_family(&kind, &params)?;
    let g = generate(&spec).map_err(|e| e.to_string())?;
    let text = g.to_edge_list();
    match out {
        Some(p) => {
            fs::write(&p, &text).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
            println!("wrote {} (n = {}, m = {})", p.display(), g.n(), g.edge_count());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tree_sweep(nmax: usize, k: String, report_path: Option<PathBuf>, no_timing: bool) -> Result<ExitCode, String> {
    let started = Instant::now();
    let ks = parse_id_list(&k)?;
    if ks.is_empty() || ks.iter().any(|&k| k == 0) {
        return Err("levels must be positive".into());
    }
    let sc = SelfCheck::new();
    let mut report = Report::new(format!("tree-sweep nmax={nmax} k={ks:?}"));
    report.checks = harness::check_tree_equality(nmax, &ks, &sc);
    report.checks.push(sc.into_record());
    finish(report, started, no_timing, report_path.as_ref())
}

fn cmd_edge_sweep(file: PathBuf, k: usize, report_path: Option<PathBuf>, no_timing: bool) -> Result<ExitCode, String> {
    let started = Instant::now();
    let (g, digest) = load_graph(&file)?;
    if k == 0 {
        return Err("k must be positive".into());
    }
    if !g.is_connected() {
        return Err("input graph must be connected".into());
    }
    let gl_g = solve(&g, Parameter::GammaLst { s: k, t: k }).map_err(|e| e.to_string())?.value;
    let dim_g = solve(&g, Parameter::DimK { k }).map_err(|e| e.to_string())?.value;
    println!("gammaL^{k}(G) = {gl_g}, dim_{k}(G) = {dim_g}");
    println!("{:<10} {:>10} {:>8}", "edge", "gammaL_d", "dim_d");

    let mut gl_violations = Vec::new();
    let mut dim_violations = Vec::new();
    let mut bridges = 0;
    let mut checked = 0;
    for &(u, v) in g.edges() {
        let h = g.delete_edge(u, v).expect("edge exists");
        if !h.is_connected() {
            bridges += 1;
            continue;
        }
        checked += 1;
        let gl_h = solve(&h, Parameter::GammaLst { s: k, t: k }).map_err(|e| e.to_string())?.value;
        let dim_h = solve(&h, Parameter::DimK { k }).map_err(|e| e.to_string())?.value;
        let gl_d = gl_h as i64 - gl_g as i64;
        let dim_d = dim_h as i64 - dim_g as i64;
        println!("{:<10} {gl_d:>+10} {dim_d:>+8}", format!("({u},{v})"));
        let gl_ok = match k {
            1 => gl_d.abs() <= 2,
            2 => gl_d <= 2,
            _ => gl_d <= 3,
        };
        if !gl_ok {
            gl_violations.push(format!("edge ({u},{v}): gammaL delta {gl_d:+}"));
        }
        let dim_ok = match k {
            1 => dim_d.abs() <= 1,
            2 => dim_d <= 1,
            _ => dim_d <= 2,
        };
        if !dim_ok {
            dim_violations.push(format!("edge ({u},{v}): dim delta {dim_d:+}"));
        }
    }

    let gl_anchor = match k {
        1 => "|gamma_L^1(G-e) - gamma_L^1(G)| <= 2",
        2 => "gamma_L^2(G-e) <= gamma_L^2(G) + 2",
        _ => "gamma_L^k(G-e) <= gamma_L^k(G) + 3 for k >= 3",
    };
    let dim_anchor = match k {
        1 => "|dim_1(G-e) - dim_1(G)| <= 1",
        2 => "dim_2(G-e) <= dim_2(G) + 1",
        _ => "dim_k(G-e) <= dim_k(G) + 2 for k >= 3",
    };
    let detail = format!("{checked} non-bridge edges checked, skipped_bridges = {bridges}");
    let mut report = Report::new(format!("edge-sweep k={k}"));
    report.input = Some(digest);
    report.checks.push(CheckRecord::from_violations("edge-sweep-gammaL", gl_anchor, detail.clone(), &gl_violations));
    report.checks.push(CheckRecord::from_violations("edge-sweep-dim", dim_anchor, detail, &dim_violations));
    finish(report, started, no_timing, report_path.as_ref())
}

fn cmd_harness(
    only: Option<String>,
    nmax: Option<usize>,
    seed: u64,
    random_count: usize,
    report_path: Option<PathBuf>,
    no_timing: bool,
) -> Result<ExitCode, String> {
    let started = Instant::now();
    if let Some(name) = &only {
        if !CHECK_GROUPS.contains(&name.as_str()) {
            return Err(format!("unknown check group {name:?}; known: {}", CHECK_GROUPS.join(", ")));
        }
    }
    let mut cfg = HarnessConfig { seed, random_count, only, ..HarnessConfig::default() };
    if let Some(nmax) = nmax {
        cfg.nmax_path_cycle = nmax;
        cfg.nmax_trees = nmax.min(9);
    }
    let mut report = Report::new(format!(
        "harness only={:?} nmax_path_cycle={} nmax_trees={} seed={} random_count={}",
        cfg.only, cfg.nmax_path_cycle, cfg.nmax_trees, cfg.seed, cfg.random_count
    ));
    report.checks = harness::run_harness(&cfg);
    finish(report, started, no_timing, report_path.as_ref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve { file, param, k, s, t, report, no_timing } => {
            cmd_solve(file, param, k, s, t, report, no_timing)
        }
        Command::Verify { file, set, k, s, t, report, no_timing } => {
            cmd_verify(file, set, k, s, t, report, no_timing)
        }
        Command::Family { kind, params, out, list } => cmd_family(kind, params, out, list),
        Command::TreeSweep { nmax, k, report, no_timing } => cmd_tree_sweep(nmax, k, report, no_timing),
        Command::EdgeSweep { file, k, report, no_timing } => cmd_edge_sweep(file, k, report, no_timing),
        Command::Harness { only, nmax, seed, random_count, report, no_timing } => {
            cmd_harness(only, nmax, seed, random_count, report, no_timing)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
