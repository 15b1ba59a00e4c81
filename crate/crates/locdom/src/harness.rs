//! Theorem-verification harness: every bound, formula, and characterization
//! the library claims is re-checked here against the exact solver over
//! generated corpora, with the brute-force oracle cross-checking every
//! instance small enough for it.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::families::{
    dim_k_cycle, dim_k_path, dim_multipartite, fig2_with_edge, gamma_l_k_cycle,
    gamma_l_k_multipartite, gamma_l_k_path, generate, max_order_gamma_l, prufer_tree,
    random_connected_graph, FamilySpec,
};
use crate::graph::Graph;
use crate::metric::TruncatedMetric;
use crate::report::CheckRecord;
use crate::solve::{self, brute_force_min, Parameter, SolveResult};
use crate::trees;

#[derive(Debug, Clone)]
pub struct HarnessConfig {
    /// Largest path/cycle order for the closed-form comparison.
    pub nmax_path_cycle: usize,
    /// Largest tree order for the exhaustive labeled-tree sweep.
    pub nmax_trees: usize,
    /// Number of seeded random connected graphs for the bound suite.
    pub random_count: usize,
    pub seed: u64,
    /// Restrict to a single check group by name.
    pub only: Option<String>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            nmax_path_cycle: 16,
            nmax_trees: 8,
            random_count: 200,
            seed: 7,
            only: None,
        }
    }
}

pub const CHECK_GROUPS: &[&str] = &[
    "path-cycle",
    "petersen",
    "fig1",
    "spider",
    "bounds",
    "characterization",
    "tree-equality",
    "edge-deletion",
    "multipartite",
];

/// Vertex cap for the oracle self-check slice.
const SELF_CHECK_NMAX: usize = 12;

/// Cross-checks the optimized solver against the brute-force oracle on
/// every instance small enough, across all harness groups.
pub struct SelfCheck {
    checked: AtomicU64,
    mismatches: Mutex<Vec<String>>,
}

impl SelfCheck {
    pub fn new() -> SelfCheck {
        SelfCheck { checked: AtomicU64::new(0), mismatches: Mutex::new(Vec::new()) }
    }

    pub fn solve(&self, g: &Graph, param: Parameter) -> SolveResult {
        let fast = solve::solve(g, param).expect("harness instances satisfy solver preconditions");
        if g.n() <= SELF_CHECK_NMAX {
            self.checked.fetch_add(1, Ordering::Relaxed);
            let slow = brute_force_min(g, param).expect("within oracle cap");
            if slow.value != fast.value {
                self.mismatches.lock().unwrap().push(format!(
                    "{param} on n={} m={}: solver {} vs oracle {}",
                    g.n(),
                    g.edge_count(),
                    fast.value,
                    slow.value
                ));
            }
        }
        fast
    }

    pub fn into_record(self) -> CheckRecord {
        let checked = self.checked.load(Ordering::Relaxed);
        let mismatches = self.mismatches.into_inner().unwrap();
        CheckRecord::from_violations(
            "oracle-selfcheck",
            "optimized solver equals exhaustive subset enumeration on all instances with n <= 12",
            format!("{checked} instances cross-checked"),
            &mismatches,
        )
    }
}

fn is_path_graph(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_complete_graph(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

fn is_star_graph(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

/// Fixed corpus of small named graphs used by the characterization and
/// edge-deletion sweeps.
fn small_corpus() -> Vec<(String, Graph)> {
    let mut corpus: Vec<(String, FamilySpec)> = Vec::new();
    for n in 2..=8 {
        corpus.push((format!("P_{n}"), FamilySpec::Path(n)));
    }
    for n in 3..=8 {
        corpus.push((format!("C_{n}"), FamilySpec::Cycle(n)));
    }
    for n in 2..=6 {
        corpus.push((format!("K_{n}"), FamilySpec::Complete(n)));
    }
    for n in 4..=7 {
        corpus.push((format!("K_1,{}", n - 1), FamilySpec::Star(n)));
    }
    corpus.push(("K_2,3".into(), FamilySpec::CompleteMultipartite(vec![2, 3])));
    corpus.push(("K_3,3".into(), FamilySpec::CompleteMultipartite(vec![3, 3])));
    corpus.push(("K_2,2,2".into(), FamilySpec::CompleteMultipartite(vec![2, 2, 2])));
    corpus.push(("spider(3,2)".into(), FamilySpec::Spider { legs: 3, leg_len: 2 }));
    corpus.push(("caterpillar(2,2)".into(), FamilySpec::Caterpillar { leaf_counts: vec![2, 2] }));
    corpus.push(("petersen".into(), FamilySpec::Petersen));
    corpus
        .into_iter()
        .map(|(name, spec)| (name, generate(&spec).expect("corpus specs are valid")))
        .collect()
}

fn check_path_cycle(cfg: &HarnessConfig, sc: &SelfCheck) -> Vec<CheckRecord> {
    let mut violations = Vec::new();
    let mut count = 0;
    for k in 1..=3 {
        for n in 2..=cfg.nmax_path_cycle {
            let p = generate(&FamilySpec::Path(n)).unwrap();
            let dim = sc.solve(&p, Parameter::DimK { k }).value;
            let gl = sc.solve(&p, Parameter::GammaLst { s: k, t: k }).value;
            count += 2;
            if dim != dim_k_path(n, k) {
                violations.push(format!("dim_{k}(P_{n}) solver {dim} vs oracle {}", dim_k_path(n, k)));
            }
            if gl != gamma_l_k_path(n, k) {
                violations.push(format!("gammaL^{k}(P_{n}) solver {gl} vs oracle {}", gamma_l_k_path(n, k)));
            }
        }
        for n in 3..=cfg.nmax_path_cycle {
            let c = generate(&FamilySpec::Cycle(n)).unwrap();
            let dim = sc.solve(&c, Parameter::DimK { k }).value;
            let gl = sc.solve(&c, Parameter::GammaLst { s: k, t: k }).value;
            count += 2;
            if dim != dim_k_cycle(n, k) {
                violations.push(format!("dim_{k}(C_{n}) solver {dim} vs oracle {}", dim_k_cycle(n, k)));
            }
            if gl != gamma_l_k_cycle(n, k) {
                violations.push(format!("gammaL^{k}(C_{n}) solver {gl} vs oracle {}", gamma_l_k_cycle(n, k)));
            }
        }
    }
    vec![CheckRecord::from_violations(
        "path-cycle",
        "dim_k and gamma_L^k of paths and cycles match the closed-form residue formulas mod (3k+2)",
        format!("{count} solver/oracle comparisons agree"),
        &violations,
    )]
}

fn check_petersen(sc: &SelfCheck) -> Vec<CheckRecord> {
    let p = generate(&FamilySpec::Petersen).unwrap();
    let mut violations = Vec::new();
    let expect = [
        (Parameter::DimK { k: 1 }, 3),
        (Parameter::DimK { k: 2 }, 3),
        (Parameter::DimK { k: 3 }, 3),
        (Parameter::GammaLst { s: 1, t: 1 }, 4),
        (Parameter::GammaLst { s: 2, t: 2 }, 3),
    ];
    for (param, want) in expect {
        let got = sc.solve(&p, param).value;
        if got != want {
            violations.push(format!("{param}(Petersen) = {got}, expected {want}"));
        }
    }
    vec![CheckRecord::from_violations(
        "petersen",
        "Petersen graph: dim_k = 3 for every k, gamma_L^1 = 4, gamma_L^2 = 3",
        "5 values match".into(),
        &violations,
    )]
}

fn check_fig1(sc: &SelfCheck) -> Vec<CheckRecord> {
    let mut violations = Vec::new();
    let mut count = 0;
    for (x, alpha) in [(1, 3), (2, 3), (1, 4)] {
        for k in 1..=3usize {
            let t = generate(&FamilySpec::RemarkTree { x, alpha, k }).unwrap();
            if t.n() > solve::ORACLE_CAP {
                continue;
            }
            count += 1;
            let gamma = sc.solve(&t, Parameter::GammaK { k }).value;
            let dim = sc.solve(&t, Parameter::DimK { k }).value;
            if gamma != x * alpha || dim != x * alpha - 1 {
                violations.push(format!(
                    "spine tree x={x} alpha={alpha} k={k}: gamma={gamma} dim={dim}, expected {} and {}",
                    x * alpha,
                    x * alpha - 1
                ));
            }
        }
    }
    vec![CheckRecord::from_violations(
        "fig1",
        "spine tree with x majors of terminal degree alpha: gamma_k = x*alpha = dim_k + 1",
        format!("{count} (x, alpha, k) instances match"),
        &violations,
    )]
}

fn check_spider(sc: &SelfCheck) -> Vec<CheckRecord> {
    let mut violations = Vec::new();
    for alpha in 3..=5usize {
        for k in 1..=2usize {
            let g = generate(&FamilySpec::Spider { legs: alpha, leg_len: k }).unwrap();
            let gamma = sc.solve(&g, Parameter::GammaK { k }).value;
            let dim = sc.solve(&g, Parameter::DimK { k }).value;
            if gamma != 1 || dim != alpha - 1 {
                violations.push(format!(
                    "spider alpha={alpha} k={k}: gamma={gamma} dim={dim}, expected 1 and {}",
                    alpha - 1
                ));
            }
        }
    }
    vec![CheckRecord::from_violations(
        "spider",
        "star subdivided k-1 times per edge: gamma_k = 1 and dim_k = alpha - 1",
        "6 (alpha, k) instances match".into(),
        &violations,
    )]
}

fn check_bounds(cfg: &HarnessConfig, sc: &SelfCheck) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut graphs = Vec::with_capacity(cfg.random_count);
    for _ in 0..cfg.random_count {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.15..0.85);
        graphs.push(random_connected_graph(n, p, &mut rng));
    }

    let mut dom_upper = Vec::new();
    let mut sum_bounds = Vec::new();
    let mut sandwich = Vec::new();
    let mut gap = Vec::new();
    let mut order_bound = Vec::new();
    let mut monotone = Vec::new();
    let mut diam_collapse = Vec::new();

    for (i, g) in graphs.iter().enumerate() {
        let n = g.n();
        let tag = |k: usize| format!("random graph #{i} (n={n}, m={}) k={k}", g.edge_count());
        let mut per_k = Vec::new();
        for k in 1..=2usize {
            let gamma = sc.solve(g, Parameter::GammaK { k }).value;
            let dim = sc.solve(g, Parameter::DimK { k }).value;
            let gl = sc.solve(g, Parameter::GammaLst { s: k, t: k }).value;
            per_k.push((gamma, dim, gl));

            if gamma > dim + 1 {
                dom_upper.push(format!("{}: gamma {gamma} > dim {dim} + 1", tag(k)));
            }
            let sum = gamma + dim;
            if !(2..=n).contains(&sum) {
                sum_bounds.push(format!("{}: gamma + dim = {sum} outside [2, {n}]", tag(k)));
            }
            if sum == 2 && !(is_path_graph(g) && n <= k + 2) {
                sum_bounds.push(format!("{}: sum 2 off the short paths", tag(k)));
            }
            if gl < gamma.max(dim) || gl > (dim + 1).min(n - 1) {
                sandwich.push(format!(
                    "{}: gammaL {gl} outside [max({gamma},{dim}), min({},{})]",
                    tag(k),
                    dim + 1,
                    n - 1
                ));
            }
            if gl - dim > 1 {
                gap.push(format!("{}: gammaL - dim = {}", tag(k), gl - dim));
            }
            if (n as u128) > max_order_gamma_l(gl, k) {
                order_bound.push(format!(
                    "{}: n = {n} exceeds order bound {} at gammaL = {gl}",
                    tag(k),
                    max_order_gamma_l(gl, k)
                ));
            }
        }
        let (g1, d1, l1) = per_k[0];
        let (g2, d2, l2) = per_k[1];
        if g2 > g1 || d2 > d1 || l2 > l1 {
            monotone.push(format!(
                "random graph #{i}: level-2 values ({g2},{d2},{l2}) exceed level-1 ({g1},{d1},{l1})"
            ));
        }
        let diam = TruncatedMetric::new(g, 1).diam().expect("connected");
        let kd = diam.max(1);
        let dim_kd = sc.solve(g, Parameter::DimK { k: kd }).value;
        let gl_kd = sc.solve(g, Parameter::GammaLst { s: kd, t: kd }).value;
        if gl_kd != dim_kd {
            diam_collapse.push(format!(
                "random graph #{i}: gammaL^{kd} = {gl_kd} but dim_{kd} = {dim_kd} with diam = {diam}"
            ));
        }
    }

    let count = graphs.len();
    vec![
        CheckRecord::from_violations(
            "bounds-dom-upper",
            "gamma_k <= dim_k + 1",
            format!("{count} random graphs, k in 1..=2"),
            &dom_upper,
        ),
        CheckRecord::from_violations(
            "bounds-sum",
            "2 <= gamma_k + dim_k <= n, with sum 2 only on paths of order <= k+2",
            format!("{count} random graphs, k in 1..=2"),
            &sum_bounds,
        ),
        CheckRecord::from_violations(
            "bounds-sandwich",
            "max(gamma_k, dim_k) <= gamma_L^k <= min(dim_k + 1, n - 1)",
            format!("{count} random graphs, k in 1..=2"),
            &sandwich,
        ),
        CheckRecord::from_violations(
            "bounds-gap",
            "gamma_L^k - dim_k is 0 or 1",
            format!("{count} random graphs, k in 1..=2"),
            &gap,
        ),
        CheckRecord::from_violations(
            "bounds-order",
            "n <= (floor(2(k+1)/3)+1)^b - 1 + b*sum((2i-1)^(b-1)) with b = gamma_L^k",
            format!("{count} random graphs, k in 1..=2"),
            &order_bound,
        ),
        CheckRecord::from_violations(
            "bounds-monotone",
            "gamma_k, dim_k, gamma_L^k are non-increasing in k",
            format!("{count} random graphs"),
            &monotone,
        ),
        CheckRecord::from_violations(
            "bounds-diam-collapse",
            "gamma_L^k = dim_k once k >= diam(G)",
            format!("{count} random graphs"),
            &diam_collapse,
        ),
    ]
}

fn check_characterization(sc: &SelfCheck) -> Vec<CheckRecord> {
    let corpus = small_corpus();
    let mut eq_one = Vec::new();
    let mut eq_n_minus_1_k1 = Vec::new();
    let mut eq_n_minus_1_k2 = Vec::new();

    // gamma_L^k = 1 exactly on P_2 .. P_{k+1}
    for k in 1..=3usize {
        for n in 2..=10usize {
            let p = generate(&FamilySpec::Path(n)).unwrap();
            let gl = sc.solve(&p, Parameter::GammaLst { s: k, t: k }).value;
            if (gl == 1) != (n <= k + 1) {
                eq_one.push(format!("gammaL^{k}(P_{n}) = {gl}"));
            }
        }
        for (name, g) in &corpus {
            let gl = sc.solve(g, Parameter::GammaLst { s: k, t: k }).value;
            if (gl == 1) != (is_path_graph(g) && g.n() <= k + 1) {
                eq_one.push(format!("gammaL^{k}({name}) = {gl} contradicts the path characterization"));
            }
        }
    }

    // gamma_L^1 = n-1 exactly on K_n and stars; for k = 2 only on K_n
    for n in 2..=9usize {
        let kn = generate(&FamilySpec::Complete(n)).unwrap();
        let gl1 = sc.solve(&kn, Parameter::GammaLst { s: 1, t: 1 }).value;
        if gl1 != n - 1 {
            eq_n_minus_1_k1.push(format!("gammaL^1(K_{n}) = {gl1}, expected {}", n - 1));
        }
        let gl2 = sc.solve(&kn, Parameter::GammaLst { s: 2, t: 2 }).value;
        if gl2 != n - 1 {
            eq_n_minus_1_k2.push(format!("gammaL^2(K_{n}) = {gl2}, expected {}", n - 1));
        }
        if n >= 3 {
            let star = generate(&FamilySpec::Star(n)).unwrap();
            let gl1 = sc.solve(&star, Parameter::GammaLst { s: 1, t: 1 }).value;
            if gl1 != n - 1 {
                eq_n_minus_1_k1.push(format!("gammaL^1(K_1,{}) = {gl1}, expected {}", n - 1, n - 1));
            }
            let gl2 = sc.solve(&star, Parameter::GammaLst { s: 2, t: 2 }).value;
            if gl2 == n - 1 && n >= 4 {
                eq_n_minus_1_k2.push(format!("gammaL^2(K_1,{}) = {gl2} hits n-1 off K_n", n - 1));
            }
        }
    }
    for (name, g) in &corpus {
        let n = g.n();
        if n < 2 {
            continue;
        }
        let gl1 = sc.solve(g, Parameter::GammaLst { s: 1, t: 1 }).value;
        if (gl1 == n - 1) != (is_complete_graph(g) || is_star_graph(g)) {
            eq_n_minus_1_k1.push(format!("gammaL^1({name}) = {gl1} contradicts the K_n/star characterization"));
        }
        let gl2 = sc.solve(g, Parameter::GammaLst { s: 2, t: 2 }).value;
        if (gl2 == n - 1) != is_complete_graph(g) {
            eq_n_minus_1_k2.push(format!("gammaL^2({name}) = {gl2} contradicts the K_n characterization"));
        }
    }

    vec![
        CheckRecord::from_violations(
            "characterization-eq-1",
            "gamma_L^k(G) = 1 iff G is a path on at most k+1 vertices",
            "paths to n = 10 and the named corpus".into(),
            &eq_one,
        ),
        CheckRecord::from_violations(
            "characterization-eq-n-1-k1",
            "gamma_L^1(G) = n - 1 iff G is complete or a star",
            "K_n and stars to n = 9 plus the named corpus".into(),
            &eq_n_minus_1_k1,
        ),
        CheckRecord::from_violations(
            "characterization-eq-n-1-k2",
            "for k >= 2, gamma_L^k(G) = n - 1 iff G is complete",
            "K_n and stars to n = 9 plus the named corpus".into(),
            &eq_n_minus_1_k2,
        ),
    ]
}

/// Exhaustive labeled-tree sweep via Prufer sequences (no isomorphism
/// reduction). Returns (upper-bound record, equality record, trees checked).
pub fn check_tree_equality(nmax: usize, ks: &[usize], sc: &SelfCheck) -> Vec<CheckRecord> {
    let mut upper = Vec::new();
    let mut equality = Vec::new();
    let mut witness_cert = Vec::new();
    let mut trees_checked = 0u64;
    let mut equality_cases = 0u64;

    for n in 2..=nmax {
        let total: u64 = (n as u64).pow(n.saturating_sub(2) as u32);
        let results: Vec<(Vec<String>, Vec<String>, Vec<String>, u64)> = (0..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut seq = vec![0usize; n.saturating_sub(2)];
                for slot in seq.iter_mut() {
                    *slot = (idx % n as u64) as usize;
                    idx /= n as u64;
                }
                let t = prufer_tree(&seq).expect("valid sequence");
                let profile = trees::tree_profile(&t).expect("decoded tree");
                let (ex, sigma) = (profile.ex(), profile.sigma());
                let mut upper_v = Vec::new();
                let mut eq_v = Vec::new();
                let mut wit_v = Vec::new();
                let mut eq_cases = 0;
                for &k in ks {
                    let gl = sc.solve(&t, Parameter::GammaLst { s: k, t: k }).value;
                    if ex >= 1 && gl > n - ex {
                        upper_v.push(format!("tree {seq:?} k={k}: gammaL {gl} > n - ex = {}", n - ex));
                    }
                    let predicted = k == 1 && ex >= 1 && ex + sigma == n;
                    let observed = ex >= 1 && gl == n - ex;
                    if predicted != observed {
                        eq_v.push(format!(
                            "tree {seq:?} k={k}: predicted {predicted}, observed gammaL {gl} vs n - ex {}",
                            n - ex
                        ));
                    }
                    if observed {
                        eq_cases += 1;
                    }
                }
                if ex >= 1 {
                    let w = trees::tree_upper_witness(&t).expect("ex >= 1");
                    for &k in ks {
                        if !crate::certify::is_st_locating_dominating(&t, &w, k, k) {
                            wit_v.push(format!("tree {seq:?} k={k}: n - ex witness fails the predicate"));
                        }
                    }
                }
                (upper_v, eq_v, wit_v, eq_cases)
            })
            .collect();
        trees_checked += total;
        for (u, e, w, c) in results {
            upper.extend(u);
            equality.extend(e);
            witness_cert.extend(w);
            equality_cases += c;
        }
    }

    vec![
        CheckRecord::from_violations(
            "tree-upper-bound",
            "gamma_L^k(T) <= n - ex(T) for every tree with ex(T) >= 1",
            format!("{trees_checked} labeled trees (n <= {nmax}), k in {ks:?}"),
            &upper,
        ),
        CheckRecord::from_violations(
            "tree-equality",
            "gamma_L^k(T) = n - ex(T) iff k = 1, ex(T) >= 1, and ex(T) + sigma(T) = n",
            format!("{trees_checked} labeled trees, {equality_cases} equality cases"),
            &equality,
        ),
        CheckRecord::from_violations(
            "tree-witness",
            "dropping one terminal vertex per exterior major vertex leaves a locating-dominating set",
            format!("{trees_checked} labeled trees"),
            &witness_cert,
        ),
    ]
}

fn check_edge_deletion(cfg: &HarnessConfig, sc: &SelfCheck) -> Vec<CheckRecord> {
    let mut gl_bounds = Vec::new();
    let mut dim_bounds = Vec::new();
    let mut fig2_gap = Vec::new();

    let mut corpus: Vec<(String, Graph)> = small_corpus()
        .into_iter()
        .filter(|(_, g)| g.n() <= 10 && g.n() >= 2)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for i in 0..3 {
        let n = rng.gen_range(6..=9);
        let p = rng.gen_range(0.3..0.7);
        corpus.push((format!("random-sweep-{i}"), random_connected_graph(n, p, &mut rng)));
    }

    let mut edges_checked = 0;
    let mut bridges_skipped = 0;
    for (name, g) in &corpus {
        let base: Vec<(usize, usize)> = (1..=2)
            .map(|k| {
                (
                    sc.solve(g, Parameter::GammaLst { s: k, t: k }).value,
                    sc.solve(g, Parameter::DimK { k }).value,
                )
            })
            .collect();
        for &(u, v) in g.edges() {
            let h = g.delete_edge(u, v).expect("edge exists");
            if !h.is_connected() {
                bridges_skipped += 1;
                continue;
            }
            edges_checked += 1;
            for k in 1..=2usize {
                let (gl_g, dim_g) = base[k - 1];
                let gl_h = sc.solve(&h, Parameter::GammaLst { s: k, t: k }).value;
                let dim_h = sc.solve(&h, Parameter::DimK { k }).value;
                let gl_ok = match k {
                    1 => gl_h.abs_diff(gl_g) <= 2,
                    _ => gl_h <= gl_g + 2,
                };
                if !gl_ok {
                    gl_bounds.push(format!(
                        "{name} - ({u},{v}) k={k}: gammaL {gl_g} -> {gl_h} breaks the deletion bound"
                    ));
                }
                let dim_ok = match k {
                    1 => dim_h.abs_diff(dim_g) <= 1,
                    _ => dim_h <= dim_g + 1,
                };
                if !dim_ok {
                    dim_bounds.push(format!(
                        "{name} - ({u},{v}) k={k}: dim {dim_g} -> {dim_h} breaks the deletion bound"
                    ));
                }
            }
        }
    }

    // the a-gadget family: deleting the designated edge collapses dim_2
    // from 2a to a + 1
    let a = 3;
    let (g, e) = fig2_with_edge(a).unwrap();
    let h = g.delete_edge(e.0, e.1).unwrap();
    let dim_g = sc.solve(&g, Parameter::DimK { k: 2 }).value;
    let dim_h = sc.solve(&h, Parameter::DimK { k: 2 }).value;
    let gl_g = sc.solve(&g, Parameter::GammaLst { s: 2, t: 2 }).value;
    let gl_h = sc.solve(&h, Parameter::GammaLst { s: 2, t: 2 }).value;
    if dim_g != 2 * a {
        fig2_gap.push(format!("dim_2(G) = {dim_g}, expected {}", 2 * a));
    }
    if dim_h != a + 1 {
        fig2_gap.push(format!("dim_2(G - e) = {dim_h}, expected {}", a + 1));
    }
    if gl_g < gl_h || gl_g - gl_h < a - 2 {
        fig2_gap.push(format!("gammaL^2 gap {gl_g} - {gl_h} below a - 2 = {}", a - 2));
    }

    vec![
        CheckRecord::from_violations(
            "edge-gammaL-bounds",
            "|gamma_L^1(G-e) - gamma_L^1(G)| <= 2 and gamma_L^2(G-e) <= gamma_L^2(G) + 2 on non-bridge edges",
            format!("{edges_checked} edges checked, {bridges_skipped} bridges skipped"),
            &gl_bounds,
        ),
        CheckRecord::from_violations(
            "edge-dim-bounds",
            "|dim_1(G-e) - dim_1(G)| <= 1 and dim_2(G-e) <= dim_2(G) + 1 on non-bridge edges",
            format!("{edges_checked} edges checked"),
            &dim_bounds,
        ),
        CheckRecord::from_violations(
            "edge-fig2-gap",
            "a-gadget graph at a = 3: dim_2(G) = 2a, dim_2(G-e) = a+1, gammaL^2 drops by at least a-2",
            format!("dim_2 {dim_g} -> {dim_h}, gammaL^2 {gl_g} -> {gl_h}"),
            &fig2_gap,
        ),
    ]
}

fn check_multipartite(sc: &SelfCheck) -> Vec<CheckRecord> {
    fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max_part)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    let mut violations = Vec::new();
    let mut count = 0;
    for n in 3..=10usize {
        for parts in partitions(n, n) {
            if parts.len() < 2 {
                continue;
            }
            let g = generate(&FamilySpec::CompleteMultipartite(parts.clone())).unwrap();
            for k in 1..=2usize {
                count += 1;
                let dim = sc.solve(&g, Parameter::DimK { k }).value;
                let gl = sc.solve(&g, Parameter::GammaLst { s: k, t: k }).value;
                if dim != dim_multipartite(&parts) {
                    violations.push(format!(
                        "dim_{k}(K_{parts:?}) solver {dim} vs oracle {}",
                        dim_multipartite(&parts)
                    ));
                }
                if gl != gamma_l_k_multipartite(&parts, k) {
                    violations.push(format!(
                        "gammaL^{k}(K_{parts:?}) solver {gl} vs oracle {}",
                        gamma_l_k_multipartite(&parts, k)
                    ));
                }
            }
        }
    }
    vec![CheckRecord::from_violations(
        "multipartite",
        "complete multipartite: dim_k = n - m (+ s - 1 with s singleton parts); gamma_L^k = dim_k except the star at k = 1",
        format!("{count} (partition, k) instances match"),
        &violations,
    )]
}

/// Runs the configured check groups and appends the oracle self-check
/// summary. A failing check never aborts the remaining ones.
pub fn run_harness(cfg: &HarnessConfig) -> Vec<CheckRecord> {
    let sc = SelfCheck::new();
    let mut records = Vec::new();
    let want = |name: &str| cfg.only.as_deref().map_or(true, |o| o == name);

    if want("path-cycle") {
        records.extend(check_path_cycle(cfg, &sc));
    }
    if want("petersen") {
        records.extend(check_petersen(&sc));
    }
    if want("fig1") {
        records.extend(check_fig1(&sc));
    }
    if want("spider") {
        records.extend(check_spider(&sc));
    }
    if want("bounds") {
        records.extend(check_bounds(cfg, &sc));
    }
    if want("characterization") {
        records.extend(check_characterization(&sc));
    }
    if want("tree-equality") {
        records.extend(check_tree_equality(cfg.nmax_trees, &[1, 2], &sc));
    }
    if want("edge-deletion") {
        records.extend(check_edge_deletion(cfg, &sc));
    }
    if want("multipartite") {
        records.extend(check_multipartite(&sc));
    }
    records.push(sc.into_record());
    records
}
