//! Exact minimization of the distance-k domination number, the distance-k
//! dimension, and the (s,t)-location-domination number.
//!
//! The optimized solver runs iterative deepening on the target cardinality,
//! starting at the best of the twin and ball-packing lower bounds, with a
//! depth-first include/exclude search over vertices ordered by degree
//! descending. A naive subset-enumeration oracle (`brute_force_min`)
//! provides an independent ground truth for small instances.
//!
//! All iteration orders are fixed, so the returned witness is identical
//! across runs for the same input.

use std::fmt;

use thiserror::Error;

use crate::certify::{self, LandmarkSet};
use crate::graph::Graph;
use crate::metric::TruncatedMetric;
use crate::twins::twin_classes;

/// Default vertex cap for the brute-force oracle.
pub const ORACLE_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is disconnected; the parameters are defined for connected graphs")]
    Disconnected,
    #[error("graph has {n} vertices but this parameter needs at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("truncation level must be at least 1")]
    BadLevel,
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Which quantity is being minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    /// Distance-k domination number.
    GammaK { k: usize },
    /// Distance-k dimension.
    DimK { k: usize },
    /// (s,t)-location-domination number; `s = t = k` gives the distance-k
    /// location-domination number.
    GammaLst { s: usize, t: usize },
}

impl Parameter {
    fn resolving_level(&self) -> Option<usize> {
        match *self {
            Parameter::GammaK { .. } => None,
            Parameter::DimK { k } => Some(k),
            Parameter::GammaLst { s, .. } => Some(s),
        }
    }

    fn dominating_level(&self) -> Option<usize> {
        match *self {
            Parameter::GammaK { k } => Some(k),
            Parameter::DimK { .. } => None,
            Parameter::GammaLst { t, .. } => Some(t),
        }
    }

    fn min_order(&self) -> usize {
        match self {
            Parameter::GammaK { .. } => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Parameter::GammaK { k } => write!(f, "gamma_{k}"),
            Parameter::DimK { k } => write!(f, "dim_{k}"),
            Parameter::GammaLst { s, t } => write!(f, "gammaL_({s},{t})"),
        }
    }
}

/// An exact parameter value with a witness set and search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: LandmarkSet,
    pub lower_bound_used: usize,
    pub nodes_explored: u64,
}

pub fn gamma_k(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::GammaK { k })
}

pub fn dim_k(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::DimK { k })
}

pub fn gamma_l_st(g: &Graph, s: usize, t: usize) -> Result<SolveResult, SolveError> {
    solve(g, Parameter::GammaLst { s, t })
}

/// Distance-k location-domination number, the diagonal `s = t = k`.
pub fn gamma_l_k(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    gamma_l_st(g, k, k)
}

fn validate(g: &Graph, param: Parameter) -> Result<(), SolveError> {
    let levels_ok = match param {
        Parameter::GammaK { k } | Parameter::DimK { k } => k >= 1,
        Parameter::GammaLst { s, t } => s >= 1 && t >= 1,
    };
    if !levels_ok {
        return Err(SolveError::BadLevel);
    }
    if g.n() < param.min_order() {
        return Err(SolveError::TooSmall { n: g.n(), min: param.min_order() });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(())
}

/// Sum over twin classes of `|class| - 1`: a resolving set misses at most
/// one member of each class, so this bounds `dim_k` and the resolving side
/// of `gamma_L` from below for every level.
pub fn lower_bound_twins(g: &Graph) -> usize {
    twin_classes(g).resolving_lower_bound()
}

/// Size of a greedily built family of pairwise-disjoint closed k-balls;
/// any distance-k dominating set meets each ball, so this bounds `gamma_k`
/// from below.
pub fn lower_bound_packing(g: &Graph, k: usize) -> usize {
    disjoint_balls(g, k).len()
}

/// Greedy disjoint-ball family, smallest balls first, ties by vertex id.
fn disjoint_balls(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let metric = TruncatedMetric::new(g, k);
    let mut order: Vec<usize> = (0..g.n()).collect();
    let sizes: Vec<usize> = (0..g.n()).map(|v| metric.ball(v).len()).collect();
    order.sort_by_key(|&v| (sizes[v], v));
    let mut taken = vec![false; g.n()];
    let mut balls = Vec::new();
    for v in order {
        let ball = metric.ball(v);
        if ball.iter().all(|&u| !taken[u]) {
            for &u in &ball {
                taken[u] = true;
            }
            balls.push(ball);
        }
    }
    balls
}

/// A feasible set built greedily: maximum marginal coverage for the
/// domination side, maximum code-class refinement for the resolving side.
/// Seeds the exact search with an incumbent; always passes the predicate.
pub fn greedy_upper_bound(g: &Graph, param: Parameter) -> LandmarkSet {
    let n = g.n();
    let mut members: Vec<usize> = Vec::new();

    if let Some(s) = param.resolving_level() {
        let metric = TruncatedMetric::new(g, s);
        // class id per vertex under the codes collected so far
        let mut class: Vec<usize> = vec![0; n];
        let mut class_count = 1;
        while class_count < n {
            let mut best: Option<(usize, usize)> = None; // (count, v)
            for v in 0..n {
                if members.contains(&v) {
                    continue;
                }
                let mut pairs: Vec<(usize, usize)> = (0..n).map(|u| (class[u], metric.d_k(u, v))).collect();
                pairs.sort_unstable();
                pairs.dedup();
                let count = pairs.len();
                if best.map_or(true, |(bc, _)| count > bc) {
                    best = Some((count, v));
                }
            }
            let (_, v) = best.expect("some vertex refines while classes remain");
            members.push(v);
            let mut pairs: Vec<(usize, usize)> = (0..n).map(|u| (class[u], metric.d_k(u, v))).collect();
            let mut keys = pairs.clone();
            keys.sort_unstable();
            keys.dedup();
            class_count = keys.len();
            for (u, p) in pairs.drain(..).enumerate() {
                class[u] = keys.binary_search(&p).unwrap();
            }
        }
    }

    if let Some(t) = param.dominating_level() {
        let metric = TruncatedMetric::new(g, t);
        let covered = |v: usize, members: &[usize]| {
            members.contains(&v) || metric.d_k_to_set(v, members) <= t
        };
        loop {
            let uncovered: Vec<usize> = (0..n).filter(|&v| !covered(v, &members)).collect();
            if uncovered.is_empty() {
                break;
            }
            let gain = |v: usize| {
                uncovered
                    .iter()
                    .filter(|&&u| u == v || metric.d_k(u, v) <= t)
                    .count()
            };
            let v = (0..n)
                .filter(|v| !members.contains(v))
                .max_by_key(|&v| (gain(v), n - v))
                .expect("uncovered vertices remain, so some vertex gains");
            members.push(v);
        }
    }

    LandmarkSet::new(members)
}

struct Search<'a> {
    n: usize,
    beta: usize,
    order: Vec<usize>,
    metric_res: Option<&'a TruncatedMetric>,
    metric_dom: Option<&'a TruncatedMetric>,
    // twin bookkeeping (resolving side)
    class_of: Vec<usize>,
    class_size: Vec<usize>,
    class_selected: Vec<usize>,
    class_excluded: Vec<usize>,
    twin_deficit: usize,
    // disjoint-ball bookkeeping (domination side); each vertex lies in at
    // most one ball since the balls are pairwise disjoint
    ball_of: Vec<Option<usize>>,
    ball_undecided: Vec<usize>,
    ball_selected: Vec<usize>,
    dom_deficit: usize,
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    nodes: u64,
    witness: Option<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn feasible(&self) -> bool {
        if let Some(m) = self.metric_res {
            if !certify::distinct_codes(m, &self.chosen) {
                return false;
            }
        }
        if let Some(m) = self.metric_dom {
            let k = m.k();
            for v in 0..self.n {
                if !self.in_set[v] && self.chosen.iter().all(|&u| m.d_k(v, u) > k) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self, pos: usize) {
        if self.witness.is_some() {
            return;
        }
        self.nodes += 1;
        let picked = self.chosen.len();
        if picked == self.beta {
            if self.feasible() {
                let mut w = self.chosen.clone();
                w.sort_unstable();
                self.witness = Some(w);
            }
            return;
        }
        if pos == self.n || picked + (self.n - pos) < self.beta {
            return;
        }
        // one new vertex repairs at most one twin class and one ball
        let deficit = self.twin_deficit.max(self.dom_deficit);
        if picked + deficit > self.beta {
            return;
        }

        let v = self.order[pos];

        // include v
        self.chosen.push(v);
        self.in_set[v] = true;
        let c = self.class_of.get(v).copied();
        if let Some(c) = c {
            if self.class_selected[c] + 1 < self.class_size[c] {
                self.twin_deficit -= 1;
            }
            self.class_selected[c] += 1;
        }
        let b = self.ball_of.get(v).copied().flatten();
        if let Some(b) = b {
            if self.ball_selected[b] == 0 {
                self.dom_deficit -= 1;
            }
            self.ball_selected[b] += 1;
            self.ball_undecided[b] -= 1;
        }
        self.dfs(pos + 1);
        self.chosen.pop();
        self.in_set[v] = false;
        if let Some(c) = c {
            self.class_selected[c] -= 1;
            if self.class_selected[c] + 1 < self.class_size[c] {
                self.twin_deficit += 1;
            }
        }
        if let Some(b) = b {
            self.ball_selected[b] -= 1;
            self.ball_undecided[b] += 1;
            if self.ball_selected[b] == 0 {
                self.dom_deficit += 1;
            }
        }
        if self.witness.is_some() {
            return;
        }

        // exclude v
        let mut blocked = false;
        if let Some(c) = c {
            if self.class_size[c] >= 2 {
                self.class_excluded[c] += 1;
                // a resolving set misses at most one member per class
                if self.class_excluded[c] >= 2 {
                    blocked = true;
                }
            }
        }
        if let Some(b) = b {
            self.ball_undecided[b] -= 1;
            if self.ball_undecided[b] == 0 && self.ball_selected[b] == 0 {
                blocked = true;
            }
        }
        if !blocked {
            self.dfs(pos + 1);
        }
        if let Some(c) = c {
            if self.class_size[c] >= 2 {
                self.class_excluded[c] -= 1;
            }
        }
        if let Some(b) = b {
            self.ball_undecided[b] += 1;
        }
    }
}

/// Exact minimum via iterative deepening from the matched lower bound.
pub fn solve(g: &Graph, param: Parameter) -> Result<SolveResult, SolveError> {
    validate(g, param)?;
    let n = g.n();

    let metric_res = param.resolving_level().map(|s| TruncatedMetric::new(g, s));
    let metric_dom = param.dominating_level().map(|t| {
        match (&metric_res, param.resolving_level()) {
            (Some(m), Some(s)) if s == t => m.clone(),
            _ => TruncatedMetric::new(g, t),
        }
    });

    // lower bounds
    let (class_of, class_size, twin_lb) = if metric_res.is_some() {
        let tp = twin_classes(g);
        let sizes: Vec<usize> = tp.classes().iter().map(|c| c.len()).collect();
        let lb = tp.resolving_lower_bound();
        (tp.class_of(n), sizes, lb)
    } else {
        (Vec::new(), Vec::new(), 0)
    };
    let (ball_of, ball_count) = if let Some(t) = param.dominating_level() {
        let balls = disjoint_balls(g, t);
        let mut owner = vec![None; n];
        for (i, ball) in balls.iter().enumerate() {
            for &v in ball {
                owner[v] = Some(i);
            }
        }
        (owner, balls.len())
    } else {
        (Vec::new(), 0)
    };
    // gamma_k <= dim_k + 1, so a domination packing also bounds the
    // dimension from below (shifted by one)
    let dim_packing_lb = match param {
        Parameter::DimK { k } => lower_bound_packing(g, k).saturating_sub(1),
        _ => 0,
    };
    let lb = 1.max(twin_lb).max(ball_count).max(dim_packing_lb);

    let incumbent = greedy_upper_bound(g, param);
    if incumbent.len() == lb {
        return Ok(SolveResult {
            parameter: param,
            value: lb,
            witness: incumbent,
            lower_bound_used: lb,
            nodes_explored: 0,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));

    let mut nodes_total = 0u64;
    for beta in lb..=n {
        let mut search = Search {
            n,
            beta,
            order: order.clone(),
            metric_res: metric_res.as_ref(),
            metric_dom: metric_dom.as_ref(),
            class_of: class_of.clone(),
            class_size: class_size.clone(),
            class_selected: vec![0; class_size.len()],
            class_excluded: vec![0; class_size.len()],
            twin_deficit: twin_lb,
            ball_of: ball_of.clone(),
            ball_undecided: if ball_count > 0 {
                let mut und = vec![0usize; ball_count];
                for v in 0..n {
                    if let Some(b) = ball_of[v] {
                        und[b] += 1;
                    }
                }
                und
            } else {
                Vec::new()
            },
            ball_selected: vec![0; ball_count],
            dom_deficit: ball_count,
            chosen: Vec::with_capacity(beta),
            in_set: vec![false; n],
            nodes: 0,
            witness: None,
        };
        search.dfs(0);
        nodes_total += search.nodes;
        if let Some(w) = search.witness {
            return Ok(SolveResult {
                parameter: param,
                value: beta,
                witness: LandmarkSet::new(w),
                lower_bound_used: lb,
                nodes_explored: nodes_total,
            });
        }
    }
    unreachable!("the full vertex set is always feasible");
}

/// Naive oracle: iterates all subsets in increasing cardinality and
/// lexicographic order, returning the first feasible one. Ground truth for
/// tests; refuses graphs above `cap` vertices.
pub fn brute_force_min_with_cap(
    g: &Graph,
    param: Parameter,
    cap: usize,
) -> Result<SolveResult, SolveError> {
    validate(g, param)?;
    let n = g.n();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let metric_res = param.resolving_level().map(|s| TruncatedMetric::new(g, s));
    let metric_dom = param.dominating_level().map(|t| TruncatedMetric::new(g, t));
    let feasible = |set: &LandmarkSet| {
        if let Some(m) = &metric_res {
            if !certify::is_distance_k_resolving(m, set) {
                return false;
            }
        }
        if let Some(m) = &metric_dom {
            if !certify::is_distance_k_dominating(m, set) {
                return false;
            }
        }
        true
    };

    let mut tested = 0u64;
    for size in 0..=n {
        let mut found: Option<LandmarkSet> = None;
        for_each_combination(n, size, &mut |combo| {
            if found.is_none() {
                tested += 1;
                let set = LandmarkSet::new(combo.iter().copied());
                if feasible(&set) {
                    found = Some(set);
                }
            }
        });
        if let Some(witness) = found {
            return Ok(SolveResult {
                parameter: param,
                value: size,
                witness,
                lower_bound_used: 0,
                nodes_explored: tested,
            });
        }
    }
    unreachable!("the full vertex set is always feasible");
}

pub fn brute_force_min(g: &Graph, param: Parameter) -> Result<SolveResult, SolveError> {
    brute_force_min_with_cap(g, param, ORACLE_CAP)
}

fn for_each_combination(n: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, start: usize, combo: &mut Vec<usize>, left: usize, f: &mut impl FnMut(&[usize])) {
        if left == 0 {
            f(combo);
            return;
        }
        for v in start..=(n - left) {
            combo.push(v);
            rec(n, v + 1, combo, left - 1, f);
            combo.pop();
        }
    }
    if size > n {
        return;
    }
    rec(n, 0, &mut Vec::with_capacity(size), size, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::is_st_locating_dominating;
    use crate::families::{generate, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn gamma_examples() {
        for k in 1..=2 {
            assert_eq!(gamma_k(&g(FamilySpec::Complete(6)), k).unwrap().value, 1);
        }
        // spine tree with x=1, alpha=3, k=1 has n=6 and gamma_1 = 3
        let fig1 = g(FamilySpec::RemarkTree { x: 1, alpha: 3, k: 1 });
        assert_eq!(fig1.n(), 6);
        assert_eq!(gamma_k(&fig1, 1).unwrap().value, 3);
        assert_eq!(gamma_k(&g(FamilySpec::Path(7)), 1).unwrap().value, 3);
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim_k(&g(FamilySpec::Complete(5)), 1).unwrap().value, 4);
        assert_eq!(dim_k(&g(FamilySpec::Complete(5)), 3).unwrap().value, 4);
        let fig1 = g(FamilySpec::RemarkTree { x: 1, alpha: 3, k: 1 });
        assert_eq!(dim_k(&fig1, 1).unwrap().value, 2);
        for k in 2..=3 {
            assert_eq!(dim_k(&g(FamilySpec::Petersen), k).unwrap().value, 3);
        }
    }

    #[test]
    fn gamma_l_examples() {
        assert_eq!(gamma_l_st(&g(FamilySpec::Petersen), 1, 1).unwrap().value, 4);
        assert_eq!(gamma_l_st(&g(FamilySpec::Star(6)), 1, 1).unwrap().value, 5);
        assert_eq!(gamma_l_st(&g(FamilySpec::Cycle(5)), 1, 1).unwrap().value, 2);
    }

    #[test]
    fn witness_passes_predicate() {
        for (spec, s, t) in [
            (FamilySpec::Petersen, 1, 1),
            (FamilySpec::Cycle(7), 2, 1),
            (FamilySpec::Path(9), 1, 2),
            (FamilySpec::RemarkTree { x: 1, alpha: 3, k: 2 }, 2, 2),
        ] {
            let graph = g(spec);
            let r = gamma_l_st(&graph, s, t).unwrap();
            assert!(is_st_locating_dominating(&graph, &r.witness, s, t));
            assert!(r.lower_bound_used <= r.value);
            assert_eq!(r.witness.len(), r.value);
        }
    }

    #[test]
    fn disconnected_refused() {
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(gamma_k(&two, 1), Err(SolveError::Disconnected));
        assert_eq!(dim_k(&two, 1), Err(SolveError::Disconnected));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound_twins(&g(FamilySpec::Complete(7))), 6);
        assert_eq!(lower_bound_twins(&g(FamilySpec::Star(5))), 3);
        assert_eq!(lower_bound_twins(&g(FamilySpec::Path(5))), 0);

        assert_eq!(lower_bound_packing(&g(FamilySpec::Complete(7)), 1), 1);
        let fig1 = g(FamilySpec::RemarkTree { x: 1, alpha: 3, k: 3 });
        assert_eq!(lower_bound_packing(&fig1, 3), 3);
        let p7 = lower_bound_packing(&g(FamilySpec::Path(7)), 1);
        assert!(p7 >= 2 && p7 <= 3);
    }

    #[test]
    fn greedy_is_feasible() {
        for spec in [
            FamilySpec::Complete(5),
            FamilySpec::Path(4),
            FamilySpec::Star(7),
            FamilySpec::Petersen,
        ] {
            let graph = g(spec);
            let w = greedy_upper_bound(&graph, Parameter::GammaLst { s: 1, t: 1 });
            assert!(is_st_locating_dominating(&graph, &w, 1, 1));
            let d = greedy_upper_bound(&graph, Parameter::DimK { k: 1 });
            let m = TruncatedMetric::new(&graph, 1);
            assert!(certify::is_distance_k_resolving(&m, &d));
        }
        let star = g(FamilySpec::Star(7)); // K_{1,6}
        let d = greedy_upper_bound(&star, Parameter::DimK { k: 1 });
        assert!(d.len() <= 6 && d.len() >= 5);
    }

    #[test]
    fn brute_force_examples() {
        let p4 = g(FamilySpec::Path(4));
        assert_eq!(brute_force_min(&p4, Parameter::GammaLst { s: 1, t: 1 }).unwrap().value, 2);
        let c12 = g(FamilySpec::Cycle(12));
        assert_eq!(brute_force_min(&c12, Parameter::GammaLst { s: 3, t: 3 }).unwrap().value, 3);
        let k2 = g(FamilySpec::Complete(2));
        assert_eq!(brute_force_min(&k2, Parameter::DimK { k: 1 }).unwrap().value, 1);
    }

    #[test]
    fn brute_force_cap() {
        let big = g(FamilySpec::Path(21));
        assert_eq!(
            brute_force_min(&big, Parameter::GammaK { k: 1 }),
            Err(SolveError::CapExceeded { n: 21, cap: 20 })
        );
    }

    #[test]
    fn solver_matches_oracle_on_mixed_small_graphs() {
        let specs = [
            FamilySpec::Path(6),
            FamilySpec::Cycle(7),
            FamilySpec::Complete(5),
            FamilySpec::Star(6),
            FamilySpec::CompleteMultipartite(vec![2, 3]),
            FamilySpec::Spider { legs: 3, leg_len: 2 },
            FamilySpec::Petersen,
            FamilySpec::Caterpillar { leaf_counts: vec![2, 0, 3] },
        ];
        for spec in specs {
            let graph = g(spec.clone());
            for param in [
                Parameter::GammaK { k: 1 },
                Parameter::GammaK { k: 2 },
                Parameter::DimK { k: 1 },
                Parameter::DimK { k: 2 },
                Parameter::GammaLst { s: 1, t: 1 },
                Parameter::GammaLst { s: 2, t: 1 },
                Parameter::GammaLst { s: 1, t: 2 },
            ] {
                let fast = solve(&graph, param).unwrap();
                let slow = brute_force_min(&graph, param).unwrap();
                assert_eq!(fast.value, slow.value, "{spec:?} {param}");
            }
        }
    }

    #[test]
    fn determinism() {
        let graph = g(FamilySpec::Petersen);
        let a = gamma_l_st(&graph, 1, 1).unwrap();
        let b = gamma_l_st(&graph, 1, 1).unwrap();
        assert_eq!(a.witness.members(), b.witness.members());
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }
}
