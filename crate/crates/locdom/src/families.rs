//! Named graph families and closed-form oracles.
//!
//! Vertex labeling per kind:
//! - `Path(n)`: `0 - 1 - ... - n-1`.
//! - `Cycle(n)`: `0 - 1 - ... - n-1 - 0`.
//! - `Complete(n)`: all pairs.
//! - `Star(n)`: center `0`, leaves `1..n` (this is `K_{1,n-1}`).
//! - `CompleteMultipartite(parts)`: part `i` occupies a contiguous id block
//!   in the given order; edges join distinct parts.
//! - `Join(a, b)` / `DisjointUnion(a, b)`: `a` keeps its ids, `b` is shifted
//!   by `|V(a)|`; the join adds all cross edges.
//! - `Complement(a)`: same ids, complemented edge set.
//! - `Spider { legs, leg_len }`: the star `K_{1,legs}` with every edge
//!   subdivided `leg_len - 1` times; center `0`, then leg `j` occupies
//!   `1 + j*leg_len ..= (j+1)*leg_len` walking outward to its leaf.
//! - `RemarkTree { x, alpha, k }`: `x` spine vertices `0..x` forming a path,
//!   each carrying `alpha - 1` pendant paths of length `k+1` and one of
//!   length `k`; per spine vertex the legs follow it contiguously, long legs
//!   first, each leg listed from the spine outward to its leaf.
//! - `Fig2 { a }`: `u = 0`, `v = 1` (the designated edge is `uv`), then for
//!   each gadget `i` the block `p_i, t_i, z_i, x_i, y_i` at
//!   `2 + 5i ..`, with edges `u-p_i`, `p_i-t_i`, `t_i-v`, `u-z_i`,
//!   `z_i-x_i`, `z_i-y_i`, `x_i-p_i`, `y_i-p_i`, plus `u-v`.
//! - `Petersen`: outer cycle `0 1 2 3 4`, inner vertices `5..10` with inner
//!   edges `5-7, 7-9, 9-6, 6-8, 8-5` and spokes `i - (i+5)`.
//! - `Caterpillar { leaf_counts }`: spine `0..s` as a path, then the leaves
//!   of spine vertex `i` in one contiguous block per spine vertex.
//! - `PruferTree(seq)`: the labeled tree decoded from the sequence.

use rand::Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range for {kind}: {msg}")]
    OutOfRange { kind: &'static str, msg: String },
}

fn out_of_range(kind: &'static str, msg: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange { kind, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    DisjointUnion(Box<FamilySpec>, Box<FamilySpec>),
    Complement(Box<FamilySpec>),
    Spider { legs: usize, leg_len: usize },
    RemarkTree { x: usize, alpha: usize, k: usize },
    Fig2 { a: usize },
    Petersen,
    Caterpillar { leaf_counts: Vec<usize> },
    PruferTree(Vec<usize>),
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let build = |n: usize, edges: Vec<(usize, usize)>| {
        Graph::new(n, &edges).expect("generator produced an invalid edge list")
    };
    match spec {
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(out_of_range("path", "need n >= 1"));
            }
            Ok(build(*n, (1..*n).map(|i| (i - 1, i)).collect()))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(out_of_range("cycle", "need n >= 3"));
            }
            Ok(build(*n, (0..*n).map(|i| (i, (i + 1) % n)).collect()))
        }
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(out_of_range("complete", "need n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in (u + 1)..*n {
                    edges.push((u, v));
                }
            }
            Ok(build(*n, edges))
        }
        FamilySpec::Star(n) => {
            if *n < 2 {
                return Err(out_of_range("star", "need n >= 2"));
            }
            Ok(build(*n, (1..*n).map(|v| (0, v)).collect()))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            if parts.len() < 2 || parts.iter().any(|&a| a == 0) {
                return Err(out_of_range(
                    "complete_multipartite",
                    "need at least 2 parts, all nonempty",
                ));
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &a) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(i).take(a));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Ok(build(n, edges))
        }
        FamilySpec::Join(a, b) => {
            let (ga, gb) = (generate(a)?, generate(b)?);
            let shift = ga.n();
            let mut edges: Vec<(usize, usize)> = ga.edges().to_vec();
            edges.extend(gb.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
            for u in 0..ga.n() {
                for v in 0..gb.n() {
                    edges.push((u, v + shift));
                }
            }
            Ok(build(ga.n() + gb.n(), edges))
        }
        FamilySpec::DisjointUnion(a, b) => {
            let (ga, gb) = (generate(a)?, generate(b)?);
            let shift = ga.n();
            let mut edges: Vec<(usize, usize)> = ga.edges().to_vec();
            edges.extend(gb.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
            Ok(build(ga.n() + gb.n(), edges))
        }
        FamilySpec::Complement(a) => {
            let ga = generate(a)?;
            let mut edges = Vec::new();
            for u in 0..ga.n() {
                for v in (u + 1)..ga.n() {
                    if !ga.has_edge(u, v) {
                        edges.push((u, v));
                    }
                }
            }
            Ok(build(ga.n(), edges))
        }
        FamilySpec::Spider { legs, leg_len } => {
            if *legs < 3 {
                return Err(out_of_range("spider", "need at least 3 legs"));
            }
            if *leg_len < 1 {
                return Err(out_of_range("spider", "need leg length >= 1"));
            }
            let mut edges = Vec::new();
            let mut next = 1;
            for _ in 0..*legs {
                let mut prev = 0;
                for _ in 0..*leg_len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            Ok(build(next, edges))
        }
        FamilySpec::RemarkTree { x, alpha, k } => {
            if *x < 1 || *alpha < 3 || *k < 1 {
                return Err(out_of_range("remark_tree", "need x >= 1, alpha >= 3, k >= 1"));
            }
            let mut edges: Vec<(usize, usize)> = (1..*x).map(|i| (i - 1, i)).collect();
            let mut next = *x;
            let mut attach_leg = |root: usize, len: usize, edges: &mut Vec<(usize, usize)>| {
                let mut prev = root;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            };
            for v in 0..*x {
                for _ in 0..(*alpha - 1) {
                    attach_leg(v, *k + 1, &mut edges);
                }
                attach_leg(v, *k, &mut edges);
            }
            Ok(build(next, edges))
        }
        FamilySpec::Fig2 { a } => Ok(fig2_with_edge(*a)?.0),
        FamilySpec::Petersen => {
            let mut edges = vec![(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
            }
            Ok(build(10, edges))
        }
        FamilySpec::Caterpillar { leaf_counts } => {
            if leaf_counts.is_empty() {
                return Err(out_of_range("caterpillar", "need at least one spine vertex"));
            }
            let s = leaf_counts.len();
            let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
            let mut next = s;
            for (i, &c) in leaf_counts.iter().enumerate() {
                for _ in 0..c {
                    edges.push((i, next));
                    next += 1;
                }
            }
            if next < 2 {
                return Err(out_of_range("caterpillar", "resulting tree has fewer than 2 vertices"));
            }
            Ok(build(next, edges))
        }
        FamilySpec::PruferTree(seq) => prufer_tree(seq),
    }
}

/// Fig. 2 family together with its designated edge `e = (u, v) = (0, 1)`,
/// the edge whose deletion collapses the distance-k dimension.
pub fn fig2_with_edge(a: usize) -> Result<(Graph, (usize, usize)), FamilyError> {
    if a < 3 {
        return Err(out_of_range("fig2", "need a >= 3"));
    }
    let (u, v) = (0usize, 1usize);
    let mut edges = vec![(u, v)];
    for i in 0..a {
        let p = 2 + 5 * i;
        let (t, z, x, y) = (p + 1, p + 2, p + 3, p + 4);
        edges.extend([(u, p), (p, t), (t, v), (u, z), (z, x), (z, y), (x, p), (y, p)]);
    }
    let g = Graph::new(2 + 5 * a, &edges).expect("fig2 edge list is valid");
    Ok((g, (u, v)))
}

/// Decodes a Prufer sequence into the labeled tree on `seq.len() + 2`
/// vertices; the empty sequence gives `K_2`.
pub fn prufer_tree(seq: &[usize]) -> Result<Graph, FamilyError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&s| s >= n) {
        return Err(out_of_range("prufer_tree", format!("entry {bad} out of range for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr` scans for the smallest leaf; `leaf` tracks the current one.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // the largest label survives every removal, so it closes the tree
    edges.push((leaf, n - 1));
    Ok(Graph::new(n, &edges).expect("prufer decode produced an invalid edge list"))
}

/// Seeded Erdos-Renyi graph, resampled until connected.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("sampled edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}

// ---------------------------------------------------------------------------
// Closed-form oracles
// ---------------------------------------------------------------------------

/// Exact distance-k dimension of the path `P_n`, `n >= 2`.
pub fn dim_k_path(n: usize, k: usize) -> usize {
    assert!(n >= 2 && k >= 1);
    if n <= k + 2 {
        1
    } else if n <= 3 * k + 3 {
        2
    } else {
        dim_k_long_path_or_cycle(n, k)
    }
}

/// Exact distance-k dimension of the cycle `C_n`, `n >= 3`.
pub fn dim_k_cycle(n: usize, k: usize) -> usize {
    assert!(n >= 3 && k >= 1);
    if n <= 3 * k + 3 {
        2
    } else {
        dim_k_long_path_or_cycle(n, k)
    }
}

/// Congruence-class dispatch for `n >= 3k + 4`. The middle residue class
/// `k+3 ..= ceil((3k+5)/2) - 1` can be empty (it is for k = 1).
fn dim_k_long_path_or_cycle(n: usize, k: usize) -> usize {
    let m = 3 * k + 2;
    let r = n % m;
    let mid_hi = (3 * k + 5).div_ceil(2) - 1;
    if (k + 3..=mid_hi).contains(&r) {
        (2 * n + 4 * k - 1) / m
    } else {
        (2 * n + 3 * k - 1) / m
    }
}

/// Exact distance-k location-domination number of `P_n`: one more than the
/// dimension exactly when `n = 1 or k+2 (mod 3k+2)`.
pub fn gamma_l_k_path(n: usize, k: usize) -> usize {
    assert!(n >= 2 && k >= 1);
    let d = dim_k_path(n, k);
    let m = 3 * k + 2;
    if n % m == 1 || n % m == (k + 2) % m {
        d + 1
    } else {
        d
    }
}

/// Exact distance-k location-domination number of `C_n`: one more than the
/// dimension when `n = 1 (mod 3k+2)`, or when `n >= 3k+4` and
/// `n = k+2 (mod 3k+2)`.
pub fn gamma_l_k_cycle(n: usize, k: usize) -> usize {
    assert!(n >= 3 && k >= 1);
    let d = dim_k_cycle(n, k);
    let m = 3 * k + 2;
    if n % m == 1 || (n >= 3 * k + 4 && n % m == (k + 2) % m) {
        d + 1
    } else {
        d
    }
}

/// Metric dimension of the complete multipartite graph with the given part
/// sizes (`n - m` when no singleton part exists, `n - m + s - 1` with `s`
/// singleton parts otherwise). Complete multipartite graphs have diameter
/// at most 2, so this equals `dim_k` for every `k >= 1`.
pub fn dim_multipartite(parts: &[usize]) -> usize {
    assert!(parts.len() >= 2 && parts.iter().all(|&a| a >= 1));
    let n: usize = parts.iter().sum();
    assert!(n >= 3);
    let m = parts.len();
    let s = parts.iter().filter(|&&a| a == 1).count();
    if s == 0 {
        n - m
    } else {
        n - m + s - 1
    }
}

/// `gamma_L^k` of the complete multipartite graph: `n - 1` for the star at
/// `k = 1`, the dimension otherwise.
pub fn gamma_l_k_multipartite(parts: &[usize], k: usize) -> usize {
    assert!(k >= 1);
    let n: usize = parts.iter().sum();
    let is_star = parts.len() == 2 && parts.iter().filter(|&&a| a == 1).count() == 1;
    if k == 1 && is_star {
        n - 1
    } else {
        dim_multipartite(parts)
    }
}

/// Maximum order of a graph with `dim_k(G) = beta`:
/// `(floor(2(k+1)/3) + 1)^beta + beta * sum_{i=1}^{ceil((k+1)/3)} (2i-1)^(beta-1)`.
pub fn max_order_dim(beta: usize, k: usize) -> u128 {
    assert!(beta >= 1 && k >= 1);
    let base = (2 * (k + 1) / 3 + 1) as u128;
    let sum: u128 = (1..=(k + 1).div_ceil(3))
        .map(|i| (2 * i - 1) as u128)
        .map(|odd| odd.pow((beta - 1) as u32))
        .sum();
    base.pow(beta as u32) + beta as u128 * sum
}

/// Maximum order of a graph with `gamma_L^k(G) = beta`; one less than the
/// dimension bound.
pub fn max_order_gamma_l(beta: usize, k: usize) -> u128 {
    max_order_dim(beta, k) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark_tree_orders() {
        // x=1, alpha=3, k=3: center plus two legs of length 4 and one of length 3
        let g = generate(&FamilySpec::RemarkTree { x: 1, alpha: 3, k: 3 }).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.is_tree());
        assert_eq!(g.degree(0), 3);

        let g = generate(&FamilySpec::RemarkTree { x: 2, alpha: 3, k: 1 }).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.is_tree());
    }

    #[test]
    fn petersen_shape() {
        let p = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        // girth 5: no triangles or 4-cycles
        for &(u, v) in p.edges() {
            for &w in p.neighbors(u) {
                if w != v {
                    assert!(!p.has_edge(w, v), "triangle at {u},{v},{w}");
                    for &z in p.neighbors(w) {
                        if z != u {
                            assert!(!p.has_edge(z, v) || z == v, "4-cycle");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multipartite_star() {
        let g = generate(&FamilySpec::CompleteMultipartite(vec![1, 4])).unwrap();
        let star = generate(&FamilySpec::Star(5)).unwrap();
        assert_eq!(g.n(), star.n());
        assert_eq!(g.edge_count(), star.edge_count());
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn fig2_shape() {
        let (g, e) = fig2_with_edge(3).unwrap();
        assert_eq!(g.n(), 17);
        assert_eq!(g.edge_count(), 25);
        assert_eq!(e, (0, 1));
        assert!(g.is_connected());
        assert!(g.delete_edge(0, 1).unwrap().is_connected());
    }

    #[test]
    fn prufer_basics() {
        let k2 = prufer_tree(&[]).unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edge_count(), 1);

        let star = prufer_tree(&[0, 0]).unwrap();
        assert_eq!(star.degree(0), 3);
        assert!(star.is_tree());

        assert!(prufer_tree(&[7]).is_err());
    }

    #[test]
    fn prufer_is_bijective_for_n5() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let t = prufer_tree(&[a, b, c]).unwrap();
                    assert!(t.is_tree());
                    seen.insert(t.edges().to_vec());
                }
            }
        }
        assert_eq!(seen.len(), 125); // Cayley: 5^3 labeled trees
    }

    #[test]
    fn join_and_complement() {
        // K_1 + complement(K_3) = K_{1,3}
        let spec = FamilySpec::Join(
            Box::new(FamilySpec::Complete(1)),
            Box::new(FamilySpec::Complement(Box::new(FamilySpec::Complete(3)))),
        );
        let g = generate(&spec).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn path_cycle_oracle_values() {
        for k in 1..=3 {
            for n in 2..=(k + 2) {
                assert_eq!(dim_k_path(n, k), 1, "P_{n} k={k}");
            }
            for n in 3..=(3 * k + 3) {
                assert_eq!(dim_k_cycle(n, k), 2, "C_{n} k={k}");
            }
        }
        assert_eq!(dim_k_path(10, 1), 4); // floor(22/5)
        assert_eq!(gamma_l_k_path(4, 2), 2); // n = k+2
        assert_eq!(gamma_l_k_cycle(12, 3), 3); // n = 3k+3
        assert_eq!(gamma_l_k_cycle(5, 1), 2);
    }

    #[test]
    fn multipartite_oracle_values() {
        assert_eq!(dim_multipartite(&[2, 3]), 3);
        assert_eq!(gamma_l_k_multipartite(&[2, 3], 1), 3);
        assert_eq!(gamma_l_k_multipartite(&[1, 5], 1), 5);
        assert_eq!(gamma_l_k_multipartite(&[1, 1, 1], 1), 2); // K_3
        assert_eq!(gamma_l_k_multipartite(&[1, 1, 1], 2), 2);
    }

    #[test]
    fn max_order_values() {
        assert_eq!(max_order_dim(2, 1), 6); // 2^2 + 2*1
        assert_eq!(max_order_dim(2, 2), 11); // 3^2 + 2*1
        for beta in 1..=5 {
            for k in 1..=4 {
                assert_eq!(max_order_gamma_l(beta, k), max_order_dim(beta, k) - 1);
            }
        }
    }
}
