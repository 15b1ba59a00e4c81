//! All-pairs shortest-path distances with the k-truncation applied on read.
//!
//! `d_k(x, y) = min(d(x, y), k + 1)`. Unreachable pairs carry a reserved
//! sentinel in the raw matrix; `d_k` maps the sentinel to `k + 1` so that
//! disconnected intermediates stay well-defined.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Reserved raw distance for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// Distance matrix for a fixed graph and truncation level `k >= 1`.
#[derive(Debug, Clone)]
pub struct TruncatedMetric {
    n: usize,
    k: usize,
    dist: Vec<u32>,
}

impl TruncatedMetric {
    /// BFS from every vertex.
    pub fn new(g: &Graph, k: usize) -> TruncatedMetric {
        assert!(k >= 1, "truncation level must be at least 1");
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        TruncatedMetric { n, k, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Raw hop count, `None` if unreachable.
    pub fn dist(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// Truncated distance in `{0, ..., k+1}`; unreachable reads as `k+1`.
    #[inline]
    pub fn d_k(&self, u: usize, v: usize) -> usize {
        let d = self.dist[u * self.n + v];
        (d as usize).min(self.k + 1)
    }

    /// Maximum pairwise distance; `None` when disconnected.
    pub fn diam(&self) -> Option<usize> {
        let mut best = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return None;
            }
            best = best.max(d);
        }
        Some(best as usize)
    }

    /// Closed k-neighborhood `N^k[v]` at this metric's own level.
    pub fn ball(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| self.dist[v * self.n + u] as usize <= self.k)
            .collect()
    }

    /// `d(v, S)` truncated: minimum `d_k(v, s)` over members of `s`.
    pub fn d_k_to_set(&self, v: usize, s: &[usize]) -> usize {
        s.iter().map(|&u| self.d_k(v, u)).min().unwrap_or(self.k + 1)
    }
}

/// Closed k-neighborhood `N^k[v] = {u : d(u, v) <= k}` via a single BFS.
pub fn k_ball(g: &Graph, v: usize, k: usize) -> Vec<usize> {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if dist[u] as usize >= k {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    (0..n).filter(|&u| dist[u] != UNREACHABLE).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn truncation_on_p6() {
        let m = TruncatedMetric::new(&path(6), 3);
        assert_eq!(m.dist(0, 5), Some(5));
        assert_eq!(m.d_k(0, 5), 4); // min(5, 3+1)
        assert_eq!(m.d_k(2, 2), 0);
    }

    #[test]
    fn petersen_diameter_two() {
        let p = generate(&FamilySpec::Petersen).unwrap();
        let m = TruncatedMetric::new(&p, 1);
        assert_eq!(m.diam(), Some(2));
    }

    #[test]
    fn disconnected_reads_as_k_plus_one() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let m = TruncatedMetric::new(&g, 2);
        assert_eq!(m.dist(0, 2), None);
        assert_eq!(m.d_k(0, 2), 3);
        assert_eq!(m.diam(), None);
    }

    #[test]
    fn balls() {
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        assert_eq!(k_ball(&k5, 2, 1), vec![0, 1, 2, 3, 4]);

        let p5 = path(5);
        assert_eq!(k_ball(&p5, 2, 2), vec![0, 1, 2, 3, 4]);
        assert_eq!(k_ball(&p5, 0, 1), vec![0, 1]);
    }

    #[test]
    fn metric_ball_matches_bfs_ball() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        let m = TruncatedMetric::new(&g, 1);
        for v in 0..g.n() {
            assert_eq!(m.ball(v), k_ball(&g, v, 1));
        }
    }
}
