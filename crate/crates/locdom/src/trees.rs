//! Tree structural analysis: leaves, major vertices, terminal assignments,
//! exterior major vertices, and the degree-two classification, plus the
//! witness construction and equality verdict for the tree bounds on the
//! distance-k location-domination number.

use std::collections::VecDeque;

use thiserror::Error;

use crate::certify::LandmarkSet;
use crate::graph::Graph;
use crate::solve::{self, SolveError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("input is not a tree (need connected with m = n - 1)")]
    NotATree,
    #[error("tree has no exterior major vertex; the n - ex(T) witness is undefined")]
    NoExteriorMajor,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Structural profile of a tree.
#[derive(Debug, Clone)]
pub struct TreeProfile {
    /// Degree-one vertices; `sigma(T)` is their count.
    pub leaves: Vec<usize>,
    /// Vertices adjacent to a leaf.
    pub support_vertices: Vec<usize>,
    /// Vertices of degree at least three.
    pub major_vertices: Vec<usize>,
    /// For each major vertex, its terminal vertices: the leaves strictly
    /// closer to it than to every other major vertex. A leaf equidistant
    /// from two major vertices is assigned to none.
    pub terminal_map: Vec<(usize, Vec<usize>)>,
    /// Major vertices with positive terminal degree; `ex(T)` is their count.
    pub exterior_major: Vec<usize>,
    /// Degree-two vertices on some terminal-to-major path.
    pub exterior_deg2: Vec<usize>,
    /// The remaining degree-two vertices.
    pub interior_deg2: Vec<usize>,
}

impl TreeProfile {
    /// Number of leaves, `sigma(T)`.
    pub fn sigma(&self) -> usize {
        self.leaves.len()
    }

    /// Number of exterior major vertices, `ex(T)`.
    pub fn ex(&self) -> usize {
        self.exterior_major.len()
    }

    /// Terminal degree of a major vertex, 0 if `v` is not major.
    pub fn ter(&self, v: usize) -> usize {
        self.terminal_map
            .iter()
            .find(|&&(m, _)| m == v)
            .map_or(0, |(_, t)| t.len())
    }
}

fn bfs_dist(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(dist[u].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn tree_profile(t: &Graph) -> Result<TreeProfile, TreeError> {
    if t.n() < 2 || !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    let n = t.n();
    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    let support_vertices: Vec<usize> = (0..n)
        .filter(|&v| t.neighbors(v).iter().any(|&u| t.degree(u) == 1))
        .collect();
    let major_vertices: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 3).collect();

    // assign each leaf to its strictly nearest major vertex, if unique
    let mut terminal_map: Vec<(usize, Vec<usize>)> =
        major_vertices.iter().map(|&m| (m, Vec::new())).collect();
    let mut assignment: Vec<Option<usize>> = vec![None; n]; // leaf -> major
    for &leaf in &leaves {
        let dist = bfs_dist(t, leaf);
        let mut best: Option<(usize, usize)> = None; // (dist, major)
        let mut tied = false;
        for &m in &major_vertices {
            let d = dist[m].expect("tree is connected");
            match best {
                None => best = Some((d, m)),
                Some((bd, _)) if d < bd => {
                    best = Some((d, m));
                    tied = false;
                }
                Some((bd, _)) if d == bd => tied = true,
                _ => {}
            }
        }
        if let (Some((_, m)), false) = (best, tied) {
            assignment[leaf] = Some(m);
            terminal_map
                .iter_mut()
                .find(|(mm, _)| *mm == m)
                .unwrap()
                .1
                .push(leaf);
        }
    }
    let exterior_major: Vec<usize> = terminal_map
        .iter()
        .filter(|(_, t)| !t.is_empty())
        .map(|&(m, _)| m)
        .collect();

    // walk each terminal-to-major path to classify degree-two vertices
    let mut on_terminal_path = vec![false; n];
    for &leaf in &leaves {
        if let Some(m) = assignment[leaf] {
            // unique tree path: step from the major back toward the leaf
            let dist = bfs_dist(t, leaf);
            let mut cur = m;
            while cur != leaf {
                let next = *t
                    .neighbors(cur)
                    .iter()
                    .find(|&&w| dist[w] == Some(dist[cur].unwrap() - 1))
                    .expect("path toward the leaf exists");
                if next != leaf {
                    on_terminal_path[next] = true;
                }
                cur = next;
            }
        }
    }
    let exterior_deg2: Vec<usize> = (0..n)
        .filter(|&v| t.degree(v) == 2 && on_terminal_path[v])
        .collect();
    let interior_deg2: Vec<usize> = (0..n)
        .filter(|&v| t.degree(v) == 2 && !on_terminal_path[v])
        .collect();

    Ok(TreeProfile {
        leaves,
        support_vertices,
        major_vertices,
        terminal_map,
        exterior_major,
        exterior_deg2,
        interior_deg2,
    })
}

/// The witness behind the bound `gamma_L^k(T) <= n - ex(T)`: all of `V(T)`
/// minus one terminal vertex (smallest id) per exterior major vertex.
/// Distance-k locating-dominating for every `k >= 1`.
pub fn tree_upper_witness(t: &Graph) -> Result<LandmarkSet, TreeError> {
    let profile = tree_profile(t)?;
    if profile.ex() == 0 {
        return Err(TreeError::NoExteriorMajor);
    }
    let dropped: Vec<usize> = profile
        .terminal_map
        .iter()
        .filter(|(_, terms)| !terms.is_empty())
        .map(|(_, terms)| *terms.iter().min().unwrap())
        .collect();
    Ok(LandmarkSet::new(
        (0..t.n()).filter(|v| !dropped.contains(v)),
    ))
}

/// Verdict for the equality characterization of `gamma_L^k(T) = n - ex(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityVerdict {
    /// Solved `gamma_L^k(T)`.
    pub gamma_l_k: usize,
    /// `n - ex(T)`.
    pub bound: usize,
    /// The structural condition: `k = 1`, `ex(T) >= 1`, `ex(T) + sigma(T) = n`.
    pub predicted_equal: bool,
    /// Whether the solved value attains the bound.
    pub observed_equal: bool,
}

pub fn check_equality_characterization(t: &Graph, k: usize) -> Result<EqualityVerdict, TreeError> {
    let profile = tree_profile(t)?;
    let solved = solve::gamma_l_k(t, k)?;
    let bound = t.n() - profile.ex();
    let predicted = k == 1 && profile.ex() >= 1 && profile.ex() + profile.sigma() == t.n();
    Ok(EqualityVerdict {
        gamma_l_k: solved.value,
        bound,
        predicted_equal: predicted,
        observed_equal: solved.value == bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::is_st_locating_dominating;
    use crate::families::{generate, prufer_tree, FamilySpec};

    #[test]
    fn path_profile() {
        let p5 = generate(&FamilySpec::Path(5)).unwrap();
        let pr = tree_profile(&p5).unwrap();
        assert_eq!(pr.sigma(), 2);
        assert_eq!(pr.ex(), 0);
        assert!(pr.major_vertices.is_empty());
        // no majors, so every degree-two vertex is interior
        assert_eq!(pr.interior_deg2, vec![1, 2, 3]);
    }

    #[test]
    fn spider_profile() {
        let sp = generate(&FamilySpec::Spider { legs: 3, leg_len: 2 }).unwrap();
        let pr = tree_profile(&sp).unwrap();
        assert_eq!(pr.sigma(), 3);
        assert_eq!(pr.ex(), 1);
        assert_eq!(pr.ter(0), 3);
        assert_eq!(pr.exterior_deg2.len(), 3);
        assert!(pr.interior_deg2.is_empty());
    }

    #[test]
    fn remark_tree_profile() {
        let t = generate(&FamilySpec::RemarkTree { x: 2, alpha: 3, k: 1 }).unwrap();
        let pr = tree_profile(&t).unwrap();
        assert_eq!(pr.ex(), 2);
        assert_eq!(pr.ter(0), 3);
        assert_eq!(pr.ter(1), 3);
    }

    #[test]
    fn every_leaf_assigned_when_majors_exist() {
        // in a tree the nearest major vertex to a leaf is unique: where the
        // paths to two equidistant majors would diverge, the branch vertex
        // is itself a closer major
        for seq in [[0usize, 0, 3, 3], [2, 2, 2, 5], [0, 1, 2, 3], [4, 4, 4, 4]] {
            let t = prufer_tree(&seq).unwrap();
            let pr = tree_profile(&t).unwrap();
            if pr.major_vertices.is_empty() {
                continue;
            }
            let assigned: usize = pr.terminal_map.iter().map(|(_, t)| t.len()).sum();
            assert_eq!(assigned, pr.sigma(), "{seq:?}");
        }
    }

    #[test]
    fn non_tree_refused() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(tree_profile(&c4).unwrap_err(), TreeError::NotATree);
    }

    #[test]
    fn upper_witness_certifies() {
        for spec in [
            FamilySpec::Star(4),
            FamilySpec::Spider { legs: 3, leg_len: 2 },
            FamilySpec::RemarkTree { x: 1, alpha: 3, k: 1 },
            FamilySpec::Caterpillar { leaf_counts: vec![3, 3] },
        ] {
            let t = generate(&spec).unwrap();
            let w = tree_upper_witness(&t).unwrap();
            let ex = tree_profile(&t).unwrap().ex();
            assert_eq!(w.len(), t.n() - ex);
            for k in 1..=3 {
                assert!(is_st_locating_dominating(&t, &w, k, k), "{spec:?} k={k}");
            }
        }
        let k13 = generate(&FamilySpec::Star(4)).unwrap();
        assert_eq!(tree_upper_witness(&k13).unwrap().len(), 3);

        let p5 = generate(&FamilySpec::Path(5)).unwrap();
        assert_eq!(tree_upper_witness(&p5).unwrap_err(), TreeError::NoExteriorMajor);
    }

    #[test]
    fn equality_verdicts() {
        // caterpillar where every vertex is a leaf or an exterior major vertex
        let t = generate(&FamilySpec::Caterpillar { leaf_counts: vec![2, 2] }).unwrap();
        let v1 = check_equality_characterization(&t, 1).unwrap();
        assert!(v1.predicted_equal && v1.observed_equal);
        let v2 = check_equality_characterization(&t, 2).unwrap();
        assert!(!v2.predicted_equal && !v2.observed_equal);

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let v = check_equality_characterization(&p4, 1).unwrap();
        assert_eq!(v.gamma_l_k, 2);
        assert_eq!(v.bound, 4);
        assert!(!v.predicted_equal && !v.observed_equal);
    }

    #[test]
    fn same_support_leaves_are_twins() {
        let t = prufer_tree(&[0, 0, 3, 3]).unwrap();
        let pr = tree_profile(&t).unwrap();
        for s in &pr.support_vertices {
            let leaves_at_s: Vec<usize> = t
                .neighbors(*s)
                .iter()
                .copied()
                .filter(|&u| t.degree(u) == 1)
                .collect();
            for i in 0..leaves_at_s.len() {
                for j in (i + 1)..leaves_at_s.len() {
                    assert!(crate::twins::are_twins(&t, leaves_at_s[i], leaves_at_s[j]));
                }
            }
        }
    }
}
