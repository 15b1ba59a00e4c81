//! Twin detection: `x` and `y` are twins when `N(x) - {y} = N(y) - {x}`.
//!
//! Non-adjacent twins share the open neighborhood, adjacent twins share the
//! closed neighborhood, so grouping by `N(v)` and by `N[v]` and merging the
//! two groupings yields exactly the twin classes. A class is never mixed:
//! if `N(x) = N(y)` with `x` not adjacent to `y`, and `N[y] = N[z]` with
//! `y` adjacent to `z`, then `x` would have to be adjacent to `z` while
//! missing from `N[z]`, a contradiction.

use std::collections::HashMap;

use crate::graph::Graph;

/// Partition of the vertex set into maximal twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    /// Classes sorted internally and by smallest member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// `sum over classes of (|class| - 1)`; a lower bound for any
    /// distance-k resolving set, since a resolving set misses at most one
    /// member of each class.
    pub fn resolving_lower_bound(&self) -> usize {
        self.classes.iter().map(|c| c.len() - 1).sum()
    }

    /// Class index of each vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut owner = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                owner[v] = i;
            }
        }
        owner
    }
}

pub fn twin_classes(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }

    let mut open: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, usize> = HashMap::new();
    for v in 0..n {
        let nv = g.neighbors(v).to_vec();
        if let Some(&u) = open.get(&nv) {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[b.max(a)] = b.min(a);
        } else {
            open.insert(nv.clone(), v);
        }
        let mut cv = nv;
        let pos = cv.partition_point(|&x| x < v);
        cv.insert(pos, v);
        if let Some(&u) = closed.get(&cv) {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[b.max(a)] = b.min(a);
        } else {
            closed.insert(cv, v);
        }
    }

    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable();
    TwinPartition { classes }
}

/// Direct check of the twin condition for one pair.
pub fn are_twins(g: &Graph, x: usize, y: usize) -> bool {
    if x == y {
        return false;
    }
    let nx: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| w != y).collect();
    let ny: Vec<usize> = g.neighbors(y).iter().copied().filter(|&w| w != x).collect();
    nx == ny
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn star_leaves_form_one_class() {
        let star = generate(&FamilySpec::Star(5)).unwrap(); // K_{1,4}, center 0
        let tp = twin_classes(&star);
        assert_eq!(tp.classes(), &[vec![0], vec![1, 2, 3, 4]]);
        assert_eq!(tp.resolving_lower_bound(), 3);
    }

    #[test]
    fn complete_graph_is_one_class() {
        let kn = generate(&FamilySpec::Complete(6)).unwrap();
        let tp = twin_classes(&kn);
        assert_eq!(tp.classes(), &[vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn p4_has_no_twins() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let tp = twin_classes(&p4);
        assert_eq!(tp.classes().len(), 4);
        for x in 0..4 {
            for y in (x + 1)..4 {
                assert!(!are_twins(&p4, x, y), "({x},{y}) should not be twins");
            }
        }
    }

    #[test]
    fn partition_matches_pairwise_check() {
        // every pair inside a class is a twin pair, no cross-class pair is
        for spec in [
            FamilySpec::Petersen,
            FamilySpec::CompleteMultipartite(vec![2, 3, 1]),
            FamilySpec::Spider { legs: 3, leg_len: 2 },
            FamilySpec::Cycle(6),
        ] {
            let g = generate(&spec).unwrap();
            let tp = twin_classes(&g);
            let owner = tp.class_of(g.n());
            for x in 0..g.n() {
                for y in (x + 1)..g.n() {
                    assert_eq!(owner[x] == owner[y], are_twins(&g, x, y));
                }
            }
        }
    }
}
