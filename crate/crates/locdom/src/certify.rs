//! Predicate layer: is a vertex set distance-k dominating, distance-k
//! resolving, or (s,t)-locating-dominating, together with the code vectors
//! that witness the decision.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::metric::TruncatedMetric;

/// Ordered, duplicate-free landmark set. Codes are reported in construction
/// order; comparisons use set semantics.
#[derive(Debug, Clone, Eq)]
pub struct LandmarkSet {
    members: Vec<usize>,
    sorted: Vec<usize>,
}

impl LandmarkSet {
    /// Keeps the first occurrence of each vertex.
    pub fn new(members: impl IntoIterator<Item = usize>) -> LandmarkSet {
        let mut seen = HashSet::new();
        let members: Vec<usize> = members.into_iter().filter(|&v| seen.insert(v)).collect();
        let mut sorted = members.clone();
        sorted.sort_unstable();
        LandmarkSet { members, sorted }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn sorted_members(&self) -> &[usize] {
        &self.sorted
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.sorted.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &LandmarkSet) -> bool {
        self.sorted.iter().all(|&v| other.contains(v))
    }
}

impl PartialEq for LandmarkSet {
    fn eq(&self, other: &Self) -> bool {
        self.sorted == other.sorted
    }
}

/// The distance-k metric code of a vertex against an ordered landmark set:
/// entry `i` is `d_k(v, u_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeVector(pub Vec<usize>);

impl CodeVector {
    /// True when every entry equals `k + 1`, i.e. the vertex is farther
    /// than `k` from every landmark.
    pub fn is_all_truncated(&self, k: usize) -> bool {
        self.0.iter().all(|&d| d == k + 1)
    }
}

pub fn code_vector(metric: &TruncatedMetric, s: &LandmarkSet, v: usize) -> CodeVector {
    CodeVector(s.members().iter().map(|&u| metric.d_k(v, u)).collect())
}

/// True iff every vertex outside `s` is within distance `k` of some member.
/// The empty set dominates nothing, so it is non-dominating for any `n >= 1`.
pub fn is_distance_k_dominating(metric: &TruncatedMetric, s: &LandmarkSet) -> bool {
    undominated_vertex(metric, s).is_none()
}

/// First vertex (smallest id) outside `s` with `d(v, s) > k`, if any.
pub fn undominated_vertex(metric: &TruncatedMetric, s: &LandmarkSet) -> Option<usize> {
    let k = metric.k();
    (0..metric.n()).find(|&v| !s.contains(v) && metric.d_k_to_set(v, s.members()) > k)
}

/// True iff all `n` code vectors against `s` are pairwise distinct.
/// The empty set resolves only the one-vertex graph.
pub fn is_distance_k_resolving(metric: &TruncatedMetric, s: &LandmarkSet) -> bool {
    if s.is_empty() {
        return metric.n() <= 1;
    }
    distinct_codes(metric, s.members())
}

/// Resolving check over a raw member slice; code vectors are packed into a
/// `u64` when each entry fits, which is the solver's hot path.
pub(crate) fn distinct_codes(metric: &TruncatedMetric, members: &[usize]) -> bool {
    let n = metric.n();
    let k = metric.k();
    let bits = usize::BITS - (k + 1).leading_zeros();
    if (bits as usize) * members.len() <= 64 {
        let mut seen = HashSet::with_capacity(n);
        for v in 0..n {
            let mut packed: u64 = 0;
            for &u in members {
                packed = (packed << bits) | metric.d_k(v, u) as u64;
            }
            if !seen.insert(packed) {
                return false;
            }
        }
        true
    } else {
        let mut seen = HashSet::with_capacity(n);
        for v in 0..n {
            let code: Vec<u32> = members.iter().map(|&u| metric.d_k(v, u) as u32).collect();
            if !seen.insert(code) {
                return false;
            }
        }
        true
    }
}

/// First pair (in lexicographic order) with identical codes, if any.
pub fn unresolved_pair(metric: &TruncatedMetric, s: &LandmarkSet) -> Option<(usize, usize)> {
    let n = metric.n();
    if s.is_empty() {
        return if n >= 2 { Some((0, 1)) } else { None };
    }
    for x in 0..n {
        for y in (x + 1)..n {
            if s.members().iter().all(|&u| metric.d_k(x, u) == metric.d_k(y, u)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Distance-s resolving and distance-t dominating, jointly.
pub fn is_st_locating_dominating(g: &Graph, s_set: &LandmarkSet, s: usize, t: usize) -> bool {
    let ms = TruncatedMetric::new(g, s);
    let resolving = is_distance_k_resolving(&ms, s_set);
    if !resolving {
        return false;
    }
    let mt = if s == t { ms } else { TruncatedMetric::new(g, t) };
    is_distance_k_dominating(&mt, s_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn metric(spec: &FamilySpec, k: usize) -> TruncatedMetric {
        TruncatedMetric::new(&generate(spec).unwrap(), k)
    }

    #[test]
    fn code_vectors_on_p4() {
        let m = metric(&FamilySpec::Path(4), 1);
        let s = LandmarkSet::new([0]);
        assert_eq!(code_vector(&m, &s, 0).0, vec![0]);
        let c3 = code_vector(&m, &s, 3);
        assert_eq!(c3.0, vec![2]); // d = 3 truncates to k+1 = 2
        assert!(c3.is_all_truncated(1));

        let m2 = metric(&FamilySpec::Path(4), 2);
        let s2 = LandmarkSet::new([0, 3]);
        assert_eq!(code_vector(&m2, &s2, 1).0, vec![1, 2]);
    }

    #[test]
    fn domination_basics() {
        let m = metric(&FamilySpec::Complete(7), 2);
        assert!(is_distance_k_dominating(&m, &LandmarkSet::new([3])));

        // a leaf of P_{k+2} resolves but does not dominate at level k
        for k in 1..=3 {
            let m = metric(&FamilySpec::Path(k + 2), k);
            let leaf = LandmarkSet::new([0]);
            assert!(is_distance_k_resolving(&m, &leaf));
            assert!(!is_distance_k_dominating(&m, &leaf));
            assert_eq!(undominated_vertex(&m, &leaf), Some(k + 1));
        }

        let m = metric(&FamilySpec::Path(5), 1);
        assert!(is_distance_k_dominating(&m, &LandmarkSet::new(0..5)));
        assert!(!is_distance_k_dominating(&m, &LandmarkSet::new([])));
    }

    #[test]
    fn resolving_basics() {
        let m = metric(&FamilySpec::Complete(3), 2);
        assert!(!is_distance_k_resolving(&m, &LandmarkSet::new([0])));
        assert_eq!(
            unresolved_pair(&m, &LandmarkSet::new([0])),
            Some((1, 2)) // the two non-landmarks both read 1
        );
        assert!(is_distance_k_resolving(&m, &LandmarkSet::new(0..3)));

        // single-vertex graph: the empty set resolves
        let k1 = generate(&FamilySpec::Complete(1)).unwrap();
        let m1 = TruncatedMetric::new(&k1, 1);
        assert!(is_distance_k_resolving(&m1, &LandmarkSet::new([])));
    }

    #[test]
    fn st_locating_dominating() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(is_st_locating_dominating(&p4, &LandmarkSet::new([0, 3]), 1, 1));

        for k in 1..=3 {
            let p = generate(&FamilySpec::Path(k + 2)).unwrap();
            assert!(!is_st_locating_dominating(&p, &LandmarkSet::new([0]), k, k));
            // all but one vertex always works
            let all_but_last = LandmarkSet::new(0..p.n() - 1);
            assert!(is_st_locating_dominating(&p, &all_but_last, k, k));
        }
    }

    #[test]
    fn twins_block_resolving() {
        // K_3: any set missing a twin pair fails
        let m = metric(&FamilySpec::Complete(3), 1);
        assert!(!is_distance_k_resolving(&m, &LandmarkSet::new([2])));
    }

    #[test]
    fn landmark_set_semantics() {
        let a = LandmarkSet::new([3, 1, 2]);
        let b = LandmarkSet::new([1, 2, 3, 2]);
        assert_eq!(a, b);
        assert_eq!(b.len(), 3);
        assert_eq!(a.members(), &[3, 1, 2]); // order preserved for codes
        assert!(LandmarkSet::new([1, 3]).is_subset_of(&a));
    }
}
