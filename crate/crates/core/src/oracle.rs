//! Exhaustive ground truth: minimum-edge square roots inside a target class,
//! found by scanning all edge-subgraphs of the input.
//!
//! Sound because any square root of G is an edge-subgraph of G: an edge of
//! the root joins vertices at distance at most two, hence is an edge of the
//! square. Subsets are visited in increasing cardinality, then
//! lexicographically over the canonical edge order, so the first hit is a
//! certified minimum.

use crate::graph::Graph;
use crate::recognizers::{find_3sun, is_ptolemaic, is_split};

/// The root class the oracle searches within.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassPredicate {
    Ptolemaic,
    SplitThreeSunFree,
    Any,
}

impl ClassPredicate {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            ClassPredicate::Ptolemaic => is_ptolemaic(g),
            ClassPredicate::SplitThreeSunFree => is_split(g) && find_3sun(g).is_none(),
            ClassPredicate::Any => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassPredicate::Ptolemaic => "ptolemaic",
            ClassPredicate::SplitThreeSunFree => "split-3sun-free",
            ClassPredicate::Any => "any",
        }
    }
}

/// Outcome of [`min_root_bruteforce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// A root within the class, with the minimum possible edge count.
    Found { root: Graph, edge_count: usize },
    /// The whole subset space was exhausted without a hit.
    NoneExists,
    /// The subset budget ran out first.
    BudgetExceeded,
}

/// Default subset budget, 2^25.
pub const DEFAULT_BUDGET: u64 = 1 << 25;

/// Scans the edge-subsets of `g` for the minimum-edge `h` with
/// `h.square() == g` inside the class.
///
/// Every generated subset counts against the budget, including those skipped
/// by the connectivity pruning (subgraphs of a connected input that are
/// themselves disconnected cannot square to it).
pub fn min_root_bruteforce(g: &Graph, class: ClassPredicate, budget: u64) -> OracleOutcome {
    assert!(budget > 0);
    let n = g.vertex_count();
    let all_edges = g.edges();
    let m = all_edges.len();
    let g_connected = g.is_connected();
    let mut inspected = 0u64;
    let mut chosen = Vec::with_capacity(m);
    for k in 0..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            inspected += 1;
            if inspected > budget {
                return OracleOutcome::BudgetExceeded;
            }
            chosen.clear();
            chosen.extend(idx.iter().map(|&i| all_edges[i]));
            let h = Graph::from_edges(n, chosen.iter().copied());
            if (!g_connected || h.is_connected()) && h.square() == *g && class.holds(&h) {
                return OracleOutcome::Found {
                    edge_count: h.edge_count(),
                    root: h,
                };
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    OracleOutcome::NoneExists
}

/// Advances `idx` to the next k-combination of `0..m` in lexicographic
/// order; false when exhausted.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, Graph};

    #[test]
    fn combination_stepper_enumerates_all() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn k3_has_a_two_edge_ptolemaic_root() {
        match min_root_bruteforce(&complete(3), ClassPredicate::Ptolemaic, DEFAULT_BUDGET) {
            OracleOutcome::Found { root, edge_count } => {
                assert_eq!(edge_count, 2);
                // First 2-subset in lexicographic edge order: {01, 02}.
                assert_eq!(root.edges(), vec![(0, 1), (0, 2)]);
            }
            other => panic!("expected a root, got {other:?}"),
        }
    }

    #[test]
    fn p4_is_not_a_square() {
        assert_eq!(
            min_root_bruteforce(&path(4), ClassPredicate::Any, DEFAULT_BUDGET),
            OracleOutcome::NoneExists
        );
    }

    #[test]
    fn k4_has_a_three_edge_split_root() {
        match min_root_bruteforce(
            &complete(4),
            ClassPredicate::SplitThreeSunFree,
            DEFAULT_BUDGET,
        ) {
            OracleOutcome::Found { root, edge_count } => {
                assert_eq!(edge_count, 3);
                assert_eq!(root.edges(), vec![(0, 1), (0, 2), (0, 3)]);
            }
            other => panic!("expected a root, got {other:?}"),
        }
    }

    #[test]
    fn budget_is_respected() {
        // P4 has 3 edges and no square root, so all 8 subsets are needed.
        assert_eq!(
            min_root_bruteforce(&path(4), ClassPredicate::Any, 3),
            OracleOutcome::BudgetExceeded
        );
        assert_eq!(
            min_root_bruteforce(&path(4), ClassPredicate::Any, 8),
            OracleOutcome::NoneExists
        );
    }

    #[test]
    fn k1_roots_to_itself() {
        match min_root_bruteforce(&Graph::empty(1), ClassPredicate::Ptolemaic, 16) {
            OracleOutcome::Found { edge_count, .. } => assert_eq!(edge_count, 0),
            other => panic!("unexpected {other:?}"),
        }
    }
}
