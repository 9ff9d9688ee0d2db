//! Membership tests for the graph classes in play: chordal, split,
//! distance-hereditary, ptolemaic, plus tree/block-graph helpers.
//!
//! Small forbidden-pattern detectors (gem, 3-sun, the hereditary clique-Helly
//! obstructions) live in [`patterns`] and are re-exported here.

mod patterns;

pub use patterns::{
    find_3sun, find_gem, hereditary_clique_helly_witness, is_hereditary_clique_helly, is_pseudo_p5,
    ForbiddenPattern, PatternKind, TupleError,
};

use crate::graph::Graph;
use crate::vertexset::VertexSet;

/// A vertex elimination order, i.e. a permutation of `0..n`.
///
/// When produced by [`chordal_order`] it is perfect: the later neighbors of
/// every vertex form a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder(Vec<usize>);

impl EliminationOrder {
    /// Wraps an explicit order; panics if it is not a permutation.
    pub fn new(order: Vec<usize>) -> Self {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            assert!(v < n && !seen[v], "not a permutation of 0..{n}");
            seen[v] = true;
        }
        EliminationOrder(order)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Maximum cardinality search followed by the perfection check.
///
/// Returns a perfect elimination order if the graph is chordal, otherwise the
/// vertex at which the perfection check failed. Ties in the search are broken
/// towards the lowest vertex index, so the result is deterministic.
pub fn chordal_order(g: &Graph) -> Result<EliminationOrder, usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !visited[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        visited[best] = true;
        visit_order.push(best);
        for u in g.neighbors(best).iter() {
            weight[u] += 1;
        }
    }
    // The reverse of the visit order is a perfect elimination order iff the
    // graph is chordal: each vertex's later neighbors must form a clique.
    visit_order.reverse();
    let order = visit_order;
    let mut after = VertexSet::empty(n);
    for i in (0..n).rev() {
        let v = order[i];
        let later = g.neighbors(v).intersection(&after);
        for u in later.iter() {
            let mut rest = later.clone();
            rest.remove(u);
            if !rest.is_subset_of(g.neighbors(u)) {
                return Err(v);
            }
        }
        after.insert(v);
    }
    Ok(EliminationOrder(order))
}

pub fn is_chordal(g: &Graph) -> bool {
    chordal_order(g).is_ok()
}

/// Degree-sequence split test (Hammer–Simeone).
///
/// Returns a partition into a clique and an independent set when one exists:
/// the `m` largest-degree vertices form the clique, where `m` is the largest
/// index with `d_m >= m - 1` in the sorted degree sequence.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    if n == 0 {
        return Some((VertexSet::empty(0), VertexSet::empty(0)));
    }
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = verts.iter().map(|&v| g.degree(v)).collect();
    let mut m = 0;
    for (i, &deg) in d.iter().enumerate() {
        if deg >= i {
            m = i + 1;
        } else {
            break;
        }
    }
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let clique = VertexSet::from_members(n, verts[..m].iter().copied());
    let independent = VertexSet::from_members(n, verts[m..].iter().copied());
    for u in clique.iter() {
        let mut rest = clique.clone();
        rest.remove(u);
        assert!(
            rest.is_subset_of(g.neighbors(u)),
            "split partition: clique part is not a clique"
        );
    }
    for u in independent.iter() {
        assert!(
            g.neighbors(u).is_disjoint_from(&independent),
            "split partition: independent part is not independent"
        );
    }
    Some((clique, independent))
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// Pruning recognizer for distance-hereditary graphs: repeatedly delete a
/// pendant vertex or a twin (true or false) until one vertex remains.
///
/// The lowest-indexed removable vertex is deleted at each step; any valid
/// order gives the same verdict, this one pins determinism.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut alive = VertexSet::full(n);
    let mut masked: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut remaining = n;
    while remaining > 1 {
        let mut removed = None;
        'scan: for v in alive.iter() {
            if masked[v].len() == 1 {
                removed = Some(v);
                break;
            }
            for u in alive.iter() {
                // Twins in the surviving graph: N(v)\{u} == N(u)\{v}, which
                // is exactly symdiff(N(v), N(u)) ⊆ {u, v}.
                if u != v && masked[v].symmetric_difference_within(&masked[u], u, v) {
                    removed = Some(v);
                    break 'scan;
                }
            }
        }
        match removed {
            Some(v) => {
                alive.remove(v);
                for u in alive.iter() {
                    masked[u].remove(v);
                }
                remaining -= 1;
            }
            None => return false,
        }
    }
    true
}

/// Connected, chordal, and distance-hereditary. A single vertex qualifies;
/// the empty graph does not.
pub fn is_ptolemaic(g: &Graph) -> bool {
    g.vertex_count() >= 1 && g.is_connected() && is_chordal(g) && is_distance_hereditary(g)
}

pub fn is_tree(g: &Graph) -> bool {
    g.vertex_count() >= 1 && g.is_connected() && g.edge_count() == g.vertex_count() - 1
}

/// Block graphs are the diamond-free chordal graphs: the common neighborhood
/// of every adjacent pair must be a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    if !is_chordal(g) {
        return false;
    }
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        for w in common.iter() {
            let mut rest = common.clone();
            rest.remove(w);
            if !rest.is_subset_of(g.neighbors(w)) {
                return false;
            }
        }
    }
    true
}
