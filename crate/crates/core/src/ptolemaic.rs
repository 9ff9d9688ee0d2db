//! Deciding ptolemaic square roots and constructing a minimum-edge one.
//!
//! The pipeline: reject disconnected or non-chordal inputs, enumerate the
//! maximal cliques and the gem-triples among them, place the edges every
//! root must contain, locate the center candidates of each maximal clique,
//! assign centers injectively, wire each clique to its center, and verify
//! the result. Whenever a ptolemaic square root exists the constructed one
//! has a minimum number of edges.

use crate::cliques::{enumerate_gem_triples, maximal_cliques_chordal, CliqueFamily, GemTriple};
use crate::graph::Graph;
use crate::outcome::RejectionStage;
use crate::recognizers::{chordal_order, is_block_graph, is_ptolemaic, is_tree};
use crate::vertexset::VertexSet;

/// Center candidates per maximal clique, the grouping of identical
/// candidate sets, and (after assignment) the chosen centers.
///
/// For a graph that actually is the square of a ptolemaic graph, each
/// candidate set is an inclusion-maximal class of adjacent twins, so two
/// candidate sets are identical or disjoint.
#[derive(Debug, Clone)]
pub struct CenterPlan {
    candidate_sets: Vec<VertexSet>,
    groups: Vec<Vec<usize>>,
    assignment: Option<Vec<usize>>,
}

impl CenterPlan {
    /// Builds a plan from explicit candidate sets, grouping identical ones.
    pub fn from_candidate_sets(candidate_sets: Vec<VertexSet>) -> Self {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in 0..candidate_sets.len() {
            match groups
                .iter_mut()
                .find(|grp| candidate_sets[grp[0]] == candidate_sets[i])
            {
                Some(grp) => grp.push(i),
                None => groups.push(vec![i]),
            }
        }
        CenterPlan {
            candidate_sets,
            groups,
            assignment: None,
        }
    }

    pub fn candidate_set(&self, clique: usize) -> &VertexSet {
        &self.candidate_sets[clique]
    }

    pub fn candidate_sets(&self) -> &[VertexSet] {
        &self.candidate_sets
    }

    /// Clique indices grouped by identical candidate set, in first-occurrence
    /// order.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Chosen center per clique, once assigned.
    pub fn assignment(&self) -> Option<&[usize]> {
        self.assignment.as_deref()
    }
}

/// No injective center assignment exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssignmentInfeasible;

/// The edges every ptolemaic square root of the input must contain:
/// for each gem-triple (A, B, C), all pairs between A ∩ C and (A ∪ C) ∩ B.
///
/// Accumulated per clique pair as in the O(n^4) bound: the union of
/// (A ∩ B) ∪ (B ∩ C) over the triples sharing (A, C), then edges between
/// that set and A ∩ C. Returns sorted (min, max) pairs, duplicates collapsed.
pub fn forced_edges(family: &CliqueFamily, triples: &[GemTriple]) -> Vec<(usize, usize)> {
    let n = family.universe();
    let q = family.len();
    let mut accum: Vec<Option<VertexSet>> = vec![None; q * q];
    for t in triples {
        let entry = &mut accum[t.a * q + t.c];
        let set = entry.get_or_insert_with(|| VertexSet::empty(n));
        set.union_with(family.intersection(t.a, t.b));
        set.union_with(family.intersection(t.b, t.c));
    }
    let mut rows = vec![VertexSet::empty(n); n];
    for a in 0..q {
        for c in 0..q {
            if let Some(set) = &accum[a * q + c] {
                for u in family.intersection(a, c).iter() {
                    rows[u].union_with(set);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (u, row) in rows.iter_mut().enumerate() {
        row.remove(u);
        for v in row.iter() {
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Computes the center-candidate set of every maximal clique A:
/// among the cliques meeting A, those reachable as the third entry of a
/// gem-triple starting at A are excluded (their union is subtracted), and
/// the rest are intersected.
pub fn candidate_centers(family: &CliqueFamily, triples: &[GemTriple]) -> CenterPlan {
    let n = family.universe();
    let q = family.len();
    let mut excluded = vec![false; q * q];
    for t in triples {
        excluded[t.a * q + t.c] = true;
    }
    let mut sets = Vec::with_capacity(q);
    for a in 0..q {
        // A itself always participates in the intersection.
        let mut keep = family.clique(a).clone();
        let mut cut = VertexSet::empty(n);
        for c in 0..q {
            if c == a || family.intersection(a, c).is_empty() {
                continue;
            }
            if excluded[a * q + c] {
                cut.union_with(family.clique(c));
            } else {
                keep.intersect_with(family.clique(c));
            }
        }
        keep.difference_with(&cut);
        sets.push(keep);
    }
    CenterPlan::from_candidate_sets(sets)
}

/// Injectively assigns one center from each candidate set, lowest unused
/// vertex first in canonical clique order.
///
/// Feasibility is the counting condition per group of identical candidate
/// sets: the set must be at least as large as the group. The greedy sweep
/// afterwards also rejects pathological overlapping candidate sets, which
/// only arise on inputs that have no root anyway.
pub fn assign_centers(mut plan: CenterPlan) -> Result<CenterPlan, AssignmentInfeasible> {
    for grp in &plan.groups {
        if plan.candidate_sets[grp[0]].len() < grp.len() {
            return Err(AssignmentInfeasible);
        }
    }
    let q = plan.candidate_sets.len();
    let mut assignment = Vec::with_capacity(q);
    if q > 0 {
        let n = plan.candidate_sets[0].universe();
        let mut used = VertexSet::empty(n);
        for set in &plan.candidate_sets {
            match set.difference(&used).min() {
                Some(v) => {
                    used.insert(v);
                    assignment.push(v);
                }
                None => return Err(AssignmentInfeasible),
            }
        }
    }
    plan.assignment = Some(assignment);
    Ok(plan)
}

/// A successfully constructed ptolemaic square root with its certificates.
#[derive(Debug, Clone)]
pub struct PtolemaicRoot {
    pub root: Graph,
    pub edge_count: usize,
    /// Verified square(root) == input.
    pub square_matches: bool,
    /// Verified the root is ptolemaic.
    pub root_is_ptolemaic: bool,
    /// Extra class observations about the returned root, informational only.
    pub root_is_tree: bool,
    pub root_is_block_graph: bool,
}

/// Outcome of [`ptolemaic_square_root`].
#[derive(Debug, Clone)]
pub enum RootResult {
    Root(PtolemaicRoot),
    NoRoot(RejectionStage),
}

impl RootResult {
    pub fn root(&self) -> Option<&PtolemaicRoot> {
        match self {
            RootResult::Root(r) => Some(r),
            RootResult::NoRoot(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<RejectionStage> {
        match self {
            RootResult::Root(_) => None,
            RootResult::NoRoot(s) => Some(*s),
        }
    }
}

/// Decides whether `g` has a ptolemaic square root and constructs one with
/// a minimum number of edges if so.
///
/// Disconnected and empty inputs are rejected outright: a ptolemaic graph
/// is connected, and the square of a connected graph is connected.
pub fn ptolemaic_square_root(g: &Graph) -> RootResult {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return RootResult::NoRoot(RejectionStage::NotConnected);
    }
    let order = match chordal_order(g) {
        Ok(order) => order,
        Err(_) => return RootResult::NoRoot(RejectionStage::NotChordal),
    };
    let family = maximal_cliques_chordal(g, &order);
    let triples = enumerate_gem_triples(&family);
    let forced = forced_edges(&family, &triples);
    let plan = match assign_centers(candidate_centers(&family, &triples)) {
        Ok(plan) => plan,
        Err(AssignmentInfeasible) => {
            return RootResult::NoRoot(RejectionStage::AssignmentInfeasible)
        }
    };
    let centers = plan.assignment().expect("assignment just computed");
    let mut edges = forced;
    for (i, clique) in family.cliques().iter().enumerate() {
        let x = centers[i];
        for v in clique.iter() {
            if v != x {
                edges.push((v.min(x), v.max(x)));
            }
        }
    }
    let root = Graph::from_edges(n, edges);
    if root.square() != *g || !is_ptolemaic(&root) {
        return RootResult::NoRoot(RejectionStage::FinalVerificationFailed);
    }
    RootResult::Root(PtolemaicRoot {
        edge_count: root.edge_count(),
        square_matches: true,
        root_is_ptolemaic: true,
        root_is_tree: is_tree(&root),
        root_is_block_graph: is_block_graph(&root),
        root,
    })
}
