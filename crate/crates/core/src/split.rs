//! Recognizing squares of connected 3-sun-free split graphs and
//! constructing such a root.
//!
//! A graph is such a square iff it is free of the four hereditary
//! clique-Helly obstructions and the common intersection of its maximal
//! cliques is at least as large as their number. The construction places a
//! clique on that intersection and wires every outside vertex to one
//! representative per maximal clique containing it.

use crate::cliques::maximal_cliques_capped;
use crate::graph::Graph;
use crate::outcome::RejectionStage;
use crate::recognizers::{find_3sun, hereditary_clique_helly_witness};
use crate::vertexset::VertexSet;

/// The data backing a constructed 3-sun-free split root.
#[derive(Debug, Clone)]
pub struct SplitRootCertificate {
    /// Common intersection of all maximal cliques of the input; the clique
    /// side of the root.
    pub clique: VertexSet,
    /// One distinct clique vertex per maximal clique, in canonical clique
    /// order: the lowest-indexed members of `clique`.
    pub representatives: Vec<usize>,
}

/// A successfully constructed split root.
#[derive(Debug, Clone)]
pub struct SplitRoot {
    pub root: Graph,
    pub edge_count: usize,
    pub certificate: SplitRootCertificate,
}

/// Outcome of [`three_sun_free_split_root`].
#[derive(Debug, Clone)]
pub enum SplitRootResult {
    Root(SplitRoot),
    NoRoot(RejectionStage),
}

impl SplitRootResult {
    pub fn root(&self) -> Option<&SplitRoot> {
        match self {
            SplitRootResult::Root(r) => Some(r),
            SplitRootResult::NoRoot(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<RejectionStage> {
        match self {
            SplitRootResult::Root(_) => None,
            SplitRootResult::NoRoot(s) => Some(*s),
        }
    }
}

/// Decides whether `g` is the square of a connected 3-sun-free split graph
/// and constructs such a root if so.
///
/// Checks run cheapest first: the clique count cap (a qualifying square has
/// at most n maximal cliques, each the closed neighborhood of a maximal
/// clique vertex of the root), then the intersection condition, then the
/// obstruction search. Disconnected inputs need no special case: their
/// maximal cliques have empty common intersection. No edge minimization is
/// attempted.
pub fn three_sun_free_split_root(g: &Graph) -> SplitRootResult {
    let n = g.vertex_count();
    if n == 0 {
        // Treated as having one empty maximal clique, so the intersection
        // condition fails.
        return SplitRootResult::NoRoot(RejectionStage::IntersectionTooSmall);
    }
    let family = match maximal_cliques_capped(g, n) {
        Ok(f) => f,
        Err(_) => return SplitRootResult::NoRoot(RejectionStage::TooManyCliques),
    };
    let q = family.len();
    let clique = family.common_intersection();
    if clique.len() < q {
        return SplitRootResult::NoRoot(RejectionStage::IntersectionTooSmall);
    }
    if hereditary_clique_helly_witness(g).is_some() {
        return SplitRootResult::NoRoot(RejectionStage::NotHereditaryCliqueHelly);
    }
    let representatives: Vec<usize> = clique.iter().take(q).collect();
    let mut edges = Vec::new();
    let members: Vec<usize> = clique.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.push((u, v));
        }
    }
    for v in 0..n {
        if clique.contains(v) {
            continue;
        }
        for (i, &c) in representatives.iter().enumerate() {
            if family.clique(i).contains(v) {
                edges.push((v.min(c), v.max(c)));
            }
        }
    }
    let root = Graph::from_edges(n, edges);
    // Guaranteed by the characterization; verified defensively.
    if root.square() != *g || find_3sun(&root).is_some() {
        return SplitRootResult::NoRoot(RejectionStage::FinalVerificationFailed);
    }
    SplitRootResult::Root(SplitRoot {
        edge_count: root.edge_count(),
        certificate: SplitRootCertificate {
            clique,
            representatives,
        },
        root,
    })
}
