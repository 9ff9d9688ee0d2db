//! Maximal-clique enumeration (chordal-specialized and general capped),
//! pairwise intersections, and gem-triple enumeration.

use crate::graph::Graph;
use crate::recognizers::EliminationOrder;
use crate::vertexset::VertexSet;
use std::fmt;

/// The maximal cliques of a graph in canonical order, together with the
/// table of pairwise intersections.
///
/// Canonical order sorts cliques by their ascending member lists
/// (minimum member first, ties broken lexicographically), which keeps
/// triple enumeration and center assignment deterministic.
#[derive(Debug, Clone)]
pub struct CliqueFamily {
    n: usize,
    cliques: Vec<VertexSet>,
    inter: Vec<Vec<VertexSet>>,
}

impl CliqueFamily {
    fn from_cliques(n: usize, mut cliques: Vec<VertexSet>) -> Self {
        cliques.sort_by(|a, b| a.cmp_members(b));
        for w in cliques.windows(2) {
            assert!(w[0] != w[1], "duplicate maximal clique");
        }
        let q = cliques.len();
        let mut inter = Vec::with_capacity(q);
        for i in 0..q {
            let mut row = Vec::with_capacity(q);
            for j in 0..q {
                row.push(cliques[i].intersection(&cliques[j]));
            }
            inter.push(row);
        }
        CliqueFamily { n, cliques, inter }
    }

    /// Number of maximal cliques.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Universe size of the underlying graph.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn clique(&self, i: usize) -> &VertexSet {
        &self.cliques[i]
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn intersection(&self, i: usize, j: usize) -> &VertexSet {
        &self.inter[i][j]
    }

    /// Intersection of the whole family; the full vertex set when the family
    /// is empty.
    pub fn common_intersection(&self) -> VertexSet {
        let mut acc = VertexSet::full(self.n);
        for c in &self.cliques {
            acc.intersect_with(c);
        }
        acc
    }
}

/// All maximal cliques of a chordal graph, from a perfect elimination order.
///
/// The candidates are the sets {v} ∪ (later neighbors of v); the maximal
/// ones among them are exactly the maximal cliques, so there are at most n.
/// Panics if the order is not perfect (caller bug).
pub fn maximal_cliques_chordal(g: &Graph, order: &EliminationOrder) -> CliqueFamily {
    let n = g.vertex_count();
    assert_eq!(order.as_slice().len(), n);
    let mut candidates: Vec<VertexSet> = Vec::with_capacity(n);
    let mut after = VertexSet::empty(n);
    for i in (0..n).rev() {
        let v = order.as_slice()[i];
        let mut cand = g.neighbors(v).intersection(&after);
        for u in cand.iter() {
            let mut rest = cand.clone();
            rest.remove(u);
            assert!(
                rest.is_subset_of(g.neighbors(u)),
                "elimination order is not perfect at vertex {v}"
            );
        }
        cand.insert(v);
        candidates.push(cand);
        after.insert(v);
    }
    let maximal: Vec<VertexSet> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| *c != d && c.is_subset_of(d)))
        .cloned()
        .collect();
    CliqueFamily::from_cliques(n, maximal)
}

/// Returned by [`maximal_cliques_capped`] when the clique count passes the cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueOverflow {
    pub cap: usize,
}

impl fmt::Display for CliqueOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "more than {} maximal cliques", self.cap)
    }
}

/// Maximal cliques of an arbitrary graph via pivoted Bron–Kerbosch,
/// aborting as soon as more than `cap` cliques are found.
pub fn maximal_cliques_capped(g: &Graph, cap: usize) -> Result<CliqueFamily, CliqueOverflow> {
    assert!(cap >= 1);
    let n = g.vertex_count();
    if n == 0 {
        return Ok(CliqueFamily::from_cliques(0, Vec::new()));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    let p = VertexSet::full(n);
    let x = VertexSet::empty(n);
    if bron_kerbosch(g, &mut current, p, x, &mut out, cap) {
        Ok(CliqueFamily::from_cliques(n, out))
    } else {
        Err(CliqueOverflow { cap })
    }
}

/// Returns false on overflow.
fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
    cap: usize,
) -> bool {
    if p.is_empty() && x.is_empty() {
        if out.len() == cap {
            return false;
        }
        out.push(VertexSet::from_members(
            g.vertex_count(),
            current.iter().copied(),
        ));
        return true;
    }
    // Pivot on the vertex of P ∪ X with the most neighbors inside P.
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    for u in p.union(&x).iter() {
        let cnt = p.intersection(g.neighbors(u)).len();
        if best == usize::MAX || cnt > best {
            best = cnt;
            pivot = u;
        }
    }
    let branch = p.difference(g.neighbors(pivot));
    for v in branch.iter() {
        current.push(v);
        if !bron_kerbosch(
            g,
            current,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
            cap,
        ) {
            return false;
        }
        current.pop();
        p.remove(v);
        x.insert(v);
    }
    true
}

/// An ordered triple of clique indices (A, B, C) with A ∩ C nonempty,
/// A ∩ C ⊆ B, A ∩ B ⊄ C, and B ∩ C ⊄ A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GemTriple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// All gem-triples of the family, in ascending (a, b, c) index order.
/// The defining conditions are symmetric under swapping A and C, so
/// (a, b, c) appears iff (c, b, a) does.
pub fn enumerate_gem_triples(family: &CliqueFamily) -> Vec<GemTriple> {
    let q = family.len();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            if b == a {
                continue;
            }
            for c in 0..q {
                if c == a || c == b {
                    continue;
                }
                let ac = family.intersection(a, c);
                if ac.is_empty() || !ac.is_subset_of(family.clique(b)) {
                    continue;
                }
                if family.intersection(a, b).is_subset_of(family.clique(c)) {
                    continue;
                }
                if family.intersection(b, c).is_subset_of(family.clique(a)) {
                    continue;
                }
                out.push(GemTriple { a, b, c });
            }
        }
    }
    out
}
