//! Forbidden-pattern detectors: induced gems, 3-suns, the four hereditary
//! clique-Helly obstructions, and the pseudo-P5 tuple test.

use crate::graph::Graph;
use crate::vertexset::VertexSet;
use std::fmt;

/// The small patterns a detector can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    Gem,
    C4,
    ThreeSun,
    G1,
    G2,
    G3,
    G4,
    PseudoP5Failure,
}

impl PatternKind {
    pub fn cardinality(self) -> usize {
        match self {
            PatternKind::C4 => 4,
            PatternKind::Gem | PatternKind::PseudoP5Failure => 5,
            PatternKind::ThreeSun
            | PatternKind::G1
            | PatternKind::G2
            | PatternKind::G3
            | PatternKind::G4 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Gem => "gem",
            PatternKind::C4 => "C4",
            PatternKind::ThreeSun => "3-sun",
            PatternKind::G1 => "G1",
            PatternKind::G2 => "G2",
            PatternKind::G3 => "G3",
            PatternKind::G4 => "G4",
            PatternKind::PseudoP5Failure => "pseudo-P5-failure",
        }
    }
}

/// A detected pattern together with its witness vertices.
///
/// Witness layouts:
/// - `Gem`: `[v1, v2, v3, v4, v5]` with induced P4 `(v1, v2, v4, v5)` and
///   apex `v3`.
/// - `ThreeSun`: `[v1, v2, v3, u1, u2, u3]` with triangle `{v1, v2, v3}` and
///   `u1 ~ v1,v2`, `u2 ~ v2,v3`, `u3 ~ v3,v1`.
/// - `G1`..`G4`: `[a, b, c, a', b', c']` with triangle `{a, b, c}` and each
///   primed vertex adjacent to exactly the other two triangle vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenPattern {
    pub kind: PatternKind,
    pub witness: Vec<usize>,
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.name())?;
        for v in &self.witness {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Finds an induced gem, scanning 5-subsets in lexicographic order.
pub fn find_gem(g: &Graph) -> Option<ForbiddenPattern> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    for e in (d + 1)..n {
                        if let Some(witness) = gem_witness(g, [a, b, c, d, e]) {
                            return Some(ForbiddenPattern {
                                kind: PatternKind::Gem,
                                witness,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// If the five vertices induce a gem, returns them ordered as
/// `[v1, v2, apex, v4, v5]`, taking the orientation starting at the smaller
/// P4 endpoint.
fn gem_witness(g: &Graph, s: [usize; 5]) -> Option<Vec<usize>> {
    let mut deg = [0usize; 5];
    let mut edges = 0;
    for i in 0..5 {
        for j in (i + 1)..5 {
            if g.has_edge(s[i], s[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    if edges != 7 {
        return None;
    }
    let apex = (0..5).find(|&i| deg[i] == 4)?;
    let ends: Vec<usize> = (0..5).filter(|&i| deg[i] == 2).collect();
    let mids: Vec<usize> = (0..5).filter(|&i| deg[i] == 3 && i != apex).collect();
    if ends.len() != 2 || mids.len() != 2 {
        return None;
    }
    // With this degree profile the four non-apex vertices induce a P4.
    let (e0, e1) = if s[ends[0]] < s[ends[1]] {
        (ends[0], ends[1])
    } else {
        (ends[1], ends[0])
    };
    let m0 = *mids.iter().find(|&&m| g.has_edge(s[e0], s[m]))?;
    let m1 = if mids[0] == m0 { mids[1] } else { mids[0] };
    debug_assert!(g.has_edge(s[m0], s[m1]) && g.has_edge(s[m1], s[e1]));
    Some(vec![s[e0], s[m0], s[apex], s[m1], s[e1]])
}

/// Finds an induced 3-sun: a triangle plus an independent triple whose
/// members are each adjacent, within the six, to exactly one triangle pair.
pub fn find_3sun(g: &Graph) -> Option<ForbiddenPattern> {
    sun_like_search(g, true).map(|(triangle, [x, y, z])| ForbiddenPattern {
        kind: PatternKind::ThreeSun,
        // u1 ~ v1,v2 is the vertex opposite v3, and cyclically.
        witness: vec![triangle[0], triangle[1], triangle[2], z, x, y],
    })
}

/// Triangle-driven hereditary clique-Helly test.
///
/// For every triangle {a,b,c} the three opposition sets are computed (the
/// vertices adjacent to exactly the other two triangle vertices); the graph
/// contains one of the four obstructions iff some triangle has all three
/// nonempty, and then any choice of representatives induces one.
pub fn hereditary_clique_helly_witness(g: &Graph) -> Option<ForbiddenPattern> {
    let (triangle, outer) = sun_like_search(g, false)?;
    let [x, y, z] = outer;
    let extra = [(x, y), (y, z), (x, z)]
        .iter()
        .filter(|&&(p, q)| g.has_edge(p, q))
        .count();
    let kind = match extra {
        0 => PatternKind::G1,
        1 => PatternKind::G2,
        2 => PatternKind::G3,
        _ => PatternKind::G4,
    };
    Some(ForbiddenPattern {
        kind,
        witness: vec![triangle[0], triangle[1], triangle[2], x, y, z],
    })
}

pub fn is_hereditary_clique_helly(g: &Graph) -> bool {
    hereditary_clique_helly_witness(g).is_none()
}

/// Shared triangle scan for [`find_3sun`] and the clique-Helly test.
///
/// For each triangle `a < b < c` it forms the three opposition sets (the
/// vertices adjacent to exactly the other two triangle vertices); with
/// `independent_outer` the chosen representatives must also be pairwise
/// non-adjacent (3-sun), otherwise any representatives do (G1..G4).
/// Returns `(triangle, [x, y, z])` with `x` opposite `a` (so `x ~ b, c` and
/// `x` not adjacent to `a`), `y` opposite `b`, and `z` opposite `c`.
fn sun_like_search(g: &Graph, independent_outer: bool) -> Option<([usize; 3], [usize; 3])> {
    let n = g.vertex_count();
    let mut opp_a = VertexSet::empty(n);
    let mut opp_b = VertexSet::empty(n);
    let mut opp_c = VertexSet::empty(n);
    for a in 0..n {
        for b in g.neighbors(a).iter() {
            if b <= a {
                continue;
            }
            for c in g.neighbors(a).intersection(g.neighbors(b)).iter() {
                if c <= b {
                    continue;
                }
                opp_a.clone_from(g.neighbors(b));
                opp_a.intersect_with(g.neighbors(c));
                opp_a.difference_with(g.neighbors(a));
                opp_a.remove(a);

                opp_b.clone_from(g.neighbors(a));
                opp_b.intersect_with(g.neighbors(c));
                opp_b.difference_with(g.neighbors(b));
                opp_b.remove(b);

                opp_c.clone_from(g.neighbors(a));
                opp_c.intersect_with(g.neighbors(b));
                opp_c.difference_with(g.neighbors(c));
                opp_c.remove(c);

                if opp_a.is_empty() || opp_b.is_empty() || opp_c.is_empty() {
                    continue;
                }
                if !independent_outer {
                    return Some((
                        [a, b, c],
                        [
                            opp_a.min().unwrap(),
                            opp_b.min().unwrap(),
                            opp_c.min().unwrap(),
                        ],
                    ));
                }
                // 3-sun: the outer triple must be independent. Scan ascending
                // from the slot opposite c so the reported witness is the
                // least one for this triangle.
                for u1 in opp_c.iter() {
                    let mut rest = opp_a.difference(g.neighbors(u1));
                    rest.remove(u1);
                    for u2 in rest.iter() {
                        let mut last = opp_b.difference(g.neighbors(u1));
                        last.difference_with(g.neighbors(u2));
                        last.remove(u1);
                        last.remove(u2);
                        if let Some(u3) = last.min() {
                            return Some(([a, b, c], [u2, u3, u1]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Errors for ordered-tuple inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleError {
    OutOfRange { vertex: usize },
    Repeated { vertex: usize },
}

impl fmt::Display for TupleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TupleError::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            TupleError::Repeated { vertex } => write!(f, "vertex {vertex} repeated in tuple"),
        }
    }
}

impl std::error::Error for TupleError {}

/// Tests whether the ordered tuple `(v1, v2, v3, v4, v5)` is a pseudo-P5:
///
/// 1. v2v3 and v3v4 are edges;
/// 2. dist(v1,v2) <= 2 and dist(v4,v5) <= 2;
/// 3. dist(v1,v3) = dist(v2,v4) = dist(v3,v5) = 2;
/// 4. dist(v1,v4), dist(v1,v5), dist(v2,v5) >= 3.
///
/// Unreachable pairs count as distance infinity.
pub fn is_pseudo_p5(h: &Graph, t: [usize; 5]) -> Result<bool, TupleError> {
    let n = h.vertex_count();
    for &v in &t {
        if v >= n {
            return Err(TupleError::OutOfRange { vertex: v });
        }
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            if t[i] == t[j] {
                return Err(TupleError::Repeated { vertex: t[i] });
            }
        }
    }
    let d1 = h.distances_from(t[0]);
    let d2 = h.distances_from(t[1]);
    let d3 = h.distances_from(t[2]);
    let d4 = h.distances_from(t[3]);
    let le2 = |d: &[Option<u32>], v: usize| matches!(d[v], Some(x) if x <= 2);
    let eq2 = |d: &[Option<u32>], v: usize| d[v] == Some(2);
    let ge3 = |d: &[Option<u32>], v: usize| !le2(d, v);
    Ok(h.has_edge(t[1], t[2])
        && h.has_edge(t[2], t[3])
        && le2(&d1, t[1])
        && le2(&d4, t[4])
        && eq2(&d1, t[2])
        && eq2(&d2, t[3])
        && eq2(&d3, t[4])
        && ge3(&d1, t[3])
        && ge3(&d1, t[4])
        && ge3(&d2, t[4]))
}
