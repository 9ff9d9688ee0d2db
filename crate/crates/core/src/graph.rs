//! Undirected simple graphs on dense 0-based vertices, with bitset adjacency
//! rows, squares, breadth-first distances, and the edge-list text format.

use crate::vertexset::VertexSet;
use std::fmt;

/// An immutable undirected simple graph.
///
/// Vertices are `0..n`. Adjacency is symmetric and irreflexive; the edge
/// count is cached at construction. Equality compares vertex counts and
/// edge sets literally (labels matter, no isomorphism).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    ///
    /// Panics on self-loops or out-of-range endpoints; callers constructing
    /// graphs programmatically are expected to pass valid edges. Use
    /// [`Graph::parse`] for untrusted input.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) outside 0..{n}");
            assert_ne!(u, v, "self-loop at {u}");
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(|row| row.len()).sum::<usize>() / 2;
        Graph { n, adj, m }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The square: distinct vertices are adjacent iff their distance is at
    /// most 2.
    pub fn square(&self) -> Graph {
        let mut adj = self.adj.clone();
        for (v, row) in adj.iter_mut().enumerate() {
            for u in self.adj[v].iter() {
                row.union_with(&self.adj[u]);
            }
            row.remove(v);
        }
        let m = adj.iter().map(|row| row.len()).sum::<usize>() / 2;
        Graph { n: self.n, adj, m }
    }

    /// The subgraph induced by `verts`, relabeled to `0..verts.len()` in
    /// ascending vertex order.
    pub fn induced(&self, verts: &VertexSet) -> Graph {
        let members = verts.to_vec();
        let k = members.len();
        let mut edges = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(k, edges)
    }

    /// Breadth-first distances from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<u32>> {
        assert!(s < self.n, "source {s} outside 0..{}", self.n);
        let mut dist = vec![None; self.n];
        let mut frontier = VertexSet::singleton(self.n, s);
        let mut visited = frontier.clone();
        let mut d = 0u32;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in frontier.iter() {
                dist[v] = Some(d);
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&visited);
            visited.union_with(&next);
            frontier = next;
            d += 1;
        }
        dist
    }

    /// True iff the graph has at most one connected component.
    /// The empty graph and a single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.distances_from(0).iter().all(|d| d.is_some())
    }

    /// Parses the edge-list text format.
    ///
    /// The first significant line is the vertex count `n`; every following
    /// significant line is an edge `u v` with `0 <= u, v < n` and `u != v`.
    /// Lines starting with `#` and blank lines are ignored. Duplicate edges
    /// are rejected.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut n: Option<usize> = None;
        let mut adj: Vec<VertexSet> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            match n {
                None => {
                    if tokens.len() != 1 {
                        return Err(ParseError::Malformed { line });
                    }
                    let count: usize = tokens[0]
                        .parse()
                        .map_err(|_| ParseError::Malformed { line })?;
                    adj = vec![VertexSet::empty(count); count];
                    n = Some(count);
                }
                Some(count) => {
                    if tokens.len() != 2 {
                        return Err(ParseError::Malformed { line });
                    }
                    let u: usize = tokens[0]
                        .parse()
                        .map_err(|_| ParseError::Malformed { line })?;
                    let v: usize = tokens[1]
                        .parse()
                        .map_err(|_| ParseError::Malformed { line })?;
                    for w in [u, v] {
                        if w >= count {
                            return Err(ParseError::VertexOutOfRange {
                                line,
                                vertex: w,
                                n: count,
                            });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop { line, vertex: u });
                    }
                    if adj[u].contains(v) {
                        return Err(ParseError::DuplicateEdge { line, u, v });
                    }
                    adj[u].insert(v);
                    adj[v].insert(u);
                    edges.push((u, v));
                }
            }
        }
        match n {
            None => Err(ParseError::MissingHeader),
            Some(count) => Ok(Graph::from_edges(count, edges)),
        }
    }

    /// Canonical serialization: the header `n`, then one `u v` line per edge
    /// sorted by (min endpoint, max endpoint).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Errors for the edge-list text format, each carrying the 1-based line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    MissingHeader,
    Malformed {
        line: usize,
    },
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        line: usize,
        vertex: usize,
    },
    DuplicateEdge {
        line: usize,
        u: usize,
        v: usize,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing vertex-count header line"),
            ParseError::Malformed { line } => write!(f, "line {line}: malformed line"),
            ParseError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "line {line}: vertex {vertex} out of range (n = {n})")
            }
            ParseError::SelfLoop { line, vertex } => {
                write!(f, "line {line}: self-loop at vertex {vertex}")
            }
            ParseError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {u} {v}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Path on `k` vertices: 0-1-...-(k-1).
pub fn path(k: usize) -> Graph {
    Graph::from_edges(k, (1..k).map(|v| (v - 1, v)))
}

/// Complete graph on `k` vertices.
pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    Graph::from_edges(k, edges)
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3);
    Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_p3() {
        let g = Graph::parse("3\n0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g, path(3));
    }

    #[test]
    fn parse_k1_without_edges() {
        let g = Graph::parse("1").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(
            Graph::parse("2\n0 0"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn parse_rejects_duplicate_and_range_and_garbage() {
        assert_eq!(
            Graph::parse("3\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 1,
                v: 0
            })
        );
        assert_eq!(
            Graph::parse("2\n0 5"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 5,
                n: 2
            })
        );
        assert_eq!(
            Graph::parse("2\n0 1 2"),
            Err(ParseError::Malformed { line: 2 })
        );
        assert_eq!(Graph::parse("two"), Err(ParseError::Malformed { line: 1 }));
        assert_eq!(
            Graph::parse("# only a comment\n\n"),
            Err(ParseError::MissingHeader)
        );
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = Graph::parse("# corpus graph\n3\n\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn square_of_p5() {
        // Oracle: pairs at BFS distance 1 or 2.
        let p5 = path(5);
        let sq = p5.square();
        let mut expected = Vec::new();
        for u in 0..5 {
            let dist = p5.distances_from(u);
            for (v, d) in dist.iter().enumerate().skip(u + 1) {
                if matches!(d, Some(d) if *d <= 2) {
                    expected.push((u, v));
                }
            }
        }
        assert_eq!(sq.edges(), expected);
        assert_eq!(
            sq.edges(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn square_of_complete_graph_is_itself() {
        let k4 = complete(4);
        assert_eq!(k4.square(), k4);
    }

    #[test]
    fn distances_on_path_and_disconnected() {
        let p5 = path(5);
        let d: Vec<_> = p5
            .distances_from(0)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        assert_eq!(d, vec![0, 1, 2, 3, 4]);

        let two_k1 = Graph::empty(2);
        assert_eq!(two_k1.distances_from(0), vec![Some(0), None]);
    }

    #[test]
    fn distances_in_pseudo_p5_host() {
        // The ends of the defining tuple sit at distance four.
        let h = crate::testgraphs::pseudo_p5_host();
        assert_eq!(h.distances_from(0)[4], Some(4));
    }

    #[test]
    fn equality_is_edge_set_equality() {
        assert_eq!(path(3), Graph::parse("3\n1 2\n0 1").unwrap());
        assert_ne!(path(3), complete(3));
    }

    #[test]
    fn connectivity() {
        assert!(path(5).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).is_connected());
        assert!(crate::testgraphs::dh_no_ptolemaic_root().is_connected());
    }

    #[test]
    fn serialize_emits_sorted_edges_with_header() {
        let g = Graph::parse("4\n2 3\n0 3\n0 1").unwrap();
        assert_eq!(g.to_edge_list(), "4\n0 1\n0 3\n2 3\n");
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }
}
