//! Small named graphs used as fixtures across the test suites and docs.

use crate::graph::Graph;

/// The gem: path 0-1-2-3 plus the apex 4 adjacent to all of it.
pub fn gem() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
}

/// The 3-sun: triangle {0,1,2} and independent {3,4,5} with 3 ~ 0,1,
/// 4 ~ 1,2, and 5 ~ 2,0.
pub fn three_sun() -> Graph {
    three_sun_plus_outer_edges(0)
}

/// The 3-sun with `count` (0..=3) extra edges among its private vertices
/// {3,4,5}. These four graphs are exactly the hereditary clique-Helly
/// obstructions.
pub fn three_sun_plus_outer_edges(count: usize) -> Graph {
    assert!(count <= 3);
    let mut edges = vec![
        (0, 1),
        (0, 2),
        (1, 2),
        (0, 3),
        (1, 3),
        (1, 4),
        (2, 4),
        (0, 5),
        (2, 5),
    ];
    let outer = [(3, 4), (4, 5), (3, 5)];
    edges.extend_from_slice(&outer[..count]);
    Graph::from_edges(6, edges)
}

/// A 7-vertex graph in which (0,1,2,3,4) is a pseudo-P5 that is not an
/// induced P5: path edges 1-2, 2-3, plus 5 ~ 0,1,2 and 6 ~ 2,3,4.
/// Its square restricted to {0..4} induces a gem with apex 2.
pub fn pseudo_p5_host() -> Graph {
    Graph::from_edges(
        7,
        [
            (1, 2),
            (2, 3),
            (5, 0),
            (5, 1),
            (5, 2),
            (6, 2),
            (6, 3),
            (6, 4),
        ],
    )
}

/// A distance-hereditary graph (it contains an induced C4, so it is not
/// ptolemaic) whose square admits no ptolemaic square root.
pub fn dh_no_ptolemaic_root() -> Graph {
    Graph::from_edges(7, [(0, 2), (1, 2), (1, 4), (1, 6), (2, 3), (3, 4), (3, 5)])
}

/// The square of [`dh_no_ptolemaic_root`]: a chordal graph with no ptolemaic
/// square root.
pub fn dh_no_ptolemaic_root_square() -> Graph {
    dh_no_ptolemaic_root().square()
}

/// The octahedron K2,2,2: complete tripartite with parts {0,3}, {1,4}, {2,5};
/// it has eight maximal cliques (all triangles).
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in (u + 1)..6 {
            if v != u + 3 || u >= 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, edges)
}
