//! Shared test-side oracles: exhaustive small-pattern searches, definitional
//! class checks, an isomorphism-reduced catalog of small connected graphs,
//! and seeded random corpora. Everything here is independent of the library
//! algorithms it is used to cross-check.

#![allow(dead_code)]

use graph_squares::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::sync::OnceLock;

/// All-pairs BFS distances.
pub fn all_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    (0..g.vertex_count()).map(|v| g.distances_from(v)).collect()
}

/// Exhaustive search for an induced cycle of length at least four: some
/// vertex subset whose induced subgraph is 2-regular, connected, and has as
/// many edges as vertices.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 16, "exhaustive cycle search is for small graphs");
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() < 4 {
            continue;
        }
        let sub = g.induced(&graph_squares::VertexSet::from_members(n, verts));
        let k = sub.vertex_count();
        if sub.edge_count() == k && (0..k).all(|v| sub.degree(v) == 2) && sub.is_connected() {
            return true;
        }
    }
    false
}

/// Definitional distance-hereditary test: every induced path joining two
/// vertices is a shortest path. Enumerates induced paths by depth-first
/// extension.
pub fn distance_hereditary_by_definition(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 10);
    let dist = all_distances(g);
    for start in 0..n {
        let mut path = vec![start];
        if !extend_induced_paths(g, &dist, &mut path) {
            return false;
        }
    }
    true
}

fn extend_induced_paths(g: &Graph, dist: &[Vec<Option<u32>>], path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    let start = path[0];
    if path.len() >= 2 {
        let length = (path.len() - 1) as u32;
        if dist[start][last] != Some(length) {
            return false;
        }
    }
    for w in g.neighbors(last).iter() {
        if path.contains(&w) {
            continue;
        }
        // Induced: w may touch only the current endpoint.
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        path.push(w);
        let ok = extend_induced_paths(g, dist, path);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// The four-point inequality over all vertex 4-tuples of a connected graph.
pub fn ptolemaic_by_inequality(g: &Graph) -> bool {
    if g.vertex_count() == 0 || !g.is_connected() {
        return false;
    }
    let n = g.vertex_count();
    let dist = all_distances(g);
    let d = |a: usize, b: usize| dist[a][b].unwrap() as u64;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    if d(u, v) * d(w, x) > d(u, w) * d(v, x) + d(u, x) * d(v, w) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Bit index of the pair (i, j), i < j, in a k-vertex upper-triangle mask.
fn pair_bit(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * k - i * (i + 1) / 2 + (j - i - 1)
}

/// Upper-triangle adjacency mask of the subgraph induced on `verts`.
pub fn induced_mask(g: &Graph, verts: &[usize]) -> u32 {
    let k = verts.len();
    let mut mask = 0u32;
    for i in 0..k {
        for j in (i + 1)..k {
            if g.has_edge(verts[i], verts[j]) {
                mask |= 1 << pair_bit(k, i, j);
            }
        }
    }
    mask
}

fn for_each_permutation(k: usize, f: &mut impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (0..k).collect();
    permute(&mut items, 0, f);
}

fn permute(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

/// All masks a pattern can take under vertex relabeling.
pub fn pattern_masks(k: usize, edges: &[(usize, usize)]) -> HashSet<u32> {
    let mut masks = HashSet::new();
    for_each_permutation(k, &mut |perm| {
        let mut mask = 0u32;
        for &(u, v) in edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            mask |= 1 << pair_bit(k, a, b);
        }
        masks.insert(mask);
    });
    masks
}

const GEM_EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)];

fn gem_masks() -> &'static HashSet<u32> {
    static MASKS: OnceLock<HashSet<u32>> = OnceLock::new();
    MASKS.get_or_init(|| pattern_masks(5, &GEM_EDGES))
}

/// Independent induced-gem existence test by mask matching.
pub fn has_induced_gem_naive(g: &Graph) -> bool {
    let masks = gem_masks();
    let mut found = false;
    for_each_subset(g.vertex_count(), 5, &mut |verts| {
        if masks.contains(&induced_mask(g, verts)) {
            found = true;
        }
    });
    found
}

/// The 3-sun plus 0..=3 edges among its private vertices, on labels 0..6.
fn obstruction_edges(extra: usize) -> Vec<(usize, usize)> {
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
    edges.extend_from_slice(&outer[..extra]);
    edges
}

fn obstruction_masks() -> &'static HashSet<u32> {
    static MASKS: OnceLock<HashSet<u32>> = OnceLock::new();
    MASKS.get_or_init(|| {
        let mut all = HashSet::new();
        for extra in 0..=3 {
            all.extend(pattern_masks(6, &obstruction_edges(extra)));
        }
        all
    })
}

/// Exhaustive search for any of the four hereditary clique-Helly
/// obstructions as an induced subgraph.
pub fn has_hch_obstruction_naive(g: &Graph) -> bool {
    let masks = obstruction_masks();
    let mut found = false;
    for_each_subset(g.vertex_count(), 6, &mut |verts| {
        if masks.contains(&induced_mask(g, verts)) {
            found = true;
        }
    });
    found
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut verts: Vec<usize> = (0..k).collect();
    loop {
        f(&verts);
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if verts[i] < n - k + i {
                verts[i] += 1;
                for j in (i + 1)..k {
                    verts[j] = verts[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}

/// All induced gems of `g`, each as the ordered tuple
/// `(v1, v2, apex, v4, v5)` with `(v1, v2, v4, v5)` the induced P4.
pub fn induced_gems(g: &Graph) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for_each_subset(g.vertex_count(), 5, &mut |verts| {
        let k = 5;
        let mut deg = [0usize; 5];
        let mut edges = 0;
        for i in 0..k {
            for j in (i + 1)..k {
                if g.has_edge(verts[i], verts[j]) {
                    deg[i] += 1;
                    deg[j] += 1;
                    edges += 1;
                }
            }
        }
        if edges != 7 {
            return;
        }
        let Some(apex) = (0..5).find(|&i| deg[i] == 4) else {
            return;
        };
        let ends: Vec<usize> = (0..5).filter(|&i| deg[i] == 2).collect();
        let mids: Vec<usize> = (0..5).filter(|&i| deg[i] == 3 && i != apex).collect();
        if ends.len() != 2 || mids.len() != 2 {
            return;
        }
        let (e0, e1) = (ends[0], ends[1]);
        let m0 = mids
            .iter()
            .copied()
            .find(|&m| g.has_edge(verts[e0], verts[m]))
            .unwrap();
        let m1 = if mids[0] == m0 { mids[1] } else { mids[0] };
        out.push([verts[e0], verts[m0], verts[apex], verts[m1], verts[e1]]);
    });
    out
}

/// One representative per isomorphism class of connected graphs with
/// 1..=max_n vertices (max_n <= 6): the lexicographically least adjacency
/// mask of each class.
pub fn connected_graph_catalog(max_n: usize) -> &'static Vec<Graph> {
    assert!(max_n == 6, "catalog is cached for max_n = 6");
    static CATALOG: OnceLock<Vec<Graph>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=6usize {
            let bits = n * (n - 1) / 2;
            // Per-permutation bit relocation tables.
            let mut tables: Vec<Vec<usize>> = Vec::new();
            for_each_permutation(n, &mut |perm| {
                let mut table = vec![0usize; bits];
                for i in 0..n {
                    for j in (i + 1)..n {
                        let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                        table[pair_bit(n, i, j)] = pair_bit(n, a, b);
                    }
                }
                tables.push(table);
            });
            for mask in 0u32..(1u32 << bits) {
                let g = graph_from_mask(n, mask);
                if !g.is_connected() {
                    continue;
                }
                let mut canonical = true;
                for table in &tables {
                    let mut remapped = 0u32;
                    for (bit, &target) in table.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            remapped |= 1 << target;
                        }
                    }
                    if remapped < mask {
                        canonical = false;
                        break;
                    }
                }
                if canonical {
                    out.push(g);
                }
            }
        }
        out
    })
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi sample.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Resamples until connected; with `max_edges` set, dense outliers are
/// resampled too so exhaustive edge-subset searches stay small.
pub fn random_connected_graph(
    n: usize,
    p: f64,
    max_edges: Option<usize>,
    rng: &mut ChaCha8Rng,
) -> Graph {
    loop {
        let g = random_graph(n, p, rng);
        if !g.is_connected() {
            continue;
        }
        if let Some(cap) = max_edges {
            if g.edge_count() > cap {
                continue;
            }
        }
        return g;
    }
}
