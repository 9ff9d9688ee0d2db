//! On-demand stress tests (`cargo test --release -- --ignored`): heavier
//! adversarial corpora than the acceptance suite, aimed at the inputs that
//! reach deep pipeline stages.

mod common;

use graph_squares::generators::{random_ptolemaic, GenSpec};
use graph_squares::oracle::{min_root_bruteforce, ClassPredicate, OracleOutcome};
use graph_squares::ptolemaic::{ptolemaic_square_root, RootResult};
use graph_squares::recognizers::is_chordal;
use graph_squares::split::{three_sun_free_split_root, SplitRootResult};

/// Chordal connected inputs are the ones that get past the first rejection
/// stage; compare against the oracle on a large corpus of them.
#[test]
#[ignore]
fn chordal_seven_vertex_corpus_matches_oracle() {
    let mut rng = common::seeded_rng(0xDEE701);
    let mut count = 0;
    let densities = [0.3, 0.4, 0.5, 0.6];
    let mut attempts = 0;
    while count < 3000 {
        attempts += 1;
        let g = common::random_connected_graph(7, densities[attempts % 4], Some(15), &mut rng);
        if !is_chordal(&g) {
            continue;
        }
        count += 1;
        let algorithm = ptolemaic_square_root(&g);
        let oracle = min_root_bruteforce(&g, ClassPredicate::Ptolemaic, 1 << 22);
        match (&algorithm, &oracle) {
            (RootResult::Root(found), OracleOutcome::Found { edge_count, .. }) => {
                assert_eq!(found.edge_count, *edge_count, "minimality off on {g:?}");
            }
            (RootResult::NoRoot(_), OracleOutcome::NoneExists) => {}
            (a, o) => panic!("disagreement on {g:?}: {a:?} vs {o:?}"),
        }

        let split = three_sun_free_split_root(&g).root().is_some();
        let split_oracle = min_root_bruteforce(&g, ClassPredicate::SplitThreeSunFree, 1 << 22);
        match (split, &split_oracle) {
            (true, OracleOutcome::Found { .. }) | (false, OracleOutcome::NoneExists) => {}
            (a, o) => panic!("split disagreement on {g:?}: {a:?} vs {o:?}"),
        }
    }
}

/// Guaranteed-yes instances: squares of generated ptolemaic graphs, where
/// the oracle independently certifies the minimum edge count. Squares with
/// more than 20 edges are skipped so the subset scan stays exhaustive.
#[test]
#[ignore]
fn squares_of_small_roots_reach_the_oracle_minimum() {
    let mut checked = 0;
    for seed in 0..500u64 {
        let n = 2 + (seed as usize % 7); // 2..=8
        let h = random_ptolemaic(&GenSpec::ptolemaic(n, seed, [2, 2, 1])).unwrap();
        let g = h.square();
        if g.edge_count() > 20 {
            continue;
        }
        checked += 1;
        let found = match ptolemaic_square_root(&g) {
            RootResult::Root(found) => found,
            RootResult::NoRoot(stage) => panic!("seed {seed}: rejected ({stage})"),
        };
        match min_root_bruteforce(&g, ClassPredicate::Ptolemaic, 1 << 24) {
            OracleOutcome::Found { edge_count, .. } => {
                assert_eq!(found.edge_count, edge_count, "seed {seed}: not minimal");
            }
            other => panic!("seed {seed}: oracle said {other:?}"),
        }
    }
    assert!(checked >= 250, "only {checked} squares were small enough");
}

/// Eight-vertex random graphs against the direct split characterization,
/// denser and larger than the property-suite corpus.
#[test]
#[ignore]
fn split_decision_eight_vertex_corpus() {
    use graph_squares::cliques::maximal_cliques_capped;
    let mut rng = common::seeded_rng(0xDEE702);
    let densities = [0.2, 0.4, 0.6, 0.8];
    for i in 0..3000 {
        let g = common::random_graph(8, densities[i % 4], &mut rng);
        let algorithm = match three_sun_free_split_root(&g) {
            SplitRootResult::Root(found) => {
                assert_eq!(found.root.square(), g, "graph {i}: bad certificate");
                true
            }
            SplitRootResult::NoRoot(_) => false,
        };
        let family = maximal_cliques_capped(&g, 1 << 12).unwrap();
        let direct = family.common_intersection().len() >= family.len()
            && !common::has_hch_obstruction_naive(&g);
        assert_eq!(algorithm, direct, "graph {i}: {g:?}");
    }
}
