mod common;

use std::collections::BTreeSet;

use edge_outer::format::{parse_graph, serialize_graph};
use edge_outer::gadgets::build_a;
use edge_outer::optimal::{chinese_postman_length, enumerate_cprs, exact_srs, hamilton_cycle, is_cprs_walk, rotation_system_count};
use edge_outer::reporter::reporter_strand_walk;
use edge_outer::{is_reporter_strand_walk, realize_as_face, Dart, Graph, Walk};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// All edge-spanning faces of minimum possible length 2n over every
/// rotation system, as canonical walks.
fn brute_cprs(g: &Graph) -> BTreeSet<Vec<Dart>> {
    let mut out = BTreeSet::new();
    for emb in all_embeddings(g) {
        let faces = emb.trace_faces();
        for f in 0..faces.len() {
            if faces.spans_all_edges(f) && faces.face(f).len() == 2 * g.vertex_count() {
                out.insert(Walk::new(g, faces.face(f).to_vec()).unwrap().canonical());
            }
        }
    }
    out
}

#[test]
fn cprs_enumeration_matches_exhaustive_faces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = vec![k4(), Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()];
    for n in [6, 8, 8, 10] {
        graphs.push(random_cubic_2conn(&mut rng, n));
    }
    for g in &graphs {
        let found: BTreeSet<Vec<Dart>> = enumerate_cprs(g, 1_000_000).unwrap().iter().map(Walk::canonical).collect();
        assert_eq!(found, brute_cprs(g), "{:?}", g.edges());
        for w in enumerate_cprs(g, 1_000_000).unwrap() {
            assert!(cprs_oracle(g, &w));
            assert_eq!(is_cprs_walk(g, &w), Ok(true));
        }
        let srs = exact_srs(g, 1 << 12).unwrap().length;
        assert_eq!(srs == 2 * g.vertex_count(), !found.is_empty());
    }
}

#[test]
fn k4_cprs_doubles_form_matchings() {
    let g = k4();
    let walks = enumerate_cprs(&g, 100).unwrap();
    assert_eq!(walks.len(), 3);
    let mut matchings = BTreeSet::new();
    for w in &walks {
        let u = usage(&g, w);
        let doubles: Vec<usize> = (0..6).filter(|&e| u[e] == 2).collect();
        assert_eq!(doubles.len(), 2);
        matchings.insert(doubles);
    }
    assert_eq!(matchings.len(), 3);
}

#[test]
fn gadget_a_completion_has_no_cprs_walk() {
    let a = build_a();
    assert!(enumerate_cprs(&a.graph, 1_000_000).unwrap().is_empty());
    assert!(brute_cprs(&a.graph).is_empty());
}

#[test]
fn hamilton_agrees_with_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..60 {
        let n = 3 + i % 6;
        let g = random_multigraph(&mut rng, n, i % 9);
        let fast = hamilton_cycle(&g);
        assert_eq!(fast.is_some(), brute_hamilton(&g).is_some(), "{:?}", g.edges());
        if let Some(c) = fast {
            assert!(is_hamilton_cycle(&g, &c));
        }
    }
}

#[test]
fn srs_lies_between_cp_and_flip_output() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..40 {
        let g = random_multigraph(&mut rng, 1 + i % 6, 1 + i % 5);
        if rotation_system_count(&g) > 1 << 16 {
            continue;
        }
        let srs = exact_srs(&g, 1 << 16).unwrap();
        let run = reporter_strand_walk(&g, &random_embedding(&mut rng, &g)).unwrap();
        assert!(brute_cp(&g) <= srs.length && srs.length <= run.walk.len());
        assert!(is_reporter_strand_walk(&g, &srs.walk));
    }
}

#[test]
fn petersen_postman() {
    // Every vertex is odd; a perfect matching pairs them at distance 1.
    assert_eq!(chinese_postman_length(&petersen()), Ok(20));
}

fn multigraph() -> impl Strategy<Value = (Graph, u64)> {
    (1usize..9, 0usize..10, any::<u64>()).prop_map(|(n, extra, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_multigraph(&mut rng, n, extra), seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn serialization_is_byte_stable((g, seed) in multigraph()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let emb = random_embedding(&mut rng, &g);
        let text = serialize_graph(&g, Some(&emb), None);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back.graph, &g);
        let again = serialize_graph(&back.graph, back.embedding.as_ref(), None);
        prop_assert_eq!(&again, &text);
        prop_assert_eq!(back.embedding.unwrap().trace_faces().len(), emb.trace_faces().len());
    }

    #[test]
    fn flip_output_realizes((g, seed) in multigraph()) {
        prop_assume!(g.edge_count() > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let run = reporter_strand_walk(&g, &random_embedding(&mut rng, &g)).unwrap();
        let emb = realize_as_face(&g, &run.walk).unwrap();
        let faces = emb.trace_faces();
        prop_assert!(faces.faces().iter().any(|f| Walk::new(&g, f.clone()).unwrap().same_cycle(&run.walk)));
        prop_assert_eq!(run.walk.canonical(), run.walk.reversed().canonical());
    }

    #[test]
    fn faces_partition_darts((g, seed) in multigraph()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
        let emb = random_embedding(&mut rng, &g);
        let faces = emb.trace_faces();
        let mut seen: Vec<Dart> = faces.faces().iter().flatten().copied().collect();
        seen.sort();
        let all: Vec<Dart> = g.darts().collect();
        prop_assert_eq!(seen, all);
        // Euler: V - E + F is even and at most 2.
        prop_assume!(g.edge_count() > 0);
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
        prop_assert!(chi <= 2 && chi % 2 == 0);
        prop_assert_eq!(emb.genus().unwrap() as i64, (2 - chi) / 2);
    }
}
