//! Randomised invariants over generated surfaces.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use surfcyc::corpus::{random_surface, Shape};
use surfcyc::covers::cyclic_double_cover;
use surfcyc::directed::shortest_directed;
use surfcyc::format::{parse_surf, write_surf};
use surfcyc::homology::partial_homology_basis;
use surfcyc::oracle::{brute_force_shortest, shortest_nontrivial_walk_length, Classifier, CycleClass};
use surfcyc::sides::crossing_count;
use surfcyc::surgery::paste_all;
use surfcyc::undirected::shortest_undirected;
use surfcyc::{EmbeddedGraph, SurfError, Weight};

fn surface(max_vertices: usize, symmetric: bool) -> impl Strategy<Value = EmbeddedGraph> {
    (0usize..=2, 0usize..=3, 1usize..=max_vertices, 0usize..=3, any::<u64>(), any::<bool>()).prop_map(
        move |(genus, boundaries, vertices, chords, seed, light_holes)| {
            let shape = Shape { genus, boundaries, vertices, chords, symmetric, light_holes };
            random_surface(&mut ChaCha8Rng::seed_from_u64(seed), shape, 20)
        },
    )
}

fn length(r: surfcyc::Result<Weight>) -> Option<u64> {
    match r {
        Ok(w) => Some(w.raw()),
        Err(SurfError::NoSuchCycle) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn format_round_trips(g in surface(12, false)) {
        let text = write_surf(&g);
        let back = parse_surf(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_surf(&back), text);
    }

    #[test]
    fn euler_characteristic(g in surface(12, false)) {
        let s = g.stats();
        prop_assert_eq!(s.chi, s.n as i64 - s.m as i64 + s.f as i64);
        prop_assert_eq!(s.chi, 2 - 2 * s.g - s.b as i64);
        let interior: usize = g.interior_faces().len();
        prop_assert_eq!(interior, s.f);
        prop_assert_eq!(g.faces().iter().map(Vec::len).sum::<usize>(), 2 * s.m);
    }

    #[test]
    fn garbled_input_never_panics(g in surface(6, false), cut in 0usize..400, junk in "[0-9 a-z\n-]{0,12}") {
        let text = write_surf(&g);
        let at = text.char_indices().map(|(i, _)| i).nth(cut % text.len()).unwrap_or(0);
        let garbled = format!("{}{}{}", &text[..at], junk, &text[at..]);
        let _ = parse_surf(&garbled);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn directed_matches_oracle(g in surface(9, false)) {
        for class in CycleClass::ALL {
            let fast = length(shortest_directed(&g, class).map(|c| c.length));
            let truth = length(brute_force_shortest(&g, class).map(|c| c.length));
            prop_assert_eq!(fast, truth, "{}", class);
        }
    }

    #[test]
    fn undirected_matches_oracle(g in surface(9, true)) {
        for class in CycleClass::ALL {
            let fast = length(shortest_undirected(&g, class).map(|r| r.cycle.length));
            let truth = length(brute_force_shortest(&g, class).map(|c| c.length));
            prop_assert_eq!(fast, truth, "{}", class);
        }
    }

    #[test]
    fn answers_are_simple_and_of_their_class(g in surface(9, false)) {
        let classify = Classifier::new(&g);
        for class in CycleClass::ALL {
            if let Ok(c) = shortest_directed(&g, class) {
                prop_assert!(c.is_simple(&g));
                prop_assert!(classify.is_nontrivial(class, &c), "{}", class);
            }
        }
    }

    #[test]
    fn classes_are_nested(g in surface(9, false)) {
        let classify = Classifier::new(&g);
        let oracle = |class| length(brute_force_shortest(&g, class).map(|c| c.length)).unwrap_or(u64::MAX);
        let (sep, hom, con) = (
            oracle(CycleClass::NonSeparating),
            oracle(CycleClass::NonNullHomologous),
            oracle(CycleClass::NonContractible),
        );
        prop_assert!(con <= hom && hom <= sep);
        if let Ok(c) = brute_force_shortest(&g, CycleClass::NonSeparating) {
            prop_assert!(classify.is_nontrivial(CycleClass::NonNullHomologous, &c));
            prop_assert!(classify.is_nontrivial(CycleClass::NonContractible, &c));
        }
        if let Ok(c) = brute_force_shortest(&g, CycleClass::NonNullHomologous) {
            prop_assert!(classify.is_nontrivial(CycleClass::NonContractible, &c));
        }
    }

    /// Allowing repeated vertices never produces anything shorter.
    #[test]
    fn walks_are_no_shorter_than_cycles(g in surface(9, false)) {
        for class in [CycleClass::NonSeparating, CycleClass::NonNullHomologous] {
            let walk = length(shortest_nontrivial_walk_length(&g, class));
            let cycle = length(shortest_directed(&g, class).map(|c| c.length));
            prop_assert_eq!(walk, cycle, "{}", class);
        }
    }

    #[test]
    fn crossing_count_is_additive(g in surface(10, false), split in any::<prop::sample::Index>()) {
        let closed = paste_all(&g);
        prop_assume!(closed.genus() > 0);
        let basis = partial_homology_basis(&closed).unwrap().cycles;
        let w = &basis[basis.len() - 1];
        for l in &basis {
            let k = split.index(w.darts.len() + 1);
            let (p, q) = w.darts.split_at(k);
            let whole = crossing_count(&closed, l, &w.darts).unwrap();
            let parts = crossing_count(&closed, l, p).unwrap() + crossing_count(&closed, l, q).unwrap();
            prop_assert_eq!(whole, parts);
        }
        prop_assert_eq!(crossing_count(&closed, w, &w.darts).unwrap(), 0);
    }

    #[test]
    fn double_cover_lifts_project_back(g in surface(10, false)) {
        let closed = paste_all(&g);
        prop_assume!(closed.genus() > 0);
        let basis = partial_homology_basis(&closed).unwrap().cycles;
        let cover = cyclic_double_cover(&closed, &basis[0]).unwrap();
        prop_assert_eq!(cover.graph.vertex_count(), 2 * closed.vertex_count());
        prop_assert_eq!(cover.graph.edge_count(), 2 * closed.edge_count());
        prop_assert!(cover.graph.genus() <= 2 * closed.genus());
        for c in &basis {
            let start = cover.vertex(c.vertices(&closed)[0], 0).unwrap();
            let lift = cover.lift_walk(&c.darts, start).unwrap();
            prop_assert_eq!(cover.project_walk(&lift.darts).darts, c.darts.clone());
        }
    }
}
