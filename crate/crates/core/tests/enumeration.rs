//! The crossing-sequence enumeration is complete for the cycles that matter:
//! a shortest non-trivial cycle always has a curl-free crossing sequence
//! among the enumerated ones, and realising that sequence gives back its
//! length.

use std::collections::HashSet;

use surfcyc::corpus::{generate_corpus, CorpusBounds};
use surfcyc::oracle::{enumerate_simple_cycles, Classifier, CycleClass};
use surfcyc::undirected::{
    crossing_sequence_of_cycle, enumerate_crossing_sequences, greedy_system_of_arcs, greedy_system_of_loops,
    shortest_cycle_for_crossing_sequence, validate_crossing_sequence,
};
use surfcyc::{CycleWalk, Weight};

#[test]
fn shortest_cycles_have_enumerated_sequences() {
    let corpus = generate_corpus(7, 120, CorpusBounds::default()).unwrap();
    let mut checked = 0;
    for e in corpus.iter().filter(|e| e.graph.is_symmetric()) {
        let g = &e.graph;
        let s = g.stats();
        if s.g == 0 && s.b <= 1 {
            continue;
        }
        let sys = if s.b == 0 { greedy_system_of_loops(g, 0) } else { greedy_system_of_arcs(g) }.unwrap();
        let enumerated: HashSet<_> = enumerate_crossing_sequences(&sys).unwrap().into_iter().collect();
        let classify = Classifier::new(g);
        for class in [CycleClass::NonContractible, CycleClass::NonNullHomologous] {
            let Some(best) = enumerate_simple_cycles(g, Weight::INF)
                .unwrap()
                .into_iter()
                .filter(|c| classify.is_nontrivial(class, c))
                .map(|c| c.length)
                .min()
            else {
                continue;
            };
            let minimal: Vec<CycleWalk> = enumerate_simple_cycles(g, best)
                .unwrap()
                .into_iter()
                .filter(|c| c.length == best && classify.is_nontrivial(class, c))
                .collect();
            let found = minimal.iter().any(|c| {
                let c = CycleWalk::closed(&sys.graph, c.darts.clone()).unwrap();
                let Some(x) = crossing_sequence_of_cycle(&sys, &c) else { return false };
                validate_crossing_sequence(&x)
                    && enumerated.contains(&x)
                    && shortest_cycle_for_crossing_sequence(&sys, &x, Weight::INF).map(|w| w.length)
                        == Some(best)
            });
            assert!(found, "{} {class}: no minimal cycle has an enumerated sequence", e.file);
            checked += 1;
        }
    }
    assert!(checked >= 60, "only {checked} checks ran");
}
