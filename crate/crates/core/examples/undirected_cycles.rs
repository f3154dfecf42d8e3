//! The undirected pipeline step by step: greedy system of loops, the
//! polygonal schema of the cut-open disk, enumeration of crossing sequences,
//! and the shortest cycle realising each one.

use surfcyc::fixtures::{self, GridDir};
use surfcyc::homology::ClassSignature;
use surfcyc::oracle::CycleClass;
use surfcyc::undirected::{
    crossing_sequence_homology_class, enumerate_crossing_sequences, greedy_system_of_loops,
    shortest_cycle_for_crossing_sequence, shortest_undirected,
};
use surfcyc::Weight;

fn main() -> surfcyc::Result<()> {
    // Weights must agree on both darts of an edge, so they depend only on
    // whether the edge is horizontal or vertical.
    let g = fixtures::torus_grid(3, 4, |d| match d.dir {
        GridDir::East | GridDir::West => 2,
        GridDir::North | GridDir::South => 3,
    });
    let sys = greedy_system_of_loops(&g, 0)?;
    println!("{} loops, {} branches", sys.generators.len(), sys.schema.branch_count);
    let sides: Vec<String> = sys
        .schema
        .sides
        .iter()
        .map(|s| format!("{}{}", (b'a' + s.branch as u8) as char, if s.forward { "" } else { "'" }))
        .collect();
    println!("schema around the disk: {}", sides.join(" "));

    let sig = ClassSignature::new(&sys.graph)?;
    let sequences = enumerate_crossing_sequences(&sys)?;
    println!("{} candidate crossing sequences", sequences.len());
    for x in &sequences {
        let class = crossing_sequence_homology_class(x, &sys, &sig);
        match shortest_cycle_for_crossing_sequence(&sys, x, Weight::INF) {
            Some(c) => println!("  X: {x:<12} class {class:?} shortest {}", c.length),
            None => println!("  X: {x:<12} class {class:?} not realisable"),
        }
    }

    for class in CycleClass::ALL {
        let r = shortest_undirected(&g, class)?;
        println!("{class}: length {} via X: {}", r.cycle.length, r.sequence);
    }

    let pants = fixtures::pair_of_pants(|_| 1);
    let r = shortest_undirected(&pants, CycleClass::NonContractible)?;
    println!("pants noncon: length {} darts {} via X: {}", r.cycle.length, r.cycle.dart_list(), r.sequence);
    Ok(())
}
