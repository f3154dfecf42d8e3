//! The three directed queries on asymmetrically weighted surfaces.
//!
//! `cargo run --example directed_cycles [FILE.surf]`

use surfcyc::directed::{shortest_directed, shortest_odd_crossing_cycle};
use surfcyc::fixtures::{self, GridDir};
use surfcyc::format::parse_surf;
use surfcyc::homology::partial_homology_basis;
use surfcyc::oracle::CycleClass;
use surfcyc::{EmbeddedGraph, SurfError};

fn report(name: &str, g: &EmbeddedGraph) {
    println!("{name}: {}", g.stats());
    for class in CycleClass::ALL {
        match shortest_directed(g, class) {
            Ok(c) => println!("  {class}: length {} darts {}", c.length, c.dart_list()),
            Err(SurfError::NoSuchCycle) => println!("  {class}: none"),
            Err(e) => println!("  {class}: error {e}"),
        }
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        report(&path, &parse_surf(&std::fs::read_to_string(&path)?)?);
        return Ok(());
    }

    // Going east or north is cheap, the other way is expensive, so every
    // short cycle runs one way around.
    let oneway = fixtures::torus_grid(3, 3, |d| match d.dir {
        GridDir::East | GridDir::North => 1,
        GridDir::West | GridDir::South => 20,
    });
    report("one-way torus", &oneway);

    let basis = partial_homology_basis(&oneway)?;
    for l in &basis.cycles {
        let w = shortest_odd_crossing_cycle(&oneway, l)?;
        println!("  odd crossings with {}: length {}", l.dart_list(), w.length);
    }

    // The short neck separates the two handles, so it is non-contractible
    // but null-homologous.
    report("dumbbell", &fixtures::dumbbell(10, 1, 10));
    report("pants", &fixtures::pair_of_pants(|d| if d.dir == GridDir::East { 2 } else { 7 }));
    Ok(())
}
