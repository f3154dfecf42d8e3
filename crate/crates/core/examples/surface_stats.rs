//! Parse a surface, read off its topology, and write it back.
//!
//! Run with `cargo run --example surface_stats [FILE.surf]`. Without an
//! argument a one-vertex torus written inline is used.

use surfcyc::format::{parse_surf, write_surf};
use surfcyc::{fixtures, SurfaceStats};

const TORUS: &str = "\
# one vertex, loops a and b, rotation a b a^-1 b^-1
1 2 0
0 2 1 3
0 0 0 1 1
1 0 0 1 0
2 0 0 1 3
3 0 0 1 2
";

fn describe(name: &str, s: SurfaceStats) {
    println!("{name:>14}: {s}");
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => TORUS.to_string(),
    };
    let g = parse_surf(&text)?;
    describe("input", g.stats());
    for (f, darts) in g.faces().iter().enumerate() {
        let kind = if g.is_boundary_face(f) { "boundary" } else { "face" };
        println!("{kind} {f}: darts {darts:?}");
    }

    // Serialisation is canonical, so a second round trip is the identity.
    let again = write_surf(&parse_surf(&write_surf(&g))?);
    assert_eq!(write_surf(&g), again);

    describe("cube", fixtures::cube().stats());
    describe("octagon", fixtures::octagon_genus2().stats());
    describe("cylinder", fixtures::cylinder_grid(3, 3, |_| 1).stats());
    describe("pants", fixtures::pair_of_pants(|_| 1).stats());
    describe("dumbbell", fixtures::dumbbell(10, 1, 10).stats());
    Ok(())
}
