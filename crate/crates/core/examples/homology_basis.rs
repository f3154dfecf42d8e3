//! Tree-cotree decomposition, the basis cycles it yields, and arcs between
//! boundaries, with the crossing parities that make them useful.

use surfcyc::fixtures;
use surfcyc::homology::{boundary_arcs, default_arc_source, greedy_tree_cotree, partial_homology_basis};
use surfcyc::oracle::{enumerate_simple_cycles, is_separating};
use surfcyc::sides::crossing_parity;
use surfcyc::Weight;

fn main() -> surfcyc::Result<()> {
    let g = fixtures::torus_grid(4, 4, |_| 1);
    let tc = greedy_tree_cotree(&g, 0)?;
    println!("4x4 torus grid: {} with {} leftover edges", g.stats(), tc.leftover.len());

    let basis = partial_homology_basis(&g)?;
    for (i, c) in basis.cycles.iter().enumerate() {
        println!("lambda {i}: length {} darts {}", c.length, c.dart_list());
    }

    // Every non-separating simple cycle crosses some basis cycle an odd
    // number of times; separating ones cross all of them evenly.
    let cycles = enumerate_simple_cycles(&g, Weight::new(6))?;
    let (mut nonsep, mut detected) = (0, 0);
    for c in &cycles {
        let parities: Vec<bool> =
            basis.cycles.iter().map(|l| crossing_parity(&g, l, &c.darts)).collect::<surfcyc::Result<_>>()?;
        if !is_separating(&g, c)? {
            nonsep += 1;
            detected += parities.iter().any(|&p| p) as usize;
        }
    }
    println!(
        "{} simple cycles of length <= 6: {nonsep} non-separating, {detected} detected by the basis",
        cycles.len()
    );

    let pants = fixtures::pair_of_pants(|_| 1);
    let arcs = boundary_arcs(&pants, default_arc_source(&pants).unwrap())?;
    for (i, a) in arcs.arcs.iter().enumerate() {
        println!("pants arc to boundary {}: darts {}", i + 1, a.dart_list());
    }
    Ok(())
}
