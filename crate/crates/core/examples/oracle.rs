//! Exhaustive search over simple cycles, used as ground truth, compared
//! with the fast directed algorithm.

use surfcyc::directed::shortest_directed;
use surfcyc::fixtures;
use surfcyc::oracle::{brute_force_shortest, enumerate_simple_cycles, Classifier, CycleClass};
use surfcyc::Weight;

fn main() -> surfcyc::Result<()> {
    let g = fixtures::torus_grid_with_hole(3, 3, |d| 1 + ((d.row * 3 + d.col) % 4) as u64);
    println!("{}", g.stats());

    let classify = Classifier::new(&g);
    let cycles = enumerate_simple_cycles(&g, Weight::new(8))?;
    for class in CycleClass::ALL {
        let count = cycles.iter().filter(|c| classify.is_nontrivial(class, c)).count();
        println!("{class}: {count} of {} short simple cycles qualify", cycles.len());
    }

    for class in CycleClass::ALL {
        let truth = brute_force_shortest(&g, class)?;
        let fast = shortest_directed(&g, class)?;
        println!("{class}: oracle {} / fast {} ({})", truth.length, fast.length, fast.dart_list());
        assert_eq!(truth.length, fast.length);
    }
    Ok(())
}
