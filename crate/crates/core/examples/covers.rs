//! Double and restricted cyclic covers over a basis cycle, with lifting and
//! projection of walks.

use surfcyc::covers::{cyclic_double_cover, restricted_cyclic_cover, RESTRICTED_COPIES};
use surfcyc::fixtures;
use surfcyc::homology::partial_homology_basis;
use surfcyc::sides::crossing_count;

fn main() -> surfcyc::Result<()> {
    let g = fixtures::octagon_genus2();
    let basis = partial_homology_basis(&g)?;
    let lambda = &basis.cycles[0];
    println!("base: {}  lambda = {}", g.stats(), lambda.dart_list());

    let double = cyclic_double_cover(&g, lambda)?;
    println!("double cover: {}", double.graph.stats());

    let restricted = restricted_cyclic_cover(&g, lambda)?;
    println!("restricted cover ({RESTRICTED_COPIES} copies): {}", restricted.graph.stats());

    // A walk lifts to a closed walk of the restricted cover exactly when its
    // signed crossing count with lambda is zero.
    for other in &basis.cycles {
        let c = crossing_count(&g, lambda, &other.darts)?;
        let start = restricted.vertex(other.vertices(&g)[0], 3).unwrap();
        let lift = restricted.lift_walk(&other.darts, start)?;
        let end = restricted.graph.head(*lift.darts.last().unwrap());
        println!("walk {:<12} crossing count {c:+}  lift closes: {}", other.dart_list(), end == start);
        assert_eq!(restricted.project_walk(&lift.darts).darts, other.darts);
    }
    Ok(())
}
