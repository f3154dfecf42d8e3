//! Small hand-checkable surfaces with known answers, checked through the
//! public API.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use surfcyc::builder::RotationBuilder;
use surfcyc::corpus::{random_surface, Shape};
use surfcyc::covers::{cyclic_double_cover, restricted_cyclic_cover};
use surfcyc::directed::{shortest_directed, shortest_odd_crossing_cycle};
use surfcyc::fixtures::{self, GridDir};
use surfcyc::homology::{
    boundary_arcs, default_arc_source, dual_graph, greedy_tree_cotree, partial_homology_basis,
};
use surfcyc::oracle::{
    brute_force_shortest, enumerate_simple_cycles, is_contractible, is_null_homologous, is_separating,
    CycleClass,
};
use surfcyc::sides::{crossing_count, crossing_parity, edge_side, Side};
use surfcyc::surgery::{cut_along, paste_all, paste_disk};
use surfcyc::undirected::{
    crossing_sequence_homology_class, greedy_system_of_arcs, greedy_system_of_loops,
    shortest_cycle_for_crossing_sequence, shortest_undirected, validate_crossing_sequence, Crossing,
    CrossingSequence,
};
use surfcyc::{CycleWalk, EmbeddedGraph, SurfError, Weight};

fn unit_torus() -> EmbeddedGraph {
    fixtures::torus_grid(3, 3, |_| 1)
}

fn unit_cylinder() -> EmbeddedGraph {
    fixtures::cylinder_grid(3, 3, |_| 1)
}

fn walk(g: &EmbeddedGraph, darts: &[usize]) -> CycleWalk {
    CycleWalk::closed(g, darts.to_vec()).unwrap()
}

fn component_stats(g: &EmbeddedGraph) -> Vec<(i64, usize)> {
    let mut v: Vec<_> = g.split_components().iter().map(|c| (c.genus(), c.boundary_count())).collect();
    v.sort();
    v
}

#[test]
fn face_tracing() {
    let t1 = fixtures::torus_one_vertex();
    assert_eq!(t1.faces().len(), 1);
    assert_eq!(t1.faces()[0].len(), 4);
    assert!(fixtures::cube().faces().iter().all(|f| f.len() == 4));
    let grid = unit_torus();
    assert_eq!((grid.vertex_count(), grid.edge_count()), (9, 18));
    assert_eq!(grid.faces().len(), 9);
    assert!(grid.faces().iter().all(|f| f.len() == 4));
}

#[test]
fn cutting_and_pasting() {
    let t1 = fixtures::torus_one_vertex();
    let annulus = cut_along(&t1, &walk(&t1, &[0])).unwrap().graph;
    assert_eq!(component_stats(&annulus), vec![(0, 2)]);
    let f = annulus.boundary_faces();
    let once = paste_disk(&annulus, f[0]).unwrap();
    assert_eq!((once.genus(), once.boundary_count()), (0, 1));
    let twice = paste_all(&annulus);
    assert_eq!((twice.genus(), twice.boundary_count()), (0, 0));

    let cube = fixtures::cube();
    let girdle = brute_force_shortest(&cube, CycleClass::NonSeparating);
    assert_eq!(girdle, Err(SurfError::NoSuchCycle));
    // Every simple cycle on the sphere cuts it into two disks.
    for c in enumerate_simple_cycles(&cube, Weight::new(4)).unwrap() {
        let parts = cut_along(&cube, &c).unwrap().graph;
        assert_eq!(component_stats(&parts), vec![(0, 1), (0, 1)]);
    }

    // The short neck of the dumbbell splits it into two one-holed tori.
    let dumbbell = fixtures::dumbbell(10, 1, 10);
    let neck = brute_force_shortest(&dumbbell, CycleClass::NonContractible).unwrap();
    assert_eq!(neck.length, Weight::new(4));
    let halves = cut_along(&dumbbell, &neck).unwrap().graph;
    assert_eq!(component_stats(&halves), vec![(1, 1), (1, 1)]);
}

#[test]
fn pasting_two_of_three_holes() {
    let shape =
        Shape { genus: 1, boundaries: 3, vertices: 8, chords: 2, symmetric: true, light_holes: false };
    let g = random_surface(&mut ChaCha8Rng::seed_from_u64(3), shape, 20);
    assert_eq!((g.genus(), g.boundary_count()), (1, 3));
    let f = g.boundary_faces();
    let h = paste_disk(&g, f[2]).unwrap();
    let h = paste_disk(&h, h.boundary_faces()[1]).unwrap();
    assert_eq!((h.genus(), h.boundary_count()), (1, 1));
}

#[test]
fn crossing_sides() {
    let t1 = fixtures::torus_one_vertex();
    let a = walk(&t1, &[0]);
    assert_eq!(edge_side(&t1, &a, 0).unwrap(), Side::Along);
    assert_eq!(edge_side(&t1, &a, 1).unwrap(), Side::Along);
    let b = edge_side(&t1, &a, 2).unwrap();
    let rev = edge_side(&t1, &a, 3).unwrap();
    // A loop at a vertex of the cycle leaves on one side and returns on the
    // other; its reversal does the mirror image.
    assert!(matches!(b, Side::Chord { .. }));
    match (b, rev) {
        (
            Side::Chord { leaves_left: l1, enters_left: e1 },
            Side::Chord { leaves_left: l2, enters_left: e2 },
        ) => {
            assert_ne!(l1, e1);
            assert_eq!((l1, e1), (e2, l2));
        }
        _ => unreachable!(),
    }

    // Upward dart into the bottom row of the grid: the horizontal cycle runs
    // east, so its left is north and an upward dart arrives from the right.
    let g = unit_torus();
    let row = walk(&g, &[0, 2, 4]);
    let north_into_row0 = (0..g.dart_count()).find(|&d| d >= 18 && d % 2 == 0 && g.head(d) == 0).unwrap();
    assert_eq!(edge_side(&g, &row, north_into_row0).unwrap(), Side::EntersRight);
    assert_eq!(edge_side(&g, &row, g.twin(north_into_row0)).unwrap(), Side::LeavesRight);
}

#[test]
fn duals_and_tree_cotree() {
    let d = dual_graph(&fixtures::cube()).unwrap();
    assert_eq!((d.vertex_count(), d.edge_count(), d.faces().len()), (6, 12, 8));
    let d = dual_graph(&fixtures::torus_one_vertex()).unwrap();
    assert_eq!((d.vertex_count(), d.edge_count(), d.genus()), (1, 2, 1));
    let d = dual_graph(&unit_torus()).unwrap();
    assert_eq!((d.vertex_count(), d.edge_count(), d.genus()), (9, 18, 1));
    assert!(d.faces().iter().all(|f| f.len() == 4));

    assert!(greedy_tree_cotree(&fixtures::cube(), 3).unwrap().leftover.is_empty());
    let t1 = greedy_tree_cotree(&fixtures::torus_one_vertex(), 0).unwrap();
    assert_eq!(t1.leftover, vec![0, 2]);

    let g = fixtures::torus_grid(4, 4, |d| 1 + ((7 * d.row + 3 * d.col + 5 * d.dir as usize) % 20) as u64);
    for root in [0, 5, 15] {
        let tc = greedy_tree_cotree(&g, root).unwrap();
        assert_eq!(tc.leftover.len(), 2);
    }
    for c in partial_homology_basis(&g).unwrap().cycles {
        assert!(!is_separating(&g, &c).unwrap());
    }
}

#[test]
fn basis_cycles() {
    let t1 = fixtures::torus_one_vertex();
    let cycles = partial_homology_basis(&t1).unwrap().cycles;
    assert_eq!(cycles.iter().map(|c| c.darts.clone()).collect::<Vec<_>>(), vec![vec![0], vec![2]]);

    let g = unit_torus();
    let cycles = partial_homology_basis(&g).unwrap().cycles;
    assert_eq!(cycles.len(), 2);
    for c in &cycles {
        assert!(c.length >= Weight::new(3));
        assert!(!is_separating(&g, c).unwrap());
    }
    assert_eq!(partial_homology_basis(&fixtures::octagon_genus2()).unwrap().cycles.len(), 4);
}

#[test]
fn arcs_between_boundaries() {
    let c = unit_cylinder();
    let arcs = boundary_arcs(&c, default_arc_source(&c).unwrap()).unwrap().arcs;
    assert_eq!(arcs.len(), 1);
    assert_eq!(arcs[0].darts.len(), 3);

    let pants = fixtures::pair_of_pants(|_| 1);
    let arcs = boundary_arcs(&pants, default_arc_source(&pants).unwrap()).unwrap().arcs;
    assert_eq!(arcs.len(), 2);
    let faces = pants.boundary_faces();
    for (i, a) in arcs.iter().enumerate() {
        let target = faces[i + 1];
        let vs = a.vertices(&pants);
        let on = |f: usize, v: usize| pants.face_vertices(f).contains(&v);
        // The arc meets its two boundaries exactly once each, at its ends.
        let (first, last) = (vs[0], *vs.last().unwrap());
        assert!(on(faces[0], first) && on(target, last));
        assert_eq!(vs.iter().filter(|&&v| on(faces[0], v)).count(), 1);
        assert_eq!(vs.iter().filter(|&&v| on(target, v)).count(), 1);
    }
}

#[test]
fn arc_prefers_a_cheaper_detour() {
    // One-layer cylinder whose rungs weigh 5, plus a two-edge detour of
    // weight 2 + 2 through a new vertex inside one square.
    let base = fixtures::cylinder_grid(1, 4, |d| match d.dir {
        GridDir::North | GridDir::South => 5,
        _ => 1,
    });
    let src = default_arc_source(&base).unwrap();
    let sq = (0..base.dart_count()).find(|&d| base.origin(d) == src && !base.is_boundary_dart(d)).unwrap();
    let face = base.face_of(sq);
    let far = base.faces()[face]
        .iter()
        .copied()
        .find(|&d| !base.face_vertices(base.boundary_faces()[0]).contains(&base.origin(d)))
        .unwrap();
    let mut b = RotationBuilder::from_graph(&base);
    let x = b.add_vertex();
    let (d1, t1) = b.new_edge(2, 2);
    let (d2, t2) = b.new_edge(2, 2);
    b.insert_after(base.prev(sq), d1);
    b.push_dart(x, t1);
    b.push_dart(x, d2);
    b.insert_after(base.prev(far), t2);
    let g = b.build().unwrap();
    assert_eq!((g.genus(), g.boundary_count()), (0, 2));
    let arc = &boundary_arcs(&g, src).unwrap().arcs[0];
    assert_eq!(arc.length, Weight::new(4));
    assert_eq!(arc.darts, vec![d1, d2]);
}

#[test]
fn crossing_functionals() {
    for g in [unit_torus(), fixtures::dumbbell(3, 1, 3), fixtures::torus_grid_with_hole(3, 3, |_| 1)] {
        let closed = paste_all(&g);
        let basis = partial_homology_basis(&closed).unwrap().cycles;
        for c in enumerate_simple_cycles(&g, Weight::new(6)).unwrap() {
            if is_separating(&g, &c).unwrap() {
                for l in &basis {
                    assert_eq!(crossing_count(&closed, l, &c.darts).unwrap(), 0);
                }
            }
        }
    }
    let c = unit_cylinder();
    let arc = boundary_arcs(&c, default_arc_source(&c).unwrap()).unwrap().arcs.remove(0);
    let waist = brute_force_shortest(&c, CycleClass::NonContractible).unwrap();
    assert!(crossing_parity(&c, &arc, &waist.darts).unwrap());
}

#[test]
fn double_covers() {
    let t1 = fixtures::torus_one_vertex();
    let cover = cyclic_double_cover(&t1, &walk(&t1, &[0])).unwrap();
    assert_eq!((cover.graph.vertex_count(), cover.graph.edge_count()), (2, 4));
    assert!(cover.graph.genus() <= 2);
    let b = cover.lift_walk(&[2], cover.vertex(0, 0).unwrap()).unwrap();
    assert_eq!(cover.graph.head(b.darts[0]), cover.vertex(0, 1).unwrap());

    let c = unit_cylinder();
    let arc = boundary_arcs(&c, default_arc_source(&c).unwrap()).unwrap().arcs.remove(0);
    let cover = cyclic_double_cover(&c, &arc).unwrap();
    assert_eq!(cover.graph.vertex_count(), 2 * c.vertex_count());
    let waist = brute_force_shortest(&c, CycleClass::NonContractible).unwrap();
    let start = waist.vertices(&c)[0];
    let lift = cover.lift_walk(&waist.darts, cover.vertex(start, 0).unwrap()).unwrap();
    assert_eq!(cover.graph.head(*lift.darts.last().unwrap()), cover.vertex(start, 1).unwrap());

    let g = fixtures::torus_grid(4, 4, |_| 1);
    let l = partial_homology_basis(&g).unwrap().cycles.remove(0);
    let cover = cyclic_double_cover(&g, &l).unwrap();
    assert_eq!(cover.graph.vertex_count(), 32);
    assert_eq!(cover.graph.edge_count(), 64);
    assert_eq!(cover.graph.faces().len(), 32);
}

#[test]
fn restricted_covers() {
    let t1 = fixtures::torus_one_vertex();
    let r = restricted_cyclic_cover(&t1, &walk(&t1, &[0])).unwrap().graph;
    assert_eq!((r.genus(), r.boundary_count()), (0, 2));

    let oct = fixtures::octagon_genus2();
    for l in partial_homology_basis(&oct).unwrap().cycles {
        let r = restricted_cyclic_cover(&oct, &l).unwrap().graph;
        assert_eq!((r.genus(), r.boundary_count()), (5, 2));
    }

    let holed = fixtures::torus_grid_with_hole(3, 3, |_| 1);
    let l = partial_homology_basis(&holed).unwrap().cycles.remove(0);
    let r = restricted_cyclic_cover(&holed, &l).unwrap().graph;
    assert_eq!((r.genus(), r.boundary_count()), (0, 7));
}

#[test]
fn odd_crossing_cycles() {
    let t1 = fixtures::torus_one_vertex();
    let w = shortest_odd_crossing_cycle(&t1, &walk(&t1, &[0])).unwrap();
    assert_eq!((w.length, w.darts.len()), (Weight::new(1), 1));
    assert!(crossing_parity(&t1, &walk(&t1, &[0]), &w.darts).unwrap());

    let g = unit_torus();
    let row = walk(&g, &[0, 2, 4]);
    let w = shortest_odd_crossing_cycle(&g, &row).unwrap();
    assert_eq!(w.length, Weight::new(3));
    assert!(crossing_parity(&g, &row, &w.darts).unwrap());

    let c = unit_cylinder();
    let arc = boundary_arcs(&c, default_arc_source(&c).unwrap()).unwrap().arcs.remove(0);
    assert_eq!(shortest_odd_crossing_cycle(&c, &arc).unwrap().length, Weight::new(3));
}

#[test]
fn directed_queries() {
    let len = |g: &EmbeddedGraph, class| shortest_directed(g, class).map(|c| c.length.raw());
    use CycleClass::*;
    assert_eq!(len(&fixtures::torus_one_vertex(), NonSeparating), Ok(1));
    assert_eq!(len(&unit_torus(), NonSeparating), Ok(3));
    let heavy = fixtures::torus_grid(3, 3, |d| match d.dir {
        GridDir::North | GridDir::South if d.col == 1 => 10,
        _ => 1,
    });
    assert_eq!(len(&heavy, NonSeparating), Ok(3));
    assert_eq!(len(&unit_cylinder(), NonNullHomologous), Ok(3));
    assert_eq!(len(&unit_cylinder(), NonContractible), Ok(3));
    assert_eq!(len(&unit_torus(), NonContractible), Ok(3));
    for g in [unit_torus(), heavy, fixtures::octagon_genus2()] {
        assert_eq!(len(&g, NonNullHomologous), len(&g, NonSeparating));
    }
    let pants = fixtures::pair_of_pants(|_| 1);
    let got = shortest_directed(&pants, NonNullHomologous).unwrap();
    assert_eq!(got.length, brute_force_shortest(&pants, NonNullHomologous).unwrap().length);
    assert!(!is_null_homologous(&pants, &got).unwrap());
}

#[test]
fn generator_systems() {
    let t1 = fixtures::torus_one_vertex();
    let sys = greedy_system_of_loops(&t1, 0).unwrap();
    assert_eq!(sys.generators.len(), 2);
    assert_eq!(sys.schema.sides.len(), 4);
    let disk = &sys.disk.graph;
    assert_eq!(disk.interior_faces().len(), 1);
    assert_eq!(disk.faces()[disk.boundary_faces()[0]].len(), 4);

    let sys = greedy_system_of_loops(&fixtures::octagon_genus2(), 0).unwrap();
    assert_eq!((sys.generators.len(), sys.schema.sides.len()), (4, 8));

    let sys = greedy_system_of_loops(&unit_torus(), 0).unwrap();
    assert_eq!(sys.generators.len(), 2);
    let disk = &sys.disk.graph;
    assert_eq!(disk.stats().chi, 1);
    assert_eq!((disk.component_count(), disk.genus(), disk.boundary_count()), (1, 0, 1));

    assert_eq!(greedy_system_of_arcs(&unit_cylinder()).unwrap().generators.len(), 1);
    let holed = fixtures::torus_grid_with_hole(3, 3, |_| 1);
    assert_eq!(greedy_system_of_arcs(&holed).unwrap().generators.len(), 2);
    assert_eq!(greedy_system_of_arcs(&fixtures::pair_of_pants(|_| 1)).unwrap().generators.len(), 2);
}

fn seq(entries: &[(usize, bool)]) -> CrossingSequence {
    CrossingSequence::new(
        entries.iter().map(|&(branch, left_to_right)| Crossing { branch, left_to_right }).collect(),
    )
}

#[test]
fn crossing_sequence_rules() {
    assert!(validate_crossing_sequence(&seq(&[(0, true)])));
    assert!(!validate_crossing_sequence(&seq(&[(0, true), (0, false)])));
    assert!(!validate_crossing_sequence(&seq(&[(0, true), (1, true), (0, true), (1, false), (0, true)])));
    assert!(validate_crossing_sequence(&seq(&[(0, true), (1, true), (0, false), (1, false)])));
}

#[test]
fn realising_crossing_sequences() {
    let g = unit_torus();
    let sys = greedy_system_of_loops(&g, 0).unwrap();
    let sig = surfcyc::homology::ClassSignature::new(&sys.graph).unwrap();
    for branch in 0..sys.schema.branch_count {
        let x = seq(&[(branch, true)]);
        let c = shortest_cycle_for_crossing_sequence(&sys, &x, Weight::INF).unwrap();
        assert_eq!(c.length, Weight::new(3));
        let class = crossing_sequence_homology_class(&x, &sys, &sig);
        assert_eq!(class.iter().filter(|&&b| b).count(), 1);
    }
    // Crossing every generator twice gives the trivial class.
    let x = seq(&[(0, true), (1, true), (0, false), (1, false)]);
    assert!(crossing_sequence_homology_class(&x, &sys, &sig).iter().all(|&b| !b));

    let c = unit_cylinder();
    let sys = greedy_system_of_arcs(&c).unwrap();
    let w = shortest_cycle_for_crossing_sequence(&sys, &seq(&[(0, true)]), Weight::INF).unwrap();
    assert_eq!(w.length, Weight::new(3));
}

#[test]
fn undirected_queries() {
    use CycleClass::*;
    let len = |g: &EmbeddedGraph, class| shortest_undirected(g, class).map(|r| r.cycle.length.raw());
    assert_eq!(len(&unit_torus(), NonSeparating), Ok(3));
    assert_eq!(len(&unit_cylinder(), NonContractible), Ok(3));
    assert_eq!(len(&unit_torus(), NonNullHomologous), len(&unit_torus(), NonSeparating));
    assert_eq!(len(&fixtures::cube(), NonContractible), Err(SurfError::NoSuchCycle));
}

#[test]
fn oracle_predicates() {
    let cube = fixtures::cube();
    for c in enumerate_simple_cycles(&cube, Weight::new(6)).unwrap() {
        assert!(is_separating(&cube, &c).unwrap());
        assert!(is_null_homologous(&cube, &c).unwrap());
        assert!(is_contractible(&cube, &c).unwrap());
    }
    let t1 = fixtures::torus_one_vertex();
    let a = walk(&t1, &[0]);
    assert!(!is_separating(&t1, &a).unwrap());
    assert!(!is_null_homologous(&t1, &a).unwrap());
    assert!(!is_contractible(&t1, &a).unwrap());

    let c = unit_cylinder();
    let waist = brute_force_shortest(&c, CycleClass::NonContractible).unwrap();
    assert!(!is_null_homologous(&c, &waist).unwrap());
    assert!(!is_contractible(&c, &waist).unwrap());

    let d = fixtures::dumbbell(10, 1, 10);
    let neck = brute_force_shortest(&d, CycleClass::NonContractible).unwrap();
    assert!(is_separating(&d, &neck).unwrap());
    assert!(!is_contractible(&d, &neck).unwrap());

    assert_eq!(
        brute_force_shortest(&unit_torus(), CycleClass::NonSeparating).unwrap().length,
        Weight::new(3)
    );
    for class in CycleClass::ALL {
        assert_eq!(brute_force_shortest(&cube, class), Err(SurfError::NoSuchCycle));
    }
}
