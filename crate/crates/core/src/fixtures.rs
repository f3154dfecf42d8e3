//! Canonical small surfaces used throughout tests, examples and the corpus.

use crate::builder::RotationBuilder;
use crate::graph::EmbeddedGraph;

/// Direction of a grid dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridDir {
    East,
    West,
    North,
    South,
}

/// Location of a grid dart, passed to weight callbacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridDart {
    pub row: usize,
    pub col: usize,
    pub dir: GridDir,
}

/// One vertex with loops `a` (darts 0, 1) and `b` (darts 2, 3) and rotation
/// `a b a⁻¹ b⁻¹`; unit weights.
pub fn torus_one_vertex() -> EmbeddedGraph {
    one_vertex_schema(1)
}

/// One-vertex genus-2 schema `a b a⁻¹ b⁻¹ c d c⁻¹ d⁻¹`; unit weights.
pub fn octagon_genus2() -> EmbeddedGraph {
    one_vertex_schema(2)
}

/// One vertex with `2g` loops arranged as `g` commutators.
pub fn one_vertex_schema(genus: usize) -> EmbeddedGraph {
    let mut b = RotationBuilder::new();
    let v = b.add_vertex();
    let mut rot = Vec::new();
    for _ in 0..genus {
        let (a, at) = b.new_edge(1, 1);
        let (c, ct) = b.new_edge(1, 1);
        rot.extend([a, c, at, ct]);
    }
    for d in rot {
        b.push_dart(v, d);
    }
    b.build().expect("schema is valid")
}

/// The cube with its spherical embedding; unit weights.
pub fn cube() -> EmbeddedGraph {
    // Bottom square 0-1-2-3 counterclockwise seen from outside-below is
    // clockwise from above; top square 4-5-6-7 above it.
    let mut b = RotationBuilder::new();
    for _ in 0..8 {
        b.add_vertex();
    }
    let edge = |b: &mut RotationBuilder, u: usize, v: usize| {
        let (d, t) = b.new_edge(1, 1);
        (u, v, d, t)
    };
    let pairs =
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];
    let mut darts = std::collections::HashMap::new();
    for &(u, v) in &pairs {
        let (_, _, d, t) = edge(&mut b, u, v);
        darts.insert((u, v), d);
        darts.insert((v, u), t);
    }
    // Counterclockwise neighbour orders viewed from outside the cube.
    let order: [[usize; 3]; 8] =
        [[1, 3, 4], [2, 0, 5], [3, 1, 6], [0, 2, 7], [7, 5, 0], [4, 6, 1], [5, 7, 2], [6, 4, 3]];
    for (v, nbrs) in order.iter().enumerate() {
        for &w in nbrs {
            b.push_dart(v, darts[&(v, w)]);
        }
    }
    b.build().expect("cube is valid")
}

fn grid_builder(
    rows: usize,
    cols: usize,
    wrap_rows: bool,
    weight: &dyn Fn(GridDart) -> u64,
) -> (RotationBuilder, Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut b = RotationBuilder::new();
    for _ in 0..rows * cols {
        b.add_vertex();
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut east = vec![None; rows * cols];
    let mut north = vec![None; rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            let (d, _) = b.new_edge(
                weight(GridDart { row: r, col: c, dir: GridDir::East }),
                weight(GridDart { row: r, col: (c + 1) % cols, dir: GridDir::West }),
            );
            east[id(r, c)] = Some(d);
        }
    }
    for r in 0..rows {
        if r + 1 == rows && !wrap_rows {
            continue;
        }
        for c in 0..cols {
            let (d, _) = b.new_edge(
                weight(GridDart { row: r, col: c, dir: GridDir::North }),
                weight(GridDart { row: (r + 1) % rows, col: c, dir: GridDir::South }),
            );
            north[id(r, c)] = Some(d);
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            let v = id(r, c);
            let w = id(r, (c + cols - 1) % cols);
            let s = id((r + rows - 1) % rows, c);
            b.push_dart(v, east[v].unwrap());
            if let Some(n) = north[v] {
                b.push_dart(v, n);
            }
            b.push_dart(v, east[w].unwrap() + 1);
            if r > 0 || wrap_rows {
                b.push_dart(v, north[s].unwrap() + 1);
            }
        }
    }
    (b, east, north)
}

/// `rows × cols` grid on the torus. Vertex `(r, c)` has id `r·cols + c`;
/// east darts come first (ids `2(r·cols + c)`), then north darts.
pub fn torus_grid(rows: usize, cols: usize, weight: impl Fn(GridDart) -> u64) -> EmbeddedGraph {
    let (b, _, _) = grid_builder(rows, cols, true, &weight);
    b.build().expect("torus grid is valid")
}

/// Torus grid with one quadrilateral face opened as a boundary.
pub fn torus_grid_with_hole(rows: usize, cols: usize, weight: impl Fn(GridDart) -> u64) -> EmbeddedGraph {
    let (mut b, east, _) = grid_builder(rows, cols, true, &weight);
    // The face to the right of the east dart at (0,0) is the square below row 0.
    b.mark_boundary(east[0].unwrap());
    b.build().expect("torus grid with hole is valid")
}

/// Annulus: `height + 1` rings of `circumference` vertices joined by
/// `height` layers of vertical edges. Ring 0 and the top ring are boundaries.
pub fn cylinder_grid(height: usize, circumference: usize, weight: impl Fn(GridDart) -> u64) -> EmbeddedGraph {
    let rows = height + 1;
    let (mut b, east, _) = grid_builder(rows, circumference, false, &weight);
    b.mark_boundary(east[0].unwrap());
    b.mark_boundary(east[(rows - 1) * circumference].unwrap() + 1);
    b.build().expect("cylinder grid is valid")
}

/// A sphere with three holes: a 3-layer cylinder on 3-vertex rings with one
/// middle square opened as a third boundary.
pub fn pair_of_pants(weight: impl Fn(GridDart) -> u64) -> EmbeddedGraph {
    let (mut b, east, north) = grid_builder(4, 3, false, &weight);
    b.mark_boundary(east[0].unwrap());
    b.mark_boundary(east[9].unwrap() + 1);
    // Square between rings 1 and 2 at columns 0..1: to the left of the
    // north dart at (1,0).
    b.mark_boundary(north[3].unwrap() + 1);
    b.build().expect("pair of pants is valid")
}

/// Two 2×2 torus blocks with one square removed from each, joined by a tube
/// of four edges. `block` weighs the torus edges, `neck_ring` the edges of
/// the first block's removed square and `tube` the connecting edges.
pub fn dumbbell(block: u64, neck_ring: u64, tube: u64) -> EmbeddedGraph {
    let (a, _, _) = grid_builder(2, 2, true, &|_| block);
    let (bb, _, _) = grid_builder(2, 2, true, &|_| block);
    let ga = a.build().expect("block");
    let gb = bb.build().expect("block");
    // Removed square: the face through east dart 0 in each block.
    let face_a: Vec<usize> = ga.faces()[ga.face_of(0)].clone();
    let face_b: Vec<usize> = gb.faces()[gb.face_of(0)].clone();
    assert_eq!(face_a.len(), 4);

    let mut m = RotationBuilder::from_graph(&ga);
    m.boundary.clear();
    for &d in &face_a {
        m.weight[d] = crate::weight::Weight::new(neck_ring);
        m.weight[ga.twin(d)] = crate::weight::Weight::new(neck_ring);
    }
    let off_d = m.twin.len();
    for list in gb.rotations() {
        m.rotation.push(list.iter().map(|d| d + off_d).collect());
    }
    for d in 0..gb.dart_count() {
        m.twin.push(gb.twin(d) + off_d);
        m.weight.push(gb.weight(d));
    }
    // Corner of the face at origin(face[i]) lies after twin(face[i-1]).
    let corner_a: Vec<usize> = (0..4).map(|i| ga.twin(face_a[(i + 3) % 4])).collect();
    let corner_b: Vec<usize> = (0..4).map(|i| gb.twin(face_b[(i + 3) % 4]) + off_d).collect();
    // Walking the first square forward matches walking the second backward.
    for i in 0..4 {
        let j = (4 - i) % 4;
        m.add_edge_in_corners(corner_a[i], corner_b[j], tube, tube);
    }
    m.build().expect("dumbbell is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cylinder_stats() {
        let s = cylinder_grid(3, 3, |_| 1).stats();
        assert_eq!((s.n, s.m, s.f, s.b, s.g), (12, 21, 9, 2, 0));
    }

    #[test]
    fn pants_stats() {
        let s = pair_of_pants(|_| 1).stats();
        assert_eq!((s.b, s.g), (3, 0));
    }

    #[test]
    fn holed_torus_stats() {
        let s = torus_grid_with_hole(3, 3, |_| 1).stats();
        assert_eq!((s.b, s.g, s.f), (1, 1, 8));
    }

    #[test]
    fn dumbbell_is_genus_two() {
        let s = dumbbell(1, 1, 10).stats();
        assert_eq!((s.n, s.b, s.g), (8, 0, 2));
    }
}
