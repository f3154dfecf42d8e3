//! Cutting a surface open along edges and pasting disks into boundaries.
//!
//! Cutting duplicates every cut edge. Around a vertex the cut darts (and any
//! requested boundary corners) act as separators; each sector between two
//! consecutive separators becomes its own vertex. The copy of a cut dart `d`
//! that sits in the sector counterclockwise after `d` is its *plus* copy, the
//! one in the sector before `d` its *minus* copy. The right side of an edge
//! keeps the minus copy of `d` and the plus copy of `twin(d)`.

use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, DartId, EmbeddedGraph, FaceId, VertexId};

/// A cut surface together with the bookkeeping that maps it back.
#[derive(Debug, Clone)]
pub struct CutSurface {
    /// The cut graph; it may be disconnected.
    pub graph: EmbeddedGraph,
    /// Original dart of every dart of `graph`.
    pub dart_source: Vec<DartId>,
    /// Original vertex of every vertex of `graph`.
    pub vertex_source: Vec<VertexId>,
    /// Per original dart: its copy in the sector after it. Uncut darts have a
    /// single copy and `plus == minus`.
    pub plus: Vec<DartId>,
    pub minus: Vec<DartId>,
    /// Whether each dart of `graph` lies on a face inherited from an original
    /// boundary rather than on a face created by the cut.
    pub inherited_boundary: Vec<bool>,
}

impl CutSurface {
    /// The vertex copy of `origin(d)` in the sector counterclockwise after `d`.
    pub fn sector_after(&self, d: DartId) -> VertexId {
        self.graph.origin(self.plus[d])
    }

    /// The vertex copy of `origin(d)` in the sector counterclockwise before `d`.
    pub fn sector_before(&self, d: DartId) -> VertexId {
        self.graph.origin(self.minus[d])
    }
}

/// Cuts `g` along every edge whose darts are flagged in `cut` (indexed by
/// dart; both darts of an edge must agree). Each dart `a` in
/// `corner_separators` additionally splits its vertex at the corner after `a`.
pub fn cut_along_subgraph(g: &EmbeddedGraph, cut: &[bool], corner_separators: &[DartId]) -> CutSurface {
    let nd = g.dart_count();
    assert_eq!(cut.len(), nd);
    let mut sep_corner = vec![false; nd];
    for &a in corner_separators {
        sep_corner[a] = true;
    }

    let mut plus = vec![usize::MAX; nd];
    let mut minus = vec![usize::MAX; nd];
    let mut next_id = 0;
    for d in 0..nd {
        let t = g.twin(d);
        if d > t {
            continue;
        }
        debug_assert_eq!(cut[d], cut[t]);
        if cut[d] {
            plus[d] = next_id;
            minus[t] = next_id + 1;
            minus[d] = next_id + 2;
            plus[t] = next_id + 3;
            next_id += 4;
        } else {
            plus[d] = next_id;
            minus[d] = next_id;
            plus[t] = next_id + 1;
            minus[t] = next_id + 1;
            next_id += 2;
        }
    }

    let mut twin = vec![0; next_id];
    let mut weight = vec![crate::weight::Weight::ZERO; next_id];
    let mut dart_source = vec![0; next_id];
    let mut inherited_boundary = vec![false; next_id];
    for d in 0..nd {
        let t = g.twin(d);
        twin[plus[d]] = minus[t];
        twin[minus[d]] = plus[t];
        for copy in [plus[d], minus[d]] {
            weight[copy] = g.weight(d);
            dart_source[copy] = d;
        }
        // The minus copy keeps the face to the right of `d`.
        inherited_boundary[minus[d]] = g.is_boundary_dart(d);
    }

    let mut rotation: Vec<Vec<DartId>> = Vec::new();
    let mut vertex_source = Vec::new();
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        let k = rot.len();
        let mut seps = Vec::new();
        for (i, &d) in rot.iter().enumerate() {
            if cut[d] {
                seps.push(2 * i);
            }
            if sep_corner[d] {
                seps.push(2 * i + 1);
            }
        }
        if seps.is_empty() {
            rotation.push(rot.iter().map(|&d| plus[d]).collect());
            vertex_source.push(v);
            continue;
        }
        for j in 0..seps.len() {
            let start = seps[j];
            let end = if j + 1 < seps.len() { seps[j + 1] } else { seps[0] + 2 * k };
            let mut list = Vec::new();
            if start % 2 == 0 {
                list.push(plus[rot[start / 2]]);
            }
            for p in start + 1..end {
                let p = p % (2 * k);
                if p.is_multiple_of(2) {
                    list.push(plus[rot[p / 2]]);
                }
            }
            let end = end % (2 * k);
            if end.is_multiple_of(2) {
                list.push(minus[rot[end / 2]]);
            }
            rotation.push(list);
            vertex_source.push(v);
        }
    }

    let mut boundary = Vec::new();
    for d in 0..nd {
        if cut[d] {
            boundary.push(plus[d]);
        }
    }
    for (x, &inh) in inherited_boundary.iter().enumerate() {
        if inh {
            boundary.push(x);
        }
    }
    let graph = EmbeddedGraph::assemble(rotation, twin, weight, &boundary)
        .expect("cutting a valid graph yields a valid rotation system");
    CutSurface { graph, dart_source, vertex_source, plus, minus, inherited_boundary }
}

/// The boundary corner at `v` on face `f`, as the dart the corner follows.
pub fn boundary_corner_at(g: &EmbeddedGraph, v: VertexId, f: FaceId) -> Option<DartId> {
    g.rotation(v).iter().copied().find(|&a| g.face_of(g.twin(a)) == f && g.is_boundary_face(f))
}

/// Any boundary corner at `v`.
pub fn any_boundary_corner(g: &EmbeddedGraph, v: VertexId) -> Option<DartId> {
    g.rotation(v).iter().copied().find(|&a| g.corner_after_is_boundary(a))
}

/// Cuts along a simple cycle, or along a simple arc whose endpoints lie on
/// boundary faces. For arcs the boundary corners at both endpoints become
/// separators so the cut merges the two boundaries with the new sides.
pub fn cut_along(g: &EmbeddedGraph, c: &CycleWalk) -> Result<CutSurface> {
    if !c.is_simple(g) {
        return Err(SurfError::NotSimple);
    }
    let mut cut = vec![false; g.dart_count()];
    for &d in &c.darts {
        cut[d] = true;
        cut[g.twin(d)] = true;
    }
    let mut corners = Vec::new();
    if !c.closed {
        let first = g.origin(c.darts[0]);
        let last = g.head(*c.darts.last().unwrap());
        for v in [first, last] {
            let a = any_boundary_corner(g, v).ok_or_else(|| {
                SurfError::NotEmbeddedWalk(format!("arc endpoint {v} is not on a boundary"))
            })?;
            corners.push(a);
        }
    }
    Ok(cut_along_subgraph(g, &cut, &corners))
}

/// Re-marks boundary face `f` as an interior face.
pub fn paste_disk(g: &EmbeddedGraph, f: FaceId) -> Result<EmbeddedGraph> {
    if f >= g.faces().len() || !g.is_boundary_face(f) {
        return Err(SurfError::NotBoundary(f));
    }
    let keep: Vec<DartId> =
        g.boundary_faces().into_iter().filter(|&h| h != f).map(|h| g.faces()[h][0]).collect();
    Ok(g.with_boundary(&keep))
}

/// Pastes disks into every boundary face.
pub fn paste_all(g: &EmbeddedGraph) -> EmbeddedGraph {
    g.without_boundary()
}

/// Pastes disks into every boundary face except `B₀`.
pub fn paste_all_but_first(g: &EmbeddedGraph) -> EmbeddedGraph {
    match g.boundary_faces().first() {
        Some(&f0) => g.with_boundary(&[g.faces()[f0][0]]),
        None => g.clone(),
    }
}

/// Whether the simple cycle `c` bounds a disk: some side of the cut is a
/// disk whose only boundary is the one the cut created.
pub fn bounds_disk(g: &EmbeddedGraph, c: &CycleWalk) -> Result<bool> {
    if !c.closed {
        return Err(SurfError::NotCycle);
    }
    let cut = cut_along(g, c)?;
    let h = &cut.graph;
    let (count, comp) = h.vertex_components();
    let mut n = vec![0i64; count];
    let mut darts = vec![0i64; count];
    let mut interior = vec![0i64; count];
    let mut bounds = vec![0i64; count];
    let mut inherited = vec![false; count];
    for v in 0..h.vertex_count() {
        n[comp[v]] += 1;
    }
    for d in 0..h.dart_count() {
        let k = comp[h.origin(d)];
        darts[k] += 1;
        inherited[k] |= cut.inherited_boundary[d];
    }
    for (f, face) in h.faces().iter().enumerate() {
        let k = comp[h.origin(face[0])];
        if h.is_boundary_face(f) {
            bounds[k] += 1;
        } else {
            interior[k] += 1;
        }
    }
    Ok((0..count).any(|k| {
        let chi = n[k] - darts[k] / 2 + interior[k];
        let genus2 = 2 - chi - bounds[k];
        genus2 == 0 && bounds[k] == 1 && !inherited[k]
    }))
}

/// Adds a collar inside every boundary face: a ring of new vertices joined
/// to the old boundary by spokes, all of infinite weight. The ring becomes
/// the boundary. Old vertex and dart ids are kept, so finite walks of the
/// result are walks of `g`, while no old vertex lies on a boundary any more.
pub fn with_collars(g: &EmbeddedGraph) -> EmbeddedGraph {
    let inf = crate::weight::Weight::INF.raw();
    let mut b = crate::builder::RotationBuilder::from_graph(g);
    b.boundary.clear();
    for f in g.boundary_faces() {
        let face = &g.faces()[f];
        let len = face.len();
        let ring: Vec<VertexId> = (0..len).map(|_| b.add_vertex()).collect();
        let spokes: Vec<(DartId, DartId)> = (0..len).map(|_| b.new_edge(inf, inf)).collect();
        let rims: Vec<(DartId, DartId)> = (0..len).map(|_| b.new_edge(inf, inf)).collect();
        for (j, &d) in face.iter().enumerate() {
            // Spoke j leaves origin(d) just before d, into the face.
            b.insert_after(g.prev(d), spokes[j].0);
            let x = ring[j];
            let back = rims[(j + len - 1) % len].1;
            b.rotation[x] = vec![rims[j].0, spokes[j].1, back];
        }
        b.mark_boundary(rims[0].0);
    }
    b.build().expect("collared graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn torus_cut_along_loop_is_annulus() {
        let g = fixtures::torus_one_vertex();
        let a = CycleWalk::closed(&g, vec![0]).unwrap();
        let cut = cut_along(&g, &a).unwrap();
        assert_eq!(cut.graph.component_count(), 1);
        let s = cut.graph.stats();
        assert_eq!((s.g, s.b, s.chi), (0, 2, 0));
    }

    #[test]
    fn cube_face_cycle_separates() {
        let g = fixtures::cube();
        let f = g.faces()[0].clone();
        let c = CycleWalk::closed(&g, f).unwrap();
        let cut = cut_along(&g, &c).unwrap();
        let parts = cut.graph.split_components();
        assert_eq!(parts.len(), 2);
        for p in parts {
            let s = p.stats();
            assert_eq!((s.g, s.b), (0, 1));
        }
    }

    #[test]
    fn paste_reduces_boundary_count() {
        let g = fixtures::torus_one_vertex();
        let a = CycleWalk::closed(&g, vec![0]).unwrap();
        let annulus = cut_along(&g, &a).unwrap().graph;
        let b0 = annulus.boundary_faces()[0];
        let once = paste_disk(&annulus, b0).unwrap();
        assert_eq!((once.stats().g, once.stats().b), (0, 1));
        let b1 = once.boundary_faces()[0];
        let twice = paste_disk(&once, b1).unwrap();
        assert_eq!((twice.stats().g, twice.stats().b), (0, 0));
        assert!(matches!(paste_disk(&twice, 0), Err(SurfError::NotBoundary(0))));
    }

    #[test]
    fn collars_keep_the_surface() {
        let g = fixtures::pair_of_pants(|_| 2);
        let c = with_collars(&g);
        let (s, t) = (g.stats(), c.stats());
        assert_eq!((s.g, s.b), (t.g, t.b));
        for d in 0..g.dart_count() {
            assert_eq!((g.origin(d), g.head(d)), (c.origin(d), c.head(d)));
        }
        for f in c.boundary_faces() {
            for v in c.face_vertices(f) {
                assert!(v >= g.vertex_count());
            }
        }
    }

    #[test]
    fn cylinder_arc_cut_is_disk() {
        let g = fixtures::cylinder_grid(3, 3, |_| 1);
        // Vertical path up column 0: north darts start after the 12 east edges.
        let arc: Vec<DartId> = (0..3).map(|r| 2 * (12 + 3 * r)).collect();
        let w = CycleWalk::new(&g, arc, false).unwrap();
        let cut = cut_along(&g, &w).unwrap();
        let s = cut.graph.stats();
        assert_eq!(cut.graph.component_count(), 1);
        assert_eq!((s.g, s.b), (0, 1));
    }
}
