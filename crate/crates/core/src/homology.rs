//! Dual graphs, greedy tree-cotree decompositions, homology bases, boundary
//! arcs and the crossing signature that decides Z₂ homology classes.

use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, DartId, EmbeddedGraph, VertexId};
use crate::sides::PathSides;
use crate::sssp::{dijkstra, SearchLimits, ShortestPaths};
use crate::surgery::paste_all;
use crate::weight::Weight;

/// The dual graph: one vertex per face, dual dart `d*` (same id as `d`) from
/// the face right of `d` to the face left of it.
pub fn dual_graph(g: &EmbeddedGraph) -> Result<EmbeddedGraph> {
    if g.boundary_count() > 0 {
        return Err(SurfError::HasBoundary);
    }
    let rotation = g.faces().to_vec();
    EmbeddedGraph::from_rotations(rotation, g.twins().to_vec(), g.weights().to_vec(), &[])
}

/// Partition of the edges into a shortest-path tree `T`, a cotree `C` and
/// leftover edges `L`. Flags are per dart and agree on twins.
#[derive(Debug, Clone)]
pub struct TreeCotree {
    pub root: VertexId,
    pub paths: ShortestPaths,
    pub tree: Vec<bool>,
    pub cotree: Vec<bool>,
    /// One dart per leftover edge, the smaller id of the pair.
    pub leftover: Vec<DartId>,
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let nx = self.0[y];
            self.0[y] = r;
            y = nx;
        }
        r
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Weights with infinity replaced by a value larger than any finite path,
/// so every vertex of a connected graph is reachable.
pub(crate) fn capped_weights(g: &EmbeddedGraph) -> EmbeddedGraph {
    let total: u64 = g.weights().iter().filter_map(|w| w.finite()).sum();
    let big = Weight::new(total.saturating_add(1));
    let w = g.weights().iter().map(|&w| if w.is_finite() { w } else { big }).collect();
    g.with_weights(w)
}

/// Shortest-path tree from `root`; falls back to capped weights when some
/// vertex cannot be reached by finite-weight paths.
pub(crate) fn spanning_tree_paths(g: &EmbeddedGraph, root: VertexId) -> ShortestPaths {
    let sp = dijkstra(g, &[root], SearchLimits::default());
    if sp.dist.iter().all(|d| d.is_finite()) {
        return sp;
    }
    dijkstra(&capped_weights(g), &[root], SearchLimits::default())
}

pub(crate) fn tree_cotree_from_paths(g: &EmbeddedGraph, root: VertexId, paths: ShortestPaths) -> TreeCotree {
    let nd = g.dart_count();
    let mut tree = vec![false; nd];
    for p in paths.parent.iter().flatten() {
        tree[*p] = true;
        tree[g.twin(*p)] = true;
    }
    let mut candidates: Vec<(Weight, DartId)> = (0..nd)
        .filter(|&d| d < g.twin(d) && !tree[d])
        .map(|d| {
            let loop_len = paths.dist[g.origin(d)] + g.weight(d) + paths.dist[g.head(d)];
            (loop_len, d)
        })
        .collect();
    // Heaviest fundamental loops go into the cotree first.
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut uf = UnionFind::new(g.faces().len());
    let mut cotree = vec![false; nd];
    let mut leftover = Vec::new();
    for (_, d) in candidates {
        if uf.union(g.face_of(d), g.face_of(g.twin(d))) {
            cotree[d] = true;
            cotree[g.twin(d)] = true;
        } else {
            leftover.push(d);
        }
    }
    leftover.sort_unstable();
    TreeCotree { root, paths, tree, cotree, leftover }
}

/// Greedy tree-cotree decomposition of a surface without boundary.
pub fn greedy_tree_cotree(g: &EmbeddedGraph, root: VertexId) -> Result<TreeCotree> {
    if g.boundary_count() > 0 {
        return Err(SurfError::HasBoundary);
    }
    let paths = dijkstra(g, &[root], SearchLimits::default());
    if let Some(v) = paths.dist.iter().position(|d| !d.is_finite()) {
        return Err(SurfError::Unreachable(v));
    }
    Ok(tree_cotree_from_paths(g, root, paths))
}

/// The `2g` fundamental cycles of the leftover edges.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    pub root: VertexId,
    pub cycles: Vec<CycleWalk>,
}

/// Tree path from the root to `v`.
fn tree_path(g: &EmbeddedGraph, paths: &ShortestPaths, v: VertexId) -> Vec<DartId> {
    paths.path_to(g, v).expect("tree spans the graph")
}

/// The simple cycle `path(a, u) · d · reverse path(a, v)` where `a` is the
/// last common vertex of the two tree paths.
pub(crate) fn fundamental_cycle(g: &EmbeddedGraph, paths: &ShortestPaths, d: DartId) -> CycleWalk {
    let pu = tree_path(g, paths, g.origin(d));
    let pv = tree_path(g, paths, g.head(d));
    let common = pu.iter().zip(&pv).take_while(|(a, b)| a == b).count();
    let mut darts: Vec<DartId> = pu[common..].to_vec();
    darts.push(d);
    darts.extend(pv[common..].iter().rev().map(|&x| g.twin(x)));
    CycleWalk::closed(g, darts).expect("fundamental cycle is closed")
}

/// Partial homology basis of the surface obtained by pasting disks into all
/// boundaries, rooted at vertex 0.
pub fn partial_homology_basis(g: &EmbeddedGraph) -> Result<HomologyBasis> {
    partial_homology_basis_at(g, 0)
}

pub fn partial_homology_basis_at(g: &EmbeddedGraph, root: VertexId) -> Result<HomologyBasis> {
    let closed = paste_all(g);
    if closed.genus() == 0 {
        return Err(SurfError::GenusZero);
    }
    let tc = tree_cotree_from_paths(&closed, root, spanning_tree_paths(&closed, root));
    let cycles = tc.leftover.iter().map(|&d| fundamental_cycle(g, &tc.paths, d)).collect();
    Ok(HomologyBasis { root, cycles })
}

/// Arcs from `B₀` to each other boundary `Bᵢ`.
#[derive(Debug, Clone)]
pub struct BoundaryArcs {
    pub source: VertexId,
    pub arcs: Vec<CycleWalk>,
}

/// The smallest vertex on `B₀`.
pub fn default_arc_source(g: &EmbeddedGraph) -> Option<VertexId> {
    let f0 = *g.boundary_faces().first()?;
    g.face_vertices(f0).into_iter().min()
}

pub fn boundary_arcs(g: &EmbeddedGraph, s: VertexId) -> Result<BoundaryArcs> {
    let bfaces = g.boundary_faces();
    if bfaces.len() < 2 {
        return Err(SurfError::TooFewBoundaries);
    }
    let mut on_face = vec![vec![false; g.vertex_count()]; bfaces.len()];
    for (i, &f) in bfaces.iter().enumerate() {
        for v in g.face_vertices(f) {
            on_face[i][v] = true;
        }
    }
    if !on_face[0][s] {
        return Err(SurfError::NotEmbeddedWalk(format!("vertex {s} is not on B0")));
    }
    let sp = dijkstra(g, &[s], SearchLimits::default());
    let sp = if (0..g.vertex_count()).all(|v| sp.reached(v)) {
        sp
    } else {
        dijkstra(&capped_weights(g), &[s], SearchLimits::default())
    };
    let mut arcs = Vec::new();
    for (i, marks) in on_face.iter().enumerate().skip(1) {
        let t = (0..g.vertex_count())
            .filter(|&v| marks[v])
            .min_by_key(|&v| (sp.dist[v], sp.hops[v], v))
            .expect("boundary face has vertices");
        if !sp.reached(t) {
            return Err(SurfError::Unreachable(t));
        }
        let path = sp.path_to(g, t).unwrap();
        // Vertices along the path: origin of each dart, then t.
        let verts: Vec<VertexId> = path.iter().map(|&d| g.origin(d)).chain(std::iter::once(t)).collect();
        let first_hit = verts.iter().position(|&v| marks[v]).unwrap();
        let last_b0 = (0..=first_hit).rev().find(|&k| on_face[0][verts[k]]).unwrap();
        if last_b0 == first_hit {
            return Err(SurfError::NotEmbeddedWalk(format!(
                "boundaries B0 and B{i} share vertex {}",
                verts[first_hit]
            )));
        }
        let darts = path[last_b0..first_hit].to_vec();
        arcs.push(CycleWalk::new(g, darts, false)?);
    }
    Ok(BoundaryArcs { source: s, arcs })
}

/// Decides Z₂ homology classes of closed walks by their crossing parities
/// with the basis cycles of the pasted surface and the boundary arcs.
#[derive(Debug, Clone)]
pub struct ClassSignature {
    pub basis: Vec<PathSides>,
    pub arcs: Vec<PathSides>,
}

impl ClassSignature {
    pub fn new(g: &EmbeddedGraph) -> Result<Self> {
        let basis = match partial_homology_basis(g) {
            Ok(b) => b.cycles,
            Err(SurfError::GenusZero) => Vec::new(),
            Err(e) => return Err(e),
        };
        let arcs = if g.boundary_count() >= 2 {
            let s = default_arc_source(g).unwrap();
            boundary_arcs(g, s)?.arcs
        } else {
            Vec::new()
        };
        Ok(ClassSignature {
            basis: basis.iter().map(|c| PathSides::new(g, c)).collect::<Result<_>>()?,
            arcs: arcs.iter().map(|c| PathSides::new(g, c)).collect::<Result<_>>()?,
        })
    }

    /// Parities against basis cycles first, then arcs.
    pub fn signature(&self, g: &EmbeddedGraph, walk: &[DartId]) -> Vec<bool> {
        self.basis.iter().chain(&self.arcs).map(|s| s.walk_parity(g, walk)).collect()
    }

    /// Parities against the basis cycles only; zero iff the walk separates
    /// the surface with all boundaries pasted.
    pub fn closed_signature(&self, g: &EmbeddedGraph, walk: &[DartId]) -> Vec<bool> {
        self.basis.iter().map(|s| s.walk_parity(g, walk)).collect()
    }

    pub fn is_null_homologous(&self, g: &EmbeddedGraph, walk: &[DartId]) -> bool {
        self.signature(g, walk).iter().all(|&b| !b)
    }

    pub fn is_nonseparating(&self, g: &EmbeddedGraph, walk: &[DartId]) -> bool {
        self.closed_signature(g, walk).iter().any(|&b| b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cube_dual_is_octahedron() {
        let d = dual_graph(&fixtures::cube()).unwrap();
        let s = d.stats();
        assert_eq!((s.n, s.m, s.f), (6, 12, 8));
    }

    #[test]
    fn torus_leftover_is_both_loops() {
        let g = fixtures::torus_one_vertex();
        let tc = greedy_tree_cotree(&g, 0).unwrap();
        assert_eq!(tc.leftover, vec![0, 2]);
        let basis = partial_homology_basis(&g).unwrap();
        assert_eq!(basis.cycles.len(), 2);
        assert!(partial_homology_basis(&fixtures::cube()).is_err());
    }

    #[test]
    fn octagon_has_four_basis_cycles() {
        assert_eq!(partial_homology_basis(&fixtures::octagon_genus2()).unwrap().cycles.len(), 4);
    }

    #[test]
    fn cylinder_arc_has_three_edges() {
        let g = fixtures::cylinder_grid(3, 3, |_| 1);
        let s = default_arc_source(&g).unwrap();
        let arcs = boundary_arcs(&g, s).unwrap();
        assert_eq!(arcs.arcs.len(), 1);
        assert_eq!(arcs.arcs[0].len(), 3);
    }
}
