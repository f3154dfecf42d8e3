//! Shortest non-trivial cycles in directed (asymmetrically weighted) graphs.
//!
//! Everything reduces to one search: the shortest closed walk that crosses
//! a simple cycle or arc `λ` an odd number of times is the projection of a
//! shortest path from `(s, 0)` to `(s, 1)` in the double cover over `λ`,
//! minimised over the vertices `s` of `λ`. Non-contractible cycles that are
//! null-homologous are found in restricted cyclic covers, where they become
//! non-null-homologous.

use crate::covers::{cyclic_double_cover_with, restricted_cyclic_cover};
use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, EmbeddedGraph};
use crate::homology::{boundary_arcs, default_arc_source, partial_homology_basis};
use crate::oracle::CycleClass;
use crate::sides::PathSides;
use crate::sssp::{dijkstra, SearchLimits};
use crate::surgery::{bounds_disk, paste_all, paste_all_but_first, with_collars};
use crate::weight::Weight;

/// Deterministic order on candidates: length, then canonical dart sequence.
fn key(c: &CycleWalk) -> (Weight, Vec<usize>) {
    (c.length, c.canonical_rotation().darts)
}

/// Running minimum over candidate cycles.
#[derive(Debug, Default)]
struct Best(Option<CycleWalk>);

impl Best {
    fn bound(&self, outer: Weight) -> Weight {
        self.0.as_ref().map_or(outer, |c| c.length.min(outer))
    }

    fn offer(&mut self, c: CycleWalk) {
        let c = c.canonical_rotation();
        match &self.0 {
            Some(b) if key(b) <= key(&c) => {}
            _ => self.0 = Some(c),
        }
    }

    fn merge(&mut self, other: Option<CycleWalk>) {
        if let Some(c) = other {
            self.offer(c);
        }
    }
}

/// Shortest closed walk with odd crossing parity against `sides`, no longer
/// than `bound`.
fn odd_crossing_walk(g: &EmbeddedGraph, sides: &PathSides, bound: Weight) -> Option<CycleWalk> {
    let cover = cyclic_double_cover_with(g, sides).ok()?;
    let mut best: Option<(Weight, Vec<usize>)> = None;
    let mut verts = sides.walk.vertices(g);
    verts.sort_unstable();
    verts.dedup();
    for s in verts {
        let limit = best.as_ref().map_or(bound, |b| b.0.min(bound));
        let from = cover.vertex(s, 0).unwrap();
        let to = cover.vertex(s, 1).unwrap();
        let sp = dijkstra(
            &cover.graph,
            &[from],
            SearchLimits { target: Some(to), bound: Some(limit), allowed: None },
        );
        if !sp.reached(to) || sp.dist[to] > limit {
            continue;
        }
        let path = sp.path_to(&cover.graph, to).unwrap();
        let projected = cover.project_walk(&path);
        let cand = (sp.dist[to], projected.canonical_rotation().darts);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.map(|(_, darts)| CycleWalk::closed(g, darts).expect("projection closes"))
}

/// The shortest closed walk crossing the simple cycle or arc `λ` an odd
/// number of times.
pub fn shortest_odd_crossing_cycle(g: &EmbeddedGraph, lambda: &CycleWalk) -> Result<CycleWalk> {
    let sides = PathSides::new(g, lambda)?;
    odd_crossing_walk(g, &sides, Weight::INF).ok_or(SurfError::NoSuchCycle)
}

/// The simple piece of an odd-crossing walk that itself crosses oddly.
fn odd_piece(g: &EmbeddedGraph, sides: &PathSides, walk: &CycleWalk) -> CycleWalk {
    walk.simple_pieces(g)
        .into_iter()
        .filter(|p| sides.walk_parity(g, &p.darts))
        .min_by_key(key)
        .expect("parity is additive over pieces")
}

/// Minimum over `λ` of the odd piece of the shortest odd-crossing walk.
fn search_family(g: &EmbeddedGraph, family: &[PathSides], best: &mut Best, outer: Weight) {
    for sides in family {
        if let Some(w) = odd_crossing_walk(g, sides, best.bound(outer)) {
            best.offer(odd_piece(g, sides, &w));
        }
    }
}

fn basis_sides(g: &EmbeddedGraph) -> Result<Vec<PathSides>> {
    partial_homology_basis(g)?.cycles.iter().map(|c| PathSides::new(g, c)).collect()
}

fn boundaries_touch(g: &EmbeddedGraph) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    for f in g.boundary_faces() {
        for v in g.face_vertices(f) {
            if std::mem::replace(&mut seen[v], true) {
                return true;
            }
        }
    }
    false
}

fn non_separating_bounded(g: &EmbeddedGraph, outer: Weight) -> Result<Option<CycleWalk>> {
    let closed = paste_all(g);
    if closed.genus() == 0 {
        return Err(SurfError::GenusZero);
    }
    let family = basis_sides(&closed)?;
    let mut best = Best::default();
    search_family(&closed, &family, &mut best, outer);
    Ok(best.0.map(|c| CycleWalk::closed(g, c.darts).unwrap()))
}

/// Shortest non-separating cycle; boundaries are pasted shut first since
/// that does not change which cycles separate.
pub fn shortest_non_separating_cycle(g: &EmbeddedGraph) -> Result<CycleWalk> {
    non_separating_bounded(g, Weight::INF)?.ok_or(SurfError::NoSuchCycle)
}

fn non_null_homologous_bounded(g: &EmbeddedGraph, outer: Weight) -> Result<Option<CycleWalk>> {
    let s = g.stats();
    if s.g == 0 && s.b < 2 {
        return Err(SurfError::NoSuchCycle);
    }
    // Collars keep boundaries apart so the arcs are proper.
    let work = if boundaries_touch(g) { with_collars(g) } else { g.clone() };
    let mut best = Best::default();
    if s.g > 0 {
        let closed = paste_all(&work);
        let family = basis_sides(&closed)?;
        search_family(&closed, &family, &mut best, outer);
    }
    if s.b >= 2 {
        let src = default_arc_source(&work).unwrap();
        let family = boundary_arcs(&work, src)?
            .arcs
            .iter()
            .map(|a| PathSides::new(&work, a))
            .collect::<Result<Vec<_>>>()?;
        search_family(&work, &family, &mut best, outer);
    }
    Ok(best.0.map(|c| CycleWalk::closed(g, c.darts).unwrap()))
}

/// Shortest cycle that is not the boundary of a union of interior faces.
pub fn shortest_non_null_homologous_cycle(g: &EmbeddedGraph) -> Result<CycleWalk> {
    non_null_homologous_bounded(g, Weight::INF)?.ok_or(SurfError::NoSuchCycle)
}

/// Shortest non-contractible simple piece of a non-contractible walk.
fn non_contractible_piece(g: &EmbeddedGraph, walk: &CycleWalk) -> Option<CycleWalk> {
    walk.simple_pieces(g)
        .into_iter()
        .filter(|p| !bounds_disk(g, p).expect("pieces are simple"))
        .min_by_key(key)
}

/// One boundary, positive genus: either the answer is non-null-homologous,
/// or it lifts to a non-null-homologous cycle in the restricted cover over
/// some basis cycle.
fn one_boundary(g: &EmbeddedGraph, best: &mut Best, outer: Weight) -> Result<()> {
    debug_assert_eq!(g.boundary_count(), 1);
    if g.genus() == 0 {
        return Ok(());
    }
    best.merge(non_null_homologous_bounded(g, best.bound(outer))?);
    let collared = with_collars(g);
    for lambda in partial_homology_basis(g)?.cycles {
        let cover = restricted_cyclic_cover(&collared, &lambda)?;
        let found = match non_null_homologous_bounded(&cover.graph, best.bound(outer)) {
            Ok(c) => c,
            Err(SurfError::NoSuchCycle) => None,
            Err(e) => return Err(e),
        };
        if let Some(c) = found {
            let projected = cover.project_walk(&c.darts);
            let walk = CycleWalk::closed(g, projected.darts).expect("finite walks avoid collars");
            best.merge(non_contractible_piece(g, &walk));
        }
    }
    Ok(())
}

fn non_contractible_into(g: &EmbeddedGraph, best: &mut Best, outer: Weight, depth: u32) -> Result<()> {
    let s = g.stats();
    if s.g == 0 && s.b <= 1 {
        return Ok(());
    }
    if s.g == 0 {
        best.merge(non_null_homologous_bounded(g, best.bound(outer))?);
        return Ok(());
    }
    match s.b {
        1 => one_boundary(g, best, outer),
        0 => {
            assert_eq!(depth, 0, "the cover over a closed surface has two boundaries");
            best.merge(non_null_homologous_bounded(g, best.bound(outer))?);
            let lambda = partial_homology_basis(g)?.cycles.remove(0);
            let cover = restricted_cyclic_cover(g, &lambda)?;
            let mut inner = Best::default();
            non_contractible_into(&cover.graph, &mut inner, best.bound(outer), depth + 1)?;
            if let Some(c) = inner.0 {
                let walk = cover.project_walk(&c.darts);
                best.merge(non_contractible_piece(g, &walk));
            }
            Ok(())
        }
        _ => {
            best.merge(non_null_homologous_bounded(g, best.bound(outer))?);
            let pasted = paste_all_but_first(g);
            let mut inner = Best::default();
            one_boundary(&pasted, &mut inner, best.bound(outer))?;
            if let Some(c) = inner.0 {
                best.offer(CycleWalk::closed(g, c.darts).unwrap());
            }
            Ok(())
        }
    }
}

/// Shortest cycle that does not bound a disk.
pub fn shortest_non_contractible_cycle(g: &EmbeddedGraph) -> Result<CycleWalk> {
    let mut best = Best::default();
    non_contractible_into(g, &mut best, Weight::INF, 0)?;
    best.0.ok_or(SurfError::NoSuchCycle)
}

/// Dispatches on the requested class.
pub fn shortest_directed(g: &EmbeddedGraph, class: CycleClass) -> Result<CycleWalk> {
    let r = match class {
        CycleClass::NonSeparating => shortest_non_separating_cycle(g),
        CycleClass::NonNullHomologous => shortest_non_null_homologous_cycle(g),
        CycleClass::NonContractible => shortest_non_contractible_cycle(g),
    };
    match r {
        Err(SurfError::GenusZero) => Err(SurfError::NoSuchCycle),
        other => other,
    }
}
