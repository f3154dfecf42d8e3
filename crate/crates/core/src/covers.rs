//! Covering spaces built as voltage graphs over a simple cycle or arc `λ`.
//!
//! The double cover has two copies `(v, z)` of every vertex and sends dart
//! `(d, z)` to level `z ⊕ ε(d)`. The restricted cyclic cover chains five
//! copies of the surface cut along `λ`: vertices off `λ` get levels 1..5,
//! vertices on `λ` levels 1..6, and dart `(d, i)` ends at level `i + c(d)`.
//! Level `i` of a vertex on `λ` is the seam between copies `i − 1` (on the
//! left of `λ`) and `i` (on its right).

use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, DartId, EmbeddedGraph, FaceId, VertexId};
use crate::sides::PathSides;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    Double,
    Restricted,
}

/// Number of copies of the cut surface in the restricted cover.
pub const RESTRICTED_COPIES: i64 = 5;

#[derive(Debug, Clone)]
pub struct CoverGraph {
    pub kind: CoverKind,
    pub graph: EmbeddedGraph,
    pub base: EmbeddedGraph,
    pub lambda: CycleWalk,
    /// Base vertex and level of every cover vertex.
    pub pi_vertex: Vec<(VertexId, i64)>,
    /// Base dart of every cover dart.
    pub pi_dart: Vec<DartId>,
    vertex_at: Vec<Vec<Option<VertexId>>>,
    dart_at: Vec<Vec<Option<DartId>>>,
    min_level: i64,
    /// For the restricted cover: the boundary faces along the lifts of `λ`
    /// at level 1 (bordering copy 1) and level 6 (bordering copy 5).
    pub lambda_minus: Option<FaceId>,
    pub lambda_plus: Option<FaceId>,
}

impl CoverGraph {
    pub fn vertex(&self, v: VertexId, level: i64) -> Option<VertexId> {
        let i = usize::try_from(level - self.min_level).ok()?;
        self.vertex_at[v].get(i).copied().flatten()
    }

    /// The lift of base dart `d` starting at the given level.
    pub fn dart(&self, d: DartId, level: i64) -> Option<DartId> {
        let i = usize::try_from(level - self.min_level).ok()?;
        self.dart_at[d].get(i).copied().flatten()
    }

    pub fn level(&self, v: VertexId) -> i64 {
        self.pi_vertex[v].1
    }

    /// The unique lift of the base walk `w` starting at cover vertex `start`.
    pub fn lift_walk(&self, w: &[DartId], start: VertexId) -> Result<CycleWalk> {
        let Some(&first) = w.first() else {
            return Err(SurfError::NotEmbeddedWalk("empty walk".into()));
        };
        if self.pi_vertex[start].0 != self.base.origin(first) {
            return Err(SurfError::BasepointMismatch);
        }
        let mut level = self.level(start);
        let mut out = Vec::with_capacity(w.len());
        for (step, &d) in w.iter().enumerate() {
            let x = self.dart(d, level).ok_or(SurfError::OutOfRange(step))?;
            out.push(x);
            level = self.level(self.graph.head(x));
        }
        let closed = self.graph.head(*out.last().unwrap()) == start;
        CycleWalk::new(&self.graph, out, closed)
    }

    /// Projects a cover walk to the base; the result is closed whenever its
    /// ends meet in the base.
    pub fn project_walk(&self, w: &[DartId]) -> CycleWalk {
        let darts: Vec<DartId> = w.iter().map(|&x| self.pi_dart[x]).collect();
        let closed = match (darts.first(), darts.last()) {
            (Some(&a), Some(&z)) => self.base.head(z) == self.base.origin(a),
            _ => false,
        };
        CycleWalk::new(&self.base, darts, closed).expect("projection of a walk is a walk")
    }
}

/// Assembles a voltage graph. `lift(d, level)` gives the head level of the
/// lifted dart, or `None` when it does not exist.
fn assemble_cover(
    kind: CoverKind,
    base: &EmbeddedGraph,
    lambda: &CycleWalk,
    levels: &dyn Fn(VertexId) -> std::ops::RangeInclusive<i64>,
    lift: &dyn Fn(DartId, i64) -> Option<i64>,
    min_level: i64,
) -> Result<CoverGraph> {
    let n = base.vertex_count();
    let nd = base.dart_count();
    let mut vertex_at: Vec<Vec<Option<VertexId>>> = vec![Vec::new(); n];
    let mut pi_vertex = Vec::new();
    let max_level = (0..n).map(|v| *levels(v).end()).max().unwrap_or(min_level);
    for level in min_level..=max_level {
        for v in 0..n {
            let slot = (level - min_level) as usize;
            if vertex_at[v].len() <= slot {
                vertex_at[v].resize(slot + 1, None);
            }
            if levels(v).contains(&level) {
                vertex_at[v][slot] = Some(pi_vertex.len());
                pi_vertex.push((v, level));
            }
        }
    }
    let mut dart_at: Vec<Vec<Option<DartId>>> = vec![vec![None; vertex_at[0].len()]; nd];
    let mut pi_dart = Vec::new();
    let mut rotation = vec![Vec::new(); pi_vertex.len()];
    for (cv, &(v, level)) in pi_vertex.iter().enumerate() {
        for &d in base.rotation(v) {
            if lift(d, level).is_some() {
                let id = pi_dart.len();
                dart_at[d][(level - min_level) as usize] = Some(id);
                pi_dart.push(d);
                rotation[cv].push(id);
            }
        }
    }
    let mut twin = vec![0; pi_dart.len()];
    let mut weight = vec![crate::weight::Weight::ZERO; pi_dart.len()];
    for (cv, &(_, level)) in pi_vertex.iter().enumerate() {
        for &x in &rotation[cv] {
            let d = pi_dart[x];
            let h = lift(d, level).unwrap();
            let t = dart_at[base.twin(d)][(h - min_level) as usize]
                .expect("voltage construction lifts twins together");
            twin[x] = t;
            weight[x] = base.weight(d);
        }
    }
    let plain = EmbeddedGraph::assemble(rotation, twin, weight, &[])?;

    // A face is interior iff it is a full lift of an interior base face.
    let mut boundary = Vec::new();
    for face in plain.faces() {
        let first = pi_dart[face[0]];
        let bf = base.face_of(first);
        let base_face = &base.faces()[bf];
        let start = base_face.iter().position(|&d| d == first).unwrap();
        let matches = face.len() == base_face.len()
            && face.iter().enumerate().all(|(k, &x)| pi_dart[x] == base_face[(start + k) % base_face.len()]);
        if !matches || base.is_boundary_face(bf) {
            boundary.push(face[0]);
        }
    }
    let graph = plain.with_boundary(&boundary);
    if graph.component_count() != 1 {
        return Err(SurfError::Separating);
    }
    Ok(CoverGraph {
        kind,
        graph,
        base: base.clone(),
        lambda: lambda.clone(),
        pi_vertex,
        pi_dart,
        vertex_at,
        dart_at,
        min_level,
        lambda_minus: None,
        lambda_plus: None,
    })
}

/// The cyclic double cover over a simple cycle or arc.
pub fn cyclic_double_cover(g: &EmbeddedGraph, lambda: &CycleWalk) -> Result<CoverGraph> {
    let sides = PathSides::new(g, lambda)?;
    cyclic_double_cover_with(g, &sides)
}

pub fn cyclic_double_cover_with(g: &EmbeddedGraph, sides: &PathSides) -> Result<CoverGraph> {
    let lift = |d: DartId, z: i64| Some(z ^ sides.parity(g, d) as i64);
    assemble_cover(CoverKind::Double, g, &sides.walk, &|_| 0..=1, &lift, 0)
}

/// The restricted cyclic cover over a simple closed cycle.
pub fn restricted_cyclic_cover(g: &EmbeddedGraph, lambda: &CycleWalk) -> Result<CoverGraph> {
    if !lambda.closed {
        return Err(SurfError::NotCycle);
    }
    let sides = PathSides::new(g, lambda)?;
    let top = RESTRICTED_COPIES;
    let levels = |v: VertexId| if sides.on_path(v) { 1..=top + 1 } else { 1..=top };
    let lift = |d: DartId, i: i64| {
        let o = g.origin(d);
        if !levels(o).contains(&i) {
            return None;
        }
        if !sides.is_along(d) {
            let sheet = if sides.on_path(o) && sides.in_left(d) { i - 1 } else { i };
            if !(1..=top).contains(&sheet) {
                return None;
            }
        }
        Some(i + sides.count(g, d))
    };
    let mut cover = assemble_cover(CoverKind::Restricted, g, lambda, &levels, &lift, 1)?;
    let d0 = lambda.darts[0];
    let low = cover.dart(g.twin(d0), 1).expect("seam darts exist");
    let high = cover.dart(d0, top + 1).expect("seam darts exist");
    cover.lambda_minus = Some(cover.graph.face_of(low));
    cover.lambda_plus = Some(cover.graph.face_of(high));
    Ok(cover)
}
