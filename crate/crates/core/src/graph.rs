//! Rotation-system representation of cellularly embedded graphs.
//!
//! A graph is a set of darts (half-edges). Every dart has an origin vertex, a
//! `twin` (the reversed dart of the same edge) and a `next` dart, its
//! counterclockwise successor around the origin. Faces are the orbits of
//! `next ∘ twin`: starting at a dart `d` into vertex `v`, the walk continues
//! with the dart that follows `twin(d)` counterclockwise around `v`. With this
//! convention the face traced through `d` lies on the right of `d`, so each
//! interior face is traversed clockwise.
//!
//! Boundary cycles are faces explicitly marked as holes. They do not count
//! towards the face count `f`, which gives `χ = n − m + f = 2 − 2g − b`.

use std::collections::HashSet;

use crate::error::{Result, SurfError};
use crate::weight::Weight;

pub type DartId = usize;
pub type VertexId = usize;
pub type FaceId = usize;

/// A single dart as exposed to callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub origin: VertexId,
    pub twin: DartId,
    pub next: DartId,
    pub weight: Weight,
}

/// Counts describing the surface a graph lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceStats {
    pub n: usize,
    pub m: usize,
    pub f: usize,
    pub b: usize,
    pub chi: i64,
    pub g: i64,
}

impl std::fmt::Display for SurfaceStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} m={} f={} chi={} g={} b={}", self.n, self.m, self.f, self.chi, self.g, self.b)
    }
}

/// An orientable combinatorial surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    origin: Vec<VertexId>,
    twin: Vec<DartId>,
    next: Vec<DartId>,
    prev: Vec<DartId>,
    weight: Vec<Weight>,
    rotation: Vec<Vec<DartId>>,
    rot_pos: Vec<usize>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<DartId>>,
    is_boundary: Vec<bool>,
}

impl EmbeddedGraph {
    /// Builds and validates a graph from per-vertex counterclockwise dart
    /// lists, the twin involution, dart weights and one representative dart
    /// per boundary face.
    pub fn from_rotations(
        rotation: Vec<Vec<DartId>>,
        twin: Vec<DartId>,
        weight: Vec<Weight>,
        boundary_darts: &[DartId],
    ) -> Result<Self> {
        let g = Self::assemble(rotation, twin, weight, boundary_darts)?;
        if g.component_count() != 1 {
            return Err(SurfError::Disconnected);
        }
        for (fid, face) in g.faces.iter().enumerate() {
            if g.is_boundary[fid] {
                let mut seen = HashSet::new();
                if !face.iter().all(|&d| seen.insert(g.origin[d])) {
                    return Err(SurfError::MalformedPermutation(format!(
                        "boundary face through dart {} is not a simple cycle",
                        face[0]
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph without the connectivity and boundary-simplicity checks.
    /// Surgery uses this and splits components afterwards.
    pub(crate) fn assemble(
        rotation: Vec<Vec<DartId>>,
        twin: Vec<DartId>,
        weight: Vec<Weight>,
        boundary_darts: &[DartId],
    ) -> Result<Self> {
        let nd = twin.len();
        if weight.len() != nd {
            return Err(SurfError::MalformedPermutation(
                "weight table length differs from dart count".into(),
            ));
        }
        for (d, &t) in twin.iter().enumerate() {
            if t >= nd || t == d || twin[t] != d {
                return Err(SurfError::MalformedPermutation(format!(
                    "twin of dart {d} is not a fixed-point-free involution"
                )));
            }
        }
        let mut origin = vec![usize::MAX; nd];
        let mut rot_pos = vec![0; nd];
        let mut next = vec![0; nd];
        let mut prev = vec![0; nd];
        for (v, list) in rotation.iter().enumerate() {
            if list.is_empty() {
                return Err(SurfError::MalformedPermutation(format!("vertex {v} has no darts")));
            }
            for (i, &d) in list.iter().enumerate() {
                if d >= nd || origin[d] != usize::MAX {
                    return Err(SurfError::MalformedPermutation(format!(
                        "dart {d} listed twice or out of range"
                    )));
                }
                origin[d] = v;
                rot_pos[d] = i;
                next[d] = list[(i + 1) % list.len()];
                prev[d] = list[(i + list.len() - 1) % list.len()];
            }
        }
        if let Some(d) = origin.iter().position(|&o| o == usize::MAX) {
            return Err(SurfError::MalformedPermutation(format!("dart {d} appears in no rotation")));
        }
        let mut face_of = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if face_of[start] != usize::MAX {
                continue;
            }
            let fid = faces.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = fid;
                orbit.push(d);
                d = next[twin[d]];
                if d == start {
                    break;
                }
            }
            faces.push(orbit);
        }
        let mut is_boundary = vec![false; faces.len()];
        for &d in boundary_darts {
            if d >= nd {
                return Err(SurfError::MalformedPermutation(format!("boundary dart {d} out of range")));
            }
            is_boundary[face_of[d]] = true;
        }
        Ok(EmbeddedGraph { origin, twin, next, prev, weight, rotation, rot_pos, face_of, faces, is_boundary })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart { id: d, origin: self.origin[d], twin: self.twin[d], next: self.next[d], weight: self.weight[d] }
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.origin[self.twin[d]]
    }

    #[inline]
    pub fn twin(&self, d: DartId) -> DartId {
        self.twin[d]
    }

    /// Counterclockwise successor of `d` around its origin.
    #[inline]
    pub fn next(&self, d: DartId) -> DartId {
        self.next[d]
    }

    /// Clockwise successor of `d` around its origin.
    #[inline]
    pub fn prev(&self, d: DartId) -> DartId {
        self.prev[d]
    }

    #[inline]
    pub fn weight(&self, d: DartId) -> Weight {
        self.weight[d]
    }

    /// Canonical id of the undirected edge containing `d`.
    #[inline]
    pub fn edge_of(&self, d: DartId) -> usize {
        d.min(self.twin[d])
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<DartId>] {
        &self.rotation
    }

    /// Index of `d` within the rotation of its origin.
    pub fn rotation_index(&self, d: DartId) -> usize {
        self.rot_pos[d]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weight
    }

    pub fn twins(&self) -> &[DartId] {
        &self.twin
    }

    /// All face orbits, boundary faces included.
    pub fn faces(&self) -> &[Vec<DartId>] {
        &self.faces
    }

    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    pub fn is_boundary_face(&self, f: FaceId) -> bool {
        self.is_boundary[f]
    }

    pub fn is_boundary_dart(&self, d: DartId) -> bool {
        self.is_boundary[self.face_of[d]]
    }

    /// Boundary faces in increasing face-id order: `B₀, B₁, …`.
    pub fn boundary_faces(&self) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&f| self.is_boundary[f]).collect()
    }

    pub fn interior_faces(&self) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&f| !self.is_boundary[f]).collect()
    }

    /// One representative dart per boundary face, the smallest in its orbit.
    pub fn boundary_representatives(&self) -> Vec<DartId> {
        self.boundary_faces().into_iter().map(|f| *self.faces[f].iter().min().unwrap()).collect()
    }

    /// Whether the corner counterclockwise after dart `d` at its origin
    /// belongs to a boundary face.
    pub fn corner_after_is_boundary(&self, d: DartId) -> bool {
        self.is_boundary_dart(self.twin[d])
    }

    pub fn stats(&self) -> SurfaceStats {
        let n = self.vertex_count();
        let m = self.edge_count();
        let b = self.is_boundary.iter().filter(|&&x| x).count();
        let f = self.faces.len() - b;
        let chi = n as i64 - m as i64 + f as i64;
        let g = (2 - chi - b as i64) / 2;
        SurfaceStats { n, m, f, b, chi, g }
    }

    pub fn genus(&self) -> i64 {
        self.stats().g
    }

    pub fn boundary_count(&self) -> usize {
        self.is_boundary.iter().filter(|&&x| x).count()
    }

    /// Whether every dart has the same weight as its twin.
    pub fn is_symmetric(&self) -> bool {
        (0..self.dart_count()).all(|d| self.weight[d] == self.weight[self.twin[d]])
    }

    /// Component label for every vertex.
    pub fn vertex_components(&self) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(v) = stack.pop() {
                for &d in &self.rotation[v] {
                    let h = self.head(d);
                    if comp[h] == usize::MAX {
                        comp[h] = count;
                        stack.push(h);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn component_count(&self) -> usize {
        self.vertex_components().0
    }

    /// Splits into connected components, renumbering vertices and darts in
    /// increasing order of their old ids.
    pub fn split_components(&self) -> Vec<EmbeddedGraph> {
        let (count, comp) = self.vertex_components();
        if count == 1 {
            return vec![self.clone()];
        }
        (0..count)
            .map(|c| {
                let verts: Vec<VertexId> = (0..self.vertex_count()).filter(|&v| comp[v] == c).collect();
                let darts: Vec<DartId> =
                    (0..self.dart_count()).filter(|&d| comp[self.origin[d]] == c).collect();
                let mut new_id = vec![usize::MAX; self.dart_count()];
                for (i, &d) in darts.iter().enumerate() {
                    new_id[d] = i;
                }
                let rotation =
                    verts.iter().map(|&v| self.rotation[v].iter().map(|&d| new_id[d]).collect()).collect();
                let twin = darts.iter().map(|&d| new_id[self.twin[d]]).collect();
                let weight = darts.iter().map(|&d| self.weight[d]).collect();
                let bd: Vec<DartId> =
                    darts.iter().filter(|&&d| self.is_boundary_dart(d)).map(|&d| new_id[d]).collect();
                EmbeddedGraph::assemble(rotation, twin, weight, &bd)
                    .expect("component of a valid graph is valid")
            })
            .collect()
    }

    /// Same graph with the boundary marks replaced.
    pub fn with_boundary(&self, boundary_darts: &[DartId]) -> EmbeddedGraph {
        let mut g = self.clone();
        g.is_boundary = vec![false; g.faces.len()];
        for &d in boundary_darts {
            g.is_boundary[g.face_of[d]] = true;
        }
        g
    }

    /// Same graph with every boundary face re-marked as interior.
    pub fn without_boundary(&self) -> EmbeddedGraph {
        self.with_boundary(&[])
    }

    /// Same combinatorics with new weights.
    pub fn with_weights(&self, weight: Vec<Weight>) -> EmbeddedGraph {
        assert_eq!(weight.len(), self.dart_count());
        let mut g = self.clone();
        g.weight = weight;
        g
    }

    /// Vertices visited by boundary face `f`.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].iter().map(|&d| self.origin[d]).collect()
    }
}

/// A walk of darts, either closed or open.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWalk {
    pub darts: Vec<DartId>,
    pub closed: bool,
    pub length: Weight,
}

impl CycleWalk {
    /// Validates contiguity (and closure when `closed`).
    pub fn new(g: &EmbeddedGraph, darts: Vec<DartId>, closed: bool) -> Result<Self> {
        if let Some(&d) = darts.iter().find(|&&d| d >= g.dart_count()) {
            return Err(SurfError::NotEmbeddedWalk(format!("dart {d} out of range")));
        }
        for w in darts.windows(2) {
            if g.head(w[0]) != g.origin(w[1]) {
                return Err(SurfError::NotEmbeddedWalk(format!(
                    "dart {} does not continue dart {}",
                    w[1], w[0]
                )));
            }
        }
        if closed {
            match (darts.first(), darts.last()) {
                (Some(&a), Some(&z)) if g.head(z) == g.origin(a) => {}
                _ => return Err(SurfError::NotCycle),
            }
        }
        let length = darts.iter().map(|&d| g.weight(d)).sum();
        Ok(CycleWalk { darts, closed, length })
    }

    pub fn closed(g: &EmbeddedGraph, darts: Vec<DartId>) -> Result<Self> {
        Self::new(g, darts, true)
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertex sequence: the origins of all darts, plus the final head for
    /// open walks.
    pub fn vertices(&self, g: &EmbeddedGraph) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.darts.iter().map(|&d| g.origin(d)).collect();
        if !self.closed {
            if let Some(&z) = self.darts.last() {
                vs.push(g.head(z));
            }
        }
        vs
    }

    /// No repeated vertex (other than closure) and no repeated edge.
    pub fn is_simple(&self, g: &EmbeddedGraph) -> bool {
        if self.darts.is_empty() {
            return false;
        }
        let mut seen = HashSet::new();
        if !self.vertices(g).into_iter().all(|v| seen.insert(v)) {
            return false;
        }
        let mut edges = HashSet::new();
        self.darts.iter().all(|&d| edges.insert(g.edge_of(d)))
    }

    pub fn reversed(&self, g: &EmbeddedGraph) -> CycleWalk {
        let darts: Vec<DartId> = self.darts.iter().rev().map(|&d| g.twin(d)).collect();
        let length = darts.iter().map(|&d| g.weight(d)).sum();
        CycleWalk { darts, closed: self.closed, length }
    }

    /// Rotation of a closed walk so that it starts with its smallest dart id.
    pub fn canonical_rotation(&self) -> CycleWalk {
        let Some(pos) = (0..self.darts.len()).min_by_key(|&i| self.darts[i]) else {
            return self.clone();
        };
        let mut darts = self.darts[pos..].to_vec();
        darts.extend_from_slice(&self.darts[..pos]);
        CycleWalk { darts, closed: true, length: self.length }
    }

    /// Splits a closed walk at repeated vertices until every piece is a
    /// closed walk without repeated vertices. Back-and-forth pieces `d·twin(d)`
    /// are dropped since they bound nothing.
    pub fn simple_pieces(&self, g: &EmbeddedGraph) -> Vec<CycleWalk> {
        assert!(self.closed, "only closed walks decompose into cycles");
        let mut out = Vec::new();
        let mut stack: Vec<DartId> = Vec::new();
        let mut at: Vec<Option<usize>> = vec![None; g.vertex_count()];
        for &d in &self.darts {
            let v = g.origin(d);
            if let Some(i) = at[v] {
                let piece: Vec<DartId> = stack.drain(i..).collect();
                for &p in &piece {
                    at[g.origin(p)] = None;
                }
                Self::push_piece(g, piece, &mut out);
            }
            at[v] = Some(stack.len());
            stack.push(d);
        }
        if !stack.is_empty() {
            Self::push_piece(g, stack, &mut out);
        }
        out
    }

    fn push_piece(g: &EmbeddedGraph, piece: Vec<DartId>, out: &mut Vec<CycleWalk>) {
        if piece.len() == 2 && g.twin(piece[0]) == piece[1] {
            return;
        }
        out.push(CycleWalk::closed(g, piece).expect("piece of a closed walk is closed"));
    }

    pub fn dart_list(&self) -> String {
        self.darts.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
    }
}
