//! Mutable rotation-system editing used by fixtures and the corpus generator.

use crate::error::Result;
use crate::graph::{DartId, EmbeddedGraph, VertexId};
use crate::weight::Weight;

/// An editable rotation system. Darts come in twin pairs `(2e, 2e + 1)`.
#[derive(Debug, Clone, Default)]
pub struct RotationBuilder {
    pub rotation: Vec<Vec<DartId>>,
    pub twin: Vec<DartId>,
    pub weight: Vec<Weight>,
    pub boundary: Vec<DartId>,
}

impl RotationBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        RotationBuilder {
            rotation: g.rotations().to_vec(),
            twin: g.twins().to_vec(),
            weight: g.weights().to_vec(),
            boundary: g.boundary_representatives(),
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    /// Allocates an edge `u → v` without placing it in any rotation.
    /// Returns `(forward, backward)` darts.
    pub fn new_edge(&mut self, forward: u64, backward: u64) -> (DartId, DartId) {
        let d = self.twin.len();
        self.twin.push(d + 1);
        self.twin.push(d);
        self.weight.push(Weight::new(forward));
        self.weight.push(Weight::new(backward));
        (d, d + 1)
    }

    /// Appends `d` at the end of the counterclockwise rotation of `v`.
    pub fn push_dart(&mut self, v: VertexId, d: DartId) {
        self.rotation[v].push(d);
    }

    fn origin_of(&self, d: DartId) -> (VertexId, usize) {
        for (v, list) in self.rotation.iter().enumerate() {
            if let Some(i) = list.iter().position(|&x| x == d) {
                return (v, i);
            }
        }
        panic!("dart {d} is not placed");
    }

    /// Inserts `d` immediately counterclockwise after `after`.
    pub fn insert_after(&mut self, after: DartId, d: DartId) {
        let (v, i) = self.origin_of(after);
        self.rotation[v].insert(i + 1, d);
    }

    /// Adds an edge across the face corners that lie counterclockwise after
    /// `after_u` and `after_v`. When both corners belong to one face the face
    /// is split in two.
    pub fn add_edge_in_corners(
        &mut self,
        after_u: DartId,
        after_v: DartId,
        forward: u64,
        backward: u64,
    ) -> DartId {
        let (d, t) = self.new_edge(forward, backward);
        self.insert_after(after_u, d);
        self.insert_after(after_v, t);
        d
    }

    /// Splits the edge of `d` with a new vertex; `d` keeps its origin and now
    /// ends at the new vertex. Returns the new vertex.
    pub fn subdivide(&mut self, d: DartId, forward: u64, backward: u64) -> VertexId {
        let t = self.twin[d];
        let x = self.add_vertex();
        // New edge x → head(d) takes over the far half.
        let (e, et) = self.new_edge(forward, backward);
        // `t` stays at head(d) position but is replaced by `et`.
        let (hv, hi) = self.origin_of(t);
        self.rotation[hv][hi] = et;
        // `t` now leaves x.
        self.rotation[x] = vec![t, e];
        x
    }

    pub fn mark_boundary(&mut self, d: DartId) {
        self.boundary.push(d);
    }

    pub fn build(&self) -> Result<EmbeddedGraph> {
        EmbeddedGraph::from_rotations(
            self.rotation.clone(),
            self.twin.clone(),
            self.weight.clone(),
            &self.boundary,
        )
    }
}
