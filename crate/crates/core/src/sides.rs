//! Left and right sides of a simple cycle or arc, and the crossing
//! functionals built on them.
//!
//! Walking along a dart, its left side is the corner counterclockwise after
//! it at its origin. At an inner vertex of a path the left interval is the
//! set of darts strictly counterclockwise between the outgoing path dart and
//! the reversed incoming one. At an arc endpoint the boundary corner takes
//! the place of the missing path dart.

use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, DartId, EmbeddedGraph};
use crate::surgery::any_boundary_corner;

/// How a dart meets a simple path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    EntersLeft,
    EntersRight,
    LeavesLeft,
    LeavesRight,
    /// The dart or its reversal lies on the path.
    Along,
    /// Neither endpoint is on the path.
    Unrelated,
    /// Both endpoints are on the path but the edge is not.
    Chord {
        leaves_left: bool,
        enters_left: bool,
    },
}

/// Precomputed side information for one simple cycle or arc.
#[derive(Debug, Clone)]
pub struct PathSides {
    pub walk: CycleWalk,
    on_path: Vec<bool>,
    along: Vec<bool>,
    in_left: Vec<bool>,
}

impl PathSides {
    pub fn new(g: &EmbeddedGraph, walk: &CycleWalk) -> Result<Self> {
        if !walk.is_simple(g) {
            return Err(SurfError::NotSimple);
        }
        let nd = g.dart_count();
        let mut on_path = vec![false; g.vertex_count()];
        let mut along = vec![false; nd];
        let mut in_left = vec![false; nd];
        for &d in &walk.darts {
            along[d] = true;
            along[g.twin(d)] = true;
        }
        let k = walk.darts.len();
        let verts = walk.vertices(g);
        for (i, &v) in verts.iter().enumerate() {
            on_path[v] = true;
            let rot = g.rotation(v);
            let deg = rot.len();
            let pos = |d: DartId| 2 * g.rotation_index(d);
            let corner = |v| {
                any_boundary_corner(g, v).map(|a| 2 * g.rotation_index(a) + 1).ok_or_else(|| {
                    SurfError::NotEmbeddedWalk(format!("arc endpoint {v} is not on a boundary"))
                })
            };
            let forward = if walk.closed || i < k { pos(walk.darts[i % k]) } else { corner(v)? };
            let backward = if walk.closed {
                pos(g.twin(walk.darts[(i + k - 1) % k]))
            } else if i > 0 {
                pos(g.twin(walk.darts[i - 1]))
            } else {
                corner(v)?
            };
            let span = (backward + 2 * deg - forward) % (2 * deg);
            for &d in rot {
                if along[d] {
                    continue;
                }
                let off = (pos(d) + 2 * deg - forward) % (2 * deg);
                in_left[d] = off > 0 && off < span;
            }
        }
        Ok(PathSides { walk: walk.clone(), on_path, along, in_left })
    }

    pub fn on_path(&self, v: usize) -> bool {
        self.on_path[v]
    }

    pub fn is_along(&self, d: DartId) -> bool {
        self.along[d]
    }

    /// For a dart leaving a path vertex and not on the path: whether it
    /// leaves into the left interval.
    pub fn in_left(&self, d: DartId) -> bool {
        self.in_left[d]
    }

    fn enters_left(&self, g: &EmbeddedGraph, d: DartId) -> bool {
        !self.along[d] && self.on_path[g.head(d)] && self.in_left[g.twin(d)]
    }

    fn leaves_left(&self, g: &EmbeddedGraph, d: DartId) -> bool {
        !self.along[d] && self.on_path[g.origin(d)] && self.in_left[d]
    }

    pub fn side(&self, g: &EmbeddedGraph, d: DartId) -> Side {
        if self.along[d] {
            return Side::Along;
        }
        let from = self.on_path[g.origin(d)];
        let to = self.on_path[g.head(d)];
        match (from, to) {
            (false, false) => Side::Unrelated,
            (true, true) => {
                Side::Chord { leaves_left: self.in_left[d], enters_left: self.in_left[g.twin(d)] }
            }
            (false, true) if self.in_left[g.twin(d)] => Side::EntersLeft,
            (false, true) => Side::EntersRight,
            (true, false) if self.in_left[d] => Side::LeavesLeft,
            (true, false) => Side::LeavesRight,
        }
    }

    /// Per-dart crossing count: +1 for entering from the left, −1 for
    /// leaving to the left.
    pub fn count(&self, g: &EmbeddedGraph, d: DartId) -> i64 {
        self.enters_left(g, d) as i64 - self.leaves_left(g, d) as i64
    }

    /// Per-dart crossing parity.
    pub fn parity(&self, g: &EmbeddedGraph, d: DartId) -> bool {
        self.enters_left(g, d) != self.leaves_left(g, d)
    }

    pub fn walk_count(&self, g: &EmbeddedGraph, w: &[DartId]) -> i64 {
        w.iter().map(|&d| self.count(g, d)).sum()
    }

    pub fn walk_parity(&self, g: &EmbeddedGraph, w: &[DartId]) -> bool {
        w.iter().fold(false, |acc, &d| acc ^ self.parity(g, d))
    }
}

/// Classifies `d` against the simple path `p`.
pub fn edge_side(g: &EmbeddedGraph, p: &CycleWalk, d: DartId) -> Result<Side> {
    Ok(PathSides::new(g, p)?.side(g, d))
}

/// Signed crossing count of walk `p` with the simple cycle `lambda`.
pub fn crossing_count(g: &EmbeddedGraph, lambda: &CycleWalk, p: &[DartId]) -> Result<i64> {
    if !lambda.closed {
        return Err(SurfError::NotCycle);
    }
    Ok(PathSides::new(g, lambda)?.walk_count(g, p))
}

/// Crossing parity of walk `p` with the simple cycle or arc `lambda`.
pub fn crossing_parity(g: &EmbeddedGraph, lambda: &CycleWalk, p: &[DartId]) -> Result<bool> {
    Ok(PathSides::new(g, lambda)?.walk_parity(g, p))
}
