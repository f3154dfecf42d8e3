//! Brute-force ground truth for small graphs: enumerate simple cycles and
//! classify each one directly.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, DartId, EmbeddedGraph, VertexId};
use crate::homology::ClassSignature;
use crate::surgery::{cut_along, paste_all};
use crate::weight::Weight;

/// Largest vertex count the enumerator accepts.
pub const ORACLE_MAX_VERTICES: usize = 400;

/// The three kinds of non-trivial cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleClass {
    NonSeparating,
    NonContractible,
    NonNullHomologous,
}

impl CycleClass {
    pub const ALL: [CycleClass; 3] =
        [CycleClass::NonSeparating, CycleClass::NonNullHomologous, CycleClass::NonContractible];

    pub fn short_name(self) -> &'static str {
        match self {
            CycleClass::NonSeparating => "nonsep",
            CycleClass::NonContractible => "noncon",
            CycleClass::NonNullHomologous => "nonhom",
        }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for CycleClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "nonsep" | "non-separating" => Ok(CycleClass::NonSeparating),
            "noncon" | "non-contractible" => Ok(CycleClass::NonContractible),
            "nonhom" | "non-null-homologous" => Ok(CycleClass::NonNullHomologous),
            _ => Err(format!("unknown class `{s}` (expected nonsep, noncon or nonhom)")),
        }
    }
}

/// Calls `visit` on every simple directed cycle of weight at most
/// `max_weight`, once per cycle, starting at its smallest vertex.
pub fn for_each_simple_cycle(
    g: &EmbeddedGraph,
    max_weight: Weight,
    mut visit: impl FnMut(&CycleWalk) -> ControlFlow<()>,
) -> Result<()> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(SurfError::TooLarge(format!("{n} vertices exceed the oracle limit")));
    }
    let mut on_stack = vec![false; n];
    for s in 0..n {
        let back = distances_to(g, s);
        let mut path: Vec<DartId> = Vec::new();
        on_stack[s] = true;
        let flow = dfs(g, s, s, Weight::ZERO, max_weight, &back, &mut on_stack, &mut path, &mut visit);
        on_stack[s] = false;
        if flow.is_break() {
            break;
        }
    }
    Ok(())
}

/// Distances to `s` using only vertices `≥ s`.
fn distances_to(g: &EmbeddedGraph, s: VertexId) -> Vec<Weight> {
    let mut dist = vec![Weight::INF; g.vertex_count()];
    dist[s] = Weight::ZERO;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((Weight::ZERO, s)));
    while let Some(Reverse((du, u))) = heap.pop() {
        if du > dist[u] {
            continue;
        }
        for &d in g.rotation(u) {
            // `e` runs from head(d) into u.
            let e = g.twin(d);
            let x = g.origin(e);
            let w = g.weight(e);
            if x < s || !w.is_finite() {
                continue;
            }
            let nd = du + w;
            if nd < dist[x] {
                dist[x] = nd;
                heap.push(Reverse((nd, x)));
            }
        }
    }
    dist
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &EmbeddedGraph,
    s: VertexId,
    v: VertexId,
    acc: Weight,
    max: Weight,
    back: &[Weight],
    on_stack: &mut [bool],
    path: &mut Vec<DartId>,
    visit: &mut impl FnMut(&CycleWalk) -> ControlFlow<()>,
) -> ControlFlow<()> {
    for &d in g.rotation(v) {
        let w = g.weight(d);
        if !w.is_finite() {
            continue;
        }
        let h = g.head(d);
        let total = acc + w;
        if h < s || total > max || total + back[h] > max {
            continue;
        }
        if h == s {
            if path.len() == 1 && g.twin(path[0]) == d {
                continue;
            }
            path.push(d);
            let c = CycleWalk::closed(g, path.clone()).expect("dfs builds closed walks");
            path.pop();
            visit(&c)?;
            continue;
        }
        if on_stack[h] {
            continue;
        }
        on_stack[h] = true;
        path.push(d);
        let flow = dfs(g, s, h, total, max, back, on_stack, path, visit);
        path.pop();
        on_stack[h] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

pub fn enumerate_simple_cycles(g: &EmbeddedGraph, max_weight: Weight) -> Result<Vec<CycleWalk>> {
    let mut out = Vec::new();
    for_each_simple_cycle(g, max_weight, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn is_separating(g: &EmbeddedGraph, c: &CycleWalk) -> Result<bool> {
    if !c.closed {
        return Err(SurfError::NotCycle);
    }
    Ok(cut_along(g, c)?.graph.component_count() > 1)
}

/// Disk criterion: some side of the cut is a disk whose only boundary is
/// the new one.
pub fn is_contractible(g: &EmbeddedGraph, c: &CycleWalk) -> Result<bool> {
    crate::surgery::bounds_disk(g, c)
}

/// Z₂ span of face boundaries, reduced to echelon form.
#[derive(Debug, Clone)]
pub struct FaceSpan {
    words: usize,
    /// Rows keyed by pivot bit.
    rows: Vec<(usize, Vec<u64>)>,
}

impl FaceSpan {
    /// Span of the boundaries of interior faces (boundary faces excluded).
    pub fn interior(g: &EmbeddedGraph) -> Self {
        Self::of_faces(g, &g.interior_faces())
    }

    fn of_faces(g: &EmbeddedGraph, faces: &[usize]) -> Self {
        let words = g.edge_count().div_ceil(64).max(1);
        let mut span = FaceSpan { words, rows: Vec::new() };
        for &f in faces {
            let v = edge_vector(g, &g.faces()[f], words);
            span.insert(v);
        }
        span
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (pivot, row) in &self.rows {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<u64>) {
        let v = self.reduce(v);
        if let Some(pivot) = first_bit(&v) {
            for (_, row) in self.rows.iter_mut() {
                if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                    for (a, b) in row.iter_mut().zip(&v) {
                        *a ^= b;
                    }
                }
            }
            self.rows.push((pivot, v));
        }
    }

    pub fn contains_walk(&self, g: &EmbeddedGraph, walk: &[DartId]) -> bool {
        first_bit(&self.reduce(edge_vector(g, walk, self.words))).is_none()
    }
}

fn first_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
}

/// Edge incidence vector mod 2, edges numbered in order of their smaller dart.
fn edge_vector(g: &EmbeddedGraph, walk: &[DartId], words: usize) -> Vec<u64> {
    let mut index = vec![usize::MAX; g.dart_count()];
    let mut k = 0;
    for d in 0..g.dart_count() {
        if d < g.twin(d) {
            index[d] = k;
            index[g.twin(d)] = k;
            k += 1;
        }
    }
    let mut v = vec![0u64; words];
    for &d in walk {
        let e = index[d];
        v[e / 64] ^= 1 << (e % 64);
    }
    v
}

pub fn is_null_homologous(g: &EmbeddedGraph, c: &CycleWalk) -> Result<bool> {
    if !c.is_simple(g) {
        return Err(SurfError::NotSimple);
    }
    Ok(FaceSpan::interior(g).contains_walk(g, &c.darts))
}

/// Classifier with precomputed face spans, for testing many cycles.
pub struct Classifier<'a> {
    g: &'a EmbeddedGraph,
    interior: FaceSpan,
}

impl<'a> Classifier<'a> {
    pub fn new(g: &'a EmbeddedGraph) -> Self {
        Classifier { g, interior: FaceSpan::interior(g) }
    }

    /// Whether the simple cycle `c` is non-trivial for `class`.
    pub fn is_nontrivial(&self, class: CycleClass, c: &CycleWalk) -> bool {
        match class {
            CycleClass::NonSeparating => !is_separating(self.g, c).expect("simple cycle"),
            CycleClass::NonNullHomologous => !self.interior.contains_walk(self.g, &c.darts),
            CycleClass::NonContractible => {
                // Null-homologous cycles on genus-0 surfaces always bound disks;
                // non-null-homologous ones never do.
                if !self.interior.contains_walk(self.g, &c.darts) {
                    return true;
                }
                !is_contractible(self.g, c).expect("simple cycle")
            }
        }
    }
}

/// The shortest simple cycle of `class`, with deterministic tie-breaking on
/// the canonical dart sequence. The weight bound doubles until a cycle is
/// found or every simple cycle has been examined.
pub fn brute_force_shortest(g: &EmbeddedGraph, class: CycleClass) -> Result<CycleWalk> {
    let total: u64 = g.weights().iter().filter_map(|w| w.finite()).sum();
    let cls = Classifier::new(g);
    let mut bound = g.weights().iter().filter_map(|w| w.finite()).min().unwrap_or(0).max(1);
    loop {
        let mut cycles = enumerate_simple_cycles(g, Weight::new(bound))?;
        cycles.sort_by(|a, b| {
            (a.length, a.canonical_rotation().darts).cmp(&(b.length, b.canonical_rotation().darts))
        });
        if let Some(c) = cycles.into_iter().find(|c| cls.is_nontrivial(class, c)) {
            return Ok(c.canonical_rotation());
        }
        if bound >= total {
            return Err(SurfError::NoSuchCycle);
        }
        bound = bound.saturating_mul(2).min(total);
    }
}

/// Shortest closed walk (not necessarily simple) whose class is non-trivial
/// in Z₂ homology: of the surface with boundaries pasted for
/// `NonSeparating`, of the surface itself for `NonNullHomologous`. Searches
/// the product of the graph with the crossing-signature group.
pub fn shortest_nontrivial_walk_length(g: &EmbeddedGraph, class: CycleClass) -> Result<Weight> {
    let (target, sig) = match class {
        CycleClass::NonSeparating => (paste_all(g), ClassSignature::new(&paste_all(g))?),
        CycleClass::NonNullHomologous => (g.clone(), ClassSignature::new(g)?),
        CycleClass::NonContractible => {
            return Err(SurfError::TooLarge("homotopy is not tracked by walks".into()))
        }
    };
    let sides: Vec<_> = sig.basis.iter().chain(&sig.arcs).collect();
    let k = sides.len();
    if k == 0 {
        return Err(SurfError::NoSuchCycle);
    }
    let n = target.vertex_count();
    let states = n << k;
    let mut best = Weight::INF;
    let mask_of = |d: DartId| -> usize {
        sides.iter().enumerate().map(|(i, s)| (s.parity(&target, d) as usize) << i).sum()
    };
    let masks: Vec<usize> = (0..target.dart_count()).map(mask_of).collect();
    for s in 0..n {
        let mut dist = vec![Weight::INF; states];
        dist[s << k] = Weight::ZERO;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((Weight::ZERO, s << k)));
        while let Some(Reverse((du, st))) = heap.pop() {
            if du > dist[st] || du >= best {
                continue;
            }
            let (v, m) = (st >> k, st & ((1 << k) - 1));
            if v == s && m != 0 {
                best = best.min(du);
                continue;
            }
            for &d in target.rotation(v) {
                let w = target.weight(d);
                if !w.is_finite() {
                    continue;
                }
                let ns = (target.head(d) << k) | (m ^ masks[d]);
                let nd = du + w;
                if nd < dist[ns] {
                    dist[ns] = nd;
                    heap.push(Reverse((nd, ns)));
                }
            }
        }
    }
    if best.is_finite() {
        Ok(best)
    } else {
        Err(SurfError::NoSuchCycle)
    }
}
