//! Single-source (and multi-source) shortest paths with a binary heap.
//!
//! Ties are broken deterministically: shorter length first, then fewer
//! darts, then the lexicographically smaller sequence of dart ids read from
//! the source. Keys strictly increase along every dart because the hop count
//! does, so all predecessors of a vertex are settled before it is.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::graph::{DartId, EmbeddedGraph, VertexId};
use crate::weight::Weight;

#[derive(Debug, Clone)]
pub struct ShortestPaths {
    pub dist: Vec<Weight>,
    pub hops: Vec<u32>,
    pub parent: Vec<Option<DartId>>,
    /// The source each vertex was reached from.
    pub root: Vec<VertexId>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits<'a> {
    /// Stop once this vertex is settled.
    pub target: Option<VertexId>,
    /// Ignore vertices farther than this.
    pub bound: Option<Weight>,
    /// Only darts flagged `true` may be used.
    pub allowed: Option<&'a [bool]>,
}

impl ShortestPaths {
    pub fn reached(&self, v: VertexId) -> bool {
        self.dist[v].is_finite()
    }

    /// Darts of the chosen path from its source to `v`.
    pub fn path_to(&self, g: &EmbeddedGraph, v: VertexId) -> Option<Vec<DartId>> {
        if !self.reached(v) {
            return None;
        }
        let mut darts = Vec::with_capacity(self.hops[v] as usize);
        let mut x = v;
        while let Some(d) = self.parent[x] {
            darts.push(d);
            x = g.origin(d);
        }
        darts.reverse();
        Some(darts)
    }

    /// Lexicographic comparison of the stored path to `u` extended by `d`
    /// against the stored path to `v`; both have equal hop counts.
    fn cmp_extended(&self, g: &EmbeddedGraph, u: VertexId, d: DartId, v: VertexId) -> Ordering {
        let mut a = vec![d];
        let mut x = u;
        while let Some(p) = self.parent[x] {
            a.push(p);
            x = g.origin(p);
        }
        let ra = x;
        let mut b = Vec::with_capacity(a.len());
        let mut y = v;
        while let Some(p) = self.parent[y] {
            b.push(p);
            y = g.origin(p);
        }
        let rb = y;
        ra.cmp(&rb).then_with(|| a.iter().rev().cmp(b.iter().rev()))
    }
}

pub fn dijkstra(g: &EmbeddedGraph, sources: &[VertexId], limits: SearchLimits) -> ShortestPaths {
    let n = g.vertex_count();
    let mut sp = ShortestPaths {
        dist: vec![Weight::INF; n],
        hops: vec![u32::MAX; n],
        parent: vec![None; n],
        root: vec![usize::MAX; n],
    };
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    let mut sorted = sources.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &s in &sorted {
        sp.dist[s] = Weight::ZERO;
        sp.hops[s] = 0;
        sp.root[s] = s;
        heap.push(Reverse((Weight::ZERO, 0u32, s)));
    }
    while let Some(Reverse((du, hu, u))) = heap.pop() {
        if done[u] || (du, hu) != (sp.dist[u], sp.hops[u]) {
            continue;
        }
        if let Some(b) = limits.bound {
            if du > b {
                break;
            }
        }
        done[u] = true;
        if limits.target == Some(u) {
            break;
        }
        for &d in g.rotation(u) {
            let w = g.weight(d);
            if !w.is_finite() || limits.allowed.is_some_and(|a| !a[d]) {
                continue;
            }
            let v = g.head(d);
            if done[v] {
                continue;
            }
            let nd = du + w;
            let nh = hu + 1;
            let better = match (nd, nh).cmp(&(sp.dist[v], sp.hops[v])) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => sp.cmp_extended(g, u, d, v) == Ordering::Less,
            };
            if better {
                let improved_key = (nd, nh) != (sp.dist[v], sp.hops[v]);
                sp.dist[v] = nd;
                sp.hops[v] = nh;
                sp.parent[v] = Some(d);
                sp.root[v] = sp.root[u];
                if improved_key {
                    heap.push(Reverse((nd, nh, v)));
                }
            }
        }
    }
    sp
}

/// Shortest distance from `s` to `t`, with the path.
pub fn shortest_path(
    g: &EmbeddedGraph,
    s: VertexId,
    t: VertexId,
    bound: Option<Weight>,
) -> Option<(Weight, Vec<DartId>)> {
    let sp = dijkstra(g, &[s], SearchLimits { target: Some(t), bound, allowed: None });
    let path = sp.path_to(g, t)?;
    if bound.is_some_and(|b| sp.dist[t] > b) {
        return None;
    }
    Some((sp.dist[t], path))
}
