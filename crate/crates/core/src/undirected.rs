//! Shortest non-trivial cycles in undirected graphs by enumerating how a
//! cycle can cross a greedy system of generators.
//!
//! A system of loops (closed surfaces) or arcs (surfaces with boundary) is
//! grown from a shortest-path tree or forest and a greedy cotree. Its union,
//! with dead-end hairs pruned, is a cut graph `K` whose complement is a disk
//! `D`. The maximal paths of `K` between branching points (its *branches*)
//! appear twice each on the boundary of `D`; they are the sides of the
//! polygonal schema. A simple closed curve is a non-crossing family of chords
//! of `D` whose endpoints are matched up across paired sides, and the curve
//! visits the sides in a cyclic *crossing sequence*.
//!
//! Every optimal cycle can be taken to cross each loop or arc at most twice
//! and never to cross a side and immediately cross back. The enumeration
//! therefore ranges over chord families in which each generator carries at
//! most two endpoints in total, keeps those that close up into a single
//! curve, and realizes each resulting sequence as a shortest path through a
//! chain of copies of `D` glued along the crossed sides.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Result, SurfError};
use crate::graph::{CycleWalk, DartId, EmbeddedGraph, VertexId};
use crate::homology::{
    capped_weights, spanning_tree_paths, tree_cotree_from_paths, ClassSignature, UnionFind,
};
use crate::oracle::CycleClass;
use crate::sssp::{dijkstra, SearchLimits};
use crate::surgery::{bounds_disk, cut_along_subgraph, paste_all, with_collars, CutSurface};
use crate::weight::Weight;

/// Default upper bound on the number of loops or arcs a system may have.
pub const DEFAULT_MAX_GENERATORS: usize = 12;

/// Environment variable overriding [`DEFAULT_MAX_GENERATORS`].
pub const MAX_GENERATORS_ENV: &str = "SURFCYC_MAX_GENERATORS";

/// The generator cap in effect.
pub fn generator_cap() -> usize {
    std::env::var(MAX_GENERATORS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_GENERATORS)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    /// `2g` loops through a common basepoint.
    Loops,
    /// `2g + b − 1` arcs with both ends on the boundary.
    Arcs,
}

/// One side of the polygonal schema: a branch of the cut graph seen from its
/// left (`forward`) or right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemaSide {
    pub branch: usize,
    pub forward: bool,
}

/// The sides of the schema in their cyclic order around `D`, which is all
/// the chord enumeration needs.
#[derive(Debug, Clone)]
pub struct DualizedSchema {
    pub sides: Vec<SchemaSide>,
    pub branch_count: usize,
    /// Branches each loop or arc runs along.
    pub generator_branches: Vec<Vec<usize>>,
    side_index: Vec<[usize; 2]>,
}

impl DualizedSchema {
    fn new(sides: Vec<SchemaSide>, branch_count: usize, generator_branches: Vec<Vec<usize>>) -> Self {
        let mut side_index = vec![[usize::MAX; 2]; branch_count];
        for (i, s) in sides.iter().enumerate() {
            side_index[s.branch][s.forward as usize] = i;
        }
        assert!(
            side_index.iter().all(|p| p[0] != usize::MAX && p[1] != usize::MAX),
            "every branch appears on both sides of the disk"
        );
        DualizedSchema { sides, branch_count, generator_branches, side_index }
    }

    pub fn side(&self, branch: usize, forward: bool) -> usize {
        self.side_index[branch][forward as usize]
    }

    /// The side glued to side `i`.
    pub fn mate(&self, i: usize) -> usize {
        let s = self.sides[i];
        self.side(s.branch, !s.forward)
    }
}

/// A generator system together with the cut-open disk.
#[derive(Debug, Clone)]
pub struct SystemOfGenerators {
    pub kind: SystemKind,
    /// The graph the system lives in: the input, or the input with collars
    /// when its boundaries touch.
    pub graph: EmbeddedGraph,
    /// Loops (closed) or arcs (open) in `graph`.
    pub generators: Vec<CycleWalk>,
    /// Darts of the cut graph, boundary edges excluded.
    pub cut: Vec<bool>,
    /// Dart paths of the branches, each in its forward direction.
    pub branches: Vec<Vec<DartId>>,
    /// Branch of every cut dart and whether it runs forward.
    pub branch_of: Vec<Option<(usize, bool)>>,
    pub disk: CutSurface,
    pub schema: DualizedSchema,
    /// Vertices of `disk` along each side, in boundary order.
    side_vertices: Vec<Vec<VertexId>>,
}

/// One crossing of a curve with a branch. Left to right is relative to the
/// branch's forward direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub branch: usize,
    pub left_to_right: bool,
}

/// A cyclic sequence of crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingSequence {
    pub entries: Vec<Crossing>,
}

impl CrossingSequence {
    pub fn new(entries: Vec<Crossing>) -> Self {
        CrossingSequence { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|c| Crossing { branch: c.branch, left_to_right: !c.left_to_right })
            .collect();
        CrossingSequence { entries }
    }

    /// Lexicographically least rotation of either traversal direction.
    pub fn canonical(&self) -> Self {
        let mut best: Option<Vec<Crossing>> = None;
        for seq in [self.entries.clone(), self.reversed().entries] {
            for r in 0..seq.len().max(1) {
                let mut cand = seq[r.min(seq.len())..].to_vec();
                cand.extend_from_slice(&seq[..r.min(seq.len())]);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        CrossingSequence { entries: best.unwrap_or_default() }
    }

    /// Crossings per branch.
    pub fn counts(&self, branch_count: usize) -> Vec<usize> {
        let mut c = vec![0; branch_count];
        for e in &self.entries {
            c[e.branch] += 1;
        }
        c
    }

    /// Cancels adjacent back-and-forth crossings of the same branch until
    /// none remain, cyclically.
    pub fn without_curls(&self) -> Self {
        let mut out: Vec<Crossing> = Vec::new();
        for &c in &self.entries {
            match out.last() {
                Some(&l) if l.branch == c.branch && l.left_to_right != c.left_to_right => {
                    out.pop();
                }
                _ => out.push(c),
            }
        }
        while out.len() >= 2 {
            let (f, l) = (out[0], out[out.len() - 1]);
            if f.branch == l.branch && f.left_to_right != l.left_to_right {
                out.pop();
                out.remove(0);
            } else {
                break;
            }
        }
        CrossingSequence { entries: out }
    }
}

fn branch_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("g{i}")
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|c| format!("{}{}", branch_name(c.branch), if c.left_to_right { '+' } else { '-' }))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// At most two crossings per branch and no curls, cyclically.
pub fn validate_crossing_sequence(x: &CrossingSequence) -> bool {
    if x.is_empty() {
        return false;
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &x.entries {
        *counts.entry(c.branch).or_default() += 1;
    }
    if counts.values().any(|&k| k > 2) {
        return false;
    }
    let k = x.len();
    (0..k).all(|i| {
        let (a, b) = (x.entries[i], x.entries[(i + 1) % k]);
        k == 1 || a.branch != b.branch || a.left_to_right == b.left_to_right
    })
}

fn boundary_corners(g: &EmbeddedGraph, v: VertexId) -> Vec<DartId> {
    g.rotation(v).iter().copied().filter(|&a| g.corner_after_is_boundary(a)).collect()
}

/// Boundaries that are vertex-disjoint simple cycles need no collars.
fn boundaries_are_clean(g: &EmbeddedGraph) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    for f in g.boundary_faces() {
        for v in g.face_vertices(f) {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
    }
    true
}

impl SystemOfGenerators {
    /// Prunes hairs, splits the cut graph into branches and cuts the disk.
    fn assemble(kind: SystemKind, graph: EmbeddedGraph, generators: Vec<CycleWalk>) -> Result<Self> {
        let g = &graph;
        let nd = g.dart_count();
        let n = g.vertex_count();
        let mut cut = vec![false; nd];
        for w in &generators {
            for &d in &w.darts {
                cut[d] = true;
                cut[g.twin(d)] = true;
            }
        }
        let anchored: Vec<bool> = (0..n).map(|v| !boundary_corners(g, v).is_empty()).collect();
        let degree = |cut: &[bool], v: VertexId| g.rotation(v).iter().filter(|&&d| cut[d]).count();
        loop {
            let mut changed = false;
            for v in 0..n {
                if !anchored[v] && degree(&cut, v) == 1 {
                    let d = *g.rotation(v).iter().find(|&&d| cut[d]).unwrap();
                    cut[d] = false;
                    cut[g.twin(d)] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        let is_branch_vertex = |v: VertexId| anchored[v] || degree(&cut, v) != 2;
        let mut branch_of: Vec<Option<(usize, bool)>> = vec![None; nd];
        let mut branches: Vec<Vec<DartId>> = Vec::new();
        let mut trace = |start: DartId, branch_of: &mut Vec<Option<(usize, bool)>>| {
            let id = branches.len();
            let mut path = vec![start];
            let mut x = g.head(start);
            loop {
                let last = *path.last().unwrap();
                if is_branch_vertex(x) {
                    break;
                }
                let nextd = *g
                    .rotation(x)
                    .iter()
                    .find(|&&d| cut[d] && d != g.twin(last))
                    .expect("degree-two vertex has a continuation");
                if nextd == start {
                    break;
                }
                path.push(nextd);
                x = g.head(nextd);
            }
            for &d in &path {
                branch_of[d] = Some((id, true));
                branch_of[g.twin(d)] = Some((id, false));
            }
            branches.push(path);
        };
        for d in 0..nd {
            if cut[d] && branch_of[d].is_none() && is_branch_vertex(g.origin(d)) {
                trace(d, &mut branch_of);
            }
        }
        for d in 0..nd {
            if cut[d] && branch_of[d].is_none() {
                trace(d, &mut branch_of);
            }
        }

        let corners: Vec<DartId> = (0..n)
            .filter(|&v| anchored[v] && degree(&cut, v) > 0)
            .flat_map(|v| boundary_corners(g, v))
            .collect();
        let disk = cut_along_subgraph(g, &cut, &corners);
        let dg = &disk.graph;
        let bfaces = dg.boundary_faces();
        if dg.component_count() != 1 || dg.genus() != 0 || bfaces.len() != 1 {
            return Err(SurfError::MalformedPermutation(
                "generator system does not cut the surface into a disk".into(),
            ));
        }

        // Sides in boundary order, starting at the beginning of a side.
        let face = &dg.faces()[bfaces[0]];
        let label = |x: DartId| branch_of[disk.dart_source[x]];
        let len = face.len();
        let start = (0..len)
            .find(|&i| label(face[i]).is_some() && label(face[(i + len - 1) % len]) != label(face[i]))
            .unwrap_or(0);
        let mut sides = Vec::new();
        let mut side_vertices: Vec<Vec<VertexId>> = Vec::new();
        for k in 0..len {
            let x = face[(start + k) % len];
            let Some((branch, forward)) = label(x) else { continue };
            let continues = k > 0 && label(face[(start + k - 1) % len]) == label(x);
            if !continues {
                sides.push(SchemaSide { branch, forward });
                side_vertices.push(vec![dg.origin(x)]);
            }
            side_vertices.last_mut().unwrap().push(dg.head(x));
        }
        let generator_branches = generators
            .iter()
            .map(|w| {
                let mut bs: Vec<usize> =
                    w.darts.iter().filter_map(|&d| branch_of[d].map(|(b, _)| b)).collect();
                bs.sort_unstable();
                bs.dedup();
                bs
            })
            .collect();
        let schema = DualizedSchema::new(sides, branches.len(), generator_branches);
        for (i, vs) in side_vertices.iter().enumerate() {
            let m = &side_vertices[schema.mate(i)];
            debug_assert_eq!(vs.len(), m.len());
            debug_assert!(vs
                .iter()
                .zip(m.iter().rev())
                .all(|(&a, &b)| disk.vertex_source[a] == disk.vertex_source[b]));
        }
        Ok(SystemOfGenerators {
            kind,
            graph,
            generators,
            cut,
            branches,
            branch_of,
            disk,
            schema,
            side_vertices,
        })
    }

    /// Disk vertices along side `i`, in boundary order.
    pub fn side_vertices(&self, i: usize) -> &[VertexId] {
        &self.side_vertices[i]
    }
}

/// Greedy system of loops based at `basepoint`: shortest-path tree, cotree
/// maximizing fundamental loop lengths, and one loop per leftover edge.
pub fn greedy_system_of_loops(g: &EmbeddedGraph, basepoint: VertexId) -> Result<SystemOfGenerators> {
    if g.boundary_count() > 0 {
        return Err(SurfError::HasBoundary);
    }
    if g.genus() == 0 {
        return Err(SurfError::GenusZero);
    }
    let tc = tree_cotree_from_paths(g, basepoint, spanning_tree_paths(g, basepoint));
    let loops = tc
        .leftover
        .iter()
        .map(|&e| {
            let mut darts = tc.paths.path_to(g, g.origin(e)).expect("spanning tree");
            darts.push(e);
            let back = tc.paths.path_to(g, g.head(e)).expect("spanning tree");
            darts.extend(back.iter().rev().map(|&d| g.twin(d)));
            CycleWalk::closed(g, darts)
        })
        .collect::<Result<Vec<_>>>()?;
    SystemOfGenerators::assemble(SystemKind::Loops, g.clone(), loops)
}

/// Greedy system of arcs: a shortest-path forest grown from every boundary
/// vertex, a cotree over the interior faces, and one arc per leftover edge.
/// Boundaries that touch are first separated by collars of infinite weight.
pub fn greedy_system_of_arcs(g: &EmbeddedGraph) -> Result<SystemOfGenerators> {
    if g.boundary_count() == 0 {
        return Err(SurfError::NoBoundary);
    }
    let work = if boundaries_are_clean(g) { g.clone() } else { with_collars(g) };
    let h = &work;
    let sources: Vec<VertexId> =
        (0..h.vertex_count()).filter(|&v| !boundary_corners(h, v).is_empty()).collect();
    let mut forest = dijkstra(h, &sources, SearchLimits::default());
    let search_graph = if forest.dist.iter().all(|d| d.is_finite()) {
        h.clone()
    } else {
        let capped = capped_weights(h);
        forest = dijkstra(&capped, &sources, SearchLimits::default());
        capped
    };
    let nd = h.dart_count();
    let mut tree = vec![false; nd];
    for p in forest.parent.iter().flatten() {
        tree[*p] = true;
        tree[h.twin(*p)] = true;
    }
    let on_boundary = |d: DartId| h.is_boundary_dart(d) || h.is_boundary_dart(h.twin(d));
    let mut candidates: Vec<(Weight, DartId)> = (0..nd)
        .filter(|&d| d < h.twin(d) && !tree[d] && !on_boundary(d))
        .map(|d| {
            let len = forest.dist[h.origin(d)] + search_graph.weight(d) + forest.dist[h.head(d)];
            (len, d)
        })
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut uf = UnionFind::new(h.faces().len());
    let mut leftover = Vec::new();
    for (_, d) in candidates {
        if !uf.union(h.face_of(d), h.face_of(h.twin(d))) {
            leftover.push(d);
        }
    }
    leftover.sort_unstable();
    let arcs = leftover
        .iter()
        .map(|&e| {
            let mut darts = forest.path_to(h, h.origin(e)).expect("forest spans");
            darts.push(e);
            let back = forest.path_to(h, h.head(e)).expect("forest spans");
            darts.extend(back.iter().rev().map(|&d| h.twin(d)));
            CycleWalk::new(h, darts, false)
        })
        .collect::<Result<Vec<_>>>()?;
    SystemOfGenerators::assemble(SystemKind::Arcs, work, arcs)
}

/// A non-crossing arrangement of chords in `D`: endpoints listed side by
/// side in boundary order, with their chord partners.
#[derive(Debug, Clone)]
struct Arrangement {
    side_of: Vec<usize>,
    side_start: Vec<usize>,
    degree: Vec<usize>,
    partner: Vec<usize>,
}

impl Arrangement {
    fn endpoints(schema: &DualizedSchema, branch_degree: &[usize]) -> Self {
        let mut side_of = Vec::new();
        let mut side_start = Vec::new();
        let mut degree = Vec::new();
        for (i, s) in schema.sides.iter().enumerate() {
            let d = branch_degree[s.branch];
            side_start.push(side_of.len());
            degree.push(d);
            side_of.extend(std::iter::repeat_n(i, d));
        }
        let partner = vec![usize::MAX; side_of.len()];
        Arrangement { side_of, side_start, degree, partner }
    }

    /// Follows the chords and the side gluing. `None` unless they close up
    /// into exactly one curve.
    fn trace(&self, schema: &DualizedSchema) -> Option<CrossingSequence> {
        let total = self.partner.len();
        if total == 0 {
            return None;
        }
        let mut entries = Vec::new();
        let mut seen = 0;
        let mut e = 0;
        loop {
            let exit = self.partner[e];
            let s = self.side_of[exit];
            let t = exit - self.side_start[s];
            let side = schema.sides[s];
            entries.push(Crossing { branch: side.branch, left_to_right: side.forward });
            let m = schema.mate(s);
            e = self.side_start[m] + (self.degree[s] - 1 - t);
            seen += 2;
            if e == 0 {
                break;
            }
        }
        (seen == total).then(|| CrossingSequence::new(entries))
    }
}

/// The non-zero part of a weighted triangulation of the dualized schema.
///
/// Any non-crossing family of chords extends to a triangulation, and
/// triangulations that differ only on weight-zero chords describe the same
/// curves, so each family is produced once in this reduced form. Keys are
/// side pairs `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTriangulation {
    pub weights: BTreeMap<(usize, usize), u8>,
    arrangement: Option<Arrangement>,
}

impl WeightedTriangulation {
    /// Builds the chord arrangement for the given weights; `None` when the
    /// chords cross, touch a side with an odd degree mismatch, or exceed two
    /// endpoints on a side.
    pub fn new(schema: &DualizedSchema, weights: BTreeMap<(usize, usize), u8>) -> Option<Self> {
        let mut side_degree = vec![0usize; schema.sides.len()];
        for (&(i, j), &w) in &weights {
            if i == j || i >= schema.sides.len() || j >= schema.sides.len() || w > 2 {
                return None;
            }
            side_degree[i] += w as usize;
            side_degree[j] += w as usize;
        }
        let mut branch_degree = vec![0usize; schema.branch_count];
        for (i, s) in schema.sides.iter().enumerate() {
            if side_degree[i] > 2 || side_degree[i] != side_degree[schema.mate(i)] {
                return None;
            }
            branch_degree[s.branch] = side_degree[i];
        }
        let mut arr = Arrangement::endpoints(schema, &branch_degree);
        let mut remaining = weights.clone();
        let mut stack = Vec::new();
        if !match_with_budget(&mut arr, 0, &mut stack, &mut remaining) {
            return None;
        }
        Some(WeightedTriangulation { weights, arrangement: Some(arr) })
    }

    fn from_arrangement(arr: &Arrangement) -> Self {
        let mut weights = BTreeMap::new();
        for (a, &b) in arr.partner.iter().enumerate() {
            if a < b {
                let (i, j) = (arr.side_of[a], arr.side_of[b]);
                *weights.entry((i.min(j), i.max(j))).or_insert(0) += 1;
            }
        }
        WeightedTriangulation { weights, arrangement: Some(arr.clone()) }
    }
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Self) -> bool {
        self.partner == other.partner && self.side_of == other.side_of
    }
}

impl Eq for Arrangement {}

fn match_with_budget(
    arr: &mut Arrangement,
    p: usize,
    stack: &mut Vec<usize>,
    budget: &mut BTreeMap<(usize, usize), u8>,
) -> bool {
    let n = arr.side_of.len();
    if p == n {
        return stack.is_empty();
    }
    if let Some(&top) = stack.last() {
        let (i, j) = (arr.side_of[top], arr.side_of[p]);
        let key = (i.min(j), i.max(j));
        if i != j && budget.get(&key).copied().unwrap_or(0) > 0 {
            *budget.get_mut(&key).unwrap() -= 1;
            stack.pop();
            arr.partner[top] = p;
            arr.partner[p] = top;
            if match_with_budget(arr, p + 1, stack, budget) {
                return true;
            }
            stack.push(top);
            *budget.get_mut(&key).unwrap() += 1;
        }
    }
    if stack.len() < n - p - 1 {
        stack.push(p);
        if match_with_budget(arr, p + 1, stack, budget) {
            return true;
        }
        stack.pop();
    }
    false
}

/// Enumerates every non-crossing perfect matching of the endpoints with no
/// chord joining a side to itself.
fn for_each_matching(
    arr: &mut Arrangement,
    p: usize,
    stack: &mut Vec<usize>,
    visit: &mut dyn FnMut(&Arrangement) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = arr.side_of.len();
    if p == n {
        return if stack.is_empty() { visit(arr) } else { ControlFlow::Continue(()) };
    }
    if let Some(&top) = stack.last() {
        if arr.side_of[top] != arr.side_of[p] {
            stack.pop();
            arr.partner[top] = p;
            arr.partner[p] = top;
            let r = for_each_matching(arr, p + 1, stack, visit);
            stack.push(top);
            r?;
        }
    }
    if stack.len() < n - p - 1 {
        stack.push(p);
        let r = for_each_matching(arr, p + 1, stack, visit);
        stack.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// Visits every admissible arrangement: each branch is crossed at most
/// twice and each generator at most twice over all of its branches.
fn for_each_arrangement(
    schema: &DualizedSchema,
    visit: &mut dyn FnMut(&Arrangement) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let nb = schema.branch_count;
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for (gi, bs) in schema.generator_branches.iter().enumerate() {
        for &b in bs {
            member[b].push(gi);
        }
    }
    let mut degree = vec![0usize; nb];
    let mut load = vec![0usize; schema.generator_branches.len()];
    fn rec(
        b: usize,
        schema: &DualizedSchema,
        member: &[Vec<usize>],
        degree: &mut Vec<usize>,
        load: &mut Vec<usize>,
        visit: &mut dyn FnMut(&Arrangement) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if b == degree.len() {
            if degree.iter().all(|&d| d == 0) {
                return ControlFlow::Continue(());
            }
            let mut arr = Arrangement::endpoints(schema, degree);
            return for_each_matching(&mut arr, 0, &mut Vec::new(), visit);
        }
        for d in 0..=2 {
            if member[b].iter().any(|&gi| load[gi] + d > 2) {
                break;
            }
            degree[b] = d;
            for &gi in &member[b] {
                load[gi] += d;
            }
            let r = rec(b + 1, schema, member, degree, load, visit);
            for &gi in &member[b] {
                load[gi] -= d;
            }
            r?;
        }
        degree[b] = 0;
        ControlFlow::Continue(())
    }
    rec(0, schema, &member, &mut degree, &mut load, visit)
}

/// Streams the admissible weighted triangulations of `schema`.
pub fn enumerate_weighted_triangulations(
    schema: &DualizedSchema,
    mut visit: impl FnMut(&WeightedTriangulation) -> ControlFlow<()>,
) -> Result<()> {
    check_cap(schema.generator_branches.len())?;
    let _ = for_each_arrangement(schema, &mut |arr| visit(&WeightedTriangulation::from_arrangement(arr)));
    Ok(())
}

fn check_cap(generators: usize) -> Result<()> {
    let cap = generator_cap();
    if generators > cap {
        return Err(SurfError::TooLarge(format!("{generators} generators exceed the cap of {cap}")));
    }
    Ok(())
}

/// The crossing sequence of the single curve a triangulation describes, or
/// `None` when its chords close up into several curves (or none).
pub fn triangulation_to_crossing_sequence(
    schema: &DualizedSchema,
    t: &WeightedTriangulation,
) -> Option<CrossingSequence> {
    match &t.arrangement {
        Some(arr) => arr.trace(schema),
        None => WeightedTriangulation::new(schema, t.weights.clone())?.arrangement?.trace(schema),
    }
}

/// All distinct valid crossing sequences of the system, canonicalized, in
/// lexicographic order.
pub fn enumerate_crossing_sequences(sys: &SystemOfGenerators) -> Result<Vec<CrossingSequence>> {
    check_cap(sys.generators.len())?;
    let mut seen = HashSet::new();
    let _ = for_each_arrangement(&sys.schema, &mut |arr| {
        if let Some(x) = arr.trace(&sys.schema) {
            let x = x.canonical();
            if validate_crossing_sequence(&x) {
                seen.insert(x);
            }
        }
        ControlFlow::Continue(())
    });
    let mut out: Vec<CrossingSequence> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The glued chain of `|x| + 1` copies of `D`, as an adjacency list over
/// union-find classes.
struct Chain {
    class: Vec<usize>,
    adj: Vec<Vec<(usize, Weight, DartId)>>,
    copy_size: usize,
}

impl Chain {
    fn build(sys: &SystemOfGenerators, x: &CrossingSequence, finite_only: bool) -> Chain {
        let dg = &sys.disk.graph;
        let nv = dg.vertex_count();
        let k = x.len();
        let mut uf = UnionFind::new((k + 1) * nv);
        for (j, c) in x.entries.iter().enumerate() {
            let s = sys.schema.side(c.branch, c.left_to_right);
            let m = sys.schema.mate(s);
            let (vs, ms) = (&sys.side_vertices[s], &sys.side_vertices[m]);
            let r = vs.len() - 1;
            for p in 0..=r {
                uf.union(j * nv + vs[p], (j + 1) * nv + ms[r - p]);
            }
        }
        let class: Vec<usize> = (0..(k + 1) * nv).map(|i| uf.find(i)).collect();
        let mut adj = vec![Vec::new(); (k + 1) * nv];
        for j in 0..=k {
            for xd in 0..dg.dart_count() {
                let w = dg.weight(xd);
                if finite_only && !w.is_finite() {
                    continue;
                }
                let u = class[j * nv + dg.origin(xd)];
                let v = class[j * nv + dg.head(xd)];
                adj[u].push((v, w, sys.disk.dart_source[xd]));
            }
        }
        Chain { class, adj, copy_size: nv }
    }

    fn node(&self, copy: usize, v: VertexId) -> usize {
        self.class[copy * self.copy_size + v]
    }

    /// Shortest path from `s` to `t` no longer than `bound`, as original darts.
    fn shortest(&self, s: usize, t: usize, bound: Weight) -> Option<(Weight, Vec<DartId>)> {
        let n = self.adj.len();
        let mut dist = vec![Weight::INF; n];
        let mut parent: Vec<Option<(usize, DartId)>> = vec![None; n];
        let mut heap = BinaryHeap::new();
        dist[s] = Weight::ZERO;
        heap.push(Reverse((Weight::ZERO, s)));
        while let Some(Reverse((du, u))) = heap.pop() {
            if du > dist[u] {
                continue;
            }
            if u == t {
                break;
            }
            for &(v, w, d) in &self.adj[u] {
                let nd = du + w;
                if nd <= bound && nd < dist[v] {
                    dist[v] = nd;
                    parent[v] = Some((u, d));
                    heap.push(Reverse((nd, v)));
                }
            }
        }
        if !dist[t].is_finite() || dist[t] > bound {
            return None;
        }
        let mut darts = Vec::new();
        let mut at = t;
        while let Some((p, d)) = parent[at] {
            darts.push(d);
            at = p;
        }
        darts.reverse();
        Some((dist[t], darts))
    }

    /// Any path from `s` to `t`, ignoring weights.
    fn any_path(&self, s: usize, t: usize) -> Vec<DartId> {
        let mut parent: Vec<Option<(usize, DartId)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &(v, _, d) in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some((u, d));
                    queue.push_back(v);
                }
            }
        }
        let mut darts = Vec::new();
        let mut at = t;
        while let Some((p, d)) = parent[at] {
            darts.push(d);
            at = p;
        }
        darts.reverse();
        darts
    }
}

/// Disk vertices where the curve starts: the side it enters before its
/// first crossing.
fn start_vertices<'a>(sys: &'a SystemOfGenerators, x: &CrossingSequence) -> &'a [VertexId] {
    let last = x.entries[x.len() - 1];
    let s = sys.schema.side(last.branch, last.left_to_right);
    &sys.side_vertices[sys.schema.mate(s)]
}

/// Shortest closed walk in `sys.graph` realizing `x`, no longer than `bound`.
pub fn shortest_cycle_for_crossing_sequence(
    sys: &SystemOfGenerators,
    x: &CrossingSequence,
    bound: Weight,
) -> Option<CycleWalk> {
    if x.is_empty() {
        return None;
    }
    let chain = Chain::build(sys, x, true);
    let k = x.len();
    let mut best: Option<(Weight, Vec<DartId>)> = None;
    for &u in start_vertices(sys, x) {
        let limit = best.as_ref().map_or(bound, |b| b.0.min(bound));
        let Some((w, darts)) = chain.shortest(chain.node(0, u), chain.node(k, u), limit) else {
            continue;
        };
        if darts.is_empty() {
            continue;
        }
        let walk = CycleWalk::closed(&sys.graph, darts).expect("chain paths close up");
        let key = (w, walk.canonical_rotation().darts);
        if best.as_ref().is_none_or(|b| key < (b.0, b.1.clone())) {
            best = Some(key);
        }
    }
    best.map(|(_, d)| CycleWalk::closed(&sys.graph, d).unwrap())
}

/// A closed walk in `sys.graph` with crossing sequence `x`, ignoring weights.
pub fn representative_walk(sys: &SystemOfGenerators, x: &CrossingSequence) -> Option<CycleWalk> {
    if x.is_empty() {
        return None;
    }
    let chain = Chain::build(sys, x, false);
    let u = start_vertices(sys, x)[0];
    let darts = chain.any_path(chain.node(0, u), chain.node(x.len(), u));
    if darts.is_empty() {
        return None;
    }
    CycleWalk::closed(&sys.graph, darts).ok()
}

/// Z₂ homology class of the curves realizing `x`, as crossing parities with
/// the classes in `sig` (which must be built on `sys.graph`).
pub fn crossing_sequence_homology_class(
    x: &CrossingSequence,
    sys: &SystemOfGenerators,
    sig: &ClassSignature,
) -> Vec<bool> {
    match representative_walk(sys, x) {
        Some(w) => sig.signature(&sys.graph, &w.darts),
        None => vec![false; sig.basis.len() + sig.arcs.len()],
    }
}

/// The crossing sequence of a simple cycle of `sys.graph`, obtained by
/// pushing it slightly off the cut graph (to its left where possible) and
/// cancelling curls.
pub fn crossing_sequence_of_cycle(sys: &SystemOfGenerators, c: &CycleWalk) -> Option<CrossingSequence> {
    for push_left in [true, false] {
        if let Some(x) = pushed_crossings(sys, c, push_left) {
            return Some(x.without_curls().canonical());
        }
    }
    None
}

fn pushed_crossings(sys: &SystemOfGenerators, c: &CycleWalk, left: bool) -> Option<CrossingSequence> {
    let g = &sys.graph;
    let k = c.darts.len();
    let mut entries = Vec::new();
    for i in 0..k {
        let out = c.darts[i];
        let back = g.twin(c.darts[(i + k - 1) % k]);
        // Corners and darts swept at this vertex, in the order the pushed
        // curve meets them.
        let mut swept = Vec::new();
        if left {
            let mut d = back;
            loop {
                d = g.prev(d);
                if g.corner_after_is_boundary(d) {
                    return None;
                }
                if d == out {
                    break;
                }
                swept.push(d);
            }
        } else {
            let mut d = back;
            loop {
                if g.corner_after_is_boundary(d) {
                    return None;
                }
                d = g.next(d);
                if d == out {
                    break;
                }
                swept.push(d);
            }
        }
        for d in swept {
            if let Some((branch, forward)) = sys.branch_of[d] {
                entries.push(Crossing { branch, left_to_right: forward == left });
            }
        }
    }
    Some(CrossingSequence::new(entries))
}

/// Keeps the cheapest admissible simple piece of each realized walk.
#[derive(Default)]
struct Best {
    cycle: Option<CycleWalk>,
    sequence: Option<CrossingSequence>,
}

impl Best {
    fn bound(&self) -> Weight {
        self.cycle.as_ref().map_or(Weight::INF, |c| c.length)
    }

    fn offer(&mut self, c: CycleWalk, x: &CrossingSequence) {
        let c = c.canonical_rotation();
        let better = match &self.cycle {
            None => true,
            Some(b) => (c.length, &c.darts) < (b.length, &b.darts),
        };
        if better {
            self.cycle = Some(c);
            self.sequence = Some(x.clone());
        }
    }
}

/// The winning cycle of an undirected query with its crossing sequence.
#[derive(Debug, Clone)]
pub struct UndirectedResult {
    pub cycle: CycleWalk,
    pub sequence: CrossingSequence,
}

fn run_pipeline(
    sys: &SystemOfGenerators,
    keep_sequence: &dyn Fn(&CrossingSequence) -> bool,
    keep_piece: &dyn Fn(&CycleWalk) -> bool,
) -> Result<Option<UndirectedResult>> {
    let mut best = Best::default();
    for x in enumerate_crossing_sequences(sys)? {
        if !keep_sequence(&x) {
            continue;
        }
        let Some(walk) = shortest_cycle_for_crossing_sequence(sys, &x, best.bound()) else {
            continue;
        };
        for piece in walk.simple_pieces(&sys.graph) {
            if piece.length <= best.bound() && keep_piece(&piece) {
                best.offer(piece, &x);
            }
        }
    }
    Ok(best.cycle.map(|cycle| UndirectedResult { cycle, sequence: best.sequence.unwrap() }))
}

fn require_symmetric(g: &EmbeddedGraph) -> Result<()> {
    match (0..g.dart_count()).find(|&d| g.weight(d) != g.weight(g.twin(d))) {
        Some(d) => Err(SurfError::AsymmetricWeights(d)),
        None => Ok(()),
    }
}

fn into_original(g: &EmbeddedGraph, r: Option<UndirectedResult>) -> Result<UndirectedResult> {
    let r = r.ok_or(SurfError::NoSuchCycle)?;
    let cycle = CycleWalk::closed(g, r.cycle.darts).expect("realized darts exist in the input");
    Ok(UndirectedResult { cycle, sequence: r.sequence })
}

/// Shortest non-separating cycle: boundaries are pasted shut and the loop
/// pipeline keeps sequences with a non-zero class.
pub fn undirected_shortest_non_separating(g: &EmbeddedGraph) -> Result<UndirectedResult> {
    require_symmetric(g)?;
    let closed = paste_all(g);
    if closed.genus() == 0 {
        return Err(SurfError::NoSuchCycle);
    }
    let sys = greedy_system_of_loops(&closed, 0)?;
    let sig = ClassSignature::new(&sys.graph)?;
    let r =
        run_pipeline(&sys, &|x| crossing_sequence_homology_class(x, &sys, &sig).iter().any(|&b| b), &|c| {
            sig.is_nonseparating(&sys.graph, &c.darts)
        })?;
    into_original(g, r)
}

/// Shortest non-null-homologous cycle.
pub fn undirected_shortest_non_null_homologous(g: &EmbeddedGraph) -> Result<UndirectedResult> {
    require_symmetric(g)?;
    let s = g.stats();
    if s.g == 0 && s.b < 2 {
        return Err(SurfError::NoSuchCycle);
    }
    if s.b == 0 {
        return undirected_shortest_non_separating(g);
    }
    let sys = greedy_system_of_arcs(g)?;
    let sig = ClassSignature::new(&sys.graph)?;
    let r =
        run_pipeline(&sys, &|x| crossing_sequence_homology_class(x, &sys, &sig).iter().any(|&b| b), &|c| {
            !sig.is_null_homologous(&sys.graph, &c.darts)
        })?;
    into_original(g, r)
}

/// Shortest non-contractible cycle.
pub fn undirected_shortest_non_contractible(g: &EmbeddedGraph) -> Result<UndirectedResult> {
    require_symmetric(g)?;
    let s = g.stats();
    if s.g == 0 && s.b <= 1 {
        return Err(SurfError::NoSuchCycle);
    }
    let sys = if s.b == 0 { greedy_system_of_loops(g, 0)? } else { greedy_system_of_arcs(g)? };
    let r = run_pipeline(&sys, &|_| true, &|c| !bounds_disk(&sys.graph, c).unwrap_or(true))?;
    into_original(g, r)
}

/// Dispatches on the requested class.
pub fn shortest_undirected(g: &EmbeddedGraph, class: CycleClass) -> Result<UndirectedResult> {
    match class {
        CycleClass::NonSeparating => undirected_shortest_non_separating(g),
        CycleClass::NonNullHomologous => undirected_shortest_non_null_homologous(g),
        CycleClass::NonContractible => undirected_shortest_non_contractible(g),
    }
}
