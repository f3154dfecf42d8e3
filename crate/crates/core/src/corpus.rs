//! Seeded generator for small validation instances, and the manifest that
//! accompanies a generated directory.
//!
//! Random surfaces start from a one-vertex schema of the requested genus (a
//! single loop for the sphere). Each hole is a short cycle on fresh vertices
//! hung off an existing corner by a bridge, so boundaries never share a
//! vertex. The graph then grows by edge subdivisions and chords inside
//! interior faces, and finally receives random weights.

use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builder::RotationBuilder;
use crate::error::{Result, SurfError};
use crate::fixtures::{self, GridDir};
use crate::format::{parse_surf, write_surf};
use crate::graph::EmbeddedGraph;
use crate::oracle::{brute_force_shortest, CycleClass};
use crate::weight::Weight;

/// Size limits for random instances.
#[derive(Debug, Clone, Copy)]
pub struct CorpusBounds {
    pub max_vertices: usize,
    pub max_genus: usize,
    pub max_boundaries: usize,
    pub max_weight: u64,
    /// Upper bound on chords added beyond the ones needed for connectivity.
    pub max_chords: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds { max_vertices: 14, max_genus: 2, max_boundaries: 3, max_weight: 20, max_chords: 4 }
    }
}

/// Expected oracle answer for one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Length(u64),
    NoSuchCycle,
}

impl std::fmt::Display for Expect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expect::Length(w) => write!(f, "{w}"),
            Expect::NoSuchCycle => f.write_str("NoSuchCycle"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub file: String,
    pub graph: EmbeddedGraph,
    pub origin: &'static str,
    pub expect: Vec<(CycleClass, Expect)>,
}

impl CorpusEntry {
    fn new(file: String, graph: EmbeddedGraph, origin: &'static str) -> Self {
        CorpusEntry { file, graph, origin, expect: Vec::new() }
    }

    /// Fills `expect` from the brute-force oracle.
    pub fn tag(&mut self) -> Result<()> {
        self.expect.clear();
        for class in CycleClass::ALL {
            let e = match brute_force_shortest(&self.graph, class) {
                Ok(c) => Expect::Length(c.length.raw()),
                Err(SurfError::NoSuchCycle) => Expect::NoSuchCycle,
                Err(e) => return Err(e),
            };
            self.expect.push((class, e));
        }
        Ok(())
    }

    pub fn manifest_line(&self) -> String {
        let s = self.graph.stats();
        let sym = if self.graph.is_symmetric() { "symmetric" } else { "asymmetric" };
        let mut line = format!(
            "{} origin={} n={} m={} g={} b={} weights={}",
            self.file, self.origin, s.n, s.m, s.g, s.b, sym
        );
        for (class, e) in &self.expect {
            write!(line, " expect.{}={}", class.short_name(), e).unwrap();
        }
        line
    }
}

/// Hand-built surfaces that every generated corpus contains.
pub fn canonical_fixtures() -> Vec<(String, EmbeddedGraph)> {
    let heavy_col = |d: fixtures::GridDart| {
        if d.col == 0 && d.dir == GridDir::North {
            5
        } else {
            1
        }
    };
    let one_way = |d: fixtures::GridDart| match d.dir {
        GridDir::East | GridDir::North => 1,
        GridDir::West | GridDir::South => 7,
    };
    vec![
        ("torus1".into(), fixtures::torus_one_vertex()),
        ("octagon".into(), fixtures::octagon_genus2()),
        ("cube".into(), fixtures::cube()),
        ("torus3x3".into(), fixtures::torus_grid(3, 3, |_| 1)),
        ("torus3x3_heavy".into(), fixtures::torus_grid(3, 3, heavy_col)),
        ("torus3x3_oneway".into(), fixtures::torus_grid(3, 3, one_way)),
        ("torus3x3_hole".into(), fixtures::torus_grid_with_hole(3, 3, |_| 1)),
        ("cylinder3x3".into(), fixtures::cylinder_grid(3, 3, |_| 1)),
        ("pants".into(), fixtures::pair_of_pants(|_| 1)),
        ("dumbbell".into(), fixtures::dumbbell(10, 1, 10)),
    ]
}

/// Shape parameters of one random surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub genus: usize,
    pub boundaries: usize,
    pub vertices: usize,
    pub chords: usize,
    pub symmetric: bool,
    /// Weigh hole edges in 1..=3 so that cycles around holes are cheap.
    pub light_holes: bool,
}

fn weight_pair(rng: &mut ChaCha8Rng, symmetric: bool, max: u64) -> (u64, u64) {
    let a = rng.gen_range(1..=max);
    let b = if symmetric { a } else { rng.gen_range(1..=max) };
    (a, b)
}

/// Random weights on every edge; edges containing a dart of `light` get
/// weights in 1..=3.
fn assign_weights(
    b: &mut RotationBuilder,
    rng: &mut ChaCha8Rng,
    symmetric: bool,
    max_weight: u64,
    light: &[usize],
) {
    for e in (0..b.twin.len()).step_by(2) {
        let max = if light.contains(&e) || light.contains(&(e + 1)) { 3.min(max_weight) } else { max_weight };
        let (f, r) = weight_pair(rng, symmetric, max);
        b.weight[e] = Weight::new(f);
        b.weight[e + 1] = Weight::new(r);
    }
}

/// Hangs a cycle of `k` fresh vertices off the corner after `corner` by a
/// bridge edge. Returns the cycle darts `c_i` (from vertex `i` to `i + 1`);
/// the face inside the cycle is the orbit of their twins.
fn hang_cycle(b: &mut RotationBuilder, corner: usize, k: usize) -> Vec<usize> {
    let ws: Vec<usize> = (0..k).map(|_| b.add_vertex()).collect();
    let (e, et) = b.new_edge(1, 1);
    b.insert_after(corner, e);
    let cyc: Vec<(usize, usize)> = (0..k).map(|_| b.new_edge(1, 1)).collect();
    for i in 0..k {
        let (c, _) = cyc[i];
        let (_, prev_t) = cyc[(i + k - 1) % k];
        b.rotation[ws[i]] = if i == 0 { vec![et, c, prev_t] } else { vec![c, prev_t] };
    }
    cyc.into_iter().map(|(c, _)| c).collect()
}

fn random_interior_corner(b: &RotationBuilder, rng: &mut ChaCha8Rng) -> usize {
    let graph = b.build().expect("intermediate graph");
    let corners: Vec<usize> =
        b.rotation.iter().flatten().copied().filter(|&d| !graph.is_boundary_dart(graph.twin(d))).collect();
    *corners.choose(rng).expect("an interior corner exists")
}

/// Grows a surface of the given shape with unit weights. Returns the
/// builder and the cycle darts of every hole.
fn grow_surface(rng: &mut ChaCha8Rng, shape: Shape) -> (RotationBuilder, Vec<usize>) {
    let mut b = if shape.genus == 0 {
        let mut b = RotationBuilder::new();
        let v = b.add_vertex();
        let (l, lt) = b.new_edge(1, 1);
        b.push_dart(v, l);
        b.push_dart(v, lt);
        b
    } else {
        RotationBuilder::from_graph(&fixtures::one_vertex_schema(shape.genus))
    };

    let budget = shape.vertices.saturating_sub(1);
    let mut hole_darts = Vec::new();
    for _ in 0..shape.boundaries {
        let k = rng.gen_range(1..=3usize.min((budget / shape.boundaries.max(1)).max(1)));
        let corner = random_interior_corner(&b, rng);
        let cyc = hang_cycle(&mut b, corner, k);
        b.mark_boundary(b.twin[cyc[0]]);
        hole_darts.extend(cyc);
    }

    let mut chords = 0;
    while b.rotation.len() < shape.vertices || chords < shape.chords {
        let graph = b.build().expect("intermediate graph");
        let grow = b.rotation.len() < shape.vertices && (chords >= shape.chords || rng.gen_bool(0.6));
        if grow {
            let d = rng.gen_range(0..graph.dart_count());
            b.subdivide(d, 1, 1);
            continue;
        }
        let faces: Vec<&Vec<usize>> =
            graph.interior_faces().into_iter().map(|f| &graph.faces()[f]).filter(|f| f.len() >= 2).collect();
        let Some(face) = faces.choose(rng) else {
            chords = shape.chords;
            continue;
        };
        let i = rng.gen_range(0..face.len());
        let mut j = rng.gen_range(0..face.len() - 1);
        if j >= i {
            j += 1;
        }
        b.add_edge_in_corners(graph.prev(face[i]), graph.prev(face[j]), 1, 1);
        chords += 1;
    }
    (b, hole_darts)
}

/// Builds a random surface of the given shape. The vertex count is a target:
/// holes need at least one fresh vertex each, so small targets may be
/// exceeded.
pub fn random_surface(rng: &mut ChaCha8Rng, shape: Shape, max_weight: u64) -> EmbeddedGraph {
    let (mut b, holes) = grow_surface(rng, shape);
    let light = if shape.light_holes { holes } else { Vec::new() };
    assign_weights(&mut b, rng, shape.symmetric, max_weight, &light);
    b.build().expect("generator preserves validity")
}

/// Two random surfaces joined by a tube of `ring` edges. Each end of the
/// tube is a cycle of `ring` fresh vertices whose edges are light, so the
/// cycle around the neck tends to be the cheapest non-contractible one.
pub fn necked_surface(
    rng: &mut ChaCha8Rng,
    left: Shape,
    right: Shape,
    ring: usize,
    max_weight: u64,
) -> EmbeddedGraph {
    let (mut a, _) = grow_surface(rng, left);
    let (bb, _) = grow_surface(rng, right);
    let corner_a = random_interior_corner(&a, rng);
    let ring_a = hang_cycle(&mut a, corner_a, ring);
    let mut bb = bb;
    let corner_b = random_interior_corner(&bb, rng);
    let ring_b = hang_cycle(&mut bb, corner_b, ring);

    let off = a.twin.len();
    for list in &bb.rotation {
        a.rotation.push(list.iter().map(|d| d + off).collect());
    }
    a.twin.extend(bb.twin.iter().map(|t| t + off));
    a.weight.extend(bb.weight.iter().copied());
    a.boundary.extend(bb.boundary.iter().map(|d| d + off));
    let ring_b: Vec<usize> = ring_b.iter().map(|d| d + off).collect();

    // The face inside each ring has its corner at ring vertex `i` right
    // after `c_i`. Walking one ring forward matches walking the other back.
    for i in 0..ring {
        let j = (ring - i) % ring;
        a.add_edge_in_corners(ring_a[i], ring_b[j], 1, 1);
    }
    let light: Vec<usize> = ring_a.iter().chain(&ring_b).copied().collect();
    assign_weights(&mut a, rng, left.symmetric, max_weight, &light);
    a.build().expect("necked surface is valid")
}

/// Family of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Plain(Shape),
    Necked(Shape, Shape, usize),
}

/// Deterministic shape for one random instance.
fn family_for(rng: &mut ChaCha8Rng, bounds: &CorpusBounds) -> Family {
    let genus = rng.gen_range(0..=bounds.max_genus);
    let boundaries = rng.gen_range(0..=bounds.max_boundaries);
    let symmetric = rng.gen_bool(0.5);
    let chords = rng.gen_range(0..=bounds.max_chords);
    let roll: f64 = rng.gen();
    if roll < 0.25 && genus + boundaries >= 2 {
        let ring = rng.gen_range(2..=3);
        let g_left = rng.gen_range(0..=genus);
        let b_left = rng.gen_range(0..=boundaries);
        let per_side = (bounds.max_vertices.saturating_sub(2 * ring) / 2).max(1);
        let side = |g: usize, b: usize, rng: &mut ChaCha8Rng| Shape {
            genus: g,
            boundaries: b,
            vertices: rng.gen_range((1 + b).min(per_side)..=per_side),
            chords: rng.gen_range(0..=bounds.max_chords / 2),
            symmetric,
            light_holes: false,
        };
        let l = side(g_left, b_left, rng);
        let r = side(genus - g_left, boundaries - b_left, rng);
        return Family::Necked(l, r, ring);
    }
    let min_n = 1 + boundaries;
    let lo = (min_n + 2).min(bounds.max_vertices);
    let vertices = rng.gen_range(lo..=bounds.max_vertices.max(lo));
    let light_holes = boundaries > 0 && roll > 0.8;
    Family::Plain(Shape { genus, boundaries, vertices, chords, symmetric, light_holes })
}

/// The canonical fixtures followed by seeded random instances, `count` in
/// total, each tagged with oracle answers.
pub fn generate_corpus(seed: u64, count: usize, bounds: CorpusBounds) -> Result<Vec<CorpusEntry>> {
    let mut out: Vec<CorpusEntry> = canonical_fixtures()
        .into_iter()
        .take(count)
        .map(|(name, g)| CorpusEntry::new(format!("{name}.surf"), g, "fixture"))
        .collect();
    let mut i = 0u64;
    while out.len() < count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i);
        let g = match family_for(&mut rng, &bounds) {
            Family::Plain(shape) => random_surface(&mut rng, shape, bounds.max_weight),
            Family::Necked(l, r, ring) => necked_surface(&mut rng, l, r, ring, bounds.max_weight),
        };
        i += 1;
        if g.vertex_count() > bounds.max_vertices {
            continue;
        }
        out.push(CorpusEntry::new(format!("r{:03}.surf", out.len()), g, "random"));
    }
    for e in &mut out {
        e.tag()?;
    }
    Ok(out)
}

pub const MANIFEST: &str = "manifest.txt";

/// Writes every entry plus `manifest.txt` into `dir`.
pub fn write_corpus(dir: &Path, entries: &[CorpusEntry]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut manifest = String::from("# file origin n m g b weights expect.<class>=<length|NoSuchCycle>\n");
    for e in entries {
        std::fs::write(dir.join(&e.file), write_surf(&e.graph))?;
        manifest.push_str(&e.manifest_line());
        manifest.push('\n');
    }
    std::fs::write(dir.join(MANIFEST), manifest)
}

/// One parsed manifest line.
#[derive(Debug, Clone)]
pub struct ManifestEntry {
    pub file: String,
    pub tags: Vec<(String, String)>,
}

impl ManifestEntry {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.tags.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn expect(&self, class: CycleClass) -> Option<Expect> {
        let v = self.get(&format!("expect.{}", class.short_name()))?;
        if v == "NoSuchCycle" {
            Some(Expect::NoSuchCycle)
        } else {
            v.parse().ok().map(Expect::Length)
        }
    }
}

pub fn parse_manifest(text: &str) -> Vec<ManifestEntry> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.split_whitespace();
            let file = parts.next().unwrap().to_string();
            let tags = parts
                .filter_map(|t| t.split_once('='))
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            ManifestEntry { file, tags }
        })
        .collect()
}

/// Loads every `.surf` file of a corpus directory with its manifest entry,
/// in manifest order when a manifest exists and by file name otherwise.
pub fn load_corpus(dir: &Path) -> Result<Vec<(ManifestEntry, EmbeddedGraph)>> {
    let io = |e: std::io::Error| SurfError::Parse { line: 0, msg: e.to_string() };
    let manifest = match std::fs::read_to_string(dir.join(MANIFEST)) {
        Ok(t) => parse_manifest(&t),
        Err(_) => {
            let mut names: Vec<String> = std::fs::read_dir(dir)
                .map_err(io)?
                .filter_map(|e| e.ok())
                .map(|e| e.file_name().to_string_lossy().into_owned())
                .filter(|n| n.ends_with(".surf"))
                .collect();
            names.sort();
            names.into_iter().map(|file| ManifestEntry { file, tags: Vec::new() }).collect()
        }
    };
    manifest
        .into_iter()
        .map(|m| {
            let text = std::fs::read_to_string(dir.join(&m.file)).map_err(io)?;
            let g = parse_surf(&text)?;
            Ok((m, g))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_shapes_match_request() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for genus in 0..=2 {
            for boundaries in 0..=3 {
                let shape =
                    Shape { genus, boundaries, vertices: 10, chords: 3, symmetric: false, light_holes: true };
                let g = random_surface(&mut rng, shape, 20);
                let s = g.stats();
                assert_eq!((s.g as usize, s.b), (genus, boundaries));
                assert!(s.n >= 10);
            }
        }
    }

    #[test]
    fn necks_add_genus_and_holes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (gl, bl, gr, br) in [(1, 0, 1, 0), (1, 1, 0, 2), (0, 1, 1, 0)] {
            let side = |genus, boundaries| Shape {
                genus,
                boundaries,
                vertices: 4,
                chords: 1,
                symmetric: true,
                light_holes: false,
            };
            for ring in 2..=3 {
                let g = necked_surface(&mut rng, side(gl, bl), side(gr, br), ring, 20);
                let s = g.stats();
                assert_eq!((s.g as usize, s.b), (gl + gr, bl + br));
            }
        }
    }

    #[test]
    fn manifest_round_trip() {
        let mut e = CorpusEntry::new("x.surf".into(), fixtures::torus_one_vertex(), "fixture");
        e.tag().unwrap();
        let parsed = parse_manifest(&e.manifest_line());
        assert_eq!(parsed[0].expect(CycleClass::NonSeparating), Some(Expect::Length(1)));
        assert_eq!(parsed[0].get("g"), Some("1"));
    }
}
