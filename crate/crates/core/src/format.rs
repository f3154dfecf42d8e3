//! The SURF v1 text format.
//!
//! ```text
//! n m b
//! <n lines: dart ids around each vertex, counterclockwise>
//! <2m lines: id origin head weight twin>      weight may be `inf`
//! boundary <dart>                             one per boundary face
//! pi <cover vertex> <base vertex> <level>     covers only, one per vertex
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Result, SurfError};
use crate::graph::{EmbeddedGraph, VertexId};
use crate::weight::Weight;

/// A parsed file: the graph and, for covers, the projection of each vertex.
#[derive(Debug, Clone)]
pub struct SurfFile {
    pub graph: EmbeddedGraph,
    pub pi: Option<Vec<(VertexId, i64)>>,
}

fn perr(line: usize, msg: impl Into<String>) -> SurfError {
    SurfError::Parse { line, msg: msg.into() }
}

fn num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| perr(line, format!("expected a nonnegative integer, got `{tok}`")))
}

pub fn parse_surf(text: &str) -> Result<EmbeddedGraph> {
    Ok(parse_surf_file(text)?.graph)
}

pub fn parse_surf_file(text: &str) -> Result<SurfFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 3 {
        return Err(perr(hl, "header must be `n m b`"));
    }
    let (n, m, b) = (num(h[0], hl)?, num(h[1], hl)?, num(h[2], hl)?);

    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let (ln, l) = lines.next().ok_or_else(|| perr(hl, format!("missing rotation of vertex {v}")))?;
        let darts = l.split_whitespace().map(|t| num(t, ln)).collect::<Result<Vec<_>>>()?;
        rotation.push(darts);
    }

    let nd = 2 * m;
    let mut twin = vec![usize::MAX; nd];
    let mut weight = vec![Weight::ZERO; nd];
    let mut ends = vec![(0, 0); nd];
    let mut seen = vec![false; nd];
    for _ in 0..nd {
        let (ln, l) = lines.next().ok_or_else(|| perr(hl, "missing dart lines"))?;
        let t: Vec<&str> = l.split_whitespace().collect();
        if t.len() != 5 {
            return Err(perr(ln, "dart line must be `id origin head weight twin`"));
        }
        let id = num(t[0], ln)?;
        if id >= nd || seen[id] {
            return Err(perr(ln, format!("dart id {id} out of range or repeated")));
        }
        seen[id] = true;
        ends[id] = (num(t[1], ln)?, num(t[2], ln)?);
        weight[id] = t[3].parse::<Weight>().map_err(|e| {
            if t[3].starts_with('-') {
                SurfError::NegativeWeight(id)
            } else {
                perr(ln, e)
            }
        })?;
        twin[id] = num(t[4], ln)?;
    }

    let mut boundary = Vec::new();
    let mut pi: Option<Vec<(VertexId, i64)>> = None;
    for (ln, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.first().copied() {
            Some("boundary") if t.len() == 2 => boundary.push(num(t[1], ln)?),
            Some("pi") if t.len() == 4 => {
                let list = pi.get_or_insert_with(|| vec![(usize::MAX, 0); n]);
                let v = num(t[1], ln)?;
                if v >= n {
                    return Err(perr(ln, format!("pi entry for unknown vertex {v}")));
                }
                let level = t[3].parse().map_err(|_| perr(ln, "bad level"))?;
                list[v] = (num(t[2], ln)?, level);
            }
            _ => return Err(perr(ln, format!("unexpected line `{l}`"))),
        }
    }
    if boundary.len() != b {
        return Err(perr(hl, format!("header declares {b} boundaries, found {}", boundary.len())));
    }
    if let Some(p) = &pi {
        if p.iter().any(|&(v, _)| v == usize::MAX) {
            return Err(perr(hl, "pi section does not cover every vertex"));
        }
    }

    let graph = EmbeddedGraph::from_rotations(rotation, twin, weight, &boundary)?;
    for (d, &(o, h)) in ends.iter().enumerate() {
        if graph.origin(d) != o || graph.head(d) != h {
            return Err(SurfError::MalformedPermutation(format!(
                "dart {d} is listed as {o}->{h} but the rotation system says {}->{}",
                graph.origin(d),
                graph.head(d)
            )));
        }
    }
    if graph.boundary_count() != b {
        return Err(SurfError::MalformedPermutation("two boundary lines name the same face".into()));
    }
    Ok(SurfFile { graph, pi })
}

pub fn write_surf(g: &EmbeddedGraph) -> String {
    write_surf_with_pi(g, None)
}

pub fn write_surf_with_pi(g: &EmbeddedGraph, pi: Option<&[(VertexId, i64)]>) -> String {
    let mut out = String::new();
    let reps = g.boundary_representatives();
    writeln!(out, "{} {} {}", g.vertex_count(), g.edge_count(), reps.len()).unwrap();
    for v in 0..g.vertex_count() {
        let line: Vec<String> = g.rotation(v).iter().map(|d| d.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    for d in 0..g.dart_count() {
        writeln!(out, "{d} {} {} {} {}", g.origin(d), g.head(d), g.weight(d), g.twin(d)).unwrap();
    }
    for r in reps {
        writeln!(out, "boundary {r}").unwrap();
    }
    if let Some(pi) = pi {
        for (v, &(base, level)) in pi.iter().enumerate() {
            writeln!(out, "pi {v} {base} {level}").unwrap();
        }
    }
    out
}
