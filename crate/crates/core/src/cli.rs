//! Command-line front end.
//!
//! Every query prints one line per result, either as `key=value` pairs or,
//! with `--json`, as one JSON object per line. Exit status is 0 on success,
//! 2 when no cycle of the requested class exists and 1 for anything else.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::corpus::{generate_corpus, load_corpus, write_corpus, CorpusBounds, Expect, ManifestEntry};
use crate::covers::{cyclic_double_cover, restricted_cyclic_cover};
use crate::directed::shortest_directed;
use crate::error::SurfError;
use crate::format::{parse_surf, write_surf_with_pi};
use crate::graph::{CycleWalk, EmbeddedGraph};
use crate::homology::{boundary_arcs, default_arc_source, partial_homology_basis};
use crate::oracle::{brute_force_shortest, CycleClass};
use crate::undirected::shortest_undirected;

#[derive(Debug, Parser)]
#[command(name = "surfcyc", version, about = "Shortest non-trivial cycles on surfaces")]
pub struct Cli {
    /// Emit JSON lines instead of key=value text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex, edge, face and boundary counts, Euler characteristic and genus.
    Stats { file: PathBuf },
    /// The homology basis cycles followed by the boundary arcs.
    Basis { file: PathBuf },
    /// Shortest non-separating cycle.
    Nonsep(Query),
    /// Shortest non-null-homologous cycle.
    Nonhom(Query),
    /// Shortest non-contractible cycle.
    Noncon(Query),
    /// Build a covering graph over a basis cycle or boundary arc.
    Cover {
        file: PathBuf,
        /// Index into the list printed by `basis`.
        #[arg(long)]
        lambda: usize,
        #[arg(long, value_enum)]
        kind: CoverChoice,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive search for the shortest cycle of a class.
    Oracle {
        file: PathBuf,
        /// nonsep, nonhom or noncon; all three if omitted.
        #[arg(long)]
        class: Option<CycleClass>,
    },
    /// Compare the fast algorithms with the exhaustive search on every file
    /// of a corpus directory.
    Validate { dir: PathBuf },
    /// Write a seeded random corpus with a tagged manifest.
    Generate {
        dir: PathBuf,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 120)]
        count: usize,
    },
}

#[derive(Debug, clap::Args)]
pub struct Query {
    pub file: PathBuf,
    /// Use the undirected algorithm; weights must be symmetric.
    #[arg(long)]
    pub undirected: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CoverChoice {
    Double,
    Restricted,
}

/// How a command ended, mapped onto the process exit status.
#[derive(Debug)]
enum Failure {
    NoSuchCycle,
    Input(String),
}

impl From<SurfError> for Failure {
    fn from(e: SurfError) -> Self {
        match e {
            SurfError::NoSuchCycle => Failure::NoSuchCycle,
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read_graph(path: &Path) -> std::result::Result<EmbeddedGraph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_surf(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn cycle_line(json: bool, class: CycleClass, c: &CycleWalk) -> String {
    if json {
        json!({ "class": class.short_name(), "length": c.length.raw(), "cycle": c.darts }).to_string()
    } else {
        format!("class={class} length={} cycle={}", c.length, c.dart_list())
    }
}

fn none_line(json: bool, class: CycleClass) -> String {
    if json {
        json!({ "class": class.short_name(), "length": null, "cycle": null }).to_string()
    } else {
        format!("class={class} length=none")
    }
}

fn query(json: bool, class: CycleClass, q: &Query) -> Outcome {
    let g = read_graph(&q.file)?;
    let found = if q.undirected {
        shortest_undirected(&g, class).map(|r| (r.cycle, Some(r.sequence)))
    } else {
        shortest_directed(&g, class).map(|c| (c, None))
    };
    match found {
        Ok((cycle, sequence)) => {
            if json {
                let mut v = json!({ "class": class.short_name(), "length": cycle.length.raw(), "cycle": cycle.darts });
                if let Some(x) = &sequence {
                    v["crossings"] = json!(x.to_string());
                }
                emit(v.to_string());
            } else {
                emit(cycle_line(false, class, &cycle));
                if let Some(x) = sequence {
                    emit(format!("X: {x}"));
                }
            }
            Ok(())
        }
        Err(SurfError::NoSuchCycle) => {
            emit(none_line(json, class));
            Err(Failure::NoSuchCycle)
        }
        Err(e) => Err(e.into()),
    }
}

/// Basis cycles of the closed-up surface, then arcs from the first boundary.
fn lambda_family(g: &EmbeddedGraph) -> crate::Result<Vec<CycleWalk>> {
    let mut all = match partial_homology_basis(g) {
        Ok(b) => b.cycles,
        Err(SurfError::GenusZero) => Vec::new(),
        Err(e) => return Err(e),
    };
    if g.boundary_count() >= 2 {
        all.extend(boundary_arcs(g, default_arc_source(g).unwrap())?.arcs);
    }
    Ok(all)
}

fn basis(json: bool, file: &Path) -> Outcome {
    let g = read_graph(file)?;
    for (i, c) in lambda_family(&g)?.iter().enumerate() {
        let kind = if c.closed { "cycle" } else { "arc" };
        emit(if json {
            json!({ "index": i, "kind": kind, "darts": c.darts }).to_string()
        } else {
            format!("lambda={i} kind={kind} darts={}", c.dart_list())
        });
    }
    Ok(())
}

fn cover(file: &Path, lambda: usize, kind: CoverChoice, output: Option<&Path>) -> Outcome {
    let g = read_graph(file)?;
    let family = lambda_family(&g)?;
    let l = family
        .get(lambda)
        .ok_or_else(|| Failure::Input(format!("lambda index {lambda} out of range (0..{})", family.len())))?;
    let cover = match kind {
        CoverChoice::Double => cyclic_double_cover(&g, l)?,
        CoverChoice::Restricted => restricted_cyclic_cover(&g, l)?,
    };
    let text = write_surf_with_pi(&cover.graph, Some(&cover.pi_vertex));
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn oracle(json: bool, file: &Path, class: Option<CycleClass>) -> Outcome {
    let g = read_graph(file)?;
    let classes = class.map_or(CycleClass::ALL.to_vec(), |c| vec![c]);
    let mut missing = false;
    for class in classes {
        match brute_force_shortest(&g, class) {
            Ok(c) => emit(cycle_line(json, class, &c)),
            Err(SurfError::NoSuchCycle) => {
                emit(none_line(json, class));
                missing = true;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if missing {
        Err(Failure::NoSuchCycle)
    } else {
        Ok(())
    }
}

fn length_of(r: crate::Result<u64>) -> crate::Result<Expect> {
    match r {
        Ok(w) => Ok(Expect::Length(w)),
        Err(SurfError::NoSuchCycle) => Ok(Expect::NoSuchCycle),
        Err(e) => Err(e),
    }
}

/// Problems found on one corpus file; empty when everything agrees.
pub fn check_instance(entry: &ManifestEntry, g: &EmbeddedGraph) -> Vec<String> {
    let mut problems = Vec::new();
    for class in CycleClass::ALL {
        let truth = match length_of(brute_force_shortest(g, class).map(|c| c.length.raw())) {
            Ok(t) => t,
            Err(e) => {
                problems.push(format!("{class}: oracle failed: {e}"));
                continue;
            }
        };
        if let Some(tag) = entry.expect(class) {
            if tag != truth {
                problems.push(format!("{class}: manifest says {tag}, oracle says {truth}"));
            }
        }
        let mut compare = |mode: &str, got: crate::Result<Expect>| match got {
            Ok(got) if got == truth => {}
            Ok(got) => problems.push(format!("{class} {mode}: got {got}, oracle says {truth}")),
            Err(e) => problems.push(format!("{class} {mode}: {e}")),
        };
        compare("directed", length_of(shortest_directed(g, class).map(|c| c.length.raw())));
        if g.is_symmetric() {
            compare("undirected", length_of(shortest_undirected(g, class).map(|r| r.cycle.length.raw())));
        }
    }
    problems
}

fn validate(json: bool, dir: &Path) -> Outcome {
    let corpus = load_corpus(dir)?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(corpus.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut results: Vec<(usize, Vec<String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let Some((entry, g)) = corpus.get(i) else { break };
                        mine.push((i, check_instance(entry, g)));
                    }
                    mine
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    results.sort_by_key(|r| r.0);
    let passed = results.iter().filter(|r| r.1.is_empty()).count();
    for (i, problems) in &results {
        for p in problems {
            let file = &corpus[*i].0.file;
            emit(if json {
                json!({ "file": file, "problem": p }).to_string()
            } else {
                format!("FAIL {file}: {p}")
            });
        }
    }
    let total = results.len();
    let status = if passed == total { "OK" } else { "FAIL" };
    emit(if json {
        json!({ "status": status, "passed": passed, "total": total }).to_string()
    } else {
        format!("{status} {passed}/{total}")
    });
    if passed == total {
        Ok(())
    } else {
        Err(Failure::Input(format!("{} of {total} instances disagree", total - passed)))
    }
}

fn generate(dir: &Path, seed: u64, count: usize) -> Outcome {
    let entries = generate_corpus(seed, count, CorpusBounds::default())?;
    write_corpus(dir, &entries).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    emit(format!("wrote {} instances to {}", entries.len(), dir.display()));
    Ok(())
}

fn dispatch(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Stats { file } => {
            let s = read_graph(file)?.stats();
            emit(if json {
                json!({ "n": s.n, "m": s.m, "f": s.f, "chi": s.chi, "g": s.g, "b": s.b }).to_string()
            } else {
                s.to_string()
            });
            Ok(())
        }
        Command::Basis { file } => basis(json, file),
        Command::Nonsep(q) => query(json, CycleClass::NonSeparating, q),
        Command::Nonhom(q) => query(json, CycleClass::NonNullHomologous, q),
        Command::Noncon(q) => query(json, CycleClass::NonContractible, q),
        Command::Cover { file, lambda, kind, output } => cover(file, *lambda, *kind, output.as_deref()),
        Command::Oracle { file, class } => oracle(json, file, *class),
        Command::Validate { dir } => validate(json, dir),
        Command::Generate { dir, seed, count } => generate(dir, *seed, *count),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::NoSuchCycle) => ExitCode::from(2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
