//! End-to-end runs of the `surfcyc` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use surfcyc::format::write_surf;
use surfcyc::{fixtures, EmbeddedGraph};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfcyc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, g: &EmbeddedGraph) -> String {
        let p = self.0.path().join(name);
        std::fs::write(&p, write_surf(g)).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

#[test]
fn stats_line() {
    let s = Scratch::new();
    let f = s.file("torus1.surf", &fixtures::torus_one_vertex());
    let o = bin(&["stats", &f]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "n=1 m=2 f=1 chi=0 g=1 b=0");
}

#[test]
fn queries_and_exit_codes() {
    let s = Scratch::new();
    let torus = s.file("torus3x3.surf", &fixtures::torus_grid(3, 3, |_| 1));
    let o = bin(&["nonsep", &torus]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.starts_with("class=nonsep length=3 cycle="), "{line}");

    let o = bin(&["noncon", "--undirected", &torus]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("class=noncon length=3"));
    assert!(lines[1].starts_with("X: "));

    // The torus needs two loops, so a cap of one refuses it.
    let capped = Command::new(env!("CARGO_BIN_EXE_surfcyc"))
        .args(["nonsep", "--undirected", &torus])
        .env("SURFCYC_MAX_GENERATORS", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));

    let cyl = s.file("cyl.surf", &fixtures::cylinder_grid(3, 3, |_| 1));
    assert_eq!(bin(&["nonsep", &cyl]).status.code(), Some(2));
    assert_eq!(bin(&["nonhom", &cyl]).status.code(), Some(0));

    let oneway = s.file(
        "oneway.surf",
        &fixtures::torus_grid(3, 3, |d| if matches!(d.dir, fixtures::GridDir::East) { 1 } else { 4 }),
    );
    assert_eq!(bin(&["nonsep", &oneway]).status.code(), Some(0));
    let o = bin(&["nonsep", "--undirected", &oneway]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("symmetric"));

    let bad = s.path("bad.surf");
    std::fs::write(&bad, "1 2 0\n0 2 1\n").unwrap();
    assert_eq!(bin(&["stats", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(bin(&["stats", "/no/such/file.surf"]).status.code(), Some(1));
    assert_ne!(bin(&["frobnicate"]).status.code(), Some(0));
}

/// Plain and JSON output describe the same cycle.
#[test]
fn json_matches_plain() {
    let s = Scratch::new();
    let f = s.file("pants.surf", &fixtures::pair_of_pants(|_| 1));
    for cmd in ["nonsep", "nonhom", "noncon"] {
        for extra in [None, Some("--undirected")] {
            let mut args = vec![cmd, f.as_str()];
            args.extend(extra);
            let plain = bin(&args);
            args.push("--json");
            let json = bin(&args);
            assert_eq!(plain.status.code(), json.status.code());
            let plain = stdout(&plain);
            let first = plain.lines().next().unwrap();
            let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
            let cycle = match &v["cycle"] {
                serde_json::Value::Array(a) => a.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
                _ => String::new(),
            };
            let rebuilt = match &v["length"] {
                serde_json::Value::Null => format!("class={} length=none", v["class"].as_str().unwrap()),
                w => format!("class={} length={w} cycle={cycle}", v["class"].as_str().unwrap()),
            };
            assert_eq!(first, rebuilt);
            if let Some(x) = v.get("crossings") {
                assert_eq!(plain.lines().nth(1).unwrap(), format!("X: {}", x.as_str().unwrap()));
            }
        }
    }
}

#[test]
fn basis_and_covers() {
    let s = Scratch::new();
    let f = s.file("oct.surf", &fixtures::octagon_genus2());
    let o = bin(&["basis", &f]);
    assert_eq!(stdout(&o).lines().count(), 4);

    let out = s.path("cover.surf");
    let o = bin(&["cover", &f, "--lambda", "1", "--kind", "restricted", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().any(|l| l.starts_with("pi ")));
    let o = bin(&["stats", out.to_str().unwrap()]);
    assert!(stdout(&o).ends_with("g=5 b=2\n"));

    let o = bin(&["cover", &f, "--lambda", "0", "--kind", "double"]);
    let doubled = surfcyc::format::parse_surf_file(&stdout(&o)).unwrap();
    assert_eq!(doubled.graph.vertex_count(), 2);
    assert_eq!(doubled.pi.unwrap().len(), 2);

    assert_eq!(bin(&["cover", &f, "--lambda", "9", "--kind", "double"]).status.code(), Some(1));

    // Genus zero: only the arc between the two rims.
    let cyl = s.file("cyl.surf", &fixtures::cylinder_grid(3, 3, |_| 1));
    let o = bin(&["basis", &cyl]);
    assert!(o.status.success());
    assert!(stdout(&o).trim().starts_with("lambda=0 kind=arc"));
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = bin(&["cover", &cyl, "--lambda", "0", "--kind", "double"]);
    assert!(o.status.success());
    let o = bin(&["cover", &cyl, "--lambda", "0", "--kind", "restricted"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_lines() {
    let s = Scratch::new();
    let f = s.file("cyl.surf", &fixtures::cylinder_grid(3, 3, |_| 1));
    let o = bin(&["oracle", &f, "--class", "noncon"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("class=noncon length=3 "));
    let o = bin(&["oracle", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn generate_is_deterministic_and_validates() {
    let s = Scratch::new();
    let (a, b) = (s.path("a"), s.path("b"));
    for dir in [&a, &b] {
        let o = bin(&["generate", dir.to_str().unwrap(), "--seed", "11", "--count", "25"]);
        assert!(o.status.success());
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 26);
    for n in &names {
        assert_eq!(std::fs::read(a.join(n)).unwrap(), std::fs::read(b.join(n)).unwrap());
    }
    let o = bin(&["validate", a.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "OK 25/25");
}

#[test]
fn shipped_corpus_validates() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus");
    let o = bin(&["validate", dir]);
    assert_eq!(stdout(&o).trim(), "OK 120/120");
    assert!(o.status.success());

    // The shipped files are exactly what the generator writes for seed 7.
    let s = Scratch::new();
    let fresh = s.path("fresh");
    assert!(bin(&["generate", fresh.to_str().unwrap(), "--seed", "7", "--count", "120"]).status.success());
    let shipped = std::path::Path::new(dir);
    for e in std::fs::read_dir(&fresh).unwrap() {
        let name = e.unwrap().file_name();
        assert_eq!(std::fs::read(fresh.join(&name)).unwrap(), std::fs::read(shipped.join(&name)).unwrap());
    }
}
