//! Generate a small seeded corpus, write it out, load it back and check
//! every instance against the oracle.
//!
//! `cargo run --release --example corpus [SEED] [COUNT]`

use surfcyc::cli::check_instance;
use surfcyc::corpus::{generate_corpus, load_corpus, write_corpus, CorpusBounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(Ok(7), |s| s.parse())?;
    let count = args.next().map_or(Ok(30), |s| s.parse())?;

    let entries = generate_corpus(seed, count, CorpusBounds::default())?;
    let dir = std::env::temp_dir().join(format!("surfcyc-corpus-{seed}"));
    write_corpus(&dir, &entries)?;
    println!("wrote {} instances to {}", entries.len(), dir.display());

    let mut failures = 0;
    for (entry, g) in load_corpus(&dir)? {
        let problems = check_instance(&entry, &g);
        let tags: Vec<String> = entry.tags.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{:<16} {} {}",
            entry.file,
            if problems.is_empty() { "ok  " } else { "FAIL" },
            tags.join(" ")
        );
        for p in &problems {
            println!("    {p}");
        }
        failures += !problems.is_empty() as usize;
    }
    println!("{} of {} agree", entries.len() - failures, entries.len());
    Ok(())
}
