//! Runs every predicate on every catalog family with its pinned parameters.

use pwords::{manifest, preset, verify};

fn main() -> pwords::Result<()> {
    for entry in manifest::entries() {
        let spec = preset(&entry.family)?;
        let start = std::time::Instant::now();
        let reports = verify::run_all(&spec, &entry.params)?;
        eprintln!("{} ({:.1?})", entry.family, start.elapsed());
        for r in reports {
            println!("{:<24} {:<40} {}", entry.family, r.predicate, r.verdict);
            for c in &r.conditions {
                println!("    {:<34} {:<12} {}", c.id, c.verdict.to_string(), c.detail);
            }
        }
    }
    Ok(())
}
