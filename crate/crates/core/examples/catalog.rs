//! Recomputes every catalog entry and compares it with the published data.

use drg_resistance::catalog::verify_all;
use drg_resistance::exact::fraction_string;

fn main() -> drg_resistance::error::Result<()> {
    let checks = verify_all()?;
    for c in &checks {
        println!(
            "{:<36} {:<9} n={:<5} ratio {:<10} published {:<8} main {} {}",
            c.name,
            c.table.tag(),
            c.vertices,
            fraction_string(&c.ratio),
            c.published_ratio.unwrap_or("-"),
            c.main_bound,
            if c.ok() { "ok" } else { "MISMATCH" }
        );
    }
    let failed = checks.iter().filter(|c| !c.ok()).count();
    println!("{} entries, {failed} mismatches", checks.len());
    Ok(())
}
