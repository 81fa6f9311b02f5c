//! Scans every registered inequality on its default grid and prints a summary.
//!
//!     cargo run --release --example verify_theorems

use turan::verifier::{registry, scan_inequality};

fn main() -> turan::Result<()> {
    println!(
        "{:<16} {:>9} {:>12} {:>6} {:>8}  statement",
        "spec", "points", "min margin", "viol", "eq hits"
    );
    for spec in registry() {
        let r = scan_inequality(&spec, &spec.default_grid())?;
        println!(
            "{:<16} {:>9} {:>12.3e} {:>6} {:>8}  {}",
            spec.id,
            r.points_evaluated,
            r.min_margin,
            r.violation_count,
            r.equality_hit_count,
            spec.statement
        );
        for hit in &r.unexpected_equality_hits {
            println!("    unexpected equality at {:?}", hit.point);
        }
    }
    Ok(())
}
