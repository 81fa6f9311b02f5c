//! Writes the per-point margins of one inequality as CSV to stdout, e.g. for
//! plotting.
//!
//!     cargo run --example margin_dump -- thm3.2 > margins.csv

use turan::verifier::{find_spec, margin_rows, write_margin_csv, ScanGrid};

fn main() -> turan::Result<()> {
    let id = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "thm3.1".to_string());
    let spec = find_spec(&id).ok_or_else(|| turan::Error::Domain(format!("unknown spec {id}")))?;
    let default = spec.default_grid();
    let grid = ScanGrid::new(
        default.n_values.into_iter().take(4).collect(),
        default.a_values,
        127,
    );
    let rows = margin_rows(&spec, &grid)?;
    write_margin_csv(&rows, std::io::stdout().lock())?;
    let worst = rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    eprintln!("{} rows, smallest margin {worst:.3e}", rows.len());
    Ok(())
}
