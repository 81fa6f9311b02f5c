//! Where the bound x(π-x)/π overtakes sin(x)·min{1, 2(1+cos x)}.
//!
//!     cargo run --example crossing_point

use turan::verifier::{crossing_gap, crossing_point};

fn main() -> turan::Result<()> {
    let x1 = crossing_point()?;
    println!("x1 = {x1:.12}");
    for dx in [-0.5, -0.1, 0.0, 0.1, 0.5] {
        println!("gap({:.4}) = {:+.6e}", x1 + dx, crossing_gap(x1 + dx));
    }
    Ok(())
}
