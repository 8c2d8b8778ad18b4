// The four-index relations in Baker's shifted two-index functions: the
// printed list against the shifted covariant one.

use hyperwp::catalog::baker::{appendix_comparison, baker_matrix_check};

pub fn run() -> hyperwp::Result<()> {
    println!("Baker matrix agrees with the shifted Klein matrix: {}", baker_matrix_check().is_empty());
    for row in appendix_comparison() {
        if row.matches {
            println!("{:<8} matches", row.symbol);
        } else {
            println!("{:<8} differs by {}", row.symbol, row.difference);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("baker example");
}
