// Printed displays adjudicated by the oracle: which lines hold, which do
// not, and the corrected forms.

use hyperwp::oracle::discrepancy::DiscrepancyReport;

pub fn run() -> hyperwp::Result<()> {
    let report = DiscrepancyReport::build()?;
    print!("{}", report.render_text());
    println!();
    println!("certified lines agree after the shift: {}", report.baker_equivalence_holds());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("discrepancy example");
}
