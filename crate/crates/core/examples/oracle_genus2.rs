// Solve the genus-two functions on a concrete curve and verify the
// catalogued sets in its function field.
//
// `cargo run --example oracle_genus2 -- 1,1,1,2,1,1,4`

use hyperwp::catalog::catalog_set;
use hyperwp::oracle::instance::parse_curve;
use hyperwp::oracle::{make_instance, Oracle};
use hyperwp::Symbol;

pub fn run_on(coeffs: &str) -> hyperwp::Result<()> {
    let inst = make_instance(2, &parse_curve(coeffs)?)?;
    let o = Oracle::new(inst)?;
    println!("{}", o.instance.describe());
    for line in &o.assignment.stage_log {
        println!("  {line}");
    }
    println!("  wp11 = {}", o.assignment.values[&Symbol::wp(&[1, 1])]);
    println!("  integrable: {}", o.assignment.integrable());
    for name in ["bilinear", "kummer", "quadratic", "fourindex"] {
        let report = o.report(&catalog_set(2, name)?, 1);
        println!("  {name}: {}/{} vanish", report.verdicts.iter().filter(|v| v.vanishes).count(), report.verdicts.len());
    }
    Ok(())
}

pub fn run() -> hyperwp::Result<()> {
    run_on("1,1,1,2,1,1,4")
}

#[allow(dead_code)]
fn main() {
    let arg = std::env::args().nth(1);
    run_on(arg.as_deref().unwrap_or("1,1,1,2,1,1,4")).expect("oracle example");
}
