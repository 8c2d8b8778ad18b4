// The symbolic and oracle suites, as run by `wpid check`.

use hyperwp::suite::{oracle_suite, symbolic_suite, OracleConfig};

pub fn run_genus(g: u8, oracle: bool) -> hyperwp::Result<bool> {
    let mut report = symbolic_suite(g)?;
    if oracle {
        report.merge(oracle_suite(g, &OracleConfig::default())?);
    }
    print!("{}", report.render_text());
    Ok(report.passed())
}

pub fn run() -> hyperwp::Result<()> {
    assert!(run_genus(1, true)?);
    assert!(run_genus(2, true)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let g: u8 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ok = run_genus(g, true).expect("suite");
    std::process::exit(if ok { 0 } else { 1 });
}
