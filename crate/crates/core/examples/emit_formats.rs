// One identity set in the three output formats, and the JSON round trip.

use hyperwp::catalog::catalog_set;
use hyperwp::emit::{parse_json, render, Format};

pub fn run() -> hyperwp::Result<()> {
    let set = catalog_set(2, "bilinear")?;
    for format in [Format::Text, Format::Latex, Format::Json] {
        println!("--- {format:?}");
        print!("{}", render(&set, format));
    }
    let back = parse_json(&render(&set, Format::Json))?;
    assert!(set.members.iter().zip(&back).all(|(m, (_, q))| m.relation == *q));
    println!("--- {} relations re-parsed exactly", back.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("emit example");
}
