// Every named identity set with its size and provenance.

use hyperwp::catalog::{catalog_set, expected_to_vanish, set_names};

pub fn run() -> hyperwp::Result<()> {
    for g in 1..=3 {
        for name in set_names(g).iter().filter(|n| **n != "all") {
            let set = catalog_set(g, name)?;
            let sources: std::collections::BTreeSet<String> = set.members.iter().map(|m| m.source.to_string()).collect();
            let tag = if expected_to_vanish(g, name) { "" } else { "  (printed, not all expected to hold)" };
            println!("genus {g} {name:<22} {:>3} identities  [{}]{tag}", set.len(), sources.into_iter().collect::<Vec<_>>().join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("catalog example");
}
