// The generators e, f, h as derivations, and multiplets grown from a
// highest weight by repeated lowering.

use hyperwp::catalog::genus2;
use hyperwp::sl2::{check_commutators, generate_multiplet, weight, Derivation};
use hyperwp::p;

pub fn run() -> hyperwp::Result<()> {
    for g in 1..=3 {
        let r = check_commutators(g)?;
        println!("genus {g}: {} commutator checks, {} failures", r.checked, r.failures.len());
    }

    let e = Derivation::e(2)?;
    let f = Derivation::f(2)?;
    println!("e(wp12) = {}", e.apply(&p("wp[1,2]")));
    println!("f(wp12) = {}", f.apply(&p("wp[1,2]")));

    let hw = genus2::baker_highest_weight();
    let m = generate_multiplet(&hw, 2, 10)?;
    let factors = m.check_duality().expect("dual chain");
    println!("baker4: dimension {}", m.dimension());
    for (i, q) in m.members.iter().enumerate() {
        let link = if i == 0 { "0".to_string() } else { format!("{} * m{}", factors[i - 1], i - 1) };
        println!("  m{i} weight {:?}, e(m{i}) = {link}", weight(q, 2));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("sl2 example");
}
