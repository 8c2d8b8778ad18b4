// The genus-one differential equation from the 3x3 Klein matrix, its
// invariants, and the second-order identity.

use hyperwp::catalog::genus1;
use hyperwp::sl2::Derivation;

pub fn run() -> hyperwp::Result<()> {
    let ode = genus1::genus1_ode();
    println!("{} = 0   (weight {:?})", ode.relation, ode.weight);

    let (e, f) = (Derivation::e(1)?, Derivation::f(1)?);
    for (name, inv) in [("I", genus1::invariant_i()), ("J", genus1::invariant_j())] {
        println!("{name} = {inv}; e({name}) = {}, f({name}) = {}", e.apply(&inv), f.apply(&inv));
    }
    println!("normal form: {} = 0", genus1::normal_form_specialization());
    let second = genus1::genus1_second_order()?;
    println!("second order: {} = 0", second.relation);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("genus 1 example");
}
