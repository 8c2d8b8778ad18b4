// Klein matrices and covariant polar forms for genus 1 to 3, with the
// genus-2 normal form.

use hyperwp::curve::{
    antidiagonal_check, classical_genus2_polar, genus2_normal_form, klein_matrix, polar_form, tangency_check,
};

pub fn run() -> hyperwp::Result<()> {
    for g in 1..=3 {
        let km = klein_matrix(g)?;
        let pf = polar_form(g, 1)?;
        let inv = pf.invariants();
        let tan = tangency_check(&pf);
        println!("genus {g}: {}x{} Klein matrix, antidiagonals ok: {}", km.size(), km.size(), antidiagonal_check(&km).passed());
        println!("  F~ = {}", pf.ftilde);
        println!("  invariants {inv:?}");
        println!("  tangency multiplicity {} (order {})", tan.multiplicity, tan.required);
    }
    let pf2 = polar_form(2, 1)?;
    let normal = genus2_normal_form(&pf2);
    println!("genus-2 normal form: {normal}");
    println!("classical form:      {}", classical_genus2_polar(1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("polar forms example");
}
