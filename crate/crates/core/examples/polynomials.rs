// Exact polynomial arithmetic: the canonical text format, products,
// derivatives and a fraction-free determinant.

use hyperwp::matrix::PolyMatrix;
use hyperwp::{p, Poly, Rational, Symbol};

pub fn run() -> hyperwp::Result<()> {
    let q: Poly = "1/2*a0*wp[1,1]^2 - 3*wp[1,1,1] + x1*y1".parse().expect("valid literal");
    println!("q            = {q}");
    println!("q^2          = {}", q.pow(2));
    println!("d q / d wp11 = {}", q.diff(Symbol::wp(&[1, 1])));

    // canonical text round-trips
    let back: Poly = q.to_string().parse().expect("canonical text");
    assert_eq!(back, q);

    let m = PolyMatrix::from_rows(vec![
        vec![p("wp[1,1]"), p("a1"), p("x")],
        vec![p("a1"), p("wp[2,2]"), p("1/3")],
        vec![p("x"), p("1/3"), p("wp[1,2]")],
    ]);
    let bareiss = m.det_bareiss()?;
    let laplace = m.det_cofactor()?;
    assert_eq!(bareiss, laplace);
    println!("det          = {bareiss}");

    let r = Rational::new(6, -4);
    println!("6/-4         = {r}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("polynomials example");
}
