//! Genus one: the generic ℘ equation and its derivative.

use std::collections::HashMap;

use super::{Identity, Source};
use crate::curve::klein_matrix;
use crate::poly::{p, Poly};
use crate::rational::Rational;
use crate::sl2::Derivation;
use crate::symbol::Symbol;
use crate::Result;

/// `I = a0 a4 - 4 a1 a3 + 3 a2^2`.
pub fn invariant_i() -> Poly {
    p("a0*a4 - 4*a1*a3 + 3*a2^2")
}

/// `J = a0 a2 a4 - a0 a3^2 + 2 a1 a2 a3 - a2^3 - a1^2 a4`.
pub fn invariant_j() -> Poly {
    p("a0*a2*a4 - a0*a3^2 + 2*a1*a2*a3 - a2^3 - a1^2*a4")
}

/// `wp111^2 + det(h)/4`.
pub fn genus1_ode() -> Identity {
    let h = klein_matrix(1).expect("genus 1");
    let det = h.h.det().expect("square");
    let rel = p("wp[1,1,1]^2") + det.scale(&Rational::new(1, 4));
    Identity::new("ode", 1, rel, Source::Generated, "wp111^2 + det(h)/4")
}

/// `wp1111 - 6 wp11^2 + I/2`, obtained as `d/du1(ode) / (2 wp111)`.
pub fn genus1_second_order() -> Result<Identity> {
    let d = Derivation::du(1, 1)?;
    let derived = d.apply(&genus1_ode().relation);
    let rel = derived.exact_div(&p("2*wp[1,1,1]"))?;
    Ok(Identity::new("second-order", 1, rel, Source::Generated, "du1(ode) / (2 wp111)"))
}

/// The same relation as displayed.
pub fn genus1_second_order_printed() -> Identity {
    let rel = p("wp[1,1,1,1]") - p("6*wp[1,1]^2") + invariant_i().scale(&Rational::new(1, 2));
    Identity::new("second-order-printed", 1, rel, Source::PaperAsPrinted, "four-index display, genus 1")
}

/// The ODE with `a4 = a2 = 0`, `a3 = 1`, written as `wp'^2 - (4 wp^3 + 4 a1 wp + a0)`.
pub fn normal_form_specialization() -> Poly {
    let mut b = HashMap::new();
    b.insert(Symbol::a(4), Poly::zero());
    b.insert(Symbol::a(2), Poly::zero());
    b.insert(Symbol::a(3), Poly::one());
    genus1_ode().relation.substitute(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::make_generators;

    #[test]
    fn ode_expansion() {
        let ode = genus1_ode().relation;
        let expected = p("wp[1,1,1]^2 - 4*wp[1,1]^3") + &invariant_i() * &p("wp[1,1]") + invariant_j();
        assert_eq!(ode, expected);
        assert_eq!(ode.coeff_extract(Symbol::wp(&[1, 1]), 1), invariant_i());
        assert_eq!(genus1_ode().weight, Some(0));
    }

    #[test]
    fn invariants_are_invariant() {
        let (e, f, _) = make_generators(1).unwrap();
        for q in [invariant_i(), invariant_j(), genus1_ode().relation] {
            assert!(e.apply(&q).is_zero());
            assert!(f.apply(&q).is_zero());
        }
    }

    #[test]
    fn classical_normal_form() {
        assert_eq!(normal_form_specialization(), p("wp[1,1,1]^2 - 4*wp[1,1]^3 - 4*a1*wp[1,1] - a0"));
    }

    #[test]
    fn second_order() {
        let s = genus1_second_order().unwrap();
        assert_eq!(s.relation, genus1_second_order_printed().relation);
        let d = Derivation::du(1, 1).unwrap().apply(&genus1_ode().relation);
        let q = d.exact_div(&p("wp[1,1,1]")).unwrap();
        assert_eq!(q.ratio_to(&s.relation), Some(Rational::from(2)));
        let zero: HashMap<Symbol, Poly> = (0..5).map(|i| (Symbol::a(i), Poly::zero())).collect();
        assert_eq!(s.relation.substitute(&zero), p("wp[1,1,1,1] - 6*wp[1,1]^2"));
    }
}
