use std::sync::OnceLock;

use proptest::prelude::*;

use hyperwp::emit::{poly_from_terms, terms_value};
use hyperwp::matrix::PolyMatrix;
use hyperwp::oracle::xpoly::XPoly;
use hyperwp::oracle::{default_curves, Oracle};
use hyperwp::sl2::Derivation;
use hyperwp::{Monomial, Poly, Rational, Symbol};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn poly_over(pool: Vec<Symbol>, max_terms: usize) -> impl Strategy<Value = Poly> {
    let n = pool.len();
    prop::collection::vec((rational(), prop::collection::vec(0u32..3, n)), 0..max_terms).prop_map(move |terms| {
        Poly::from_terms(terms.into_iter().map(|(c, exps)| {
            let pairs: Vec<(Symbol, u32)> = pool.iter().copied().zip(exps).filter(|(_, e)| *e > 0).collect();
            (Monomial::from_pairs(pairs), c)
        }))
    })
}

fn covariant_pool() -> Vec<Symbol> {
    vec![
        Symbol::a(0),
        Symbol::a(3),
        Symbol::wp(&[1, 1]),
        Symbol::wp(&[1, 2]),
        Symbol::wp(&[2, 2]),
        Symbol::wp(&[1, 2, 2]),
        Symbol::x(),
    ]
}

fn poly() -> impl Strategy<Value = Poly> {
    poly_over(covariant_pool(), 6)
}

fn point_poly() -> impl Strategy<Value = Poly> {
    poly_over(vec![Symbol::point_x(1), Symbol::point_x(2), Symbol::point_y(1), Symbol::point_y(2)], 4)
}

fn genus2_oracle() -> &'static Oracle {
    static O: OnceLock<Oracle> = OnceLock::new();
    O.get_or_init(|| Oracle::new(default_curves(2).unwrap().remove(0)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let back: Poly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(poly_from_terms(&terms_value(&a)).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn derivations_obey_leibniz(a in poly(), b in poly()) {
        for d in [Derivation::e(2).unwrap(), Derivation::f(2).unwrap(), Derivation::h(2).unwrap()] {
            prop_assert_eq!(d.apply(&(&a * &b)), &(&d.apply(&a) * &b) + &(&a * &d.apply(&b)));
        }
    }

    #[test]
    fn commutator_on_polynomials(a in poly()) {
        let (e, f, h) = (Derivation::e(2).unwrap(), Derivation::f(2).unwrap(), Derivation::h(2).unwrap());
        prop_assert_eq!(&e.apply(&f.apply(&a)) - &f.apply(&e.apply(&a)), h.apply(&a));
    }

    #[test]
    fn bareiss_agrees_with_cofactor(entries in prop::collection::vec(poly_over(covariant_pool(), 3), 16)) {
        let m = PolyMatrix::new(4, 4, entries);
        prop_assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn xpoly_division_by_pair_factor(a in poly_over(vec![Symbol::point_x(1), Symbol::point_x(2), Symbol::point_x(3)], 5)) {
        let (x, _) = XPoly::from_poly(&a).unwrap();
        let prod = &x * &XPoly::difference(1, 3);
        prop_assert!(prod.vanishes_on_diagonal(1, 3));
        prop_assert_eq!(prod.div_difference(1, 3), Some(x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_evaluation_is_a_ring_map(a in point_poly(), b in point_poly()) {
        let o = genus2_oracle();
        let (ea, eb) = (o.eval(&a).unwrap(), o.eval(&b).unwrap());
        prop_assert_eq!(o.eval(&(&a * &b)).unwrap(), (&ea * &eb).reduced());
        prop_assert_eq!(o.eval(&(&a + &b)).unwrap(), (ea.clone() + &eb).reduced());
        prop_assert!((ea.clone() - &ea).reduced().is_zero());
    }

    #[test]
    fn field_elements_commute(a in point_poly(), b in point_poly()) {
        let o = genus2_oracle();
        let (ea, eb) = (o.eval(&a).unwrap(), o.eval(&b).unwrap());
        prop_assert_eq!((&ea * &eb).reduced(), (&eb * &ea).reduced());
    }

    #[test]
    fn curve_relation_holds_in_the_field(a in point_poly()) {
        // y1^2 = a(x1), so multiplying by y1^2 - a(x1) gives zero
        let o = genus2_oracle();
        let mut rhs = Poly::zero();
        for (i, c) in o.instance.a.iter().enumerate() {
            let binom = Rational::from_int(num_binom(6, i as u64));
            rhs = rhs + Poly::var(Symbol::point_x(1)).pow(i as u32).scale(&(c * &binom));
        }
        let rel = Poly::var(Symbol::point_y(1)).pow(2) - rhs;
        prop_assert!(o.eval(&(&a * &rel)).unwrap().is_zero());
    }
}

fn num_binom(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}
