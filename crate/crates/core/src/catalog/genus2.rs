//! Genus two: the bilinear system, the Kummer quartic, the bordered
//! quadratic identity and the four-index multiplet.

use super::{mechanical, multiplet_identities, rel, Identity, IdentitySet, Source};
use crate::curve::klein_matrix;
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::poly::{p, Monomial, Poly};
use crate::rational::Rational;
use crate::sl2::{generate_multiplet, Derivation};
use crate::symbol::Symbol;
use crate::Result;

/// `(wp222, -wp122, wp112, -wp111)`.
pub fn kernel_vector() -> Vec<Poly> {
    vec![p("wp[2,2,2]"), p("-wp[1,2,2]"), p("wp[1,1,2]"), p("-wp[1,1,1]")]
}

fn h() -> PolyMatrix {
    klein_matrix(2).expect("genus 2").h
}

/// Rows of `h (wp222, -wp122, wp112, -wp111)^t`.
pub fn genus2_bilinear() -> IdentitySet {
    let h = h();
    let v = kernel_vector();
    let members = (0..4)
        .map(|i| {
            let r = (0..4).fold(Poly::zero(), |acc, j| acc + h.get(i, j) * &v[j]);
            Identity::new(format!("bilinear-row{}", i + 1), 2, r, Source::PaperAsPrinted, "h P = 0")
                .in_multiplet("bilinear")
        })
        .collect();
    IdentitySet::new("bilinear", 2, members).with_closure()
}

/// `det h`, quartic in the two-index functions.
pub fn genus2_kummer() -> Identity {
    Identity::new("kummer", 2, h().det().expect("square"), Source::PaperAsPrinted, "det h = 0")
}

/// `det [[h, l], [l^t, 0]]` with symbolic `l0..l3`.
pub fn bordered_det_h() -> Poly {
    let l: Vec<Poly> = (0..4).map(|i| Poly::var(Symbol::l(i))).collect();
    h().bordered_det(&[l]).expect("square")
}

/// `l0 wp222 - l1 wp122 + l2 wp112 - l3 wp111`.
pub fn border_form() -> Poly {
    let v = kernel_vector();
    (0..4).fold(Poly::zero(), |acc, i| acc + &Poly::var(Symbol::l(i as u8)) * &v[i])
}

/// Full bordered identity `(l.P)^2 - det(H)/4`, with `H` bordered by `l`.
pub fn bordered_quadratic() -> Poly {
    border_form().pow(2) - bordered_det_h().scale(&Rational::new(1, 4))
}

/// The bordered identity with the printed factor: `(l.P)^2 + det(H)/4`.
pub fn bordered_quadratic_printed() -> Poly {
    border_form().pow(2) + bordered_det_h().scale(&Rational::new(1, 4))
}

/// The ten coefficients of `l_i l_j` in [`bordered_quadratic`].
pub fn genus2_quadratic_products() -> Result<IdentitySet> {
    let q = bordered_quadratic();
    let vars: Vec<Symbol> = (0..4).map(Symbol::l).collect();
    let mut members = Vec::new();
    for i in 0..4u8 {
        for j in i..4u8 {
            let m = if i == j {
                Monomial::power(Symbol::l(i), 2)
            } else {
                Monomial::from_pairs([(Symbol::l(i), 1), (Symbol::l(j), 1)])
            };
            let c = q.coeff_monomial(&vars, &m);
            members.push(Identity::new(
                format!("quadratic-l{i}l{j}"),
                2,
                c,
                Source::Generated,
                format!("[l{i} l{j}] of (l.P)^2 - det(H)/4"),
            ));
        }
    }
    Ok(IdentitySet::new("quadratic", 2, members))
}

/// `-4 wp222^2 = |h22 h23 h24; h32 h33 h34; h42 h43 h44|`.
pub fn wp222_square_display() -> Poly {
    let h = h();
    p("4*wp[2,2,2]^2") + h.select(&[1, 2, 3], &[1, 2, 3]).det().expect("square")
}

/// Row `j` (1-based) of `h_{1j} wp222 - h_{2j} wp122 + h_{3j} wp112 - h_{4j} wp111`,
/// the column-border specialization of the bordered identity.
pub fn column_relation(j: usize) -> Poly {
    let h = h();
    let v = kernel_vector();
    (0..4).fold(Poly::zero(), |acc, i| acc + h.get(i, j - 1) * &v[i])
}

/// The four-index highest weight as displayed.
pub fn baker_highest_weight() -> Poly {
    rel("1/3*(-wp[2,2,2,2] + 6*wp[2,2]^2)", "a2*a6 - 4*a3*a5 + 3*a4^2 + a6*wp[1,1] - 2*a5*wp[1,2] + a4*wp[2,2]")
}

/// `-wp2222 = (-|h23 h24; h33 h34| + |h22 h24; h42 h44| - |h31 h34; h41 h44|) / 2`.
pub fn wp2222_minor_display() -> Poly {
    let h = h();
    let m2 = |r: [usize; 2], c: [usize; 2]| h.select(&[r[0] - 1, r[1] - 1], &[c[0] - 1, c[1] - 1]).det().unwrap();
    let rhs = -m2([2, 3], [3, 4]) + m2([2, 4], [2, 4]) - m2([3, 4], [1, 4]);
    p("-wp[2,2,2,2]") - rhs.scale(&Rational::new(1, 2))
}

/// Baker's five four-index relations: the displayed highest weight and its
/// f-chain.
pub fn genus2_fourindex() -> Result<IdentitySet> {
    let m = generate_multiplet(&baker_highest_weight(), 2, 10)?;
    let mut members = multiplet_identities(&m, "baker4", "baker4");
    members[0].source = Source::PaperAsPrinted;
    members[0].origin = "four-index highest weight display".into();
    Ok(IdentitySet::new("fourindex", 2, members).with_closure())
}

/// The four-index set derived mechanically from `wp222^2 + M234/4` by `d/du2`.
pub fn genus2_fourindex_generated() -> Result<IdentitySet> {
    let d = mechanical::derive_fourindex(2, &[2, 2, 2], &[2, 3, 4], 2)?;
    let m = generate_multiplet(&d.relation, 2, 10)?;
    Ok(IdentitySet::new("fourindex-generated", 2, multiplet_identities(&m, "wp2222", "du2(wp222^2)")).with_closure())
}

/// Candidate `h41 wp222 - h42 wp122 + h43 wp112 - h44 lambda` with
/// `lambda = t wp111`; returns the unique `t` for which `e` kills it.
pub fn lambda_search() -> Option<Rational> {
    let h = h();
    let e = Derivation::e(2).ok()?;
    let base = h.get(3, 0) * &p("wp[2,2,2]") - h.get(3, 1) * &p("wp[1,2,2]") + h.get(3, 2) * &p("wp[1,1,2]");
    let dir = -(h.get(3, 3) * &p("wp[1,1,1]"));
    let t = linalg::solve_vanishing(&e.apply(&base), &[e.apply(&dir)])?;
    Some(t[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::weight;

    #[test]
    fn bilinear_rows() {
        let set = genus2_bilinear();
        assert_eq!(set.len(), 4);
        assert_eq!(
            set.members[3].relation,
            p("(a3 - 2*wp[1,2])*wp[2,2,2] - (3*a4 - 2*wp[2,2])*wp[1,2,2] + 3*a5*wp[1,1,2] - a6*wp[1,1,1]")
        );
        assert_eq!(set.closure.unwrap(), super::super::Closure { e: true, f: true });
        let w1 = weight(&set.members[0].relation, 2).unwrap();
        let w4 = weight(&set.members[3].relation, 2).unwrap();
        assert_eq!((w1 - w4).abs(), 6);
    }

    #[test]
    fn kummer_is_quartic() {
        let k = genus2_kummer();
        assert_eq!(k.relation.degree_where(|s| s.wp_order() == 2), 4);
        assert!(k.weight.is_some());
    }

    #[test]
    fn quadratic_products() {
        let set = genus2_quadratic_products().unwrap();
        assert_eq!(set.len(), 10);
        let l0 = &set.get("quadratic-l0l0").unwrap().relation;
        assert_eq!(l0.scale(&Rational::from(4)), wp222_square_display());
        assert!(bordered_det_h().coeff_monomial(&(0..4).map(Symbol::l).collect::<Vec<_>>(), &Monomial::one()).is_zero());
    }

    #[test]
    fn fourindex_multiplet() {
        let set = genus2_fourindex().unwrap();
        assert_eq!(set.len(), 5);
        assert!(Derivation::e(2).unwrap().apply(&baker_highest_weight()).is_zero());
        for (k, m) in set.members.iter().enumerate() {
            let four: Vec<Symbol> = m.relation.symbols().into_iter().filter(|s| s.wp_order() == 4).collect();
            assert_eq!(four.len(), 1, "member {k}");
        }
    }

    #[test]
    fn lambda_is_wp111() {
        assert_eq!(lambda_search(), Some(Rational::one()));
    }
}
