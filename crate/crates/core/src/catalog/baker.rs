//! Baker's functions and the change of variables to the covariant ones.
//!
//! `wp^B_ij = wp_ij - c a_k` on two-index functions; higher derivatives are
//! unchanged. Baker's relations are stored in the same `wp` symbols and
//! mapped to the covariant functions by substitution.

use std::collections::HashMap;

use serde::Serialize;

use super::printed::{self, BAKER_SHIFT, FOURINDEX_ORDER};
use super::{Identity, IdentitySet, Source};
use crate::curve::klein_matrix;
use crate::matrix::PolyMatrix;
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::symbol::Symbol;
use crate::Result;

/// `wp_ij -> wp_ij - c a_k`: a Baker expression rewritten in covariant
/// functions.
pub fn baker_to_covariant() -> HashMap<Symbol, Poly> {
    BAKER_SHIFT
        .iter()
        .map(|(ij, (n, d), k)| (Symbol::wp(ij), Poly::wp(ij) - Poly::a(*k).scale(&Rational::new(*n, *d))))
        .collect()
}

/// `wp_ij -> wp_ij + c a_k`: a covariant expression rewritten in Baker's.
pub fn covariant_to_baker() -> HashMap<Symbol, Poly> {
    BAKER_SHIFT
        .iter()
        .map(|(ij, (n, d), k)| (Symbol::wp(ij), Poly::wp(ij) + Poly::a(*k).scale(&Rational::new(*n, *d))))
        .collect()
}

/// Baker's matrix with the change of variables applied.
pub fn baker_matrix_covariant() -> PolyMatrix {
    let b = baker_to_covariant();
    printed::baker_matrix().map(|q| q.substitute(&b))
}

/// Whether the transformed `h^B` equals the covariant Klein matrix, and the
/// entries (1-based) where it does not.
pub fn baker_matrix_check() -> Vec<(usize, usize)> {
    let hb = baker_matrix_covariant();
    let h = klein_matrix(3).expect("genus 3").h;
    let mut bad = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            if hb.get(i, j) != h.get(i, j) {
                bad.push((i + 1, j + 1));
            }
        }
    }
    bad
}

/// The printed Appendix-2 relations rewritten in covariant functions.
pub fn appendix2_covariant() -> IdentitySet {
    let set = printed::appendix2();
    let members = set
        .members
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let name = printed::fourindex_name(Symbol::wp(&FOURINDEX_ORDER[i]));
            let mut t = Identity::new(name, 3, set.covariant_relation(id), Source::PaperAsPrinted, format!("appendix-2:{} shifted", i + 1));
            t.note = id.note.clone();
            t
        })
        .collect();
    IdentitySet::new("appendix2-covariant", 3, members)
}

/// The printed Appendix-1 set with the shift table substituted, each line
/// solved for its four-index function, in Baker's variables.
pub fn appendix2_transformed() -> IdentitySet {
    let back = covariant_to_baker();
    let members = printed::appendix1()
        .members
        .into_iter()
        .enumerate()
        .map(|(i, id)| {
            let s = Symbol::wp(&FOURINDEX_ORDER[i]);
            let q = id.relation.substitute(&back);
            let q = normalize_in(&q, s).unwrap_or(q);
            Identity::new(baker_name(s), 3, q, Source::Generated, format!("appendix-1:{} shifted", i + 1))
        })
        .collect();
    IdentitySet::new("appendix2-transformed", 3, members).in_baker_variables()
}

/// `B1333` for `wp[1,3,3,3]`.
pub fn baker_name(s: Symbol) -> String {
    format!("B{}", &printed::fourindex_name(s)[2..])
}

/// Scale `q` so that the coefficient of `wp_S` is `-1`.
pub fn normalize_in(q: &Poly, s: Symbol) -> Option<Poly> {
    let c = q.coeff_of(&Monomial::var(s));
    if c.is_zero() {
        return None;
    }
    Some(q.scale(&(-c.recip())))
}

/// The only four-index function occurring linearly in `q`, if unique.
pub fn fourindex_symbol(q: &Poly) -> Option<Symbol> {
    let mut found: Vec<Symbol> = q.symbols().into_iter().filter(|s| s.wp_order() == 4).collect();
    found.dedup();
    (found.len() == 1).then(|| found[0])
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonRow {
    pub symbol: String,
    pub matches: bool,
    /// `normalized(left) - normalized(right)` in text form.
    pub difference: String,
}

/// Line-by-line comparison of two fifteen-member sets, both normalized in
/// the four-index function of the line. Members are matched by that
/// function, so the naming of the two sets may differ.
pub fn compare(left: &IdentitySet, right: &IdentitySet) -> Vec<ComparisonRow> {
    FOURINDEX_ORDER
        .iter()
        .map(|idx| {
            let s = Symbol::wp(idx);
            let name = printed::fourindex_name(s);
            let find = |set: &IdentitySet| {
                set.members
                    .iter()
                    .find(|m| fourindex_symbol(&m.relation) == Some(s))
                    .and_then(|m| normalize_in(&m.relation, s))
            };
            match (find(left), find(right)) {
                (Some(l), Some(r)) => {
                    let d = &l - &r;
                    ComparisonRow {
                        symbol: name,
                        matches: d.is_zero(),
                        difference: d.to_string(),
                    }
                }
                _ => ComparisonRow {
                    symbol: name,
                    matches: false,
                    difference: "missing".into(),
                },
            }
        })
        .collect()
}

/// Printed Appendix 2 against the shifted Appendix 1, in Baker's variables.
pub fn appendix_comparison() -> Vec<ComparisonRow> {
    compare(&printed::appendix2(), &appendix2_transformed())
}

/// Printed Appendix 2 (shifted to covariant functions) against the
/// generated four-index relations.
pub fn generated_comparison() -> Result<Vec<ComparisonRow>> {
    let gen = super::mechanical::genus3_fourindex_generated()?.normalized;
    Ok(compare(&appendix2_covariant(), &gen))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts_are_inverse() {
        let there = baker_to_covariant();
        let back = covariant_to_baker();
        let q = Poly::wp(&[1, 3]) * Poly::wp(&[2, 2]);
        assert_eq!(q.substitute(&there).substitute(&back), q);
    }

    #[test]
    fn baker_matrix_is_klein_matrix() {
        assert_eq!(baker_matrix_check(), vec![]);
    }

    #[test]
    fn comparison_shape() {
        let rows = appendix_comparison();
        assert_eq!(rows.len(), 15);
        assert!(rows.iter().any(|r| r.matches));
        let rows = generated_comparison().unwrap();
        let bad: Vec<&str> = rows.iter().filter(|r| !r.matches).map(|r| r.symbol.as_str()).collect();
        assert_eq!(bad, ["wp2333", "wp2223", "wp2222", "wp1223", "wp1222", "wp1133"]);
    }
}
