//! Four-index relations by differentiating a leading quadratic identity.
//!
//! Start from `wp_T^2 + M/4 = 0`, where `M` is a principal minor of the
//! Klein matrix written in formal entries `h[i,j]`. Applying `d/du_k` gives
//! `2 wp_T wp_Tk + D(M)/4`. The linear three-index relations (formal
//! `h P = 0` at genus two, formal `h A = 0` at genus three) are used to write
//! `D(M) = wp_T X + sum mu R` with `X` quadratic in the formal entries, so
//! `wp_Tk + X/8 = 0`.

use std::collections::HashMap;

use super::{printed, Identity, IdentitySet, Source};
use crate::curve::{formal_matrix, klein_matrix};
use crate::linalg::{self, LinearSpan};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::sl2::{self, generate_multiplet, Derivation};
use crate::symbol::Symbol;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct DerivedFourIndex {
    pub genus: u8,
    /// `X` in formal entries.
    pub formal_x: Poly,
    /// `wp_Tk + X/8` with the Klein entries substituted.
    pub relation: Poly,
    pub origin: String,
}

/// The formal linear three-index relations, as polynomials in `h[i,j]` and
/// three-index symbols.
pub fn formal_linear_relations(g: u8) -> Result<Vec<Poly>> {
    let n = g as usize + 2;
    let h = formal_matrix(n);
    match g {
        2 => {
            let v = super::genus2::kernel_vector();
            Ok((0..4)
                .map(|i| (0..4).fold(Poly::zero(), |acc, j| acc + h.get(i, j) * &v[j]))
                .collect())
        }
        3 => {
            let prod = h.mul(&super::genus3::a_matrix())?;
            Ok(prod.entries().to_vec())
        }
        _ => Err(Error::UnsupportedGenus(g)),
    }
}

/// `d/du_k` on formal entries: `h[i,j] -> d/du_k` of the Klein entry.
pub fn formal_du(g: u8, k: u8) -> Result<Derivation> {
    let km = klein_matrix(g)?;
    let du = Derivation::du(g, k)?;
    let n = km.size();
    let mut images = HashMap::new();
    for i in 1..=n {
        for j in i..=n {
            images.insert(Symbol::matrix(i as u8, j as u8), du.apply(km.at(i, j)));
        }
    }
    Ok(Derivation::from_images(&format!("du{k}[h]"), g, images))
}

/// Derive `wp_{T,k} + X/8` from `wp_T^2 + M/4` where `M` is the principal
/// minor of the Klein matrix on `minor` (1-based indices).
pub fn derive_fourindex(g: u8, t: &[u8], minor: &[usize], k: u8) -> Result<DerivedFourIndex> {
    let n = g as usize + 2;
    let h = formal_matrix(n);
    let idx: Vec<usize> = minor.iter().map(|i| i - 1).collect();
    let m = h.select(&idx, &idx).det()?;
    let dm = formal_du(g, k)?.apply(&m);
    let wt = Poly::wp(t);

    let entries: Vec<Poly> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| Poly::var(Symbol::matrix(i as u8, j as u8))))
        .collect();
    let mut quads = Vec::new();
    for a in 0..entries.len() {
        for b in a..entries.len() {
            quads.push(&entries[a] * &entries[b]);
        }
    }
    let mut basis: Vec<Poly> = quads.iter().map(|q| &wt * q).collect();
    for r in formal_linear_relations(g)? {
        for e in &entries {
            basis.push(e * &r);
        }
    }
    let c = LinearSpan::from_polys(&basis).express(&dm).ok_or_else(|| {
        Error::InvariantViolation(format!("d/du{k} of the wp{t:?} quadratic does not reduce"))
    })?;
    let formal_x = linalg::combine(&c[..quads.len()], &quads);
    let km = klein_matrix(g)?;
    let x = formal_x.substitute(&km.formal_bindings());
    let mut tk = t.to_vec();
    tk.push(k);
    let relation = Poly::wp(&tk) + x.scale(&Rational::new(1, 8));
    Ok(DerivedFourIndex {
        genus: g,
        formal_x,
        relation,
        origin: format!("du{k}(wp{}^2)", t.iter().map(|i| i.to_string()).collect::<String>()),
    })
}

/// For each four-index symbol `S`, the unique combination of `gens` whose
/// four-index part is exactly `-wp_S`.
pub fn normalize_by_fourindex(g: u8, gens: &[Poly]) -> Result<Vec<(Symbol, Poly)>> {
    let four = sl2::wp_symbols(g, 4);
    let part = |q: &Poly| -> Poly {
        Poly::from_terms(
            q.terms()
                .iter()
                .filter(|(m, _)| m.degree() == 1 && m.pairs()[0].0.wp_order() == 4)
                .cloned(),
        )
    };
    let parts: Vec<Poly> = gens.iter().map(part).collect();
    let span = LinearSpan::from_polys(&parts);
    four.into_iter()
        .map(|s| {
            let c = span
                .express(&-Poly::var(s))
                .ok_or_else(|| Error::InvariantViolation(format!("{s} cannot be isolated")))?;
            Ok((s, linalg::combine(&c, gens)))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct GeneratedFourIndex {
    /// Highest weights derived from the three leading quadratic routes.
    pub derived: Vec<DerivedFourIndex>,
    /// f-chains of the derived relations.
    pub chains: Vec<Vec<Poly>>,
    pub span_rank: usize,
    /// One relation per four-index symbol, in the form `-wp_S + ...`.
    pub normalized: IdentitySet,
}

/// The genus-three four-index relations from `wp333^2` by `u3` and `u1`, and
/// from `wp133^2` by `u1`, closed under `f` and normalized per symbol.
pub fn genus3_fourindex_generated() -> Result<GeneratedFourIndex> {
    let routes: [(&[u8], &[usize], u8); 3] = [(&[3, 3, 3], &[3, 4, 5], 3), (&[3, 3, 3], &[3, 4, 5], 1), (&[1, 3, 3], &[1, 4, 5], 1)];
    let f = Derivation::f(3)?;
    let mut derived = Vec::new();
    let mut chains = Vec::new();
    let mut gens = Vec::new();
    for (t, minor, k) in routes {
        let d = derive_fourindex(3, t, minor, k)?;
        let mut chain = Vec::new();
        let mut cur = d.relation.clone();
        while !cur.is_zero() && chain.len() < 16 {
            let next = f.apply(&cur);
            chain.push(cur);
            cur = next;
        }
        gens.extend(chain.iter().cloned());
        chains.push(chain);
        derived.push(d);
    }
    let span_rank = linalg::rank(&gens);
    let normalized = normalize_by_fourindex(3, &gens)?;
    let members = normalized
        .into_iter()
        .map(|(s, r)| {
            let name = printed::fourindex_name(s);
            Identity::new(name, 3, r, Source::Generated, "normalized span of the derived f-chains")
        })
        .collect();
    Ok(GeneratedFourIndex {
        derived,
        chains,
        span_rank,
        normalized: IdentitySet::new("fourindex-generated", 3, members),
    })
}

/// Whether `q` is a rational combination of `gens`.
pub fn in_span(q: &Poly, gens: &[Poly]) -> bool {
    LinearSpan::from_polys(gens).contains(q)
}

/// Membership in the span of the generated genus-three f-chains.
pub struct SpanTest(LinearSpan);

impl SpanTest {
    pub fn generated() -> Result<SpanTest> {
        let g = genus3_fourindex_generated()?;
        Ok(SpanTest(LinearSpan::from_polys(g.chains.iter().flatten())))
    }

    pub fn contains(&self, q: &Poly) -> bool {
        self.0.contains(q)
    }
}

/// `e` applied to the highest weight produced by a route, for checking.
pub fn e_image(d: &DerivedFourIndex) -> Poly {
    Derivation::e(d.genus).map(|e| e.apply(&d.relation)).unwrap_or_default()
}

/// The genus-two minor form `-2 wp2222 = ...` and the f-chain of the derived
/// relation, for comparison with the displayed multiplet.
pub fn genus2_generated_chain() -> Result<Vec<Poly>> {
    let d = derive_fourindex(2, &[2, 2, 2], &[2, 3, 4], 2)?;
    Ok(generate_multiplet(&d.relation, 2, 10)?.members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus2_route_matches_display() {
        let d = derive_fourindex(2, &[2, 2, 2], &[2, 3, 4], 2).unwrap();
        assert!(e_image(&d).is_zero());
        let shown = super::super::genus2::baker_highest_weight();
        assert!(d.relation.ratio_to(&shown).is_some(), "{}", d.relation);
    }

    #[test]
    fn genus3_wp3333() {
        let d = derive_fourindex(3, &[3, 3, 3], &[3, 4, 5], 3).unwrap();
        let h = formal_matrix(5);
        let m2 = |r: [usize; 2], c: [usize; 2]| h.select(&[r[0] - 1, r[1] - 1], &[c[0] - 1, c[1] - 1]).det().unwrap();
        // -2 wp3333 = -|h24 h25; h54 h55| + |h33 h35; h53 h55| - |h34 h35; h44 h45|
        let shown = -m2([2, 5], [4, 5]) + m2([3, 5], [3, 5]) - m2([3, 4], [4, 5]);
        assert_eq!(d.formal_x.scale(&Rational::new(1, 4)), shown);
    }
}
