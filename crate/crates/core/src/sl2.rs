//! The sl₂ action on curve coefficients, points and ℘-symbols.
//!
//! Generators act as derivations: each is fixed by its value on every
//! [`Symbol`] and extended to polynomials by the Leibniz rule.
//!
//! * `e`: `x -> 1`, `y -> 0`, `a_i -> -(2g+2-i) a_{i+1}`, and on each ℘
//!   index `i -> i+1` with factor `-i`.
//! * `f`: `x -> -x^2`, `y -> -(g+1) x y`, `a_i -> -i a_{i-1}`, and on each ℘
//!   index `i -> i-1` with factor `-(g-i+1)`.
//! * `h = [e, f]`: diagonal, `x -> -2x`, `y -> -(g+1) y`,
//!   `a_i -> 2(i-g-1) a_i`, `wp_S -> sum_p (2 S_p - g - 1) wp_S`.
//!
//! Indices pushed outside `1..=g` drop the term. Border entries `l_i`, `k_i`,
//! formal matrix entries and the root symbol are invariant.

use std::collections::HashMap;
use std::fmt;

use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolKind, MAX_WP_INDICES};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivationKind {
    E,
    F,
    H,
    /// `∂/∂u_k`: appends the index `k` to every ℘-symbol.
    Du(u8),
    /// `y_m ∂/∂x_m` on the m-th point copy.
    PointD(u8),
    /// Explicit images; unlisted symbols map to zero.
    Map,
}

#[derive(Clone, Debug)]
pub struct Derivation {
    pub name: String,
    pub genus: u8,
    pub kind: DerivationKind,
    images: HashMap<Symbol, Poly>,
}

pub fn check_genus(g: u8) -> Result<()> {
    if (1..=3).contains(&g) {
        Ok(())
    } else {
        Err(Error::UnsupportedGenus(g))
    }
}

/// `C(n, k)` as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = &acc * &Rational::new(n - i, i + 1);
    }
    acc
}

/// `a'(t)/2` for the curve polynomial `a(t) = sum C(2g+2,i) a_i t^i`.
fn half_curve_derivative(g: u8, t: Symbol) -> Poly {
    let n = 2 * g as u32 + 2;
    let mut acc = Poly::zero();
    for i in 1..=n {
        let c = &binomial(n, i) * &Rational::new(i, 2);
        acc = acc + Poly::term(Monomial::from_pairs([(Symbol::a(i as u8), 1), (t, i - 1)]), c);
    }
    acc
}

impl Derivation {
    fn new(name: &str, genus: u8, kind: DerivationKind) -> Self {
        Derivation {
            name: name.into(),
            genus,
            kind,
            images: HashMap::new(),
        }
    }

    pub fn e(g: u8) -> Result<Self> {
        check_genus(g)?;
        Ok(Self::new("e", g, DerivationKind::E))
    }

    pub fn f(g: u8) -> Result<Self> {
        check_genus(g)?;
        Ok(Self::new("f", g, DerivationKind::F))
    }

    pub fn h(g: u8) -> Result<Self> {
        check_genus(g)?;
        Ok(Self::new("h", g, DerivationKind::H))
    }

    pub fn du(g: u8, k: u8) -> Result<Self> {
        check_genus(g)?;
        if !(1..=g).contains(&k) {
            return Err(Error::IndexOutOfRange(format!("u_{k} in genus {g}")));
        }
        Ok(Self::new(&format!("du{k}"), g, DerivationKind::Du(k)))
    }

    pub fn point_d(g: u8, m: u8) -> Result<Self> {
        check_genus(g)?;
        if !(1..=g).contains(&m) {
            return Err(Error::IndexOutOfRange(format!("point {m} in genus {g}")));
        }
        Ok(Self::new(&format!("y{m}dx{m}"), g, DerivationKind::PointD(m)))
    }

    /// A derivation given by explicit images of symbols.
    pub fn from_images(name: &str, genus: u8, images: HashMap<Symbol, Poly>) -> Self {
        Derivation {
            name: name.into(),
            genus,
            kind: DerivationKind::Map,
            images,
        }
    }

    /// Change in h-weight: +2 for e, -2 for f, 0 for h.
    pub fn weight_shift(&self) -> Option<i32> {
        match self.kind {
            DerivationKind::E => Some(2),
            DerivationKind::F => Some(-2),
            DerivationKind::H => Some(0),
            _ => None,
        }
    }

    fn shift_wp(idx: &[u8], g: u8, step: i8, factor: impl Fn(u8) -> i64) -> Poly {
        let mut acc = Poly::zero();
        for p in 0..idx.len() {
            let new = idx[p] as i8 + step;
            if new < 1 || new > g as i8 {
                continue;
            }
            let c = factor(idx[p]);
            if c == 0 {
                continue;
            }
            let mut v = idx.to_vec();
            v[p] = new as u8;
            acc = acc + Poly::wp(&v).scale(&Rational::from(c));
        }
        acc
    }

    /// Image of a single symbol.
    pub fn image(&self, s: Symbol) -> Poly {
        let g = self.genus;
        let gi = g as i64;
        let top = 2 * g + 2;
        match (&self.kind, s.kind()) {
            (DerivationKind::Map, _) => self.images.get(&s).cloned().unwrap_or_default(),
            (DerivationKind::E, SymbolKind::Coeff(i)) if i < top => {
                Poly::a(i + 1).scale(&Rational::from(-((top - i) as i64)))
            }
            (DerivationKind::E, SymbolKind::X | SymbolKind::PointX(_)) => Poly::one(),
            (DerivationKind::E, SymbolKind::Wp(idx)) => {
                Self::shift_wp(&idx, g, 1, |i| -(i as i64))
            }
            (DerivationKind::F, SymbolKind::Coeff(i)) if i >= 1 && i <= top => {
                Poly::a(i - 1).scale(&Rational::from(-(i as i64)))
            }
            (DerivationKind::F, SymbolKind::X) => -Poly::var(s).pow(2),
            (DerivationKind::F, SymbolKind::PointX(_)) => -Poly::var(s).pow(2),
            (DerivationKind::F, SymbolKind::Y) => {
                Poly::term(Monomial::from_pairs([(Symbol::x(), 1), (s, 1)]), Rational::from(-(gi + 1)))
            }
            (DerivationKind::F, SymbolKind::PointY(m)) => Poly::term(
                Monomial::from_pairs([(Symbol::point_x(m), 1), (s, 1)]),
                Rational::from(-(gi + 1)),
            ),
            (DerivationKind::F, SymbolKind::Wp(idx)) => {
                Self::shift_wp(&idx, g, -1, |i| -(gi - i as i64 + 1))
            }
            (DerivationKind::H, _) => match symbol_weight(s, g) {
                Some(w) if w != 0 => Poly::var(s).scale(&Rational::from(w)),
                _ => Poly::zero(),
            },
            (DerivationKind::Du(k), SymbolKind::Wp(idx)) if idx.len() < MAX_WP_INDICES => {
                let mut v = idx;
                v.push(*k);
                Poly::wp(&v)
            }
            (DerivationKind::PointD(m), SymbolKind::PointX(n)) if n == *m => {
                Poly::var(Symbol::point_y(n))
            }
            (DerivationKind::PointD(m), SymbolKind::PointY(n)) if n == *m => {
                half_curve_derivative(g, Symbol::point_x(n))
            }
            _ => Poly::zero(),
        }
    }

    /// Leibniz extension to a polynomial.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut cache: HashMap<Symbol, Poly> = HashMap::new();
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in p.terms() {
            for &(s, e) in m.pairs() {
                let img = cache.entry(s).or_insert_with(|| self.image(s));
                if img.is_zero() {
                    continue;
                }
                let rest = m.with_exponent(s, e - 1);
                let ce = c * &Rational::from(e);
                for (im, ic) in img.terms() {
                    acc.push((rest.mul(im), &ce * ic));
                }
            }
        }
        Poly::from_terms(acc)
    }

    /// `D^n p`.
    pub fn apply_n(&self, p: &Poly, n: usize) -> Poly {
        (0..n).fold(p.clone(), |q, _| self.apply(&q))
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (genus {})", self.name, self.genus)
    }
}

/// The triple `(e, f, h)` for genus `g`.
pub fn make_generators(g: u8) -> Result<(Derivation, Derivation, Derivation)> {
    Ok((Derivation::e(g)?, Derivation::f(g)?, Derivation::h(g)?))
}

/// h-eigenvalue of a symbol; `None` for symbols outside genus `g`.
pub fn symbol_weight(s: Symbol, g: u8) -> Option<i32> {
    let g = g as i32;
    match s.kind() {
        SymbolKind::Coeff(i) if (i as i32) <= 2 * g + 2 => Some(2 * (i as i32 - g - 1)),
        SymbolKind::Wp(idx) => Some(idx.iter().map(|&i| 2 * i as i32 - g - 1).sum()),
        SymbolKind::X | SymbolKind::PointX(_) => Some(-2),
        SymbolKind::Y | SymbolKind::PointY(_) => Some(-(g + 1)),
        SymbolKind::BorderL(_) | SymbolKind::BorderK(_) | SymbolKind::Matrix(..) | SymbolKind::Root => {
            Some(0)
        }
        _ => None,
    }
}

pub fn monomial_weight(m: &Monomial, g: u8) -> Option<i32> {
    m.pairs()
        .iter()
        .try_fold(0, |acc, &(s, e)| Some(acc + e as i32 * symbol_weight(s, g)?))
}

/// `w` if `h(p) = w p`; `None` for zero or mixed-weight polynomials.
pub fn weight(p: &Poly, g: u8) -> Option<i32> {
    let mut it = p.terms().iter().map(|(m, _)| monomial_weight(m, g));
    let first = it.next()??;
    for w in it {
        if w? != first {
            return None;
        }
    }
    Some(first)
}

/// Every generator symbol of genus `g`: coefficients, point symbols, ℘ with
/// 2 to 4 indices, border entries and the root.
pub fn genus_symbols(g: u8) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = (0..=2 * g + 2).map(Symbol::a).collect();
    out.push(Symbol::x());
    out.push(Symbol::y());
    for m in 1..=g {
        out.push(Symbol::point_x(m));
        out.push(Symbol::point_y(m));
    }
    for n in 2..=4 {
        out.extend(wp_symbols(g, n));
    }
    for i in 0..=g + 1 {
        out.push(Symbol::l(i));
        out.push(Symbol::k(i));
    }
    out.push(Symbol::root());
    out
}

/// All ℘ symbols of genus `g` with exactly `n` (sorted) indices.
pub fn wp_symbols(g: u8, n: usize) -> Vec<Symbol> {
    fn rec(start: u8, g: u8, n: usize, cur: &mut Vec<u8>, out: &mut Vec<Symbol>) {
        if cur.len() == n {
            out.push(Symbol::wp(cur));
            return;
        }
        for i in start..=g {
            cur.push(i);
            rec(i, g, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, g, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, Default)]
pub struct CommutatorReport {
    pub genus: u8,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` on every generator symbol.
pub fn check_commutators(g: u8) -> Result<CommutatorReport> {
    let (e, f, h) = make_generators(g)?;
    let mut report = CommutatorReport {
        genus: g,
        ..Default::default()
    };
    let two = Rational::from(2);
    for s in genus_symbols(g) {
        let p = Poly::var(s);
        let (ep, fp, hp) = (e.apply(&p), f.apply(&p), h.apply(&p));
        let checks = [
            ("[h,e]", h.apply(&ep) - e.apply(&hp), ep.scale(&two)),
            ("[h,f]", h.apply(&fp) - f.apply(&hp), fp.scale(&-two.clone())),
            ("[e,f]", e.apply(&fp) - f.apply(&ep), hp.clone()),
        ];
        for (name, lhs, rhs) in checks {
            report.checked += 1;
            if lhs != rhs {
                report.failures.push(format!("{name} {s}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(report)
}

/// A chain `hw, f(hw), f^2(hw), ...` ending just before the first zero.
#[derive(Clone, Debug)]
pub struct Multiplet {
    pub genus: u8,
    pub members: Vec<Poly>,
    pub weights: Vec<Option<i32>>,
}

impl Multiplet {
    pub fn dimension(&self) -> usize {
        self.members.len()
    }

    pub fn highest(&self) -> &Poly {
        &self.members[0]
    }

    /// `e(member i) = c_i member (i-1)` with `c_i = i (w - i + 1)` for a
    /// highest weight of weight `w`. Returns the list of factors `c_i`, or a
    /// description of the first failure.
    pub fn check_duality(&self) -> std::result::Result<Vec<Rational>, String> {
        let e = Derivation::e(self.genus).map_err(|e| e.to_string())?;
        let mut out = Vec::new();
        for i in 0..self.members.len() {
            let img = e.apply(&self.members[i]);
            if i == 0 {
                if !img.is_zero() {
                    return Err("e(member 0) is not zero".into());
                }
                continue;
            }
            match img.ratio_to(&self.members[i - 1]) {
                Some(c) if !c.is_zero() => out.push(c),
                _ => return Err(format!("e(member {i}) is not a multiple of member {}", i - 1)),
            }
        }
        Ok(out)
    }
}

/// Generate the f-chain of a highest-weight polynomial.
pub fn generate_multiplet(hw: &Poly, g: u8, max_dim: usize) -> Result<Multiplet> {
    let (e, f, _) = make_generators(g)?;
    let ehw = e.apply(hw);
    if !ehw.is_zero() {
        return Err(Error::NotHighestWeight(ehw.to_string()));
    }
    let mut members = Vec::new();
    let mut cur = hw.clone();
    while !cur.is_zero() {
        if members.len() == max_dim {
            return Err(Error::DimensionExceeded(max_dim));
        }
        let next = f.apply(&cur);
        members.push(cur);
        cur = next;
    }
    let weights = members.iter().map(|m| weight(m, g)).collect();
    Ok(Multiplet {
        genus: g,
        members,
        weights,
    })
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub derivation: String,
    pub size: usize,
    /// Indices of members whose image leaves the span.
    pub escapees: Vec<usize>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.escapees.is_empty()
    }
}

/// Decide whether `D(p)` lies in the rational span of `set` for each member.
pub fn closure_check(set: &[Poly], d: &Derivation) -> ClosureReport {
    let span = crate::linalg::LinearSpan::from_polys(set);
    let escapees = set
        .iter()
        .enumerate()
        .filter(|(_, p)| !span.contains(&d.apply(p)))
        .map(|(i, _)| i)
        .collect();
    ClosureReport {
        derivation: d.name.clone(),
        size: set.len(),
        escapees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    #[test]
    fn genus_one_images() {
        let (e, f, _) = make_generators(1).unwrap();
        assert_eq!(e.apply(&p("a0")), p("-4*a1"));
        assert!(e.apply(&p("wp[1,1]")).is_zero());
        assert!(f.apply(&p("wp[1,1]")).is_zero());
        assert_eq!(e.apply(&p("a0*a4")), p("-4*a1*a4"));
        assert!(f.apply(&p("a0")).is_zero());
        assert!(e.apply(&p("a0*a4 - 4*a1*a3 + 3*a2^2")).is_zero());
    }

    #[test]
    fn genus_two_wp_chain() {
        let e = Derivation::e(2).unwrap();
        assert_eq!(e.apply(&p("wp[1,1]")), p("-2*wp[1,2]"));
        assert_eq!(e.apply(&p("wp[1,2]")), p("-wp[2,2]"));
        assert!(e.apply(&p("wp[2,2]")).is_zero());
    }

    #[test]
    fn commutators_hold() {
        for g in 1..=3 {
            let r = check_commutators(g).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
        assert!(matches!(check_commutators(4), Err(Error::UnsupportedGenus(4))));
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&p("a4"), 1), Some(4));
        assert_eq!(weight(&p("a0*a4 - 4*a1*a3 + 3*a2^2"), 1), Some(0));
        assert_eq!(weight(&p("x + a0"), 1), None);
        assert_eq!(weight(&p("wp[2,2]"), 2), Some(2));
    }

    #[test]
    fn coefficient_multiplet() {
        let m = generate_multiplet(&p("a4"), 1, 10).unwrap();
        let expect = ["a4", "-4*a3", "12*a2", "-24*a1", "24*a0"];
        assert_eq!(m.dimension(), 5);
        for (got, want) in m.members.iter().zip(expect) {
            assert_eq!(got, &p(want));
        }
        assert!(m.check_duality().is_ok());
        assert!(matches!(generate_multiplet(&p("a0"), 1, 10), Err(Error::NotHighestWeight(_))));
        assert!(matches!(generate_multiplet(&p("a4"), 1, 3), Err(Error::DimensionExceeded(3))));
    }

    #[test]
    fn wp_triplet() {
        let m = generate_multiplet(&p("wp[2,2]"), 2, 10).unwrap();
        assert_eq!(m.dimension(), 3);
        assert!(m.members[2].ratio_to(&p("wp[1,1]")).is_some());
    }

    #[test]
    fn closure() {
        let e = Derivation::e(1).unwrap();
        assert!(!closure_check(&[p("a0")], &e).closed());
        let set = [p("a0"), p("a1"), p("a2"), p("a3"), p("a4")];
        assert!(closure_check(&set, &e).closed());
    }

    #[test]
    fn point_derivation() {
        let d = Derivation::point_d(1, 1).unwrap();
        assert_eq!(d.apply(&p("x1")), p("y1"));
        assert_eq!(d.apply(&p("y1")), p("2*a1 + 6*a2*x1 + 6*a3*x1^2 + 2*a4*x1^3"));
    }
}
