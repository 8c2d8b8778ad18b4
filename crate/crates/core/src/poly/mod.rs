//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod text;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use monomial::Monomial;
pub use text::ParseError;

use crate::rational::Rational;
use crate::symbol::Symbol;
use crate::Error;

/// A polynomial in canonical form: terms sorted by strictly decreasing
/// monomial, no zero coefficients. Equal polynomials have identical term
/// vectors, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(s: Symbol) -> Self {
        Self::term(Monomial::var(s), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// `a_i`
    pub fn a(i: u8) -> Self {
        Self::var(Symbol::a(i))
    }

    /// `wp` with the given indices.
    pub fn wp(idx: &[u8]) -> Self {
        Self::var(Symbol::wp(idx))
    }

    /// Canonicalize an arbitrary list of terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(s)).max().unwrap_or(0)
    }

    /// Largest total degree in the symbols selected by `pred`.
    pub fn degree_where(&self, pred: impl Fn(Symbol) -> bool) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.pairs().iter().filter(|p| pred(p.0)).map(|p| p.1).sum())
            .max()
            .unwrap_or(0)
    }

    /// Sorted, deduplicated list of the symbols that occur.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = self.terms.iter().flat_map(|t| t.0.symbols()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.terms.iter().any(|t| t.0.exponent(s) > 0)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // Multiplying by a monomial preserves the term order.
        Poly {
            terms: self.terms.iter().map(|(n, v)| (n.mul(m), v * c)).collect(),
        }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Poly { terms: out }
    }

    pub fn mul_poly(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to one symbol.
    pub fn diff(&self, s: Symbol) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(s);
            (e > 0).then(|| (m.with_exponent(s, e - 1), c * &Rational::from(e)))
        }))
    }

    /// Simultaneous substitution of polynomials for symbols. Symbols without
    /// a binding are left alone.
    pub fn substitute(&self, bindings: &HashMap<Symbol, Poly>) -> Poly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Symbol, u32), Poly> = HashMap::new();
        let mut acc = Poly::zero();
        let mut pieces: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for &(s, e) in m.pairs() {
                match bindings.get(&s) {
                    Some(img) => {
                        let p = powers.entry((s, e)).or_insert_with(|| img.pow(e));
                        factor = &factor * p;
                    }
                    None => kept.push((s, e)),
                }
            }
            let rest = Monomial::from_pairs(kept);
            if factor.is_constant() {
                let c = factor.as_constant().unwrap();
                pieces.push((rest, c));
            } else {
                acc = &acc + &factor.mul_monomial(&rest, &Rational::one());
            }
        }
        &acc + &Poly::from_terms(pieces)
    }

    /// Convenience wrapper for a single binding.
    pub fn substitute_one(&self, s: Symbol, value: &Poly) -> Poly {
        let mut b = HashMap::new();
        b.insert(s, value.clone());
        self.substitute(&b)
    }

    /// The coefficient of `s^d`, itself a polynomial free of `s`.
    pub fn coeff_extract(&self, s: Symbol, d: u32) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(s) == d)
                .map(|(m, c)| (m.with_exponent(s, 0), c.clone())),
        )
    }

    /// Coefficient of a whole monomial `m` in the symbols of `m` only: the
    /// sum of terms whose restriction to `vars` equals `m`, with those
    /// symbols removed.
    pub fn coeff_monomial(&self, vars: &[Symbol], m: &Monomial) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(t, c)| {
            let matches = vars.iter().all(|&v| t.exponent(v) == m.exponent(v));
            matches.then(|| {
                let mut rest = t.clone();
                for &v in vars {
                    rest = rest.with_exponent(v, 0);
                }
                (rest, c.clone())
            })
        }))
    }

    /// Split into `(monomial in vars, coefficient polynomial)` pairs.
    pub fn collect_in(&self, vars: &[Symbol]) -> Vec<(Monomial, Poly)> {
        let mut groups: HashMap<Monomial, Vec<(Monomial, Rational)>> = HashMap::new();
        for (t, c) in &self.terms {
            let key = Monomial::from_pairs(vars.iter().map(|&v| (v, t.exponent(v))));
            let mut rest = t.clone();
            for &v in vars {
                rest = rest.with_exponent(v, 0);
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Monomial, Poly)> = groups
            .into_iter()
            .map(|(k, v)| (k, Poly::from_terms(v)))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Uses leading-term division; for a single divisor the remainder is
    /// unique, so a nonzero remainder proves non-divisibility.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, Error> {
        let (lm, lc) = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let qm = rm.div(&lm).ok_or(Error::NotDivisible)?;
            let qc = &rc / &lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quotient.push((qm, qc));
        }
        Ok(Poly::from_terms(quotient))
    }

    /// Largest `k` with `factor^k | self` (`self` nonzero, `factor` non-constant).
    pub fn multiplicity(&self, factor: &Poly) -> u32 {
        assert!(!self.is_zero() && !factor.is_constant());
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(factor) {
            k += 1;
            cur = q;
        }
        k
    }

    /// Rescale so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Poly::zero(),
        }
    }

    /// If `self = c * other` for a rational `c`, return `c`.
    pub fn ratio_to(&self, other: &Poly) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::one);
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let c = &self.terms[0].1 / &other.terms[0].1;
        for ((m1, c1), (m2, c2)) in self.terms.iter().zip(&other.terms) {
            if m1 != m2 || c1 != &(c2 * &c) {
                return None;
            }
        }
        Some(c)
    }

    /// Evaluate every symbol via `f` inside an arbitrary commutative ring.
    pub fn eval_with<T, F, C>(&self, mut value_of: F, from_rational: C) -> T
    where
        T: Clone + for<'a> Add<&'a T, Output = T> + for<'a> Mul<&'a T, Output = T>,
        F: FnMut(Symbol) -> T,
        C: Fn(&Rational) -> T,
    {
        let mut cache: HashMap<(Symbol, u32), T> = HashMap::new();
        let mut acc = from_rational(&Rational::zero());
        for (m, c) in &self.terms {
            let mut t = from_rational(c);
            for &(s, e) in m.pairs() {
                let p = cache.entry((s, e)).or_insert_with(|| {
                    let base = value_of(s);
                    let mut p = base.clone();
                    for _ in 1..e {
                        p = p * &base;
                    }
                    p
                });
                t = t * &*p;
            }
            acc = acc + &t;
        }
        acc
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(Rational::from(c))
    }
}

impl From<Symbol> for Poly {
    fn from(s: Symbol) -> Self {
        Poly::var(s)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl Add<Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        self.merge(&rhs, false)
    }
}

impl Add<&Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl Sub<Poly> for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self.merge(&rhs, true)
    }
}

impl Sub<&Poly> for Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_poly(rhs)
    }
}

impl Mul<Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_poly(&rhs)
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_poly(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::to_text(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Poly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

/// Parse a polynomial literal, panicking on malformed input. Intended for
/// hard-coded tables.
pub fn p(s: &str) -> Poly {
    match text::parse(s) {
        Ok(p) => p,
        Err(e) => panic!("bad polynomial literal {s:?}: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let x = Poly::var(Symbol::x());
        let one = Poly::one();
        assert_eq!(&(&x + &one) * &(&x - &one), p("x^2 - 1"));
    }

    #[test]
    fn additive_inverse() {
        let q = p("3*a0*x - 1/2*wp[1,1] + 7");
        assert!((&q + &(-&q)).is_zero());
    }

    #[test]
    fn binomial_square() {
        let q = p("a0 + 2*a1*x");
        assert_eq!(q.pow(2), p("a0^2 + 4*a0*a1*x + 4*a1^2*x^2"));
        assert_eq!(q.pow(0), Poly::one());
    }

    #[test]
    fn substitution_cases() {
        let w11 = Symbol::wp(&[1, 1]);
        let q = Poly::var(w11).pow(2);
        let img = p("wp[1,1] + 3*a2");
        assert_eq!(q.substitute_one(w11, &img), img.pow(2));
        let r = p("x*y + a0");
        assert_eq!(r.substitute(&HashMap::new()), r);
        assert_eq!(p("x*y").substitute_one(Symbol::x(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn coefficient_extraction() {
        let q = p("a0 + 3*a1*x^2");
        assert_eq!(q.coeff_extract(Symbol::x(), 2), p("3*a1"));
        assert_eq!(q.coeff_extract(Symbol::y(), 1), Poly::zero());
        assert_eq!(q.coeff_extract(Symbol::y(), 0), q);
    }

    #[test]
    fn exact_division_cases() {
        let q = p("x^2 - x1^2").exact_div(&p("x - x1")).unwrap();
        assert_eq!(q, p("x + x1"));
        let r = p("a0*x + wp[1,2]");
        assert_eq!(r.exact_div(&Poly::one()).unwrap(), r);
        assert!(matches!(p("x + 1").exact_div(&p("x")), Err(Error::NotDivisible)));
        assert!(matches!(p("x").exact_div(&Poly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn multiplicity_counts_repeated_factors() {
        let f = p("x - x1");
        let q = &f.pow(3) * &p("x + a0");
        assert_eq!(q.multiplicity(&f), 3);
    }

    #[test]
    fn ratio_detection() {
        let a = p("2*a0 - 4*x");
        let b = p("-a0 + 2*x");
        assert_eq!(a.ratio_to(&b), Some(Rational::from(-2)));
        assert_eq!(a.ratio_to(&p("a0 + x")), None);
    }
}
