//! Integer polynomials in `x1, x2, x3` with packed exponent keys.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolKind};

const BITS: u32 = 16;
const MASK: u64 = (1 << BITS) - 1;

/// Exponent of `x_m` (1-based) in a packed key.
pub fn exponent(key: u64, m: u8) -> u32 {
    ((key >> (BITS * (m as u32 - 1))) & MASK) as u32
}

pub fn unit_key(m: u8) -> u64 {
    1 << (BITS * (m as u32 - 1))
}

/// Sparse polynomial, terms sorted by key, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPoly {
    terms: Vec<(u64, BigInt)>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { terms: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            XPoly { terms: vec![(0, c)] }
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn var(m: u8) -> Self {
        XPoly {
            terms: vec![(unit_key(m), BigInt::one())],
        }
    }

    /// `x_i - x_j`.
    pub fn difference(i: u8, j: u8) -> Self {
        Self::var(i) - &Self::var(j)
    }

    pub fn from_map(map: HashMap<u64, BigInt>) -> Self {
        let mut terms: Vec<(u64, BigInt)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        XPoly { terms }
    }

    pub fn terms(&self) -> &[(u64, BigInt)] {
        &self.terms
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

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Integer polynomial `d p` from a rational polynomial in the `x_m`,
    /// with `d` the least common denominator. `None` if other symbols occur.
    pub fn from_poly(p: &Poly) -> Option<(XPoly, BigInt)> {
        let d = Rational::common_denominator(p.terms().iter().map(|(_, c)| c));
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut key = 0u64;
            for (s, e) in m.pairs() {
                match s.kind() {
                    SymbolKind::PointX(i) if (1..=3).contains(&i) => key += (*e as u64) << (BITS * (i as u32 - 1)),
                    _ => return None,
                }
            }
            let scaled = c * &Rational::from_int(d.clone());
            terms.push((key, scaled.numer().clone()));
        }
        terms.sort_unstable_by_key(|t| t.0);
        Some((XPoly { terms }, d))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(k, c)| {
            let m = Monomial::from_pairs((1..=3u8).map(|i| (Symbol::point_x(i), exponent(*k, i))));
            (m, Rational::from_int(c.clone()))
        }))
    }

    fn merge(&self, other: &XPoly, negate: bool) -> XPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, if negate { -&b[j].1 } else { b[j].1.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, c)| (*k, if negate { -c } else { c.clone() })));
        XPoly { terms: out }
    }

    pub fn scale(&self, c: &BigInt) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        XPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> XPoly {
        XPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v / c)).collect(),
        }
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn diff(&self, m: u8) -> XPoly {
        let u = unit_key(m);
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, c)| {
                let e = exponent(*k, m);
                (e > 0).then(|| (k - u, c * BigInt::from(e)))
            })
            .collect();
        XPoly { terms }
    }

    /// Whether the polynomial vanishes on `x_i = x_j`.
    pub fn vanishes_on_diagonal(&self, i: u8, j: u8) -> bool {
        let mut acc: HashMap<u64, BigInt> = HashMap::new();
        for (k, c) in &self.terms {
            let e = exponent(*k, i) as u64;
            let key = k - e * unit_key(i) + e * unit_key(j);
            *acc.entry(key).or_default() += c;
        }
        acc.values().all(Zero::is_zero)
    }

    /// Exact quotient by `x_i - x_j`; `None` if not divisible.
    pub fn div_difference(&self, i: u8, j: u8) -> Option<XPoly> {
        // Write p = sum_e c_e(rest) x_i^e; q = p / (x_i - x_j) satisfies
        // q_{e-1} = c_e + x_j q_e, from the top degree down.
        let ui = unit_key(i);
        let uj = unit_key(j);
        let mut by_deg: std::collections::BTreeMap<u32, HashMap<u64, BigInt>> = Default::default();
        for (k, c) in &self.terms {
            let e = exponent(*k, i);
            by_deg.entry(e).or_default().insert(k - e as u64 * ui, c.clone());
        }
        let top = match by_deg.keys().next_back() {
            Some(t) => *t,
            None => return Some(XPoly::zero()),
        };
        let mut carry: HashMap<u64, BigInt> = HashMap::new();
        let mut out: Vec<(u64, BigInt)> = Vec::new();
        for e in (0..=top).rev() {
            let mut cur = by_deg.remove(&e).unwrap_or_default();
            for (k, c) in carry.drain() {
                *cur.entry(k + uj).or_default() += c;
            }
            cur.retain(|_, c| !c.is_zero());
            if e == 0 {
                if !cur.is_empty() {
                    return None;
                }
                break;
            }
            for (k, c) in &cur {
                out.push((k + (e as u64 - 1) * ui, c.clone()));
            }
            carry = cur;
        }
        out.sort_unstable_by_key(|t| t.0);
        Some(XPoly { terms: out })
    }

    pub fn pow(&self, e: u32) -> XPoly {
        let mut r = XPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }
}

impl<'a> Add<&'a XPoly> for XPoly {
    type Output = XPoly;
    fn add(self, rhs: &'a XPoly) -> XPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a XPoly> for XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &'a XPoly) -> XPoly {
        self.merge(rhs, true)
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &'a XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (k, c) = &rhs.terms[0];
            return XPoly {
                terms: self.terms.iter().map(|(a, v)| (a + k, v * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let mut acc: HashMap<u64, BigInt> = HashMap::with_capacity(self.len() * rhs.len() / 4 + 1);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let v = acc.entry(ka + kb).or_default();
                *v += ca * cb;
            }
        }
        XPoly::from_map(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    #[test]
    fn round_trip() {
        let q = p("1/2*x1^2*x3 - 3*x2 + 7");
        let (x, d) = XPoly::from_poly(&q).unwrap();
        assert_eq!(d, BigInt::from(2));
        assert_eq!(x.to_poly().scale(&Rational::new(1, 2)), q);
    }

    #[test]
    fn division_by_difference() {
        let a = XPoly::from_poly(&p("x1^3*x2 + 5*x3 - x2^2")).unwrap().0;
        let d = XPoly::difference(1, 2);
        let prod = &a * &d;
        assert!(prod.vanishes_on_diagonal(1, 2));
        assert_eq!(prod.div_difference(1, 2), Some(a.clone()));
        assert!(!a.vanishes_on_diagonal(1, 2));
        assert_eq!(a.div_difference(1, 2), None);
        let prod13 = &a * &XPoly::difference(1, 3);
        assert_eq!(prod13.div_difference(1, 3), Some(a));
    }
}
