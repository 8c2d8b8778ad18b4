//! Elements of `Q(x1..xg)[y1..yg] / (y_m^2 - a(x_m))`.
//!
//! Every denominator met by the oracle is a product of the pair factors
//! `x_i - x_j`, so an element is stored as a rational scale times one
//! integer numerator polynomial in the `x_m` per squarefree y-monomial,
//! over `prod (x_i - x_j)^e_ij`. Reduction (cancelling pair factors and
//! content) is lazy.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::xpoly::XPoly;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::symbol::Symbol;

/// The pairs `(i, j)`, `i < j`, 1-based, in storage order.
pub const PAIRS: [(u8, u8); 3] = [(1, 2), (1, 3), (2, 3)];

pub fn pair_index(i: u8, j: u8) -> usize {
    match (i.min(j), i.max(j)) {
        (1, 2) => 0,
        (1, 3) => 1,
        (2, 3) => 2,
        _ => panic!("no pair ({i}, {j})"),
    }
}

/// `x_i - x_j`.
pub fn pair_factor(k: usize) -> Poly {
    let (i, j) = PAIRS[k];
    Poly::var(Symbol::point_x(i)) - Poly::var(Symbol::point_x(j))
}

fn pair_xpoly(k: usize) -> XPoly {
    let (i, j) = PAIRS[k];
    XPoly::difference(i, j)
}

/// The curve data shared by all elements of one field.
#[derive(Debug)]
pub struct Field {
    pub genus: u8,
    /// `a(x_m) = a_num[m-1] / a_den`.
    pub a_num: Vec<XPoly>,
    pub a_den: BigInt,
    /// `d/dx_m` of `a_num[m-1]`.
    pub da_num: Vec<XPoly>,
}

impl Field {
    /// `coeffs` are the curve polynomial's coefficients in `x` (not the
    /// binomially weighted `a_i`).
    pub fn new(genus: u8, coeffs: &[Rational]) -> Arc<Field> {
        let a_den = Rational::common_denominator(coeffs);
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * &Rational::from_int(a_den.clone())).numer().clone())
            .collect();
        let at = |m: u8| {
            let x = XPoly::var(m);
            ints.iter()
                .enumerate()
                .fold(XPoly::zero(), |acc, (i, c)| acc + &x.pow(i as u32).scale(c))
        };
        let a_num: Vec<XPoly> = (1..=genus).map(at).collect();
        let da_num = (1..=genus).map(|m| a_num[m as usize - 1].diff(m)).collect();
        Arc::new(Field {
            genus,
            a_num,
            a_den,
            da_num,
        })
    }

    /// `a(x_m)` as a rational polynomial.
    pub fn a_at(&self, m: u8) -> Poly {
        self.a_num[m as usize - 1]
            .to_poly()
            .scale(&Rational::new(1, self.a_den.clone()))
    }

    fn slots(&self) -> usize {
        1 << self.genus
    }
}

#[derive(Clone)]
pub struct FieldElem {
    field: Arc<Field>,
    /// `parts[mask]` multiplies `prod_{m in mask} y_m` (bit `m-1`).
    parts: Vec<XPoly>,
    scale: Rational,
    den: [u32; 3],
}

impl FieldElem {
    pub fn zero(field: &Arc<Field>) -> Self {
        FieldElem {
            field: field.clone(),
            parts: vec![XPoly::zero(); field.slots()],
            scale: Rational::one(),
            den: [0; 3],
        }
    }

    pub fn constant(field: &Arc<Field>, c: &Rational) -> Self {
        let mut e = Self::zero(field);
        if !c.is_zero() {
            e.parts[0] = XPoly::one();
            e.scale = c.clone();
        }
        e
    }

    /// A polynomial in the `x_m` only.
    pub fn from_poly(field: &Arc<Field>, p: &Poly) -> Self {
        let (x, d) = XPoly::from_poly(p).expect("polynomial in the x_m");
        let mut e = Self::zero(field);
        e.parts[0] = x;
        e.scale = Rational::new(1, d.clone());
        e
    }

    pub fn x(field: &Arc<Field>, m: u8) -> Self {
        let mut e = Self::zero(field);
        e.parts[0] = XPoly::var(m);
        e
    }

    pub fn y(field: &Arc<Field>, m: u8) -> Self {
        let mut e = Self::zero(field);
        e.parts[1 << (m - 1)] = XPoly::one();
        e
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn den(&self) -> [u32; 3] {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(XPoly::is_zero)
    }

    /// The x-only polynomial, if there is no y-dependence and no denominator.
    pub fn to_poly(&self) -> Option<Poly> {
        (self.den == [0; 3] && self.parts[1..].iter().all(XPoly::is_zero))
            .then(|| self.parts[0].to_poly().scale(&self.scale))
    }

    /// Total number of numerator terms, a size measure.
    pub fn size(&self) -> usize {
        self.parts.iter().map(XPoly::len).sum()
    }

    fn lift(&self, den: [u32; 3]) -> Vec<XPoly> {
        let mut mult = XPoly::one();
        for k in 0..3 {
            let d = den[k] - self.den[k];
            if d > 0 {
                mult = &mult * &pair_xpoly(k).pow(d);
            }
        }
        if mult == XPoly::one() {
            return self.parts.clone();
        }
        self.parts.iter().map(|p| p * &mult).collect()
    }

    fn combine(&self, other: &Self, sign: &Rational) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.scale(sign);
        }
        let den = [0, 1, 2].map(|k| self.den[k].max(other.den[k]));
        let a = self.lift(den);
        let b = other.lift(den);
        let c1 = &self.scale;
        let c2 = sign * &other.scale;
        let (scale, parts) = if *c1 == c2 {
            (c1.clone(), a.into_iter().zip(b).map(|(x, y)| x + &y).collect())
        } else {
            // c1 A + c2 B = (g / D) (n1/g A + n2/g B), n_i = c_i D
            let d = c1.denom().lcm(c2.denom());
            let n1 = c1.numer() * (&d / c1.denom());
            let n2 = c2.numer() * (&d / c2.denom());
            let g = n1.gcd(&n2);
            let (m1, m2) = (&n1 / &g, &n2 / &g);
            let parts = a
                .into_iter()
                .zip(b)
                .map(|(x, y)| x.scale(&m1) + &y.scale(&m2))
                .collect();
            (Rational::new(g, d), parts)
        };
        FieldElem {
            field: self.field.clone(),
            parts,
            scale,
            den,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        FieldElem {
            scale: &self.scale * c,
            ..self.clone()
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        let (x, d) = XPoly::from_poly(p).expect("polynomial in the x_m");
        self.mul_xpoly(&x).scale(&Rational::new(1, d.clone()))
    }

    pub fn mul_xpoly(&self, p: &XPoly) -> Self {
        FieldElem {
            field: self.field.clone(),
            parts: self.parts.iter().map(|q| q * p).collect(),
            scale: self.scale.clone(),
            den: self.den,
        }
    }

    /// Divide by `(x_i - x_j)^e` for the pair with storage index `k`.
    pub fn div_pair(mut self, k: usize, e: u32) -> Self {
        self.den[k] += e;
        self
    }

    /// Divide by a constant times a product of pair factors.
    pub fn div_pairs(mut self, c: &Rational, exps: [u32; 3]) -> Self {
        for k in 0..3 {
            self.den[k] += exps[k];
        }
        self.scale(&c.recip())
    }

    /// Cancel pair factors common to every numerator part, and move the
    /// content of the numerators into the scale.
    pub fn reduce(&mut self) {
        if self.is_zero() {
            self.den = [0; 3];
            self.scale = Rational::one();
            return;
        }
        for k in 0..3 {
            let (i, j) = PAIRS[k];
            while self.den[k] > 0 && self.parts.iter().all(|p| p.vanishes_on_diagonal(i, j)) {
                self.parts = self
                    .parts
                    .iter()
                    .map(|p| p.div_difference(i, j).expect("vanishes on the diagonal"))
                    .collect();
                self.den[k] -= 1;
            }
        }
        let g = self.parts.iter().fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
        if !g.is_one() && !g.is_zero() {
            self.parts = self.parts.iter().map(|p| p.div_scalar(&g)).collect();
            self.scale = &self.scale * &Rational::from_int(g);
        }
    }

    pub fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    /// `y_m d/dx_m`, with `y_m' = a'(x_m) / (2 y_m)`.
    pub fn derive(&self, m: u8) -> Self {
        let f = &self.field;
        let bit = 1usize << (m - 1);
        let a = &f.a_num[m as usize - 1];
        let da = &f.da_num[m as usize - 1];
        // Everything below carries an extra factor 2 a_den.
        let two_d = &f.a_den * BigInt::from(2);
        let mut out = vec![XPoly::zero(); f.slots()];
        for (mask, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let dp = p.diff(m);
            if mask & bit != 0 {
                let t = (&dp * a).scale(&BigInt::from(2)) + &(p * da);
                out[mask ^ bit] = std::mem::take(&mut out[mask ^ bit]) + &t;
            } else if !dp.is_zero() {
                out[mask | bit] = std::mem::take(&mut out[mask | bit]) + &dp.scale(&two_d);
            }
        }
        let mut acc = FieldElem {
            field: f.clone(),
            parts: out,
            scale: &self.scale * &Rational::new(1, two_d.clone()),
            den: self.den,
        };
        // d/dx_m (x_i - x_j)^(-e) = -e (+-1) (x_i - x_j)^(-e-1)
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let e = self.den[k];
            if e == 0 || (i != m && j != m) || j > f.genus {
                continue;
            }
            let sign = if i == m { -(e as i64) } else { e as i64 };
            let term = (self * &FieldElem::y(f, m)).scale(&Rational::from(sign)).div_pair(k, 1);
            acc = acc + &term;
        }
        acc
    }

    /// The numerator as a polynomial in `x_m`, `y_m`, scale included.
    pub fn numerator(&self) -> Poly {
        let num = self.parts.iter().enumerate().fold(Poly::zero(), |acc, (mask, p)| {
            let ys = (1..=self.field.genus)
                .filter(|m| mask & (1 << (m - 1)) != 0)
                .fold(Poly::one(), |q, m| q * Poly::var(Symbol::point_y(m)));
            acc + p.to_poly() * ys
        });
        num.scale(&self.scale)
    }

    /// The denominator as a polynomial.
    pub fn denominator(&self) -> Poly {
        (0..3).fold(Poly::one(), |acc, k| acc * pair_factor(k).pow(self.den[k]))
    }
}

impl<'a> Add<&'a FieldElem> for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        self.combine(rhs, &Rational::one())
    }
}

impl<'a> Sub<&'a FieldElem> for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        self.combine(rhs, &-Rational::one())
    }
}

impl<'a> Mul<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        let f = &self.field;
        let g = f.genus as u32;
        // a(x_m) = a_num / a_den: give every product the common factor
        // a_den^-g and multiply back the missing powers.
        let unit_den = f.a_den.is_one();
        let mut parts = vec![XPoly::zero(); f.slots()];
        for (s, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (t, q) in rhs.parts.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let mut prod = p * q;
                let common = s & t;
                let mut used = 0;
                for m in 1..=f.genus {
                    if common & (1 << (m - 1)) != 0 {
                        prod = &prod * &f.a_num[m as usize - 1];
                        used += 1;
                    }
                }
                if !unit_den {
                    prod = prod.scale(&num_traits::pow(f.a_den.clone(), (g - used) as usize));
                }
                parts[s ^ t] = std::mem::take(&mut parts[s ^ t]) + &prod;
            }
        }
        let mut scale = &self.scale * &rhs.scale;
        if !unit_den {
            scale = &scale * &Rational::new(1, num_traits::pow(f.a_den.clone(), g as usize));
        }
        FieldElem {
            field: f.clone(),
            parts,
            scale,
            den: [0, 1, 2].map(|k| self.den[k] + rhs.den[k]),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        &self * rhs
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.scale(&-Rational::one())
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.combine(other, &-Rational::one()).is_zero()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator();
        if den == Poly::one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({}) / ({})", self.numerator(), den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    fn field(g: u8) -> Arc<Field> {
        // a(x) = 1 + 4 x^4 at genus 1, and a generic sextic / octic otherwise
        let c: Vec<Rational> = match g {
            1 => [1, 0, 0, 0, 4].map(Rational::from).to_vec(),
            2 => [1, 6, 15, 40, 15, 6, 4].map(Rational::from).to_vec(),
            _ => [1, 8, 28, 56, 140, 56, 28, 8, 4].map(Rational::from).to_vec(),
        };
        Field::new(g, &c)
    }

    #[test]
    fn derive_basics() {
        let f = field(1);
        assert_eq!(FieldElem::x(&f, 1).derive(1), FieldElem::y(&f, 1));
        assert_eq!(FieldElem::y(&f, 1).derive(1), FieldElem::from_poly(&f, &p("8*x1^3")));
        let y2 = &FieldElem::y(&f, 1) * &FieldElem::y(&f, 1);
        assert_eq!(y2.derive(1), &FieldElem::y(&f, 1) * &FieldElem::from_poly(&f, &p("16*x1^3")));
    }

    #[test]
    fn pair_denominators() {
        let f = field(2);
        let inv = FieldElem::constant(&f, &Rational::one()).div_pair(0, 1);
        let back = &inv * &FieldElem::from_poly(&f, &pair_factor(0));
        assert_eq!(back.clone().reduced().to_poly(), Some(Poly::one()));
        // y1 d/dx1 of 1/(x1 - x2) is -y1/(x1 - x2)^2
        let d = inv.derive(1);
        let expected = (-FieldElem::y(&f, 1)).div_pair(0, 2);
        assert_eq!(d, expected);
        let d2 = inv.derive(2);
        assert_eq!(d2, FieldElem::y(&f, 2).div_pair(0, 2));
    }

    #[test]
    fn derivations_commute() {
        let f = field(3);
        let e = (&FieldElem::y(&f, 1) * &FieldElem::x(&f, 2)).div_pair(2, 1) + &FieldElem::y(&f, 3).div_pair(1, 2);
        assert_eq!(e.derive(1).derive(3), e.derive(3).derive(1));
        assert_eq!(e.derive(2).derive(1), e.derive(1).derive(2));
    }
}
