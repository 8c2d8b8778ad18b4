//! Concrete rational curves `y^2 = sum C(2g+2, i) a_i x^i`.

use std::sync::Arc;

use serde::Serialize;

use super::field::Field;
use crate::rational::Rational;
use crate::sl2::{binomial, check_genus};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CurveInstance {
    pub genus: u8,
    #[serde(serialize_with = "ser_rationals")]
    pub a: Vec<Rational>,
    /// `r^2 = a_{2g+2}`.
    #[serde(serialize_with = "ser_rational")]
    pub r: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// Coefficients of `a(x)` in `x`, lowest first.
pub fn curve_coefficients(g: u8, a: &[Rational]) -> Vec<Rational> {
    let n = 2 * g as u32 + 2;
    a.iter().enumerate().map(|(i, c)| c * &binomial(n, i as u32)).collect()
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bc);
        }
        r = trim(r);
    }
    r
}

/// Degree of `gcd(p, q)` for univariate polynomials (coefficient vectors).
pub fn gcd_degree(p: &[Rational], q: &[Rational]) -> usize {
    let (mut a, mut b) = (trim(p.to_vec()), trim(q.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Validate a coefficient list `a_0..a_{2g+2}`.
pub fn make_instance(g: u8, a: &[Rational]) -> Result<CurveInstance> {
    check_genus(g)?;
    let n = 2 * g as usize + 2;
    if a.len() != n + 1 {
        return Err(Error::BadCurve(format!("genus {g} needs {} coefficients, got {}", n + 1, a.len())));
    }
    let top = &a[n];
    if top.is_zero() {
        return Err(Error::NotASquare(top.to_string()));
    }
    let r = top.sqrt_exact().ok_or_else(|| Error::NotASquare(top.to_string()))?;
    let c = curve_coefficients(g, a);
    let dc: Vec<Rational> = c.iter().enumerate().skip(1).map(|(i, ci)| ci * &Rational::from(i as i64)).collect();
    if gcd_degree(&c, &dc) > 0 {
        return Err(Error::DegenerateCurve);
    }
    Ok(CurveInstance {
        genus: g,
        a: a.to_vec(),
        r,
    })
}

impl CurveInstance {
    pub fn field(&self) -> Arc<Field> {
        Field::new(self.genus, &curve_coefficients(self.genus, &self.a))
    }

    /// The same curve on the other branch at infinity.
    pub fn flipped(&self) -> CurveInstance {
        CurveInstance {
            r: -self.r.clone(),
            ..self.clone()
        }
    }

    pub fn describe(&self) -> String {
        let a: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        format!("g={} a=({}) r={}", self.genus, a.join(","), self.r)
    }
}

/// The default test curves, two per genus. A candidate that fails the
/// squarefree check is replaced by incrementing `a_2`.
pub fn default_curves(g: u8) -> Result<Vec<CurveInstance>> {
    let lists: &[&[i64]] = match g {
        1 => &[&[1, 1, 2, 1, 4], &[1, 0, 0, 0, 4], &[2, -1, 3, 1, 9]],
        2 => &[&[1, 1, 1, 2, 1, 1, 4], &[2, 1, 0, 1, -1, 1, 9]],
        3 => &[&[1, 1, 1, 1, 2, 1, 1, 1, 4], &[2, -1, 1, 3, 1, -2, 3, 1, 9]],
        _ => return Err(Error::UnsupportedGenus(g)),
    };
    lists.iter().map(|l| instance_or_next(g, l)).collect()
}

pub fn instance_or_next(g: u8, list: &[i64]) -> Result<CurveInstance> {
    let mut a: Vec<Rational> = list.iter().map(|&c| Rational::from(c)).collect();
    for _ in 0..32 {
        match make_instance(g, &a) {
            Err(Error::DegenerateCurve) => a[2] = &a[2] + &Rational::one(),
            other => return other,
        }
    }
    Err(Error::DegenerateCurve)
}

/// Parse `1,1,2,1,4` (entries may be fractions `p/q`).
pub fn parse_curve(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|e| Error::BadCurve(format!("{t:?}: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from(c)).collect()
    }

    #[test]
    fn validation() {
        let i = make_instance(1, &q(&[1, 1, 2, 1, 4])).unwrap();
        assert_eq!(i.r, Rational::from(2));
        assert!(matches!(make_instance(1, &q(&[1, 0, 0, 0, 3])), Err(Error::NotASquare(_))));
        assert!(matches!(make_instance(2, &q(&[1, 0, 0, 0, 0, 1, 0])), Err(Error::NotASquare(_))));
        // (1 + x^2)^2 = 1 + 2x^2 + x^4 has a repeated factor
        assert!(matches!(make_instance(1, &q(&[1, 0, 2, 0, 1]).iter().enumerate().map(|(i, c)| c / &binomial(4, i as u32)).collect::<Vec<_>>()), Err(Error::DegenerateCurve)));
        assert!(matches!(make_instance(1, &q(&[1, 2, 3])), Err(Error::BadCurve(_))));
    }

    #[test]
    fn defaults_are_valid() {
        for (g, n) in [(1, 3), (2, 2), (3, 2)] {
            assert_eq!(default_curves(g).unwrap().len(), n);
        }
    }
}
