use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::symbol::Symbol;

/// A power product of symbols, stored as `(symbol, exponent)` pairs sorted by
/// symbol with no zero exponents.
///
/// Monomials are totally ordered degree-lexicographically: first by total
/// degree, then by exponent of the earliest symbol in the global order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Symbol, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Self::power(s, 1)
    }

    pub fn power(s: Symbol, e: u32) -> Self {
        let mut v = SmallVec::new();
        if e > 0 {
            v.push((s, e));
        }
        Monomial(v)
    }

    /// Build from arbitrary pairs; merges repeated symbols and drops zero
    /// exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut v: SmallVec<[(Symbol, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(Symbol, u32); 4]> = SmallVec::new();
        for (s, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => out.push((s, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, s: Symbol) -> u32 {
        self.0
            .binary_search_by_key(&s, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Copy with the exponent of `s` replaced by `e`.
    pub fn with_exponent(&self, s: Symbol, e: u32) -> Self {
        let mut v = self.0.clone();
        match v.binary_search_by_key(&s, |p| p.0) {
            Ok(i) if e == 0 => {
                v.remove(i);
            }
            Ok(i) => v[i].1 = e,
            Err(i) if e > 0 => v.insert(i, (s, e)),
            Err(_) => {}
        }
        Monomial(v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < s {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == s {
                let f = other.0[j].1;
                j += 1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((s, e - f));
                }
            } else {
                out.push((s, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|p| p.0)
    }

    fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(sa, ea)), Some(&(sb, eb))) => {
                    if sa == sb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if sa < sb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (s, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lex_order() {
        let a0 = Symbol::a(0);
        let a1 = Symbol::a(1);
        let x = Symbol::x();
        let m = |p: &[(Symbol, u32)]| Monomial::from_pairs(p.iter().copied());
        assert!(m(&[(x, 2)]) > m(&[(a0, 1)]));
        assert!(m(&[(a0, 1)]) > m(&[(a1, 1)]));
        assert!(m(&[(a0, 1), (x, 1)]) > m(&[(a1, 2)]));
        assert!(Monomial::one() < m(&[(x, 1)]));
    }

    #[test]
    fn mul_div() {
        let a = Monomial::from_pairs([(Symbol::a(0), 2), (Symbol::x(), 1)]);
        let b = Monomial::from_pairs([(Symbol::x(), 3)]);
        let p = a.mul(&b);
        assert_eq!(p.exponent(Symbol::x()), 4);
        assert_eq!(p.div(&b).unwrap(), a);
        assert!(b.div(&a).is_none());
    }
}
