//! Exact linear algebra over the rationals on polynomials viewed as vectors
//! in the monomial basis.

use std::collections::{BTreeMap, HashMap};

use crate::poly::{Monomial, Poly};
use crate::rational::Rational;

/// Sparse rational vector, sorted by index with no zero entries.
type Sparse = Vec<(usize, Rational)>;

/// `a + c*b`, merging sorted sparse vectors.
fn axpy(a: &Sparse, c: &Rational, b: &Sparse) -> Sparse {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale(a: &Sparse, c: &Rational) -> Sparse {
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

/// Incrementally built row-echelon basis of the span of a list of
/// polynomials ("generators"). Each basis row remembers how it was formed
/// from the generators, so membership queries also return coefficients.
#[derive(Default, Clone)]
pub struct LinearSpan {
    ids: HashMap<(usize, Monomial), usize>,
    /// pivot column -> (row with leading entry 1 at pivot, combination of generators)
    rows: BTreeMap<usize, (Sparse, Sparse)>,
    generators: usize,
}

impl LinearSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let mut s = Self::new();
        for p in polys {
            s.push(p);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    fn to_sparse_mut(&mut self, blocks: &[Poly]) -> Sparse {
        let mut v: Sparse = Vec::new();
        for (b, p) in blocks.iter().enumerate() {
            for (m, c) in p.terms() {
                let n = self.ids.len();
                v.push((*self.ids.entry((b, m.clone())).or_insert(n), c.clone()));
            }
        }
        v.sort_unstable_by_key(|t| t.0);
        v
    }

    fn to_sparse(&self, blocks: &[Poly]) -> Option<Sparse> {
        let mut v = Vec::new();
        for (b, p) in blocks.iter().enumerate() {
            for (m, c) in p.terms() {
                v.push((*self.ids.get(&(b, m.clone()))?, c.clone()));
            }
        }
        v.sort_unstable_by_key(|t| t.0);
        Some(v)
    }

    /// Reduce `v` (with combination `combo`) against the current rows.
    fn reduce(&self, mut v: Sparse, mut combo: Sparse) -> (Sparse, Sparse) {
        let mut cursor = 0;
        loop {
            let Some(pos) = v.iter().position(|t| t.0 >= cursor) else {
                break;
            };
            let (key, coef) = v[pos].clone();
            match self.rows.get(&key) {
                Some((row, rc)) => {
                    let c = -coef;
                    v = axpy(&v, &c, row);
                    combo = axpy(&combo, &c, rc);
                }
                None => cursor = key + 1,
            }
        }
        (v, combo)
    }

    /// Add a generator. Returns `Some(relation)` when it is dependent on the
    /// previous generators: `relation[j]` are coefficients with
    /// `sum_j relation[j] * gen_j = 0` (dense, including the new one).
    pub fn push(&mut self, p: &Poly) -> Option<Vec<Rational>> {
        self.push_blocks(std::slice::from_ref(p))
    }

    /// Like [`push`](Self::push) for a vector of polynomials, one per
    /// equation; the blocks are treated as independent coordinates.
    pub fn push_blocks(&mut self, blocks: &[Poly]) -> Option<Vec<Rational>> {
        let idx = self.generators;
        self.generators += 1;
        let v = self.to_sparse_mut(blocks);
        let (v, combo) = self.reduce(v, vec![(idx, Rational::one())]);
        if v.is_empty() {
            let mut dense = vec![Rational::zero(); self.generators];
            for (j, c) in combo {
                dense[j] = c;
            }
            return Some(dense);
        }
        let inv = v[0].1.recip();
        let key = v[0].0;
        let v = scale(&v, &inv);
        let combo = scale(&combo, &inv);
        // Keep rows fully reduced so later reductions stay short.
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let (row, rc) = self.rows.get(&k).unwrap();
            if let Some((_, c)) = row.iter().find(|t| t.0 == key) {
                let c = -c.clone();
                let nr = axpy(row, &c, &v);
                let nc = axpy(rc, &c, &combo);
                self.rows.insert(k, (nr, nc));
            }
        }
        self.rows.insert(key, (v, combo));
        None
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.express(p).is_some()
    }

    /// Coefficients `c` with `p = sum_j c_j gen_j`, if `p` is in the span.
    pub fn express(&self, p: &Poly) -> Option<Vec<Rational>> {
        self.express_blocks(std::slice::from_ref(p))
    }

    pub fn express_blocks(&self, blocks: &[Poly]) -> Option<Vec<Rational>> {
        let v = self.to_sparse(blocks)?;
        let (v, combo) = self.reduce(v, Vec::new());
        if !v.is_empty() {
            return None;
        }
        let mut dense = vec![Rational::zero(); self.generators];
        for (j, c) in combo {
            dense[j] = -c;
        }
        Some(dense)
    }
}

/// Find `c` with `e0 + sum_j c_j basis_j = 0`.
pub fn solve_vanishing(e0: &Poly, basis: &[Poly]) -> Option<Vec<Rational>> {
    LinearSpan::from_polys(basis).express(&-e0)
}

/// Simultaneous version of [`solve_vanishing`]: equation `t` reads
/// `eqs[t].0 + sum_j c_j eqs[t].1[j] = 0` with the same unknowns `c`.
pub fn solve_vanishing_system(eqs: &[(Poly, Vec<Poly>)]) -> Option<Vec<Rational>> {
    let n = eqs.first().map_or(0, |e| e.1.len());
    assert!(eqs.iter().all(|e| e.1.len() == n), "unknown count differs between equations");
    let mut span = LinearSpan::new();
    for j in 0..n {
        let col: Vec<Poly> = eqs.iter().map(|e| e.1[j].clone()).collect();
        span.push_blocks(&col);
    }
    let rhs: Vec<Poly> = eqs.iter().map(|e| -&e.0).collect();
    span.express_blocks(&rhs)
}

/// Dimension of the rational span.
pub fn rank(polys: &[Poly]) -> usize {
    LinearSpan::from_polys(polys).rank()
}

/// Basis of `{c : sum_j c_j polys_j = 0}`.
pub fn kernel(polys: &[Poly]) -> Vec<Vec<Rational>> {
    let mut span = LinearSpan::new();
    let mut out = Vec::new();
    for p in polys {
        if let Some(mut rel) = span.push(p) {
            rel.resize(polys.len(), Rational::zero());
            out.push(rel);
        }
    }
    out
}

/// `sum_j c_j polys_j`.
pub fn combine(coeffs: &[Rational], polys: &[Poly]) -> Poly {
    coeffs
        .iter()
        .zip(polys)
        .filter(|(c, _)| !c.is_zero())
        .fold(Poly::zero(), |acc, (c, p)| acc + p.scale(c))
}

/// Solve a dense square or overdetermined system `m * x = b` over the
/// rationals. Returns `None` if inconsistent or underdetermined.
pub fn solve_dense(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][c].is_zero()) else {
            return None;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][c].recip();
        for v in a[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in c..=cols {
                    let d = &f * &a[pivot_row][k];
                    a[r][k] -= &d;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !a[r][cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| a[pivots[c]][cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    #[test]
    fn membership_and_coefficients() {
        let basis = vec![p("x + y"), p("x - y"), p("a0")];
        let target = p("3*x + y - 2*a0");
        let c = LinearSpan::from_polys(&basis).express(&target).unwrap();
        assert_eq!(combine(&c, &basis), target);
        assert!(!LinearSpan::from_polys(&basis).contains(&p("x^2")));
    }

    #[test]
    fn kernel_and_rank() {
        let polys = vec![p("x"), p("y"), p("2*x - 3*y"), p("a0")];
        assert_eq!(rank(&polys), 3);
        let k = kernel(&polys);
        assert_eq!(k.len(), 1);
        assert!(combine(&k[0], &polys).is_zero());
    }

    #[test]
    fn vanishing_solution() {
        let e0 = p("x^2 + 2*x*y");
        let basis = vec![p("x*y"), p("x^2")];
        let c = solve_vanishing(&e0, &basis).unwrap();
        assert!((e0 + combine(&c, &basis)).is_zero());
    }

    #[test]
    fn system_of_equations() {
        // c0 + c1 = 3 and c0 - c1 = 1, written as polynomial identities.
        let eqs = vec![
            (p("-3*x"), vec![p("x"), p("x")]),
            (p("-1"), vec![p("1"), p("-1")]),
        ];
        let c = solve_vanishing_system(&eqs).unwrap();
        assert_eq!(c, vec![Rational::from(2), Rational::one()]);
    }

    #[test]
    fn dense_solve() {
        let m = vec![
            vec![Rational::from(2), Rational::from(1)],
            vec![Rational::from(1), Rational::from(3)],
        ];
        let b = vec![Rational::from(3), Rational::from(4)];
        assert_eq!(solve_dense(&m, &b).unwrap(), vec![Rational::one(), Rational::one()]);
    }
}
