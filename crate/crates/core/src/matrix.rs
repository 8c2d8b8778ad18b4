//! Dense matrices of polynomials and exact determinants.
//!
//! All indices are 0-based.

use std::fmt;

use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        PolyMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Poly::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Column vector.
    pub fn column(v: Vec<Poly>) -> Self {
        let n = v.len();
        Self::new(n, 1, v)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| self.get(i, j) == &-self.get(j, i)))
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::IndexOutOfRange(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Poly::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant of the complementary submatrix after deleting the given
    /// rows and columns. Unsigned.
    pub fn minor(&self, delete_rows: &[usize], delete_cols: &[usize]) -> Result<Poly> {
        if delete_rows.len() != delete_cols.len() {
            return Err(Error::IndexOutOfRange(
                "row and column deletion sets differ in size".into(),
            ));
        }
        if let Some(&bad) = delete_rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {bad}")));
        }
        if let Some(&bad) = delete_cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange(format!("column {bad}")));
        }
        let keep_r: Vec<usize> = (0..self.rows).filter(|r| !delete_rows.contains(r)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|c| !delete_cols.contains(c)).collect();
        self.select(&keep_r, &keep_c).det()
    }

    /// Exact determinant: cofactor expansion below 4x4, Bareiss otherwise.
    pub fn det(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        if self.rows < 4 {
            Ok(self.det_cofactor_unchecked())
        } else {
            Ok(self.det_bareiss_unchecked())
        }
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        Ok(self.det_cofactor_unchecked())
    }

    /// Fraction-free Bareiss elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        Ok(self.det_bareiss_unchecked())
    }

    fn det_cofactor_unchecked(&self) -> Poly {
        let n = self.rows;
        match n {
            0 => Poly::one(),
            1 => self.entries[0].clone(),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            _ => {
                let rest: Vec<usize> = (1..n).collect();
                let mut acc = Poly::zero();
                for j in 0..n {
                    if self.get(0, j).is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let sub = self.select(&rest, &cols).det_cofactor_unchecked();
                    let term = self.get(0, j) * &sub;
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    fn det_bareiss_unchecked(&self) -> Poly {
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut m: Vec<Vec<Poly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Poly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss step is an exact division");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Generalized Laplace expansion along the given set of rows:
    /// `det M = sum_C (-1)^(sum R + sum C) det M[R,C] det M[R',C']`.
    pub fn det_laplace_rows(&self, rows: &[usize]) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let k = rows.len();
        let comp_rows: Vec<usize> = (0..n).filter(|r| !rows.contains(r)).collect();
        let row_sum: usize = rows.iter().sum();
        let mut acc = Poly::zero();
        for cols in subsets(n, k) {
            let head = self.select(rows, &cols).det()?;
            if head.is_zero() {
                continue;
            }
            let comp_cols: Vec<usize> = (0..n).filter(|c| !cols.contains(c)).collect();
            let tail = self.select(&comp_rows, &comp_cols).det()?;
            let term = &head * &tail;
            let sign = (row_sum + cols.iter().sum::<usize>()) % 2;
            acc = if sign == 0 { acc + term } else { acc - term };
        }
        Ok(acc)
    }

    /// `det [[h, B], [B^t, 0]]` for a square `h` and border columns `B`.
    ///
    /// Expanded along the border rows and then the border columns, so only
    /// minors of `h` are ever computed.
    pub fn bordered_det(&self, borders: &[Vec<Poly>]) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let k = borders.len();
        if borders.iter().any(|b| b.len() != n) {
            return Err(Error::IndexOutOfRange("border length differs from matrix size".into()));
        }
        // B is n x k, B^t is k x n.
        let bt = PolyMatrix::from_fn(k, n, |i, j| borders[i][j].clone());
        let all: Vec<usize> = (0..k).collect();
        let mut acc = Poly::zero();
        // Rows n..n+k of the full matrix are [B^t | 0]; columns n..n+k are [B; 0].
        // Expanding along those rows and columns leaves h with rows T and
        // columns S removed.
        for s in subsets(n, k) {
            let ds = bt.select(&all, &s).det()?;
            if ds.is_zero() {
                continue;
            }
            let keep_c: Vec<usize> = (0..n).filter(|c| !s.contains(c)).collect();
            for t in subsets(n, k) {
                let dt = bt.select(&all, &t).det()?;
                if dt.is_zero() {
                    continue;
                }
                let keep_r: Vec<usize> = (0..n).filter(|r| !t.contains(r)).collect();
                let mid = self.select(&keep_r, &keep_c).det()?;
                if mid.is_zero() {
                    continue;
                }
                let term = &(&ds * &dt) * &mid;
                let parity = (s.iter().sum::<usize>() + t.iter().sum::<usize>() + k) % 2;
                acc = if parity == 0 { acc + term } else { acc - term };
            }
        }
        Ok(acc)
    }

    /// Full bordered matrix `[[h, B], [B^t, 0]]`.
    pub fn bordered(&self, borders: &[Vec<Poly>]) -> PolyMatrix {
        let n = self.rows;
        let k = borders.len();
        PolyMatrix::from_fn(n + k, n + k, |i, j| match (i < n, j < n) {
            (true, true) => self.get(i, j).clone(),
            (true, false) => borders[j - n][i].clone(),
            (false, true) => borders[i - n][j].clone(),
            (false, false) => Poly::zero(),
        })
    }
}

/// All increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect())
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&["x", "1"], &["1", "x"]]).det().unwrap(), p("x^2 - 1"));
        for n in 0..7 {
            assert_eq!(PolyMatrix::identity(n).det().unwrap(), Poly::one());
        }
        assert!(matches!(PolyMatrix::zeros(2, 3).det(), Err(Error::NonSquare(2, 3))));
    }

    #[test]
    fn minors() {
        let id = PolyMatrix::identity(3);
        assert_eq!(id.minor(&[0], &[0]).unwrap(), Poly::one());
        let q = m(&[&["x", "a0", "1"], &["a1", "y", "2"], &["3", "x", "a2"]]);
        assert_eq!(q.minor(&[], &[]).unwrap(), q.det().unwrap());
        assert!(q.minor(&[3], &[0]).is_err());
        assert!(q.minor(&[0, 1], &[0]).is_err());
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let q = m(&[
            &["0", "x", "1", "0"],
            &["a0", "0", "0", "1"],
            &["1", "0", "y", "0"],
            &["0", "1", "0", "a1"],
        ]);
        assert_eq!(q.det_bareiss().unwrap(), q.det_cofactor().unwrap());
    }

    #[test]
    fn bordered_agrees_with_full_matrix() {
        let h = m(&[&["a0", "x", "1"], &["x", "a1", "y"], &["1", "y", "a2"]]);
        let l = vec![p("l0"), p("l1"), p("l2")];
        let k = vec![p("k0"), p("2"), p("k2")];
        for borders in [vec![l.clone()], vec![l.clone(), k.clone()]] {
            let full = h.bordered(&borders).det_bareiss().unwrap();
            assert_eq!(h.bordered_det(&borders).unwrap(), full);
            let n = h.rows();
            let rows: Vec<usize> = (n..n + borders.len()).collect();
            assert_eq!(h.bordered(&borders).det_laplace_rows(&rows).unwrap(), full);
        }
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
    }
}
