//! Exact verification on concrete curves.
//!
//! For a curve with rational coefficients and `a_{2g+2}` a rational square,
//! every ℘-function is computed as an element of the function field of the
//! symmetric product, and each catalogued relation is evaluated there.

pub mod discrepancy;
pub mod field;
pub mod xpoly;
pub mod instance;
pub mod solve;

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use field::{Field, FieldElem};
pub use instance::{default_curves, make_instance, CurveInstance};
pub use solve::{solve_wp, Evaluator, IntegrabilityCheck, Provenance, WpAssignment};

use crate::catalog::{genus3, DetForm, Identity, IdentitySet, Source, Variables};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::{Error, Result};

/// `state <- a state + c (mod 2^64)` with the constants below; the default
/// seed is 1.
pub const LCG_A: u64 = 6364136223846793005;
pub const LCG_C: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(LCG_A).wrapping_add(LCG_C);
        self.0
    }

    /// A small rational `n / d` with `n` in `-3..=3` and `d` in `1..=3`.
    pub fn small_rational(&mut self) -> Rational {
        let n = ((self.next_u64() >> 33) % 7) as i64 - 3;
        let d = ((self.next_u64() >> 33) % 3) as i64 + 1;
        Rational::new(n, d)
    }

    /// A vector of small rationals that is not identically zero.
    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        loop {
            let v: Vec<Rational> = (0..len).map(|_| self.small_rational()).collect();
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }
}

/// A curve instance with its solved ℘-functions.
pub struct Oracle {
    pub instance: CurveInstance,
    pub field: Arc<Field>,
    pub assignment: WpAssignment,
}

impl Oracle {
    pub fn new(instance: CurveInstance) -> Result<Oracle> {
        let field = instance.field();
        let assignment = solve_wp(&instance, &field)?;
        Ok(Oracle {
            instance,
            field,
            assignment,
        })
    }

    pub fn evaluator(&self) -> Evaluator<'_> {
        Evaluator {
            field: &self.field,
            instance: &self.instance,
            values: &self.assignment.values,
        }
    }

    pub fn eval(&self, p: &Poly) -> Result<FieldElem> {
        Ok(self.evaluator().eval(p)?.reduced())
    }

    pub fn vanishes(&self, p: &Poly) -> Result<bool> {
        Ok(self.eval(p)?.is_zero())
    }

    pub fn verify_identity(&self, id: &Identity) -> Verdict {
        self.verify_relation(id, &id.relation)
    }

    /// The verdict for `id` with `relation` standing in for its own
    /// (e.g. after a change of variables).
    pub fn verify_relation(&self, id: &Identity, relation: &Poly) -> Verdict {
        self.verdict(id, self.eval(relation))
    }

    /// `plus + scale * det(matrix)`, with the determinant taken after
    /// evaluating the entries.
    pub fn eval_det_form(&self, form: &DetForm) -> Result<FieldElem> {
        let ev = self.evaluator();
        let m = &form.matrix;
        if !m.is_square() {
            return Err(Error::NonSquare(m.rows(), m.cols()));
        }
        let entries = m.entries().iter().map(|e| ev.eval(e)).collect::<Result<Vec<_>>>()?;
        let det = field_det(&self.field, m.rows(), &entries);
        Ok((ev.eval(&form.plus)? + &det.scale(&form.scale)).reduced())
    }

    fn verdict(&self, id: &Identity, value: Result<FieldElem>) -> Verdict {
        match value {
            Ok(v) => Verdict {
                name: id.name.clone(),
                source: id.source,
                origin: id.origin.clone(),
                vanishes: v.is_zero(),
                residual: (!v.is_zero()).then(|| truncate(&v.to_string())),
                error: None,
            },
            Err(e) => Verdict {
                name: id.name.clone(),
                source: id.source,
                origin: id.origin.clone(),
                vanishes: false,
                residual: None,
                error: Some(e.to_string()),
            },
        }
    }

    /// Evaluate every member, in catalog order.
    pub fn verify(&self, set: &IdentitySet) -> Vec<Verdict> {
        set.members
            .par_iter()
            .map(|id| match (&id.det_form, set.variables) {
                (Some(form), Variables::Covariant) => self.verdict(id, self.eval_det_form(form)),
                _ => self.verify_relation(id, &set.covariant_relation(id)),
            })
            .collect()
    }

    pub fn report(&self, set: &IdentitySet, seed: u64) -> OracleReport {
        OracleReport {
            curve: self.instance.describe(),
            genus: self.instance.genus,
            set: set.name.clone(),
            seed,
            verdicts: self.verify(set),
            stage_log: self.assignment.stage_log.clone(),
            integrability_checked: self.assignment.integrability.len(),
            integrability_failures: self.assignment.integrability.iter().filter(|c| !c.agrees).cloned().collect(),
        }
    }
}

/// Laplace expansion along rows, memoized on the set of columns used.
fn field_det(field: &Arc<Field>, n: usize, entries: &[FieldElem]) -> FieldElem {
    let mut minors: HashMap<u32, FieldElem> = HashMap::new();
    minors.insert(0, FieldElem::constant(field, &Rational::one()));
    for row in 0..n {
        let mut next: HashMap<u32, FieldElem> = HashMap::new();
        for (cols, minor) in &minors {
            for c in (0..n).filter(|c| cols & (1 << c) == 0) {
                let e = &entries[row * n + c];
                if e.is_zero() || minor.is_zero() {
                    continue;
                }
                let term = (e * minor).reduced();
                let slot = next.entry(cols | (1 << c)).or_insert_with(|| FieldElem::zero(field));
                // sign of the column permutation: columns of `cols` to the right of c
                let after = (cols >> c).count_ones();
                *slot = if after % 2 == 0 { slot.clone() + &term } else { slot.clone() - &term };
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_else(|| FieldElem::zero(field))
}

const MAX_RESIDUAL: usize = 2000;

fn truncate(s: &str) -> String {
    if s.len() <= MAX_RESIDUAL {
        return s.to_string();
    }
    let mut cut = MAX_RESIDUAL;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{} ... ({} chars)", &s[..cut], s.len())
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub source: Source,
    pub origin: String,
    pub vanishes: bool,
    /// The nonzero value, truncated for display.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub curve: String,
    pub genus: u8,
    pub set: String,
    pub seed: u64,
    pub verdicts: Vec<Verdict>,
    pub stage_log: Vec<String>,
    pub integrability_checked: usize,
    pub integrability_failures: Vec<IntegrabilityCheck>,
}

impl OracleReport {
    pub fn all_vanish(&self) -> bool {
        self.verdicts.iter().all(|v| v.vanishes)
    }

    pub fn passed(&self) -> bool {
        self.all_vanish() && self.integrability_failures.is_empty()
    }

    pub fn failures(&self) -> Vec<&Verdict> {
        self.verdicts.iter().filter(|v| !v.vanishes).collect()
    }
}

/// The doubly bordered identity for `draws` seeded random pairs `(l, k)`.
pub fn bordered_draws(seed: u64, draws: usize) -> Result<IdentitySet> {
    let mut rng = Lcg::new(seed);
    let mut members = Vec::new();
    for d in 0..draws {
        let l: Vec<Poly> = rng.vector(5).into_iter().map(Poly::constant).collect();
        let k: Vec<Poly> = rng.vector(5).into_iter().map(Poly::constant).collect();
        let show = |v: &[Poly]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        let rel = genus3::genus3_quadratic(&l, &k)?;
        members.push(Identity::new(
            format!("doubly-bordered#{d}"),
            3,
            rel,
            Source::Generated,
            format!("l=({}) k=({})", show(&l), show(&k)),
        ));
    }
    Ok(IdentitySet::new("doubly-bordered", 3, members))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_forms_agree_with_expansion() {
        let o = Oracle::new(default_curves(2).unwrap().remove(0)).unwrap();
        let m = crate::matrix::PolyMatrix::from_rows(vec![
            vec![crate::poly::p("wp[1,1]"), crate::poly::p("wp[1,2] + a2"), crate::poly::p("x1")],
            vec![crate::poly::p("wp[2,2]"), crate::poly::p("wp[1,1,1]"), crate::poly::p("1/3")],
            vec![crate::poly::p("y1"), crate::poly::p("wp[1,2,2]"), crate::poly::p("wp[2,2] - a4")],
        ]);
        let form = DetForm {
            matrix: m,
            scale: Rational::new(-2, 5),
            plus: crate::poly::p("wp[1,1]*a0"),
        };
        let direct = o.eval(&form.expand().unwrap()).unwrap();
        assert!(!direct.is_zero());
        assert_eq!(o.eval_det_form(&form).unwrap(), direct);
    }

    #[test]
    fn lcg_is_reproducible() {
        let mut a = Lcg::new(1);
        let mut b = Lcg::new(1);
        let va: Vec<Rational> = (0..10).map(|_| a.small_rational()).collect();
        let vb: Vec<Rational> = (0..10).map(|_| b.small_rational()).collect();
        assert_eq!(va, vb);
        assert_eq!(Lcg::new(1).next_u64(), LCG_A.wrapping_add(LCG_C));
    }
}
