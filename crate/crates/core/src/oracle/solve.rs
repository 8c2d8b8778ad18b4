//! Solving for the ℘-functions of a concrete curve inside its function field.
//!
//! Two-index functions come from the residue relations
//! `r y_m = (h x_m)_{g+2}` and, where those do not reach, from the pair
//! relations `y_n y_m = x_n^t h x_m`. Three- and four-index functions come from
//! `y_m d/dx_m wp_S = sum_k x_m^(k-1) wp_{S,k}`; every symbol reachable by more
//! than one route is cross-checked.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::field::{pair_factor, Field, FieldElem, PAIRS};
use super::instance::CurveInstance;
use crate::curve::klein_matrix;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::sl2::wp_symbols;
use crate::symbol::{Symbol, SymbolKind};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "stage", rename_all = "kebab-case")]
pub enum Provenance {
    Residue,
    PairRelation,
    Derivative { base: String, direction: u8 },
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegrabilityCheck {
    pub symbol: String,
    pub first: String,
    pub second: String,
    pub agrees: bool,
}

#[derive(Clone, Debug)]
pub struct WpAssignment {
    pub genus: u8,
    pub values: BTreeMap<Symbol, FieldElem>,
    pub provenance: BTreeMap<Symbol, Provenance>,
    pub integrability: Vec<IntegrabilityCheck>,
    pub stage_log: Vec<String>,
}

impl WpAssignment {
    pub fn get(&self, s: Symbol) -> Option<&FieldElem> {
        self.values.get(&s)
    }

    pub fn integrable(&self) -> bool {
        self.integrability.iter().all(|c| c.agrees)
    }
}

/// Evaluates polynomials at a curve instance and an assignment.
pub struct Evaluator<'a> {
    pub field: &'a Arc<Field>,
    pub instance: &'a CurveInstance,
    pub values: &'a BTreeMap<Symbol, FieldElem>,
}

impl Evaluator<'_> {
    fn constants(&self) -> std::collections::HashMap<Symbol, Poly> {
        let mut b: std::collections::HashMap<Symbol, Poly> = self
            .instance
            .a
            .iter()
            .enumerate()
            .map(|(i, c)| (Symbol::a(i as u8), Poly::constant(c.clone())))
            .collect();
        b.insert(Symbol::root(), Poly::constant(self.instance.r.clone()));
        b
    }

    pub fn eval(&self, p: &Poly) -> Result<FieldElem> {
        let p = p.substitute(&self.constants());
        let g = self.field.genus;
        for s in p.symbols() {
            let ok = match s.kind() {
                SymbolKind::PointX(m) | SymbolKind::PointY(m) => m >= 1 && m <= g,
                SymbolKind::Wp(_) => self.values.contains_key(&s),
                _ => false,
            };
            if !ok {
                return Err(Error::MissingSymbol(s.to_string()));
            }
        }
        let f = self.field;
        Ok(p.eval_with(
            |s| match s.kind() {
                SymbolKind::PointX(m) => FieldElem::x(f, m),
                SymbolKind::PointY(m) => FieldElem::y(f, m),
                _ => self.values[&s].clone(),
            },
            |c| FieldElem::constant(f, c),
        ))
    }
}

/// `M u = b` for a square matrix of polynomials in the `x_m` whose
/// determinant is a constant times a product of pair factors.
pub struct PairSolver {
    adj: Vec<Vec<Poly>>,
    scale: Rational,
    exps: [u32; 3],
}

impl PairSolver {
    pub fn new(m: &PolyMatrix) -> Result<PairSolver> {
        let n = m.rows();
        let mut det = m.det()?;
        let mut exps = [0u32; 3];
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let xj = Poly::var(Symbol::point_x(j));
            while !det.is_zero() && det.substitute_one(Symbol::point_x(i), &xj).is_zero() {
                det = det.exact_div(&pair_factor(k))?;
                exps[k] += 1;
            }
        }
        let scale = det
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::DegenerateInstance(format!("determinant has a factor {det}")))?;
        let mut adj = vec![vec![Poly::zero(); n]; n];
        for (r, row) in adj.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                // adj[r][c] = (-1)^(r+c) minor(c, r)
                let minor = if n == 1 { Poly::one() } else { m.minor(&[c], &[r])? };
                *slot = if (r + c) % 2 == 0 { minor } else { -minor };
            }
        }
        Ok(PairSolver { adj, scale, exps })
    }

    pub fn solve(&self, b: &[FieldElem]) -> Vec<FieldElem> {
        let f = b[0].field().clone();
        self.adj
            .iter()
            .map(|row| {
                let acc = row
                    .iter()
                    .zip(b)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(FieldElem::zero(&f), |acc, (a, v)| acc + &v.mul_poly(a));
                acc.div_pairs(&self.scale, self.exps).reduced()
            })
            .collect()
    }
}

/// `r y_m - (h x_m)_{g+2}`.
pub fn residue_relation(g: u8, m: u8) -> Result<Poly> {
    let h = klein_matrix(g)?.h;
    let n = g as usize + 2;
    let x = Poly::var(Symbol::point_x(m));
    let rhs = (0..n).fold(Poly::zero(), |acc, j| acc + h.get(n - 1, j) * &x.pow(j as u32));
    Ok(Poly::var(Symbol::root()) * Poly::var(Symbol::point_y(m)) - rhs)
}

/// `y_n y_m - x_n^t h x_m`.
pub fn pair_relation(g: u8, n: u8, m: u8) -> Result<Poly> {
    let h = klein_matrix(g)?.h;
    let size = g as usize + 2;
    let xn = Poly::var(Symbol::point_x(n));
    let xm = Poly::var(Symbol::point_x(m));
    let mut rhs = Poly::zero();
    for i in 0..size {
        for j in 0..size {
            rhs = rhs + &(h.get(i, j) * &(xn.pow(i as u32) * xm.pow(j as u32)));
        }
    }
    Ok(Poly::var(Symbol::point_y(n)) * Poly::var(Symbol::point_y(m)) - rhs)
}

fn solve_linear(
    ev: &Evaluator<'_>,
    eqs: &[Poly],
    unknowns: &[Symbol],
) -> Result<Vec<FieldElem>> {
    let n = unknowns.len();
    let zero: std::collections::HashMap<Symbol, Poly> = unknowns.iter().map(|u| (*u, Poly::zero())).collect();
    let mut m = PolyMatrix::zeros(n, n);
    let mut b = Vec::new();
    for (r, eq) in eqs.iter().enumerate() {
        for (c, u) in unknowns.iter().enumerate() {
            let coeff = ev.eval(&eq.coeff_extract(*u, 1))?.reduced();
            let p = coeff
                .to_poly()
                .ok_or_else(|| Error::InvariantViolation(format!("coefficient of {u} is not a polynomial in x")))?;
            m.set(r, c, p);
        }
        b.push(-ev.eval(&eq.substitute(&zero))?);
    }
    Ok(PairSolver::new(&m)?.solve(&b))
}

fn label(s: Symbol) -> String {
    let idx = s.wp_indices().unwrap_or_default();
    format!("wp{}", idx.iter().map(|i| i.to_string()).collect::<String>())
}

/// Solve the two-index functions, then extend to three and four indices.
pub fn solve_wp(instance: &CurveInstance, field: &Arc<Field>) -> Result<WpAssignment> {
    let g = instance.genus;
    let mut asg = WpAssignment {
        genus: g,
        values: BTreeMap::new(),
        provenance: BTreeMap::new(),
        integrability: Vec::new(),
        stage_log: Vec::new(),
    };
    let two = wp_symbols(g, 2);

    // Stage 1: residue relations.
    let residues: Vec<Poly> = (1..=g).map(|m| residue_relation(g, m)).collect::<Result<_>>()?;
    let res_unknowns: Vec<Symbol> = two
        .iter()
        .copied()
        .filter(|s| residues.iter().any(|r| r.contains(*s)))
        .collect();
    if res_unknowns.len() != g as usize {
        return Err(Error::InvariantViolation(format!(
            "residue relations involve {} two-index functions, expected {g}",
            res_unknowns.len()
        )));
    }
    let vals = {
        let ev = Evaluator { field, instance, values: &asg.values };
        solve_linear(&ev, &residues, &res_unknowns)?
    };
    for (s, v) in res_unknowns.iter().zip(vals) {
        asg.values.insert(*s, v);
        asg.provenance.insert(*s, Provenance::Residue);
    }
    asg.stage_log.push(format!(
        "residue relations: solved {}",
        res_unknowns.iter().map(|s| label(*s)).collect::<Vec<_>>().join(", ")
    ));

    // Stage 2: pair relations for the rest.
    let rest: Vec<Symbol> = two.iter().copied().filter(|s| !asg.values.contains_key(s)).collect();
    let pairs: Vec<(u8, u8)> = PAIRS.iter().copied().filter(|&(_, j)| j <= g).collect();
    if !rest.is_empty() {
        let eqs: Vec<Poly> = pairs.iter().map(|&(n, m)| pair_relation(g, n, m)).collect::<Result<_>>()?;
        let ev = Evaluator { field, instance, values: &asg.values };
        let vals = solve_linear(&ev, &eqs[..rest.len()], &rest)?;
        for (s, v) in rest.iter().zip(vals) {
            asg.values.insert(*s, v);
            asg.provenance.insert(*s, Provenance::PairRelation);
        }
        asg.stage_log.push(format!(
            "pair relations: solved {}",
            rest.iter().map(|s| label(*s)).collect::<Vec<_>>().join(", ")
        ));
    }

    // Back-substitution.
    {
        let ev = Evaluator { field, instance, values: &asg.values };
        for (m, r) in residues.iter().enumerate() {
            if !ev.eval(r)?.reduced().is_zero() {
                return Err(Error::InvariantViolation(format!("residue relation {} fails", m + 1)));
            }
        }
        for &(n, m) in &pairs {
            if !ev.eval(&pair_relation(g, n, m)?)?.reduced().is_zero() {
                return Err(Error::InvariantViolation(format!("pair relation ({n},{m}) fails")));
            }
        }
        asg.stage_log.push("residue and pair relations hold after back-substitution".into());
    }

    // Stages 3 and 4: Vandermonde extension.
    let vandermonde = PolyMatrix::from_fn(g as usize, g as usize, |m, k| {
        Poly::var(Symbol::point_x(m as u8 + 1)).pow(k as u32)
    });
    let solver = PairSolver::new(&vandermonde)?;
    for order in [2usize, 3] {
        for s in wp_symbols(g, order) {
            let v = asg.values[&s].clone();
            let b: Vec<FieldElem> = (1..=g).map(|m| v.derive(m)).collect();
            let derived = solver.solve(&b);
            let base = s.wp_indices().unwrap_or_default();
            for (k, val) in derived.into_iter().enumerate() {
                let mut idx = base.clone();
                idx.push(k as u8 + 1);
                let t = Symbol::wp(&idx);
                let prov = Provenance::Derivative {
                    base: label(s),
                    direction: k as u8 + 1,
                };
                match asg.values.get(&t) {
                    Some(prev) => {
                        let first = match &asg.provenance[&t] {
                            Provenance::Derivative { base, direction } => format!("d{direction}({base})"),
                            p => format!("{p:?}"),
                        };
                        asg.integrability.push(IntegrabilityCheck {
                            symbol: label(t),
                            first,
                            second: format!("d{}({})", k + 1, label(s)),
                            agrees: *prev == val,
                        });
                    }
                    None => {
                        asg.values.insert(t, val);
                        asg.provenance.insert(t, prov);
                    }
                }
            }
        }
        asg.stage_log.push(format!("extended to {}-index functions", order + 1));
    }
    Ok(asg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::instance::make_instance;
    use crate::poly::p;

    #[test]
    fn genus1_hand_values() {
        let a: Vec<Rational> = [1, 0, 0, 0, 4].map(Rational::from).to_vec();
        let inst = make_instance(1, &a).unwrap();
        let f = inst.field();
        let asg = solve_wp(&inst, &f).unwrap();
        let wp11 = asg.get(Symbol::wp(&[1, 1])).unwrap();
        assert_eq!(*wp11, FieldElem::from_poly(&f, &p("2*x1^2")) - &FieldElem::y(&f, 1));
        let wp111 = asg.get(Symbol::wp(&[1, 1, 1])).unwrap();
        let expected = (&FieldElem::y(&f, 1) * &FieldElem::from_poly(&f, &p("4*x1"))) - &FieldElem::from_poly(&f, &p("8*x1^3"));
        assert_eq!(*wp111, expected);
    }

    #[test]
    fn genus2_routes_agree() {
        let a: Vec<Rational> = [1, 1, 1, 2, 1, 1, 4].map(Rational::from).to_vec();
        let inst = make_instance(2, &a).unwrap();
        let asg = solve_wp(&inst, &inst.field()).unwrap();
        assert_eq!(asg.provenance[&Symbol::wp(&[1, 1])], Provenance::PairRelation);
        assert!(!asg.integrability.is_empty());
        assert!(asg.integrable(), "{:?}", asg.integrability);
        assert_eq!(asg.values.len(), 3 + 4 + 5);
    }
}
