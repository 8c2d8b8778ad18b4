//! Symbolic and oracle check suites, per genus.

use serde::Serialize;

use crate::catalog::{self, genus1, genus2, genus3, mechanical, IdentitySet};
use crate::curve::{antidiagonal_check, curve_poly, genus2_normal_form_shift, klein_matrix, polar_form, tangency_check};
use crate::oracle::discrepancy::{corrected_set, default_oracles};
use crate::oracle::{bordered_draws, default_curves, make_instance, CurveInstance, Oracle, OracleReport};
use crate::poly::{p, Poly};
use crate::rational::Rational;
use crate::sl2::{check_commutators, generate_multiplet, Derivation};
use crate::symbol::Symbol;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Recorded but not part of the pass/fail contract (a known
    /// unattainable claim).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            informational: false,
            detail: detail.into(),
        }
    }

    fn info(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            informational: true,
            ..Check::new(name, passed, detail)
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub genus: u8,
    pub checks: Vec<Check>,
    pub oracle: Vec<OracleReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational) && self.oracle.iter().all(OracleReport::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed && !c.informational)
            .map(|c| c.name.clone())
            .collect();
        for r in &self.oracle {
            for v in r.failures() {
                out.push(format!("{} / {}: {}", r.curve, r.set, v.name));
            }
            if !r.integrability_failures.is_empty() {
                out.push(format!("{}: integrability", r.curve));
            }
        }
        out
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.oracle.extend(other.oracle);
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match (c.passed, c.informational) {
                (true, _) => "ok  ",
                (false, false) => "FAIL",
                (false, true) => "note",
            };
            s.push_str(&format!("{tag} {}", c.name));
            if !c.detail.is_empty() {
                s.push_str(&format!(" ({})", c.detail));
            }
            s.push('\n');
        }
        for r in &self.oracle {
            let bad = r.failures();
            s.push_str(&format!(
                "{} {} / {}: {}/{} vanish, integrability {}/{}\n",
                if r.passed() { "ok  " } else { "FAIL" },
                r.curve,
                r.set,
                r.verdicts.len() - bad.len(),
                r.verdicts.len(),
                r.integrability_checked - r.integrability_failures.len(),
                r.integrability_checked
            ));
            for v in bad {
                let why = v.error.clone().or(v.residual.clone()).unwrap_or_default();
                s.push_str(&format!("     {}: {}\n", v.name, why));
            }
        }
        s
    }
}

fn structure_checks(g: u8) -> Result<Vec<Check>> {
    let comm = check_commutators(g)?;
    let km = klein_matrix(g)?;
    let anti = antidiagonal_check(&km);
    let pf = polar_form(g, 1)?;
    let inv = pf.invariants();
    let tan = tangency_check(&pf);
    let tangency = format!("multiplicity {} against {}", tan.multiplicity, tan.required);
    Ok(vec![
        Check::new("commutators", comm.passed(), format!("{comm:?}")),
        Check::new("curve covariance", curve_poly(g)?.covariance_holds(), ""),
        Check::new("klein matrix antidiagonals", anti.passed(), format!("{:?}", anti.failures())),
        Check::new("polar form invariants", inv.all(), format!("{inv:?}")),
        if g == 1 {
            Check::new("polar form tangency", tan.meets_order(), tangency)
        } else {
            Check::info("polar form tangency", tan.meets_order(), tangency)
        },
    ])
}

fn closure_checks(sets: &[IdentitySet]) -> Vec<Check> {
    sets.iter()
        .map(|s| {
            let s = if s.closure.is_some() { s.clone() } else { s.clone().with_closure() };
            let c = s.closure.expect("computed");
            Check::new(&format!("{} closed under e and f", s.name), c.e && c.f, format!("{c:?}"))
        })
        .collect()
}

fn genus1_checks() -> Result<Vec<Check>> {
    let ode = genus1::genus1_ode().relation;
    let (e, f) = (Derivation::e(1)?, Derivation::f(1)?);
    let i = genus1::invariant_i();
    let j = genus1::invariant_j();
    let expected = p("wp[1,1,1]^2 - 4*wp[1,1]^3") + &i * &p("wp[1,1]") + j.clone();
    let annihilated = [&i, &j].iter().all(|q| e.apply(q).is_zero() && f.apply(q).is_zero());
    let normal = genus1::normal_form_specialization() == p("wp[1,1,1]^2 - 4*wp[1,1]^3 - 4*a1*wp[1,1] - a0");
    let second = genus1::genus1_second_order()?;
    Ok(vec![
        Check::new("ode expansion", ode == expected, ""),
        Check::new("invariants annihilated by e and f", annihilated, ""),
        Check::new("normal form specialization", normal, ""),
        Check::new(
            "second-order identity by exact division",
            second.relation == genus1::genus1_second_order_printed().relation,
            "",
        ),
    ])
}

fn genus2_checks() -> Result<Vec<Check>> {
    let hw = genus2::baker_highest_weight();
    let m = generate_multiplet(&hw, 2, 10)?;
    let e_kills = Derivation::e(2)?.apply(&hw).is_zero();
    let kummer = genus2::genus2_kummer().relation;
    let quartic = kummer.degree_where(|s| s.wp_order() == 2) == 4;
    let quad = genus2::genus2_quadratic_products()?;
    let display = genus2::wp222_square_display();
    let has_display = quad.members.iter().any(|q| q.relation.ratio_to(&display).is_some());
    let zero_l: std::collections::HashMap<Symbol, Poly> = (0..4).map(|i| (Symbol::l(i), Poly::zero())).collect();
    let l_free = genus2::bordered_det_h().substitute(&zero_l);
    let shift = genus2_normal_form_shift(&polar_form(2, 1)?);
    Ok(vec![
        Check::new("baker4 is a highest weight", e_kills, ""),
        Check::new("baker4 multiplet has 5 members", m.dimension() == 5, format!("{}", m.dimension())),
        Check::new("det(h) quartic in two-index functions", quartic, ""),
        Check::new("10 quadratic product identities", quad.len() == 10, format!("{}", quad.len())),
        Check::new("-4 wp222^2 minor display among them", has_display, ""),
        Check::new("l-free part of det(H) vanishes", l_free.is_zero(), ""),
        Check::new("lambda search gives t = 1", genus2::lambda_search() == Some(Rational::one()), format!("{:?}", genus2::lambda_search())),
        Check::new("normal form reduces up to a constant shift", shift.is_ok(), format!("{:?}", shift.map(|s| s.map(|q| q.to_string())))),
    ])
}

fn genus3_checks() -> Result<Vec<Check>> {
    let p5 = genus3::genus3_p5()?;
    let ratios_ok = p5.ratios.iter().all(|r| r.as_ref().is_some_and(|c| !c.is_zero()));
    let linear = genus3::genus3_linear();
    let rank = genus3::linear_span().rank();
    let trace = genus3::ha_entries()
        .iter()
        .filter(|((i, j), _)| i == j)
        .fold(Poly::zero(), |acc, (_, q)| acc + q);
    let hw = genus3::reconstructed_highest_weights()?;
    let hw_dims: Vec<usize> = hw.iter().filter(|(_, q)| !q.is_zero()).map(|(d, _)| *d).collect();
    let minors = genus3::minor_factorization()?;
    let minors_ok = minors.iter().flatten().all(|r| r.as_ref().is_some_and(|c| c.abs().is_one()));
    let sign_table: Vec<String> = minors
        .iter()
        .map(|row| row.iter().map(|r| r.as_ref().map_or("?", |c| if c.is_negative() { "-" } else { "+" })).collect())
        .collect();
    let classes = genus3::three_minor_classes()?;
    let in_ideal = classes.iter().all(|(_, c)| !matches!(c, genus3::MinorClass::NotInIdeal));
    let two_nonzero = !genus3::two_minor([0, 1], [2, 3]).is_zero();
    let lambda = genus3::lambda_search();
    let lambda_ok = lambda == Some(p("wp[2,2,2] - 2*wp[1,2,3]"));
    let gen = mechanical::genus3_fourindex_generated()?;
    let baker = catalog::baker::baker_matrix_check();
    let a1 = catalog::baker::compare(&catalog::printed::appendix1(), &gen.normalized);
    let a1_match = a1.iter().filter(|r| r.matches).count();
    let mut checks = vec![
        Check::new("P5 chain regenerates the printed P5", ratios_ok, format!("{:?}", p5.ratios.iter().map(|r| r.as_ref().map(|c| c.to_string())).collect::<Vec<_>>())),
        Check::new("hA entries span 24 dimensions, trace identically zero", rank == 24 && trace.is_zero(), format!("rank {rank}")),
        Check::info("hA entries span exactly 25 dimensions", rank == 25, format!("rank {rank}; tr(hA) = 0")),
        Check::new("highest weights of dimension 9, 7, 5, 3", hw_dims == [9, 7, 5, 3], format!("{hw_dims:?}")),
        Check::new("4x4 minors of A are +-P5 products", minors_ok, format!("signs {}", sign_table.join("/"))),
        Check::new("3x3 minors of A lie in the P5 ideal", in_ideal, ""),
        Check::new("some 2x2 minor of A is nonzero", two_nonzero, ""),
        Check::new("lambda search gives wp222 - 2 wp123", lambda_ok, format!("{:?}", lambda.map(|q| q.to_string()))),
        Check::new("four-index chains span 15 dimensions", gen.span_rank == 15, format!("{}", gen.span_rank)),
        Check::new("Baker matrix equals the Klein matrix after the shift", baker.is_empty(), format!("{baker:?}")),
        Check::info("printed four-index list agrees with the generated one", a1_match == 15, format!("{a1_match}/15 lines")),
    ];
    checks.extend(closure_checks(&[linear]));
    Ok(checks)
}

/// Commutators, covariance, closure, multiplet regeneration, minor
/// factorization and determinant expansions.
pub fn symbolic_suite(g: u8) -> Result<SuiteReport> {
    let mut checks = structure_checks(g)?;
    match g {
        1 => {
            checks.extend(genus1_checks()?);
            checks.extend(closure_checks(&[catalog::catalog_set(1, "ode")?]));
        }
        2 => {
            checks.extend(genus2_checks()?);
            checks.extend(closure_checks(&[genus2::genus2_bilinear(), genus2::genus2_fourindex()?]));
        }
        3 => checks.extend(genus3_checks()?),
        _ => return Err(Error::UnsupportedGenus(g)),
    }
    Ok(SuiteReport {
        genus: g,
        checks,
        oracle: Vec::new(),
    })
}

/// Sets the default oracle suite verifies.
pub fn oracle_set_names(g: u8) -> Vec<&'static str> {
    let mut names: Vec<&'static str> = catalog::set_names(g)
        .iter()
        .copied()
        .filter(|n| *n != "all" && catalog::expected_to_vanish(g, n))
        .collect();
    if g == 3 {
        names.push("doubly-bordered");
    }
    names
}

/// A named set, including those that need a seed or oracle verdicts.
pub fn resolve_set(g: u8, name: &str, seed: u64, draws: usize) -> Result<IdentitySet> {
    match (g, name) {
        (3, "doubly-bordered") => bordered_draws(seed, draws),
        (3, n) if n.ends_with("-corrected") => {
            let base = catalog::catalog_set(3, n.trim_end_matches("-corrected"))?;
            corrected_set(&base, &default_oracles(3)?)
        }
        _ => catalog::catalog_set(g, name),
    }
}

#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// `None` runs [`oracle_set_names`].
    pub sets: Option<Vec<String>>,
    /// Empty means the default curves.
    pub curves: Vec<CurveInstance>,
    pub seed: u64,
    pub draws: usize,
    pub branch_symmetry: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            sets: None,
            curves: Vec::new(),
            seed: 1,
            draws: 5,
            branch_symmetry: true,
        }
    }
}

/// `wp11 = 2 x1^2 - y1` and `wp111 = 4 x1 y1 - 8 x1^3` on `y^2 = 4 x^4 + 1`.
fn genus1_hand_values() -> Result<Check> {
    let o = Oracle::new(make_instance(1, &[1, 0, 0, 0, 4].map(Rational::from))?)?;
    let wp11 = o.eval(&p("wp[1,1] - 2*x1^2 + y1"))?;
    let wp111 = o.eval(&p("wp[1,1,1] - 4*x1*y1 + 8*x1^3"))?;
    Ok(Check::new(
        &format!("{}: hand values of wp11 and wp111", o.instance.describe()),
        wp11.is_zero() && wp111.is_zero(),
        "",
    ))
}

fn three_minor_check(o: &Oracle) -> Result<Check> {
    for rows in crate::matrix::subsets(5, 3) {
        for cols in crate::matrix::subsets(5, 3) {
            let m = genus3::h_three_minor([rows[0], rows[1], rows[2]], [cols[0], cols[1], cols[2]])?;
            if !o.eval(&m)?.is_zero() {
                return Ok(Check::new(
                    &format!("{}: some 3x3 minor of h is nonzero", o.instance.describe()),
                    true,
                    format!("rows {rows:?} cols {cols:?}"),
                ));
            }
        }
    }
    Ok(Check::new(&format!("{}: some 3x3 minor of h is nonzero", o.instance.describe()), false, ""))
}

/// Sets left out of the r -> -r comparison.
const EXPENSIVE: [&str; 3] = ["quadratic-leading", "h-minors", "doubly-bordered"];

/// Verify the configured sets on every curve.
pub fn oracle_suite(g: u8, cfg: &OracleConfig) -> Result<SuiteReport> {
    let names: Vec<String> = match &cfg.sets {
        Some(s) => s.clone(),
        None => oracle_set_names(g).into_iter().map(String::from).collect(),
    };
    let sets = names
        .iter()
        .map(|n| resolve_set(g, n, cfg.seed, cfg.draws))
        .collect::<Result<Vec<_>>>()?;
    let curves = if cfg.curves.is_empty() { default_curves(g)? } else { cfg.curves.clone() };
    let mut report = SuiteReport {
        genus: g,
        ..Default::default()
    };
    if g == 1 && cfg.curves.is_empty() {
        report.checks.push(genus1_hand_values()?);
    }
    for c in curves {
        if c.genus != g {
            return Err(Error::BadCurve(format!("curve of genus {} for a genus {g} run", c.genus)));
        }
        let o = Oracle::new(c.clone())?;
        let reports: Vec<OracleReport> = sets.iter().map(|s| o.report(s, cfg.seed)).collect();
        if g == 3 && cfg.sets.is_none() {
            report.checks.push(three_minor_check(&o)?);
        }
        if cfg.branch_symmetry {
            let flipped = Oracle::new(c.flipped())?;
            let same = sets.iter().zip(&reports).filter(|(s, _)| !EXPENSIVE.contains(&s.name.as_str())).all(|(s, r)| {
                let other: Vec<bool> = flipped.verify(s).iter().map(|v| v.vanishes).collect();
                other == r.verdicts.iter().map(|v| v.vanishes).collect::<Vec<_>>()
            }) && flipped.assignment.integrable();
            report.checks.push(Check::new(
                &format!("{}: verdicts unchanged under r -> -r", c.describe()),
                same,
                "",
            ));
        }
        report.oracle.extend(reports);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus1_suites() {
        let s = symbolic_suite(1).unwrap();
        assert!(s.passed(), "{}", s.render_text());
        let o = oracle_suite(1, &OracleConfig::default()).unwrap();
        assert!(o.passed(), "{}", o.render_text());
    }

    #[test]
    fn genus2_symbolic() {
        let s = symbolic_suite(2).unwrap();
        assert!(s.passed(), "{}", s.render_text());
        assert!(s.checks.iter().any(|c| c.informational && !c.passed));
    }
}
