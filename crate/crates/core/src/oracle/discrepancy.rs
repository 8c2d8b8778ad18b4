//! Printed displays against derived forms and oracle verdicts.
//!
//! Printed transcriptions are never edited. A printed line that the oracle
//! rejects gets a parallel oracle-corrected entry: each four-index function
//! `wp_S` it contains is replaced through the generated relation for `wp_S`,
//! keeping the printed coefficients of the four-index terms.

use serde::Serialize;

use super::{default_curves, Oracle};
use crate::catalog::baker::{self, covariant_to_baker, fourindex_symbol};
use crate::catalog::{genus2, mechanical, printed, Identity, IdentitySet, Source, Variables};
use crate::curve::{build_x_rep, polar_form, printed_genus1_polar, printed_x7};
use crate::poly::{Monomial, Poly};
use crate::symbol::Symbol;
use crate::Result;

/// The oracles for the default curves of genus `g`.
pub fn default_oracles(g: u8) -> Result<Vec<Oracle>> {
    default_curves(g)?.into_iter().map(Oracle::new).collect()
}

/// The generated four-index relations, `-wp_S + ...`, in the covariant
/// functions.
fn generated() -> Result<Vec<(Symbol, Poly)>> {
    let set = mechanical::genus3_fourindex_generated()?.normalized;
    Ok(set
        .members
        .into_iter()
        .filter_map(|m| fourindex_symbol(&m.relation).map(|s| (s, m.relation)))
        .collect())
}

/// `-sum_S c_S N_S` for the coefficients `c_S` of the four-index functions in
/// `q`, with `N_S` taken from `gens` (already in the variables of `q`).
fn correct_with(q: &Poly, gens: &[(Symbol, Poly)]) -> Option<Poly> {
    let mut out = Poly::zero();
    let mut any = false;
    for (s, n) in gens {
        let c = q.coeff_of(&Monomial::var(*s));
        if !c.is_zero() {
            out = out - &n.scale(&c);
            any = true;
        }
    }
    any.then_some(out)
}

fn generated_in(vars: Variables) -> Result<Vec<(Symbol, Poly)>> {
    let gens = generated()?;
    Ok(match vars {
        Variables::Covariant => gens,
        Variables::Baker => {
            let b = covariant_to_baker();
            gens.into_iter().map(|(s, n)| (s, n.substitute(&b))).collect()
        }
    })
}

/// The oracle-corrected entries for the named members of a genus-3
/// four-index set; members not named are left out.
pub fn corrected_entries(set: &IdentitySet, failing: &[String]) -> Result<IdentitySet> {
    let gens = generated_in(set.variables)?;
    let mut members = Vec::new();
    for id in set.members.iter().filter(|m| failing.contains(&m.name)) {
        if let Some(c) = correct_with(&id.relation, &gens) {
            let diff = &id.relation - &c;
            members.push(
                Identity::new(id.name.clone(), 3, c, Source::OracleCorrected, format!("{} corrected", id.origin))
                    .with_note(format!("printed minus corrected: {diff}")),
            );
        }
    }
    let mut out = IdentitySet::new(format!("{}-corrected", set.name), 3, members);
    out.variables = set.variables;
    Ok(out)
}

/// The printed set with every oracle-rejected member replaced by its
/// corrected entry.
pub fn corrected_set(set: &IdentitySet, oracles: &[Oracle]) -> Result<IdentitySet> {
    let failing = failing_members(set, oracles);
    let fixes = corrected_entries(set, &failing)?;
    let members = set
        .members
        .iter()
        .map(|m| fixes.get(&m.name).cloned().unwrap_or_else(|| m.clone()))
        .collect();
    let mut out = IdentitySet::new(format!("{}-corrected", set.name), set.genus, members);
    out.variables = set.variables;
    Ok(out)
}

/// Members whose relation is nonzero on at least one of the curves.
pub fn failing_members(set: &IdentitySet, oracles: &[Oracle]) -> Vec<String> {
    let per_curve: Vec<_> = oracles.iter().map(|o| o.verify(set)).collect();
    set.members
        .iter()
        .enumerate()
        .filter(|(i, _)| per_curve.iter().any(|v| !v[*i].vanishes))
        .map(|(_, m)| m.name.clone())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TextDiscrepancy {
    pub topic: String,
    pub printed: String,
    pub derived: String,
    /// `printed - derived`.
    pub difference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    pub name: String,
    pub origin: String,
    /// One verdict per default curve.
    pub vanishes: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    /// Symbolic agreement with the generated relations.
    pub agrees_with_generated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LineReport {
    pub fn certified(&self) -> bool {
        self.vanishes.iter().all(|v| *v)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceRow {
    pub symbol: String,
    /// The oracle accepts the printed Appendix-2 line on every curve.
    pub printed_certified: bool,
    /// The printed line equals the shifted Appendix-1 line.
    pub matches: bool,
    pub difference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscrepancyReport {
    pub curves: Vec<String>,
    pub polar_forms: Vec<TextDiscrepancy>,
    pub bordered_sign: TextDiscrepancy,
    pub appendix1: Vec<LineReport>,
    pub appendix2: Vec<LineReport>,
    pub baker_equivalence: Vec<EquivalenceRow>,
    pub main_text: Vec<LineReport>,
}

fn text_discrepancy(topic: &str, printed: Poly, derived: Poly) -> TextDiscrepancy {
    TextDiscrepancy {
        topic: topic.into(),
        difference: (&printed - &derived).to_string(),
        printed: printed.to_string(),
        derived: derived.to_string(),
    }
}

fn line_reports(set: &IdentitySet, oracles: &[Oracle], span: &mechanical::SpanTest) -> Result<Vec<LineReport>> {
    let per_curve: Vec<_> = oracles.iter().map(|o| o.verify(set)).collect();
    let gens = generated_in(set.variables)?;
    let mut out = Vec::new();
    for (i, id) in set.members.iter().enumerate() {
        let vanishes: Vec<bool> = per_curve.iter().map(|v| v[i].vanishes).collect();
        let residual = per_curve.iter().find_map(|v| v[i].residual.clone().or(v[i].error.clone()));
        let certified = vanishes.iter().all(|v| *v);
        out.push(LineReport {
            name: id.name.clone(),
            origin: id.origin.clone(),
            vanishes,
            residual,
            agrees_with_generated: span.contains(&set.covariant_relation(id)),
            corrected: if certified { None } else { correct_with(&id.relation, &gens).map(|c| c.to_string()) },
            note: id.note.clone(),
        });
    }
    Ok(out)
}

impl DiscrepancyReport {
    pub fn build() -> Result<Self> {
        let oracles = default_oracles(3)?;
        let span = mechanical::SpanTest::generated()?;

        let pf1 = polar_form(1, 1)?;
        let x7 = build_x_rep(2, 1)?;
        let polar_forms = vec![
            text_discrepancy("genus-1 polar form", printed_genus1_polar(1), pf1.ftilde),
            text_discrepancy("genus-2 X^7 component 3 numerator", printed_x7(1)[3].clone(), x7.components[3].numerator.clone()),
        ];
        let bordered_sign = text_discrepancy(
            "genus-2 bordered quadratic identity",
            genus2::bordered_quadratic_printed(),
            genus2::bordered_quadratic(),
        );

        let a2 = printed::appendix2();
        let appendix2 = line_reports(&a2, &oracles, &span)?;
        let baker_equivalence = baker::appendix_comparison()
            .into_iter()
            .zip(&appendix2)
            .map(|(row, line)| EquivalenceRow {
                symbol: format!("B{}", &row.symbol[2..]),
                printed_certified: line.certified(),
                matches: row.matches,
                difference: row.difference,
            })
            .collect();

        Ok(DiscrepancyReport {
            curves: oracles.iter().map(|o| o.instance.describe()).collect(),
            polar_forms,
            bordered_sign,
            appendix1: line_reports(&printed::appendix1(), &oracles, &span)?,
            appendix2,
            baker_equivalence,
            main_text: line_reports(&printed::main_text_fourindex(), &oracles, &span)?,
        })
    }

    /// Every oracle-certified Appendix-2 line equals its shifted Appendix-1
    /// counterpart.
    pub fn baker_equivalence_holds(&self) -> bool {
        self.baker_equivalence.iter().all(|r| !r.printed_certified || r.matches)
    }

    /// Lines listed as discrepancies in the Baker comparison.
    pub fn baker_mismatches(&self) -> Vec<&EquivalenceRow> {
        self.baker_equivalence
            .iter()
            .filter(|r| !r.printed_certified || !r.matches)
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        s.push_str("# curves\n");
        for c in &self.curves {
            s.push_str(&format!("{c}\n"));
        }
        s.push_str("\n# printed versus derived\n");
        for d in self.polar_forms.iter().chain(std::iter::once(&self.bordered_sign)) {
            s.push_str(&format!("{}\n  printed: {}\n  derived: {}\n  printed - derived: {}\n", d.topic, d.printed, d.derived, d.difference));
        }
        for (title, lines) in [
            ("appendix 1", &self.appendix1),
            ("appendix 2", &self.appendix2),
            ("main-text lists", &self.main_text),
        ] {
            s.push_str(&format!("\n# {title}\n"));
            for l in lines {
                let verdicts: Vec<&str> = l.vanishes.iter().map(|v| mark(*v)).collect();
                s.push_str(&format!(
                    "{} [{}] oracle {} span {}\n",
                    l.name,
                    l.origin,
                    verdicts.join("/"),
                    mark(l.agrees_with_generated)
                ));
                if let Some(r) = &l.residual {
                    s.push_str(&format!("  residual: {r}\n"));
                }
                if let Some(c) = &l.corrected {
                    s.push_str(&format!("  corrected: {c} = 0\n"));
                }
            }
        }
        s.push_str("\n# appendix 2 against shifted appendix 1\n");
        for r in &self.baker_equivalence {
            s.push_str(&format!(
                "{} printed {} match {}{}\n",
                r.symbol,
                mark(r.printed_certified),
                mark(r.matches),
                if r.matches { String::new() } else { format!("\n  difference: {}", r.difference) }
            ));
        }
        s
    }
}
