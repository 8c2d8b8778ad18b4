//! One PASS/FAIL line per acceptance criterion.
//!
//! A criterion passes when every sub-check holds. Sub-checks marked
//! `unattainable` are claims shown to be false for every input (see the
//! decisions ledger); they print as FAIL but do not fail the run.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperwp::catalog::{baker, genus1, genus2, genus3};
use hyperwp::curve::{
    classical_genus2_polar, curve_poly, genus2_normal_form, genus2_normal_form_shift, klein_matrix, polar_form,
    tangency_check, tangency_multiplicity_at,
};
use hyperwp::oracle::discrepancy::DiscrepancyReport;
use hyperwp::oracle::{default_curves, Oracle, OracleReport};
use hyperwp::sl2::{check_commutators, generate_multiplet, Derivation};
use hyperwp::suite::{oracle_suite, symbolic_suite, OracleConfig, SuiteReport};
use hyperwp::{p, Poly, Rational, Symbol};

struct Sub {
    name: String,
    ok: bool,
    unattainable: bool,
}

#[derive(Default)]
struct Criterion {
    subs: Vec<Sub>,
    notes: Vec<String>,
}

impl Criterion {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.subs.push(Sub {
            name: name.into(),
            ok,
            unattainable: false,
        });
    }

    fn unattainable(&mut self, name: impl Into<String>, ok: bool) {
        self.subs.push(Sub {
            name: name.into(),
            ok,
            unattainable: true,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn within(&mut self, limit: Duration, elapsed: Duration) {
        self.check(format!("runtime {elapsed:.2?} under {limit:?}"), elapsed < limit);
    }

    fn passed(&self) -> bool {
        self.subs.iter().all(|s| s.ok)
    }

    fn unexpected(&self) -> Vec<&str> {
        self.subs.iter().filter(|s| !s.ok && !s.unattainable).map(|s| s.name.as_str()).collect()
    }
}

fn suite_check(c: &mut Criterion, report: &SuiteReport, name: &str) {
    match report.checks.iter().find(|k| k.name == name) {
        Some(k) => c.check(name, k.passed),
        None => c.check(format!("{name} (missing)"), false),
    }
}

fn oracle_sets(c: &mut Criterion, report: &SuiteReport, sets: &[&str]) {
    for s in sets {
        let rows: Vec<&OracleReport> = report.oracle.iter().filter(|r| r.set == *s).collect();
        let vanish = rows.iter().all(|r| r.all_vanish());
        let n: usize = rows.iter().map(|r| r.verdicts.len()).sum();
        c.check(format!("{s}: {n} verdicts on {} curves vanish", rows.len()), rows.len() >= 2 && vanish);
    }
    let integrable = report.oracle.iter().all(|r| r.integrability_failures.is_empty() && r.integrability_checked > 0);
    c.check("integrability of the higher-index extension", integrable);
}

fn criterion1() -> Criterion {
    let mut c = Criterion::default();
    let t = Instant::now();
    for g in 1..=3 {
        let r = check_commutators(g).expect("generators");
        c.check(format!("g={g}: {} commutator checks", r.checked), r.passed());
        c.check(format!("g={g}: e(v) = 0 and f(v) + 2(g+1) x v = 0"), curve_poly(g).expect("curve").covariance_holds());
    }
    c.within(Duration::from_secs(1), t.elapsed());
    c
}

fn criterion2() -> Criterion {
    let mut c = Criterion::default();
    let t = Instant::now();
    let det = klein_matrix(1).expect("genus 1").h.det().expect("square");
    let quarter = det.scale(&Rational::new(-1, 4));
    let wp11 = Symbol::wp(&[1, 1]);
    let lin = quarter.coeff_extract(wp11, 1);
    let constant = quarter.coeff_extract(wp11, 0).coeff_extract(Symbol::wp(&[1, 1, 1]), 0);
    let i = genus1::invariant_i();
    let j = genus1::invariant_j();
    let unit = |q: &Poly, r: &Poly| q.ratio_to(r).is_some_and(|k| k.abs().is_one());
    c.check(format!("coefficient of wp11 in -det(h)/4 is {lin}"), unit(&lin, &i));
    c.check(format!("constant of -det(h)/4 is {constant}"), unit(&constant, &j));
    c.check("-det(h)/4 = 4 wp11^3 - I wp11 - J", quarter == p("4*wp[1,1]^3") - &(&i * &p("wp[1,1]")) - &j);
    let (e, f) = (Derivation::e(1).unwrap(), Derivation::f(1).unwrap());
    c.check("e and f annihilate I and J", [&i, &j].iter().all(|q| e.apply(q).is_zero() && f.apply(q).is_zero()));
    c.check(
        "a4 = a2 = 0, a3 = 1 gives wp'^2 = 4 wp^3 + 4 a1 wp + a0",
        genus1::normal_form_specialization() == p("wp[1,1,1]^2 - 4*wp[1,1]^3 - 4*a1*wp[1,1] - a0"),
    );
    match genus1::genus1_second_order() {
        Ok(s) => {
            c.check("d/du of the ODE divides exactly by wp111", true);
            c.check(
                format!("second-order identity {} = 0", s.relation),
                s.relation == genus1::genus1_second_order_printed().relation,
            );
        }
        Err(e) => c.check(format!("exact division: {e}"), false),
    }
    c.within(Duration::from_secs(1), t.elapsed());
    c
}

fn criterion3() -> Criterion {
    let mut c = Criterion::default();
    let t = Instant::now();
    let report = oracle_suite(1, &OracleConfig::default()).expect("genus-1 oracle");
    let hand = report.checks.iter().find(|k| k.name.contains("hand values"));
    c.check("a=(1,0,0,0,4): wp11 = 2x1^2 - y1, wp111 = 4x1y1 - 8x1^3", hand.is_some_and(|k| k.passed));
    for r in &report.oracle {
        c.check(format!("{} / {}", r.curve, r.set), r.all_vanish());
    }
    let curves: Vec<&str> = report.oracle.iter().map(|r| r.curve.as_str()).collect();
    c.check("a=(1,1,2,1,4) among the curves", curves.iter().any(|s| s.contains("a=(1,1,2,1,4)")));
    c.check("at least three curves", report.oracle.len() >= 6);
    c.within(Duration::from_secs(1), t.elapsed());
    c
}

fn criterion4() -> Criterion {
    let mut c = Criterion::default();
    let hw = genus2::baker_highest_weight();
    c.check("Baker four-index highest weight is e-annihilated", Derivation::e(2).unwrap().apply(&hw).is_zero());
    let m = generate_multiplet(&hw, 2, 10).expect("multiplet");
    c.check(format!("multiplet dimension {}", m.dimension()), m.dimension() == 5);
    let kummer = genus2::genus2_kummer().relation;
    c.check("det(h) quartic in the wp_ij", kummer.degree_where(|s| s.wp_order() == 2) == 4);
    let quad = genus2::genus2_quadratic_products().expect("quadratic products");
    c.check(format!("{} coefficient identities", quad.len()), quad.len() == 10);
    let display = genus2::wp222_square_display();
    c.check(
        "-4 wp222^2 = |h22..h44| among them",
        quad.members.iter().any(|q| q.relation.ratio_to(&display).is_some()),
    );
    let zero_l: HashMap<Symbol, Poly> = (0..4).map(|i| (Symbol::l(i), Poly::zero())).collect();
    c.check("l-free part of det(H) vanishes", genus2::bordered_det_h().substitute(&zero_l).is_zero());
    c
}

fn criterion5() -> Criterion {
    let mut c = Criterion::default();
    let t = Instant::now();
    let cfg = OracleConfig {
        sets: Some(["bilinear", "kummer", "quadratic", "fourindex"].map(String::from).to_vec()),
        ..Default::default()
    };
    let report = oracle_suite(2, &cfg).expect("genus-2 oracle");
    oracle_sets(&mut c, &report, &["bilinear", "kummer", "quadratic", "fourindex"]);
    c.within(Duration::from_secs(60), t.elapsed());
    c
}

fn criterion6() -> Criterion {
    let mut c = Criterion::default();
    let sym = symbolic_suite(3).expect("genus-3 symbolic");
    suite_check(&mut c, &sym, "P5 chain regenerates the printed P5");
    let p5 = genus3::genus3_p5().unwrap();
    c.note(format!(
        "P5 factors {:?}",
        p5.ratios.iter().map(|r| r.as_ref().map(|c| c.to_string())).collect::<Vec<_>>()
    ));
    suite_check(&mut c, &sym, "linear closed under e and f");
    let rank = genus3::linear_span().rank();
    c.unattainable(format!("hA span dimension exactly 25 (rank {rank}, tr(hA) = 0)"), rank == 25);
    suite_check(&mut c, &sym, "hA entries span 24 dimensions, trace identically zero");
    let minors = sym.checks.iter().find(|k| k.name.starts_with("4x4 minors of A"));
    c.check("4x4 minors of A are +-P5(5-i) P5(5-j)", minors.is_some_and(|k| k.passed));
    if let Some(k) = minors {
        c.note(format!("sign table {}", k.detail));
    }
    suite_check(&mut c, &sym, "some 2x2 minor of A is nonzero");
    suite_check(&mut c, &sym, "lambda search gives wp222 - 2 wp123");
    let lead = p("wp[3,3,3]^2") + genus3::h().select(&[2, 3, 4], &[2, 3, 4]).det().unwrap().scale(&Rational::new(1, 4));
    let oracles: Vec<Oracle> = default_curves(3).unwrap().into_iter().map(|c| Oracle::new(c).unwrap()).collect();
    c.check(
        "wp333^2 + |h33..h55|/4 = 0 in the oracle",
        oracles.iter().all(|o| o.vanishes(&lead).unwrap_or(false)),
    );
    let flipped = p("wp[3,3,3]^2") - genus3::h().select(&[2, 3, 4], &[2, 3, 4]).det().unwrap().scale(&Rational::new(1, 4));
    c.check("the opposite sign does not vanish", oracles.iter().all(|o| !o.vanishes(&flipped).unwrap_or(true)));
    c
}

fn criterion7() -> Criterion {
    let mut c = Criterion::default();
    let t = Instant::now();
    let report = oracle_suite(3, &OracleConfig::default()).expect("genus-3 oracle");
    oracle_sets(
        &mut c,
        &report,
        &["linear", "P5", "h-minors", "doubly-bordered", "fourindex-generated"],
    );
    let bordered = report.oracle.iter().filter(|r| r.set == "doubly-bordered").all(|r| r.verdicts.len() >= 5);
    c.check("at least five seeded border pairs", bordered);
    let three: Vec<_> = report.checks.iter().filter(|k| k.name.contains("3x3 minor of h")).collect();
    c.check("some 3x3 minor of h nonzero on every curve", three.len() >= 2 && three.iter().all(|k| k.passed));
    c.note(format!("{} oracle reports", report.oracle.len()));
    c.within(Duration::from_secs(600), t.elapsed());
    c
}

fn criterion8() -> Criterion {
    let mut c = Criterion::default();
    let report = DiscrepancyReport::build().expect("discrepancy report");
    c.check(
        "certified Appendix-2 lines equal the shifted Appendix-1 lines",
        report.baker_equivalence_holds(),
    );
    let mismatches = report.baker_mismatches();
    c.check(format!("{} mismatches listed", mismatches.len()), !mismatches.is_empty());
    let b2223 = mismatches.iter().find(|r| r.symbol == "B2223");
    c.check("B2223 fails the oracle or differs from the transformed line", b2223.is_some());
    c.check(
        "each uncertified line carries its residual",
        report.appendix2.iter().filter(|l| !l.certified()).all(|l| l.residual.is_some()),
    );
    c.check("comparison covers 15 symbols", baker::appendix_comparison().len() == 15);
    c.note(format!("mismatches: {}", mismatches.iter().map(|r| r.symbol.as_str()).collect::<Vec<_>>().join(" ")));
    c
}

fn criterion9() -> Criterion {
    let mut c = Criterion::default();
    for g in 1..=3u8 {
        let pf = polar_form(g, 1).expect("polar form");
        let inv = pf.invariants();
        c.check(format!("g={g}: F(x1,x1) = a(x1)"), inv.on_curve);
        c.check(format!("g={g}: symmetric in x, x1"), inv.symmetric);
        c.check(format!("g={g}: e and f annihilate F/(x-x1)^(g+1)"), inv.e_invariant && inv.f_invariant);
        let tan = tangency_check(&pf);
        let name = format!("g={g}: tangency multiplicity {} >= {}", tan.multiplicity, tan.required);
        if g == 1 {
            c.check(name, tan.meets_order());
            c.check("g=1: multiplicity exactly 2 on symbolic coefficients", tan.multiplicity == 2);
            let generic: Vec<Rational> = [3, -1, 2, 5, 7].map(Rational::from).to_vec();
            c.check(
                "g=1: multiplicity exactly 2 at a generic numeric curve",
                tangency_multiplicity_at(&pf, &generic, &Rational::new(1, 3)) == 2,
            );
        } else {
            c.unattainable(name, tan.meets_order());
        }
    }
    let pf2 = polar_form(2, 1).unwrap();
    let normal = genus2_normal_form(&pf2);
    c.unattainable("g=2: a6 = 0, a5 = 2/3 gives the classical F literally", normal == classical_genus2_polar(1));
    c.check("g=2: normal form equals the classical F up to the two-index shift", genus2_normal_form_shift(&pf2).is_ok());
    c
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Criterion); 9] = [
        ("sl2 structure and curve covariance", criterion1),
        ("genus-1 differential equation", criterion2),
        ("genus-1 oracle", criterion3),
        ("genus-2 symbolic", criterion4),
        ("genus-2 oracle", criterion5),
        ("genus-3 symbolic", criterion6),
        ("genus-3 oracle", criterion7),
        ("Baker equivalence", criterion8),
        ("polar forms", criterion9),
    ];
    let mut unexpected = Vec::new();
    for (n, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let c = run();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}  {title} ({:.1?})", n + 1, t.elapsed());
        for s in &c.subs {
            let tag = match (s.ok, s.unattainable) {
                (true, _) => "ok",
                (false, false) => "FAIL",
                (false, true) => "FAIL (unattainable)",
            };
            println!("    {tag:<19} {}", s.name);
        }
        for note in &c.notes {
            println!("    note                {note}");
        }
        for u in c.unexpected() {
            unexpected.push(format!("criterion {}: {u}", n + 1));
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: every failure is a recorded unattainable claim");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures:");
        for u in &unexpected {
            println!("    {u}");
        }
        ExitCode::FAILURE
    }
}
