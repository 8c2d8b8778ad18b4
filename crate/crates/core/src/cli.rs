//! The `wpid` command line: `emit`, `check` and `multiplet`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, genus2, genus3, multiplet_identities, IdentitySet};
use crate::emit::{self, Format};
use crate::oracle::discrepancy::DiscrepancyReport;
use crate::oracle::instance::parse_curve;
use crate::oracle::make_instance;
use crate::poly::Poly;
use crate::sl2::{self, generate_multiplet, Multiplet};
use crate::suite::{self, OracleConfig, SuiteReport};
use crate::{Error, Result};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "wpid", version, about = "Covariant hyperelliptic wp-function identities of genus 1, 2 and 3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a named identity set.
    Emit(EmitArgs),
    /// Run the symbolic and/or oracle suites; exit 1 on any unexpected residual.
    Check(CheckArgs),
    /// Generate the multiplet of a named highest weight.
    Multiplet(MultipletArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub genus: u8,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EmitArgs {
    #[command(flatten)]
    pub common: Common,
    /// A catalog set, `<name>-corrected`, `doubly-bordered` or `discrepancies`.
    #[arg(long)]
    pub set: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for `doubly-bordered`.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub draws: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteKind {
    Symbolic,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteKind,
    /// Restrict the oracle suite to these sets (repeatable).
    #[arg(long)]
    pub set: Vec<String>,
    /// Curve coefficients `a0,a1,...,a_{2g+2}` (repeatable); default curves otherwise.
    #[arg(long)]
    pub curve: Vec<String>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random border pairs for the doubly bordered identity.
    #[arg(long, default_value_t = 5)]
    pub draws: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Args, Debug)]
pub struct MultipletArgs {
    #[command(flatten)]
    pub common: Common,
    /// Highest-weight name, e.g. `P9`, `P7` or `baker4`
    #[arg(long)]
    pub hw: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Highest weights accepted by `multiplet --hw`, per genus.
pub fn highest_weight_names(g: u8) -> &'static [&'static str] {
    match g {
        1 => &["ode", "wp11"],
        2 => &["baker4", "wp22"],
        3 => &["P9", "P7", "P5lin", "P3", "P1", "P5", "wp33"],
        _ => &[],
    }
}

pub fn named_multiplet(g: u8, name: &str) -> Result<Multiplet> {
    sl2::check_genus(g)?;
    let hw: Poly = match (g, name) {
        (1, "ode") => catalog::genus1::genus1_ode().relation,
        (1, "wp11") => crate::poly::p("wp[1,1]"),
        (2, "baker4") => genus2::baker_highest_weight(),
        (2, "wp22") => crate::poly::p("wp[2,2]"),
        (3, "P9" | "P7" | "P5lin" | "P3" | "P1") => return genus3::named_multiplet(name),
        (3, "P5") => genus3::p5_printed(0),
        (3, "wp33") => crate::poly::p("wp[3,3]"),
        _ => return Err(Error::UnknownHighestWeight(format!("{name} (genus {g})"))),
    };
    generate_multiplet(&hw, g, 2 * g as usize + 12)
}

/// The multiplet as an identity set, with `e(m_i) = c_i m_(i-1)` in the notes.
pub fn multiplet_set(g: u8, name: &str) -> Result<IdentitySet> {
    let m = named_multiplet(g, name)?;
    let factors = m.check_duality().map_err(Error::InvariantViolation)?;
    let mut members = multiplet_identities(&m, name, name);
    for (i, id) in members.iter_mut().enumerate() {
        let link = if i == 0 { "e(m0) = 0".to_string() } else { format!("e(m{i}) = {} m{}", factors[i - 1], i - 1) };
        id.note = Some(format!("f(m{i}) = m{}; {link}", i + 1));
    }
    Ok(IdentitySet::new(name, g, members))
}

#[derive(Serialize)]
struct MultipletRecord {
    member: usize,
    weight: Option<i32>,
    e_factor: Option<String>,
    relation: String,
    terms: serde_json::Value,
}

fn render_multiplet(set: &IdentitySet, m: &Multiplet, format: Format) -> Result<String> {
    let factors = m.check_duality().map_err(Error::InvariantViolation)?;
    Ok(match format {
        Format::Latex => emit::to_latex(set),
        Format::Json => {
            let recs: Vec<MultipletRecord> = m
                .members
                .iter()
                .enumerate()
                .map(|(i, p)| MultipletRecord {
                    member: i,
                    weight: m.weights[i],
                    e_factor: (i > 0).then(|| factors[i - 1].to_string()),
                    relation: p.to_string(),
                    terms: emit::terms_value(p),
                })
                .collect();
            let doc = serde_json::json!({
                "highest_weight": set.name,
                "genus": set.genus,
                "dimension": m.dimension(),
                "members": recs,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s = format!("# {} (genus {}), dimension {}\n", set.name, set.genus, m.dimension());
            for (i, p) in m.members.iter().enumerate() {
                let w = m.weights[i].map_or("-".to_string(), |w| w.to_string());
                let link = if i == 0 { "e: 0".to_string() } else { format!("e: {} * m{}", factors[i - 1], i - 1) };
                s.push_str(&format!("m{i}\tweight={w}\t{link}\t{p} = 0\n"));
            }
            s
        }
    })
}

fn emit_text(args: &EmitArgs) -> Result<String> {
    let g = args.common.genus;
    if args.set == "discrepancies" {
        if g != 3 {
            return Err(Error::UnknownSet(format!("discrepancies (genus {g})")));
        }
        let report = DiscrepancyReport::build()?;
        return match args.format {
            Format::Json => Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n"),
            _ => Ok(report.render_text()),
        };
    }
    let set = suite::resolve_set(g, &args.set, args.seed, args.draws)?;
    Ok(emit::render(&set, args.format))
}

fn curves(args: &CheckArgs) -> Result<Vec<crate::oracle::CurveInstance>> {
    args.curve
        .iter()
        .map(|c| make_instance(args.common.genus, &parse_curve(c)?))
        .collect()
}

pub fn run_check(args: &CheckArgs) -> Result<SuiteReport> {
    let g = args.common.genus;
    let mut report = SuiteReport {
        genus: g,
        ..Default::default()
    };
    if matches!(args.suite, SuiteKind::Symbolic | SuiteKind::All) {
        report.merge(suite::symbolic_suite(g)?);
    }
    if matches!(args.suite, SuiteKind::Oracle | SuiteKind::All) {
        let cfg = OracleConfig {
            sets: (!args.set.is_empty()).then(|| args.set.clone()),
            curves: curves(args)?,
            seed: args.seed,
            draws: args.draws,
            ..Default::default()
        };
        report.merge(suite::oracle_suite(g, &cfg)?);
    }
    Ok(report)
}

fn write_out(common: &Common, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegenerateCurve | Error::DegenerateInstance(_) | Error::NotASquare(_) => EXIT_DEGENERATE,
        Error::InvariantViolation(_) | Error::NotHighestWeight(_) | Error::DimensionExceeded(_) => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

/// Run a parsed command; returns the exit code.
pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Emit(args) => {
            write_out(&args.common, &emit_text(args)?)?;
            Ok(EXIT_OK)
        }
        Command::Multiplet(args) => {
            let g = args.common.genus;
            let m = named_multiplet(g, &args.hw)?;
            let set = multiplet_set(g, &args.hw)?;
            write_out(&args.common, &render_multiplet(&set, &m, args.format)?)?;
            Ok(EXIT_OK)
        }
        Command::Check(args) => {
            let report = run_check(args)?;
            let text = match args.format {
                ReportFormat::Text => {
                    let mut s = report.render_text();
                    s.push_str(if report.passed() { "all checks passed\n" } else { "verification failed\n" });
                    s
                }
                ReportFormat::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
            };
            write_out(&args.common, &text)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION })
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("wpid: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("wpid").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn multiplet_dimensions() {
        assert_eq!(named_multiplet(2, "baker4").unwrap().dimension(), 5);
        assert_eq!(named_multiplet(3, "P9").unwrap().dimension(), 9);
        assert_eq!(named_multiplet(3, "P7").unwrap().dimension(), 7);
        assert_eq!(named_multiplet(2, "wp22").unwrap().dimension(), 3);
        assert!(matches!(named_multiplet(2, "P9"), Err(Error::UnknownHighestWeight(_))));
    }

    #[test]
    fn emit_counts() {
        let cli = parse(&["emit", "--genus", "2", "--set", "bilinear", "--format", "json"]);
        let Command::Emit(args) = &cli.command else { panic!() };
        let out = emit_text(args).unwrap();
        assert_eq!(emit::parse_json(&out).unwrap().len(), 4);
        let cli = parse(&["emit", "--genus", "1", "--set", "ode"]);
        let Command::Emit(args) = &cli.command else { panic!() };
        let out = emit_text(args).unwrap();
        assert_eq!(out.lines().count(), 1);
        assert!(out.contains("weight=0"));
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["wpid", "emit", "--genus", "4", "--set", "ode"]).is_err());
        let cli = parse(&["emit", "--genus", "1", "--set", "nope"]);
        let err = run(&cli).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_USAGE);
        let cli = parse(&["check", "--genus", "1", "--suite", "oracle", "--curve", "1,0,0"]);
        assert_eq!(exit_code(&run(&cli).unwrap_err()), EXIT_USAGE);
    }

    #[test]
    fn degenerate_curve_exit_code() {
        // (x^2 + 1)^2
        let cli = parse(&["check", "--genus", "1", "--suite", "oracle", "--curve", "1,0,1/3,0,1"]);
        assert_eq!(exit_code(&run(&cli).unwrap_err()), EXIT_DEGENERATE);
    }

    #[test]
    fn genus1_check_passes() {
        let cli = parse(&["check", "--genus", "1", "--suite", "all"]);
        assert_eq!(run(&cli).unwrap(), EXIT_OK);
    }

    #[test]
    fn rational_curve_entries() {
        let a = parse_curve("1, 1/2, -3, 0, 4").unwrap();
        assert_eq!(a[1], Rational::new(1, 2));
    }
}
