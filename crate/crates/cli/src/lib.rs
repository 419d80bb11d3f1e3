//! The `wsp` command-line tool.

pub mod report;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use wsp_core::bounds::bounds_report;
use wsp_core::cotangent::t1_table;
use wsp_core::enumerate::{sorted_semigroups_of_genus, table1_report, DEFAULT_MAX_GENUS};
use wsp_core::families::check_family_spec;
use wsp_core::polyrig::{base_equations, syzygy_residuals};
use wsp_core::{family, Error, NumericalSemigroup};

pub use report::{BoundsJson, FamilyJson, SemigroupReport, T1Json};

#[derive(Debug, Parser)]
#[command(name = "wsp", version, about = "Weierstrass semigroup invariants and moduli bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic invariants of a semigroup.
    Info(SemigroupArgs),
    /// Graded dimensions of T¹.
    T1(SemigroupArgs),
    /// The moduli dimension bounds.
    Bounds(SemigroupArgs),
    /// Every semigroup of one genus, as CSV.
    Enumerate {
        #[arg(long)]
        genus: usize,
        /// Keep only semigroups with t1_plus > 0.
        #[arg(long)]
        only_positive_t1: bool,
        #[arg(long, env = "WSP_MAX_GENUS", default_value_t = DEFAULT_MAX_GENUS)]
        max_genus: usize,
        /// Emit CSV (the default).
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Genus 2 to 6 semigroups with a positive part in T¹.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Closed-form data of a multiplicity-6 family.
    Family {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        tau: u32,
        /// Check every closed form against the general algorithms.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// The 5τ equations of the base space.
    FamilyEquations {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        tau: u32,
    },
    /// Residuals of the two syzygies of the first family.
    FamilySyzygies {
        #[arg(long)]
        tau: u32,
    },
}

#[derive(Debug, Args)]
pub struct SemigroupArgs {
    /// Generators, e.g. `6 7 8`.
    #[arg(required_unless_present = "gaps", conflicts_with = "gaps")]
    pub generators: Vec<u64>,
    /// Comma-separated gap set instead of generators.
    #[arg(long, value_delimiter = ',')]
    pub gaps: Option<Vec<u64>>,
    #[arg(long)]
    pub json: bool,
}

impl SemigroupArgs {
    pub fn semigroup(&self) -> wsp_core::Result<NumericalSemigroup> {
        match &self.gaps {
            Some(gaps) => NumericalSemigroup::from_gaps(&gaps.iter().copied().collect::<BTreeSet<_>>()),
            None => NumericalSemigroup::from_generators(&self.generators),
        }
    }
}

/// Process exit status for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::FormulaInconsistency { .. } => 3,
        Error::VerificationFailure(_) | Error::SyzygyFailure(_) => 4,
        _ => 2,
    }
}

/// Runs one command and returns its standard output.
pub fn run(cli: &Cli) -> wsp_core::Result<String> {
    let mut out = String::new();
    match &cli.command {
        Command::Info(args) => {
            let s = args.semigroup()?;
            let r = SemigroupReport::new(&s)?;
            if args.json {
                out = to_json(&r);
            } else {
                let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                let _ = writeln!(out, "generators   {}", join(&r.generators, " "));
                let _ = writeln!(out, "multiplicity {}", s.multiplicity());
                let _ = writeln!(out, "genus        {}", r.genus);
                let _ = writeln!(out, "frobenius    {}", r.frobenius);
                let _ = writeln!(out, "gaps         {}", join(&r.gaps, " "));
                let _ = writeln!(out, "symmetric    {}", opt(r.symmetric.map(|b| b.to_string())));
                let _ = writeln!(out, "lambda       {}", opt(r.lambda.map(|v| v.to_string())));
                let _ = writeln!(out, "ewt          {}", opt(r.ewt.map(|v| v.to_string())));
                let _ = writeln!(out, "wt           {}", opt(r.wt.map(|v| v.to_string())));
            }
        }
        Command::T1(args) => {
            let s = args.semigroup()?;
            require_genus_two(&s)?;
            if args.json {
                out = to_json(&SemigroupReport::new(&s)?);
            } else {
                let table = t1_table(&s)?;
                let _ = writeln!(out, "{:>8}  {:>4}", "degree", "dim");
                for (d, n) in &table.by_degree {
                    let _ = writeln!(out, "{d:>8}  {n:>4}");
                }
                let _ = writeln!(out, "t1_plus  = {}", table.t1_plus);
                let _ = writeln!(out, "t1_minus = {}", table.t1_minus);
            }
        }
        Command::Bounds(args) => {
            let s = args.semigroup()?;
            require_genus_two(&s)?;
            if args.json {
                out = to_json(&SemigroupReport::new(&s)?);
            } else {
                let b = bounds_report(&s)?;
                let exact = b.exact_moduli_dim.map_or("-".to_string(), |v| v.to_string());
                for (k, v) in [
                    ("genus", b.genus.to_string()),
                    ("lambda", b.lambda.to_string()),
                    ("ewt", b.ewt.to_string()),
                    ("t1_plus", b.t1_plus.to_string()),
                    ("t1_minus", b.t1_minus.to_string()),
                    ("pflueger_lower", b.pflueger_lower.to_string()),
                    ("new_lower", b.new_lower.to_string()),
                    ("rv_upper", b.rv_upper.to_string()),
                    ("smoothing_dim", b.smoothing_dim.to_string()),
                    ("negatively_graded", b.negatively_graded.to_string()),
                    ("exact_moduli_dim", exact),
                ] {
                    let _ = writeln!(out, "{k:<18} {v}");
                }
            }
        }
        Command::Enumerate {
            genus,
            only_positive_t1,
            max_genus,
            json,
            ..
        } => {
            let mut reports = Vec::new();
            for s in sorted_semigroups_of_genus(*genus, *max_genus)? {
                let r = SemigroupReport::new(&s)?;
                if *only_positive_t1 && r.t1.as_ref().map_or(true, |t| t.plus == 0) {
                    continue;
                }
                reports.push(r);
            }
            if *json {
                out = to_json(&reports);
            } else {
                out.push_str(CSV_HEADER);
                out.push('\n');
                for r in &reports {
                    out.push_str(&csv_row(r));
                    out.push('\n');
                }
            }
        }
        Command::Table1 { json } => {
            let rows = table1_report()?;
            if *json {
                let reports = rows
                    .iter()
                    .map(|r| SemigroupReport::new(&NumericalSemigroup::from_generators(&r.generators)?))
                    .collect::<wsp_core::Result<Vec<_>>>()?;
                out = to_json(&reports);
            } else {
                let _ = writeln!(out, "{:<20} {:>9} {:>3} {:>7}", "gaps", "new_lower", "rv", "t1_plus");
                for r in &rows {
                    let _ = writeln!(
                        out,
                        "{:<20} {:>9} {:>3} {:>7}",
                        join(&r.gaps, ","),
                        r.new_lower,
                        r.rv_upper,
                        r.t1_plus
                    );
                }
            }
        }
        Command::Family { id, tau, verify, json } => {
            let spec = family(*id, *tau)?;
            let record = if *verify { Some(check_family_spec(&spec)?) } else { None };
            if *json {
                out = to_json(&FamilyJson::new(&spec, record.as_ref()));
            } else {
                let _ = writeln!(out, "family {} tau {}", spec.family_id, spec.tau);
                let _ = writeln!(out, "generators  {}", join(spec.semigroup.min_gens(), " "));
                let _ = writeln!(out, "genus       {}", spec.closed_genus);
                let _ = writeln!(out, "frobenius   {}", spec.closed_frobenius);
                let _ = writeln!(out, "t1_minus    {}", spec.closed_t1_minus);
                let _ = writeln!(out, "t1_plus     {}", spec.closed_t1_plus());
                let _ = writeln!(out, "moduli_dim  {}", spec.closed_moduli_dim);
                if let Some(c) = spec.closed_cone_dim {
                    let _ = writeln!(out, "cone_dim    {c}");
                }
                if let Some(record) = &record {
                    out.push('\n');
                    for a in &record.assertions {
                        if a.passed() {
                            let _ = writeln!(out, "{} = {} ✓", a.name, a.actual);
                        } else {
                            let _ = writeln!(out, "{} = {} ✗ (expected {})", a.name, a.actual, a.expected);
                        }
                    }
                }
            }
            if let Some(a) = record.as_ref().and_then(|r| r.first_failure()) {
                return Err(Error::VerificationFailure(format!(
                    "{}: expected {}, got {}\n{out}",
                    a.name, a.expected, a.actual
                )));
            }
        }
        Command::FamilyEquations { id, tau } => {
            for eq in base_equations(*id, *tau)? {
                let _ = writeln!(out, "{eq}");
            }
        }
        Command::FamilySyzygies { tau } => {
            family(1, *tau)?;
            for (label, residual) in syzygy_residuals(*tau)? {
                if !residual.is_zero() {
                    return Err(Error::SyzygyFailure(format!("{label} leaves residual {residual}")));
                }
                let _ = writeln!(out, "{label} = 0 ✓");
            }
        }
    }
    Ok(out)
}

pub const CSV_HEADER: &str = "gaps;generators;genus;lambda;ewt;t1_plus;t1_minus;pflueger;new_lower;rv";

/// One CSV line; fields undefined at small genus are left empty.
pub fn csv_row(r: &SemigroupReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_default();
    let b = r.bounds.as_ref();
    [
        join(&r.gaps, ","),
        join(&r.generators, ","),
        r.genus.to_string(),
        opt(r.lambda.map(|v| v.to_string())),
        opt(r.ewt.map(|v| v.to_string())),
        opt(r.t1.as_ref().map(|t| t.plus.to_string())),
        opt(r.t1.as_ref().map(|t| t.minus.to_string())),
        opt(b.map(|b| b.pflueger_lower.to_string())),
        opt(b.map(|b| b.new_lower.to_string())),
        opt(b.map(|b| b.rv_upper.to_string())),
    ]
    .join(";")
}

fn require_genus_two(s: &NumericalSemigroup) -> wsp_core::Result<()> {
    if s.genus() < 2 {
        return Err(Error::GenusTooSmall {
            genus: s.genus(),
            required: 2,
        });
    }
    Ok(())
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report is serializable");
    s.push('\n');
    s
}
