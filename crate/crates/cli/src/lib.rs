//! Command-line front end: argument parsing, dispatch and rendering.
//!
//! [`run_command`] never prints; it returns the rendered body and the exit
//! code (0 success, 1 reference mismatch, 2 invalid input).

pub mod fixtures;
pub mod json;
pub mod render;

use std::collections::BTreeSet;
use std::ffi::OsString;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hopf_sieve_core::graded_support::TheoremReport;
use hopf_sieve_core::typespace::DIMENSION_CAP;
use hopf_sieve_core::{
    build_group, enumerate_raw, fusion_dual_group, fusion_group_algebra, scan_supports, theorem_a4,
    theorem_dihedral, GroupSpec, Sieve,
};

pub use fixtures::{check_examples, fixture_results, known_examples, KnownExample};
use json::{
    EnumerateJson, FusionJson, SieveJson, SupportCheckJson, SupportJson, TheoremJson, TypeJson,
};
pub use render::Style;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Markdown,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub format: Format,
    pub body: String,
    pub exit_code: i32,
}

impl Report {
    fn ok(format: Format, body: String) -> Report {
        Report {
            format,
            body,
            exit_code: 0,
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Report {
        Report {
            format: Format::Text,
            body: format!("error: {message}\n"),
            exit_code: 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hopf-sieve",
    version,
    about = "Coalgebra types of semisimple Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every coalgebra type of dimension N passing the counting filter
    Enumerate {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        json: bool,
    },
    /// Sieve the raw types of dimension N
    Sieve {
        #[arg(long)]
        dim: u32,
        /// Show every rule's verdict for every candidate
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Markdown report of the sieve with survivor slots and eliminations
    Report {
        #[arg(long, default_value_t = 60)]
        dim: u32,
        #[arg(long)]
        json: bool,
    },
    /// Fusion rules of kG, or of k^G with --dual
    Fusion {
        /// Group such as A5, D5, C3xS3
        #[arg(long)]
        group: String,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        json: bool,
    },
    /// Obstructions for every conjugation-closed support of the given size
    SupportCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        total: u32,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive the dihedral (n = 3, 5, 15) and A4 support theorems
    SupportTheorems {
        #[arg(long)]
        json: bool,
    },
    /// Check the known simple examples of dimension 60 against the sieve
    Fixtures {
        #[arg(long)]
        json: bool,
    },
}

fn to_json<T: Serialize>(value: &T) -> Report {
    match serde_json::to_string_pretty(value) {
        Ok(mut body) => {
            body.push('\n');
            Report::ok(Format::Json, body)
        }
        Err(e) => Report::invalid(e),
    }
}

fn check_dimension(dim: u32) -> Result<(), Report> {
    if dim == 0 || dim > DIMENSION_CAP {
        return Err(Report::invalid(format!(
            "dimension must be in 1..={DIMENSION_CAP}, got {dim}"
        )));
    }
    Ok(())
}

fn parse_group(text: &str) -> Result<GroupSpec, Report> {
    text.parse::<GroupSpec>().map_err(Report::invalid)
}

/// Runs `argv` (without the program name) with plain output.
pub fn run_command<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_command_styled(argv, Style::default())
}

pub fn run_command_styled<I, T>(argv: I, style: Style) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args =
        std::iter::once(OsString::from("hopf-sieve")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { 2 } else { 0 };
            return Report {
                format: Format::Text,
                body: e.render().to_string(),
                exit_code,
            };
        }
    };
    dispatch(cli.command, style).unwrap_or_else(|r| r)
}

fn sieve_json(dim: u32, explain: bool) -> Result<SieveJson, Report> {
    check_dimension(dim)?;
    let sieve = Sieve::new(dim).map_err(Report::invalid)?;
    let report = sieve.run().map_err(Report::invalid)?;
    let outcomes = explain.then(|| {
        report
            .survivors
            .iter()
            .map(|s| &s.ty)
            .chain(report.eliminated.iter().map(|e| &e.ty))
            .map(|ty| sieve.evaluate(ty))
            .collect::<Vec<_>>()
    });
    Ok(SieveJson::new(&report, outcomes.as_deref()))
}

fn mismatch_code(s: &SieveJson) -> i32 {
    i32::from(s.reference_match == Some(false))
}

fn theorem_reports() -> Result<Vec<TheoremReport>, Report> {
    let mut out = Vec::new();
    for n in [3, 5, 15] {
        out.push(theorem_dihedral(n).map_err(Report::invalid)?);
    }
    out.push(theorem_a4().map_err(Report::invalid)?);
    Ok(out)
}

fn dispatch(command: Command, style: Style) -> Result<Report, Report> {
    Ok(match command {
        Command::Enumerate { dim, json } => {
            check_dimension(dim)?;
            let types = enumerate_raw(dim).map_err(Report::invalid)?;
            let e = EnumerateJson {
                dimension: dim,
                count: types.len(),
                types: types.iter().map(TypeJson::from).collect(),
            };
            if json {
                to_json(&e)
            } else {
                Report::ok(Format::Text, render::enumerate_text(&e))
            }
        }
        Command::Sieve { dim, explain, json } => {
            let s = sieve_json(dim, explain)?;
            let mut r = if json {
                to_json(&s)
            } else {
                Report::ok(Format::Text, render::sieve_text(&s, style))
            };
            r.exit_code = mismatch_code(&s);
            r
        }
        Command::Report { dim, json } => {
            let s = sieve_json(dim, false)?;
            let mut r = if json {
                to_json(&s)
            } else {
                Report::ok(Format::Markdown, render::sieve_markdown(&s))
            };
            r.exit_code = mismatch_code(&s);
            r
        }
        Command::Fusion { group, dual, json } => {
            let spec = parse_group(&group)?;
            let table = if dual {
                fusion_dual_group(&spec)
            } else {
                fusion_group_algebra(&spec)
            }
            .map_err(Report::invalid)?;
            let f = FusionJson::from(&table);
            if json {
                to_json(&f)
            } else {
                Report::ok(Format::Text, render::fusion_text(&f))
            }
        }
        Command::SupportCheck { group, total, json } => {
            let spec = parse_group(&group)?;
            let g = build_group(&spec).map_err(Report::invalid)?;
            if total == 0 || total as usize > g.order() {
                return Err(Report::invalid(format!(
                    "total must be in 1..={}",
                    g.order()
                )));
            }
            let supports = scan_supports(&g, total)
                .iter()
                .map(|(support, o)| {
                    let labels = support.iter().map(|&e| g.label(e).to_string()).collect();
                    SupportJson::new(&g, labels, o)
                })
                .collect();
            let c = SupportCheckJson {
                group: spec.to_string(),
                total,
                supports,
            };
            if json {
                to_json(&c)
            } else {
                Report::ok(Format::Text, render::support_text(&c, style))
            }
        }
        Command::SupportTheorems { json } => {
            let reports = theorem_reports()?;
            let ts = reports
                .iter()
                .map(|r| build_group(&r.group).map(|g| TheoremJson::new(&g, r)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(Report::invalid)?;
            if json {
                to_json(&ts)
            } else {
                Report::ok(Format::Text, render::theorems_text(&ts, style))
            }
        }
        Command::Fixtures { json } => {
            let f = fixture_results();
            let mut r = if json {
                to_json(&f)
            } else {
                Report::ok(Format::Text, render::fixtures_text(&f, style))
            };
            r.exit_code = i32::from(!f.ok);
            r
        }
    })
}

/// `(type, rule code or "survivor")` rows of a markdown sieve report.
pub fn markdown_rows(body: &str) -> BTreeSet<(String, String)> {
    let mut out = BTreeSet::new();
    let mut section = "";
    for line in body.lines() {
        if let Some(h) = line.strip_prefix("## ") {
            section = if h.starts_with("Survivors") { "s" } else { "e" };
            continue;
        }
        let cells: Vec<&str> = line.trim_matches('|').split(" | ").map(str::trim).collect();
        if !line.starts_with("| (") && !line.starts_with("| -") || cells.len() < 3 {
            continue;
        }
        if section == "s" && cells[2].starts_with("(1,") {
            out.insert((cells[2].to_string(), "survivor".to_string()));
        } else if section == "e" && cells[0].starts_with("(1,") {
            let rule = cells[1].split_whitespace().next().unwrap_or("").to_string();
            out.insert((cells[0].to_string(), rule));
        }
    }
    out
}

/// The same rows read from a JSON sieve report.
pub fn json_rows(s: &SieveJson) -> BTreeSet<(String, String)> {
    s.survivors
        .iter()
        .map(|v| (v.ty.clone(), "survivor".to_string()))
        .chain(s.eliminated.iter().map(|e| (e.ty.clone(), e.rule.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        for argv in [
            &["enumerate", "--dim", "0"][..],
            &["enumerate", "--dim", "601"],
            &["sieve"],
            &["frobnicate"],
            &["fusion", "--group", "Q8"],
            &["fusion", "--group", "S5", "--dual"],
            &["fusion", "--group", "A5xA5"],
            &["support-check", "--group", "D5", "--total", "11"],
        ] {
            let r = run_command(argv);
            assert_eq!(r.exit_code, 2, "{argv:?}: {}", r.body);
        }
        assert_eq!(run_command(["--help"]).exit_code, 0);
    }

    #[test]
    fn report_sixty() {
        let r = run_command(["report", "--dim", "60"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.format, Format::Markdown);
        assert!(r.body.contains("| (xi) | 12 | (1, 12; 4, 3) |"));
        assert!(r.body.contains("R-GH1 (imported theorem)"));
        assert!(r.body.contains("Reference list: match."));
    }

    #[test]
    fn fusion_a5_dual() {
        let r = run_command(["fusion", "--group", "A5", "--dual"]);
        assert_eq!(r.exit_code, 0);
        assert!(r.body.contains("coalgebra type (1, 1; 3, 2; 4, 1; 5, 1)"));
        assert!(r.body.contains("3 · 3 = 1 + 3 + 5"));
    }

    #[test]
    fn colour_only_when_asked() {
        let plain = run_command(["sieve", "--dim", "60"]);
        assert!(!plain.body.contains('\x1b'));
        let coloured = run_command_styled(["sieve", "--dim", "60"], Style { color: true });
        assert!(coloured.body.contains("\x1b[32m"));
    }

    #[test]
    fn explain_lists_every_rule() {
        let r = run_command(["sieve", "--dim", "60", "--explain"]);
        assert!(r.body.matches("R-SELFDUAL2-A4").count() >= 34);
    }
}
