//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on invalid
//! input, an exceeded enumeration cap, or any other error. Reports go to
//! stdout, diagnostics to stderr.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::capability::{self, DihedralWitness, WitnessReport};
use crate::constructions::EasterfieldSpec;
use crate::group::DEFAULT_ENUMERATION_CAP;
use crate::presentation::presentation;
use crate::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "easterfield",
    version,
    about = "Construct and verify capable p-group witnesses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the witness K(p, r)
    Witness {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Verify the dihedral witness whose central quotient has class c
    Dihedral {
        #[arg(long)]
        c: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Verify K(p, 1), ..., K(p, r_max)
    Scan {
        #[arg(long)]
        p: u64,
        #[arg(long = "r-max")]
        r_max: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Check that x0^(p^(r-1)) does not commute with y in K(p, r)
    Lemma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print a presentation of K(p, r)
    Presentation {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Output {
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Largest group order to enumerate
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
}

pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let result = match cli.command {
        Command::Witness { p, r, output } => run_witness(p, r, output, out),
        Command::Dihedral { c, output } => run_dihedral(c, output, out),
        Command::Scan { p, r_max, output } => run_scan(p, r_max, output, out),
        Command::Lemma { p, r, json } => run_lemma(p, r, json, out),
        Command::Presentation { p, r } => run_presentation(p, r, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn verdict(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn run_witness(p: u64, r: u32, output: Output, out: &mut impl Write) -> Result<i32, Error> {
    EasterfieldSpec::new(p, r)?;
    let report = capability::easterfield_witness(p, r, output.cap)?;
    if output.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap()).map_err(io)?;
    } else {
        write!(
            out,
            "{}",
            render_text(&format!("K({p}, {r})"), &report, &[])
        )
        .map_err(io)?;
    }
    Ok(verdict(report.all_checks_pass()))
}

#[derive(Serialize)]
struct DihedralJson<'a> {
    c: u64,
    #[serde(flatten)]
    report: &'a WitnessReport,
    model_order: Option<u64>,
    model_class: Option<u64>,
    model_matches: bool,
    sharp: bool,
}

pub fn run_dihedral(c: u64, output: Output, out: &mut impl Write) -> Result<i32, Error> {
    let witness: DihedralWitness = capability::dihedral_witness(c, output.cap)?;
    let report = &witness.report;
    if output.json {
        let json = DihedralJson {
            c,
            report,
            model_order: witness.model.map(|m| m.0),
            model_class: witness.model.map(|m| m.1),
            model_matches: witness.model_matches(),
            sharp: witness.sharp(),
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&json).unwrap()).map_err(io)?;
    } else {
        let title = format!("dihedral cover of order 2^{} (quotient class {c})", c + 2);
        let extra = [
            ("model_matches", witness.model_matches()),
            ("sharp", witness.sharp()),
        ];
        write!(out, "{}", render_text(&title, report, &extra)).map_err(io)?;
    }
    Ok(verdict(witness.all_checks_pass()))
}

pub fn run_scan(p: u64, r_max: u32, output: Output, out: &mut impl Write) -> Result<i32, Error> {
    let rows = capability::scan(p, r_max, output.cap)?;
    let mut any_error = false;
    let mut all_pass = true;
    let mut json_rows = Vec::new();
    for row in &rows {
        match &row.outcome {
            Ok(report) => {
                all_pass &= report.all_checks_pass();
                if output.json {
                    json_rows.push(serde_json::to_value(report).unwrap());
                } else {
                    write!(
                        out,
                        "{}",
                        render_text(&format!("K({p}, {})", row.r), report, &[])
                    )
                    .map_err(io)?;
                    writeln!(out).map_err(io)?;
                }
            }
            Err(e) => {
                any_error = true;
                if output.json {
                    json_rows.push(
                        serde_json::json!({ "p": p, "params": row.r, "error": e.to_string() }),
                    );
                } else {
                    writeln!(out, "K({p}, {}): error: {e}\n", row.r).map_err(io)?;
                }
            }
        }
    }
    if output.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&json_rows).unwrap()).map_err(io)?;
    }
    Ok(if any_error {
        EXIT_ERROR
    } else {
        verdict(all_pass)
    })
}

pub fn run_lemma(p: u64, r: u32, json: bool, out: &mut impl Write) -> Result<i32, Error> {
    let holds = capability::check_lemma(p, r)?;
    if json {
        let value = serde_json::json!({ "p": p, "r": r, "lemma_holds": holds });
        writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).map_err(io)?;
    } else {
        let exponent = p.pow(r - 1);
        writeln!(
            out,
            "{}  K({p}, {r}): [x0^{exponent}, y] {} e",
            if holds { "PASS" } else { "FAIL" },
            if holds { "!=" } else { "=" }
        )
        .map_err(io)?;
    }
    Ok(verdict(holds))
}

pub fn run_presentation(p: u64, r: u32, out: &mut impl Write) -> Result<i32, Error> {
    let text = presentation(&EasterfieldSpec::new(p, r)?)?;
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_PASS)
}

fn opt(value: Option<bool>) -> String {
    value.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

/// Aligned `key value` lines followed by one PASS/FAIL line per check.
pub fn render_text(title: &str, report: &WitnessReport, extra: &[(&str, bool)]) -> String {
    let rows: Vec<(&str, String)> = vec![
        ("witness", title.to_string()),
        ("p", report.p.to_string()),
        ("construction", report.construction.clone()),
        ("params", report.params.to_string()),
        ("group_order", report.group_order.to_string()),
        ("class_expected", report.class_expected.to_string()),
        ("class_computed", report.class_computed.to_string()),
        ("center_order", report.center_order.to_string()),
        ("quotient_order", report.quotient_order.to_string()),
        ("order_y_mod_center", report.order_y_mod_center.to_string()),
        (
            "order_x0_mod_center",
            report.order_x0_mod_center.to_string(),
        ),
        (
            "quotient_min_generators",
            report.quotient_min_generators.to_string(),
        ),
        ("a_exponent", report.a_exponent.to_string()),
        ("b_exponent", report.b_exponent.to_string()),
        ("bound_rhs", report.bound_rhs.to_string()),
        ("class_matches", report.class_matches.to_string()),
        ("center_claims_hold", opt(report.center_claims_hold)),
        ("quotient_orders_match", opt(report.quotient_orders_match)),
        (
            "quotient_rank_is_two",
            report.quotient_rank_is_two.to_string(),
        ),
        ("equality_attained", report.equality_attained.to_string()),
        ("lcs_matches_prediction", opt(report.lcs_matches_prediction)),
        ("lemma_holds", opt(report.lemma_holds)),
    ];
    let mut text = String::new();
    for (key, value) in rows {
        text.push_str(&format!("{key:<25}{value}\n"));
    }
    let mut checks = report.checks();
    checks.extend_from_slice(extra);
    for (name, ok) in &checks {
        text.push_str(&format!("{}  {name}\n", if *ok { "PASS" } else { "FAIL" }));
    }
    let passed = checks.iter().filter(|(_, ok)| *ok).count();
    let summary = if passed == checks.len() {
        "PASS"
    } else {
        "FAIL"
    };
    text.push_str(&format!(
        "summary: {summary} ({passed}/{} checks)\n",
        checks.len()
    ));
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("easterfield").chain(args.iter().copied()))
            .unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn witness_json() {
        let (code, out, _) = run_args(&["witness", "--p", "3", "--r", "2", "--json"]);
        assert_eq!(code, EXIT_PASS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["class_computed"], 4);
        assert_eq!(v["equality_attained"], true);
    }

    #[test]
    fn witness_rejects_composite_p() {
        let (code, out, err) = run_args(&["witness", "--p", "4", "--r", "1"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(out.is_empty());
        assert!(err.contains("p must be prime"), "{err}");
    }

    #[test]
    fn cap_refusal() {
        let (code, _, err) = run_args(&["witness", "--p", "3", "--r", "2", "--cap", "100"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("exceeds the enumeration cap"), "{err}");
    }

    #[test]
    fn text_report_layout() {
        let (code, out, _) = run_args(&["witness", "--p", "2", "--r", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("class_computed           3\n"), "{out}");
        assert!(out.contains("PASS  equality_attained\n"));
        assert!(out.ends_with("summary: PASS (7/7 checks)\n"), "{out}");
    }

    #[test]
    fn dihedral_commands() {
        let (code, out, _) = run_args(&["dihedral", "--c", "3", "--json"]);
        assert_eq!(code, EXIT_PASS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["b_exponent"], 3);
        assert_eq!(v["bound_rhs"], 3);
        assert_eq!(v["model_order"], 16);
        let (code, out, _) = run_args(&["dihedral", "--c", "1"]);
        assert_eq!(code, EXIT_PASS, "{out}");
        assert!(out.contains("PASS  sharp\n"));
        let (code, _, _) = run_args(&["dihedral", "--c", "0"]);
        assert_eq!(code, EXIT_ERROR);
    }

    #[test]
    fn scan_and_lemma() {
        let (code, out, _) = run_args(&["scan", "--p", "2", "--r-max", "3", "--json"]);
        assert_eq!(code, EXIT_PASS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 3);
        let (code, out, _) = run_args(&["scan", "--p", "3", "--r-max", "2", "--cap", "100"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(out.contains("K(3, 2): error:"));
        assert!(out.contains("summary: PASS"));
        let (code, out, _) = run_args(&["lemma", "--p", "3", "--r", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert_eq!(out, "PASS  K(3, 2): [x0^3, y] != e\n");
    }

    #[test]
    fn presentation_command() {
        let (code, out, _) = run_args(&["presentation", "--p", "3", "--r", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("y^-1*x2*y = x1^-3*x2^-2"));
    }
}
