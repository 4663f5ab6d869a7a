//! Command-line interface for exact Coxeter growth functions and certified
//! growth rates.
//!
//! Subcommands:
//!
//! * `growth <file>` — growth function of a Coxeter system given as a matrix
//!   file (plain text or JSON), with a certified rate when one exists.
//! * `ideal <n> <p> <q> <r> <s>` — closed-form growth report for an ideal
//!   polytope angle vector in hyperbolic 3-space.
//! * `table1` — compute and check the built-in reference table of six
//!   polytopes (three simplices, two pyramid-derived polytopes, one prism).
//! * `family --from A --to B` — sweep the glued-pyramid family.
//!
//! Exit codes: 0 success; 2 unreadable or malformed input; 3 a size/range
//! guard refused the request; 4 the Coxeter system is finite (its growth
//! polynomial is printed); 5 an invalid angle vector; 6 a computed value
//! disagrees with pinned reference data.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use coxeter_growth::coxeter::{CoxeterMatrix, Label};
use coxeter_growth::perron::{
    default_width, ideal_report, matrix_report, minimum_check, reference_polytopes, BoundVerdict,
    GrowthReport, ReportSource, RightAngledVerdict, TauInterval,
};
use coxeter_growth::{validate, Error, IntPolynomial};

const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_FINITE: u8 = 4;
const EXIT_VECTOR: u8 = 5;
const EXIT_MISMATCH: u8 = 6;

#[derive(Parser)]
#[command(
    name = "coxeter-growth",
    version,
    about = "Exact growth functions of Coxeter systems and certified growth rates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Growth function of the Coxeter system described by a matrix file
    Growth {
        /// Matrix file: plain text (`size N`, optional `name …`, one `i j
        /// label` triple per line, labels ≥ 2 or `inf`, omitted pairs
        /// commute) or a JSON document with the same fields
        file: PathBuf,
        /// Decimal digits for the growth rate
        #[arg(long, default_value_t = 5)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Growth report for an ideal polytope with n facets and angle counts
    /// (p, q, r, s) at π/2, π/3, π/4, π/6
    Ideal {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
        /// Decimal digits for the growth rate
        #[arg(long, default_value_t = 5)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the six reference polytopes and check them against pinned
    /// denominators and five-decimal rates
    Table1 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// JSON file overriding the pinned rows (vector, denominator, rate)
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Sweep the glued-pyramid family: m copies, n = m + 4 facets
    Family {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, default_value_t = 10)]
        to: u64,
        /// Decimal digits for the growth rates
        #[arg(long, default_value_t = 5)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = FamilyFormat::Text)]
        format: FamilyFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyFormat {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Growth {
            file,
            digits,
            format,
        } => cmd_growth(&file, digits, format),
        Command::Ideal {
            n,
            p,
            q,
            r,
            s,
            digits,
            format,
        } => cmd_ideal(n, p, q, r, s, digits, format),
        Command::Table1 { format, reference } => cmd_table1(format, reference.as_deref()),
        Command::Family {
            from,
            to,
            digits,
            format,
        } => cmd_family(from, to, digits, format),
    };
    ExitCode::from(code)
}

// ---------------------------------------------------------------------------
// Matrix input
// ---------------------------------------------------------------------------

/// Label cell in a JSON matrix document: a number or the word "inf".
#[derive(Deserialize)]
#[serde(untagged)]
enum LabelToken {
    Number(u32),
    Word(String),
}

#[derive(Deserialize)]
struct MatrixDocument {
    size: usize,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    labels: Vec<(usize, usize, LabelToken)>,
}

struct MatrixInput {
    matrix: CoxeterMatrix,
    name: Option<String>,
}

fn parse_label_token(token: &LabelToken) -> Result<Label, String> {
    match token {
        LabelToken::Number(m) => Ok(Label::Finite(*m)),
        LabelToken::Word(w) if w == "inf" => Ok(Label::Infinity),
        LabelToken::Word(w) => Err(format!("unknown label {w:?} (expected an integer or \"inf\")")),
    }
}

fn load_matrix(path: &Path) -> Result<MatrixInput, String> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    if raw.trim_start().starts_with('{') {
        parse_matrix_json(&raw).map_err(|e| format!("{}: {e}", path.display()))
    } else {
        parse_matrix_text(&raw).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn parse_matrix_json(raw: &str) -> Result<MatrixInput, String> {
    let doc: MatrixDocument =
        serde_json::from_str(raw).map_err(|e| format!("invalid JSON: {e}"))?;
    let mut labels = Vec::new();
    for (i, j, token) in &doc.labels {
        labels.push((*i, *j, parse_label_token(token)?));
    }
    let matrix = CoxeterMatrix::from_labels(doc.size, &labels).map_err(|e| e.to_string())?;
    Ok(MatrixInput {
        matrix,
        name: doc.name,
    })
}

fn parse_matrix_text(raw: &str) -> Result<MatrixInput, String> {
    let mut size: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut labels: Vec<(usize, usize, Label)> = Vec::new();
    for (index, line) in raw.lines().enumerate() {
        let line_no = index + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("size") {
            if size.is_some() {
                return Err(format!("line {line_no}: duplicate size directive"));
            }
            size = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| format!("line {line_no}: size must be a non-negative integer"))?,
            );
            continue;
        }
        if let Some(rest) = content.strip_prefix("name") {
            name = Some(rest.trim().to_string());
            continue;
        }
        let size = size.ok_or_else(|| {
            format!("line {line_no}: a `size N` directive must precede the label lines")
        })?;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(format!(
                "line {line_no}: expected `i j label`, got {content:?}"
            ));
        }
        let parse_index = |field: &str| -> Result<usize, String> {
            field
                .parse()
                .map_err(|_| format!("line {line_no}: generator index {field:?} is not an integer"))
        };
        let i = parse_index(fields[0])?;
        let j = parse_index(fields[1])?;
        if i >= j {
            return Err(format!(
                "line {line_no}: generator pair must satisfy i < j (got {i} {j})"
            ));
        }
        if j >= size {
            return Err(format!(
                "line {line_no}: generator index {j} out of range for size {size}"
            ));
        }
        let label = if fields[2] == "inf" {
            Label::Infinity
        } else {
            let m: u32 = fields[2].parse().map_err(|_| {
                format!("line {line_no}: label {:?} is not an integer or `inf`", fields[2])
            })?;
            if m < 2 {
                return Err(format!(
                    "line {line_no}: off-diagonal labels must be at least 2 (got {m})"
                ));
            }
            Label::Finite(m)
        };
        if labels.iter().any(|&(a, b, _)| (a, b) == (i, j)) {
            return Err(format!("line {line_no}: duplicate label for pair ({i}, {j})"));
        }
        labels.push((i, j, label));
    }
    let size = size.ok_or_else(|| "missing `size N` directive".to_string())?;
    let matrix = CoxeterMatrix::from_labels(size, &labels).map_err(|e| e.to_string())?;
    Ok(MatrixInput { matrix, name })
}

// ---------------------------------------------------------------------------
// Report documents (JSON) and text rendering
// ---------------------------------------------------------------------------

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum InputDoc {
    Matrix {
        size: usize,
        name: Option<String>,
    },
    Ideal {
        n: u64,
        p: u64,
        q: u64,
        r: u64,
        s: u64,
    },
}

#[derive(Serialize)]
struct PerronDoc {
    applicable: bool,
    support_gcd: u64,
    negative_coefficient_indices: Vec<usize>,
    degree: Option<usize>,
    constant_is_minus_one: bool,
}

#[derive(Serialize)]
struct BoundsDoc {
    method: &'static str,
    proved: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_sign: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_sign: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct ReportDocument {
    input: InputDoc,
    /// Ascending coefficients as decimal strings (arbitrary precision).
    numerator: Vec<String>,
    numerator_pretty: String,
    denominator: Vec<String>,
    denominator_pretty: String,
    /// Rounded rate, present when a certified enclosure exists.
    tau: Option<String>,
    tau_exact: Option<bool>,
    /// Exact rational enclosure endpoints.
    tau_lo: Option<String>,
    tau_hi: Option<String>,
    enclosure_width_bound: Option<String>,
    perron: PerronDoc,
    bounds: BoundsDoc,
    right_angled: Option<String>,
}

fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn input_doc(source: &ReportSource) -> InputDoc {
    match source {
        ReportSource::Matrix { size, name } => InputDoc::Matrix {
            size: *size,
            name: name.clone(),
        },
        ReportSource::Ideal(v) => InputDoc::Ideal {
            n: v.n(),
            p: v.p(),
            q: v.q(),
            r: v.r(),
            s: v.s(),
        },
    }
}

fn bounds_doc(bounds: &BoundVerdict) -> BoundsDoc {
    match bounds {
        BoundVerdict::ProvedBySign {
            lower_sign,
            upper_sign,
        } => BoundsDoc {
            method: "sign",
            proved: true,
            lower_sign: Some(*lower_sign),
            upper_sign: Some(*upper_sign),
            detail: None,
        },
        BoundVerdict::ProvedByInterval => BoundsDoc {
            method: "interval",
            proved: true,
            lower_sign: None,
            upper_sign: None,
            detail: None,
        },
        BoundVerdict::NotApplicable => BoundsDoc {
            method: "not-applicable",
            proved: false,
            lower_sign: None,
            upper_sign: None,
            detail: None,
        },
        BoundVerdict::Failed { detail } => BoundsDoc {
            method: "failed",
            proved: false,
            lower_sign: None,
            upper_sign: None,
            detail: Some(detail.clone()),
        },
    }
}

fn right_angled_string(verdict: &RightAngledVerdict) -> String {
    match verdict {
        RightAngledVerdict::Equality => "equality".to_string(),
        RightAngledVerdict::StrictlyAbove => "strictly-above".to_string(),
        RightAngledVerdict::Failed { detail } => format!("failed: {detail}"),
    }
}

fn report_document(report: &GrowthReport, digits: u32) -> ReportDocument {
    let tau = report.tau.as_ref();
    ReportDocument {
        input: input_doc(&report.source),
        numerator: coeff_strings(report.growth.numerator()),
        numerator_pretty: report.growth.numerator().to_string(),
        denominator: coeff_strings(report.growth.denominator()),
        denominator_pretty: report.growth.denominator().to_string(),
        tau: tau.map(|t| t.decimal(digits)),
        tau_exact: tau.map(TauInterval::is_exact),
        tau_lo: tau.map(|t| t.lo.to_string()),
        tau_hi: tau.map(|t| t.hi.to_string()),
        enclosure_width_bound: tau.map(|_| default_width().to_string()),
        perron: PerronDoc {
            applicable: report.perron.applicable,
            support_gcd: report.perron.support_gcd,
            negative_coefficient_indices: report.perron.negative_coefficient_indices.clone(),
            degree: report.perron.degree,
            constant_is_minus_one: report.perron.constant_is_minus_one,
        },
        bounds: bounds_doc(&report.bounds),
        right_angled: report.right_angled.as_ref().map(right_angled_string),
    }
}

fn render_report_text(report: &GrowthReport, digits: u32, elapsed_ms: f64) -> String {
    let mut out = String::new();
    match &report.source {
        ReportSource::Matrix { size, name } => {
            let _ = writeln!(out, "input: Coxeter matrix on {size} generators");
            if let Some(name) = name {
                let _ = writeln!(out, "name: {name}");
            }
        }
        ReportSource::Ideal(v) => {
            let _ = writeln!(
                out,
                "input: ideal polytope with {} facets, angle counts (p, q, r, s) = ({}, {}, {}, {})",
                v.n(),
                v.p(),
                v.q(),
                v.r(),
                v.s()
            );
        }
    }
    let _ = writeln!(out, "growth function");
    let _ = writeln!(out, "  numerator:   {}", report.growth.numerator());
    let _ = writeln!(out, "  denominator: {}", report.growth.denominator());
    let _ = writeln!(
        out,
        "  ascending coefficients: {:?} / {:?}",
        coeff_strings(report.growth.numerator()),
        coeff_strings(report.growth.denominator())
    );
    match &report.tau {
        Some(tau) if tau.is_exact() => {
            let _ = writeln!(out, "growth rate: {} (exact)", tau.decimal(digits));
        }
        Some(tau) => {
            let _ = writeln!(
                out,
                "growth rate: {} (certified enclosure of width <= {})",
                tau.decimal(digits),
                default_width()
            );
        }
        None => {
            let _ = writeln!(
                out,
                "growth rate: none certified (the smallest-root certificate does not apply)"
            );
        }
    }
    if report.perron.applicable {
        let _ = writeln!(
            out,
            "perron certificate: applicable (degree {}, support gcd {}, no negative coefficients)",
            report.perron.degree.unwrap_or(0),
            report.perron.support_gcd
        );
    } else {
        let mut reasons = Vec::new();
        if !report.perron.constant_is_minus_one {
            reasons.push("constant term is not -1 after sign normalization".to_string());
        }
        if !report.perron.negative_coefficient_indices.is_empty() {
            reasons.push(format!(
                "negative coefficients at exponents {:?}",
                report.perron.negative_coefficient_indices
            ));
        }
        if report.perron.support_gcd != 1 {
            reasons.push(format!("support gcd {}", report.perron.support_gcd));
        }
        if report.perron.degree < Some(2) {
            reasons.push(match report.perron.degree {
                Some(d) => format!("degree {d} below 2"),
                None => "zero polynomial".to_string(),
            });
        }
        let _ = writeln!(out, "perron certificate: not applicable ({})", reasons.join("; "));
    }
    match &report.bounds {
        BoundVerdict::ProvedBySign {
            lower_sign,
            upper_sign,
        } => {
            let _ = writeln!(
                out,
                "bounds n-3 <= tau <= n-1: proved by exact signs ({lower_sign} at 1/(n-3), {upper_sign} at 1/(n-1))"
            );
        }
        BoundVerdict::ProvedByInterval => {
            let _ = writeln!(out, "bounds n-3 <= tau <= n-1: proved by enclosure inclusion");
        }
        BoundVerdict::NotApplicable => {
            let _ = writeln!(out, "bounds: not applicable (no facet count for this input)");
        }
        BoundVerdict::Failed { detail } => {
            let _ = writeln!(out, "bounds n-3 <= tau <= n-1: FAILED ({detail})");
        }
    }
    if let Some(verdict) = &report.right_angled {
        let line = match verdict {
            RightAngledVerdict::Equality => "tau = n - 3 exactly (right-angled)".to_string(),
            RightAngledVerdict::StrictlyAbove => "tau > n - 3 strictly".to_string(),
            RightAngledVerdict::Failed { detail } => format!("FAILED ({detail})"),
        };
        let _ = writeln!(out, "right-angle dichotomy: {line}");
    }
    let _ = writeln!(out, "computed in {elapsed_ms:.2} ms");
    out
}

fn emit_report(report: &GrowthReport, digits: u32, format: Format, started: Instant) {
    match format {
        Format::Text => {
            print!(
                "{}",
                render_report_text(report, digits, started.elapsed().as_secs_f64() * 1000.0)
            );
        }
        Format::Json => {
            let doc = report_document(report, digits);
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("report serializes")
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_growth(file: &Path, digits: u32, format: Format) -> u8 {
    let started = Instant::now();
    let input = match load_matrix(file) {
        Ok(input) => input,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT;
        }
    };
    match matrix_report(&input.matrix, input.name, &default_width()) {
        Ok(report) => {
            emit_report(&report, digits, format, started);
            0
        }
        Err(Error::FiniteSystem { solomon }) => {
            eprintln!("the Coxeter system is finite; its growth polynomial is");
            eprintln!("  {solomon}");
            eprintln!(
                "  ascending coefficients: {:?}",
                coeff_strings(&solomon)
            );
            EXIT_FINITE
        }
        Err(e @ Error::RankGuard { .. }) => {
            eprintln!("error: {e}");
            EXIT_GUARD
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn cmd_ideal(n: i64, p: i64, q: i64, r: i64, s: i64, digits: u32, format: Format) -> u8 {
    let started = Instant::now();
    let vector = match validate(n, p, q, r, s) {
        Ok(vector) => vector,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VECTOR;
        }
    };
    match ideal_report(&vector, &default_width()) {
        Ok(report) => {
            emit_report(&report, digits, format, started);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

/// One pinned reference row, both for the built-in table and for the
/// `--reference` override file.
#[derive(Serialize, Deserialize, Clone)]
struct ReferenceRowDoc {
    #[serde(default)]
    name: Option<String>,
    /// (n, p, q, r, s)
    vector: [i64; 5],
    /// Ascending coefficients of the reduced denominator.
    denominator: Vec<i64>,
    /// Growth rate at five decimals.
    rate: String,
}

#[derive(Serialize)]
struct TableRowDoc {
    name: Option<String>,
    vector: [i64; 5],
    expected_denominator: Vec<i64>,
    computed_denominator: Vec<String>,
    expected_rate: String,
    computed_rate: String,
    pass: bool,
}

#[derive(Serialize)]
struct TableDoc {
    rows: Vec<TableRowDoc>,
    minimum: Option<MinimumDoc>,
    all_pass: bool,
}

#[derive(Serialize)]
struct MinimumDoc {
    vector: [i64; 5],
    rate: String,
    unique: bool,
    distinct_denominators: bool,
}

fn builtin_reference_rows() -> Vec<ReferenceRowDoc> {
    reference_polytopes()
        .iter()
        .map(|r| {
            let (n, p, q, s_, t_) = r.vector.as_tuple();
            ReferenceRowDoc {
                name: Some(r.name.to_string()),
                vector: [n as i64, p as i64, q as i64, s_ as i64, t_ as i64],
                denominator: r
                    .denominator
                    .coeffs()
                    .iter()
                    .map(|c| i64::try_from(c.clone()).expect("reference coefficients are small"))
                    .collect(),
                rate: r.rate.to_string(),
            }
        })
        .collect()
}

fn cmd_table1(format: Format, reference: Option<&Path>) -> u8 {
    let rows = match reference {
        None => builtin_reference_rows(),
        Some(path) => {
            let raw = match std::fs::read_to_string(path) {
                Ok(raw) => raw,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            };
            match serde_json::from_str::<Vec<ReferenceRowDoc>>(&raw) {
                Ok(rows) => rows,
                Err(e) => {
                    eprintln!("error: {}: invalid JSON: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
        }
    };
    let width = default_width();
    let mut reports = Vec::new();
    let mut row_docs = Vec::new();
    let mut all_pass = true;
    for row in &rows {
        let [n, p, q, r, s] = row.vector;
        let vector = match validate(n, p, q, r, s) {
            Ok(vector) => vector,
            Err(e) => {
                eprintln!("error: reference vector {:?}: {e}", row.vector);
                return EXIT_VECTOR;
            }
        };
        let report = match ideal_report(&vector, &width) {
            Ok(report) => report,
            Err(e) => {
                eprintln!("error: reference vector {:?}: {e}", row.vector);
                return EXIT_INPUT;
            }
        };
        let expected_den = IntPolynomial::from_i64(&row.denominator);
        let computed_rate = report
            .tau
            .as_ref()
            .map(|t| t.decimal(5))
            .unwrap_or_else(|| "none".to_string());
        let pass = report.growth.denominator() == &expected_den && computed_rate == row.rate;
        all_pass &= pass;
        row_docs.push(TableRowDoc {
            name: row.name.clone(),
            vector: row.vector,
            expected_denominator: row.denominator.clone(),
            computed_denominator: coeff_strings(report.growth.denominator()),
            expected_rate: row.rate.clone(),
            computed_rate,
            pass,
        });
        reports.push(report);
    }
    let minimum = match minimum_check(&reports) {
        Ok(verdict) => {
            if !verdict.unique || !verdict.distinct_denominators {
                all_pass = false;
            }
            let (n, p, q, r, s) = verdict.minimizer.as_tuple();
            Some(MinimumDoc {
                vector: [n as i64, p as i64, q as i64, r as i64, s as i64],
                rate: verdict.min_tau.decimal(5),
                unique: verdict.unique,
                distinct_denominators: verdict.distinct_denominators,
            })
        }
        Err(_) => None,
    };
    match format {
        Format::Json => {
            let doc = TableDoc {
                rows: row_docs,
                minimum,
                all_pass,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("table serializes")
            );
        }
        Format::Text => {
            for (row, report) in row_docs.iter().zip(&reports) {
                let den = report.growth.denominator();
                let factored = match coxeter_growth::div_exact(den, &IntPolynomial::from_i64(&[-1, 1]))
                {
                    Ok(h) => format!("(t - 1)({h})"),
                    Err(_) => den.to_string(),
                };
                println!(
                    "{:<18} {:?}  denominator {}  rate {}  {}",
                    row.name.as_deref().unwrap_or("(unnamed)"),
                    row.vector,
                    factored,
                    row.computed_rate,
                    if row.pass { "PASS" } else { "FAIL" }
                );
                if !row.pass {
                    println!(
                        "    expected denominator {:?}, rate {}",
                        row.expected_denominator, row.expected_rate
                    );
                }
            }
            match &minimum {
                Some(m) => println!(
                    "minimum: vector {:?} with rate {} (unique: {}, distinct denominators: {})",
                    m.vector, m.rate, m.unique, m.distinct_denominators
                ),
                None => println!("minimum: not checked (rows do not cover the six reference polytopes)"),
            }
            println!("{}", if all_pass { "all rows PASS" } else { "MISMATCH" });
        }
    }
    if all_pass {
        0
    } else {
        EXIT_MISMATCH
    }
}

#[derive(Serialize)]
struct FamilyRowDoc {
    m: u64,
    n: u64,
    rate: String,
    denominator: Vec<String>,
    bounds_proved: bool,
    matches_closed_form: bool,
}

fn cmd_family(from: u64, to: u64, digits: u32, format: FamilyFormat) -> u8 {
    const FAMILY_LIMIT: u64 = 10_000;
    if from < 1 || from > to || to > FAMILY_LIMIT {
        eprintln!(
            "error: family range must satisfy 1 <= from <= to <= {FAMILY_LIMIT} (got {from}..{to})"
        );
        return EXIT_GUARD;
    }
    let width = default_width();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for m in from..=to {
        let spec = coxeter_growth::FamilySpec::new(m).expect("m >= 1");
        let (vector, expected) = coxeter_growth::pyramid_family(spec);
        let report = match ideal_report(&vector, &width) {
            Ok(report) => report,
            Err(e) => {
                eprintln!("error: family member m = {m}: {e}");
                return EXIT_INPUT;
            }
        };
        let matches_closed_form = report.growth.denominator() == &expected;
        let bounds_proved = report.bounds.proved();
        all_ok &= matches_closed_form && bounds_proved;
        rows.push(FamilyRowDoc {
            m,
            n: vector.n(),
            rate: report
                .tau
                .as_ref()
                .map(|t| t.decimal(digits))
                .unwrap_or_else(|| "none".to_string()),
            denominator: coeff_strings(report.growth.denominator()),
            bounds_proved,
            matches_closed_form,
        });
    }
    match format {
        FamilyFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("family rows serialize")
            );
        }
        FamilyFormat::Csv => {
            println!("m,n,rate,denominator,bounds_proved,matches_closed_form");
            for row in &rows {
                println!(
                    "{},{},{},{},{},{}",
                    row.m,
                    row.n,
                    row.rate,
                    row.denominator.join(" "),
                    row.bounds_proved,
                    row.matches_closed_form
                );
            }
        }
        FamilyFormat::Text => {
            for row in &rows {
                println!(
                    "m = {:<5} n = {:<5} rate {:<12} denominator {:?}  {}",
                    row.m,
                    row.n,
                    row.rate,
                    row.denominator,
                    if row.matches_closed_form && row.bounds_proved {
                        "PASS"
                    } else {
                        "FAIL"
                    }
                );
            }
            println!(
                "{}",
                if all_ok {
                    "all family members PASS"
                } else {
                    "MISMATCH"
                }
            );
        }
    }
    if all_ok {
        0
    } else {
        EXIT_MISMATCH
    }
}
