//! Command-line front end. Exit codes: 0 on success, 1 when `verify` finds a
//! counterexample, 2 for malformed input.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::expand::{
    horizontal_strips, mn_derivative, mn_multiply, pieri_e_coeff, pieri_e_expansion, pieri_h_coeff,
    pieri_h_expansion, raising_expansion, skew_pieri_coeff, vertical_strips, PieriKind,
    PieriMethod,
};
use crate::partition::{Partition, SkewShape};
use crate::polyring::Poly;
use crate::symfunc::{double_e, double_h, schur_double, schur_double_jt, Basis, SuperContext};
use crate::verify::{run_suite, SuiteReport, VerifyConfig, SUITES};

#[derive(Parser)]
#[command(
    name = "doubleschur",
    version,
    about = "Double Schur functions, Pieri rules and deformed currents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// h_k(x/y‖σ^s α); classical expansion in h_m(x/y) unless --vars is given.
    ExpandH(ExpandArgs),
    /// e_k(x/y‖σ^s α); classical expansion in h_m(x/y) unless --vars is given.
    ExpandE(ExpandArgs),
    /// Double Schur function s_{λ/μ}(x/y‖α).
    Schur(SchurArgs),
    /// p_k s_λ (multiply) or k ∂s_λ/∂p_k (derivative) in double Schur functions.
    Mn(MnArgs),
    /// Pieri coefficient, or the whole expansion of h_k s_μ / e_k s_μ.
    Pieri(PieriArgs),
    /// Skew-Pieri coefficients of h_k s_{μ/ν} or e_k s_{μ/ν}.
    SkewPieri(SkewPieriArgs),
    /// Raising-operator expansion of s_λ in products of h_{k,s}.
    Raising(RaisingArgs),
    /// Run identity suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Multiply,
    Derivative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    H,
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Residue,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i64,
    /// Number of x and y variables; omit for the classical expansion.
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SchurArgs {
    /// λ or λ/μ, parts comma-separated.
    #[arg(long)]
    shape: SkewShape,
    #[arg(long)]
    vars: Option<usize>,
    /// Size of the Jacobi–Trudi matrix; uses the h form when given.
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MnArgs {
    #[arg(long)]
    partition: Partition,
    #[arg(long)]
    k: i64,
    #[arg(long, value_enum, default_value_t = Direction::Multiply)]
    direction: Direction,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PieriArgs {
    /// μ.
    #[arg(long)]
    inner: Partition,
    /// λ; omit for the full expansion.
    #[arg(long)]
    partition: Option<Partition>,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long, value_enum, default_value_t = Kind::H)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SkewPieriArgs {
    /// μ/ν.
    #[arg(long)]
    inner: SkewShape,
    /// λ/η; omit to list every nonzero coefficient.
    #[arg(long)]
    shape: Option<SkewShape>,
    #[arg(long)]
    k: i64,
    #[arg(long, value_enum, default_value_t = Kind::H)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Method::Residue)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RaisingArgs {
    #[arg(long)]
    partition: Partition,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 5)]
    max_size: u32,
    #[arg(long, default_value_t = 10)]
    order: i64,
    #[arg(long, default_value_t = 8)]
    window: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure {
        code: 2,
        message: format!("error: {e}"),
    }
}

/// Parses `args` (including the program name) and writes results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "{}", f.message);
            }
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure {
        code: 2,
        message: format!("error: {e}"),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn context(vars: Option<usize>) -> SuperContext {
    vars.map_or(SuperContext::Free, SuperContext::Vars)
}

fn show_poly(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => p.latex(),
        Format::Json => to_json(p),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::ExpandH(a) => {
            let p = double_h(a.k as i64, context(a.vars), a.shift);
            emit(out, &show_poly(&p, a.format))
        }
        Command::ExpandE(a) => {
            let p = double_e(a.k as i64, context(a.vars), a.shift);
            emit(out, &show_poly(&p, a.format))
        }
        Command::Schur(a) => schur(a, out),
        Command::Mn(a) => {
            let e = match a.direction {
                Direction::Multiply => mn_multiply(&a.partition, a.k),
                Direction::Derivative => mn_derivative(&a.partition, a.k),
            }
            .map_err(usage)?;
            let text = match a.format {
                Format::Text => e.to_string(),
                Format::Latex => e.latex(),
                Format::Json => to_json(&e),
            };
            emit(out, &text)
        }
        Command::Pieri(a) => pieri(a, out),
        Command::SkewPieri(a) => skew_pieri(a, out),
        Command::Raising(a) => {
            let words = raising_expansion(&a.partition).map_err(usage)?;
            let text = match a.format {
                Format::Json => to_json(&json!({ "words": words })),
                f => {
                    let body: Vec<String> = words
                        .iter()
                        .map(|w| match f {
                            Format::Latex => w.latex(),
                            _ => w.to_string(),
                        })
                        .collect();
                    if body.is_empty() {
                        "0".to_string()
                    } else {
                        body.join(" + ").replace("+ -", "- ")
                    }
                }
            };
            emit(out, &text)
        }
        Command::Verify(a) => verify(a, out),
    }
}

fn schur(a: SchurArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let ctx = context(a.vars);
    let p = match a.ell {
        Some(ell) => schur_double_jt(&a.shape, ctx, Basis::H, ell).map_err(usage)?,
        None => schur_double(&a.shape, ctx),
    };
    let text = match a.format {
        Format::Json => to_json(&p),
        f => {
            let latex = matches!(f, Format::Latex);
            let (factors, _) = p.linear_factors();
            if factors.is_empty() {
                show_poly(&p, f)
            } else {
                p.factored(latex)
            }
        }
    };
    emit(out, &text)
}

fn pieri(a: PieriArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let method = match a.method {
        Method::Closed => PieriMethod::Closed,
        Method::Residue => PieriMethod::Residue,
    };
    if let Some(lambda) = &a.partition {
        let c = match a.kind {
            Kind::H => pieri_h_coeff(&a.inner, lambda, a.k, a.ell, method),
            Kind::E => pieri_e_coeff(&a.inner, lambda, a.k, a.ell, method),
        }
        .map_err(usage)?;
        return emit(out, &show_poly(&c, a.format));
    }
    let e = match a.kind {
        Kind::H => pieri_h_expansion(&a.inner, a.k),
        Kind::E => pieri_e_expansion(&a.inner, a.k),
    }
    .map_err(usage)?;
    let text = match a.format {
        Format::Text => e.to_string(),
        Format::Latex => e.latex(),
        Format::Json => to_json(&e),
    };
    emit(out, &text)
}

fn skew_pieri(a: SkewPieriArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (kind, method) = (
        match a.kind {
            Kind::H => PieriKind::H,
            Kind::E => PieriKind::E,
        },
        match a.method {
            Method::Closed => PieriMethod::Closed,
            Method::Residue => PieriMethod::Residue,
        },
    );
    let targets: Vec<SkewShape> = match &a.shape {
        Some(s) => vec![s.clone()],
        None => {
            let (mu, nu) = (a.inner.outer(), a.inner.inner());
            let k = a.k.max(0) as u32;
            let outers = match kind {
                PieriKind::H => horizontal_strips(mu, k),
                PieriKind::E => vertical_strips(mu, k),
            };
            let mut all = Vec::new();
            for lam in outers {
                for eta in nu.subpartitions() {
                    all.push(SkewShape::new(lam.clone(), eta).expect("η ⊆ ν ⊆ λ"));
                }
            }
            all
        }
    };
    let mut terms = Vec::new();
    for t in targets {
        let c = skew_pieri_coeff(&t, &a.inner, a.k, kind, method).map_err(usage)?;
        if !c.is_zero() || a.shape.is_some() {
            terms.push((t, c));
        }
    }
    let text = match a.format {
        Format::Json => to_json(&json!({
            "terms": terms
                .iter()
                .map(|(s, c)| json!({ "shape": s.to_string(), "coeff": c }))
                .collect::<Vec<_>>()
        })),
        f => {
            let lines: Vec<String> = terms
                .iter()
                .map(|(s, c)| format!("{s}: {}", show_poly(c, f)))
                .collect();
            if a.shape.is_some() {
                terms
                    .first()
                    .map(|(_, c)| show_poly(c, f))
                    .unwrap_or_default()
            } else {
                lines.join("\n")
            }
        }
    };
    emit(out, &text)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        max_size: a.max_size,
        order: a.order,
        window: a.window,
        seed: a.seed,
    };
    let names: Vec<&str> = if a.suite == "all" {
        SUITES.iter().map(|(n, _)| *n).collect()
    } else if SUITES.iter().any(|(n, _)| *n == a.suite) {
        vec![a.suite.as_str()]
    } else {
        let known: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        return Err(usage(format!(
            "unknown suite '{}'; expected one of: all, {}",
            a.suite,
            known.join(", ")
        )));
    };
    let mut reports = Vec::new();
    for name in names {
        let r = run_suite(name, &cfg).expect("known suite");
        if !matches!(a.format, Format::Json) {
            emit(out, &report_text(&r))?;
        }
        reports.push(r);
    }
    if matches!(a.format, Format::Json) {
        emit(out, &to_json(&reports))?;
    }
    match verify_exit_code(&reports) {
        0 => Ok(()),
        code => Err(Failure {
            code,
            message: String::new(),
        }),
    }
}

/// `0` when every suite passed, `1` otherwise.
pub fn verify_exit_code(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

fn report_text(r: &SuiteReport) -> String {
    match &r.counterexample {
        None => format!("PASS {} ({} cases)", r.suite, r.cases),
        Some(c) => format!(
            "FAIL {} ({} cases)\n  case: {}\n  lhs:  {}\n  rhs:  {}",
            r.suite, r.cases, c.case, c.lhs, c.rhs
        ),
    }
}
