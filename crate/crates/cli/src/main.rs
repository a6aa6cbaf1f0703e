//! `gessel`: generate two-sided Eulerian polynomial families, compute
//! gamma tables, run the verification suites and export coefficient
//! triangles.
//!
//! Exit codes: 0 success (and no theorem-class verification failure),
//! 1 usage error, 2 theorem-class verification failure, 3 internal error
//! (a violated divisibility or rank assertion).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;

use gessel_core::exactpoly::Polynomial;
use gessel_core::gammalab::{self, BasisSpec, GammaError, GammaRow, GammaRowUni};
use gessel_core::genpoly::{self, FamilyKind, GenError, Method, PolyFamily, Tau};
use gessel_core::permstat::{Permutation, SignedPermutation};
use gessel_core::verify::{self, SuiteOptions, SuiteSelector};

/// Hard cap for brute-force enumeration over S_n and I_n.
const BRUTE_CAP_SN: u32 = 11;
/// Hard cap for brute-force enumeration over the hyperoctahedral group.
const BRUTE_CAP_BN: u32 = 8;
/// Hard cap for recurrence-generated families (coefficient growth only).
const REC_CAP: u32 = 40;
/// Hard cap for gamma tables from the solver (`--method expand`).
const GAMMA_EXPAND_CAP: u32 = 16;
/// Hard cap for verification sizes.
const VERIFY_CAP: u32 = 12;

#[derive(Parser)]
#[command(
    name = "gessel",
    version,
    about = "Exact two-sided Eulerian polynomials, gamma expansions and identity verification"
)]
struct Cli {
    /// Worker threads for enumeration-backed operations.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one polynomial family member.
    ///
    /// Families: eulerian, eulerian-homog, two-sided, two-sided-homog,
    /// two-sided-tau, type-B, type-B-tau, reversal-homog, cyclic, invseq.
    Gen {
        /// Family name.
        family: String,
        /// Size parameter.
        #[arg(long)]
        n: u32,
        /// brute (enumeration) or rec (recurrence). Defaults to rec when
        /// the family has one, brute otherwise.
        #[arg(long)]
        method: Option<String>,
        /// Tau parameter for the tau families: digits for n <= 9
        /// ("3142"), comma-separated beyond; signed entries always
        /// comma-separated ("-2,1").
        #[arg(long)]
        tau: Option<String>,
    },
    /// Compute the gamma coefficient triangle for n = 1..=n-max.
    Gamma {
        #[arg(long = "n-max")]
        n_max: u32,
        /// rec (coefficient recurrence) or expand (exact basis solve).
        #[arg(long, default_value = "rec")]
        method: String,
        /// bivariate (gamma(n,i,j)) or univariate (gamma(n,i)).
        #[arg(long, default_value = "bivariate")]
        flavor: String,
    },
    /// Run verification checks.
    Verify {
        /// A single check name (e.g. check_invseq). Overrides --suite.
        check: Option<String>,
        /// all, theorems or conjectures.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap on the size range of every selected check.
        #[arg(long = "max-n")]
        max_n: Option<u32>,
    },
    /// Export coefficient tables.
    Export {
        /// eulerian-triangle, two-sided-triangle, typeb-triangle or
        /// gamma-typeb.
        #[arg(long)]
        what: String,
        #[arg(long = "n-max")]
        n_max: u32,
    },
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Internal(format!("i/o error: {err}"))
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let outcome = std::panic::catch_unwind(|| run(&cli));
    let code = match outcome {
        Ok(Ok(code)) => code,
        Ok(Err(CliError::Usage(message))) => {
            eprintln!("error: {message}");
            1
        }
        Ok(Err(CliError::Internal(message))) => {
            eprintln!("internal error: {message}");
            3
        }
        Err(_) => {
            eprintln!("internal error: assertion failure");
            3
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Gen {
            family,
            n,
            method,
            tau,
        } => cmd_gen(cli, family, *n, method.as_deref(), tau.as_deref()),
        Command::Gamma {
            n_max,
            method,
            flavor,
        } => cmd_gamma(cli, *n_max, method, flavor),
        Command::Verify {
            check,
            suite,
            max_n,
        } => cmd_verify(cli, check.as_deref(), suite, *max_n),
        Command::Export { what, n_max } => cmd_export(cli, what, *n_max),
    }
}

fn emit(cli: &Cli, content: &str) -> Result<(), CliError> {
    let mut content = content.to_string();
    if !content.ends_with('\n') {
        content.push('\n');
    }
    match &cli.out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

/// The EULERIAN_MAX_N environment variable may lower (never raise) any
/// hard cap.
fn env_cap() -> Option<u32> {
    let raw = std::env::var("EULERIAN_MAX_N").ok()?;
    raw.trim().parse().ok()
}

fn effective_cap(hard: u32) -> u32 {
    match env_cap() {
        Some(env) => hard.min(env),
        None => hard,
    }
}

fn check_cap(n: u32, min: u32, hard: u32, what: &str) -> Result<(), CliError> {
    let cap = effective_cap(hard);
    if n < min || n > cap {
        let mut message = format!("{what} requires n in {min}..={cap}, got {n}");
        if cap < hard {
            message.push_str(&format!(" (EULERIAN_MAX_N lowers the hard cap {hard})"));
        }
        return Err(CliError::Usage(message));
    }
    Ok(())
}

fn map_gen_error(err: GenError) -> CliError {
    match err {
        GenError::Internal(message) => CliError::Internal(message),
        other => CliError::Usage(other.to_string()),
    }
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

fn cmd_gen(
    cli: &Cli,
    family_name: &str,
    n: u32,
    method: Option<&str>,
    tau_text: Option<&str>,
) -> Result<i32, CliError> {
    let kind = FamilyKind::from_str(family_name).map_err(CliError::Usage)?;
    let method = match method {
        Some(text) => Method::from_str(text).map_err(CliError::Usage)?,
        None if kind.has_rec() => Method::Rec,
        None => Method::Brute,
    };

    match method {
        Method::Brute => {
            let cap = if matches!(kind, FamilyKind::TypeB | FamilyKind::TypeBTau) {
                BRUTE_CAP_BN
            } else {
                BRUTE_CAP_SN
            };
            check_cap(
                n,
                kind.min_n(),
                cap,
                &format!("family {kind} with --method brute"),
            )?;
        }
        Method::Rec => {
            if !kind.has_rec() {
                return Err(CliError::Usage(format!(
                    "family {kind} has no recurrence; use --method brute (n <= {})",
                    effective_cap(BRUTE_CAP_SN)
                )));
            }
            check_cap(
                n,
                kind.min_n(),
                REC_CAP,
                &format!("family {kind} with --method rec"),
            )?;
        }
    }

    let tau = match (kind.takes_tau(), tau_text) {
        (false, None) => None,
        (false, Some(_)) => {
            return Err(CliError::Usage(format!(
                "family {kind} does not take --tau"
            )))
        }
        (true, None) => {
            return Err(CliError::Usage(format!(
                "family {kind} requires --tau (size {n})"
            )))
        }
        (true, Some(text)) => Some(if matches!(kind, FamilyKind::TypeBTau) {
            Tau::Signed(
                SignedPermutation::from_str(text).map_err(|e| CliError::Usage(e.to_string()))?,
            )
        } else {
            Tau::Unsigned(Permutation::from_str(text).map_err(|e| CliError::Usage(e.to_string()))?)
        }),
    };

    let family = PolyFamily::new(kind, n, tau).map_err(map_gen_error)?;
    let poly = genpoly::generate(&family, method, cli.workers.max(1)).map_err(map_gen_error)?;

    let rendered = match cli.format {
        Format::Json => poly.to_json_string(),
        Format::Csv => poly.to_csv_string(),
        Format::Pretty => pretty_family(&family, &poly),
    };
    emit(cli, &rendered)?;
    Ok(0)
}

/// Renders in the factored gamma-basis style when an expansion exists,
/// expanded monomials otherwise.
fn pretty_family(family: &PolyFamily, poly: &Polynomial) -> String {
    let n = family.n;
    let attempt: Option<String> = match family.kind {
        FamilyKind::Eulerian => pretty_univariate_t(poly, n),
        FamilyKind::EulerianHomog => gammalab::expand_gamma_univariate(poly, n)
            .ok()
            .map(|entries| render_uni_basis(&entries, n + 1, "(ty)", "(t+y)")),
        FamilyKind::TwoSided | FamilyKind::TwoSidedTau | FamilyKind::InvSeq => {
            gammalab::expand_gamma(poly, &BasisSpec::type_a_bivariate(n))
                .ok()
                .map(|e| render_pair_basis(&e, n + 1, "(st)", "(s+t)", "(1+st)"))
        }
        FamilyKind::Cyclic => gammalab::expand_gamma(
            poly,
            &BasisSpec {
                flavor: gammalab::BasisFlavor::Bivariate,
                m: n,
                i_min: 1,
            },
        )
        .ok()
        .map(|e| render_pair_basis(&e, n, "(st)", "(s+t)", "(1+st)")),
        FamilyKind::TypeB | FamilyKind::TypeBTau => {
            gammalab::expand_gamma(poly, &BasisSpec::type_b_experimental(n))
                .ok()
                .map(|e| render_pair_basis(&e, n, "(st)", "(s+t)", "(1+st)"))
        }
        FamilyKind::TwoSidedHomog | FamilyKind::ReversalHomog => {
            gammalab::expand_gamma(poly, &BasisSpec::type_a_four_variable(n))
                .ok()
                .map(|e| render_pair_basis(&e, n + 1, "(stxy)", "(st+xy)", "(tx+sy)"))
        }
    };
    attempt.unwrap_or_else(|| poly.to_string())
}

fn pretty_univariate_t(poly: &Polynomial, n: u32) -> Option<String> {
    // Lift A(t) into (t, y), homogenize at degree n + 1, expand, and render
    // the dehomogenized basis t^i (1+t)^(n+1-2i).
    let vars = gessel_core::exactpoly::VarSet::ty();
    let lifted =
        Polynomial::from_terms(vars, poly.terms().map(|(e, c)| (vec![e[0], 0], c.clone()))).ok()?;
    let homog = lifted.homogenize(&[("t", "y")], n + 1).ok()?;
    let entries = gammalab::expand_gamma_univariate(&homog, n).ok()?;
    Some(render_uni_basis(&entries, n + 1, "t", "(1+t)"))
}

fn push_signed_term(out: &mut String, coeff: &BigInt, body: &str) {
    let mag = coeff.abs().to_string();
    if out.is_empty() {
        if coeff.is_negative() {
            out.push('-');
        }
    } else if coeff.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if body.is_empty() {
        out.push_str(&mag);
        return;
    }
    if mag != "1" {
        out.push_str(&mag);
        out.push('*');
    }
    out.push_str(body);
}

fn factor(name: &str, exp: u32) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    }
}

fn render_uni_basis(entries: &BTreeMap<u32, BigInt>, m: u32, base: &str, mid: &str) -> String {
    if entries.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (&i, coeff) in entries {
        let body: Vec<String> = [factor(base, i), factor(mid, m - 2 * i)]
            .into_iter()
            .flatten()
            .collect();
        push_signed_term(&mut out, coeff, &body.join("*"));
    }
    out
}

fn render_pair_basis(
    entries: &BTreeMap<(u32, u32), BigInt>,
    m: u32,
    base: &str,
    mid: &str,
    top: &str,
) -> String {
    if entries.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (&(i, j), coeff) in entries {
        let body: Vec<String> = [factor(base, i), factor(mid, j), factor(top, m - 2 * i - j)]
            .into_iter()
            .flatten()
            .collect();
        push_signed_term(&mut out, coeff, &body.join("*"));
    }
    out
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

fn map_gamma_error(err: GammaError) -> CliError {
    // Expansion failures for the type A families violate the tool's own
    // assertions (the expansion provably exists at these sizes).
    CliError::Internal(err.to_string())
}

fn cmd_gamma(cli: &Cli, n_max: u32, method: &str, flavor: &str) -> Result<i32, CliError> {
    let cap = match method {
        "rec" => REC_CAP,
        "expand" => GAMMA_EXPAND_CAP,
        other => {
            return Err(CliError::Usage(format!(
                "unknown method `{other}` (expected rec or expand)"
            )))
        }
    };
    check_cap(n_max, 1, cap, &format!("gamma --method {method}"))?;

    match flavor {
        "bivariate" => {
            let rows: Vec<GammaRow> = match method {
                "rec" => gammalab::gamma_bivariate_rec(n_max).map_err(map_gamma_error)?,
                _ => (1..=n_max)
                    .map(|n| -> Result<GammaRow, CliError> {
                        let poly = genpoly::rec_four_variable(n).map_err(map_gen_error)?;
                        let entries =
                            gammalab::expand_gamma(&poly, &BasisSpec::type_a_four_variable(n))
                                .map_err(|e| CliError::Internal(format!("row n={n}: {e}")))?;
                        Ok(GammaRow { n, entries })
                    })
                    .collect::<Result<_, _>>()?,
            };
            let rendered = match cli.format {
                Format::Csv => gammalab::gamma_rows_to_csv(&rows),
                Format::Json => gammalab::gamma_rows_to_json(&rows),
                Format::Pretty => rows
                    .iter()
                    .map(|row| {
                        let parts: Vec<String> = row
                            .entries
                            .iter()
                            .map(|(&(i, j), v)| format!("({i},{j}):{v}"))
                            .collect();
                        format!("n={}: {}", row.n, parts.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(cli, &rendered)?;
        }
        "univariate" => {
            let rows: Vec<GammaRowUni> = match method {
                "rec" => gammalab::gamma_univariate_rec(n_max),
                _ => (1..=n_max)
                    .map(|n| -> Result<GammaRowUni, CliError> {
                        let poly = genpoly::rec_eulerian_homog(n).map_err(map_gen_error)?;
                        let entries = gammalab::expand_gamma_univariate(&poly, n)
                            .map_err(|e| CliError::Internal(format!("row n={n}: {e}")))?;
                        Ok(GammaRowUni { n, entries })
                    })
                    .collect::<Result<_, _>>()?,
            };
            let rendered = match cli.format {
                Format::Csv => gammalab::gamma_rows_uni_to_csv(&rows),
                Format::Json => gammalab::gamma_rows_uni_to_json(&rows),
                Format::Pretty => rows
                    .iter()
                    .map(|row| {
                        let parts: Vec<String> = row
                            .entries
                            .iter()
                            .map(|(&i, v)| format!("({i}):{v}"))
                            .collect();
                        format!("n={}: {}", row.n, parts.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(cli, &rendered)?;
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown flavor `{other}` (expected bivariate or univariate)"
            )))
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    cli: &Cli,
    check: Option<&str>,
    suite: &str,
    max_n: Option<u32>,
) -> Result<i32, CliError> {
    if let Some(m) = max_n {
        let cap = effective_cap(VERIFY_CAP);
        if m > cap {
            return Err(CliError::Usage(format!(
                "--max-n must be at most {cap} (valid range 1..={cap})"
            )));
        }
    }
    let selector = match check {
        Some(name) => SuiteSelector::Single(name.to_string()),
        None => match suite {
            "all" => SuiteSelector::All,
            "theorems" => SuiteSelector::Theorems,
            "conjectures" => SuiteSelector::Conjectures,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown suite `{other}` (expected all, theorems or conjectures, \
                     or name a single check: {})",
                    verify::check_names().join(", ")
                )))
            }
        },
    };
    let opts = SuiteOptions {
        max_n,
        workers: cli.workers.max(1),
    };
    let reports = verify::run_suite(&selector, &opts).map_err(CliError::Usage)?;

    let rendered = match cli.format {
        Format::Json => verify::reports_to_json(&reports),
        Format::Pretty => reports
            .iter()
            .map(|r| r.to_pretty_line())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut out = String::from("check,class,params,outcome,witness,ms\n");
            for r in &reports {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.check,
                    r.class.as_str(),
                    csv_quote(&params.join(";")),
                    r.outcome,
                    csv_quote(r.witness.as_deref().unwrap_or("")),
                    r.elapsed.as_millis()
                ));
            }
            out
        }
    };
    emit(cli, &rendered)?;
    Ok(if verify::any_theorem_failure(&reports) {
        2
    } else {
        0
    })
}

fn csv_quote(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

fn cmd_export(cli: &Cli, what: &str, n_max: u32) -> Result<i32, CliError> {
    match what {
        "eulerian-triangle" => {
            check_cap(n_max, 1, REC_CAP, "export eulerian-triangle")?;
            let mut rows: Vec<(u32, u32, BigInt)> = Vec::new();
            for n in 1..=n_max {
                let poly = genpoly::rec_eulerian(n).map_err(map_gen_error)?;
                for (e, c) in poly.terms() {
                    rows.push((n, e[0], c.clone()));
                }
            }
            emit_triangle(cli, "n,k,count", &["n", "k", "count"], rows)
        }
        "two-sided-triangle" => {
            check_cap(n_max, 1, REC_CAP, "export two-sided-triangle")?;
            let mut rows: Vec<(u32, (u32, u32), BigInt)> = Vec::new();
            for n in 1..=n_max {
                let poly = genpoly::rec_two_sided(n).map_err(map_gen_error)?;
                for (e, c) in poly.terms() {
                    rows.push((n, (e[0], e[1]), c.clone()));
                }
            }
            emit_pair_triangle(cli, "count", rows)
        }
        "typeb-triangle" => {
            check_cap(n_max, 1, REC_CAP, "export typeb-triangle")?;
            let mut rows: Vec<(u32, (u32, u32), BigInt)> = Vec::new();
            for n in 1..=n_max {
                let poly = genpoly::rec_type_b(n).map_err(map_gen_error)?;
                for (e, c) in poly.terms() {
                    rows.push((n, (e[0], e[1]), c.clone()));
                }
            }
            emit_pair_triangle(cli, "count", rows)
        }
        "gamma-typeb" => {
            check_cap(n_max, 1, GAMMA_EXPAND_CAP, "export gamma-typeb")?;
            export_gamma_typeb(cli, n_max)
        }
        other => Err(CliError::Usage(format!(
            "unknown table `{other}` (expected eulerian-triangle, two-sided-triangle, \
             typeb-triangle or gamma-typeb)"
        ))),
    }
}

fn emit_triangle(
    cli: &Cli,
    csv_header: &str,
    json_keys: &[&str; 3],
    rows: Vec<(u32, u32, BigInt)>,
) -> Result<i32, CliError> {
    let rendered = match cli.format {
        Format::Csv | Format::Pretty => {
            let mut out = String::from(csv_header);
            out.push('\n');
            for (n, k, c) in &rows {
                out.push_str(&format!("{n},{k},{c}\n"));
            }
            out
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|(n, k, c)| {
                    format!(
                        "{{\"{}\":{},\"{}\":{},\"{}\":\"{}\"}}",
                        json_keys[0], n, json_keys[1], k, json_keys[2], c
                    )
                })
                .collect();
            format!("[{}]", items.join(","))
        }
    };
    emit(cli, &rendered)?;
    Ok(0)
}

fn emit_pair_triangle(
    cli: &Cli,
    value_name: &str,
    rows: Vec<(u32, (u32, u32), BigInt)>,
) -> Result<i32, CliError> {
    let rendered = match cli.format {
        Format::Csv | Format::Pretty => {
            let mut out = format!("n,i,j,{value_name}\n");
            for (n, (i, j), c) in &rows {
                out.push_str(&format!("{n},{i},{j},{c}\n"));
            }
            out
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|(n, (i, j), c)| {
                    format!("{{\"n\":{n},\"i\":{i},\"j\":{j},\"{value_name}\":\"{c}\"}}")
                })
                .collect();
            format!("[{}]", items.join(","))
        }
    };
    emit(cli, &rendered)?;
    Ok(0)
}

fn export_gamma_typeb(cli: &Cli, n_max: u32) -> Result<i32, CliError> {
    enum RowStatus {
        Ok(BTreeMap<(u32, u32), BigInt>),
        NotInSpan,
    }
    let mut table: Vec<(u32, RowStatus)> = Vec::new();
    for n in 1..=n_max {
        match gammalab::expand_gamma_typeb(n) {
            Ok(entries) => table.push((n, RowStatus::Ok(entries))),
            Err(GammaError::NotInSpan | GammaError::NonIntegerCoefficient { .. }) => {
                table.push((n, RowStatus::NotInSpan))
            }
            Err(e) => return Err(CliError::Internal(format!("row n={n}: {e}"))),
        }
    }
    let rendered = match cli.format {
        Format::Csv | Format::Pretty => {
            let mut out = String::from("n,i,j,gamma\n");
            for (n, status) in &table {
                match status {
                    RowStatus::Ok(entries) => {
                        for (&(i, j), v) in entries {
                            out.push_str(&format!("{n},{i},{j},{v}\n"));
                        }
                    }
                    RowStatus::NotInSpan => out.push_str(&format!("{n},,,NOT_IN_SPAN\n")),
                }
            }
            out
        }
        Format::Json => {
            let items: Vec<String> = table
                .iter()
                .map(|(n, status)| match status {
                    RowStatus::Ok(entries) => {
                        let inner: Vec<String> = entries
                            .iter()
                            .map(|(&(i, j), v)| {
                                format!("{{\"i\":{i},\"j\":{j},\"gamma\":\"{v}\"}}")
                            })
                            .collect();
                        format!(
                            "{{\"n\":{n},\"status\":\"ok\",\"entries\":[{}]}}",
                            inner.join(",")
                        )
                    }
                    RowStatus::NotInSpan => {
                        format!("{{\"n\":{n},\"status\":\"not-in-span\",\"entries\":null}}")
                    }
                })
                .collect();
            format!("[{}]", items.join(","))
        }
    };
    emit(cli, &rendered)?;
    Ok(0)
}
