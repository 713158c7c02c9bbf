mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zetahyp_core::combinat::{bernoulli_number, bernoulli_poly, stirling1, stirling2};
use zetahyp_core::zetadiff::{
    build_matrix_a, build_matrix_b, build_matrix_frak_a, build_matrix_frak_b, default_samples,
    verify_polynomial_forms, DEFAULT_M_CAP,
};
use zetahyp_core::{
    coeff_matrix, eta_cross_check, scan_sign_pattern, verify_combination, LowerTriMatrix,
    Rational, Route,
};

#[derive(Parser)]
#[command(name = "zetahyp", version, about = "Exact coefficients linking Hurwitz zeta differences to hypergeometric polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest accepted value for --m and --max.
    #[arg(long, default_value_t = DEFAULT_M_CAP, global = true)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    First,
    Second,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient matrix a_{i,j} for 0 <= j <= i <= m.
    Coeffs {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = Route::Monomial)]
        route: Route,
        /// Compute every route and fail unless they agree.
        #[arg(long)]
        check_all_routes: bool,
    },
    /// Check F(i,x) = sum_j a_{i,j} G(j,x) at sample points, and the polynomial forms.
    Verify {
        #[arg(long)]
        m: usize,
        /// Comma-separated rationals, e.g. 0,1/2,7/3.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        samples: Option<Vec<Rational>>,
    },
    /// eta(-m) for 0 <= m <= max by three independent routes.
    Eta {
        #[arg(long)]
        max: usize,
    },
    /// Scan the sign pattern of the coefficient matrix.
    Conjecture {
        #[arg(long)]
        max: usize,
    },
    /// Bernoulli number B_n, or the polynomial B_n(z) when --z is given.
    Bernoulli {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<Rational>,
    },
    /// Stirling number of the first (signed) or second kind.
    Stirling {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Expansion matrices, their inverses and the coefficient product.
    Matrices {
        #[arg(long)]
        m: usize,
        /// Also write each matrix as CSV into this directory.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// A failed mathematical check: reported on stderr, exit status 1.
struct CheckFailed(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    check_cap(&cli);
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CheckFailed(msg))) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn check_cap(cli: &Cli) {
    let (flag, value) = match &cli.command {
        Command::Coeffs { m, .. } | Command::Verify { m, .. } | Command::Matrices { m, .. } => {
            ("--m", *m)
        }
        Command::Eta { max } | Command::Conjecture { max } => ("--max", *max),
        Command::Bernoulli { .. } | Command::Stirling { .. } => return,
    };
    if value > cli.cap {
        Cli::command()
            .error(
                ErrorKind::ValueValidation,
                format!("{flag} {value} exceeds the cap of {} (raise it with --cap)", cli.cap),
            )
            .exit();
    }
}

type Run = Result<Result<(), CheckFailed>>;

fn run(cli: &Cli) -> Run {
    let mut text = String::new();
    let status = match &cli.command {
        Command::Coeffs { m, route, check_all_routes } => {
            cmd_coeffs(cli.format, *m, *route, *check_all_routes, &mut text)?
        }
        Command::Verify { m, samples } => {
            let samples = samples.clone().unwrap_or_else(default_samples);
            cmd_verify(cli.format, *m, &samples, &mut text)?
        }
        Command::Eta { max } => cmd_eta(cli.format, *max, &mut text)?,
        Command::Conjecture { max } => cmd_conjecture(cli.format, *max, &mut text)?,
        Command::Bernoulli { n, z } => cmd_bernoulli(cli.format, *n, z.as_ref(), &mut text)?,
        Command::Stirling { kind, n, k } => cmd_stirling(cli.format, *kind, *n, *k, &mut text)?,
        Command::Matrices { m, fixtures } => {
            cmd_matrices(cli.format, *m, fixtures.as_deref(), &mut text)?
        }
    };
    emit(cli.out.as_deref(), &text)?;
    Ok(status)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn cmd_coeffs(
    format: Format,
    m: usize,
    route: Route,
    check_all: bool,
    out: &mut String,
) -> Run {
    let report = coeff_matrix(m, route);
    if check_all {
        for other in Route::ALL {
            if coeff_matrix(m, other).matrix != report.matrix {
                return Ok(Err(CheckFailed(format!(
                    "route {other} disagrees with route {route} at m = {m}"
                ))));
            }
        }
        eprintln!("{} routes agree", Route::ALL.len());
    }
    match format {
        Format::Pretty => out.push_str(&render::grid(&report.matrix)),
        Format::Json => out.push_str(&json(&report)?),
        Format::Csv => out.push_str(&report.matrix.to_csv()),
    }
    Ok(Ok(()))
}

fn cmd_verify(format: Format, m: usize, samples: &[Rational], out: &mut String) -> Run {
    let mut report = verify_combination(m, samples);
    let forms = verify_polynomial_forms(m);
    report.pass &= forms;
    match format {
        Format::Pretty => {
            let sample_list: Vec<String> = samples.iter().map(ToString::to_string).collect();
            writeln!(out, "m = {m}, samples = {}", sample_list.join(", "))?;
            writeln!(out, "linear combination: {} violations", report.violations.len())?;
            for v in &report.violations {
                writeln!(out, "  row {} at x = {}: residual {}", v.row, v.sample, v.residual)?;
            }
            writeln!(out, "polynomial forms: {}", if forms { "consistent" } else { "inconsistent" })?;
        }
        Format::Json => out.push_str(&json(&report)?),
        Format::Csv => {
            out.push_str("row,sample,residual\n");
            for v in &report.violations {
                writeln!(out, "{},{},{}", v.row, v.sample, v.residual)?;
            }
        }
    }
    if let Some(v) = report.violations.first() {
        return Ok(Err(CheckFailed(format!(
            "row {} at x = {} leaves residual {}",
            v.row, v.sample, v.residual
        ))));
    }
    if !forms {
        return Ok(Err(CheckFailed(format!(
            "polynomial forms of the expansion matrices disagree at m = {m}"
        ))));
    }
    Ok(Ok(()))
}

fn cmd_eta(format: Format, max: usize, out: &mut String) -> Run {
    let triples = match eta_cross_check(max) {
        Ok(t) => t,
        Err(e) => return Ok(Err(CheckFailed(e.to_string()))),
    };
    match format {
        Format::Pretty => {
            for t in &triples {
                let arg = if t.m == 0 { "0".to_string() } else { format!("-{}", t.m) };
                writeln!(out, "η({arg}) = {}", t.via_zeta)?;
            }
        }
        Format::Json => out.push_str(&json(&triples)?),
        Format::Csv => {
            out.push_str("m,via_zeta,via_coeff_rows,via_stirling2\n");
            for t in &triples {
                writeln!(out, "{},{},{},{}", t.m, t.via_zeta, t.via_coeff_rows, t.via_stirling2)?;
            }
        }
    }
    Ok(Ok(()))
}

fn cmd_conjecture(format: Format, max: usize, out: &mut String) -> Run {
    let finding = scan_sign_pattern(max);
    match format {
        Format::Pretty => {
            writeln!(out, "max_m = {max}: {} violations", finding.violations.len())?;
            for v in &finding.violations {
                writeln!(out, "  a({},{}) = {}, expected {:?}", v.i, v.j, v.value, v.expected)?;
            }
        }
        Format::Json => out.push_str(&json(&finding)?),
        Format::Csv => {
            out.push_str("i,j,value,expected\n");
            for v in &finding.violations {
                writeln!(out, "{},{},{},{:?}", v.i, v.j, v.value, v.expected)?;
            }
        }
    }
    // The pattern is a conjecture; a counterexample is a finding, not a failure.
    Ok(Ok(()))
}

#[derive(Serialize)]
struct BernoulliValue<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<&'a Rational>,
    value: Rational,
}

fn cmd_bernoulli(format: Format, n: usize, z: Option<&Rational>, out: &mut String) -> Run {
    let value = match z {
        Some(z) => bernoulli_poly(n, z),
        None => bernoulli_number(n),
    };
    match format {
        Format::Pretty => match z {
            Some(z) => writeln!(out, "B_{n}({z}) = {value}")?,
            None => writeln!(out, "B_{n} = {value}")?,
        },
        Format::Json => out.push_str(&json(&BernoulliValue { n, z, value })?),
        Format::Csv => {
            out.push_str("n,z,value\n");
            let z = z.map(ToString::to_string).unwrap_or_default();
            writeln!(out, "{n},{z},{value}")?;
        }
    }
    Ok(Ok(()))
}

#[derive(Serialize)]
struct StirlingValue {
    kind: &'static str,
    n: usize,
    k: usize,
    value: String,
}

fn cmd_stirling(format: Format, kind: Kind, n: usize, k: usize, out: &mut String) -> Run {
    let (name, value) = match kind {
        Kind::First => ("first", stirling1(n, k as i64)),
        Kind::Second => ("second", stirling2(n, k as i64)),
    };
    match format {
        Format::Pretty => {
            let symbol = if matches!(kind, Kind::First) { "s" } else { "S" };
            writeln!(out, "{symbol}({n},{k}) = {value}")?;
        }
        Format::Json => out.push_str(&json(&StirlingValue {
            kind: name,
            n,
            k,
            value: value.to_string(),
        })?),
        Format::Csv => {
            out.push_str("kind,n,k,value\n");
            writeln!(out, "{name},{n},{k},{value}")?;
        }
    }
    Ok(Ok(()))
}

#[derive(Serialize)]
struct MatrixSet {
    m: usize,
    #[serde(rename = "A")]
    a: LowerTriMatrix,
    #[serde(rename = "B")]
    b: LowerTriMatrix,
    #[serde(rename = "B_inv")]
    b_inv: LowerTriMatrix,
    #[serde(rename = "frakA")]
    frak_a: LowerTriMatrix,
    #[serde(rename = "frakB")]
    frak_b: LowerTriMatrix,
    #[serde(rename = "frakB_inv")]
    frak_b_inv: LowerTriMatrix,
    product: LowerTriMatrix,
}

impl MatrixSet {
    fn build(m: usize) -> Result<Self> {
        let b = build_matrix_b(m);
        let frak_b = build_matrix_frak_b(m);
        Ok(MatrixSet {
            m,
            a: build_matrix_a(m),
            b_inv: b.invert_substitution()?,
            b,
            frak_a: build_matrix_frak_a(m),
            frak_b_inv: frak_b.invert_series()?,
            frak_b,
            product: coeff_matrix(m, Route::Monomial).matrix,
        })
    }

    /// (fixture file stem, pretty label, matrix)
    fn entries(&self) -> [(&'static str, &'static str, &LowerTriMatrix); 7] {
        [
            ("a", "A", &self.a),
            ("b", "B", &self.b),
            ("b_inv", "B^-1", &self.b_inv),
            ("frak_a", "A'", &self.frak_a),
            ("frak_b", "B'", &self.frak_b),
            ("frak_b_inv", "B'^-1", &self.frak_b_inv),
            ("coeff", "A B^-1", &self.product),
        ]
    }
}

fn cmd_matrices(format: Format, m: usize, fixtures: Option<&Path>, out: &mut String) -> Run {
    let set = MatrixSet::build(m)?;
    if let Some(dir) = fixtures {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (stem, _, matrix) in set.entries() {
            let path = dir.join(format!("{stem}.csv"));
            fs::write(&path, matrix.to_csv())
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    match format {
        Format::Pretty => {
            let blocks: Vec<String> = set
                .entries()
                .iter()
                .map(|(_, label, matrix)| render::labelled(label, &render::grid(matrix)))
                .collect();
            out.push_str(&blocks.join("\n"));
        }
        Format::Json => out.push_str(&json(&set)?),
        Format::Csv => {
            let blocks: Vec<String> = set
                .entries()
                .iter()
                .map(|(stem, _, matrix)| format!("# {stem}\n{}", matrix.to_csv()))
                .collect();
            out.push_str(&blocks.join("\n"));
        }
    }
    Ok(Ok(()))
}
