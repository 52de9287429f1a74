//! `degdet`: degree detection, identity sweeps and determinant evaluation
//! from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification or agreement check
//! fails, 2 on usage or parse errors.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degdet_core::degreematrix::{
    build_a, build_a_sub, det_a_closed_form, det_a_sub_closed_form, DegreeMatrixSpec,
};
use degdet_core::exactnum::{format_rational, int};
use degdet_core::interp::{detect_degree, interpolate_direct, DetMode};
use degdet_core::vandermonde::{build_b, det_b_expansion, det_b_expansion_complement, AffineData};
use degdet_core::verify::{self, Suite};
use degdet_core::Rational;
use num_traits::Zero;
use thiserror::Error;

use crate::input::{parse_problem, parse_rational_list};
use crate::output::{rationals, DegreeRecord, DetRecord, ReportRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, field '{field}': {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] degdet_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Parser)]
#[command(
    name = "degdet",
    version,
    about = "Interpolation degree via combinatorial determinants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect the degree of the interpolant of a problem file.
    Degree {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::ClosedForm)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Run an identity-verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_ell: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, env = "DEGDET_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Include elapsed time per suite (output is then not byte-stable).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate a determinant directly and by its closed form.
    Det {
        #[arg(long, value_enum)]
        matrix: MatrixKind,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
        /// Value vector for `A`, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        kappa: Option<usize>,
        /// Size of `B`; defaults to the length of `--r`, or `ell`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    ClosedForm,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    #[value(name = "A")]
    A,
    #[value(name = "Asub")]
    Asub,
    #[value(name = "B")]
    B,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Degree { input, mode, json } => cmd_degree(&input, mode, json),
        Command::Verify {
            suite,
            max_ell,
            trials,
            seed,
            json,
            timing,
        } => cmd_verify(suite, max_ell, trials, seed, json, timing),
        Command::Det {
            matrix,
            ell,
            s,
            a,
            kappa,
            k,
            alpha,
            beta,
            r,
            json,
        } => {
            let params = DetParams {
                ell,
                s,
                a,
                kappa,
                k,
                alpha,
                beta,
                r,
            };
            cmd_det(matrix, &params, json)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: serde::Serialize>(record: &T, text: String, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(record).expect("serializable")
        );
    } else {
        print!("{text}");
    }
}

fn cmd_degree(path: &PathBuf, mode: Mode, json: bool) -> Result<bool, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let problem = parse_problem(&text)?.into_problem()?;
    let (det_mode, mode_name) = match mode {
        Mode::ClosedForm => (DetMode::ClosedForm, "closed-form"),
        Mode::Matrix => (DetMode::Matrix, "matrix"),
    };
    let detection = detect_degree(&problem, det_mode);
    let q = interpolate_direct(&problem);
    let b = q.shift_scale(problem.xi(), &int(1))?;
    let record = DegreeRecord {
        ell: problem.ell(),
        mode: mode_name.to_string(),
        degree: detection.degree.to_string(),
        witness_m: detection.witness,
        determinants: rationals(&detection.determinants),
        coefficients_x: rationals(q.coeffs()),
        coefficients_b: rationals(b.coeffs()),
    };
    emit(&record, record.to_text(), json);
    Ok(true)
}

fn cmd_verify(
    suite: Suite,
    max_ell: Option<usize>,
    trials: Option<usize>,
    seed: u64,
    json: bool,
    timing: bool,
) -> Result<bool, CliError> {
    if max_ell == Some(0) {
        return Err(CliError::Usage("--max-ell must be at least 1".into()));
    }
    if trials == Some(0) {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let reports = verify::run(suite, max_ell, trials, seed);
    let ok = reports.iter().all(|r| r.passed());
    let records: Vec<ReportRecord> = reports
        .iter()
        .map(|r| ReportRecord::from_report(r, timing))
        .collect();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&records).expect("serializable")
        );
    } else {
        let blocks: Vec<String> = records.iter().map(ReportRecord::to_text).collect();
        print!("{}", blocks.join("\n"));
        println!("\nstatus: {}", if ok { "pass" } else { "fail" });
    }
    Ok(ok)
}

struct DetParams {
    ell: usize,
    s: usize,
    a: Option<String>,
    kappa: Option<usize>,
    k: Option<usize>,
    alpha: Option<String>,
    beta: Option<String>,
    r: Option<String>,
}

fn list_arg(name: &str, value: &Option<String>) -> Result<Option<Vec<Rational>>, CliError> {
    value
        .as_deref()
        .map(|v| parse_rational_list(0, name, v))
        .transpose()
        .map_err(|e| match e {
            CliError::Parse { field, message, .. } => {
                CliError::Usage(format!("--{field}: {message}"))
            }
            other => other,
        })
}

fn cmd_det(kind: MatrixKind, p: &DetParams, json: bool) -> Result<bool, CliError> {
    let (name, direct, closed_forms) = match kind {
        MatrixKind::A => {
            let a = list_arg("a", &p.a)?
                .ok_or_else(|| CliError::Usage("--a is required for matrix A".into()))?;
            let spec = DegreeMatrixSpec::new(p.ell, p.s, a)?;
            let direct = build_a(&spec).det()?;
            (
                "A",
                direct,
                vec![("closed_form".to_string(), det_a_closed_form(&spec))],
            )
        }
        MatrixKind::Asub => {
            let kappa = p
                .kappa
                .ok_or_else(|| CliError::Usage("--kappa is required for matrix Asub".into()))?;
            let direct = build_a_sub(p.ell, kappa)?.det()?;
            let closed = Rational::from_integer(det_a_sub_closed_form(p.ell, kappa)?);
            ("Asub", direct, vec![("closed_form".to_string(), closed)])
        }
        MatrixKind::B => {
            let data = affine_from_params(p)?;
            let direct = build_b(&data).det()?;
            let mut forms = Vec::new();
            if data.k() > data.ell() {
                forms.push(("closed_form".to_string(), Rational::zero()));
            } else {
                if data.alpha().iter().all(|x| !x.is_zero()) {
                    forms.push(("closed_form".to_string(), det_b_expansion(&data)?));
                }
                if data.alpha().iter().chain(data.beta()).all(|x| !x.is_zero()) {
                    forms.push((
                        "closed_form_complement".to_string(),
                        det_b_expansion_complement(&data)?,
                    ));
                }
            }
            ("B", direct, forms)
        }
    };
    let agree = closed_forms.iter().all(|(_, v)| v == &direct);
    let record = DetRecord {
        matrix: name.to_string(),
        direct: format_rational(&direct),
        closed_forms: closed_forms
            .into_iter()
            .map(|(n, v)| (n, format_rational(&v)))
            .collect(),
        agree,
    };
    emit(&record, record.to_text(), json);
    Ok(agree)
}

/// `B` parameters; omitted sequences default to the degree-matrix shape
/// `alpha_i = (i-1)(ell+1)`, `beta_i = 1`, `r_j = j`.
fn affine_from_params(p: &DetParams) -> Result<AffineData, CliError> {
    let alpha = list_arg("alpha", &p.alpha)?;
    let beta = list_arg("beta", &p.beta)?;
    let r = list_arg("r", &p.r)?;
    let k =
        p.k.or(r.as_ref().map(Vec::len))
            .or(alpha.as_ref().map(Vec::len))
            .unwrap_or(p.ell);
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let alpha = alpha.unwrap_or_else(|| (0..k).map(|i| int((i * (p.ell + 1)) as i64)).collect());
    let beta = beta.unwrap_or_else(|| vec![int(1); k]);
    let r = r.unwrap_or_else(|| (1..=k).map(|j| int(j as i64)).collect());
    Ok(AffineData::new(p.ell, alpha, beta, r)?)
}
