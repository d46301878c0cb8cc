use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cliffspin_core::classification::{
    bracket_basis, build_bracket, emit_table, ExtendedPoincareAlgebra, JacobiReport, TableKind,
};
use cliffspin_core::clifford::build;
use cliffspin_core::invariants::schur_algebra;
use cliffspin_core::verify::{run_suite, Suite, VerifyConfig};
use cliffspin_core::{Error, Rational, RationalMatrix};

#[derive(Parser)]
#[command(
    name = "cliffspin",
    version,
    about = "Exact spinor bilinear forms and extended Poincaré algebras"
)]
struct Cli {
    /// Worker threads for cell computations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the spinor module of Cℓ(p,q).
    Build {
        p: usize,
        q: usize,
        /// Write gammas, grading and canonical form as JSON (`-` for stdout).
        #[arg(long)]
        dump: Option<String>,
    },
    /// Emit a classification table.
    Table {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value = "pairs")]
        kind: TableKind,
        #[arg(long, value_enum, default_value_t = Format::Grid)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        /// Write the full report as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the bracket `Σ c_A j_A` and check the graded Jacobi identity.
    Bracket {
        p: usize,
        q: usize,
        #[arg(long, allow_negative_numbers = true)]
        epsilon: i32,
        /// Comma-separated rationals, one per admissible element with σ = ε.
        /// Omit to list those elements.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        coeffs: Option<Vec<Rational>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Grid,
    Machine,
}

/// Exit status 2 for bad input, 1 for everything else.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSignature(_) | Error::Parse(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Build { p, q, dump } => cmd_build(p, q, dump.as_deref()),
        Command::Table {
            max_n,
            kind,
            format,
        } => cmd_table(max_n, kind, format),
        Command::Verify {
            suite,
            max_n,
            output,
        } => cmd_verify(suite, max_n, output),
        Command::Bracket {
            p,
            q,
            epsilon,
            coeffs,
        } => cmd_bracket(p, q, epsilon, coeffs),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Rationals always as `a/b`.
fn ratio(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn ratio_matrix(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ratio).collect())
        .collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ModuleDump {
    p: usize,
    q: usize,
    dim_s: usize,
    recipe: cliffspin_core::clifford::Recipe,
    gammas: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grading: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complex_structure: Option<Vec<Vec<String>>>,
    canonical_form: Vec<Vec<String>>,
}

fn write_out(target: &str, text: &str) -> Result<(), Failure> {
    if target == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.write_all(b"\n")?;
    } else {
        fs::write(target, format!("{text}\n"))?;
    }
    Ok(())
}

fn cmd_build(p: usize, q: usize, dump: Option<&str>) -> Result<u8, Failure> {
    let m = build(p, q)?;
    m.validate()?;
    match dump {
        Some(target) => {
            let doc = ModuleDump {
                p,
                q,
                dim_s: m.dim(),
                recipe: m.recipe,
                gammas: m.gammas.iter().map(ratio_matrix).collect(),
                grading: m.grading_matrix().map(ratio_matrix),
                complex_structure: m.complex_structure.as_ref().map(ratio_matrix),
                canonical_form: ratio_matrix(&m.canonical),
            };
            write_out(target, &serde_json::to_string_pretty(&doc)?)?;
        }
        None => {
            let schur = schur_algebra(&m)?;
            println!("signature {}  s = {}", m.sig, m.sig.s());
            println!("dim S     {}", m.dim());
            println!(
                "recipe    {}",
                serde_json::to_string(&m.recipe)?.trim_matches('"')
            );
            println!("graded    {}", m.grading.is_some());
            println!("schur     {} (dim {})", schur.iso.label(), schur.dim());
        }
    }
    Ok(0)
}

fn cmd_table(max_n: usize, kind: TableKind, format: Format) -> Result<u8, Failure> {
    let doc = emit_table(max_n, kind)?;
    let text = match format {
        Format::Grid => doc.to_grid(),
        Format::Machine => doc.to_jsonl(),
    };
    print!("{text}");
    if !text.ends_with('\n') {
        println!();
    }
    Ok(0)
}

fn cmd_verify(suite: Suite, max_n: Option<usize>, output: Option<PathBuf>) -> Result<u8, Failure> {
    let mut cfg = VerifyConfig::default();
    if let Some(n) = max_n {
        if n == 0 {
            return Err(Failure {
                code: 2,
                message: "--max-n must be positive".into(),
            });
        }
        cfg = cfg.with_max_n(suite, n);
    }
    let report = run_suite(suite, &cfg)?;
    for r in report.skipped() {
        println!("skip {}: {} ({})", r.id, r.description, r.actual);
    }
    for r in report.failures() {
        println!(
            "FAIL {}: {} expected {} got {}",
            r.id, r.description, r.expected, r.actual
        );
    }
    println!("{}", report.summary());
    if let Some(path) = output {
        fs::write(path, serde_json::to_string_pretty(&report)?)?;
    }
    Ok(if report.pass { 0 } else { 1 })
}

#[derive(Serialize)]
struct BracketDump {
    p: usize,
    q: usize,
    epsilon: i32,
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeffs: Option<Vec<String>>,
    /// `pi[k][a][b]`: coefficient of `e_k` in `[s_a, s_b]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pi: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivariant: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jacobi: Option<JacobiReport>,
}

fn cmd_bracket(
    p: usize,
    q: usize,
    epsilon: i32,
    coeffs: Option<Vec<Rational>>,
) -> Result<u8, Failure> {
    let m = build(p, q)?;
    let basis: Vec<String> = bracket_basis(&m, epsilon)?
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut dump = BracketDump {
        p,
        q,
        epsilon,
        basis,
        coeffs: None,
        pi: None,
        equivariant: None,
        jacobi: None,
    };
    let mut code = 0;
    if let Some(coeffs) = coeffs {
        let alg: ExtendedPoincareAlgebra =
            build_bracket(&m, &coeffs, epsilon).map_err(|e| match e {
                Error::DimensionMismatch(msg) => Failure {
                    code: 2,
                    message: msg,
                },
                e => e.into(),
            })?;
        let jacobi = alg.verify_jacobi();
        if !jacobi.holds() {
            code = 1;
        }
        dump.coeffs = Some(coeffs.iter().map(ratio).collect());
        dump.pi = Some(alg.pi.iter().map(ratio_matrix).collect());
        dump.equivariant = Some(alg.is_equivariant());
        dump.jacobi = Some(jacobi);
    }
    write_out("-", &serde_json::to_string_pretty(&dump)?)?;
    Ok(code)
}
