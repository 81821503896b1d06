//! Command-line front end: problem files in, certificates and reports out.

pub mod problem;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ndcert_core::certify::{
    certify_ndci, certify_nondegenerate, certify_pair, certify_stable_radius, check_family, CertError, Certificate,
    CheckOptions, FamilyInput, Status,
};
use ndcert_core::groebner::DEFAULT_STEP_BUDGET;
use ndcert_core::newton::{compact_faces, newton_vertices};
use ndcert_core::numeric::{transversality_scan, NumericError, ScanConfig, DEFAULT_TOLERANCE};
use ndcert_core::poly::{Coefficient, Polynomial, QPoly};

use problem::{load_problem, Members, Problem};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ndcert",
    version,
    about = "Newton non-degeneracy checks and Milnor fibration certificates"
)]
struct Cli {
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Reduction steps allowed per Gröbner basis computation.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_BUDGET)]
    step_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vertices of the Newton polyhedron of each polynomial.
    Newton { file: PathBuf },
    /// Compact faces with witness weights.
    Faces { file: PathBuf },
    /// Newton non-degeneracy of a single polynomial.
    Nondeg { file: PathBuf },
    /// Non-degenerate complete intersection test for the whole list.
    Ndci { file: PathBuf },
    /// Stable radius certificate for the product of the list.
    CertifyProduct { file: PathBuf },
    /// Certificate for a one-parameter family.
    CertifyFamily { file: PathBuf },
    /// Certificate comparing two products.
    CertifyPair { file: PathBuf },
    /// Numeric transversality scan of the product.
    Scan {
        file: PathBuf,
        #[command(flatten)]
        scan: ScanFlags,
    },
}

#[derive(Args, Debug)]
struct ScanFlags {
    #[arg(long)]
    eps1: Option<f64>,
    #[arg(long)]
    eps2: Option<f64>,
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

/// Outcome of a command: stdout payload, stderr summary, exit code.
struct Outcome {
    stdout: String,
    summary: String,
    code: i32,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Io(String),
}

impl From<problem::InputError> for CliError {
    fn from(e: problem::InputError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CertError> for CliError {
    fn from(e: CertError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code. Output is written once, at the end.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let opts = CheckOptions {
        step_budget: cli.step_budget,
    };
    let result = match cli.jobs {
        Some(0) => Err(CliError::Input("--jobs must be at least 1".into())),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &opts)),
            Err(e) => Err(CliError::Io(e.to_string())),
        },
        None => dispatch(&cli.command, &opts),
    };
    match result {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &out.stdout) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            } else {
                let _ = stdout.write_all(out.stdout.as_bytes());
            }
            let _ = stderr.write_all(out.summary.as_bytes());
            out.code
        }
        Err(CliError::Input(msg)) | Err(CliError::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::ResourceExhausted => EXIT_EXHAUSTED,
    }
}

fn rational_members(p: &Problem, cmd: &str) -> Result<Vec<QPoly>, CliError> {
    match &p.members {
        Members::Rational(fs) => Ok(fs.clone()),
        _ => Err(CliError::Input(format!("{cmd} does not accept mode {}", p.mode))),
    }
}

fn certificate_outcome(
    kind: &str,
    cert: Certificate,
    annotations: Option<serde_json::Value>,
) -> Result<Outcome, CliError> {
    let code = status_code(cert.status);
    Ok(Outcome {
        stdout: report::certificate_document(kind, &cert, annotations),
        summary: report::certificate_summary(kind, &cert),
        code,
    })
}

fn text_listing<C: Coefficient>(
    polys: &[(String, Polynomial<C>)],
    mut render: impl FnMut(&Polynomial<C>, &mut String) -> Result<(), CliError>,
) -> Result<String, CliError> {
    let mut out = String::new();
    for (name, p) in polys {
        out.push_str(&format!("{name} = {p}\n"));
        render(p, &mut out)?;
    }
    Ok(out)
}

fn named_members(p: &Problem) -> Vec<(String, Polynomial<ndcert_core::poly::RatFunc>)> {
    let named = |prefix: &str, fs: &[QPoly]| -> Vec<(String, Polynomial<ndcert_core::poly::RatFunc>)> {
        fs.iter()
            .enumerate()
            .map(|(i, f)| (format!("{prefix}[{}]", i + 1), f.to_parametric()))
            .collect()
    };
    match &p.members {
        Members::Rational(fs) => named("f", fs),
        Members::Family(fs) => fs
            .iter()
            .enumerate()
            .map(|(i, f)| (format!("f[{}]", i + 1), f.clone()))
            .collect(),
        Members::Pair(fs, gs) => {
            let mut v = named("f", fs);
            v.extend(named("g", gs));
            v
        }
    }
}

fn geom_err(e: ndcert_core::newton::GeomError) -> CliError {
    CliError::Input(e.to_string())
}

fn dispatch(cmd: &Command, opts: &CheckOptions) -> Result<Outcome, CliError> {
    match cmd {
        Command::Newton { file } => {
            let p = load_problem(file)?;
            let text = text_listing(&named_members(&p), |f, out| {
                for v in newton_vertices(f).map_err(geom_err)?.vertices {
                    out.push_str(&format!("  vertex {v}\n"));
                }
                Ok(())
            })?;
            Ok(Outcome {
                stdout: text,
                summary: String::new(),
                code: EXIT_PASS,
            })
        }
        Command::Faces { file } => {
            let p = load_problem(file)?;
            let text = text_listing(&named_members(&p), |f, out| {
                for face in compact_faces(f).map_err(geom_err)? {
                    let pts: Vec<String> = face.points.iter().map(|e| e.to_string()).collect();
                    let w: Vec<String> = face.witness.entries().iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!(
                        "  dim {} weight ({}) level {} points {}\n",
                        face.dim,
                        w.join(","),
                        face.level,
                        pts.join(" ")
                    ));
                }
                Ok(())
            })?;
            Ok(Outcome {
                stdout: text,
                summary: String::new(),
                code: EXIT_PASS,
            })
        }
        Command::Nondeg { file } => {
            let p = load_problem(file)?;
            let fs = rational_members(&p, "nondeg")?;
            if fs.len() != 1 {
                return Err(CliError::Input(format!(
                    "nondeg needs exactly one polynomial, found {}",
                    fs.len()
                )));
            }
            certificate_outcome("nondeg", certify_nondegenerate(&fs[0], opts)?, None)
        }
        Command::Ndci { file } => {
            let p = load_problem(file)?;
            let cert = match &p.members {
                Members::Rational(fs) => certify_ndci(fs, opts)?,
                Members::Family(fs) => certify_ndci(fs, opts)?,
                Members::Pair(..) => return Err(CliError::Input("ndci does not accept mode pair".into())),
            };
            certificate_outcome("ndci", cert, None)
        }
        Command::CertifyProduct { file } => {
            let p = load_problem(file)?;
            let fs = rational_members(&p, "certify-product")?;
            let cert = certify_stable_radius(&fs, opts)?;
            let annotations = if p.scan != problem::ScanSection::default() {
                let cfg = scan_config(&p, None)?;
                let product = Polynomial::product(&fs).map_err(|e| CliError::Input(e.to_string()))?;
                Some(report::scan_annotation(&cfg, transversality_scan(&product, &cfg)))
            } else {
                None
            };
            certificate_outcome("certify-product", cert, annotations)
        }
        Command::CertifyFamily { file } => {
            let p = load_problem(file)?;
            let Members::Family(fs) = &p.members else {
                return Err(CliError::Input(format!(
                    "certify-family needs mode family, found {}",
                    p.mode
                )));
            };
            let fam = FamilyInput::new(fs.clone())?;
            certificate_outcome("certify-family", check_family(&fam, opts)?, None)
        }
        Command::CertifyPair { file } => {
            let p = load_problem(file)?;
            let Members::Pair(fs, gs) = &p.members else {
                return Err(CliError::Input(format!(
                    "certify-pair needs mode pair, found {}",
                    p.mode
                )));
            };
            certificate_outcome("certify-pair", certify_pair(fs, gs, opts)?, None)
        }
        Command::Scan { file, scan } => {
            let p = load_problem(file)?;
            let fs = rational_members(&p, "scan")?;
            let cfg = scan_config(&p, Some(scan))?;
            let product = Polynomial::product(&fs).map_err(|e| CliError::Input(e.to_string()))?;
            let result = transversality_scan(&product, &cfg);
            let code = match &result {
                Ok(_) => EXIT_PASS,
                Err(NumericError::NoSurvivors { .. }) => EXIT_FAIL,
                Err(e) => return Err(CliError::Input(e.to_string())),
            };
            let summary = report::scan_summary(&result);
            let digest = ndcert_core::certify::inputs_digest(&ndcert_core::certify::canonical_input_text(
                "scan",
                p.n,
                &[("f", fs.as_slice())],
            ));
            Ok(Outcome {
                stdout: report::scan_document(&digest, report::scan_annotation(&cfg, result)),
                summary,
                code,
            })
        }
    }
}

fn scan_config(p: &Problem, flags: Option<&ScanFlags>) -> Result<ScanConfig, CliError> {
    let s = &p.scan;
    let pick = |flag: Option<f64>, file: Option<f64>, default: f64| flag.or(file).unwrap_or(default);
    let eps1 = pick(flags.and_then(|f| f.eps1), s.eps1, 0.1);
    let eps2 = pick(flags.and_then(|f| f.eps2), s.eps2, 0.5);
    let eta = pick(flags.and_then(|f| f.eta), s.eta, 1e-4);
    let samples = flags.and_then(|f| f.samples).or(s.samples).unwrap_or(500);
    let seed = flags.and_then(|f| f.seed).or(s.seed).unwrap_or(0);
    let tolerance = s.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    ScanConfig::with_tolerance(eps1, eps2, eta, samples, seed, tolerance).map_err(|e| CliError::Input(e.to_string()))
}
