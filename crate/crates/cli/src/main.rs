use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exact Gelfand-Tsetlin Appell bases for Hodge-de Rham and generalized
/// Moisil-Théodoresco systems.
///
/// Set APPELL_THREADS to bound the number of worker threads.
#[derive(Parser, Debug)]
#[command(name = "appell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis of the k-homogeneous s-vector valued Hodge-de Rham solutions
    BasisHdr(HdrArgs),
    /// Basis of the k-homogeneous Cl^S valued monogenic polynomials
    BasisGmt(GmtArgs),
    /// Complex harmonic Gelfand-Tsetlin basis
    BasisHarmonic(HarmonicArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Gram matrix (normalized by pi^floor(m/2)) of a basis
    Gram(GramArgs),
    /// Expansion coefficients of a Hodge-de Rham polynomial
    Taylor(TaylorArgs),
    /// |I^{s,m}_k| against the oracle rank for all s and k <= kmax
    Dims(DimsArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output file (written atomically); stdout if omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for appell_core::Field {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Real => appell_core::Field::Real,
            FieldArg::Complex => appell_core::Field::Complex,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct HdrArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    s: usize,
    /// Single degree
    #[arg(long, conflicts_with = "kmax", required_unless_present = "kmax")]
    k: Option<u32>,
    /// All degrees 0..=kmax
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long, value_enum, default_value = "real")]
    field: FieldArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct GmtArgs {
    #[arg(long)]
    m: usize,
    /// Grade set, e.g. "1,3" or "all"
    #[arg(long = "S", value_name = "LIST")]
    grades: String,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "real")]
    field: FieldArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct HarmonicArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "complex")]
    field: FieldArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    /// kernel, orthogonality, completeness, appell, branching, gmt, taylor, harmonic,
    /// algebra, invariance or all
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Single grade; all grades if omitted
    #[arg(long)]
    s: Option<usize>,
    /// Grade set for the gmt suite
    #[arg(long = "S", value_name = "LIST")]
    grades: Option<String>,
    /// Single degree (top degree for appell and taylor)
    #[arg(long, conflicts_with = "kmax")]
    k: Option<u32>,
    #[arg(long, default_value_t = 2)]
    kmax: u32,
    #[arg(long, value_enum, default_value = "real")]
    field: FieldArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random inputs for the algebra and taylor suites
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Hdr,
    Gmt,
    Harmonic,
}

#[derive(Args, Debug, Clone)]
struct GramArgs {
    #[arg(long, value_enum, default_value = "hdr")]
    family: Family,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long = "S", value_name = "LIST")]
    grades: Option<String>,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "real")]
    field: FieldArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct TaylorArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    kmax: u32,
    #[arg(long, value_enum, default_value = "complex")]
    field: FieldArg,
    /// Polynomial JSON file; a seeded random combination of basis elements if omitted
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct DimsArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    kmax: u32,
    #[command(flatten)]
    common: Common,
}

/// Failure classes, mapped to the process exit code.
#[derive(Debug)]
pub enum Failure {
    Verification,
    Usage(String),
    Internal(String),
}

impl From<appell_core::Error> for Failure {
    fn from(e: appell_core::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

pub fn parse_grades(list: &str, m: usize) -> Result<BTreeSet<usize>, Failure> {
    if list.trim() == "all" {
        return Ok((0..=m).collect());
    }
    let mut out = BTreeSet::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let s: usize = part.parse().map_err(|_| Failure::Usage(format!("bad grade '{part}' in --S")))?;
        if s > m {
            return usage(format!("grade {s} exceeds m = {m}"));
        }
        out.insert(s);
    }
    if out.is_empty() {
        return usage("empty grade set");
    }
    Ok(out)
}

/// Write `bytes` to `path` via a temporary file in the same directory and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("APPELL_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("APPELL_THREADS must be a positive integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = std::panic::catch_unwind(|| {
        configure_threads()?;
        commands::run(cli.command)
    });
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Verification)) => ExitCode::from(1),
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}
