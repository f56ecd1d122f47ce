use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use superschur::catalog::{all_entries, resolve_key};
use superschur::format::{emit_cover, parse_algebra};
use superschur::multiplier::{multiplier, s_invariant, stem_cover, t_invariant};
use superschur::superalgebra::{LieSuperAlgebra, Subspace, ValidationReport};
use superschur::verify::{report_json, run_all};

const EXIT_VALIDATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "superschur",
    version,
    about = "Exact structure, multiplier, and stem-cover computations for finite-dimensional Lie superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, center, derived subalgebra, central series, and class
    Info { target: String },
    /// Schur multiplier dimensions and the t and s invariants
    Multiplier { target: String },
    /// Construct the stem cover and emit it as an algebra file
    Cover {
        target: String,
        /// Write the cover here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the built-in catalog with its expected values
    Catalog,
    /// Recompute every published table value and report pass/fail
    VerifyPaper {
        /// Also write the full report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check an algebra file against the structure axioms
    Validate { file: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Restore the default SIGPIPE disposition so `superschur catalog | head`
/// exits quietly instead of panicking on the closed pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info { target } => cmd_info(&target),
        Command::Multiplier { target } => cmd_multiplier(&target),
        Command::Cover { target, out } => cmd_cover(&target, out.as_deref()),
        Command::Catalog => cmd_catalog(),
        Command::VerifyPaper { json } => cmd_verify(json.as_deref()),
        Command::Validate { file } => cmd_validate(&file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Catalog keys win; anything else is treated as a file path.  Files are
/// validated before use so later computations only see real superalgebras.
fn load_target(target: &str) -> Result<LieSuperAlgebra, Failure> {
    let key_error = match resolve_key(target) {
        Ok(algebra) => return Ok(algebra),
        Err(e) => e,
    };
    let path = Path::new(target);
    if !path.exists() {
        return Err(fail(
            EXIT_USAGE,
            format!("`{target}` is neither a catalog key ({key_error}) nor a file"),
        ));
    }
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_USAGE, format!("cannot read `{target}`: {e}")))?;
    let algebra = parse_algebra(&text)
        .map_err(|e| fail(EXIT_USAGE, format!("cannot parse `{target}`: {e}")))?;
    let report = algebra.validate();
    if !report.is_ok() {
        return Err(fail(EXIT_VALIDATION, violation_listing(&algebra, &report)));
    }
    Ok(algebra)
}

fn violation_listing(l: &LieSuperAlgebra, report: &ValidationReport) -> String {
    let mut out = format!("{} violates the structure axioms:", l.name());
    for v in &report.violations {
        out.push_str(&format!("\n  [{}] {}", v.kind, v.witness.join(", ")));
        if let Some(residual) = &v.residual {
            out.push_str(&format!("  residual: {}", l.format_vector(residual)));
        }
    }
    out
}

fn describe_subspace(label: &str, space: &Subspace, l: &LieSuperAlgebra) {
    if space.total_dim() == 0 {
        println!("{label}: {}", space.dims());
        return;
    }
    let spans: Vec<String> = space
        .basis_vectors()
        .iter()
        .map(|v| l.format_vector(v))
        .collect();
    println!("{label}: {} spanned by {}", space.dims(), spans.join(", "));
}

fn series_dims(spaces: &[Subspace]) -> String {
    let dims: Vec<String> = spaces.iter().map(|s| s.dims().to_string()).collect();
    dims.join(" -> ")
}

fn cmd_info(target: &str) -> Result<(), Failure> {
    let l = load_target(target)?;
    println!("algebra: {}", l.name());
    println!("dims: {}", l.dims());
    describe_subspace("center", &l.center(), &l);
    describe_subspace("derived", &l.derived_subalgebra(), &l);
    println!("lower central series: {}", series_dims(&l.lower_central_series()));
    println!("upper central series: {}", series_dims(&l.upper_central_series()));
    match l.nilpotency_class() {
        Ok(class) => println!("nilpotency class: {class}"),
        Err(_) => println!("nilpotency class: not nilpotent"),
    }
    Ok(())
}

fn cmd_multiplier(target: &str) -> Result<(), Failure> {
    let l = load_target(target)?;
    let m = multiplier(&l);
    println!("algebra: {}", l.name());
    println!("dims: {}", l.dims());
    println!("dim M: {}", m.total());
    println!("graded M: {}", m.multiplier);
    println!("t: {}", t_invariant(&l));
    println!("s: {}", s_invariant(&l));
    Ok(())
}

fn cmd_cover(target: &str, out: Option<&Path>) -> Result<(), Failure> {
    let l = load_target(target)?;
    let cover = stem_cover(&l);
    let text = emit_cover(&cover);
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| {
                fail(EXIT_USAGE, format!("cannot write `{}`: {e}", path.display()))
            })?;
            println!(
                "wrote {} with kernel of dims {} to {}",
                cover.cover.name(),
                cover.kernel_subspace().dims(),
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_catalog() -> Result<(), Failure> {
    println!("{:<28} {:>9} {:>7} {:>5}", "key", "dims", "dim M", "s");
    for entry in all_entries() {
        let expected = entry
            .expected
            .as_ref()
            .expect("catalog entries carry expected values");
        let s = expected
            .s_value
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{:<28} {:>9} {:>7} {:>5}",
            entry.display_key(),
            entry.algebra.dims().to_string(),
            expected.multiplier_total,
            s
        );
    }
    Ok(())
}

fn cmd_verify(json: Option<&Path>) -> Result<(), Failure> {
    let report = run_all();
    for r in &report.results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{status}  {:<48} expected {:<12} computed {}",
            r.id, r.expected, r.computed
        );
    }
    println!();
    for r in report.results.iter().filter(|r| !r.pass) {
        println!("FAIL {}: expected {}, computed {}", r.id, r.expected, r.computed);
        println!("     {}", r.citation);
    }
    println!(
        "{} checks: {} passed, {} failed",
        report.summary.total, report.summary.passed, report.summary.failed
    );
    if let Some(path) = json {
        fs::write(path, report_json(&report)).map_err(|e| {
            fail(EXIT_USAGE, format!("cannot write `{}`: {e}", path.display()))
        })?;
    }
    if report.summary.failed > 0 {
        Err(fail(
            EXIT_VERIFY,
            format!("{} check(s) failed", report.summary.failed),
        ))
    } else {
        Ok(())
    }
}

fn cmd_validate(file: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| fail(EXIT_USAGE, format!("cannot read `{}`: {e}", file.display())))?;
    let algebra = parse_algebra(&text)
        .map_err(|e| fail(EXIT_USAGE, format!("cannot parse `{}`: {e}", file.display())))?;
    let report = algebra.validate();
    if report.is_ok() {
        println!("ok: {} satisfies the structure axioms", algebra.name());
        Ok(())
    } else {
        Err(fail(EXIT_VALIDATION, violation_listing(&algebra, &report)))
    }
}
