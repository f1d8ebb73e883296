//! Command-line front end: enumeration, expansions, graph export, axiom
//! verification, identity checks, and census runs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use kschur_core::cores::{self, Partition, SkewShape};
use kschur_core::QSym;

mod commands;
mod config;
mod parse;

use config::RunConfig;

#[derive(Parser)]
#[command(
    name = "kschur",
    about = "Exact combinatorics of the n-core poset, starred strong tableaux, affine dual equivalence graphs, and k-Schur / LLT / Macdonald expansions",
    version
)]
struct Cli {
    /// Optional TOML config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Worker threads for census and verification runs
    /// (default: KSCHUR_THREADS or all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Latex,
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Partition and abacus queries: binary string, rods, core tests, rho.
    Cores {
        /// Partition as comma-separated parts, e.g. 4,3,1 (empty for ∅).
        #[arg(long, default_value = "")]
        lambda: String,
        /// Modulus for rod/core computations.
        #[arg(long)]
        n: Option<usize>,
        /// Apply the k-bounded-to-core bijection with this k.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Poset queries: covers, intervals, rank-2 classification.
    Poset {
        #[command(subcommand)]
        cmd: commands::PosetCmd,
    },
    /// Enumerate starred strong tableaux of a (skew) shape.
    Sst {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        shape: String,
        /// Inner shape for skew intervals.
        #[arg(long, default_value = "")]
        inner: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// k-Schur functions in the quasisymmetric and Schur bases.
    Kschur {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
        /// Use cospin weights (the modified k-Schur function in q).
        #[arg(long)]
        modified: bool,
        /// Basis to print: qsym, schur, or both.
        #[arg(long, default_value = "both")]
        basis: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Affine dual equivalence graphs: build, verify, classify.
    Deg {
        #[command(subcommand)]
        cmd: commands::DegCmd,
    },
    /// LLT polynomials of d-tuples.
    Llt {
        /// Tuple as JSON: [{"outer":[...],"inner":[...],"offset":n}, ...].
        #[arg(long)]
        tuple_json: Option<String>,
        /// d singleton boxes at content 0.
        #[arg(long)]
        singletons: Option<usize>,
        /// A single partition component at offset 0.
        #[arg(long)]
        partition: Option<String>,
        /// Expand into modified k-Schur functions with this k.
        #[arg(long)]
        expand_k: Option<usize>,
        #[arg(long, default_value_t = 9)]
        max_size: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Transformed Macdonald polynomials via the inv/maj formula.
    Macdonald {
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "both")]
        basis: String,
        #[arg(long, default_value_t = 9)]
        max_size: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Identity checks; exits 1 on any mismatch.
    Identities {
        /// Three-way staircase identity up to this m.
        #[arg(long)]
        staircase: Option<usize>,
        /// Macdonald-LLT decomposition for this mu.
        #[arg(long)]
        hag_llt: Option<String>,
        /// Bandwidth rule: s^(k) = s when bandwidth <= k.
        #[arg(long)]
        bandwidth: bool,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Flatten a core (or a starred strong tableau) by deleting a rod.
    Flatten {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rod: i64,
        #[arg(long)]
        lambda: Option<String>,
        /// SST as JSON {"n":..,"chain":[[...],...],"c_star":[...]}.
        #[arg(long)]
        sst_json: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Clone (or squash) a column of the n-rod abacus.
    Clone {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        index: i64,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        sst_json: Option<String>,
        /// Squash instead of clone.
        #[arg(long)]
        squash: bool,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::load(cli.config.as_deref(), cli.threads) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build_global()
        .ok();
    match run(cli, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes output to --out or stdout.
fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .context("writing stdout")
        }
    }
}

fn run(cli: Cli, cfg: &RunConfig) -> Result<ExitCode> {
    let fmt = |f: &FormatArg| f.format.unwrap_or(cfg.format);
    match cli.command {
        Command::Cores {
            lambda,
            n,
            k,
            format,
        } => {
            let text = commands::cores_info(&parse::partition(&lambda)?, n, k, fmt(&format))?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Poset { cmd } => {
            let text = commands::poset(cmd, cfg)?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sst {
            n,
            shape,
            inner,
            format,
        } => {
            let text = commands::sst_enum(
                &parse::partition(&shape)?,
                &parse::partition(&inner)?,
                n,
                fmt(&format),
            )?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kschur {
            k,
            lambda,
            modified,
            basis,
            format,
        } => {
            let text = commands::kschur_cmd(
                &parse::partition(&lambda)?,
                k,
                modified,
                &basis,
                fmt(&format),
            )?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Deg { cmd } => commands::deg(cmd, cfg, &cli.out),
        Command::Llt {
            tuple_json,
            singletons,
            partition,
            expand_k,
            max_size,
            format,
        } => {
            let shape = parse::tuple_shape(tuple_json, singletons, partition)?;
            let text = commands::llt_cmd(&shape, expand_k, max_size, fmt(&format))?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Macdonald {
            mu,
            basis,
            max_size,
            format,
        } => {
            let text =
                commands::macdonald_cmd(&parse::partition(&mu)?, &basis, max_size, fmt(&format))?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Identities {
            staircase,
            hag_llt,
            bandwidth,
            k,
            lambda,
        } => commands::identities(staircase, hag_llt, bandwidth, k, lambda),
        Command::Flatten {
            n,
            rod,
            lambda,
            sst_json,
            format,
        } => {
            let text = commands::flatten_cmd(n, rod, lambda, sst_json, fmt(&format))?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Clone {
            n,
            index,
            lambda,
            sst_json,
            squash,
            format,
        } => {
            let text = commands::clone_cmd(n, index, lambda, sst_json, squash, fmt(&format))?;
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Renders a quasisymmetric vector in the requested format.
pub(crate) fn render_qsym(f: &QSym, name: &str, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = f
                .terms()
                .iter()
                .map(|(sig, poly)| {
                    serde_json::json!({"key": sig.to_string(), "poly": poly})
                })
                .collect();
            out = serde_json::to_string_pretty(
                &serde_json::json!({"basis": "qsym", "degree": f.degree(), "terms": terms}),
            )? + "\n";
        }
        Format::Latex => {
            out.push_str(&format!("{name} ="));
            let mut first = true;
            for (sig, poly) in f.terms() {
                let coeff = poly.to_latex();
                let wrapped = if poly.coeffs().len() > 1 {
                    format!("({coeff})")
                } else if coeff == "1" {
                    String::new()
                } else {
                    coeff
                };
                out.push_str(if first { " " } else { " + " });
                first = false;
                if wrapped.is_empty() {
                    out.push_str(&format!("Q_{{{sig}}}"));
                } else {
                    out.push_str(&format!("{wrapped} Q_{{{sig}}}"));
                }
            }
            out.push('\n');
        }
        Format::Text | Format::Dot => {
            out.push_str(&format!("{name} (quasisymmetric basis):\n"));
            for (sig, poly) in f.terms() {
                out.push_str(&format!("  {sig}  {poly}\n"));
            }
        }
    }
    Ok(out)
}

/// Renders a Schur-basis vector in the requested format.
pub(crate) fn render_schur(
    f: &kschur_core::Schur,
    name: &str,
    format: Format,
) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = f
                .terms()
                .iter()
                .map(|(lam, poly)| serde_json::json!({"key": lam, "poly": poly}))
                .collect();
            out = serde_json::to_string_pretty(
                &serde_json::json!({"basis": "schur", "degree": f.degree(), "terms": terms}),
            )? + "\n";
        }
        Format::Latex => {
            out.push_str(&format!("{name} ="));
            let mut first = true;
            for (lam, poly) in f.terms() {
                let coeff = poly.to_latex();
                let wrapped = if poly.coeffs().len() > 1 {
                    format!("({coeff})")
                } else if coeff == "1" {
                    String::new()
                } else {
                    coeff
                };
                out.push_str(if first { " " } else { " + " });
                first = false;
                let parts: Vec<String> =
                    lam.parts().iter().map(|p| p.to_string()).collect();
                if wrapped.is_empty() {
                    out.push_str(&format!("s_{{({})}}", parts.join(",")));
                } else {
                    out.push_str(&format!("{wrapped} s_{{({})}}", parts.join(",")));
                }
            }
            out.push('\n');
        }
        Format::Text | Format::Dot => {
            out.push_str(&format!("{name} (Schur basis):\n"));
            for (lam, poly) in f.terms() {
                out.push_str(&format!("  {lam}  {poly}\n"));
            }
        }
    }
    Ok(out)
}

pub(crate) fn skew(outer: &Partition, inner: &Partition) -> Result<SkewShape> {
    SkewShape::new(outer.clone(), inner.clone()).map_err(|e| anyhow!(e))
}

pub(crate) fn require_core(lam: &Partition, n: usize) -> Result<()> {
    if !cores::is_n_core(lam, n) {
        bail!("{lam} is not a {n}-core");
    }
    Ok(())
}
