//! The `cgl` command line: builds, spectra, certificates, analyses and sweeps.
//!
//! Exit codes: 0 when everything passes, 1 for a mathematical or hypothesis
//! failure, 2 for malformed input.

mod commands;
mod sweep;

use cgl_core::io::RunConfig;
use cgl_core::Error;
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cgl",
    version,
    about = "Cayley graph variants: spectra and certificates"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalOpts {
    /// Output file (a directory for `sweep`); stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for `sweep`.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Single worker, reproducible output.
    #[arg(long, global = true)]
    pub deterministic: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from a family string and write its JSON.
    Build { family: String },
    /// Eigenvalues of a graph (JSON path or family string) as CSV.
    Spectrum { graph: String },
    /// Spectral certificates: Ramanujan, pairing, isospectrality, dichotomy.
    #[command(subcommand)]
    Certify(CertifyKind),
    /// Combinatorial analyses: diameter, Cheeger, walks, fingerprints.
    #[command(subcommand)]
    Analyze(AnalyzeKind),
    /// Run the jobs of a JSON manifest and write a summary.
    Sweep { manifest: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum CertifyKind {
    /// Nontrivial eigenvalues within 2 sqrt(d - 1).
    Ramanujan {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Spectral pairing between variants i and j of `<group>/<set>/<sigma>`.
    Pairing {
        instance: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// H-isospectrality of a family of twists.
    HIsospectral {
        /// Gabber-Galil modulus; use with --klein.
        #[arg(long)]
        gg: Option<u32>,
        /// signs, swaps, swap-neg or negswap-neg.
        #[arg(long)]
        klein: Option<String>,
        /// `<group>/<set>`, twisted by the automorphisms given with --sigma.
        #[arg(long)]
        instance: Option<String>,
        #[arg(long = "sigma")]
        sigmas: Vec<String>,
        /// `k,n` for the permutation construction.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Symmetric-subset size against twist isospectrality.
    Dichotomy {
        /// `<group>/<set>`.
        instance: String,
        #[arg(long = "sigma", required = true)]
        sigmas: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum AnalyzeKind {
    /// Diameter; with two graphs also the factor-2 relation.
    Diameter {
        #[arg(required = true, num_args = 1..=2)]
        graphs: Vec<String>,
        /// Also check the abelian lower bound (generic family strings only).
        #[arg(long)]
        abelian_bound: bool,
    },
    /// Exact Cheeger constant with the interval and sandwich checks.
    Cheeger {
        graph: String,
        #[arg(long, default_value = "vertex")]
        mode: String,
    },
    /// Diagonal loop count and loop vertices.
    Loops {
        graph: String,
    },
    /// Closed-walk incidence; `--counting n,r` adds the factorial bounds.
    Walks {
        graph: String,
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long)]
        counting: Option<String>,
    },
    /// Isomorphism-invariant fingerprint; two graphs are also compared.
    Fingerprint {
        #[arg(required = true, num_args = 1..=2)]
        graphs: Vec<String>,
    },
    /// Left-multiplication automorphisms of `<group>/<set>/<sigma>`.
    Gssigma {
        instance: String,
    },
    /// Isotypic dimensions and m counts for S_n or A_n.
    Uniformity {
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Comma-separated degrees or a range `a..b` (inclusive).
        #[arg(long)]
        n: String,
        #[arg(long)]
        alternating: bool,
    },
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    /// Primary output: JSON or CSV.
    pub output: Option<String>,
    /// Where `output` goes; `None` means stdout.
    pub out_path: Option<PathBuf>,
    /// Diagnostics for stderr.
    pub message: Option<String>,
    pub extension: &'static str,
}

impl Outcome {
    pub fn from_error(e: &Error) -> Self {
        Outcome {
            code: if e.is_usage() { EXIT_USAGE } else { EXIT_FAIL },
            message: Some(format!("error: {e}")),
            ..Default::default()
        }
    }
}

pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            Outcome {
                code,
                message: Some(e.to_string()),
                ..Default::default()
            }
        }
    }
}

pub fn resolve_config(g: &GlobalOpts) -> cgl_core::Result<RunConfig> {
    let mut cfg = match &g.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(w) = g.workers {
        cfg.workers = w;
    }
    if g.deterministic {
        cfg.deterministic = true;
        cfg.workers = 1;
    }
    if let Some(out) = &g.out {
        cfg.out_dir = out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn run(cli: Cli) -> Outcome {
    let cfg = match resolve_config(&cli.global) {
        Ok(c) => c,
        Err(e) => return Outcome::from_error(&e),
    };
    match cli.command {
        Command::Sweep { manifest } => sweep::run_sweep(&manifest, &cfg),
        other => {
            let mut o = commands::execute(other, &cfg);
            o.out_path = cli.global.out;
            o
        }
    }
}
