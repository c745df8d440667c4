//! Command-line interface: `partition`, `whittaker` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::lattice::{partition_function, SystemSpec, Variant};
use crate::verify::{self, Bounds, Suite};
use crate::weyl::Permutation;
use crate::whittaker;

#[derive(Parser, Debug)]
#[command(name = "metahori", version, about = "Metaplectic Iwahori Whittaker functions and their lattice models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Monochrome,
    ColorFused,
    FullyFused,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Monochrome => Variant::Monochrome,
            VariantArg::ColorFused => Variant::ColorFused,
            VariantArg::FullyFused => Variant::FullyFused,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition function of the system S_{mu,theta,w}.
    Partition {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: usize,
        /// Top boundary, comma-separated nonnegative integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Left boundary residues mod n, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Weyl group element: "e", a word "s1 s2", or one-line "2 1 3".
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value = "monochrome")]
        variant: VariantArg,
        /// Number of blocks N (defaults to the minimum).
        #[arg(long)]
        blocks: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Iwahori Whittaker value phi_{theta,w}(z; ϖ^{-lambda} w').
    Whittaker {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long = "w-prime")]
        w_prime: String,
        #[arg(long)]
        w: String,
        /// A single component; omit together with --all for the full vector.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "all")]
        theta: Option<String>,
        /// Print every nonzero component.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "max-n", default_value_t = 2)]
        max_n: u32,
        #[arg(long = "max-r", default_value_t = 2)]
        max_r: usize,
        #[arg(long = "max-mu", default_value_t = 2)]
        max_mu: i32,
        /// Randomized numeric samples (ybe-aux, ybe-rrr).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parse comma-separated integers.
pub fn parse_ints(s: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(|x| x.trim().parse::<i32>().map_err(|_| Error::Parse(format!("not an integer list: {s:?}"))))
        .collect()
}

fn parse_vec(name: &str, s: &str, r: usize) -> Result<Vec<i32>> {
    let v = parse_ints(s)?;
    if v.len() != r {
        return Err(Error::Invalid(format!("--{name} has {} entries, expected r = {r}", v.len())));
    }
    Ok(v)
}

fn parse_theta(s: &str, n: u32, r: usize) -> Result<Vec<u32>> {
    Ok(parse_vec("theta", s, r)?.into_iter().map(|t| t.rem_euclid(n as i32) as u32).collect())
}

fn check_n_r(n: u32, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::Invalid("--n and --r must be positive".into()));
    }
    Ok(())
}

/// Outcome of a command: text to print and the exit code.
struct Outcome {
    text: String,
    code: i32,
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Partition { n, r, mu, theta, w, variant, blocks, format } => {
            check_n_r(n, r)?;
            let mu = parse_vec("mu", &mu, r)?;
            let theta = parse_theta(&theta, n, r)?;
            let w = Permutation::parse(r, &w)?;
            let mut spec = SystemSpec::new(n, mu, theta, w)?.with_variant(variant.into());
            if let Some(b) = blocks {
                spec = spec.with_blocks(b)?;
            }
            let z = partition_function(&spec);
            let text = match format {
                Format::Text => z.to_string(),
                Format::Json => z.to_json().to_string(),
            };
            Ok(Outcome { text, code: 0 })
        }
        Command::Whittaker { n, r, lambda, w_prime, w, theta, all, format } => {
            check_n_r(n, r)?;
            let lambda = parse_vec("lambda", &lambda, r)?;
            let w_prime = Permutation::parse(r, &w_prime)?;
            let w = Permutation::parse(r, &w)?;
            let phi = whittaker::evaluate_vector(n, &w, &lambda, &w_prime)?;
            let text = match (theta, all) {
                (Some(t), _) => {
                    let p = phi.component(&parse_theta(&t, n, r)?);
                    match format {
                        Format::Text => p.to_string(),
                        Format::Json => p.to_json().to_string(),
                    }
                }
                (None, true) => match format {
                    Format::Text => phi.to_string(),
                    Format::Json => phi.to_json().to_string(),
                },
                (None, false) => return Err(Error::Invalid("whittaker needs --theta or --all".into())),
            };
            Ok(Outcome { text, code: 0 })
        }
        Command::Verify { suite, max_n, max_r, max_mu, samples, seed, format } => {
            let suite: Suite = suite.parse()?;
            if max_n == 0 || max_r == 0 || max_mu < 0 {
                return Err(Error::Invalid("--max-n and --max-r must be positive, --max-mu nonnegative".into()));
            }
            verify::init_workers()?;
            let report = verify::run(suite, &Bounds { max_n, max_r, max_mu, samples, seed });
            let code = if report.passed() { 0 } else { 1 };
            let text = match format {
                Format::Json => report.to_json().to_string(),
                Format::Text => {
                    let mut lines = vec![format!(
                        "{suite}: {} checked, {} failures: {}",
                        report.checked,
                        report.failures.len(),
                        if report.passed() { "PASS" } else { "FAIL" }
                    )];
                    for f in &report.failures {
                        lines.push(format!("  {}: lhs = {}, rhs = {}", f.boundary, f.lhs, f.rhs));
                    }
                    lines.join("\n")
                }
            };
            Ok(Outcome { text, code })
        }
    }
}

/// Run the CLI on `args`, writing to `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text);
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
