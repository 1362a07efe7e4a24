//! Command-line flags, the optional JSON config file, and their resolution into
//! a [`RunConfig`]. Flags win over the file; the file mirrors flag names.

use std::path::PathBuf;

use bethe_lab_core::bethe::default_order;
use bethe_lab_core::cm::TraceWord;
use bethe_lab_core::exact::ring::{parse_rational, parse_rational_list, rat};
use bethe_lab_core::gaudin::DEFAULT_RETRY_BUDGET;
use bethe_lab_core::seed::SeededRationals;
use bethe_lab_core::{GaudinConfig, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::checks::Check;
use crate::CliError;

pub const SEED_ENV: &str = "BETHE_LAB_SEED";

#[derive(Debug, Parser)]
#[command(name = "bethe-lab", version, about = "Exact Gaudin, Bethe algebra and Calogero-Moser computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the Gaudin Hamiltonians H_a.
    Hamiltonian(CommonArgs),
    /// Emit B_ij and Psi_ij from the row determinant.
    Bethe(CommonArgs),
    /// Build (Q, Z), run rank-one and Wronskian checks, emit the phi° table.
    Cm(CmArgs),
    /// Run verification checks; exit 0 iff all pass.
    Verify(VerifyArgs),
    /// Run the N = n = 2 example end to end.
    Example(CommonArgs),
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Default, Args)]
pub struct CommonArgs {
    /// Rank N of gl_N [default: length of --K, else 2].
    #[arg(long = "N", id = "N")]
    pub gl_n: Option<usize>,
    /// Number n of tensor factors [default: length of --z, else 2].
    #[arg(long = "n", id = "n")]
    pub sites: Option<usize>,
    /// K_1,…,K_N as p/q [default: seeded].
    #[arg(long = "K", id = "K", allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Distinct z_1,…,z_n as p/q [default: seeded].
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Truncation orders I,J (or a single value for both) [default: max(6, N+2)].
    #[arg(long)]
    pub orders: Option<String>,
    /// Seed for every random draw [default: $BETHE_LAB_SEED, else 0].
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSON file with the same fields as the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Include elapsed times in JSON output.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Default, Args)]
pub struct CmArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Scalar momenta h_1,…,h_n [default: seeded].
    #[arg(long, allow_hyphen_values = true, conflicts_with = "operator")]
    pub h: Option<String>,
    /// Use the Hamiltonians H_a as momenta.
    #[arg(long)]
    pub operator: bool,
}

#[derive(Debug, Default, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Checks to run, comma separated [default: all that apply].
    #[arg(long, value_delimiter = ',')]
    pub check: Vec<String>,
    /// Trace word for the polynomiality check [default: X^2].
    #[arg(long)]
    pub word: Option<String>,
    /// Per-variable degree bound for polynomiality [default: X-degree + 1].
    #[arg(long)]
    pub degree: Option<usize>,
    /// Attempts of the simple-spectrum search [default: 8].
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "N")]
    pub gl_n: Option<usize>,
    pub n: Option<usize>,
    #[serde(rename = "K")]
    pub k: Option<Vec<String>>,
    pub z: Option<Vec<String>>,
    pub orders: Option<[usize; 2]>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub timings: Option<bool>,
    pub h: Option<Vec<String>>,
    pub operator: Option<bool>,
    pub check: Option<Vec<String>>,
    pub word: Option<String>,
    pub degree: Option<usize>,
    pub budget: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &PathBuf) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("--config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("--config {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Hamiltonian,
    Bethe,
    Cm,
    Verify,
    Example,
}

/// How the momenta of the Calogero-Moser pair are chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum Momenta {
    Scalar(Vec<Rational>),
    Hamiltonians,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    pub gaudin: GaudinConfig,
    pub orders: (usize, usize),
    pub seed: u64,
    pub format: Format,
    pub timings: bool,
    /// Checks named explicitly, if any.
    pub checks: Option<Vec<Check>>,
    pub momenta: Momenta,
    /// Evaluation point `(u*, x*)` for the Wronskian check of `cm`.
    pub sample_point: (Rational, Rational),
    pub word: TraceWord,
    pub degree: Option<usize>,
    pub budget: usize,
}

fn rational_list(flag: &str, s: &str) -> Result<Vec<Rational>, CliError> {
    parse_rational_list(s).map_err(|e| CliError::Invalid(format!("invalid value for --{flag}: {e}")))
}

fn file_list(flag: &str, v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::Invalid(format!("invalid value for {flag} in --config: {e}"))))
        .collect()
}

fn parse_orders(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Invalid(format!("invalid value for --orders: {s:?} (expected I,J)"));
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        [i] => Ok((*i, *i)),
        [i, j] => Ok((*i, *j)),
        _ => Err(bad()),
    }
}

fn seed_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Invalid(format!("invalid value for {SEED_ENV}: {v:?}"))),
        Err(_) => Ok(None),
    }
}

/// `n` from the flag, else from the list, else the default; mismatches are errors.
fn size(flag: &str, list_flag: &str, given: Option<usize>, list: Option<&Vec<Rational>>, default: usize) -> Result<usize, CliError> {
    match (given, list) {
        (Some(n), Some(l)) if l.len() != n => Err(CliError::Invalid(format!(
            "--{list_flag} has {} values but --{flag} is {n}",
            l.len()
        ))),
        (Some(n), _) => Ok(n),
        (None, Some(l)) => Ok(l.len()),
        (None, None) => Ok(default),
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        match cli.command {
            Command::Hamiltonian(c) => Self::resolve(Mode::Hamiltonian, c, None, None),
            Command::Bethe(c) => Self::resolve(Mode::Bethe, c, None, None),
            Command::Cm(c) => Self::resolve(Mode::Cm, c.common, Some((c.h, c.operator)), None),
            Command::Verify(v) => {
                let extra = (v.check, v.word, v.degree, v.budget);
                Self::resolve(Mode::Verify, v.common, None, Some(extra))
            }
            Command::Example(c) => Self::resolve(Mode::Example, c, None, None),
        }
    }

    #[allow(clippy::type_complexity)]
    fn resolve(
        mode: Mode,
        args: CommonArgs,
        cm: Option<(Option<String>, bool)>,
        verify: Option<(Vec<String>, Option<String>, Option<usize>, Option<usize>)>,
    ) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let seed = match args.seed.or(file.seed) {
            Some(s) => s,
            None => seed_from_env()?.unwrap_or(0),
        };
        let k = match (&args.k, &file.k) {
            (Some(s), _) => Some(rational_list("K", s)?),
            (None, Some(v)) => Some(file_list("K", v)?),
            (None, None) => None,
        };
        let z = match (&args.z, &file.z) {
            (Some(s), _) => Some(rational_list("z", s)?),
            (None, Some(v)) => Some(file_list("z", v)?),
            (None, None) => None,
        };
        let gl_n = size("N", "K", args.gl_n.or(file.gl_n), k.as_ref(), 2)?;
        let sites = size("n", "z", args.sites.or(file.n), z.as_ref(), 2)?;
        if mode == Mode::Example && (gl_n != 2 || sites != 2) {
            return Err(CliError::Invalid("the example needs --N 2 --n 2".into()));
        }
        let mut rng = SeededRationals::new(seed);
        let k = match k {
            Some(k) => k,
            None if mode == Mode::Example => vec![rat(0), rat(1)],
            None => rng.distinct(gl_n),
        };
        let z = match z {
            Some(z) => z,
            None if mode == Mode::Example => vec![rat(0), rat(1)],
            None => rng.distinct(sites),
        };
        let flag_for = |e: &bethe_lab_core::Error| match e {
            bethe_lab_core::Error::CoincidentPoints => "--z",
            _ => "--N/--n",
        };
        let gaudin = GaudinConfig::new(gl_n, sites, k, z)
            .map_err(|e| CliError::Invalid(format!("invalid {}: {e}", flag_for(&e))))?;
        let orders = match (&args.orders, file.orders) {
            (Some(s), _) => parse_orders(s)?,
            (None, Some([i, j])) => (i, j),
            (None, None) => (default_order(gl_n), default_order(gl_n)),
        };
        if orders.0 == 0 || orders.1 == 0 {
            return Err(CliError::Invalid("invalid value for --orders: orders must be positive".into()));
        }
        let (h_flag, operator) = cm.unwrap_or((None, false));
        let operator = operator || file.operator.unwrap_or(false);
        let momenta = if operator {
            Momenta::Hamiltonians
        } else {
            let h = match (h_flag, &file.h) {
                (Some(s), _) => Some(rational_list("h", &s)?),
                (None, Some(v)) => Some(file_list("h", v)?),
                (None, None) => None,
            };
            match h {
                Some(h) if h.len() != sites => {
                    return Err(CliError::Invalid(format!("--h has {} values but --n is {sites}", h.len())))
                }
                Some(h) => Momenta::Scalar(h),
                None => Momenta::Scalar(rng.rationals(sites)),
            }
        };
        let sample_point = (rng.avoiding(gaudin.z()), rng.next_rational());
        let (check, word, degree, budget) = verify.unwrap_or_default();
        let check = if check.is_empty() { file.check.unwrap_or_default() } else { check };
        let checks = if check.is_empty() {
            None
        } else {
            Some(
                check
                    .iter()
                    .map(|c| Check::parse(c).ok_or_else(|| CliError::Invalid(format!("invalid value for --check: unknown check {c:?}"))))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        };
        let word = word.or(file.word).unwrap_or_else(|| "X^2".into());
        let word = TraceWord::parse(&word).map_err(|e| CliError::Invalid(format!("invalid value for --word: {e}")))?;
        Ok(Self {
            mode,
            gaudin,
            orders,
            seed,
            format: args.format.or(file.format).unwrap_or_default(),
            timings: args.timings || file.timings.unwrap_or(false),
            checks,
            momenta,
            sample_point,
            word,
            degree: degree.or(file.degree),
            budget: budget.or(file.budget).unwrap_or(DEFAULT_RETRY_BUDGET),
        })
    }
}
