//! Command-line front end for `nczeta`.
//!
//! [`run`] takes the argument list and returns the exit code together with
//! the text destined for stdout and stderr, so the whole surface can be
//! tested without spawning a process.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nczeta::cyclic::DEFAULT_ENUMERATION_GUARD;
use nczeta::guess::GUESS_MARGIN;
use nczeta::matrix::{DEFAULT_ORACLE_GUARD, DEFAULT_TERM_CEILING};
use nczeta::{
    euler_product, guess_annihilator, parse_matrix, solve_truncated, AlgebraMatrix,
    BivariatePolynomial, Error, ErrorKind, ExampleId, ProperSystem, SequenceOptions,
    TruncatedSeries,
};
use num::Zero;

mod selfcheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "nczeta",
    version,
    about = "Exact zeta functions of matrices over free group algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print `n: a_n` for n = 1..=N.
    An {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        seq: SeqArgs,
        /// Cross-check every a_n with n up to the oracle guard by brute force.
        #[arg(long)]
        check_oracle: bool,
        /// Longest n the brute-force oracle is allowed to handle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_GUARD)]
        oracle_guard: usize,
    },
    /// Print the generating series g_M = Σ a_n tⁿ to order N.
    G {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Print P_M = exp(Σ a_n tⁿ/n) to order N.
    Zeta {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Print the Euler product over Lyndon words to order L and compare it with `zeta`.
    Euler {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        seq: SeqArgs,
        /// Longest Lyndon word.
        #[arg(long, default_value_t = 6)]
        lyndon: usize,
        /// Largest alphabet-size^L the enumeration may visit.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_GUARD)]
        enum_guard: u128,
    },
    /// Search for the smallest annihilating polynomial of P_M or g_M.
    Guess {
        #[command(flatten)]
        input: Input,
        /// Series order; defaults to the minimum the bounds require.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        no_prune: bool,
        #[arg(long, default_value_t = DEFAULT_TERM_CEILING)]
        max_terms: usize,
        #[arg(long, value_enum, default_value_t = Target::P)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        degt: usize,
        #[arg(long, default_value_t = 3)]
        degy: usize,
    },
    /// Check that a polynomial in t and y annihilates P_M or g_M to order N.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, value_enum, default_value_t = Target::P)]
        target: Target,
        /// The polynomial as a sum of `c*t^i*y^j` terms, e.g. "2 y^2 - y + t^2".
        #[arg(long)]
        poly: String,
    },
    /// Print a built-in matrix in the matrix file format.
    Builtin {
        /// kontsevich:<n>, paper2x2 or paperdxd:<d>
        name: String,
    },
    /// Print the truncated solution of a proper system.
    Solve {
        /// System file: one `var = monomial + …` line per variable.
        file: PathBuf,
        /// Longest word kept.
        #[arg(long, default_value_t = 6)]
        length: usize,
    },
    /// Run the invariant suite on built-ins and seeded random matrices.
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random matrices per check.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Matrix file.
    #[arg(conflicts_with = "builtin", required_unless_present = "builtin")]
    file: Option<PathBuf>,
    /// Use a built-in matrix instead of a file.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
struct SeqArgs {
    /// Truncation order N.
    #[arg(long, default_value_t = 10)]
    order: usize,
    /// Multiply without dropping terms that cannot return to the identity.
    #[arg(long)]
    no_prune: bool,
    /// Largest number of terms an entry of Mᵏ may hold.
    #[arg(long, default_value_t = DEFAULT_TERM_CEILING)]
    max_terms: usize,
}

impl SeqArgs {
    fn options(&self) -> SequenceOptions {
        SequenceOptions {
            prune: !self.no_prune,
            term_ceiling: self.max_terms,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    P,
    G,
}

/// Everything that can end a command early.
enum Failure {
    Lib(Error),
    /// A check ran and came out negative.
    Verdict,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_VALIDATION,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    let mut err = String::new();
    let code = match execute(cli.command, &mut out, &mut err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verdict) => EXIT_VALIDATION,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_VALIDATION
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e.kind() {
                ErrorKind::Parse => EXIT_PARSE,
                ErrorKind::Validation => EXIT_VALIDATION,
                ErrorKind::Resource => EXIT_RESOURCE,
            }
        }
    };
    Outcome {
        code,
        stdout: out,
        stderr: err,
    }
}

fn load(input: &Input) -> Result<AlgebraMatrix, Failure> {
    if let Some(name) = &input.builtin {
        return Ok(name.parse::<ExampleId>()?.build()?);
    }
    let path = input
        .file
        .as_ref()
        .expect("clap enforces file or --builtin");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_matrix(&text)?.matrix)
}

fn counts(m: &AlgebraMatrix, seq: &SeqArgs) -> Result<Vec<nczeta::BigInt>, Failure> {
    Ok(m.a_sequence(seq.order, seq.options())?)
}

fn target_series(
    m: &AlgebraMatrix,
    order: usize,
    opts: SequenceOptions,
    target: Target,
) -> Result<TruncatedSeries, Failure> {
    let a = m.a_sequence(order, opts)?;
    Ok(match target {
        Target::P => TruncatedSeries::zeta_from_counts(&a),
        Target::G => TruncatedSeries::generating_from_counts(&a),
    })
}

fn execute(cmd: Command, out: &mut String, err: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::An {
            input,
            seq,
            check_oracle,
            oracle_guard,
        } => {
            let m = load(&input)?;
            let a = counts(&m, &seq)?;
            if check_oracle {
                let upto = seq.order.min(oracle_guard);
                for n in 1..=upto {
                    let o = m.a_n_oracle(n, oracle_guard)?;
                    if o != a[n - 1] {
                        let _ = writeln!(err, "oracle disagrees at n = {n}: {o} vs {}", a[n - 1]);
                        return Err(Failure::Verdict);
                    }
                }
                let _ = writeln!(err, "oracle agrees for n <= {upto}");
            }
            for (k, x) in a.iter().enumerate() {
                let _ = writeln!(out, "{}: {x}", k + 1);
            }
        }
        Command::G { input, seq } => {
            let m = load(&input)?;
            let g = TruncatedSeries::generating_from_counts(&counts(&m, &seq)?);
            let _ = write!(out, "{g}");
        }
        Command::Zeta { input, seq } => {
            let m = load(&input)?;
            let p = TruncatedSeries::zeta_from_counts(&counts(&m, &seq)?);
            let _ = write!(out, "{p}");
        }
        Command::Euler {
            input,
            seq,
            lyndon,
            enum_guard,
        } => {
            let m = load(&input)?;
            let e = euler_product(&m, lyndon, enum_guard)?;
            let a = m.a_sequence(lyndon, seq.options())?;
            let p = TruncatedSeries::zeta_from_counts(&a);
            let _ = write!(out, "{e}");
            if e == p {
                let _ = writeln!(out, "EQUAL to order {lyndon}");
            } else {
                let k = (0..=lyndon)
                    .find(|&k| e.coeff(k) != p.coeff(k))
                    .unwrap_or(0);
                let _ = writeln!(out, "DIFFERENT at order {k}");
                return Err(Failure::Verdict);
            }
        }
        Command::Guess {
            input,
            order,
            no_prune,
            max_terms,
            target,
            degt,
            degy,
        } => {
            let m = load(&input)?;
            let order = order.unwrap_or((degt + 1) * (degy + 1) + GUESS_MARGIN);
            let opts = SequenceOptions {
                prune: !no_prune,
                term_ceiling: max_terms,
            };
            let f = target_series(&m, order, opts, target)?;
            match guess_annihilator(&f, degt, degy)? {
                Some(poly) => {
                    let _ = writeln!(out, "{poly}");
                }
                None => {
                    let _ = writeln!(out, "none");
                }
            }
        }
        Command::Verify {
            input,
            seq,
            target,
            poly,
        } => {
            let poly = BivariatePolynomial::parse(&poly)?;
            let m = load(&input)?;
            let f = target_series(&m, seq.order, seq.options(), target)?;
            let residue = poly.evaluate_at_series(&f);
            match (0..=seq.order).find(|&k| !residue.coeff(k).is_zero()) {
                None => {
                    let _ = writeln!(out, "ANNIHILATES to order {}", seq.order);
                }
                Some(k) => {
                    let _ = writeln!(out, "FAILS at order {k}: coefficient {}", residue.coeff(k));
                    return Err(Failure::Verdict);
                }
            }
        }
        Command::Builtin { name } => {
            let id: ExampleId = name.parse()?;
            let gens = id.generators()?;
            let m = id.build()?;
            let _ = write!(out, "{}", m.display(&gens));
        }
        Command::Solve { file, length } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure::Io(format!("cannot read {}: {e}", file.display())))?;
            let sys = ProperSystem::parse(&text)?;
            let sol = solve_truncated(&sys, length)?;
            for (i, s) in sol.iter().enumerate() {
                let _ = writeln!(out, "xi{}:", i + 1);
                let _ = write!(out, "{}", s.display(sys.alphabet()));
            }
        }
        Command::Selfcheck { seed, samples } => {
            if !selfcheck::run(seed, samples, out) {
                return Err(Failure::Verdict);
            }
        }
    }
    Ok(())
}
