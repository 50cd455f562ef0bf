//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 no-solution/undefined, 2 usage or parse
//! errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use modinv::crt::{parse_congruence_file, solve_general, solve_general_parallel, CrtError};
use modinv::dayan::{
    self, ext_mod_inverse_with_trace, DayanError, ExtInverseOutcome, SignStrategy,
};
use modinv::modmath::{self, ModInverseOutcome, Sign};
use modinv::oracle;
use modinv::render::{render_trace, TraceFormat};

#[derive(Parser)]
#[command(
    name = "modinv",
    version,
    about = "Sign-aware modular inverses, generalized division traces, and Chinese Remainder solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Floor modulo: a - m*floor(a/m); the sign follows m
    Mod {
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        #[arg(allow_negative_numbers = true)]
        m: BigInt,
    },
    /// Modular inverse of a modulo m
    Inv {
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        #[arg(allow_negative_numbers = true)]
        m: BigInt,
    },
    /// Extended modular inverse: the canonical solution of a*x = b (mod m)
    Extinv {
        #[arg(allow_negative_numbers = true)]
        b: BigInt,
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        #[arg(allow_negative_numbers = true)]
        m: BigInt,
        /// all-plus | all-minus | least-abs | explicit:-1,+1,...
        #[arg(long, default_value = "all-plus")]
        strategy: SignStrategy,
        /// Print the division trace before the value
        #[arg(long)]
        trace: bool,
        /// tsv | markdown | json (json embeds the value)
        #[arg(long, default_value = "tsv")]
        format: TraceFormat,
    },
    /// Solve a congruence system read from a file (one "a mod m" per line)
    Crt {
        file: PathBuf,
        /// Run each reduction round's merges on a thread pool
        #[arg(long)]
        parallel: bool,
    },
    /// Ordinary inverse of q modulo p via the series formulas
    Series {
        p: BigInt,
        q: BigInt,
        /// 1 = alternating-sign remainders, 2 = all-positive remainders
        #[arg(long = "type", default_value_t = 1)]
        kind: u8,
        /// Fold term pairs into quotient terms
        #[arg(long)]
        condensed: bool,
        /// Demo mode: evaluate in f64 and round (exact otherwise)
        #[arg(long)]
        float: bool,
    },
    /// Division-step comparison of extended Euclid vs the trace strategies
    Bench {
        #[arg(long, default_value_t = 1000)]
        max_p: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

enum Failure {
    /// Mathematically undefined or unsolvable: exit 1.
    Unsolvable(String),
    /// Bad arguments or unreadable input: exit 2.
    Usage(String),
}

impl From<DayanError> for Failure {
    fn from(e: DayanError) -> Self {
        match e {
            DayanError::NoSolution { .. } | DayanError::NotCoprime { .. } => {
                Failure::Unsolvable(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CrtError> for Failure {
    fn from(e: CrtError) -> Self {
        match e {
            CrtError::Incompatible { .. } | CrtError::ModuliNotCoprime { .. } => {
                Failure::Unsolvable(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unsolvable(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Mod { a, m } => {
            let r = modmath::floor_mod(&a, &m).map_err(|e| Failure::Unsolvable(e.to_string()))?;
            println!("{r}");
        }
        Command::Inv { a, m } => match modmath::mod_inverse(&a, &m) {
            ModInverseOutcome::Defined(x) => println!("{x}"),
            ModInverseOutcome::UndefinedNotCoprime { gcd } => {
                return Err(Failure::Unsolvable(format!("not coprime, gcd={gcd}")));
            }
            ModInverseOutcome::UndefinedZeroModulus => {
                return Err(Failure::Unsolvable("undefined: a*m = 0".into()));
            }
        },
        Command::Extinv {
            b,
            a,
            m,
            strategy,
            trace,
            format,
        } => {
            let (outcome, trace_data) = ext_mod_inverse_with_trace(&b, &a, &m, &strategy)?;
            if trace {
                match &trace_data {
                    Some(t) => print!("{}", render_trace(t, format)),
                    None => eprintln!("note: a = 0 (mod m), no division trace"),
                }
            }
            match outcome {
                ExtInverseOutcome::Defined {
                    value,
                    reduced_modulus,
                    gcd,
                } => {
                    // The json document already embeds the value.
                    if !(trace && format == TraceFormat::Json) {
                        if gcd > BigInt::from(1) {
                            println!("{value} (mod {reduced_modulus}), gcd={gcd}");
                        } else {
                            println!("{value}");
                        }
                    }
                }
                ExtInverseOutcome::NoSolution { gcd } => {
                    return Err(Failure::Unsolvable(format!(
                        "no solution: gcd={gcd} does not divide {b}"
                    )));
                }
            }
        }
        Command::Crt { file, parallel } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let system = parse_congruence_file(&text)?;
            let solution = if parallel {
                solve_general_parallel(&system)?
            } else {
                solve_general(&system)?
            };
            println!("{solution}");
        }
        Command::Series {
            p,
            q,
            kind,
            condensed,
            float,
        } => {
            if kind != 1 && kind != 2 {
                return Err(Failure::Usage(format!("--type must be 1 or 2, got {kind}")));
            }
            if float {
                let (value, residual) = series_float(&p, &q, kind, condensed)?;
                if residual > 0.25 {
                    eprintln!(
                        "warning: float residual {residual:.3} exceeds 0.25; \
                         result unreliable at this magnitude, use exact mode"
                    );
                }
                println!("{value}");
            } else if kind == 1 && !condensed {
                let s = dayan::inverse_series_first_type(&p, &q)?;
                if s.raw.is_negative() {
                    println!("{} (raw {} + {p})", s.value, s.raw);
                } else {
                    println!("{}", s.value);
                }
            } else if kind == 1 {
                println!("{}", dayan::inverse_series_first_type_condensed(&p, &q)?);
            } else {
                println!("{}", dayan::inverse_series_second_type(&p, &q, condensed)?);
            }
        }
        Command::Bench {
            max_p,
            samples,
            out,
            seed,
        } => {
            let report = oracle::compare_steps(max_p, samples, seed)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let file = fs::File::create(&out)
                .map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            report
                .write_csv(file)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            println!("wrote {} ({} rows)", out.display(), report.rows.len());
            for (name, algorithm) in [
                ("euclid", oracle::Algorithm::ExtendedEuclid),
                ("dayan-plus", oracle::Algorithm::DayanAllPlus),
                ("dayan-minus", oracle::Algorithm::DayanAllMinus),
                ("dayan-least-abs", oracle::Algorithm::DayanLeastAbs),
            ] {
                println!("mean {name} steps: {:.3}", report.mean(algorithm));
            }
        }
    }
    Ok(())
}

/// Float demo evaluation of the series formulas. Returns the rounded
/// value and the pre-rounding residual; useful only while the terms
/// stay within f64 granularity.
fn series_float(p: &BigInt, q: &BigInt, kind: u8, condensed: bool) -> Result<(BigInt, f64), Failure> {
    let sign = if kind == 1 { Sign::Plus } else { Sign::Minus };
    let chain = dayan::remainder_chain(p, q, sign)?;
    let n = chain.last_index();
    let p_f = p.to_f64().unwrap_or(f64::INFINITY);
    let as_f = |v: &BigInt| v.to_f64().unwrap_or(f64::INFINITY);
    let rs = &chain.remainders;
    let cs = &chain.quotients;
    let mut total = 0.0f64;
    if condensed {
        for j in 0..=(n - 1) / 2 {
            let term = p_f * as_f(&cs[2 * j]) / (as_f(&rs[2 * j]) * as_f(&rs[2 * j + 2]));
            total += if kind == 1 { -term } else { term };
        }
        if n % 2 == 0 {
            total += p_f / as_f(&rs[n]);
        } else if kind == 1 {
            total += p_f;
        }
    } else {
        for i in 0..=n {
            let term = p_f / (as_f(&rs[i]) * as_f(&rs[i + 1]));
            total += if kind == 1 && i % 2 == 1 { -term } else { term };
        }
        if kind == 1 && n % 2 == 1 {
            total += p_f;
        }
    }
    if !total.is_finite() {
        return Err(Failure::Usage(
            "inputs overflow the float demo mode; use exact mode".into(),
        ));
    }
    let rounded = total.round();
    Ok((BigInt::from(rounded as i128), (total - rounded).abs()))
}
