//! `anth`: exact anthyphairetic expansions from the command line.
//!
//! Exit codes: 0 success, 1 usage error or failed sweep, 2 domain error,
//! 3 step budget exceeded.

use std::process::ExitCode;

use anth::output::{self, OutputRecord};
use anthyphairesis::{
    anth_integers, anth_surd_logos, default_max_steps, isqrt, theodorus_batch, verify_palindrome,
    BigInt, Error, SurdContext,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "anth",
    version,
    about = "Exact anthyphairetic (continued-fraction) expansions of integer pairs and square roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand sqrt(N): division trace, period and logos witness
    Expand {
        /// Radicand, at least 2 and not a perfect square
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
        /// Render exactly this many division steps (the trace is extended
        /// past the witness, or truncated, as needed)
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Step budget for period detection; default 10*isqrt(N)*digits(N),
        /// at least 64
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// List convergents p/q of sqrt(N) with Pell residues p^2 - N*q^2
    Convergents {
        /// Radicand, at least 2 and not a perfect square
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Step budget override for period detection
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Check palindromic periodicity of sqrt(N) for all non-squares up to a bound
    Palindrome {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_n: u64,
    },
    /// Expansions of sqrt(N) for the non-squares N = 2..17
    Theodorus,
    /// Divide an integer pair to its gcd, listing the quotients
    Gcd {
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        #[arg(allow_negative_numbers = true)]
        b: BigInt,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Write to stdout, exiting quietly if the reader closed the pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
        .is_err()
    {
        std::process::exit(0);
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Expand {
            n,
            steps,
            format,
            max_steps,
        } => cmd_expand(n, steps, format, max_steps),
        Command::Convergents {
            n,
            count,
            max_steps,
        } => cmd_convergents(n, count as usize, max_steps),
        Command::Palindrome { max_n } => cmd_palindrome(max_n),
        Command::Theodorus => cmd_theodorus(),
        Command::Gcd { a, b } => cmd_gcd(&a, &b),
    }
}

fn cmd_expand(
    n: BigInt,
    steps: Option<usize>,
    format: Format,
    max_steps: Option<usize>,
) -> Result<ExitCode, Error> {
    let ctx = SurdContext::new(n)?;
    let budget = max_steps.unwrap_or_else(|| default_max_steps(ctx.radicand()));
    let mut run = anth_surd_logos(&ctx, budget)?;
    if let Some(steps) = steps {
        if steps > run.quotients().len() {
            run.extend_trace(steps)?;
        }
    }
    match format {
        Format::Table => {
            let shown = steps.unwrap_or_else(|| run.quotients().len());
            emit(&output::render_expand_table(&run, shown));
        }
        Format::Json => {
            let record = OutputRecord::from_run(&run);
            let mut line = serde_json::to_string(&record).expect("record serializes");
            line.push('\n');
            emit(&line);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_convergents(n: BigInt, count: usize, max_steps: Option<usize>) -> Result<ExitCode, Error> {
    let ctx = SurdContext::new(n)?;
    let budget = max_steps.unwrap_or_else(|| default_max_steps(ctx.radicand()));
    let exp = anth_surd_logos(&ctx, budget)?.into_expansion();
    emit(&output::render_convergents(&ctx, &exp, count));
    Ok(ExitCode::SUCCESS)
}

fn cmd_palindrome(max_n: u64) -> Result<ExitCode, Error> {
    let radicands: Vec<u64> = (2..=max_n)
        .filter(|&n| {
            let n = BigInt::from(n);
            let root = isqrt(&n).expect("candidates are positive");
            &root * &root != n
        })
        .collect();
    // embarrassingly parallel; results are collected back in ascending order
    let reports: Vec<_> = radicands
        .par_iter()
        .map(|&n| verify_palindrome(&BigInt::from(n)).expect("radicand is a non-square"))
        .collect();
    let mut out = String::new();
    let mut failures = 0usize;
    for report in &reports {
        if !report.holds {
            failures += 1;
            out.push_str(&format!(
                "{}: period ({}) inner_palindrome={} last_is_double={}\n",
                report.n,
                report
                    .period
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                report.inner_palindrome,
                report.last_is_double,
            ));
        }
    }
    if failures == 0 {
        out.push_str(&format!(
            "checked {} non-squares, all hold\n",
            reports.len()
        ));
        emit(&out);
        Ok(ExitCode::SUCCESS)
    } else {
        out.push_str(&format!(
            "checked {} non-squares, {failures} failed\n",
            reports.len()
        ));
        emit(&out);
        Ok(ExitCode::from(1))
    }
}

fn cmd_theodorus() -> Result<ExitCode, Error> {
    let mut out = String::new();
    for (n, exp) in theodorus_batch() {
        let (i, j) = exp
            .witness()
            .expect("batch expansions carry witnesses")
            .indices();
        out.push_str(&format!("{n}: {exp} witness ({i},{j})\n"));
    }
    emit(&out);
    Ok(ExitCode::SUCCESS)
}

fn cmd_gcd(a: &BigInt, b: &BigInt) -> Result<ExitCode, Error> {
    let (exp, gcd) = anth_integers(a, b)?;
    emit(&format!("anth({a}, {b}) = {exp}\ngcd = {gcd}\n"));
    Ok(ExitCode::SUCCESS)
}
