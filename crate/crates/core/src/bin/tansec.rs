use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use tansec::export::{
    emit_triangle, render_clt, render_poly, render_roots, render_series, render_stats, Format,
    SeriesKind,
};
use tansec::verify::{exit_code, run_verify, summary_table, write_records, Suite, TriangleStore};
use tansec::{Error, Family};

#[derive(Parser)]
#[command(
    name = "tansec",
    version,
    about = "Derivative polynomials of tan and sec, checked exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; one JSON record per line on stdout.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// Add 1 to a stored entry before checking, as FAMILY:N:K.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Export rows 1..=N of a triangle.
    Triangle {
        family: String,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Print the n-th polynomial of a family.
    Poly { family: String, n: usize },
    /// Print EGF coefficients n! [t^n].
    Series {
        kind: SeriesKind,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Real roots of N_n and interlacing with N_(n-1).
    Roots { n: usize },
    /// Exact moments and modes of the N rows.
    Stats {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Distance of normalized N rows to the normal CDF.
    Clt {
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,80")]
        ns: Vec<usize>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_fault(spec: &str) -> Result<(Family, usize, usize), String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [family, n, k] = parts[..] else {
        return Err(format!("expected FAMILY:N:K, got `{spec}`"));
    };
    let family = family.parse::<Family>().map_err(|e| e.to_string())?;
    let n = n.parse().map_err(|_| format!("bad row index `{n}`"))?;
    let k = k.parse().map_err(|_| format!("bad column index `{k}`"))?;
    Ok((family, n, k))
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print(text: tansec::Result<String>) -> ExitCode {
    match text {
        Ok(t) => {
            let mut out = io::stdout().lock();
            match out.write_all(t.as_bytes()).and_then(|_| out.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => usage_error(e),
    }
}

fn verify(suite: Suite, max_n: usize, fault: Option<String>) -> ExitCode {
    let mut store = TriangleStore::new(max_n);
    if let Some(spec) = fault {
        let applied = parse_fault(&spec).and_then(|(f, n, k)| {
            store
                .perturb(f, n, k, &BigInt::from(1))
                .map_err(|e| e.to_string())
        });
        if let Err(e) = applied {
            return usage_error(e);
        }
    }
    let records = run_verify(suite, max_n, &store);
    let mut out = io::stdout().lock();
    if let Err(e) = write_records(&records, &mut out) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
    eprint!("{}", summary_table(&records));
    ExitCode::from(exit_code(&records) as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            max_n,
            inject_fault,
        } => verify(suite, max_n, inject_fault),
        Command::Triangle {
            family,
            rows,
            format,
        } => print(family.parse().and_then(|f| emit_triangle(f, rows, format))),
        Command::Poly { family, n } => print(render_poly(&family, n)),
        Command::Series { kind, order } => print(Ok(render_series(kind, order))),
        Command::Roots { n } => print(render_roots(n)),
        Command::Stats { max_n } => print(render_stats(max_n)),
        Command::Clt { ns } => print(render_clt(&ns)),
    }
}
