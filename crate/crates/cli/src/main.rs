//! `borosmoll`: exact Boros-Moll rows, property sweeps, and the quartic
//! integral cross-check.
//!
//! Exit codes: 0 when everything verified or passed, 1 when a violation or
//! failed check was found and reported, 2 on usage errors.

mod output;

use borosmoll::exact::{format_int, format_rational, parse_rational};
use borosmoll::quartic::{check_integral_identity, DEFAULT_TOL};
use borosmoll::verify::{self, min_sequence, minimum_closed_form};
use borosmoll::{row_direct, CoeffRow, Property, Rational, Verdict};
use clap::{Parser, Subcommand, ValueEnum};
use output::*;
use rayon::prelude::*;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "borosmoll",
    version,
    about = "Exact Boros-Moll coefficients and property verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    /// integer form b_i(m) = 4^m d_i(m)
    B,
    /// rational coefficients d_i(m)
    D,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of P_m
    Row {
        m: u32,
        #[arg(long, value_enum, default_value = "d")]
        form: Form,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficient rows for every m in a range
    Table {
        #[arg(long, default_value_t = 0)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value = "d")]
        form: Form,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Check a property for every m in a range
    ///
    /// strong-ratio-c checks an open conjecture; its chain shape on c_1..c_m is
    /// generalized from the m = 8 instance, and a violation is a finding.
    /// Integral checks lose accuracy for a < -0.9.
    Verify {
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// The sequence c_i = i(i+1)(d_i^2 - d_{i+1} d_{i-1}), its argmin, and the closed-form minimum
    Minseq {
        m: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare adaptive quadrature of the quartic integral with pi P_m(a) / (2^{m+3/2} (a+1)^{m+1/2})
    ///
    /// Accuracy degrades as a approaches -1; expect larger errors for a < -0.9.
    Integral {
        m: u32,
        /// a > -1, as an integer or p/q
        #[arg(allow_hyphen_values = true, value_parser = parse_a)]
        a: Rational,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("expected one of: {}", names.join(", "))
    })
}

fn parse_a(s: &str) -> Result<Rational, String> {
    let a = parse_rational(s).map_err(|e| e.to_string())?;
    if a <= -Rational::from_integer(1.into()) {
        return Err(format!("a must exceed -1, got {s}"));
    }
    Ok(a)
}

struct Usage(String);

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Usage> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Usage(format!("cannot start {jobs} worker threads: {e}")))
}

fn row_payload(row: &CoeffRow, form: Form) -> RowPayload {
    let (form, values) = match form {
        Form::B => ("b", row.b_slice().iter().map(format_int).collect()),
        Form::D => ("d", row.d_vec().iter().map(format_rational).collect()),
    };
    RowPayload {
        m: row.m(),
        form,
        values,
    }
}

fn emit_rows(sink: &mut Sink, command: &str, rows: &[RowPayload]) {
    match sink.format() {
        Format::Json => rows.iter().for_each(|r| sink.json(command, r)),
        Format::Tsv => {
            sink.tsv_row(&ROW_HEADER);
            rows.iter().for_each(|r| r.tsv(sink));
        }
    }
}

/// Runs a command, returning stdout text and the exit status.
fn run(command: Command) -> Result<(String, u8), Usage> {
    match command {
        Command::Row { m, form, format } => {
            let mut sink = Sink::new(format);
            emit_rows(&mut sink, "row", &[row_payload(&row_direct(m), form)]);
            Ok((sink.into_string(), 0))
        }
        Command::Table {
            from,
            to,
            form,
            format,
            jobs,
        } => {
            if from > to {
                return Err(Usage(format!("--from {from} exceeds --to {to}")));
            }
            let rows: Vec<RowPayload> = pool(jobs)?.install(|| {
                (from..=to)
                    .into_par_iter()
                    .map(|m| row_payload(&row_direct(m), form))
                    .collect()
            });
            let mut sink = Sink::new(format);
            emit_rows(&mut sink, "table", &rows);
            Ok((sink.into_string(), 0))
        }
        Command::Verify {
            property,
            from,
            to,
            format,
            jobs,
        } => {
            if from < 2 {
                return Err(Usage(format!("--from must be at least 2, got {from}")));
            }
            if from > to {
                return Err(Usage(format!("--from {from} exceeds --to {to}")));
            }
            let mut reports = pool(jobs)?
                .install(|| verify::verify_range(property, from, to))
                .map_err(|e| Usage(e.to_string()))?;
            let summary = reports.pop().expect("summary is always appended");
            for r in &reports {
                if let Some(w) = r.witness() {
                    eprintln!("{property}: violated, {w} ({})", r.notes());
                }
            }
            eprintln!("{property}: m = {from}..={to}: {}", summary.notes());
            let mut sink = Sink::new(format);
            match format {
                Format::Json => {
                    reports.iter().for_each(|r| sink.json("verify", r));
                    sink.json("verify-summary", &summary);
                }
                Format::Tsv => {
                    sink.tsv_row(&REPORT_HEADER);
                    reports
                        .iter()
                        .for_each(|r| report_tsv(&mut sink, "report", r));
                    report_tsv(&mut sink, "summary", &summary);
                }
            }
            let code = match summary.verdict() {
                Verdict::Verified => 0,
                Verdict::Violated => 1,
                Verdict::DomainError => 2,
            };
            Ok((sink.into_string(), code))
        }
        Command::Minseq { m, format } => {
            let seq = min_sequence(&row_direct(m)).map_err(|e| Usage(e.to_string()))?;
            let payload = MinSeqPayload {
                m,
                c: seq.c_vec().iter().map(format_rational).collect(),
                argmin: seq.argmin(),
                closed_form_min: format_rational(&minimum_closed_form(m)),
            };
            let mut sink = Sink::new(format);
            match format {
                Format::Json => sink.json("minseq", &payload),
                Format::Tsv => {
                    sink.tsv_row(&MINSEQ_HEADER);
                    payload.tsv(&mut sink);
                }
            }
            Ok((sink.into_string(), 0))
        }
        Command::Integral { m, a, tol, format } => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Usage(format!(
                    "--tol must be positive and finite, got {tol}"
                )));
            }
            let r = match check_integral_identity::<f64>(m, &a, tol) {
                Ok(r) => r,
                Err(e @ borosmoll::Error::Domain(_)) => return Err(Usage(e.to_string())),
                Err(e) => {
                    eprintln!("integral: {e}");
                    return Ok((String::new(), 1));
                }
            };
            if !r.pass {
                eprintln!(
                    "integral: relative error {:e} exceeds tol {:e}",
                    r.rel_error, r.tol
                );
            }
            let payload = IntegralPayload {
                m: r.m,
                a: format_rational(&r.a),
                numeric_integral: r.numeric_integral,
                closed_form: r.closed_form,
                abs_error: r.abs_error,
                rel_error: r.rel_error,
                tol: r.tol,
                pass: r.pass,
            };
            let mut sink = Sink::new(format);
            match format {
                Format::Json => sink.json("integral", &payload),
                Format::Tsv => {
                    sink.tsv_row(&INTEGRAL_HEADER);
                    payload.tsv(&mut sink);
                }
            }
            Ok((sink.into_string(), u8::from(!r.pass)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe downstream is not our error
            let _ = stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush());
            ExitCode::from(code)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
