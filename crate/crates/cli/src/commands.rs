//! The three subcommands. Each returns the text for standard output.

use std::fmt::Write as _;

use appell_core::bench::{default_kernels, run_bench};
use appell_core::{
    appell_polynomial, compute_d, cross_verify, related_numbers_composition,
    related_numbers_determinant, related_numbers_recurrence, Algorithm, RelatedNumberTable,
};

use crate::config::{parse_z, resolve_n, AlgoChoice, BenchArgs, Format, PolyArgs, RunConfig};
use crate::output::{render_csv, render_json, render_pretty, TableDocument};
use crate::{CliError, EXIT_MISMATCH, EXIT_USAGE};

fn verify(config: &RunConfig) -> Result<(), CliError> {
    let seq = config.family.coefficients(config.n_max)?;
    let report = cross_verify(&seq, config.order, config.n_max, config.cap)?;
    match report.first_mismatch {
        None => Ok(()),
        Some(m) => Err(CliError::new(
            EXIT_MISMATCH,
            format!("verification failed: {m}"),
        )),
    }
}

/// The table for `config`, after cross-verification if requested.
pub fn compute_table(config: &RunConfig) -> Result<RelatedNumberTable, CliError> {
    if config.check || config.algorithm == AlgoChoice::All {
        verify(config)?;
    }
    let seq = config.family.coefficients(config.n_max)?;
    let (r, n) = (config.order, config.n_max);
    let table = match config.algorithm {
        AlgoChoice::Recurrence | AlgoChoice::All => related_numbers_recurrence(&seq, r, n)?,
        AlgoChoice::Determinant => related_numbers_determinant(&seq, r, n, config.kernel)?,
        AlgoChoice::Composition => related_numbers_composition(&seq, r, n, config.cap)?,
    };
    Ok(table)
}

fn algorithm_label(config: &RunConfig, algorithm: Algorithm) -> String {
    if config.algorithm == AlgoChoice::All {
        "all, cross-verified".to_string()
    } else if config.check {
        format!("{algorithm}, cross-verified")
    } else {
        algorithm.to_string()
    }
}

pub fn cmd_compute(config: &RunConfig) -> Result<String, CliError> {
    let table = compute_table(config)?;
    let doc = TableDocument::new(config.family.to_string(), config.order, table.values());
    Ok(match config.format {
        Format::Csv => render_csv(&doc),
        Format::Json => render_json(&doc),
        Format::Pretty => render_pretty(&doc, &algorithm_label(config, table.algorithm())),
    })
}

/// Coefficients of `A_n(z)` in ascending powers, or its value at `--z`.
pub fn cmd_poly(args: &PolyArgs) -> Result<String, CliError> {
    let config = RunConfig::from_args(&args.compute)?;
    let z = args.z.as_deref().map(parse_z).transpose()?;
    let table = compute_table(&config)?;
    let p = appell_polynomial(&table, config.n_max)?;
    Ok(match z {
        Some(z) => format!("{}\n", p.eval(&z)),
        None => format!("{p}\n"),
    })
}

/// CSV of `n,kernel,nanos,max_numerator_bits`, one row per kernel and `n`.
/// Nothing is printed unless all kernels agree at every `n`.
pub fn cmd_bench(args: &BenchArgs) -> Result<String, CliError> {
    let family = args.family.to_spec()?;
    let n_max = resolve_n(&family, args.n_max);
    let seq = family.coefficients(n_max)?;
    let d = compute_d(&seq, args.family.order)?;
    let rows = run_bench(&d, &default_kernels())?;
    let mut out = String::from("n,kernel,nanos,max_numerator_bits\n");
    for row in rows {
        for t in row.timings {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                row.n,
                t.kernel,
                t.elapsed.as_nanos(),
                t.max_numerator_bits
            );
        }
    }
    Ok(out)
}

/// Exit code for a clap parse failure: help and version are not errors.
pub fn clap_exit_code(e: &clap::Error) -> i32 {
    if e.use_stderr() {
        EXIT_USAGE
    } else {
        0
    }
}
