//! `kappa` — exact psi-class integrals, boundary-cycle pairings, kappa-ring
//! rank tables, and verification suites, on the command line.
//!
//! All results are exact rationals printed as `num/den` (bare integer when
//! the denominator is 1). Output on stdout is byte-identical across runs
//! with the same flags; `--threads` changes wall time only. Diagnostics go
//! to stderr. Exit codes: 0 success, 1 verification failure, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use kappa_core::combinatorics::{profiles, profiles_all, Partition, Profile};
use kappa_core::intersection::{self, psi_integral};
use kappa_core::pairing::{lambda_norm, pair, pairing_matrix};
use kappa_core::verify::{self, CheckReport, TableCell};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kappa",
    version,
    about = "Exact intersection numbers and kappa-ring rank tables",
    max_term_width = 100
)]
struct Cli {
    /// Memo-cache file: loaded before the command runs, saved afterwards.
    #[arg(long, global = true, env = "KAPPA_CACHE", value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Worker threads (default: all cores). Affects wall time only, never
    /// any output byte.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    /// Output format. `csv` applies to `table` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact psi correlator for the given genus and exponents.
    Psi {
        #[arg(long)]
        genus: u32,
        /// Comma-separated exponent list, e.g. 1,1,1 (zeros included).
        #[arg(long, value_name = "A1,A2,...")]
        exps: String,
    },
    /// Pairing of a psi class against a combinatorial cycle profile.
    Pair {
        /// Partition in the form a1+a2+...+ak.
        #[arg(long)]
        partition: String,
        /// Profile in the form (g1,m1)(g2,m2)...
        #[arg(long)]
        profile: String,
        /// Divide by the row normalizer Lambda(q).
        #[arg(long)]
        normalized: bool,
    },
    /// List the profiles of Q(d;g,n), optionally restricted to one shape.
    Profiles {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        points: u32,
        /// Restrict to profiles with this shape (a1+a2+...).
        #[arg(long)]
        partition: Option<String>,
    },
    /// Exact rank of the pairing matrix R(d;g,n).
    Rank {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        points: u32,
        /// Also emit the labeled matrix before the rank line.
        #[arg(long)]
        dump: bool,
    },
    /// Emit the labeled pairing matrix R(d;g,n).
    Dump {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        points: u32,
    },
    /// Rank grid by codimension, checked against the published tables.
    Table {
        /// Codimension e >= 1 (degree is 3g-3+n-e per cell).
        #[arg(long)]
        codim: u32,
        #[arg(long, default_value_t = 2)]
        genus_max: u32,
        #[arg(long, default_value_t = 10)]
        points_max: u32,
    },
    /// Run verification suites; exit 0 iff everything passes.
    Verify {
        /// One of: divisor, detlaw, table1, block11, codim1, table2,
        /// partitions, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest point count for the divisor suite.
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Largest genus for the determinant-law suite.
        #[arg(long, default_value_t = 5)]
        g_max: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; keep its exit code (2 on usage)
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("kappa: {msg}");
            eprintln!("usage: see `kappa --help` for flag and argument forms");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err("--threads must be positive".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    if let Some(path) = &cli.cache {
        match intersection::cache_load(path) {
            Ok(stats) if stats.warnings > 0 => {
                eprintln!(
                    "kappa: cache {}: loaded {} entries, skipped {} malformed lines",
                    path.display(),
                    stats.loaded,
                    stats.warnings
                );
            }
            Ok(_) => {}
            Err(e) => eprintln!("kappa: cache {} unreadable ({e}); cold start", path.display()),
        }
    }

    let code = dispatch(&cli)?;

    if let Some(path) = &cli.cache {
        match intersection::cache_save(path) {
            Ok(n) => eprintln!("kappa: cache {}: saved {n} entries", path.display()),
            Err(e) => eprintln!("kappa: cache {} not saved ({e})", path.display()),
        }
    }
    Ok(code)
}

fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Psi { genus, exps } => {
            let exps = parse_exps(exps)?;
            let value = psi_integral(*genus, &exps).map_err(|e| e.to_string())?;
            emit_scalar(cli.format, &value.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pair {
            partition,
            profile,
            normalized,
        } => {
            let p: Partition = partition.parse().map_err(err_string)?;
            let q: Profile = profile.parse().map_err(err_string)?;
            let mut value = pair(&p, &q);
            if *normalized {
                value /= lambda_norm(&q);
            }
            emit_scalar(cli.format, &value.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Profiles {
            degree,
            genus,
            points,
            partition,
        } => {
            let list: Vec<Profile> = match partition {
                Some(text) => {
                    let p: Partition = text.parse().map_err(err_string)?;
                    if p.degree() != *degree {
                        return Err(format!(
                            "partition {p} has degree {}, not {degree}",
                            p.degree()
                        ));
                    }
                    profiles(&p, *genus, *points)
                }
                None => profiles_all(*degree, *genus, *points).0,
            };
            match cli.format {
                Format::Json => {
                    let items: Vec<String> = list.iter().map(|q| q.to_string()).collect();
                    println!("{}", serde_json::to_string_pretty(&items).unwrap());
                }
                Format::Text => {
                    for q in &list {
                        println!("{q}");
                    }
                }
                Format::Csv => return Err("csv format applies to `table` only".into()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank {
            degree,
            genus,
            points,
            dump,
        } => {
            let matrix = pairing_matrix(*degree, *genus, *points);
            let rank = matrix.rank();
            if *dump {
                print!("{}", matrix.dump());
                println!("rank={rank}");
            } else {
                emit_scalar(cli.format, &rank.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dump {
            degree,
            genus,
            points,
        } => {
            print!("{}", pairing_matrix(*degree, *genus, *points).dump());
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            codim,
            genus_max,
            points_max,
        } => {
            if *codim == 0 {
                return Err("--codim must be positive".into());
            }
            let (cells, report) = verify::table2(*codim, *genus_max, *points_max);
            emit_table(cli.format, &cells, &report)?;
            Ok(exit_for(&[report]))
        }
        Command::Verify { suite, n_max, g_max } => {
            let reports = run_suites(suite, *n_max, *g_max)?;
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&reports).unwrap());
                }
                Format::Text => {
                    for r in &reports {
                        print!("{}", r.render_text());
                    }
                    let all = reports.iter().all(|r| r.passed());
                    println!("overall: {}", if all { "PASS" } else { "FAIL" });
                }
                Format::Csv => return Err("csv format applies to `table` only".into()),
            }
            let elapsed: std::time::Duration = reports.iter().map(|r| r.elapsed).sum();
            eprintln!("kappa: {} suites in {} ms", reports.len(), elapsed.as_millis());
            Ok(exit_for(&reports))
        }
    }
}

fn err_string(e: kappa_core::Error) -> String {
    e.to_string()
}

fn parse_exps(text: &str) -> Result<Vec<u32>, String> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad exponent {tok:?} (expected a1,a2,...)"))
        })
        .collect()
}

fn emit_scalar(format: Format, value: &str) -> Result<(), String> {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!("{}", serde_json::json!({ "value": value })),
        Format::Csv => return Err("csv format applies to `table` only".into()),
    }
    Ok(())
}

fn emit_table(format: Format, cells: &[TableCell], report: &CheckReport) -> Result<(), String> {
    match format {
        Format::Csv => {
            println!("codim,genus,points,degree,rank");
            for c in cells {
                println!("{},{},{},{},{}", c.codim, c.genus, c.points, c.degree, c.rank);
            }
            eprint!("{}", report.render_text());
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "cells": cells,
                    "report": report,
                }))
                .unwrap()
            );
        }
        Format::Text => {
            println!("codim,genus,points,degree,rank");
            for c in cells {
                println!("{},{},{},{},{}", c.codim, c.genus, c.points, c.degree, c.rank);
            }
            print!("{}", report.render_text());
        }
    }
    Ok(())
}

fn exit_for(reports: &[CheckReport]) -> ExitCode {
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_suites(suite: &str, n_max: u32, g_max: u32) -> Result<Vec<CheckReport>, String> {
    let mut reports = Vec::new();
    let known = [
        "divisor", "detlaw", "table1", "block11", "codim1", "table2", "partitions", "all",
    ];
    if !known.contains(&suite) {
        return Err(format!(
            "unknown suite {suite:?} (expected one of {})",
            known.join(", ")
        ));
    }
    let want = |name: &str| suite == name || suite == "all";
    if want("divisor") {
        for n in 2..=n_max.max(2) {
            reports.push(verify::check_divisor_relation(n));
        }
    }
    if want("detlaw") {
        for g in 1..=g_max.max(1) {
            reports.push(verify::det_law_check(g));
        }
    }
    if want("table1") {
        for g in 1..=3u32 {
            for d in [3 * g + 2, 3 * g + 3] {
                reports.push(verify::table1_check(g, d).map_err(err_string)?);
            }
        }
    }
    if want("block11") {
        reports.push(verify::block11_check(2, &[9, 10]));
        reports.push(verify::block11_check(3, &[11, 12]));
    }
    if want("codim1") {
        for n in 2..=9u32 {
            reports.push(verify::codim1_check(1, n));
        }
        for n in 2..=6u32 {
            reports.push(verify::codim1_check(2, n));
        }
        for n in 2..=4u32 {
            reports.push(verify::codim1_check(3, n));
        }
    }
    if want("table2") {
        for e in 2..=6u32 {
            let (_, report) = verify::table2(e, 2, 10);
            reports.push(report);
        }
    }
    if want("partitions") {
        for g in 0..=3u32 {
            for n in 1..=8u32 {
                let top = 3 * g as i64 - 3 + n as i64;
                for d in 1..=top.max(0) as u32 {
                    reports.push(verify::partition_set_check(d, g, n));
                }
            }
        }
    }
    Ok(reports)
}
