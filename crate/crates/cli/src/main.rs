//! `berggren` — exact computations in the tree of primitive Pythagorean
//! triples. Every numeric field in the output is an exact decimal string or
//! an exact rational; floats appear only in the clearly labelled
//! `*_float` fields of the geometry block.

mod record;

use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use berggren_core::geometry::descendant_triangle_metrics;
use berggren_core::inradius::{count_with_inradius, enumerate_with_inradius};
use berggren_core::ppt::validate_triple;
use berggren_core::radii::chain_point;
use berggren_core::tree::{descend_path_from, enumerate_tree, path_of, Letter};
use berggren_core::verify::{all_checks, Bounds, CheckOutcome, Mutation};
use berggren_core::{Ppt, TreePath};

use record::{
    chain_record, csv_row, geometry_block, json_line, triple_record, CSV_HEADER,
};

#[derive(Parser)]
#[command(
    name = "berggren",
    version,
    about = "Exact arithmetic in the Berggren tree of primitive Pythagorean triples",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage or validation error.\n\
                  BERGGREN_FORMAT=json|csv selects the default output format of `enumerate`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word over {A,B,C} to a triple (default: the root 3,4,5)
    Descend {
        /// Starting triple as x,y,z
        #[arg(long, default_value = "3,4,5")]
        triple: String,
        /// Word of descent letters; empty stays put
        #[arg(long, default_value = "")]
        path: String,
    },
    /// Print the unique word leading from the root to a triple
    Locate {
        #[arg(long)]
        triple: String,
    },
    /// Stream every tree node with z <= N in breadth-first order
    Enumerate {
        #[arg(long = "max-z")]
        max_z: u64,
        /// json (default, one record per line) or csv
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Worker threads; output is identical for any count
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// List (or count) all primitive triples with a given inradius
    Inradius {
        #[arg(long)]
        r: String,
        #[arg(long)]
        count_only: bool,
    },
    /// The n-th node of the pure A/B/C chain from the root, with its radii
    Chain {
        #[arg(long)]
        letter: String,
        #[arg(long)]
        n: u64,
    },
    /// Exact geometry of the triangle formed by a triple's three children
    Geometry {
        #[arg(long)]
        triple: String,
    },
    /// Run the full cross-check suite and report one line per proposition
    Verify {
        #[arg(long = "max-z", default_value_t = 10_000)]
        max_z: u64,
        #[arg(long = "max-n", default_value_t = 30)]
        max_n: u64,
        #[arg(long = "max-r", default_value_t = 500)]
        max_r: u64,
        /// Random-path samples for the round-trip check
        #[arg(long, default_value_t = 10_000)]
        paths: usize,
        /// Worker threads; the report order is fixed regardless
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Fault injection for testing the suite itself: LETTER,ROW,COL,DELTA
        /// perturbs one descent-matrix entry and must make the run fail
        #[arg(long)]
        mutate: Option<String>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_triple(spec: &str) -> Result<Ppt, String> {
    let parts: Vec<&str> = spec.split(',').collect();
    let [xs, ys, zs] = parts.as_slice() else {
        return Err(format!("triple must be written as x,y,z (got {spec:?})"));
    };
    let parse = |s: &str| {
        BigInt::from_str(s.trim()).map_err(|_| format!("{s:?} is not a decimal integer"))
    };
    let v = validate_triple(parse(xs)?, parse(ys)?, parse(zs)?).map_err(|e| e.to_string())?;
    if v.swapped {
        eprintln!("note: legs swapped into canonical (odd, even, hypotenuse) order");
    }
    Ok(v.ppt)
}

fn parse_path(spec: &str) -> Result<TreePath, String> {
    TreePath::from_str(spec).map_err(|e| e.to_string())
}

fn parse_mutation(spec: &str) -> Result<Mutation, String> {
    let parts: Vec<&str> = spec.split(',').collect();
    let [letter, row, col, delta] = parts.as_slice() else {
        return Err("mutation must be written as LETTER,ROW,COL,DELTA".into());
    };
    let letter = Letter::from_str(letter.trim()).map_err(|e| e.to_string())?;
    let parse_idx = |s: &str| -> Result<usize, String> {
        match s.trim().parse::<usize>() {
            Ok(i) if i < 3 => Ok(i),
            _ => Err(format!("{s:?} is not a matrix index (0..=2)")),
        }
    };
    let delta: i64 = delta
        .trim()
        .parse()
        .map_err(|_| format!("{delta:?} is not an integer delta"))?;
    if delta == 0 {
        return Err("a zero delta does not mutate anything".into());
    }
    Ok(Mutation {
        letter,
        row: parse_idx(row)?,
        col: parse_idx(col)?,
        delta,
    })
}

/// Print a line, treating a closed pipe as a normal end of output.
fn emit(out: &mut impl Write, line: &str) -> bool {
    writeln!(out, "{line}").is_ok()
}

fn run(command: Command) -> Result<ExitCode, String> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Descend { triple, path } => {
            let start = parse_triple(&triple)?;
            let word = parse_path(&path)?;
            let node = descend_path_from(&start, &word);
            let full_path = path_of(&node).map_err(|e| e.to_string())?;
            emit(&mut out, &json_line(&triple_record(&node, Some(&full_path))));
            Ok(ExitCode::SUCCESS)
        }
        Command::Locate { triple } => {
            let node = parse_triple(&triple)?;
            let path = path_of(&node).map_err(|e| e.to_string())?;
            emit(&mut out, &path.to_string());
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            max_z,
            format,
            workers,
        } => {
            if max_z < 5 {
                return Err("--max-z must be at least 5 (the root hypotenuse)".into());
            }
            let format = format.unwrap_or_else(default_format);
            run_enumerate(&mut out, max_z, format, workers);
            Ok(ExitCode::SUCCESS)
        }
        Command::Inradius { r, count_only } => {
            let r = BigUint::from_str(r.trim())
                .ok()
                .filter(|v| v > &BigUint::from(0u32))
                .ok_or_else(|| format!("{r:?} is not a positive integer"))?;
            if count_only {
                emit(&mut out, &count_with_inradius(&r).to_string());
            } else {
                for t in enumerate_with_inradius(&r).map_err(|e| e.to_string())? {
                    if !emit(&mut out, &json_line(&triple_record(&t, None))) {
                        break;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chain { letter, n } => {
            let letter = Letter::from_str(letter.trim()).map_err(|e| e.to_string())?;
            let point = chain_point(letter, n).map_err(|e| e.to_string())?;
            let path = TreePath::from_letters(vec![letter; n as usize]);
            emit(&mut out, &json_line(&chain_record(&point, &path)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Geometry { triple } => {
            let node = parse_triple(&triple)?;
            let metrics = descendant_triangle_metrics(&node);
            let mut rec = triple_record(&node, None);
            rec.geometry = Some(geometry_block(&metrics));
            emit(&mut out, &json_line(&rec));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_z,
            max_n,
            max_r,
            paths,
            workers,
            mutate,
        } => {
            let bounds = Bounds {
                max_z,
                max_n,
                max_r,
                path_samples: paths,
                max_path_len: 25,
            };
            let mutation = mutate.as_deref().map(parse_mutation).transpose()?;
            if mutation.is_some() {
                eprintln!("note: fault injection active; the run is expected to fail");
            }
            let outcomes = run_verify(bounds, mutation, workers);
            let mut failed = 0usize;
            for outcome in &outcomes {
                let status = if outcome.passed { "PASS" } else { "FAIL" };
                emit(&mut out, &format!("{status} {}: {}", outcome.name, outcome.detail));
                if !outcome.passed {
                    failed += 1;
                }
            }
            emit(
                &mut out,
                &format!("{}/{} checks passed", outcomes.len() - failed, outcomes.len()),
            );
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn default_format() -> Format {
    match std::env::var("BERGGREN_FORMAT").as_deref() {
        Ok("csv") | Ok("CSV") => Format::Csv,
        _ => Format::Json,
    }
}

fn render(rec: &record::TripleRecord, format: Format) -> String {
    match format {
        Format::Json => json_line(rec),
        Format::Csv => csv_row(rec),
    }
}

fn run_enumerate(out: &mut impl Write, max_z: u64, format: Format, workers: usize) {
    if format == Format::Csv && !emit(out, CSV_HEADER) {
        return;
    }
    if workers <= 1 {
        for (path, node) in enumerate_tree(max_z) {
            if !emit(out, &render(&triple_record(&node, Some(&path)), format)) {
                return;
            }
        }
        return;
    }

    // Level-synchronous breadth-first expansion: each level is rendered in
    // parallel and collected in order, so the byte stream is identical to the
    // single-worker run.
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool");
    let bound = BigInt::from(max_z);
    let mut level: Vec<(TreePath, Ppt)> = vec![(TreePath::new(), Ppt::root())];
    while !level.is_empty() {
        let (lines, next): (Vec<String>, Vec<Vec<(TreePath, Ppt)>>) = pool.install(|| {
            level
                .par_iter()
                .map(|(path, node)| {
                    let line = render(&triple_record(node, Some(path)), format);
                    let children: Vec<(TreePath, Ppt)> = Letter::ALL
                        .iter()
                        .filter_map(|&letter| {
                            let child = berggren_core::tree::descend(node, letter);
                            (child.z() <= &bound).then(|| {
                                let mut child_path = path.clone();
                                child_path.push(letter);
                                (child_path, child)
                            })
                        })
                        .collect();
                    (line, children)
                })
                .unzip()
        });
        for line in &lines {
            if !emit(out, line) {
                return;
            }
        }
        level = next.into_iter().flatten().collect();
    }
}

fn run_verify(bounds: Bounds, mutation: Option<Mutation>, workers: usize) -> Vec<CheckOutcome> {
    let checks = all_checks(bounds, mutation);
    if workers <= 1 {
        return checks.iter().map(|c| c.run()).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool");
    pool.install(|| checks.par_iter().map(|c| c.run()).collect())
}
