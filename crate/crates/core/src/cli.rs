//! Command-line front end. Commands only parse, call the library and print.
//!
//! Exit codes: 0 when the computation ran (whatever the verdict), 1 when
//! `ninegon --verify` finds a failing clause, 2 for usage errors and 3 for
//! unreadable or invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decision::{all_k_subsets_csc, is_csc_position, Algorithm};
use crate::io::{parse_point_set, point_set_to_json, region_to_json, FORMAT};
use crate::ninegon::{build_nine_gon, verify_theorem1, NineGonSpec};
use crate::search::{run_search, shrink_finding, Generator, SearchConfig};
use crate::svg::{render, SvgScene};
use crate::{is_admissible_center, Error, Point, PointSet, Rat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "csc", version, about = "Centrally symmetric convex position, decided exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Naive,
    Tallest,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Naive => Algorithm::AllTriples,
            AlgorithmArg::Tallest => Algorithm::Tallest,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide c.s.c. position of a point-set file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "tallest")]
        algorithm: AlgorithmArg,
        /// Check every subset of this size instead of the whole set.
        #[arg(long)]
        subsets: Option<usize>,
    },
    /// Build the nine-point example, optionally verifying it.
    Ninegon {
        #[arg(long, default_value = "93/100", allow_hyphen_values = true)]
        scale: Rat,
        #[arg(long, default_value_t = 12)]
        digits: u32,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the admissible-center region as JSON.
    Region {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "tallest")]
        algorithm: AlgorithmArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render points, hull and (optionally) the admissible region to SVG.
    Plot {
        file: PathBuf,
        #[arg(long)]
        region: bool,
        #[arg(long, value_enum, default_value = "tallest")]
        algorithm: AlgorithmArg,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Test one candidate center directly by reflection.
    Oracle {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        center: Vec<Rat>,
    },
    /// Search for sets whose one-point deletions are all c.s.c. while the set is not.
    Search {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "random-convex")]
        generator: Generator,
        #[arg(long, default_value = "1/100")]
        magnitude: Rat,
        /// Simplify coordinates of every finding before printing it.
        #[arg(long)]
        shrink: bool,
    },
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_set(path: &Path) -> Result<PointSet, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_point_set(&text)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn with_format(value: serde_json::Value) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    map.insert("format".into(), FORMAT.into());
    if let serde_json::Value::Object(m) = value {
        map.extend(m);
    }
    serde_json::Value::Object(map)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Check {
            file,
            algorithm,
            subsets,
        } => {
            let set = read_set(&file)?;
            let alg = algorithm.into();
            match subsets {
                None => {
                    let v = is_csc_position(&set, alg)?;
                    writeln!(out, "{v}")?;
                }
                Some(k) => {
                    if k < 3 || k > set.len() {
                        return Err(Failure::Usage(format!("--subsets must lie in 3..={}", set.len())));
                    }
                    match all_k_subsets_csc(&set, k, alg) {
                        Ok(r) if r.all_yes => writeln!(out, "all {} subsets YES", r.checked)?,
                        Ok(r) => {
                            let idx = r.first_failure.unwrap_or_default();
                            let names: Vec<String> = idx.iter().map(|&i| set.name(i)).collect();
                            writeln!(out, "NO subset {{{}}}", names.join(","))?;
                        }
                        Err(Error::Rejected(why)) => writeln!(out, "REJECTED {why}")?,
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Ninegon {
            scale,
            digits,
            verify,
            out: path,
        } => {
            let spec = NineGonSpec { scale, digits };
            spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let set = build_nine_gon(&spec)?;
            if let Some(p) = &path {
                fs::write(p, point_set_to_json(&set))?;
            }
            if !verify {
                if path.is_none() {
                    out.write_all(point_set_to_json(&set).as_bytes())?;
                }
                return Ok(EXIT_OK);
            }
            let report = verify_theorem1(&set)?;
            let value = with_format(serde_json::to_value(&report).expect("serializable"));
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))?;
            Ok(if report.passed { EXIT_OK } else { EXIT_FAILED_CHECK })
        }
        Command::Region {
            file,
            algorithm,
            out: path,
        } => {
            let set = read_set(&file)?;
            let region = Algorithm::from(algorithm).region(&set)?;
            emit(out, path.as_deref(), &region_to_json(&region))?;
            Ok(EXIT_OK)
        }
        Command::Plot {
            file,
            region,
            algorithm,
            out: path,
        } => {
            let set = read_set(&file)?;
            let reg = if region {
                Some(Algorithm::from(algorithm).region(&set)?)
            } else {
                None
            };
            let witness = reg.as_ref().and_then(|r| r.witness());
            let svg = render(&SvgScene {
                points: &set,
                region: reg.as_ref(),
                witness: witness.as_ref(),
            });
            emit(out, path.as_deref(), &svg)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { file, center } => {
            let set = read_set(&file)?;
            let c = Point::new(center[0].clone(), center[1].clone());
            writeln!(out, "{}", is_admissible_center(&set, &c))?;
            Ok(EXIT_OK)
        }
        Command::Search {
            size,
            trials,
            seed,
            jobs,
            generator,
            magnitude,
            shrink,
        } => {
            let cfg = SearchConfig {
                n: size,
                trials,
                seed,
                generator,
                magnitude,
                parallelism: jobs,
            };
            cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let outcome = run_search(&cfg)?;
            for f in &outcome.findings {
                let f = if shrink { shrink_finding(f)? } else { f.clone() };
                let value = with_format(serde_json::to_value(&f).expect("serializable"));
                writeln!(out, "{}", serde_json::to_string(&value).expect("serializable"))?;
            }
            let stats = serde_json::json!({ "format": FORMAT, "statistics": outcome.stats });
            writeln!(out, "{}", serde_json::to_string(&stats).expect("serializable"))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}
