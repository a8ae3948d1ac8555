//! `fracfactor`: command-line access to the criteria, the factor
//! constructor, the sufficient-condition checkers and the fuzzer.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 property
//! holds / factor exists / all trials agree, 1 it does not, 2 usage or
//! input error, 3 resource cap exceeded, 4 soundness abort.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use fracfactor::criteria::{Criterion, DeficiencyReport, Scan};
use fracfactor::factor::{build_factor_network, construct_excluding, validate_witness};
use fracfactor::flow::feasible_circulation;
use fracfactor::graph::VertexFunc;
use fracfactor::harness::{run_trial, CrossValidationReport, FuzzConfig, Probability};
use fracfactor::instance::{witness_json, Instance};
use fracfactor::sufficient::{check_clique_partition_condition, check_degree_ratio_condition};
use fracfactor::{Error, Limits};

#[derive(Parser, Debug)]
#[command(
    name = "fracfactor",
    version,
    about = "Fractional (g,f)-factor criteria and constructions"
)]
struct Cli {
    /// Worker threads for subset scans and fuzz trials. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Largest vertex count for exhaustive subset scans.
    #[arg(long, global = true, default_value_t = Limits::default().max_subset_vertices)]
    max_n: usize,

    /// Largest number of functions r the brute-force oracle enumerates.
    #[arg(long, global = true, default_value_t = Limits::default().max_r_functions)]
    max_r: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Does the graph have a fractional (g,f)-factor?
    CheckFactor { instance: PathBuf },
    /// Does it have a fractional r-factor for every g <= r <= f?
    CheckAll { instance: PathBuf },
    /// Same, with every factor avoiding the instance's h_edges.
    CheckAllExcluding { instance: PathBuf },
    /// Build a fractional r-factor avoiding h_edges.
    Construct {
        instance: PathBuf,
        /// `g`, `f`, or a file holding n integers.
        #[arg(long, default_value = "f")]
        r: String,
        /// Print the flow network arc listing to stderr.
        #[arg(long)]
        dump_network: bool,
    },
    /// Clique-partition sufficient condition (needs a "partition" field).
    #[command(name = "clique-partition", alias = "theorem6")]
    CliquePartition {
        instance: PathBuf,
        #[arg(long)]
        verify_conclusion: bool,
    },
    /// Degree-ratio sufficient condition.
    #[command(name = "degree-ratio", alias = "theorem9")]
    DegreeRatio {
        instance: PathBuf,
        #[arg(long)]
        verify_conclusion: bool,
    },
    /// Cross-validate the excluding criterion against brute force on random instances.
    Fuzz {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Edge probability: a numerator over 2^53, or a fraction `a/b`.
        #[arg(long, value_parser = parse_probability)]
        p: Probability,
        /// Probability of an edge joining H, same format as --p.
        #[arg(long, value_parser = parse_probability)]
        q: Probability,
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        fmax: u32,
        /// Directory for disagreeing instances.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
}

fn parse_probability(s: &str) -> Result<Probability, String> {
    match s.split_once('/') {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|e| format!("{e}"))?;
            let b: u64 = b.trim().parse().map_err(|e| format!("{e}"))?;
            if b == 0 || a > b {
                return Err(format!("{s} is not a probability"));
            }
            Ok(Probability::ratio(a, b))
        }
        None => {
            let n: u64 = s.trim().parse().map_err(|e| format!("{e}"))?;
            Probability::from_numerator(n).map_err(|e| e.to_string())
        }
    }
}

/// Failure modes of a command, each with its exit code.
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Usage(_) | Error::Input { .. }) | Failure::Io(_) => 2,
            Failure::Lib(Error::Resource { .. }) => 3,
            Failure::Lib(Error::Soundness(_)) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(Instance::from_json(&text)?)
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("report serializes"));
}

fn verdict(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Io(format!("cannot start workers: {e}")))
}

/// Full subset scan split over `jobs` workers.
fn scan(criterion: &Criterion, limits: &Limits, jobs: usize) -> Result<DeficiencyReport, Failure> {
    criterion.check_cap(limits)?;
    if jobs <= 1 {
        return Ok(criterion.check(limits)?);
    }
    let ranges = criterion.partition(jobs * 8);
    let merged = pool(jobs)?.install(|| {
        ranges
            .into_par_iter()
            .map(|r| criterion.scan(r))
            .reduce(Scan::default, Scan::merge)
    });
    Ok(criterion.report(merged))
}

fn read_r(choice: &str, inst: &Instance) -> Result<VertexFunc, Failure> {
    let r = match choice {
        "g" => inst.g.clone(),
        "f" => inst.f.clone(),
        path => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
            let values = text
                .split(|c: char| c.is_whitespace() || matches!(c, ',' | '[' | ']'))
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Io(format!("{path}: {e}")))?;
            VertexFunc::new(values)?
        }
    };
    let n = inst.graph.vertex_count();
    if r.len() != n {
        return Err(Error::Usage(format!("--r has {} values for {n} vertices", r.len())).into());
    }
    Ok(r)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limits = Limits {
        max_subset_vertices: cli.max_n,
        max_r_functions: cli.max_r,
    };
    let jobs = cli.jobs;
    match cli.command {
        Command::CheckFactor { instance } => {
            let inst = load(&instance)?;
            let report = scan(
                &Criterion::fractional_factor(&inst.graph, &inst.g, &inst.f)?,
                &limits,
                jobs,
            )?;
            emit(&report);
            Ok(verdict(report.holds))
        }
        Command::CheckAll { instance } => {
            let inst = load(&instance)?;
            let report = scan(&Criterion::all_factors(&inst.graph, &inst.g, &inst.f)?, &limits, jobs)?;
            emit(&report);
            Ok(verdict(report.holds))
        }
        Command::CheckAllExcluding { instance } => {
            let inst = load(&instance)?;
            let criterion = Criterion::all_factors_excluding(&inst.graph, &inst.h, &inst.g, &inst.f)?;
            let report = scan(&criterion, &limits, jobs)?;
            emit(&report);
            Ok(verdict(report.holds))
        }
        Command::Construct {
            instance,
            r,
            dump_network,
        } => {
            let inst = load(&instance)?;
            let r = read_r(&r, &inst)?;
            if dump_network {
                let reduced = inst.graph.remove_edges(&inst.h)?;
                let net = build_factor_network(&reduced, &r, &r)?;
                let flow = feasible_circulation(&net);
                eprint!("{}", net.listing(flow.as_ref()));
            }
            let witness = construct_excluding(&inst.graph, &inst.h, &r)?;
            if let Some(w) = &witness {
                validate_witness(&inst.graph, w, &r, &r, &inst.h)
                    .map_err(|v| Error::Soundness(format!("constructed witness is invalid: {v}")))?;
            }
            println!("{}", witness_json(&inst.graph, witness.as_ref()));
            Ok(verdict(witness.is_some()))
        }
        Command::CliquePartition {
            instance,
            verify_conclusion,
        } => {
            let inst = load(&instance)?;
            let partition = inst.partition.as_ref().ok_or_else(|| Error::Input {
                field: "partition",
                message: "required by clique-partition".into(),
            })?;
            let report = check_clique_partition_condition(
                &inst.graph,
                partition,
                &inst.h,
                &inst.g,
                &inst.f,
                verify_conclusion,
                &limits,
            )?;
            emit(&report);
            Ok(verdict(report.premise_holds))
        }
        Command::DegreeRatio {
            instance,
            verify_conclusion,
        } => {
            let inst = load(&instance)?;
            let report =
                check_degree_ratio_condition(&inst.graph, &inst.h, &inst.g, &inst.f, verify_conclusion, &limits)?;
            emit(&report);
            Ok(verdict(report.premise_holds))
        }
        Command::Fuzz {
            trials,
            seed,
            n_min,
            n_max,
            p,
            q,
            gmax,
            fmax,
            dump_dir,
        } => {
            let config = FuzzConfig {
                trials,
                n_min,
                n_max,
                p,
                q,
                gmax,
                fmax,
                seed,
                limits,
            };
            config.validate()?;
            let started = Instant::now();
            let outcomes = pool(jobs)?.install(|| {
                (0..trials)
                    .into_par_iter()
                    .map(|i| run_trial(&config, i))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let report = CrossValidationReport::from_outcomes(seed, outcomes);
            let paths = match &dump_dir {
                Some(dir) => report
                    .dump(dir)
                    .map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?,
                None => report.disagreements.iter().map(|d| d.file_name()).collect(),
            };
            for d in &report.disagreements {
                eprintln!("trial {}: {}", d.trial, d.failures.join("; "));
            }
            eprintln!("fuzz: {} trials in {:.2?}", report.trials, started.elapsed());
            println!("{}", report.to_json(&paths));
            Ok(verdict(report.disagreements.is_empty()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("fracfactor: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
