//! Argument parsing and the five subcommands.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bvx_core::hardness::{brute_force_hitting_set, build_hardness_graph, random_instance};
use bvx_core::prioritized_voronoi;
use clap::{Args, Parser, Subcommand};
use rand::rngs::SmallRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::bench::{self, BenchSolver, Ladder, Family};
use crate::error::{CliError, CliResult};
use crate::formats;
use crate::instance::{read, ProblemInstance};
use crate::solve::{self, Algorithm, SolveOptions};
use crate::validate::{self, Status, ValidateOptions};

#[derive(Debug, Parser)]
#[command(
    name = "bvx",
    version,
    about = "Balanced Vertex solvers for prioritized graph Voronoi diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Graph file (`p`, `e`, `c`, `s` lines, 0-indexed).
    #[arg(long)]
    pub graph: PathBuf,
    /// File of `c <v> <cost>` lines replacing the graph file's costs.
    #[arg(long)]
    pub costs: Option<PathBuf>,
    /// Ordered sites, e.g. `4,12,7`; replaces the graph file's `s` line.
    #[arg(long)]
    pub sites: Option<String>,
}

impl InstanceArgs {
    fn load(&self, td: Option<&Path>) -> CliResult<ProblemInstance> {
        ProblemInstance::load(
            &self.graph,
            self.costs.as_deref(),
            self.sites.as_deref(),
            td,
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find the best new site.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Tree decomposition in PACE `.td` format for the treewidth solver.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Trust that the graph has diameter at most two.
        #[arg(long)]
        assume_diam2: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the prioritized Voronoi diagram.
    Voronoi {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build a hardness graph from a Hitting Set instance.
    GenHs {
        /// Instance as JSON `{"universe": [..], "A": [[..]], "B": [[..]]}`;
        /// a random one is drawn when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Sets per list of the random instance.
        #[arg(long, default_value_t = 16)]
        sets: usize,
        /// Universe size of the random instance.
        #[arg(long, default_value_t = 6)]
        universe: usize,
        /// Probability that a set contains a given element.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write the reduced instance as JSON.
        #[arg(long)]
        reduced: Option<PathBuf>,
    },
    /// Time solvers on generated instance ladders.
    Bench {
        /// Families to run; the default suite when absent.
        #[arg(long, value_enum)]
        family: Vec<Family>,
        #[arg(long, value_enum, default_value_t = BenchSolver::Specialized)]
        solver: BenchSolver,
        #[arg(long, default_value_t = 10)]
        min_exp: u32,
        #[arg(long, default_value_t = 14)]
        max_exp: u32,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write rows as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the invariants of an instance's Voronoi diagram.
    Validate {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Largest graph for the all-pairs checks.
        #[arg(long, default_value_t = 2000)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn label(inst: &ProblemInstance, v: usize) -> String {
    match inst.labels.get(v).and_then(|l| l.as_deref()) {
        Some(l) => format!("{v} ({l})"),
        None => v.to_string(),
    }
}

#[derive(Serialize)]
struct VoronoiJson {
    owner: Vec<usize>,
    dist: Vec<u64>,
    loads: Vec<String>,
    max_load: String,
}

/// Runs a parsed command, writing its report to `out`. Returns the exit
/// code for commands that finish but report a failure.
pub fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let mut text = String::new();
    let mut code = 0;
    match cli.command {
        Command::Solve {
            instance,
            td,
            algorithm,
            assume_diam2,
            json,
        } => {
            let inst = instance.load(td.as_deref())?;
            let opts = SolveOptions {
                algorithm,
                assume_diam2,
                ..SolveOptions::default()
            };
            let report = solve::solve(&inst, &opts)?;
            if !report.certified {
                code = 2;
            }
            if json {
                text = serde_json::to_string_pretty(&report)?;
                text.push('\n');
            } else {
                writeln!(text, "algorithm: {}", report.algorithm).unwrap();
                writeln!(text, "best vertex: {}", label(&inst, report.best_vertex)).unwrap();
                writeln!(text, "best load: {}", report.best_load).unwrap();
                for l in &report.site_loads {
                    writeln!(text, "  site {}: {}", label(&inst, l.site), l.load).unwrap();
                }
                let cert = if report.certified { "yes" } else { "NO" };
                writeln!(text, "certified: {cert}").unwrap();
                writeln!(text, "time: {:.3} ms", report.wall_ms).unwrap();
            }
        }
        Command::Voronoi { instance, json } => {
            let inst = instance.load(None)?;
            let vor = prioritized_voronoi(&inst.graph, &inst.costs, &inst.sites)?;
            if json {
                let doc = VoronoiJson {
                    owner: (0..inst.graph.n())
                        .map(|v| vor.owner_vertex(&inst.sites, v))
                        .collect(),
                    dist: vor.dist.clone(),
                    loads: vor.loads.iter().map(|c| c.to_string()).collect(),
                    max_load: vor.max_load.to_string(),
                };
                text = serde_json::to_string_pretty(&doc)?;
                text.push('\n');
            } else {
                for (i, &s) in inst.sites.as_slice().iter().enumerate() {
                    let cell: Vec<String> =
                        vor.territory(i).iter().map(|v| v.to_string()).collect();
                    writeln!(
                        text,
                        "site {}: load {} cell {}",
                        label(&inst, s),
                        vor.loads[i],
                        cell.join(" ")
                    )
                    .unwrap();
                }
                writeln!(text, "max load: {}", vor.max_load).unwrap();
            }
        }
        Command::GenHs {
            input,
            sets,
            universe,
            density,
            seed,
            output,
            reduced,
        } => {
            let inst = match input {
                Some(p) => formats::parse_hs(&read(&p)?)?,
                None => {
                    if !(0.0..=1.0).contains(&density) {
                        return Err(CliError::Input(format!(
                            "density {density} is not a probability"
                        )));
                    }
                    random_instance(sets, universe, density, &mut SmallRng::seed_from_u64(seed))
                }
            };
            let h = build_hardness_graph(&inst)?;
            let answer = if brute_force_hitting_set(&inst).is_some() {
                "yes"
            } else {
                "no"
            };
            let g = &h.graph;
            let edges: Vec<_> = g.edges().collect();
            let mut doc = String::new();
            writeln!(doc, "# hardness graph: n = {}, t = {}", h.n, h.t).unwrap();
            writeln!(
                doc,
                "# threshold = {}, thresholds_valid = {}",
                h.threshold, h.thresholds_valid
            )
            .unwrap();
            writeln!(doc, "# hitting set: {answer}").unwrap();
            doc.push_str(&formats::write_graph(
                g.n(),
                &edges,
                false,
                h.costs.as_slice(),
                h.sites.as_slice(),
                Some(&h.labels),
            ));
            if let Some(p) = reduced {
                write_file(&p, &formats::write_hs(&h.reduced))?;
            }
            match output {
                Some(p) => write_file(&p, &doc)?,
                None => text = doc,
            }
        }
        Command::Bench {
            family,
            solver,
            min_exp,
            max_exp,
            repeats,
            seed,
            csv,
        } => {
            let ladders = if family.is_empty() {
                bench::default_suite()
            } else {
                family
                    .into_iter()
                    .map(|family| Ladder {
                        family,
                        solver,
                        exponents: (min_exp..=max_exp).collect(),
                        repeats,
                    })
                    .collect()
            };
            let rows = bench::run(&ladders, seed)?;
            writeln!(
                text,
                "{:<16} {:<12} {:>8} {:>9} {:>11} {:>6}",
                "family", "solver", "n", "m", "ms", "ratio"
            )
            .unwrap();
            for r in &rows {
                let ratio = r.ratio.map_or("-".into(), |x| format!("{x:.2}"));
                let fam = format!("{:?}", r.family).to_lowercase();
                let sol = format!("{:?}", r.solver).to_lowercase();
                writeln!(
                    text,
                    "{fam:<16} {sol:<12} {:>8} {:>9} {:>11.3} {ratio:>6}",
                    r.n, r.m, r.ms
                )
                .unwrap();
            }
            if let Some(p) = csv {
                let file = fs::File::create(&p).map_err(|source| CliError::Io {
                    path: p.clone(),
                    source,
                })?;
                bench::write_csv(&rows, file)?;
            }
        }
        Command::Validate {
            instance,
            max_n,
            json,
        } => {
            let inst = instance.load(None)?;
            let opts = ValidateOptions {
                max_all_pairs: max_n,
                ..ValidateOptions::default()
            };
            let checks = validate::validate(&inst, &opts)?;
            if checks.iter().any(|c| c.status == Status::Fail) {
                code = 2;
            }
            if json {
                text = serde_json::to_string_pretty(&checks)?;
                text.push('\n');
            } else {
                for c in &checks {
                    let status = format!("{:?}", c.status).to_lowercase();
                    match &c.detail {
                        Some(d) => writeln!(text, "{:<16} {status}: {d}", c.name).unwrap(),
                        None => writeln!(text, "{:<16} {status}", c.name).unwrap(),
                    }
                }
            }
        }
    }
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })?;
    Ok(code)
}

/// Parses `args` (program name first) and runs the command. Errors are
/// written to `err`; the return value is the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
