//! Class detection, solver dispatch and certification.

use std::fmt;
use std::time::Instant;

use bvx_core::classes::{has_diameter_at_most_two, is_complete, is_cycle, is_path, is_tree};
use bvx_core::elementary::{solve_clique, solve_cycle, solve_diameter_two, solve_path};
use bvx_core::interval::{recognize_proper_interval, solve_proper_interval};
use bvx_core::tree::solve_tree;
use bvx_core::treewidth::{heuristic_tree_decomposition, solve_treewidth, TreeDecomposition};
use bvx_core::{brute_force_balanced_vertex, witness_load, SolveResult};
use clap::ValueEnum;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::instance::ProblemInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Brute,
    Clique,
    Diam2,
    Path,
    Cycle,
    Tree,
    Treewidth,
    ProperInterval,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    /// Run the diameter-two solver without checking the diameter.
    pub assume_diam2: bool,
    /// Largest `n·m` for which the diameter is checked exactly.
    pub diam2_budget: u64,
    /// Auto mode uses the treewidth solver only up to this heuristic width.
    pub max_auto_width: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Auto,
            assume_diam2: false,
            diam2_budget: 100_000_000,
            max_auto_width: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiteLoadJson {
    pub site: usize,
    pub load: String,
}

/// The JSON document printed by `bvx solve --json`.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub best_vertex: usize,
    pub best_load: String,
    pub site_loads: Vec<SiteLoadJson>,
    /// The best load equals an independent evaluation of the diagram of
    /// `S + best_vertex`.
    pub certified: bool,
    pub algorithm: String,
    pub wall_ms: f64,
}

fn diameter_two_checked(inst: &ProblemInstance, opts: &SolveOptions) -> CliResult<bool> {
    if opts.assume_diam2 {
        return Ok(true);
    }
    let g = &inst.graph;
    let work = g.n() as u64 * g.m() as u64;
    if work > opts.diam2_budget {
        return Err(CliError::Precondition(format!(
            "checking diameter two costs n·m = {work}, above the budget of {}; \
             pass --assume-diam2 to trust the input",
            opts.diam2_budget
        )));
    }
    Ok(has_diameter_at_most_two(g))
}

fn decomposition(inst: &ProblemInstance) -> TreeDecomposition {
    inst.td
        .clone()
        .unwrap_or_else(|| heuristic_tree_decomposition(&inst.graph))
}

/// Picks a solver whose precondition the instance provably meets.
pub fn detect(inst: &ProblemInstance, opts: &SolveOptions) -> Algorithm {
    let g = &inst.graph;
    if !g.is_weighted() {
        if is_complete(g) {
            return Algorithm::Clique;
        }
        if is_path(g) {
            return Algorithm::Path;
        }
        if is_cycle(g) {
            return Algorithm::Cycle;
        }
        if is_tree(g) {
            return Algorithm::Tree;
        }
        if recognize_proper_interval(g).is_ok() {
            return Algorithm::ProperInterval;
        }
        if matches!(diameter_two_checked(inst, opts), Ok(true)) {
            return Algorithm::Diam2;
        }
    }
    if inst.td.is_some() || heuristic_tree_decomposition(g).width() <= opts.max_auto_width {
        return Algorithm::Treewidth;
    }
    Algorithm::Brute
}

/// Runs one solver with no fallback.
pub fn run_algorithm(
    inst: &ProblemInstance,
    algo: Algorithm,
    opts: &SolveOptions,
) -> CliResult<SolveResult> {
    let (g, c, s) = (&inst.graph, &inst.costs, &inst.sites);
    let result = match algo {
        Algorithm::Auto => return run_algorithm(inst, detect(inst, opts), opts),
        Algorithm::Brute => brute_force_balanced_vertex(g, c, s)?,
        Algorithm::Clique => solve_clique(g, c, s)?,
        Algorithm::Diam2 => {
            if !diameter_two_checked(inst, opts)? {
                return Err(CliError::Precondition(
                    "graph has diameter greater than two".into(),
                ));
            }
            solve_diameter_two(g, c, s)?
        }
        Algorithm::Path => solve_path(g, c, s)?,
        Algorithm::Cycle => solve_cycle(g, c, s)?,
        Algorithm::Tree => solve_tree(g, c, s)?,
        Algorithm::Treewidth => solve_treewidth(g, &decomposition(inst), c, s)?,
        Algorithm::ProperInterval => solve_proper_interval(g, c, s)?,
    };
    Ok(result)
}

/// Solves and certifies the result against [`witness_load`].
pub fn solve(inst: &ProblemInstance, opts: &SolveOptions) -> CliResult<SolveReport> {
    let algo = match opts.algorithm {
        Algorithm::Auto => detect(inst, opts),
        a => a,
    };
    let start = Instant::now();
    let result = run_algorithm(inst, algo, opts)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let witness = witness_load(&inst.graph, &inst.costs, &inst.sites, result.best_vertex)?;
    let certified = witness.load == result.best_load && witness.site_loads == result.site_loads;
    Ok(SolveReport {
        best_vertex: result.best_vertex,
        best_load: result.best_load.to_string(),
        site_loads: result
            .site_loads
            .iter()
            .map(|l| SiteLoadJson {
                site: l.site,
                load: l.load.to_string(),
            })
            .collect(),
        certified,
        algorithm: algo.to_string(),
        wall_ms,
    })
}
