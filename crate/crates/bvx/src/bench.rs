//! Wall-time ladders over generated instance families.
//!
//! Instances run one after another on the calling thread, so timings of
//! different sizes do not compete for cores.

use std::time::Instant;

use bvx_core::elementary::solve_cycle;
use bvx_core::hardness::{build_hardness_graph, random_instance};
use bvx_core::interval::solve_proper_interval;
use bvx_core::tree::solve_tree;
use bvx_core::treewidth::{solve_treewidth, TreeDecomposition};
use bvx_core::{brute_force_balanced_vertex, gen, CostVector, Graph, SiteList};
use clap::ValueEnum;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Tree,
    Cycle,
    ProperInterval,
    PartialKTree,
    Hardness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchSolver {
    /// The dedicated solver of the family; hardness graphs have none and
    /// fall back to brute force.
    Specialized,
    Brute,
}

/// One ladder: the family at sizes `2^e` for each exponent.
#[derive(Debug, Clone)]
pub struct Ladder {
    pub family: Family,
    pub solver: BenchSolver,
    pub exponents: Vec<u32>,
    pub repeats: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: Family,
    pub solver: BenchSolver,
    pub n: usize,
    pub m: usize,
    /// Fastest of the repeats, in milliseconds.
    pub ms: f64,
    /// Time over the previous row of the same ladder.
    pub ratio: Option<f64>,
}

/// The ladders `bvx bench` runs without `--family`.
pub fn default_suite() -> Vec<Ladder> {
    let ladder = |family, solver, lo, hi| Ladder {
        family,
        solver,
        exponents: (lo..=hi).collect(),
        repeats: 3,
    };
    vec![
        ladder(Family::Tree, BenchSolver::Specialized, 14, 18),
        ladder(Family::Tree, BenchSolver::Brute, 10, 13),
        ladder(Family::Cycle, BenchSolver::Specialized, 14, 18),
        ladder(Family::ProperInterval, BenchSolver::Specialized, 14, 18),
        ladder(Family::PartialKTree, BenchSolver::Specialized, 10, 14),
        ladder(Family::Hardness, BenchSolver::Brute, 8, 11),
    ]
}

/// A generated instance with whatever its solver needs.
pub struct BenchInstance {
    pub graph: Graph,
    pub costs: CostVector,
    pub sites: SiteList,
    pub td: Option<TreeDecomposition>,
}

/// Instance of `family` with about `n` vertices.
pub fn instance(family: Family, n: usize, rng: &mut SmallRng) -> BenchInstance {
    let (graph, td) = match family {
        Family::Tree => (gen::random_tree(n, rng), None),
        Family::Cycle => (gen::random_cycle(n.max(3), rng), None),
        Family::ProperInterval => (gen::random_proper_interval(n, 4, rng), None),
        Family::PartialKTree => {
            let (g, td) = gen::random_partial_k_tree(n, 2, 0.8, rng);
            (g, Some(td))
        }
        Family::Hardness => {
            // About four vertices per set once reduced.
            let sets = (n / 4).max(2);
            let k = 2 * sets.ilog2() as usize;
            let h = build_hardness_graph(&random_instance(sets, k, 0.5, rng))
                .expect("reduced instances are structured");
            return BenchInstance {
                graph: h.graph,
                costs: h.costs,
                sites: h.sites,
                td: None,
            };
        }
    };
    let n = graph.n();
    let costs = gen::random_costs(n, 100, rng);
    let p = rng.gen_range(1..=8.min(n - 1).max(1));
    let sites = gen::random_sites_of_size(n, p, rng);
    BenchInstance {
        graph,
        costs,
        sites,
        td,
    }
}

/// Solves the instance once with the ladder's solver.
pub fn solve_once(family: Family, solver: BenchSolver, inst: &BenchInstance) -> CliResult<()> {
    let (g, c, s) = (&inst.graph, &inst.costs, &inst.sites);
    match (solver, family) {
        (BenchSolver::Brute, _) | (_, Family::Hardness) => brute_force_balanced_vertex(g, c, s)?,
        (_, Family::Tree) => solve_tree(g, c, s)?,
        (_, Family::Cycle) => solve_cycle(g, c, s)?,
        (_, Family::ProperInterval) => solve_proper_interval(g, c, s)?,
        (_, Family::PartialKTree) => solve_treewidth(g, inst.td.as_ref().unwrap(), c, s)?,
    };
    Ok(())
}

/// Minimum wall time of `repeats` runs of `f`, in milliseconds.
pub fn time_min<F: FnMut() -> CliResult<()>>(repeats: usize, mut f: F) -> CliResult<f64> {
    let mut best = f64::INFINITY;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        f()?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(best)
}

pub fn run(ladders: &[Ladder], seed: u64) -> CliResult<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for ladder in ladders {
        let mut rng = SmallRng::seed_from_u64(seed);
        let mut prev: Option<f64> = None;
        for &e in &ladder.exponents {
            let inst = instance(ladder.family, 1usize << e, &mut rng);
            let ms = time_min(ladder.repeats, || solve_once(ladder.family, ladder.solver, &inst))?;
            rows.push(BenchRow {
                family: ladder.family,
                solver: ladder.solver,
                n: inst.graph.n(),
                m: inst.graph.m(),
                ms,
                ratio: prev.map(|p| ms / p),
            });
            prev = Some(ms);
        }
    }
    Ok(rows)
}

pub fn write_csv<W: std::io::Write>(rows: &[BenchRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_gives_empty_report() {
        assert!(run(&[], 1).unwrap().is_empty());
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert!(buf.is_empty());
    }

    #[test]
    fn small_ladders_run_every_family() {
        let ladders: Vec<Ladder> = [
            Family::Tree,
            Family::Cycle,
            Family::ProperInterval,
            Family::PartialKTree,
            Family::Hardness,
        ]
        .into_iter()
        .flat_map(|family| {
            [BenchSolver::Specialized, BenchSolver::Brute].map(|solver| Ladder {
                family,
                solver,
                exponents: vec![5, 6],
                repeats: 1,
            })
        })
        .collect();
        let rows = run(&ladders, 3).unwrap();
        assert_eq!(rows.len(), 20);
        assert!(rows.iter().step_by(2).all(|r| r.ratio.is_none()));
        assert!(rows.iter().skip(1).step_by(2).all(|r| r.ratio.is_some()));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("family,solver,n,m,ms,ratio\n"));
        assert!(text.contains("partial-k-tree,specialized,"));
    }
}
