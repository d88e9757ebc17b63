//! Invariant checks on the prioritized Voronoi diagram of an instance.

use bvx_core::graph::bfs_distances;
use bvx_core::{prioritized_voronoi, CostVector, Graph, SiteList, VoronoiDiagram};
use serde::Serialize;

use crate::error::CliResult;
use crate::instance::ProblemInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub status: Status,
    /// Counterexample on failure, reason when skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    fn from(name: &'static str, outcome: Result<(), String>) -> Self {
        match outcome {
            Ok(()) => CheckReport {
                name,
                status: Status::Pass,
                detail: None,
            },
            Err(e) => CheckReport {
                name,
                status: Status::Fail,
                detail: Some(e),
            },
        }
    }

    fn skipped(name: &'static str, why: String) -> Self {
        CheckReport {
            name,
            status: Status::Skipped,
            detail: Some(why),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ValidateOptions {
    /// Largest `n` for the checks that need all-pairs distances.
    pub max_all_pairs: usize,
    /// Candidates examined by the territory check above that bound.
    pub sampled_candidates: usize,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            max_all_pairs: 2000,
            sampled_candidates: 32,
        }
    }
}

pub fn validate(inst: &ProblemInstance, opts: &ValidateOptions) -> CliResult<Vec<CheckReport>> {
    let vor = prioritized_voronoi(&inst.graph, &inst.costs, &inst.sites)?;
    Ok(check_diagram(
        &inst.graph,
        &inst.costs,
        &inst.sites,
        &vor,
        opts,
    ))
}

/// Checks a diagram against independent distance computations. The diagram
/// is taken as given so that corrupted ones can be fed in.
pub fn check_diagram(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
    vor: &VoronoiDiagram,
    opts: &ValidateOptions,
) -> Vec<CheckReport> {
    let n = g.n();
    let per_site: Vec<Vec<u64>> = s
        .as_slice()
        .iter()
        .map(|&x| bfs_distances(g, x).expect("site in range"))
        .collect();
    let mut out = vec![
        CheckReport::from("partition", partition(n, costs, s, vor)),
        CheckReport::from("distances", distances(n, &per_site, vor)),
        CheckReport::from("priority", priority(n, &per_site, vor)),
        CheckReport::from("connectivity", connectivity(g, s, vor)),
    ];
    if vor.owner.iter().any(|&o| o >= s.len()) {
        out.push(CheckReport::skipped(
            "metric-interval",
            "owner array is malformed".into(),
        ));
        out.push(CheckReport::skipped(
            "territory",
            "owner array is malformed".into(),
        ));
        return out;
    }
    if n <= opts.max_all_pairs {
        out.push(CheckReport::from(
            "metric-interval",
            metric_interval(g, s, vor),
        ));
    } else {
        out.push(CheckReport::skipped(
            "metric-interval",
            format!("n = {n} exceeds the all-pairs bound {}", opts.max_all_pairs),
        ));
    }
    let limit = if n <= opts.max_all_pairs {
        n
    } else {
        opts.sampled_candidates
    };
    out.push(CheckReport::from(
        "territory",
        territory(g, costs, s, vor, &per_site, limit),
    ));
    out
}

fn partition(
    n: usize,
    costs: &CostVector,
    s: &SiteList,
    vor: &VoronoiDiagram,
) -> Result<(), String> {
    if vor.owner.len() != n {
        return Err(format!(
            "owner array has {} entries for {n} vertices",
            vor.owner.len()
        ));
    }
    if let Some(v) = (0..n).find(|&v| vor.owner[v] >= s.len()) {
        return Err(format!(
            "vertex {v} has owner index {} of {}",
            vor.owner[v],
            s.len()
        ));
    }
    for (i, &x) in s.as_slice().iter().enumerate() {
        if vor.owner[x] != i {
            return Err(format!("site {x} is not in its own territory"));
        }
    }
    let mut loads = vec![0u64; s.len()];
    for v in 0..n {
        loads[vor.owner[v]] += costs.as_slice()[v].raw();
    }
    if let Some(i) = (0..s.len()).find(|&i| vor.loads.get(i).map(|l| l.raw()) != Some(loads[i])) {
        return Err(format!(
            "load of site {} does not match its territory",
            s.get(i)
        ));
    }
    Ok(())
}

fn distances(n: usize, per_site: &[Vec<u64>], vor: &VoronoiDiagram) -> Result<(), String> {
    for v in 0..n {
        let d = per_site.iter().map(|d| d[v]).min().unwrap();
        if vor.dist.get(v) != Some(&d) {
            return Err(format!(
                "d({v}, S) is {d}, diagram says {:?}",
                vor.dist.get(v)
            ));
        }
    }
    Ok(())
}

fn priority(n: usize, per_site: &[Vec<u64>], vor: &VoronoiDiagram) -> Result<(), String> {
    for v in 0..n {
        let d = per_site.iter().map(|d| d[v]).min().unwrap();
        let first = per_site.iter().position(|ds| ds[v] == d).unwrap();
        if vor.owner.get(v) != Some(&first) {
            return Err(format!(
                "vertex {v} belongs to site index {:?}, first closest is {first}",
                vor.owner.get(v)
            ));
        }
    }
    Ok(())
}

fn connectivity(g: &Graph, s: &SiteList, vor: &VoronoiDiagram) -> Result<(), String> {
    let n = g.n();
    let mut seen = vec![false; n];
    for (i, &x) in s.as_slice().iter().enumerate() {
        if vor.owner.get(x) != Some(&i) {
            continue;
        }
        seen[x] = true;
        let mut stack = vec![x];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] && vor.owner.get(w) == Some(&i) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    match (0..n.min(vor.owner.len())).find(|&v| !seen[v]) {
        Some(v) => Err(format!(
            "vertex {v} is cut off from site {} inside its territory",
            s.as_slice()
                .get(vor.owner[v])
                .map_or("?".into(), |x| x.to_string())
        )),
        None => Ok(()),
    }
}

fn metric_interval(g: &Graph, s: &SiteList, vor: &VoronoiDiagram) -> Result<(), String> {
    let n = g.n();
    let d: Vec<Vec<u64>> = (0..n)
        .map(|v| bfs_distances(g, v).expect("in range"))
        .collect();
    for v in 0..n {
        let x = s.get(vor.owner[v]);
        for w in 0..n {
            if d[v][x] == d[v][w] + d[w][x] && vor.owner[w] != vor.owner[v] {
                return Err(format!(
                    "{w} lies on a shortest path from {v} to its site {x} but not in its territory"
                ));
            }
        }
    }
    Ok(())
}

/// `T(v, S + v)` from a fresh diagram against the vertices strictly closer to
/// `v` than to their current site.
fn territory(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
    vor: &VoronoiDiagram,
    per_site: &[Vec<u64>],
    limit: usize,
) -> Result<(), String> {
    for v in s.candidates().take(limit) {
        let sv = s.with(v).expect("candidate");
        let after = prioritized_voronoi(g, costs, &sv).map_err(|e| e.to_string())?;
        let dv = bfs_distances(g, v).expect("in range");
        for u in 0..g.n() {
            let closer = dv[u] < per_site[vor.owner[u]][u];
            if (after.owner[u] == s.len()) != closer {
                return Err(format!("new site {v}: vertex {u} is misassigned"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use bvx_core::gen;

    fn all_pass(r: &[CheckReport]) -> bool {
        r.iter().all(|c| c.status == Status::Pass)
    }

    #[test]
    fn valid_instance_passes() {
        let inst = ProblemInstance::from_text("p 4 3\ne 0 1\ne 1 2\ne 2 3\ns 3 0\n").unwrap();
        let r = validate(&inst, &ValidateOptions::default()).unwrap();
        assert_eq!(r.len(), 6);
        assert!(all_pass(&r), "{r:?}");
    }

    #[test]
    fn corrupted_owner_breaks_connectivity() {
        let g = gen::path(7);
        let costs = CostVector::uniform(7, bvx_core::Cost::from_units(1)).unwrap();
        let s = SiteList::new(vec![0, 6], 7).unwrap();
        let mut vor = prioritized_voronoi(&g, &costs, &s).unwrap();
        vor.owner[1] = 1;
        let r = check_diagram(&g, &costs, &s, &vor, &ValidateOptions::default());
        let conn = r.iter().find(|c| c.name == "connectivity").unwrap();
        assert_eq!(conn.status, Status::Fail);
        assert!(conn.detail.as_ref().unwrap().contains("vertex 1"));
        assert_eq!(
            r.iter().find(|c| c.name == "priority").unwrap().status,
            Status::Fail
        );
    }

    #[test]
    fn large_instances_skip_all_pairs() {
        let inst = ProblemInstance::from_text("p 3 2\ne 0 1\ne 1 2\ns 1\n").unwrap();
        let opts = ValidateOptions {
            max_all_pairs: 2,
            sampled_candidates: 1,
        };
        let r = validate(&inst, &opts).unwrap();
        let mi = r.iter().find(|c| c.name == "metric-interval").unwrap();
        assert_eq!(mi.status, Status::Skipped);
        assert_eq!(
            r.iter().find(|c| c.name == "territory").unwrap().status,
            Status::Pass
        );
    }
}
