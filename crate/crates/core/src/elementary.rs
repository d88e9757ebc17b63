//! Linear-time solvers for cliques, diameter-two graphs, paths and cycles.
//!
//! Each solver has a `*_loads` form returning `L(S + v)` for every candidate
//! (`None` at sites) and a `solve_*` form returning the optimum.

use alloc::vec;
use alloc::vec::Vec;

use crate::classes::{is_complete, is_cycle, is_path, path_start, walk};
use crate::cost::{Cost, CostVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, SiteList, Vertex};
use crate::voronoi::{check_instance, finish, owners, territory_loads, SolveResult};

pub fn clique_loads(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    if !is_complete(g) {
        return Err(Error::NotAClique);
    }
    g.require_unweighted()?;
    let others: Cost = s.as_slice()[1..].iter().map(|&v| costs[v]).sum();
    let others_max = s.as_slice()[1..]
        .iter()
        .map(|&v| costs[v])
        .max()
        .unwrap_or(Cost::ZERO);
    let lambda = costs.total() - others;
    let mut out = vec![None; g.n()];
    for v in s.candidates() {
        let pv = costs[v];
        out[v] = Some(others_max.max(pv).max(lambda - pv));
    }
    Ok(out)
}

/// Balanced Vertex on a complete graph.
pub fn solve_clique(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SolveResult> {
    let loads = clique_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}

/// Loads on a graph of diameter at most two. The diameter is not checked.
pub fn diameter_two_loads(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    g.require_unweighted()?;
    let n = g.n();
    let (owner, dist) = owners(g, s.as_slice());
    let loads = territory_loads(&owner, costs.as_slice(), s.len());

    // Two largest loads among sites 2..p, as (load, index).
    let mut top: [Option<(Cost, usize)>; 2] = [None, None];
    for (i, &l) in loads.iter().enumerate().skip(1) {
        if top[0].is_none_or(|(b, _)| l > b) {
            top[1] = top[0];
            top[0] = Some((l, i));
        } else if top[1].is_none_or(|(b, _)| l > b) {
            top[1] = Some((l, i));
        }
    }
    let mu = |i: usize| -> Cost {
        match top {
            [Some((_, j)), second] if j == i => second.map_or(Cost::ZERO, |(l, _)| l),
            [first, _] => first.map_or(Cost::ZERO, |(l, _)| l),
        }
    };

    let mut out = vec![None; n];
    for v in s.candidates() {
        // π(N(v) \ N[S]): neighbors at distance two from every site.
        let a: Cost = g
            .neighbors(v)
            .iter()
            .filter(|&&w| dist[w] >= 2)
            .map(|&w| costs[w])
            .sum();
        let pv = costs[v];
        let i = owner[v];
        let load = if i == 0 {
            (a + pv).max(loads[0].saturating_sub(a + pv)).max(mu(0))
        } else {
            (a + pv)
                .max(loads[0].saturating_sub(a))
                .max(loads[i].saturating_sub(pv))
                .max(mu(i))
        };
        out[v] = Some(load);
    }
    Ok(out)
}

/// Balanced Vertex on a graph of diameter at most two (caller-asserted).
pub fn solve_diameter_two(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SolveResult> {
    let loads = diameter_two_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}

/// A maximal subpath `(w_0, …, w_{t-1})` around one component of `G \ S`.
///
/// The last node is always a site. The first node is a site too when
/// `two_sided`; otherwise it is a free end of the path (a component hanging
/// off the right end is stored reversed so that its site comes last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpath {
    pub nodes: Vec<Vertex>,
    /// `prefix[j] = π(w_0) + … + π(w_j)`.
    pub prefix: Vec<Cost>,
    /// Largest load among sites not on this subpath (`0` if none).
    pub lambda_cap: Cost,
    pub two_sided: bool,
}

impl Subpath {
    /// Prefix sums at the non-site positions of the subpath.
    pub fn interior_prefix_sums(&self) -> &[Cost] {
        let t = self.nodes.len();
        let from = usize::from(self.two_sided);
        &self.prefix[from..t - 1]
    }
}

/// Components of a path or cycle minus its sites, in walk order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub components: Vec<Subpath>,
}

/// Largest loads seen so far, enough to exclude the at most two sites of a
/// subpath.
struct Top3([Option<(Cost, usize)>; 3]);

impl Top3 {
    fn new(loads: &[Cost]) -> Self {
        let mut top: [Option<(Cost, usize)>; 3] = [None; 3];
        for (i, &l) in loads.iter().enumerate() {
            let mut item = (l, i);
            for slot in top.iter_mut() {
                match slot {
                    None => {
                        *slot = Some(item);
                        break;
                    }
                    Some(cur) if item.0 > cur.0 => core::mem::swap(cur, &mut item),
                    Some(_) => {}
                }
            }
        }
        Top3(top)
    }

    fn max_excluding(&self, excluded: &[usize]) -> Cost {
        self.0
            .iter()
            .flatten()
            .find(|(_, i)| !excluded.contains(i))
            .map_or(Cost::ZERO, |&(l, _)| l)
    }
}

impl PathDecomposition {
    /// Splits the sequence `order` (a path, or a cycle rotated to start at a
    /// site when `cyclic`) into subpaths.
    fn build(
        order: &[Vertex],
        costs: &CostVector,
        s: &SiteList,
        loads: &[Cost],
        cyclic: bool,
    ) -> Self {
        let top = Top3::new(loads);
        let mut components = Vec::new();
        let site_positions: Vec<usize> =
            (0..order.len()).filter(|&k| s.contains(order[k])).collect();
        let mut push = |nodes: Vec<Vertex>, two_sided: bool| {
            if nodes.len() < 2 || (two_sided && nodes.len() < 3) {
                return;
            }
            let mut prefix = Vec::with_capacity(nodes.len());
            let mut acc = Cost::ZERO;
            for &w in &nodes {
                acc += costs[w];
                prefix.push(acc);
            }
            let mut excluded = Vec::with_capacity(2);
            if two_sided {
                excluded.push(s.position(nodes[0]).unwrap());
            }
            excluded.push(s.position(*nodes.last().unwrap()).unwrap());
            components.push(Subpath {
                nodes,
                prefix,
                lambda_cap: top.max_excluding(&excluded),
                two_sided,
            });
        };
        let first = site_positions[0];
        let last = *site_positions.last().unwrap();
        if !cyclic {
            push(order[..=first].to_vec(), false);
        }
        for pair in site_positions.windows(2) {
            push(order[pair[0]..=pair[1]].to_vec(), true);
        }
        if cyclic {
            let mut nodes = order[last..].to_vec();
            nodes.push(order[first]);
            push(nodes, true);
        } else {
            let mut nodes = order[last..].to_vec();
            nodes.reverse();
            push(nodes, false);
        }
        PathDecomposition { components }
    }

    /// Decomposition of a path (walked from its smallest-id end).
    pub fn of_path(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Self> {
        Self::of_path_with_loads(g, costs, s).map(|(dec, _)| dec)
    }

    fn of_path_with_loads(
        g: &Graph,
        costs: &CostVector,
        s: &SiteList,
    ) -> Result<(Self, Vec<Cost>)> {
        check_instance(g, costs, s)?;
        if !is_path(g) {
            return Err(Error::NotAPath);
        }
        g.require_unweighted()?;
        let order = walk(g, path_start(g));
        let (owner, _) = owners(g, s.as_slice());
        let loads = territory_loads(&owner, costs.as_slice(), s.len());
        Ok((Self::build(&order, costs, s, &loads, false), loads))
    }

    /// Writes `L(S + v)` for every interior node of every subpath.
    fn evaluate(&self, loads: &[Cost], s: &SiteList, out: &mut [Option<Cost>]) {
        for c in &self.components {
            let t = c.nodes.len();
            let lam = |j: usize| c.prefix[j];
            let right = loads[s.position(c.nodes[t - 1]).unwrap()];
            if !c.two_sided {
                for j in 0..t - 1 {
                    let jr = (t - 1 + j).div_ceil(2) - 1;
                    let load = c.lambda_cap.max(lam(jr)).max(right - lam(jr));
                    out[c.nodes[j]] = Some(load);
                }
                continue;
            }
            let left = loads[s.position(c.nodes[0]).unwrap()];
            // Last position owned by the left site; ties go to it only when it
            // has the higher priority.
            let left_first = s.position(c.nodes[0]) < s.position(c.nodes[t - 1]);
            let mut jlim = 0;
            for k in 1..t - 1 {
                let (dl, dr) = (k, t - 1 - k);
                if dl < dr || (dl == dr && left_first) {
                    jlim = k;
                }
            }
            for j in 1..t - 1 {
                let jl = j / 2 + 1;
                let jr = (t - 1 + j).div_ceil(2) - 1;
                let own = lam(jr) - lam(jl - 1);
                let left_after = left - (lam(jlim) - lam(jl - 1));
                let right_after = right - (lam(jr) - lam(jlim));
                let load = c.lambda_cap.max(own).max(left_after).max(right_after);
                out[c.nodes[j]] = Some(load);
            }
        }
    }
}

pub fn path_loads(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Vec<Option<Cost>>> {
    let (dec, loads) = PathDecomposition::of_path_with_loads(g, costs, s)?;
    let mut out = vec![None; g.n()];
    dec.evaluate(&loads, s, &mut out);
    Ok(out)
}

/// Balanced Vertex on a path.
pub fn solve_path(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SolveResult> {
    let loads = path_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}

pub fn cycle_loads(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    if !is_cycle(g) {
        return Err(Error::NotACycle);
    }
    g.require_unweighted()?;
    let n = g.n();
    let mut out = vec![None; n];
    if s.len() == 1 {
        let order = walk(g, s.get(0));
        // prefix[k] = π(v_0) + … + π(v_{k-1}), so a window [lo, hi] sums to
        // prefix[hi + 1] - prefix[lo].
        let mut prefix = vec![Cost::ZERO; n + 1];
        for k in 0..n {
            prefix[k + 1] = prefix[k] + costs[order[k]];
        }
        let total = costs.total();
        for i in 1..n {
            let (lo, hi) = if 2 * i <= n {
                (i / 2 + 1, (n + i).div_ceil(2) - 1)
            } else {
                let m = n - i;
                (n + 1 - (n + m).div_ceil(2), n - m / 2 - 1)
            };
            let window = if lo <= hi {
                prefix[hi + 1] - prefix[lo]
            } else {
                Cost::ZERO
            };
            out[order[i]] = Some(window.max(total - window));
        }
        return Ok(out);
    }
    let first_site = (0..n).find(|&v| s.contains(v)).unwrap();
    let order = walk(g, first_site);
    let (owner, _) = owners(g, s.as_slice());
    let loads = territory_loads(&owner, costs.as_slice(), s.len());
    let dec = PathDecomposition::build(&order, costs, s, &loads, true);
    dec.evaluate(&loads, s, &mut out);
    Ok(out)
}

/// Balanced Vertex on a cycle.
pub fn solve_cycle(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SolveResult> {
    let loads = cycle_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}
