//! Balanced Vertex on graphs of bounded treewidth.
//!
//! The core routine, [`wall_delta`], computes for every vertex `v`
//!
//! ```text
//! δ(v) = π({u : d(u, v) < D(u)})
//! ```
//!
//! for a fixed bound `D`, by splitting the graph at a balanced bag,
//! counting cross-separator pairs with range trees and recursing on both
//! sides with the separator turned into a clique of in-graph distances.
//! With `D = d(·, S)` this is the load of a new site; with costs masked to
//! one territory it is what that site loses.

mod decomposition;

pub use decomposition::{heuristic_tree_decomposition, TreeDecomposition};

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cost::{Cost, CostVector};
use crate::error::{Error, Result};
use crate::graph::{distances_from, Graph, SiteList, Vertex};
use crate::rangetree::{Interval, KRangeTree};
use crate::voronoi::{check_instance, finish, owners, territory_loads, SolveResult};

/// Two sides covering the vertex set whose private parts are not adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorSplit {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    separator: Vec<Vertex>,
}

impl SeparatorSplit {
    pub fn new(g: &Graph, mut a: Vec<Vertex>, mut b: Vec<Vertex>) -> Result<Self> {
        let n = g.n();
        a.sort_unstable();
        a.dedup();
        b.sort_unstable();
        b.dedup();
        let mut side = vec![0u8; n];
        for (bit, set) in [(1u8, &a), (2u8, &b)] {
            for &v in set.iter() {
                g.check_vertex(v)?;
                side[v] |= bit;
            }
        }
        if let Some(v) = (0..n).find(|&v| side[v] == 0) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is on neither side"
            )));
        }
        if let Some((u, v, _)) = g
            .edges()
            .find(|&(u, v, _)| side[u] | side[v] == 3 && side[u] != 3 && side[v] != 3)
        {
            return Err(Error::InvalidArgument(format!(
                "edge {u}-{v} crosses the separator"
            )));
        }
        let separator = (0..n).filter(|&v| side[v] == 3).collect();
        Ok(SeparatorSplit { a, b, separator })
    }

    pub fn a(&self) -> &[Vertex] {
        &self.a
    }

    pub fn b(&self) -> &[Vertex] {
        &self.b
    }

    /// `A ∩ B`, ascending.
    pub fn separator(&self) -> &[Vertex] {
        &self.separator
    }

    fn private(&self, side: &[Vertex]) -> Vec<Vertex> {
        side.iter()
            .copied()
            .filter(|v| self.separator.binary_search(v).is_err())
            .collect()
    }
}

/// Distances are far below `i64::MAX`; clamp so differences cannot wrap.
fn signed(x: u64) -> i64 {
    x.min(u64::MAX >> 3) as i64
}

/// Adds, per channel, `Σ w(b)` over `b ∈ to` with `d(a, b) < bound(b)` to
/// `out[c][i]` for the `i`-th vertex `a` of `from`. Every route between the
/// two sets must pass through the separator whose distance rows are `dx`.
///
/// Each `b` is charged to the first separator vertex on a shortest route,
/// which makes the per-index boxes disjoint.
fn cross_delta(
    dx: &[Vec<u64>],
    from: &[usize],
    to: &[usize],
    channels: &[Vec<u64>],
    bound: &[u64],
    out: &mut [Vec<u64>],
) {
    let k = dx.len();
    if from.is_empty() || to.is_empty() || k == 0 {
        return;
    }
    let mut points: Vec<Vec<i64>> = Vec::with_capacity(to.len());
    let mut weights = Vec::with_capacity(to.len());
    let mut query = vec![Interval::any(); k];
    for (c, w) in channels.iter().enumerate() {
        let support: Vec<usize> = to.iter().copied().filter(|&b| w[b] > 0).collect();
        if support.is_empty() {
            continue;
        }
        for i in 0..k {
            points.clear();
            weights.clear();
            for &b in &support {
                let di = signed(dx[i][b]);
                points.push(
                    (0..k)
                        .map(|j| {
                            if j == i {
                                signed(bound[b]) - di
                            } else {
                                signed(dx[j][b]) - di
                            }
                        })
                        .collect(),
                );
                weights.push(w[b]);
            }
            let tree = KRangeTree::build(k, &points, &weights).expect("points share a dimension");
            for (slot, &a) in from.iter().enumerate() {
                let ai = signed(dx[i][a]);
                for (j, q) in query.iter_mut().enumerate() {
                    let diff = ai - signed(dx[j][a]);
                    *q = match j.cmp(&i) {
                        core::cmp::Ordering::Less => Interval::greater_than(diff),
                        core::cmp::Ordering::Equal => Interval::greater_than(ai),
                        core::cmp::Ordering::Greater => Interval::at_least(diff),
                    };
                }
                out[c][slot] += tree.query(&query);
            }
        }
    }
}

/// `δ(a, B) = π({b ∈ B ∖ X : d(a, b) < bound(b)})` for each `a ∈ A ∖ X`
/// (`None` elsewhere), using one range tree per separator vertex.
pub fn separator_delta(
    g: &Graph,
    split: &SeparatorSplit,
    costs: &CostVector,
    bound: &[u64],
) -> Result<Vec<Option<Cost>>> {
    costs.check_len(g.n())?;
    check_bound(g, bound)?;
    let x = split.separator();
    let dx: Vec<Vec<u64>> = x.iter().map(|&v| distances_from(g, &[v])).collect();
    let from = split.private(split.a());
    let to = split.private(split.b());
    let raw = vec![costs.as_slice().iter().map(|c| c.raw()).collect::<Vec<_>>()];
    let mut sums = vec![vec![0u64; from.len()]];
    cross_delta(&dx, &from, &to, &raw, bound, &mut sums);
    let mut out = vec![None; g.n()];
    for (i, &a) in from.iter().enumerate() {
        out[a] = Some(Cost::from_raw(sums[0][i]));
    }
    Ok(out)
}

fn check_bound(g: &Graph, bound: &[u64]) -> Result<()> {
    if bound.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "distance bound has {} entries for {} vertices",
            bound.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Sizes at one recursion step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRecord {
    pub depth: usize,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub separator: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WallStats {
    pub max_depth: usize,
    pub splits: Vec<SplitRecord>,
    /// Frames solved by all-pairs search.
    pub base_cases: usize,
}

/// A subproblem in local ids. Ascending local ids are ascending original ids.
struct Frame {
    g: Graph,
    orig: Vec<Vertex>,
    /// Vertices whose value is still owed by this frame.
    need: Vec<bool>,
    bound: Vec<u64>,
    /// Channel-major local weights.
    weights: Vec<Vec<u64>>,
    bags: Vec<Vec<usize>>,
    tree: Vec<Vec<usize>>,
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
    }
    true
}

impl Frame {
    /// Restricts the bag tree to vertices with `map[v] != usize::MAX`,
    /// rooted at `root`, folding every bag that became a subset of its
    /// parent's bag (including empty ones) into that parent.
    fn restrict(
        bags: &[Vec<usize>],
        tree: &[Vec<usize>],
        map: &[usize],
        root: usize,
    ) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut rep = vec![usize::MAX; bags.len()];
        let mut out_bags: Vec<Vec<usize>> = Vec::new();
        let mut out_tree: Vec<Vec<usize>> = Vec::new();
        let mut stack = vec![(root, usize::MAX)];
        while let Some((t, parent)) = stack.pop() {
            let bag: Vec<usize> = bags[t]
                .iter()
                .filter(|&&v| map[v] != usize::MAX)
                .map(|&v| map[v])
                .collect();
            let up = if parent == usize::MAX {
                usize::MAX
            } else {
                rep[parent]
            };
            if up != usize::MAX && is_subset(&bag, &out_bags[up]) {
                rep[t] = up;
            } else {
                let id = out_bags.len();
                out_bags.push(bag);
                out_tree.push(Vec::new());
                if up != usize::MAX {
                    out_tree[up].push(id);
                    out_tree[id].push(up);
                }
                rep[t] = id;
            }
            for &c in &tree[t] {
                if c != parent {
                    stack.push((c, t));
                }
            }
        }
        (out_bags, out_tree)
    }

    /// Bag whose removal leaves parts of the bag tree holding at most half
    /// the vertices each, charging every vertex to its topmost bag.
    fn centroid_bag(&self) -> usize {
        let nb = self.bags.len();
        let n = self.g.n();
        let mut parent = vec![usize::MAX; nb];
        let mut order = Vec::with_capacity(nb);
        let mut stack = vec![0usize];
        let mut seen = vec![false; nb];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            order.push(t);
            for &c in &self.tree[t] {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = t;
                    stack.push(c);
                }
            }
        }
        let mut charged = vec![false; n];
        let mut sub = vec![0usize; nb];
        for &t in &order {
            for &v in &self.bags[t] {
                if !charged[v] {
                    charged[v] = true;
                    sub[t] += 1;
                }
            }
        }
        for &t in order.iter().rev() {
            if parent[t] != usize::MAX {
                sub[parent[t]] += sub[t];
            }
        }
        let mut t = 0;
        while let Some(&c) = self.tree[t]
            .iter()
            .find(|&&c| c != parent[t] && 2 * sub[c] > n)
        {
            t = c;
        }
        t
    }

    /// Side frame on `keep` (ascending local ids, containing `x`), with the
    /// separator completed to a clique of distances.
    fn side(&self, keep: &[usize], x: &[usize], dx: &[Vec<u64>], root: usize) -> Frame {
        let n = self.g.n();
        let mut map = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let mut edges = Vec::new();
        for &u in keep {
            for (w, len) in self.g.arcs(u) {
                if u < w && map[w] != usize::MAX {
                    edges.push((map[u], map[w], len));
                }
            }
        }
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                edges.push((map[x[i]], map[x[j]], dx[i][x[j]]));
            }
        }
        let g = Graph::from_weighted_edges_merged(keep.len(), &edges, true);
        let in_x = |v: usize| x.binary_search(&v).is_ok();
        let (bags, tree) = Self::restrict(&self.bags, &self.tree, &map, root);
        Frame {
            g,
            orig: keep.iter().map(|&v| self.orig[v]).collect(),
            need: keep.iter().map(|&v| self.need[v] && !in_x(v)).collect(),
            bound: keep.iter().map(|&v| self.bound[v]).collect(),
            weights: self
                .weights
                .iter()
                .map(|w| keep.iter().map(|&v| w[v]).collect())
                .collect(),
            bags,
            tree,
        }
    }

    /// Adds `Σ w(u) [dist(u) < bound(u)]` per channel into `out` at `v`.
    fn direct(&self, dist: &[u64], v: usize, out: &mut [Vec<u64>]) {
        let ov = self.orig[v];
        for (c, w) in self.weights.iter().enumerate() {
            out[c][ov] += (0..dist.len())
                .filter(|&u| dist[u] < self.bound[u])
                .map(|u| w[u])
                .sum::<u64>();
        }
    }
}

struct Wall {
    out: Vec<Vec<u64>>,
    stats: WallStats,
}

impl Wall {
    fn solve(&mut self, f: Frame, depth: usize) {
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let n = f.g.n();
        if !f.need.iter().any(|&b| b) {
            return;
        }
        let bag_size = f.bags.iter().map(Vec::len).max().unwrap_or(0);
        if n <= bag_size || f.bags.len() <= 1 {
            return self.base(&f);
        }
        let t = f.centroid_bag();
        let x = f.bags[t].clone();
        let mut comp = vec![usize::MAX; n];
        for &v in &x {
            comp[v] = usize::MAX - 1;
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in f.g.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            comps.push(members);
        }
        if comps.len() < 2 {
            return self.base(&f);
        }

        let dx: Vec<Vec<u64>> = x.iter().map(|&v| distances_from(&f.g, &[v])).collect();
        for (i, &v) in x.iter().enumerate() {
            if f.need[v] {
                f.direct(&dx[i], v, &mut self.out);
            }
        }

        // Largest components first, each to the currently smaller side.
        comps.sort_by_key(|c| core::cmp::Reverse(c.len()));
        let (mut a_priv, mut b_priv) = (Vec::new(), Vec::new());
        for c in &comps {
            if a_priv.len() <= b_priv.len() {
                a_priv.extend_from_slice(c);
            } else {
                b_priv.extend_from_slice(c);
            }
        }
        a_priv.sort_unstable();
        b_priv.sort_unstable();
        self.stats.splits.push(SplitRecord {
            depth,
            n,
            a: a_priv.len() + x.len(),
            b: b_priv.len() + x.len(),
            separator: x.len(),
        });

        for (from, to) in [(&a_priv, &b_priv), (&b_priv, &a_priv)] {
            let wanted: Vec<usize> = from.iter().copied().filter(|&v| f.need[v]).collect();
            let mut sums = vec![vec![0u64; wanted.len()]; f.weights.len()];
            cross_delta(&dx, &wanted, to, &f.weights, &f.bound, &mut sums);
            for (c, row) in sums.iter().enumerate() {
                for (i, &v) in wanted.iter().enumerate() {
                    self.out[c][f.orig[v]] += row[i];
                }
            }
        }

        for private in [a_priv, b_priv] {
            let mut keep = private;
            keep.extend_from_slice(&x);
            keep.sort_unstable();
            let child = f.side(&keep, &x, &dx, t);
            self.solve(child, depth + 1);
        }
    }

    fn base(&mut self, f: &Frame) {
        self.stats.base_cases += 1;
        for v in 0..f.g.n() {
            if f.need[v] {
                let dist = distances_from(&f.g, &[v]);
                f.direct(&dist, v, &mut self.out);
            }
        }
    }
}

/// Runs the recursion once for several weight channels sharing the same
/// distances and splits. Returns raw per-channel sums.
fn wall_channels(
    g: &Graph,
    td: &TreeDecomposition,
    weights: Vec<Vec<u64>>,
    bound: &[u64],
) -> (Vec<Vec<u64>>, WallStats) {
    let n = g.n();
    let mut tree = vec![Vec::new(); td.bags().len()];
    for &(s, t) in td.edges() {
        tree[s].push(t);
        tree[t].push(s);
    }
    let identity: Vec<usize> = (0..n).collect();
    let (bags, tree) = Frame::restrict(td.bags(), &tree, &identity, 0);
    let frame = Frame {
        g: g.clone(),
        orig: identity,
        need: vec![true; n],
        bound: bound.to_vec(),
        weights,
        bags,
        tree,
    };
    let mut wall = Wall {
        out: vec![vec![0u64; n]; frame.weights.len()],
        stats: WallStats::default(),
    };
    wall.solve(frame, 0);
    (wall.out, wall.stats)
}

/// `δ(v) = π({u : d(u, v) < bound(u)})` for every vertex `v`.
///
/// With `bound = d(·, S)` and `v ∉ S` this is `ℓ(v, S + v)`. `td` must be a
/// valid decomposition of `g`; its width only affects running time.
pub fn wall_delta(
    g: &Graph,
    td: &TreeDecomposition,
    costs: &CostVector,
    bound: &[u64],
) -> Result<Vec<Cost>> {
    wall_delta_with_stats(g, td, costs, bound).map(|(d, _)| d)
}

pub fn wall_delta_with_stats(
    g: &Graph,
    td: &TreeDecomposition,
    costs: &CostVector,
    bound: &[u64],
) -> Result<(Vec<Cost>, WallStats)> {
    costs.check_len(g.n())?;
    check_bound(g, bound)?;
    td.validate(g)?;
    let raw = vec![costs.as_slice().iter().map(|c| c.raw()).collect()];
    let (out, stats) = wall_channels(g, td, raw, bound);
    Ok((out[0].iter().map(|&x| Cost::from_raw(x)).collect(), stats))
}

/// `L(S + v)` for every non-site from `|S| + 1` weight channels: the full
/// costs give the new site's load, and the costs of each territory give
/// what that site loses to `v`.
pub fn treewidth_loads(
    g: &Graph,
    td: &TreeDecomposition,
    costs: &CostVector,
    s: &SiteList,
) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    td.validate(g)?;
    let n = g.n();
    let bound = distances_from(g, s.as_slice());
    let (owner, _) = owners(g, s.as_slice());
    let site_loads = territory_loads(&owner, costs.as_slice(), s.len());
    let raw: Vec<u64> = costs.as_slice().iter().map(|c| c.raw()).collect();
    let mut weights = Vec::with_capacity(s.len() + 1);
    weights.push(raw.clone());
    for i in 0..s.len() {
        weights.push(
            (0..n)
                .map(|u| if owner[u] == i { raw[u] } else { 0 })
                .collect(),
        );
    }
    let (delta, _) = wall_channels(g, td, weights, &bound);
    let mut loads = vec![None; n];
    for v in s.candidates() {
        let mut load = Cost::from_raw(delta[0][v]);
        for (i, &own) in site_loads.iter().enumerate() {
            load = load.max(own.saturating_sub(Cost::from_raw(delta[i + 1][v])));
        }
        loads[v] = Some(load);
    }
    Ok(loads)
}

pub fn solve_treewidth(
    g: &Graph,
    td: &TreeDecomposition,
    costs: &CostVector,
    s: &SiteList,
) -> Result<SolveResult> {
    let loads = treewidth_loads(g, td, costs, s)?;
    finish(g, costs, s, &loads)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::voronoi::{brute_force_loads, witness_load};
    use rand::rngs::SmallRng;
    use rand::{Rng, SeedableRng};

    fn units(v: &[u64]) -> CostVector {
        CostVector::from_units(v.iter().copied()).unwrap()
    }

    /// `Σ π(u) [d(u, v) < bound(u)]` from all-pairs distances.
    fn delta_oracle(g: &Graph, costs: &CostVector, bound: &[u64]) -> Vec<Cost> {
        (0..g.n())
            .map(|v| {
                let d = distances_from(g, &[v]);
                (0..g.n())
                    .filter(|&u| d[u] < bound[u])
                    .map(|u| costs[u])
                    .sum()
            })
            .collect()
    }

    #[test]
    fn separator_example() {
        // a=0, x=1, b=2
        let g = gen::path(3);
        let split = SeparatorSplit::new(&g, vec![0, 1], vec![1, 2]).unwrap();
        assert_eq!(split.separator(), &[1]);
        let costs = units(&[1, 2, 5]);
        let d = separator_delta(&g, &split, &costs, &[9, 9, 2]).unwrap();
        assert_eq!(d, vec![Some(Cost::ZERO), None, None]);
        let d = separator_delta(&g, &split, &costs, &[9, 9, 3]).unwrap();
        assert_eq!(d[0], Some(Cost::from_units(5)));

        let none = SeparatorSplit::new(&g, vec![0, 1, 2], vec![1, 2]).unwrap();
        let d = separator_delta(&g, &none, &costs, &[9, 9, 9]).unwrap();
        assert_eq!(d[0], Some(Cost::ZERO));

        assert!(SeparatorSplit::new(&g, vec![0], vec![1, 2]).is_err());
        assert!(SeparatorSplit::new(&g, vec![0, 1], vec![1]).is_err());
    }

    #[test]
    fn separator_matches_double_loop() {
        let mut rng = SmallRng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(4..40);
            let (g, td) = gen::random_partial_k_tree(n, 3, 0.5, &mut rng);
            let costs = gen::random_costs(n, 100, &mut rng);
            let bound: Vec<u64> = (0..n).map(|_| rng.gen_range(0..8)).collect();
            // Any bag separates the subtrees hanging off it.
            let t = rng.gen_range(0..td.bags().len());
            let x = &td.bags()[t];
            let mut rest: Vec<Vertex> = (0..n).filter(|v| !x.contains(v)).collect();
            let mut comp = vec![usize::MAX; n];
            let mut a = x.clone();
            let mut b = x.clone();
            while let Some(s) = rest.pop() {
                if comp[s] != usize::MAX {
                    continue;
                }
                let mut stack = vec![s];
                comp[s] = s;
                let mut members = Vec::new();
                while let Some(u) = stack.pop() {
                    members.push(u);
                    for &w in g.neighbors(u) {
                        if comp[w] == usize::MAX && !x.contains(&w) {
                            comp[w] = s;
                            stack.push(w);
                        }
                    }
                }
                if rng.gen_bool(0.5) {
                    a.extend(members)
                } else {
                    b.extend(members)
                }
            }
            let split = SeparatorSplit::new(&g, a, b).unwrap();
            let got = separator_delta(&g, &split, &costs, &bound).unwrap();
            let private_b: Vec<Vertex> = split.private(split.b());
            for v in 0..n {
                let want = split.private(split.a()).contains(&v).then(|| {
                    let d = distances_from(&g, &[v]);
                    private_b
                        .iter()
                        .filter(|&&u| d[u] < bound[u])
                        .map(|&u| costs[u])
                        .sum()
                });
                assert_eq!(got[v], want);
            }
        }
    }

    #[test]
    fn wall_matches_all_pairs() {
        let mut rng = SmallRng::seed_from_u64(5);
        for round in 0..80 {
            let n = rng.gen_range(1..60);
            let k = 1 + round % 3;
            let (g, td) = gen::random_partial_k_tree(n, k, 0.5, &mut rng);
            let td = if round % 2 == 0 {
                td
            } else {
                heuristic_tree_decomposition(&g)
            };
            let costs = gen::random_costs(n, 100, &mut rng);
            let bound: Vec<u64> = (0..n).map(|_| rng.gen_range(0..10)).collect();
            let got = wall_delta(&g, &td, &costs, &bound).unwrap();
            assert_eq!(got, delta_oracle(&g, &costs, &bound));
        }
    }

    #[test]
    fn wall_on_weighted_graphs() {
        let mut rng = SmallRng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(2..40);
            let g = gen::random_weighted(n, n / 3, 5, &mut rng);
            let td = heuristic_tree_decomposition(&g);
            let costs = gen::random_costs(n, 50, &mut rng);
            let bound: Vec<u64> = (0..n).map(|_| rng.gen_range(0..15)).collect();
            assert_eq!(
                wall_delta(&g, &td, &costs, &bound).unwrap(),
                delta_oracle(&g, &costs, &bound)
            );
        }
    }

    #[test]
    fn single_site_delta_is_new_site_load() {
        let mut rng = SmallRng::seed_from_u64(2);
        for _ in 0..30 {
            let n = rng.gen_range(2..50);
            let (g, td) = gen::random_partial_k_tree(n, 2, 0.6, &mut rng);
            let costs = gen::random_costs(n, 100, &mut rng);
            let s = gen::random_sites_of_size(n, 1, &mut rng);
            let bound = distances_from(&g, s.as_slice());
            let delta = wall_delta(&g, &td, &costs, &bound).unwrap();
            for v in s.candidates() {
                let w = witness_load(&g, &costs, &s, v).unwrap();
                assert_eq!(delta[v], w.new_site_load);
                assert!(delta[v] >= costs[v]);
            }
        }
    }

    #[test]
    fn splits_are_balanced() {
        let mut rng = SmallRng::seed_from_u64(8);
        let (g, td) = gen::random_partial_k_tree(600, 2, 0.7, &mut rng);
        let costs = gen::random_costs(600, 10, &mut rng);
        let bound = vec![3; 600];
        let (_, stats) = wall_delta_with_stats(&g, &td, &costs, &bound).unwrap();
        assert!(!stats.splits.is_empty());
        for r in &stats.splits {
            assert!(3 * r.a.max(r.b) <= 2 * r.n + 3 * r.separator, "{r:?}");
            assert!(r.a < r.n && r.b < r.n);
        }
        // log_{3/2}(600) < 16, plus slack for separator overlap.
        assert!(stats.max_depth <= 24, "depth {}", stats.max_depth);
    }

    #[test]
    fn solver_matches_brute_force() {
        let mut rng = SmallRng::seed_from_u64(17);
        for round in 0..120 {
            let n = rng.gen_range(2..50);
            let (g, td) = gen::random_partial_k_tree(n, 1 + round % 3, 0.5, &mut rng);
            let costs = gen::random_costs(n, 100, &mut rng);
            let p = rng.gen_range(1..n.min(6));
            let s = gen::random_sites_of_size(n, p, &mut rng);
            assert_eq!(
                treewidth_loads(&g, &td, &costs, &s).unwrap(),
                brute_force_loads(&g, &costs, &s).unwrap()
            );
            let r = solve_treewidth(&g, &td, &costs, &s).unwrap();
            assert_eq!(
                witness_load(&g, &costs, &s, r.best_vertex).unwrap().load,
                r.best_load
            );
        }
    }

    #[test]
    fn cycles_and_trees_agree_with_dedicated_solvers() {
        let mut rng = SmallRng::seed_from_u64(4);
        for _ in 0..30 {
            let n = rng.gen_range(3..40);
            let costs = gen::random_costs(n, 100, &mut rng);
            let s = gen::random_sites(n, &mut rng);
            let c = gen::random_cycle(n, &mut rng);
            let td = heuristic_tree_decomposition(&c);
            assert_eq!(
                solve_treewidth(&c, &td, &costs, &s).unwrap().best_load,
                crate::elementary::solve_cycle(&c, &costs, &s)
                    .unwrap()
                    .best_load
            );
            let t = gen::random_tree(n, &mut rng);
            let td = heuristic_tree_decomposition(&t);
            assert_eq!(
                solve_treewidth(&t, &td, &costs, &s).unwrap().best_load,
                crate::tree::solve_tree(&t, &costs, &s).unwrap().best_load
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = gen::path(3);
        let bad = TreeDecomposition::new(vec![vec![0, 1]], vec![]);
        let s = SiteList::new(vec![0], 3).unwrap();
        assert!(matches!(
            solve_treewidth(&g, &bad, &units(&[1, 1, 1]), &s),
            Err(Error::Decomposition(_))
        ));
        let td = heuristic_tree_decomposition(&g);
        assert!(wall_delta(&g, &td, &units(&[1, 1, 1]), &[0, 0]).is_err());
    }
}
