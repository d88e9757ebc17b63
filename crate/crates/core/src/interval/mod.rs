//! Balanced Vertex on proper interval graphs in `O(m + n log n)`.
//!
//! Both loads of a candidate `v` in layer `j` (distance from `x0`) are read
//! off the σ distance formula: a vertex `u` with `d(u, S) = D` moves to `v`
//! for certain when `D > |j - layer(u)| + 1`, never when it is smaller, and
//! on the boundary exactly when σ puts it on the near side of `v`. One sweep
//! per direction with a Fenwick tree over σ gives `ℓ(v, S + v)`; a layer
//! sweep over an addressable max-heap of site keys gives
//! `max_s ℓ(s, S + v)`.

mod order;

pub use order::{recognize_proper_interval, sigma_ordering, SigmaOrdering, UmbrellaOrder};

use alloc::vec;
use alloc::vec::Vec;

use crate::cost::{Cost, CostVector};
use crate::error::{Error, Result};
use crate::graph::{distances_from, Graph, SiteList, Vertex};
use crate::voronoi::{
    check_instance, finish, owners, territory_loads as site_territory_loads, SolveResult,
};

/// Prefix sums over σ ranks.
struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![0; n + 1],
        }
    }

    fn add(&mut self, i: usize, x: u64) {
        let mut i = i + 1;
        while i < self.tree.len() {
            self.tree[i] = self.tree[i].wrapping_add(x);
            i += i & i.wrapping_neg();
        }
    }

    fn sub(&mut self, i: usize, x: u64) {
        self.add(i, x.wrapping_neg());
    }

    /// Sum over ranks `< i`.
    fn prefix(&self, i: usize) -> u64 {
        let mut i = i;
        let mut s = 0u64;
        while i > 0 {
            s = s.wrapping_add(self.tree[i]);
            i -= i & i.wrapping_neg();
        }
        s
    }

    fn total(&self) -> u64 {
        self.prefix(self.tree.len() - 1)
    }
}

/// Binary max-heap over items `0..len` with in-place key updates.
struct KeyHeap {
    key: Vec<u64>,
    heap: Vec<usize>,
    pos: Vec<usize>,
}

impl KeyHeap {
    fn new(key: Vec<u64>) -> Self {
        let len = key.len();
        let mut h = KeyHeap {
            key,
            heap: (0..len).collect(),
            pos: (0..len).collect(),
        };
        for i in (0..len / 2).rev() {
            h.down(i);
        }
        h
    }

    fn max(&self) -> u64 {
        self.key[self.heap[0]]
    }

    fn add(&mut self, item: usize, x: u64) {
        self.key[item] += x;
        self.up(self.pos[item]);
    }

    fn sub(&mut self, item: usize, x: u64) {
        self.key[item] -= x;
        self.down(self.pos[item]);
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.pos[self.heap[a]] = a;
        self.pos[self.heap[b]] = b;
    }

    fn up(&mut self, mut i: usize) {
        while i > 0 {
            let p = (i - 1) / 2;
            if self.key[self.heap[p]] >= self.key[self.heap[i]] {
                break;
            }
            self.swap(i, p);
            i = p;
        }
    }

    fn down(&mut self, mut i: usize) {
        let len = self.heap.len();
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < len && self.key[self.heap[l]] > self.key[self.heap[best]] {
                best = l;
            }
            if r < len && self.key[self.heap[r]] > self.key[self.heap[best]] {
                best = r;
            }
            if best == i {
                break;
            }
            self.swap(i, best);
            i = best;
        }
    }
}

/// Everything both sweeps read: layers, σ, distances to `S` and owners.
struct Layout<'a> {
    sig: &'a SigmaOrdering,
    cost: Vec<u64>,
    /// `d(u, S)`.
    ds: Vec<u64>,
    /// Priority index of `s_u`.
    owner: Vec<usize>,
    /// Vertices of each layer, ascending by σ.
    layers: Vec<Vec<Vertex>>,
    is_site: Vec<bool>,
}

impl<'a> Layout<'a> {
    fn new(g: &Graph, sig: &'a SigmaOrdering, costs: &CostVector, s: &SiteList) -> Self {
        let n = g.n();
        let ds = distances_from(g, s.as_slice());
        let (owner, _) = owners(g, s.as_slice());
        let depth = sig.layer.iter().copied().max().unwrap_or(0) as usize;
        let mut by_sigma = vec![0; n];
        for v in 0..n {
            by_sigma[sig.sigma[v]] = v;
        }
        let mut layers = vec![Vec::new(); depth + 1];
        for &v in &by_sigma {
            layers[sig.layer[v] as usize].push(v);
        }
        Layout {
            sig,
            cost: costs.as_slice().iter().map(|c| c.raw()).collect(),
            ds,
            owner,
            layers,
            is_site: (0..n).map(|v| s.contains(v)).collect(),
        }
    }

    fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    fn layer(&self, u: Vertex) -> usize {
        self.sig.layer[u] as usize
    }

    fn n(&self) -> usize {
        self.cost.len()
    }
}

/// Counts of from-scratch invariant checks made by the instrumented sweeps.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepAudit {
    pub checks: usize,
    pub violations: usize,
}

/// `ℓ(v, S + v)` per non-site, with optional invariant checks per layer.
fn new_site_sweeps(lay: &Layout, audit: Option<&mut SweepAudit>) -> Vec<Option<Cost>> {
    let n = lay.n();
    let e = lay.depth();
    let mut audit = audit;
    let mut lam_minus = vec![0u64; n];
    let mut lam_plus = vec![0u64; n];

    // Forward: u in layer a < j counts for sure while D > j - a + 1 and sits
    // in the tree at j = D + a - 1.
    let mut add = vec![Vec::new(); e + 2];
    let mut drop = vec![Vec::new(); e + 2];
    let mut ins = vec![Vec::new(); e + 2];
    let mut del = vec![Vec::new(); e + 2];
    for u in 0..n {
        let (a, d) = (lay.layer(u), lay.ds[u] as usize);
        if d >= 3 && a < e {
            add[a + 1].push(u);
            drop[(d + a - 1).min(e + 1)].push(u);
        }
        if d >= 2 && d + a - 1 <= e {
            ins[d + a - 1].push(u);
            del[d + a].push(u);
        }
    }
    let mut fen = Fenwick::new(n);
    let mut lam = 0u64;
    let mut in_tree = vec![false; n];
    for j in 0..=e {
        for &u in &add[j] {
            lam += lay.cost[u];
        }
        for &u in &drop[j] {
            lam -= lay.cost[u];
        }
        for &u in &del[j] {
            fen.sub(lay.sig.sigma[u], lay.cost[u]);
            in_tree[u] = false;
        }
        for &u in &ins[j] {
            fen.add(lay.sig.sigma[u], lay.cost[u]);
            in_tree[u] = true;
        }
        if let Some(a) = audit.as_deref_mut() {
            let mut want = 0u64;
            let mut ok = true;
            for u in 0..n {
                let (l, d) = (lay.layer(u), lay.ds[u] as usize);
                if l < j && d > j - l + 1 {
                    want += lay.cost[u];
                }
                ok &= in_tree[u] == (l < j && d == j - l + 1);
            }
            a.checks += 1;
            if !ok || want != lam {
                a.violations += 1;
            }
        }
        for &v in &lay.layers[j] {
            if !lay.is_site[v] {
                let r = lay.sig.sigma[v];
                lam_minus[v] = lam + (fen.total() - fen.prefix(r + 1));
            }
        }
    }

    // Backward: u in layer a > j counts for sure while D > a - j + 1 and sits
    // in the tree at j = a - D + 1.
    let mut add = vec![Vec::new(); e + 1];
    let mut drop = vec![Vec::new(); e + 1];
    let mut ins = vec![Vec::new(); e + 1];
    let mut del = vec![Vec::new(); e + 1];
    for u in 0..n {
        let (a, d) = (lay.layer(u), lay.ds[u] as usize);
        if d >= 3 && a >= 1 {
            add[a - 1].push(u);
            if a + 1 >= d {
                drop[a + 1 - d].push(u);
            }
        }
        if d >= 2 && a + 1 >= d {
            ins[a + 1 - d].push(u);
            if a >= d {
                del[a - d].push(u);
            }
        }
    }
    let mut fen = Fenwick::new(n);
    let mut lam = 0u64;
    let mut in_tree = vec![false; n];
    for j in (0..=e).rev() {
        for &u in &add[j] {
            lam += lay.cost[u];
        }
        for &u in &drop[j] {
            lam -= lay.cost[u];
        }
        for &u in &del[j] {
            fen.sub(lay.sig.sigma[u], lay.cost[u]);
            in_tree[u] = false;
        }
        for &u in &ins[j] {
            fen.add(lay.sig.sigma[u], lay.cost[u]);
            in_tree[u] = true;
        }
        if let Some(a) = audit.as_deref_mut() {
            let mut want = 0u64;
            let mut ok = true;
            for u in 0..n {
                let (l, d) = (lay.layer(u), lay.ds[u] as usize);
                if l > j && d > l - j + 1 {
                    want += lay.cost[u];
                }
                ok &= in_tree[u] == (l > j && d == l - j + 1);
            }
            a.checks += 1;
            if !ok || want != lam {
                a.violations += 1;
            }
        }
        for &v in &lay.layers[j] {
            if !lay.is_site[v] {
                lam_plus[v] = lam + fen.prefix(lay.sig.sigma[v]);
            }
        }
    }

    let mut out = vec![None; n];
    for j in 0..=e {
        let same: u64 = lay.layers[j]
            .iter()
            .filter(|&&u| lay.ds[u] > 1)
            .map(|&u| lay.cost[u])
            .sum();
        for &v in &lay.layers[j] {
            if lay.is_site[v] {
                continue;
            }
            let own = if lay.ds[v] == 1 { lay.cost[v] } else { 0 };
            out[v] = Some(Cost::from_raw(lam_minus[v] + lam_plus[v] + same + own));
        }
    }
    out
}

/// `max_s ℓ(s, S + v)` per non-site, with optional key checks per layer.
fn site_sweep(lay: &Layout, p: usize, audit: Option<&mut SweepAudit>) -> Vec<Option<Cost>> {
    let n = lay.n();
    let e = lay.depth();
    let mut audit = audit;
    let loads: Vec<u64> = {
        let costs: Vec<Cost> = lay.cost.iter().map(|&c| Cost::from_raw(c)).collect();
        site_territory_loads(&lay.owner, &costs, p)
            .iter()
            .map(|c| c.raw())
            .collect()
    };
    // u leaves its site's key for sure during layers start..end.
    let mut start = vec![Vec::new(); e + 1];
    let mut end = vec![Vec::new(); e + 1];
    let mut frontier = vec![Vec::new(); e + 1];
    for u in 0..n {
        let (a, d) = (lay.layer(u), lay.ds[u] as usize);
        if d < 2 {
            continue;
        }
        start[(a + 2).saturating_sub(d)].push(u);
        if d + a - 1 <= e {
            end[d + a - 1].push(u);
            frontier[d + a - 1].push(u);
        }
        if a + 1 >= d {
            frontier[a + 1 - d].push(u);
        }
    }
    let mut heap = KeyHeap::new(loads.clone());
    let mut out = vec![None; n];
    let mut scan: Vec<Vertex> = Vec::new();
    for j in 0..=e {
        for &u in &end[j] {
            heap.add(lay.owner[u], lay.cost[u]);
        }
        for &u in &start[j] {
            heap.sub(lay.owner[u], lay.cost[u]);
        }
        if let Some(a) = audit.as_deref_mut() {
            let mut want = loads.clone();
            for u in 0..n {
                let l = lay.layer(u);
                if lay.ds[u] as usize > l.abs_diff(j) + 1 {
                    want[lay.owner[u]] -= lay.cost[u];
                }
            }
            a.checks += 1;
            if want != heap.key {
                a.violations += 1;
            }
        }
        for &u in &frontier[j] {
            if lay.layer(u) < j {
                heap.sub(lay.owner[u], lay.cost[u]);
            }
        }
        scan.clear();
        scan.extend_from_slice(&frontier[j]);
        scan.extend_from_slice(&lay.layers[j]);
        scan.sort_unstable_by_key(|&u| lay.sig.sigma[u]);
        for &u in &scan {
            let l = lay.layer(u);
            if l < j {
                heap.add(lay.owner[u], lay.cost[u]);
            } else if l > j {
                heap.sub(lay.owner[u], lay.cost[u]);
            } else if !lay.is_site[u] {
                let adjacent = lay.ds[u] == 1;
                if adjacent {
                    heap.sub(lay.owner[u], lay.cost[u]);
                }
                out[u] = Some(Cost::from_raw(heap.max()));
                if adjacent {
                    heap.add(lay.owner[u], lay.cost[u]);
                }
            }
        }
        for &u in &frontier[j] {
            if lay.layer(u) > j {
                heap.add(lay.owner[u], lay.cost[u]);
            }
        }
    }
    out
}

fn prepare(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SigmaOrdering> {
    check_instance(g, costs, s)?;
    let order = recognize_proper_interval(g)?;
    sigma_ordering(g, &order)
}

/// `ℓ(v, S + v)` for every non-site, given σ.
pub fn territory_loads(
    g: &Graph,
    sig: &SigmaOrdering,
    costs: &CostVector,
    s: &SiteList,
) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    Ok(new_site_sweeps(&Layout::new(g, sig, costs, s), None))
}

/// `max_{s ∈ S} ℓ(s, S + v)` for every non-site, given σ.
pub fn site_loads_max(
    g: &Graph,
    sig: &SigmaOrdering,
    costs: &CostVector,
    s: &SiteList,
) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    Ok(site_sweep(&Layout::new(g, sig, costs, s), s.len(), None))
}

/// Runs both sweeps while recomputing their invariants from scratch before
/// every layer. Quadratic; meant for small instances.
pub fn audit_sweeps(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SweepAudit> {
    let sig = prepare(g, costs, s)?;
    let lay = Layout::new(g, &sig, costs, s);
    let mut audit = SweepAudit::default();
    new_site_sweeps(&lay, Some(&mut audit));
    site_sweep(&lay, s.len(), Some(&mut audit));
    Ok(audit)
}

/// `L(S + v)` for every non-site of a proper interval graph.
///
/// The sweeps run on a copy renumbered in umbrella order, which keeps their
/// memory accesses close together on large inputs.
pub fn proper_interval_loads(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    let perm = order::candidate_order(g)?;
    let h = g.relabeled(&perm);
    let umbrella = UmbrellaOrder::new(&h, (0..g.n()).collect()).map_err(|e| match e {
        Error::NotProperInterval(a, b, c) => Error::NotProperInterval(perm[a], perm[b], perm[c]),
        e => e,
    })?;
    let mut position = vec![0; g.n()];
    for (i, &v) in perm.iter().enumerate() {
        position[v] = i;
    }
    let h_costs = CostVector::new(perm.iter().map(|&v| costs.as_slice()[v]).collect())?;
    let h_sites = SiteList::new(s.as_slice().iter().map(|&x| position[x]).collect(), g.n())?;
    let sig = sigma_ordering(&h, &umbrella)?;
    let lay = Layout::new(&h, &sig, &h_costs, &h_sites);
    let own = new_site_sweeps(&lay, None);
    let others = site_sweep(&lay, s.len(), None);
    let mut loads = vec![None; g.n()];
    for (i, (a, b)) in own.into_iter().zip(others).enumerate() {
        if let (Some(a), Some(b)) = (a, b) {
            loads[perm[i]] = Some(a.max(b));
        }
    }
    Ok(loads)
}

pub fn solve_proper_interval(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SolveResult> {
    let loads = proper_interval_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{solve_clique, solve_path};
    use crate::gen;
    use crate::voronoi::{brute_force_loads, new_site_loads, witness_load};
    use rand::rngs::SmallRng;
    use rand::{Rng, SeedableRng};

    fn units(v: &[u64]) -> CostVector {
        CostVector::from_units(v.iter().copied()).unwrap()
    }

    fn sites(v: &[usize], n: usize) -> SiteList {
        SiteList::new(v.to_vec(), n).unwrap()
    }

    fn sig_of(g: &Graph) -> SigmaOrdering {
        sigma_ordering(g, &recognize_proper_interval(g).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let g = gen::path(5);
        let costs = units(&[1, 2, 4, 8, 16]);
        let s = sites(&[2], 5);
        let own = territory_loads(&g, &sig_of(&g), &costs, &s).unwrap();
        // v1 ties between v0 and s, so it stays with s.
        assert_eq!(own[0], Some(Cost::from_units(1)));

        let k2 = gen::path(2);
        let m = site_loads_max(&k2, &sig_of(&k2), &units(&[3, 5]), &sites(&[0], 2)).unwrap();
        assert_eq!(m[1], Some(Cost::from_units(3)));

        let g = gen::path(13);
        let c = units(&[1, 19, 3, 5, 1, 1, 0, 2, 1, 1, 1, 4, 10]);
        let s = sites(&[4, 12, 7], 13);
        let m = site_loads_max(&g, &sig_of(&g), &c, &s).unwrap();
        for v in s.candidates() {
            let w = witness_load(&g, &c, &s, v).unwrap();
            let want = w
                .site_loads
                .iter()
                .filter(|l| l.site != v)
                .map(|l| l.load)
                .max();
            assert_eq!(m[v], want);
        }
    }

    #[test]
    fn agrees_with_path_and_clique_solvers() {
        let mut rng = SmallRng::seed_from_u64(12);
        for _ in 0..40 {
            let n = rng.gen_range(2..30);
            let costs = gen::random_costs(n, 100, &mut rng);
            let s = gen::random_sites(n, &mut rng);
            let p = gen::random_path(n, &mut rng);
            assert_eq!(
                solve_proper_interval(&p, &costs, &s).unwrap().best_load,
                solve_path(&p, &costs, &s).unwrap().best_load
            );
            let k = gen::complete(n);
            assert_eq!(
                solve_proper_interval(&k, &costs, &s).unwrap().best_load,
                solve_clique(&k, &costs, &s).unwrap().best_load
            );
        }
    }

    #[test]
    fn sweeps_match_witness_loads() {
        let mut rng = SmallRng::seed_from_u64(13);
        for _ in 0..300 {
            let n = rng.gen_range(2..60);
            let g = gen::random_proper_interval(n, rng.gen_range(1..5), &mut rng);
            let costs = gen::random_costs(n, 100, &mut rng);
            let s = gen::random_sites(n, &mut rng);
            let sig = sig_of(&g);
            let own = territory_loads(&g, &sig, &costs, &s).unwrap();
            assert_eq!(own, new_site_loads(&g, &costs, &s).unwrap());
            let m = site_loads_max(&g, &sig, &costs, &s).unwrap();
            for v in s.candidates() {
                let w = witness_load(&g, &costs, &s, v).unwrap();
                let want = w
                    .site_loads
                    .iter()
                    .filter(|l| l.site != v)
                    .map(|l| l.load)
                    .max();
                assert_eq!(m[v], want);
            }
            assert_eq!(
                proper_interval_loads(&g, &costs, &s).unwrap(),
                brute_force_loads(&g, &costs, &s).unwrap()
            );
        }
    }

    #[test]
    fn invariants_hold_every_layer() {
        let mut rng = SmallRng::seed_from_u64(14);
        for _ in 0..60 {
            let n = rng.gen_range(2..80);
            let g = gen::random_proper_interval(n, rng.gen_range(1..4), &mut rng);
            let costs = gen::random_costs(n, 100, &mut rng);
            let s = gen::random_sites(n, &mut rng);
            let a = audit_sweeps(&g, &costs, &s).unwrap();
            assert!(a.checks > 0);
            assert_eq!(a.violations, 0);
        }
    }

    #[test]
    fn rejects_non_proper_interval() {
        let claw = gen::star(4);
        assert!(solve_proper_interval(&claw, &units(&[1; 4]), &sites(&[1], 4)).is_err());
    }
}
