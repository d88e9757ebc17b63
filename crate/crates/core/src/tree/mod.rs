//! `O(n log n)` Balanced Vertex solver for trees by centroid decomposition.
//!
//! Every non-site `v` carries two values `λ(v)` and `Λ(v)` accounting for the
//! part of the tree already cut away. A frame computes
//! `R(v) = max{ℓ(v, S+v) + λ(v), Λ(v), ℓ(s, S+v) : s ∈ S}` for its non-sites.
//! It picks a centroid `c`, folds the contribution of the site `s_c` owning
//! `c` (via [`alpha_all`]) and of everything on the far side of `c` (via
//! [`beta_all`] and [`gamma_all`]) into `λ` and `Λ`, and recurses on the
//! components of `T \ c`.

mod index;

pub use index::RootedTreeIndex;

use alloc::vec;
use alloc::vec::Vec;

use crate::classes::is_tree;
use crate::cost::{Cost, CostVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, SiteList, Vertex};
use crate::voronoi::{check_instance, finish, SolveResult};

const NONE: usize = usize::MAX;

/// How each recursion frame picks its splitting node.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum CentroidMode {
    /// Components hold at most half of the frame's nodes.
    #[default]
    NodeCount,
    /// Components hold at most half of the frame's sites.
    SiteWeighted,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeOptions {
    pub centroid: CentroidMode,
    /// Recompute `R` directly in every frame and compare with the final
    /// answer. Quadratic per level; meant for small instances.
    pub verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameStats {
    /// Root frame is depth 0.
    pub depth: usize,
    pub size: usize,
    pub sites: usize,
}

/// Per-frame statistics and, in verify mode, identity check counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeTrace {
    pub frames: Vec<FrameStats>,
    /// Number of frame levels (deepest frame depth plus one).
    pub levels: usize,
    /// Frame levels whose frames still hold at least one site.
    pub levels_with_sites: usize,
    pub checks: usize,
    /// Frame `(depth, vertex)` pairs where a frame's direct `R` or
    /// `λ + ℓ(v, S+v)` disagreed with the top level.
    pub violations: Vec<(usize, Vertex)>,
}

/// Vertex-indexed scratch space over a tree with some vertices cut out.
struct Forest<'g> {
    g: &'g Graph,
    removed: Vec<bool>,
    stamp: Vec<u32>,
    epoch: u32,
    /// Parent in the BFS of the last [`Forest::collect`].
    par: Vec<usize>,
    /// Distance to the seeds and owning seed index of the last Voronoi BFS.
    ds: Vec<usize>,
    own: Vec<usize>,
    /// Distance to the centroid and index of the component of `T \ c`.
    dc: Vec<usize>,
    comp: Vec<usize>,
    /// BFS parent and depth when rooted at a site.
    rpar: Vec<usize>,
    rdep: Vec<usize>,
    sub: Vec<Cost>,
    wsub: Vec<u64>,
}

impl<'g> Forest<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Forest {
            g,
            removed: vec![false; n],
            stamp: vec![0; n],
            epoch: 0,
            par: vec![NONE; n],
            ds: vec![0; n],
            own: vec![NONE; n],
            dc: vec![0; n],
            comp: vec![NONE; n],
            rpar: vec![NONE; n],
            rdep: vec![0; n],
            sub: vec![Cost::ZERO; n],
            wsub: vec![0; n],
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch += 1;
        self.epoch
    }

    /// Live component of `root` in BFS order; fills `par`.
    fn collect(&mut self, root: Vertex) -> Vec<Vertex> {
        let e = self.next_epoch();
        let mut order = vec![root];
        self.stamp[root] = e;
        self.par[root] = NONE;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.g.neighbors(u) {
                if !self.removed[w] && self.stamp[w] != e {
                    self.stamp[w] = e;
                    self.par[w] = u;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Prioritized Voronoi BFS from `seeds` (earlier = higher priority)
    /// within the live component; fills `ds` and `own`, returns BFS order.
    fn voronoi(&mut self, seeds: &[Vertex]) -> Vec<Vertex> {
        let e = self.next_epoch();
        let mut order = Vec::with_capacity(seeds.len());
        for (i, &s) in seeds.iter().enumerate() {
            self.stamp[s] = e;
            self.ds[s] = 0;
            self.own[s] = i;
            order.push(s);
        }
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let (du, ou) = (self.ds[u], self.own[u]);
            for &w in self.g.neighbors(u) {
                if self.removed[w] {
                    continue;
                }
                if self.stamp[w] != e {
                    self.stamp[w] = e;
                    self.ds[w] = du + 1;
                    self.own[w] = ou;
                    order.push(w);
                } else if self.ds[w] == du + 1 && ou < self.own[w] {
                    self.own[w] = ou;
                }
            }
        }
        order
    }

    /// BFS from `c`; fills `dc` and `comp`, returns the number of components.
    fn around(&mut self, c: Vertex) -> usize {
        let e = self.next_epoch();
        self.stamp[c] = e;
        self.dc[c] = 0;
        self.comp[c] = NONE;
        let mut order = vec![c];
        let mut k = 0;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.g.neighbors(u) {
                if !self.removed[w] && self.stamp[w] != e {
                    self.stamp[w] = e;
                    self.dc[w] = self.dc[u] + 1;
                    self.comp[w] = if u == c {
                        k += 1;
                        k - 1
                    } else {
                        self.comp[u]
                    };
                    order.push(w);
                }
            }
        }
        k
    }

    /// Node whose removal leaves live components of weight at most half the
    /// total. `verts` must come from [`Forest::collect`].
    fn centroid(&mut self, verts: &[Vertex], weight: impl Fn(Vertex) -> u64) -> Vertex {
        for &v in verts {
            self.wsub[v] = weight(v);
        }
        for &v in verts.iter().rev() {
            let p = self.par[v];
            if p != NONE {
                let w = self.wsub[v];
                self.wsub[p] += w;
            }
        }
        let total = self.wsub[verts[0]];
        let mut cur = verts[0];
        loop {
            let heavy = self
                .g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| !self.removed[w] && self.par[w] == cur && 2 * self.wsub[w] > total);
            match heavy {
                Some(w) => cur = w,
                None => return cur,
            }
        }
    }

    /// `α(v) = π(W(v, s))` for the live component of `s`, restricted to
    /// vertices with `keep(x)`. Writes into `out` (vertex-indexed).
    fn alpha(&mut self, s: Vertex, cost: &[Cost], keep: impl Fn(Vertex) -> bool, out: &mut [Cost]) {
        let e = self.next_epoch();
        self.stamp[s] = e;
        self.rpar[s] = NONE;
        self.rdep[s] = 0;
        let mut order = vec![s];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.g.neighbors(u) {
                if !self.removed[w] && self.stamp[w] != e {
                    self.stamp[w] = e;
                    self.rpar[w] = u;
                    self.rdep[w] = self.rdep[u] + 1;
                    order.push(w);
                }
            }
        }
        for &v in &order {
            self.sub[v] = if keep(v) { cost[v] } else { Cost::ZERO };
        }
        for &v in order.iter().rev() {
            let p = self.rpar[v];
            if p != NONE {
                let c = self.sub[v];
                self.sub[p] += c;
            }
        }
        // DFS keeping the root path on a stack: the ancestor of v at depth
        // q + 1 (where d(v, s) = 2q + ε) is path[q + 1].
        let mut path: Vec<Vertex> = vec![s];
        let mut cursor: Vec<usize> = vec![0];
        out[s] = Cost::ZERO;
        while let Some(&u) = path.last() {
            let i = cursor.last_mut().unwrap();
            let nbrs = self.g.neighbors(u);
            if *i < nbrs.len() {
                let w = nbrs[*i];
                *i += 1;
                if !self.removed[w] && self.rpar[w] == u {
                    path.push(w);
                    cursor.push(0);
                    let d = path.len() - 1;
                    out[w] = self.sub[path[d / 2 + 1]];
                }
            } else {
                path.pop();
                cursor.pop();
            }
        }
    }
}

/// Per-frame values computed before cutting at the centroid.
struct Sweep {
    /// ℓ_j(s_j), component of s_j, and ℓ_j(s'_j), for j = 0..=max d(v, c).
    best: Vec<Option<(Cost, usize)>>,
    second: Vec<Option<Cost>>,
}

impl Sweep {
    fn gamma(&self, j: usize, comp: usize) -> Option<Cost> {
        let j = j.min(self.best.len() - 1);
        match self.best[j] {
            None => None,
            Some((l, k)) if k != comp => Some(l),
            Some(_) => self.second[j],
        }
    }
}

/// Sweep over `X_j = {x : d(x, S) - d(x, c) = j}` computing, for each `j`,
/// the best and best-other-component values of
/// `ℓ_j(s) = ℓ(s, S) - π({x ∈ T(s, S) : d(x, s) > d(x, c) + j})` over sites
/// `s ≠ s_c`. Expects `ds`, `own`, `dc`, `comp` filled for the frame.
fn gamma_sweep(
    f: &Forest,
    verts: &[Vertex],
    c: Vertex,
    seeds: &[Vertex],
    sc_index: usize,
    loads: &[Cost],
    cost: &[Cost],
) -> Sweep {
    let maxj = verts.iter().map(|&x| f.dc[x]).max().unwrap_or(0);
    let mut lam: Vec<Cost> = loads.to_vec();
    let site_comp = |i: usize| f.comp[seeds[i]];
    // Counting sort of x by d(x, S) - d(x, c) in 1..=maxj.
    let mut count = vec![0usize; maxj + 2];
    for &x in verts {
        if x == c || f.own[x] == sc_index {
            continue;
        }
        if f.ds[x] > f.dc[x] {
            lam[f.own[x]] -= cost[x];
            let diff = f.ds[x] - f.dc[x];
            if diff <= maxj {
                count[diff + 1] += 1;
            }
        }
    }
    for j in 1..count.len() {
        count[j] += count[j - 1];
    }
    let mut bucket = vec![0; count[maxj + 1]];
    let mut fill = count.clone();
    for &x in verts {
        if x == c || f.own[x] == sc_index || f.ds[x] <= f.dc[x] {
            continue;
        }
        let diff = f.ds[x] - f.dc[x];
        if diff <= maxj {
            bucket[fill[diff]] = x;
            fill[diff] += 1;
        }
    }

    let better = |lam: &[Cost], a: Option<usize>, b: usize| a.is_none_or(|a| lam[b] > lam[a]);
    let mut best = Vec::with_capacity(maxj + 1);
    let mut second = Vec::with_capacity(maxj + 1);
    let others = (0..seeds.len()).filter(|&i| i != sc_index);
    let mut sj: Option<usize> = None;
    for i in others.clone() {
        if better(&lam, sj, i) {
            sj = Some(i);
        }
    }
    let mut sj2: Option<usize> = None;
    if let Some(b) = sj {
        for i in others.filter(|&i| site_comp(i) != site_comp(b)) {
            if better(&lam, sj2, i) {
                sj2 = Some(i);
            }
        }
    }
    let record = |lam: &[Cost],
                  s1: Option<usize>,
                  s2: Option<usize>,
                  best: &mut Vec<_>,
                  second: &mut Vec<_>| {
        best.push(s1.map(|i| (lam[i], site_comp(i))));
        second.push(s2.map(|i| lam[i]));
    };
    record(&lam, sj, sj2, &mut best, &mut second);
    let mut touched: Vec<usize> = Vec::new();
    for j in 1..=maxj {
        touched.clear();
        for &x in &bucket[count[j]..count[j + 1]] {
            let i = f.own[x];
            lam[i] += cost[x];
            touched.push(i);
        }
        let mut nb = sj;
        for &i in &touched {
            if better(&lam, nb, i) {
                nb = Some(i);
            }
        }
        let mut ns: Option<usize> = None;
        if let Some(b) = nb {
            let bc = site_comp(b);
            for i in touched.iter().copied().chain(sj).chain(sj2) {
                if site_comp(i) != bc && better(&lam, ns, i) {
                    ns = Some(i);
                }
            }
        }
        sj = nb;
        sj2 = ns;
        record(&lam, sj, sj2, &mut best, &mut second);
    }
    Sweep { best, second }
}

/// `β(v) = a[d(v, c)] - a_k[d(v, c)]` where `a[i]` sums `cost` over frame
/// vertices with `d(x, c) + i < d(x, S)` and `a_k` restricts to component `k`.
/// Expects `ds`, `dc`, `comp` filled. Writes into `out`.
fn beta_pass(
    f: &Forest,
    verts: &[Vertex],
    c: Vertex,
    ncomp: usize,
    cost: &[Cost],
    out: &mut [Cost],
) {
    let n = verts.len();
    let mut height = vec![0usize; ncomp];
    for &x in verts {
        if x != c {
            height[f.comp[x]] = height[f.comp[x]].max(f.dc[x]);
        }
    }
    // Component k owns a[off[k]..off[k] + height[k] + 2].
    let mut off = vec![0usize; ncomp + 1];
    for k in 0..ncomp {
        off[k + 1] = off[k] + height[k] + 2;
    }
    let mut a = vec![Cost::ZERO; n + 2];
    let mut ak = vec![Cost::ZERO; off[ncomp]];
    for &x in verts {
        if f.ds[x] <= f.dc[x] {
            continue;
        }
        let diff = f.ds[x] - f.dc[x];
        a[diff.min(n + 1)] += cost[x];
        if x != c {
            let k = f.comp[x];
            ak[off[k] + diff.min(height[k] + 1)] += cost[x];
        }
    }
    // Suffix sums shifted by one: a[i] becomes the sum over diff > i.
    let mut acc = Cost::ZERO;
    for i in (0..a.len()).rev() {
        let here = a[i];
        a[i] = acc;
        acc += here;
    }
    for k in 0..ncomp {
        let seg = &mut ak[off[k]..off[k + 1]];
        let mut acc = Cost::ZERO;
        for i in (0..seg.len()).rev() {
            let here = seg[i];
            seg[i] = acc;
            acc += here;
        }
    }
    for &v in verts {
        if v != c {
            let d = f.dc[v];
            out[v] = a[d] - ak[off[f.comp[v]] + d];
        }
    }
}

struct Solver<'g> {
    f: Forest<'g>,
    cost: Vec<Cost>,
    site: Vec<bool>,
    prio: Vec<usize>,
    lam: Vec<Cost>,
    cap: Vec<Cost>,
    r: Vec<Cost>,
    alpha: Vec<Cost>,
    beta: Vec<Cost>,
    mark: Vec<bool>,
    opts: TreeOptions,
    trace: TreeTrace,
    /// Verify mode: (depth, vertex, frame R, frame λ + ℓ(v, S+v)).
    checks: Vec<(usize, Vertex, Cost, Cost)>,
}

impl Solver<'_> {
    /// `R(v)` of the current frame and `λ(v) + ℓ(v, S+v)`, by one Voronoi BFS.
    fn direct(&mut self, sites: &[Vertex], v: Vertex) -> (Cost, Cost) {
        let mut seeds = sites.to_vec();
        seeds.push(v);
        let order = self.f.voronoi(&seeds);
        let mut loads = vec![Cost::ZERO; seeds.len()];
        for &x in &order {
            loads[self.f.own[x]] += self.cost[x];
        }
        let own = loads[sites.len()] + self.lam[v];
        let r = loads[..sites.len()]
            .iter()
            .copied()
            .fold(own.max(self.cap[v]), Cost::max);
        (r, own)
    }

    fn frame(&mut self, root: Vertex, depth: usize) {
        let verts = self.f.collect(root);
        let mut sites: Vec<Vertex> = verts.iter().copied().filter(|&v| self.site[v]).collect();
        sites.sort_unstable_by_key(|&v| self.prio[v]);
        self.trace.frames.push(FrameStats {
            depth,
            size: verts.len(),
            sites: sites.len(),
        });
        self.trace.levels = self.trace.levels.max(depth + 1);
        if !sites.is_empty() {
            self.trace.levels_with_sites = self.trace.levels_with_sites.max(depth + 1);
        }
        if self.opts.verify {
            for &v in &verts {
                if !self.site[v] {
                    let (r, own) = self.direct(&sites, v);
                    self.checks.push((depth, v, r, own));
                }
            }
        }

        if sites.is_empty() {
            let total: Cost = verts.iter().map(|&v| self.cost[v]).sum();
            for &v in &verts {
                self.r[v] = (self.lam[v] + total).max(self.cap[v]);
            }
            return;
        }
        let free = verts.len() - sites.len();
        if free == 0 {
            return;
        }
        if free == 1 {
            let v = verts.iter().copied().find(|&v| !self.site[v]).unwrap();
            self.r[v] = self.direct(&sites, v).0;
            return;
        }

        let c = match self.opts.centroid {
            CentroidMode::NodeCount => self.f.centroid(&verts, |_| 1),
            CentroidMode::SiteWeighted => {
                let site = &self.site;
                self.f.centroid(&verts, |v| u64::from(site[v]))
            }
        };
        if !self.site[c] {
            self.r[c] = self.direct(&sites, c).0;
        }

        let _ = self.f.voronoi(&sites);
        let mut loads = vec![Cost::ZERO; sites.len()];
        for &x in &verts {
            loads[self.f.own[x]] += self.cost[x];
        }
        let sc_index = self.f.own[c];
        let sc = sites[sc_index];
        let sc_load = loads[sc_index];
        let ncomp = self.f.around(c);

        // α with costs restricted to T(s_c, S).
        for &x in &verts {
            self.mark[x] = self.f.own[x] == sc_index;
        }
        let mark = &self.mark;
        self.f.alpha(sc, &self.cost, |x| mark[x], &mut self.alpha);

        let sweep = gamma_sweep(&self.f, &verts, c, &sites, sc_index, &loads, &self.cost);

        // Switch to π': zero on T(s_c, S).
        for &x in &verts {
            if self.f.own[x] == sc_index {
                self.cost[x] = Cost::ZERO;
            }
        }
        beta_pass(&self.f, &verts, c, ncomp, &self.cost, &mut self.beta);

        for &v in &verts {
            if v == c {
                continue;
            }
            let gamma = sweep
                .gamma(self.f.dc[v], self.f.comp[v])
                .unwrap_or(Cost::ZERO);
            self.lam[v] += self.alpha[v] + self.beta[v];
            let cap = self.cap[v].max(sc_load - self.alpha[v]).max(gamma);
            self.cap[v] = cap;
        }

        self.site[sc] = false;
        self.f.removed[c] = true;
        let children: Vec<Vertex> = self
            .f
            .g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&w| !self.f.removed[w])
            .collect();
        for w in children {
            self.frame(w, depth + 1);
        }
    }
}

fn check_tree(g: &Graph) -> Result<()> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    g.require_unweighted()
}

/// `L(S + v)` for every non-site of a tree, with options and a trace.
pub fn tree_loads_with(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
    opts: TreeOptions,
) -> Result<(Vec<Option<Cost>>, TreeTrace)> {
    check_instance(g, costs, s)?;
    check_tree(g)?;
    let n = g.n();
    let mut prio = vec![NONE; n];
    let mut site = vec![false; n];
    for (i, &v) in s.as_slice().iter().enumerate() {
        prio[v] = i;
        site[v] = true;
    }
    let mut solver = Solver {
        f: Forest::new(g),
        cost: costs.as_slice().to_vec(),
        site,
        prio,
        lam: vec![Cost::ZERO; n],
        cap: vec![Cost::ZERO; n],
        r: vec![Cost::ZERO; n],
        alpha: vec![Cost::ZERO; n],
        beta: vec![Cost::ZERO; n],
        mark: vec![false; n],
        opts,
        trace: TreeTrace::default(),
        checks: Vec::new(),
    };
    solver.frame(0, 0);
    let out: Vec<Option<Cost>> = (0..n)
        .map(|v| (!s.contains(v)).then_some(solver.r[v]))
        .collect();
    let mut trace = solver.trace;
    if opts.verify {
        // The top frame's λ is zero, so its `own` value is ℓ(v, S+v).
        let mut top_own = vec![Cost::ZERO; n];
        for &(depth, v, _, own) in &solver.checks {
            if depth == 0 {
                top_own[v] = own;
            }
        }
        for &(depth, v, r, own) in &solver.checks {
            if s.contains(v) {
                continue;
            }
            trace.checks += 1;
            if Some(r) != out[v] || own != top_own[v] {
                trace.violations.push((depth, v));
            }
        }
    }
    Ok((out, trace))
}

/// `L(S + v)` for every non-site of a tree.
pub fn tree_loads(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Vec<Option<Cost>>> {
    tree_loads_with(g, costs, s, TreeOptions::default()).map(|(loads, _)| loads)
}

/// Balanced Vertex on a tree.
pub fn solve_tree(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<SolveResult> {
    let loads = tree_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}

/// Balanced Vertex on a tree with explicit options.
pub fn solve_tree_with(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
    opts: TreeOptions,
) -> Result<(SolveResult, TreeTrace)> {
    let (loads, trace) = tree_loads_with(g, costs, s, opts)?;
    Ok((finish(g, costs, s, &loads)?, trace))
}

/// Node of a tree whose removal leaves components of weight at most half
/// the total weight.
pub fn centroid(g: &Graph, weights: &[u64]) -> Result<Vertex> {
    check_tree(g)?;
    if weights.len() != g.n() {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    let mut f = Forest::new(g);
    let verts = f.collect(0);
    Ok(f.centroid(&verts, |v| weights[v]))
}

/// `α(v) = π(W(v, s))`, the cost of the nodes strictly closer to `v` than to
/// `s`, for every node of a tree.
pub fn alpha_all(g: &Graph, s: Vertex, costs: &CostVector) -> Result<Vec<Cost>> {
    check_tree(g)?;
    g.check_vertex(s)?;
    costs.check_len(g.n())?;
    let mut f = Forest::new(g);
    let mut out = vec![Cost::ZERO; g.n()];
    f.alpha(s, costs.as_slice(), |_| true, &mut out);
    Ok(out)
}

fn split_at<'g>(
    g: &'g Graph,
    c: Vertex,
    s: &SiteList,
    costs: &CostVector,
) -> Result<(Forest<'g>, Vec<Vertex>, usize)> {
    check_tree(g)?;
    g.check_vertex(c)?;
    costs.check_len(g.n())?;
    s.check_for(g)?;
    if s.is_empty() {
        return Err(Error::NoSites);
    }
    let mut f = Forest::new(g);
    let verts = f.collect(0);
    let _ = f.voronoi(s.as_slice());
    let ncomp = f.around(c);
    Ok((f, verts, ncomp))
}

/// `β(v) = π({x : c ∈ I(v, x), d(x, v) < d(x, S)})` for every `v ≠ c`
/// (`None` at `c`).
pub fn beta_all(
    g: &Graph,
    c: Vertex,
    s: &SiteList,
    costs: &CostVector,
) -> Result<Vec<Option<Cost>>> {
    let (f, verts, ncomp) = split_at(g, c, s, costs)?;
    let mut out = vec![Cost::ZERO; g.n()];
    beta_pass(&f, &verts, c, ncomp, costs.as_slice(), &mut out);
    Ok((0..g.n()).map(|v| (v != c).then_some(out[v])).collect())
}

/// `γ(v) = max{ℓ(s, S+v) : c ∉ T(s, S), c ∈ I(v, s)}` for every `v ≠ c`;
/// `None` at `c` and where no site qualifies.
pub fn gamma_all(
    g: &Graph,
    c: Vertex,
    s: &SiteList,
    costs: &CostVector,
) -> Result<Vec<Option<Cost>>> {
    let (f, verts, _) = split_at(g, c, s, costs)?;
    let mut loads = vec![Cost::ZERO; s.len()];
    for &x in &verts {
        loads[f.own[x]] += costs[x];
    }
    let sweep = gamma_sweep(
        &f,
        &verts,
        c,
        s.as_slice(),
        f.own[c],
        &loads,
        costs.as_slice(),
    );
    Ok((0..g.n())
        .map(|v| {
            if v == c {
                None
            } else {
                sweep.gamma(f.dc[v], f.comp[v])
            }
        })
        .collect())
}
