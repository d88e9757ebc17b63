//! Random instance families for tests and benchmarks.
//!
//! Every generator takes the caller's RNG so runs are reproducible from a
//! seed. Vertex labels are shuffled wherever a family has a natural order,
//! so solvers cannot depend on it.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cost::{Cost, CostVector};
use crate::graph::{Graph, GraphBuilder, SiteList, Vertex};
use crate::treewidth::TreeDecomposition;

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid graph")
}

fn relabel<R: Rng + ?Sized>(n: usize, edges: &mut [(Vertex, Vertex)], rng: &mut R) -> Vec<Vertex> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    for e in edges.iter_mut() {
        *e = (perm[e.0], perm[e.1]);
    }
    perm
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Star with center 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    build(n, &edges)
}

/// Path with shuffled labels.
pub fn random_path<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    relabel(n, &mut edges, rng);
    build(n, &edges)
}

/// Cycle with shuffled labels (`n >= 3`).
pub fn random_cycle<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    relabel(n, &mut edges, rng);
    build(n, &edges)
}

/// Uniform labeled tree, decoded from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return path(n.max(1));
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    build(n, &edges)
}

/// Tree where each node attaches to one of the `window` previous nodes, then
/// relabeled. Small windows give long, path-like trees.
pub fn random_deep_tree<R: Rng + ?Sized>(n: usize, window: usize, rng: &mut R) -> Graph {
    let mut edges: Vec<_> = (1..n)
        .map(|i| (i - rng.gen_range(1..=window.clamp(1, i)), i))
        .collect();
    relabel(n, &mut edges, rng);
    build(n, &edges)
}

/// Random connected graph: a random tree plus `extra` random edges.
pub fn random_connected<R: Rng + ?Sized>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::new();
    let tree = random_tree(n, rng);
    for (u, v, _) in tree.edges() {
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    let mut budget = extra.min(max_edges - edges.len());
    let mut attempts = 0;
    while budget > 0 && attempts < 50 * (extra + 1) {
        attempts += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
            budget -= 1;
        }
    }
    build(n, &edges)
}

/// Graph of diameter at most two: a random graph with edge density `p`,
/// completed by joining every pair at distance three or more.
pub fn random_diameter_two<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] && !(0..n).any(|w| adj[u][w] && adj[w][v]) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    build(n, &edges)
}

/// Connected unit interval graph with shuffled labels: intervals
/// `[x, x + len]` with consecutive left ends at most `len` apart.
pub fn random_proper_interval<R: Rng + ?Sized>(n: usize, len: u64, rng: &mut R) -> Graph {
    let len = len.max(1);
    let mut xs = Vec::with_capacity(n);
    let mut x = 0u64;
    for _ in 0..n {
        xs.push(x);
        x += rng.gen_range(0..=len);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if xs[j] - xs[i] > len {
                break;
            }
            edges.push((i, j));
        }
    }
    relabel(n, &mut edges, rng);
    build(n, &edges)
}

/// Random connected subgraph of a random `k`-tree, with the `k`-tree's
/// decomposition (width at most `k`).
pub fn random_partial_k_tree<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    keep: f64,
    rng: &mut R,
) -> (Graph, TreeDecomposition) {
    let k = k.max(1);
    let base = n.min(k + 1);
    let mut edges = Vec::new();
    // A random spanning path keeps the base clique connected.
    let mut first: Vec<Vertex> = (0..base).collect();
    first.shuffle(rng);
    for w in first.windows(2) {
        edges.push((w[0].min(w[1]), w[0].max(w[1])));
    }
    for u in 0..base {
        for v in u + 1..base {
            if !edges.contains(&(u, v)) && rng.gen_bool(keep) {
                edges.push((u, v));
            }
        }
    }
    let mut bags: Vec<Vec<Vertex>> = vec![(0..base).collect()];
    let mut bag_edges = Vec::new();
    for v in base..n {
        let parent = rng.gen_range(0..bags.len());
        let mut clique = bags[parent].clone();
        clique.shuffle(rng);
        clique.truncate(k);
        let anchor = rng.gen_range(0..clique.len());
        for (i, &u) in clique.iter().enumerate() {
            if i == anchor || rng.gen_bool(keep) {
                edges.push((u, v));
            }
        }
        clique.push(v);
        clique.sort_unstable();
        bags.push(clique);
        bag_edges.push((parent, bags.len() - 1));
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    for e in edges.iter_mut() {
        *e = (perm[e.0], perm[e.1]);
    }
    for bag in bags.iter_mut() {
        for x in bag.iter_mut() {
            *x = perm[*x];
        }
        bag.sort_unstable();
    }
    let g = build(n, &edges);
    (g, TreeDecomposition::new(bags, bag_edges))
}

/// Same as [`random_connected`] but with edge lengths in `1..=max_weight`.
pub fn random_weighted<R: Rng + ?Sized>(
    n: usize,
    extra: usize,
    max_weight: u64,
    rng: &mut R,
) -> Graph {
    let g = random_connected(n, extra, rng);
    let mut b = GraphBuilder::new(n);
    for (u, v, _) in g.edges() {
        b.add_weighted_edge(u, v, rng.gen_range(1..=max_weight.max(1)));
    }
    b.build().expect("generator produced an invalid graph")
}

/// Integer costs drawn uniformly from `0..=max`.
pub fn random_costs<R: Rng + ?Sized>(n: usize, max: u64, rng: &mut R) -> CostVector {
    CostVector::from_units((0..n).map(|_| rng.gen_range(0..=max))).expect("costs fit")
}

/// Costs with six random fractional digits, uniformly below `max` units.
pub fn random_fractional_costs<R: Rng + ?Sized>(n: usize, max: u64, rng: &mut R) -> CostVector {
    let top = max.max(1) * crate::cost::SCALE;
    CostVector::new(
        (0..n)
            .map(|_| Cost::from_raw(rng.gen_range(0..top)))
            .collect(),
    )
    .expect("costs fit")
}

/// Site list of uniformly random size in `1..=n-1`, in random order.
pub fn random_sites<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SiteList {
    let p = rng.gen_range(1..n.max(2));
    random_sites_of_size(n, p, rng)
}

/// Site list of `p` distinct random vertices in random order.
pub fn random_sites_of_size<R: Rng + ?Sized>(n: usize, p: usize, rng: &mut R) -> SiteList {
    let mut all: Vec<Vertex> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(p);
    SiteList::new(all, n).expect("distinct sites")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{has_diameter_at_most_two, is_cycle, is_path, is_tree};
    use rand::rngs::SmallRng;
    use rand::SeedableRng;

    #[test]
    fn families_have_their_shape() {
        let mut rng = SmallRng::seed_from_u64(7);
        for n in [3, 10, 40] {
            assert!(is_tree(&random_tree(n, &mut rng)));
            assert!(is_tree(&random_deep_tree(n, 3, &mut rng)));
            assert!(is_path(&random_path(n, &mut rng)));
            assert!(is_cycle(&random_cycle(n, &mut rng)));
            assert!(has_diameter_at_most_two(&random_diameter_two(
                n, 0.2, &mut rng
            )));
            let (g, td) = random_partial_k_tree(n, 3, 0.5, &mut rng);
            assert!(td.validate(&g).unwrap() <= 3);
            let s = random_sites(n, &mut rng);
            assert!(!s.is_empty() && s.len() < n);
        }
        assert_eq!(random_connected(6, 100, &mut rng).m(), 15);
    }
}
