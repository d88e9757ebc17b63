//! Structural properties of prioritized Voronoi diagrams checked against
//! all-pairs BFS.

use bvx_core::graph::bfs_distances;
use bvx_core::{
    brute_force_balanced_vertex, gen, prioritized_voronoi, witness_load, Cost, Graph, SiteList,
};
use proptest::prelude::*;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

fn all_pairs(g: &Graph) -> Vec<Vec<u64>> {
    (0..g.n()).map(|v| bfs_distances(g, v).unwrap()).collect()
}

fn random_instance(seed: u64) -> (Graph, SiteList) {
    let mut rng = SmallRng::seed_from_u64(seed);
    let n = rng.gen_range(2..=50);
    let g = match seed % 4 {
        0 => gen::random_tree(n, &mut rng),
        1 => gen::random_connected(n, n, &mut rng),
        2 => gen::random_proper_interval(n, 3, &mut rng),
        _ => gen::random_partial_k_tree(n, 2, 0.8, &mut rng).0,
    };
    let s = gen::random_sites(n, &mut rng);
    (g, s)
}

/// Owner of `v` by definition: the first site at minimum distance.
fn first_closest(d: &[Vec<u64>], s: &SiteList, v: usize) -> usize {
    let best = s.as_slice().iter().map(|&x| d[x][v]).min().unwrap();
    s.as_slice().iter().position(|&x| d[x][v] == best).unwrap()
}

fn check_partition_and_priority(g: &Graph, s: &SiteList) {
    let n = g.n();
    let costs = bvx_core::CostVector::uniform(n, Cost::from_units(1)).unwrap();
    let vor = prioritized_voronoi(g, &costs, s).unwrap();
    let d = all_pairs(g);
    for v in 0..n {
        assert_eq!(vor.owner[v], first_closest(&d, s, v));
        let ds = s.as_slice().iter().map(|&x| d[x][v]).min().unwrap();
        assert_eq!(vor.dist[v], ds);
    }
    let sizes: u64 = vor.loads.iter().map(|c| c.raw()).sum();
    assert_eq!(sizes, costs.total().raw());
    // Each territory is connected: BFS inside it from its site reaches all.
    for (i, &site) in s.as_slice().iter().enumerate() {
        let cell = vor.territory(i);
        let mut seen = vec![false; n];
        let mut stack = vec![site];
        seen[site] = true;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] && vor.owner[w] == i {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        assert!(
            cell.iter().all(|&v| seen[v]),
            "territory of {site} is disconnected"
        );
    }
}

fn check_metric_interval(g: &Graph, s: &SiteList) {
    let costs = bvx_core::CostVector::uniform(g.n(), Cost::ZERO).unwrap();
    let vor = prioritized_voronoi(g, &costs, s).unwrap();
    let d = all_pairs(g);
    for v in 0..g.n() {
        let site = vor.owner_vertex(s, v);
        for w in 0..g.n() {
            if d[v][site] == d[v][w] + d[w][site] {
                assert_eq!(
                    vor.owner[w], vor.owner[v],
                    "{w} on a shortest {v}-{site} path"
                );
            }
        }
    }
}

fn check_territory_decomposition(g: &Graph, s: &SiteList) {
    let n = g.n();
    let costs = bvx_core::CostVector::uniform(n, Cost::ZERO).unwrap();
    let vor = prioritized_voronoi(g, &costs, s).unwrap();
    let d = all_pairs(g);
    for v in s.candidates() {
        let sv = s.with(v).unwrap();
        let after = prioritized_voronoi(g, &costs, &sv).unwrap();
        for u in 0..n {
            let owner = s.get(vor.owner[u]);
            let expected = d[v][u] < d[owner][u];
            assert_eq!(after.owner[u] == s.len(), expected, "v={v} u={u}");
        }
    }
}

#[test]
fn partition_priority_connectivity() {
    for seed in 0..200 {
        let (g, s) = random_instance(seed);
        check_partition_and_priority(&g, &s);
    }
}

#[test]
fn metric_interval_containment() {
    for seed in 200..400 {
        let (g, s) = random_instance(seed);
        check_metric_interval(&g, &s);
    }
}

#[test]
fn territory_decomposition() {
    for seed in 400..500 {
        let (g, s) = random_instance(seed);
        check_territory_decomposition(&g, &s);
    }
}

#[test]
fn brute_force_is_min_witness() {
    let mut rng = SmallRng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=30);
        let g = gen::random_connected(n, n / 2, &mut rng);
        let costs = gen::random_costs(n, 100, &mut rng);
        let s = gen::random_sites(n, &mut rng);
        let best = brute_force_balanced_vertex(&g, &costs, &s).unwrap();
        let min = s
            .candidates()
            .map(|v| witness_load(&g, &costs, &s, v).unwrap().load)
            .min()
            .unwrap();
        assert_eq!(best.best_load, min);
        let w = witness_load(&g, &costs, &s, best.best_vertex).unwrap();
        assert_eq!(w.load, min);
        assert_eq!(w.site_loads, best.site_loads);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn loads_partition_total_cost(seed in any::<u64>()) {
        let mut rng = SmallRng::seed_from_u64(seed);
        let n = rng.gen_range(2..=40);
        let g = gen::random_connected(n, rng.gen_range(0..n), &mut rng);
        let costs = gen::random_fractional_costs(n, 50, &mut rng);
        let s = gen::random_sites(n, &mut rng);
        let vor = prioritized_voronoi(&g, &costs, &s).unwrap();
        let total: u64 = vor.loads.iter().map(|c| c.raw()).sum();
        prop_assert_eq!(total, costs.total().raw());
        prop_assert_eq!(vor.max_load, *vor.loads.iter().max().unwrap());
        for (i, &site) in s.as_slice().iter().enumerate() {
            prop_assert_eq!(vor.owner[site], i);
        }
    }
}
