//! Prioritized Voronoi diagrams, exact witness loads and the brute-force
//! Balanced Vertex solver.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::cost::{Cost, CostVector};
use crate::error::{Error, Result};
use crate::graph::{distances_from, Graph, SiteList, Vertex, UNREACHED};

/// Territories of an ordered site list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoronoiDiagram {
    /// Priority index (position in the site list) of each vertex's owner.
    pub owner: Vec<usize>,
    /// `d(v, S)` for each vertex.
    pub dist: Vec<u64>,
    /// Load of each site, indexed like the site list.
    pub loads: Vec<Cost>,
    pub max_load: Cost,
}

impl VoronoiDiagram {
    /// Vertex id of the site owning `v`.
    pub fn owner_vertex(&self, s: &SiteList, v: Vertex) -> Vertex {
        s.get(self.owner[v])
    }

    /// Vertices of the territory of the `i`-th site, ascending.
    pub fn territory(&self, i: usize) -> Vec<Vertex> {
        (0..self.owner.len())
            .filter(|&v| self.owner[v] == i)
            .collect()
    }
}

/// Computes `Vor(G, S)` with loads under `costs`.
///
/// Unit graphs use one multi-source BFS, then resolve owners in BFS order as
/// the smallest owner among neighbors one layer closer. Weighted graphs run
/// Dijkstra on `(distance, priority)` labels.
pub fn prioritized_voronoi(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<VoronoiDiagram> {
    costs.check_len(g.n())?;
    s.check_for(g)?;
    if s.is_empty() {
        return Err(Error::NoSites);
    }
    let (owner, dist) = owners(g, s.as_slice());
    let loads = territory_loads(&owner, costs.as_slice(), s.len());
    let max_load = loads.iter().copied().max().unwrap_or(Cost::ZERO);
    Ok(VoronoiDiagram {
        owner,
        dist,
        loads,
        max_load,
    })
}

/// Owner priority index and distance to the site set for every vertex.
/// `sites` must be nonempty, distinct and in range.
pub(crate) fn owners(g: &Graph, sites: &[Vertex]) -> (Vec<usize>, Vec<u64>) {
    if g.is_weighted() {
        return owners_weighted(g, sites);
    }
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut owner = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for (i, &s) in sites.iter().enumerate() {
        dist[s] = 0;
        owner[s] = i;
        order.push(s);
    }
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let du = dist[u];
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = du + 1;
                owner[w] = owner[u];
                order.push(w);
            } else if dist[w] == du + 1 && owner[u] < owner[w] {
                owner[w] = owner[u];
            }
        }
    }
    // FIFO order: all of layer d is dequeued before layer d + 1, so owner[u]
    // is final by the time u is dequeued.
    (owner, dist)
}

fn owners_weighted(g: &Graph, sites: &[Vertex]) -> (Vec<usize>, Vec<u64>) {
    let n = g.n();
    let mut label = vec![(UNREACHED, usize::MAX); n];
    let mut heap = BinaryHeap::new();
    for (i, &s) in sites.iter().enumerate() {
        label[s] = (0, i);
        heap.push(Reverse((0u64, i, s)));
    }
    while let Some(Reverse((d, i, u))) = heap.pop() {
        if (d, i) > label[u] {
            continue;
        }
        for (w, len) in g.arcs(u) {
            let cand = (d + len, i);
            if cand < label[w] {
                label[w] = cand;
                heap.push(Reverse((cand.0, i, w)));
            }
        }
    }
    label.into_iter().map(|(d, i)| (i, d)).unzip()
}

pub(crate) fn territory_loads(owner: &[usize], costs: &[Cost], p: usize) -> Vec<Cost> {
    let mut loads = vec![Cost::ZERO; p];
    for (v, &o) in owner.iter().enumerate() {
        loads[o] += costs[v];
    }
    loads
}

/// Load of one site in a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiteLoad {
    pub site: Vertex,
    pub load: Cost,
}

/// Exact loads of `Vor(G, S + v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessLoad {
    /// `L(S + v)`.
    pub load: Cost,
    /// `ℓ(v, S + v)`.
    pub new_site_load: Cost,
    /// Loads of `S + v` in list order; the new site is last.
    pub site_loads: Vec<SiteLoad>,
}

/// Evaluates a candidate directly from the diagram of `S + v`.
pub fn witness_load(g: &Graph, costs: &CostVector, s: &SiteList, v: Vertex) -> Result<WitnessLoad> {
    let sv = s.with(v)?;
    let diagram = prioritized_voronoi(g, costs, &sv)?;
    let site_loads: Vec<SiteLoad> = sv
        .as_slice()
        .iter()
        .zip(&diagram.loads)
        .map(|(&site, &load)| SiteLoad { site, load })
        .collect();
    Ok(WitnessLoad {
        load: diagram.max_load,
        new_site_load: diagram.loads[s.len()],
        site_loads,
    })
}

/// Optimal new site with the loads of its diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub best_vertex: Vertex,
    /// `L(S + best_vertex)` as computed by the solver.
    pub best_load: Cost,
    /// Loads of `Vor(G, S + best_vertex)`; the new site is last.
    pub site_loads: Vec<SiteLoad>,
}

/// Shared argument checks for every Balanced Vertex solver.
pub(crate) fn check_instance(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<()> {
    costs.check_len(g.n())?;
    s.check_for(g)?;
    if s.is_empty() {
        return Err(Error::NoSites);
    }
    if s.len() == g.n() {
        return Err(Error::NoCandidate);
    }
    Ok(())
}

/// Smallest-id minimizer of per-candidate loads (`None` marks sites).
pub fn argmin_candidate(loads: &[Option<Cost>]) -> Option<(Vertex, Cost)> {
    let mut best: Option<(Vertex, Cost)> = None;
    for (v, l) in loads.iter().enumerate() {
        if let Some(l) = *l {
            if best.is_none_or(|(_, b)| l < b) {
                best = Some((v, l));
            }
        }
    }
    best
}

/// Picks the best candidate and attaches the loads of its diagram.
pub(crate) fn finish(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
    loads: &[Option<Cost>],
) -> Result<SolveResult> {
    let (best_vertex, best_load) = argmin_candidate(loads).ok_or(Error::NoCandidate)?;
    let witness = witness_load(g, costs, s, best_vertex)?;
    Ok(SolveResult {
        best_vertex,
        best_load,
        site_loads: witness.site_loads,
    })
}

/// `L(S + v)` for every `v ∉ S` by one diagram per candidate, `O(n m)`.
pub fn brute_force_loads(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    let mut out = vec![None; g.n()];
    let mut sites = s.as_slice().to_vec();
    sites.push(0);
    for v in s.candidates() {
        *sites.last_mut().unwrap() = v;
        let (owner, _) = owners(g, &sites);
        let loads = territory_loads(&owner, costs.as_slice(), sites.len());
        out[v] = loads.into_iter().max();
    }
    Ok(out)
}

/// Exact optimum by evaluating every candidate.
pub fn brute_force_balanced_vertex(
    g: &Graph,
    costs: &CostVector,
    s: &SiteList,
) -> Result<SolveResult> {
    let loads = brute_force_loads(g, costs, s)?;
    finish(g, costs, s, &loads)
}

/// `ℓ(v, S + v) = π({u : d(u, v) < d(u, S)})` for every non-site, straight
/// from distances. A definition-level oracle for tests.
pub fn new_site_loads(g: &Graph, costs: &CostVector, s: &SiteList) -> Result<Vec<Option<Cost>>> {
    check_instance(g, costs, s)?;
    let ds = distances_from(g, s.as_slice());
    let mut out = vec![None; g.n()];
    for v in s.candidates() {
        let dv = distances_from(g, &[v]);
        let load = (0..g.n())
            .filter(|&u| dv[u] < ds[u])
            .map(|u| costs[u])
            .sum();
        out[v] = Some(load);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn units(v: &[u64]) -> CostVector {
        CostVector::from_units(v.iter().copied()).unwrap()
    }

    fn sites(v: &[usize], n: usize) -> SiteList {
        SiteList::new(v.to_vec(), n).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn path_priority_tie() {
        let g = path(5);
        let s = sites(&[3, 1], 5);
        let d = prioritized_voronoi(&g, &CostVector::from_units([1; 5]).unwrap(), &s).unwrap();
        let owners: Vec<_> = (0..5).map(|v| d.owner_vertex(&s, v)).collect();
        assert_eq!(owners, vec![1, 1, 3, 3, 3]);
        assert_eq!(d.dist, vec![1, 0, 1, 0, 1]);
        assert_eq!(d.loads, vec![Cost::from_units(3), Cost::from_units(2)]);
    }

    #[test]
    fn single_site_owns_everything() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = prioritized_voronoi(&g, &units(&[1, 2, 3, 4]), &sites(&[2], 4)).unwrap();
        assert!(d.owner.iter().all(|&o| o == 0));
        assert_eq!(d.max_load, Cost::from_units(10));
    }

    #[test]
    fn empty_site_list_rejected() {
        let g = path(2);
        assert_eq!(
            prioritized_voronoi(&g, &units(&[1, 1]), &sites(&[], 2)),
            Err(Error::NoSites)
        );
    }

    #[test]
    fn weighted_priority_tie() {
        let mut b = crate::GraphBuilder::new(3);
        b.add_weighted_edge(0, 1, 2).add_weighted_edge(1, 2, 2);
        let g = b.build().unwrap();
        let d = prioritized_voronoi(&g, &units(&[1, 1, 1]), &sites(&[2, 0], 3)).unwrap();
        assert_eq!(d.owner, vec![1, 0, 0]);
        assert_eq!(d.dist, vec![0, 2, 0]);
    }

    #[test]
    fn k2_witness() {
        let g = path(2);
        let w = witness_load(&g, &units(&[3, 5]), &sites(&[0], 2), 1).unwrap();
        assert_eq!(w.load, Cost::from_units(5));
        assert_eq!(
            w.site_loads,
            vec![
                SiteLoad {
                    site: 0,
                    load: Cost::from_units(3)
                },
                SiteLoad {
                    site: 1,
                    load: Cost::from_units(5)
                },
            ]
        );
        assert_eq!(
            witness_load(&g, &units(&[3, 5]), &sites(&[0], 2), 0),
            Err(Error::AlreadySite(0))
        );
    }

    fn star() -> (Graph, CostVector) {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        (g, units(&[0, 5, 2, 1]))
    }

    #[test]
    fn star_witness_and_brute_force() {
        let (g, c) = star();
        let s = sites(&[0], 4);
        let w = witness_load(&g, &c, &s, 1).unwrap();
        assert_eq!(w.load, Cost::from_units(5));
        assert_eq!(w.new_site_load, Cost::from_units(5));
        let r = brute_force_balanced_vertex(&g, &c, &s).unwrap();
        assert_eq!((r.best_vertex, r.best_load), (1, Cost::from_units(5)));
    }

    #[test]
    fn k4_brute_force() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = brute_force_balanced_vertex(&g, &units(&[5, 1, 2, 3]), &sites(&[0], 4)).unwrap();
        assert_eq!((r.best_vertex, r.best_load), (3, Cost::from_units(8)));
        assert_eq!(r.site_loads.last().unwrap().site, 3);
    }

    #[test]
    fn unique_candidate_and_no_candidate() {
        let g = path(3);
        let c = units(&[1, 1, 1]);
        let r = brute_force_balanced_vertex(&g, &c, &sites(&[0, 2], 3)).unwrap();
        assert_eq!(r.best_vertex, 1);
        assert_eq!(
            brute_force_balanced_vertex(&g, &c, &sites(&[0, 1, 2], 3)),
            Err(Error::NoCandidate)
        );
    }

    #[test]
    fn fig3_witness_matches_definition() {
        let g = path(13);
        let c = units(&[1, 19, 3, 5, 1, 1, 0, 2, 1, 1, 1, 4, 10]);
        let s = sites(&[4, 12, 7], 13);
        let brute = brute_force_loads(&g, &c, &s).unwrap();
        for v in s.candidates() {
            let w = witness_load(&g, &c, &s, v).unwrap();
            assert_eq!(Some(w.load), brute[v]);
        }
    }

    #[test]
    fn argmin_prefers_smallest_id() {
        let loads = [
            None,
            Some(Cost::from_units(2)),
            Some(Cost::from_units(1)),
            Some(Cost::from_units(1)),
        ];
        assert_eq!(argmin_candidate(&loads), Some((2, Cost::from_units(1))));
        assert_eq!(argmin_candidate(&[None]), None);
    }
}
