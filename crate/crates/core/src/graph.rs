//! Immutable CSR graphs, site lists and shortest-path distances.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Marker for "not reached".
pub const UNREACHED: u64 = u64::MAX;

/// Simple undirected graph in compressed-sparse-row layout.
///
/// Adjacency lists are sorted by neighbor id. Edge lengths are `1` unless the
/// graph was built with explicit positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    weights: Option<Vec<u64>>,
}

impl Graph {
    /// Connected simple unit-length graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    /// Builds without the connectivity check, merging parallel edges by
    /// keeping the smallest weight. Used for auxiliary graphs.
    pub(crate) fn from_weighted_edges_merged(
        n: usize,
        edges: &[(Vertex, Vertex, u64)],
        weighted: bool,
    ) -> Graph {
        let mut adj: Vec<(Vertex, Vertex, u64)> = Vec::with_capacity(edges.len() * 2);
        for &(u, v, w) in edges {
            debug_assert!(u != v && w > 0);
            adj.push((u, v, w));
            adj.push((v, u, w));
        }
        adj.sort_unstable();
        adj.dedup_by(|b, a| a.0 == b.0 && a.1 == b.1);
        Self::from_sorted_arcs(n, &adj, weighted)
    }

    /// Copy with vertex `order[i]` renamed to `i`; `order` must be a
    /// permutation of the vertices.
    pub(crate) fn relabeled(&self, order: &[Vertex]) -> Graph {
        let n = self.n();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(self.targets.len());
        let mut weights = self
            .weights
            .as_ref()
            .map(|_| Vec::with_capacity(self.targets.len()));
        offsets.push(0);
        let mut row: Vec<(Vertex, u64)> = Vec::new();
        for &v in order {
            row.clear();
            row.extend(self.arcs(v).map(|(w, l)| (position[w], l)));
            row.sort_unstable();
            targets.extend(row.iter().map(|a| a.0));
            if let Some(ws) = weights.as_mut() {
                ws.extend(row.iter().map(|a| a.1));
            }
            offsets.push(targets.len());
        }
        Graph {
            offsets,
            targets,
            weights,
        }
    }

    fn from_sorted_arcs(n: usize, arcs: &[(Vertex, Vertex, u64)], weighted: bool) -> Graph {
        let mut offsets = vec![0usize; n + 1];
        for &(u, _, _) in arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.iter().map(|a| a.1).collect();
        let weights = weighted.then(|| arcs.iter().map(|a| a.2).collect());
        Graph {
            offsets,
            targets,
            weights,
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Neighbors of `v` with edge lengths.
    pub fn arcs(&self, v: Vertex) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        let weights = self.weights.as_deref();
        range.map(move |i| (self.targets[i], weights.map_or(1, |w| w[i])))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v, length)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, u64)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.arcs(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, w)| (u, v, w))
        })
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_unweighted(&self) -> Result<()> {
        if self.is_weighted() {
            return Err(Error::Weighted);
        }
        Ok(())
    }

    /// Vertex of the first unreachable vertex from 0, if any.
    fn first_unreachable(&self) -> Option<Vertex> {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }
}

/// Collects edges, then validates and freezes them into a [`Graph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex, u64)>,
    weighted: bool,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: Vec::new(),
            weighted: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.edges.push((u, v, 1));
        self
    }

    pub fn add_weighted_edge(&mut self, u: Vertex, v: Vertex, weight: u64) -> &mut Self {
        self.weighted = true;
        self.edges.push((u, v, weight));
        self
    }

    /// Rejects loops, parallel edges, zero weights, out-of-range endpoints and
    /// disconnected graphs.
    pub fn build(&self) -> Result<Graph> {
        let n = self.n;
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut arcs = Vec::with_capacity(self.edges.len() * 2);
        for &(u, v, w) in &self.edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if w == 0 {
                return Err(Error::ZeroWeight(u, v));
            }
            arcs.push((u, v, w));
            arcs.push((v, u, w));
        }
        arcs.sort_unstable();
        if let Some(pair) = arcs
            .windows(2)
            .find(|p| p[0].0 == p[1].0 && p[0].1 == p[1].1)
        {
            let (a, b) = (pair[0].0.min(pair[0].1), pair[0].0.max(pair[0].1));
            return Err(Error::ParallelEdge(a, b));
        }
        let g = Graph::from_sorted_arcs(n, &arcs, self.weighted);
        if let Some(v) = g.first_unreachable() {
            return Err(Error::Disconnected(v));
        }
        Ok(g)
    }
}

/// Ordered list of pairwise distinct sites; position is priority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteList {
    sites: Vec<Vertex>,
    index: Vec<Option<usize>>,
}

impl SiteList {
    pub fn new(sites: Vec<Vertex>, n: usize) -> Result<SiteList> {
        let mut index = vec![None; n];
        for (i, &s) in sites.iter().enumerate() {
            if s >= n {
                return Err(Error::VertexOutOfRange { vertex: s, n });
            }
            if index[s].is_some() {
                return Err(Error::DuplicateSite(s));
            }
            index[s] = Some(i);
        }
        Ok(SiteList { sites, index })
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.sites
    }

    pub fn get(&self, i: usize) -> Vertex {
        self.sites[i]
    }

    /// Number of vertices of the graph this list was validated against.
    pub fn universe(&self) -> usize {
        self.index.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.get(v).is_some_and(|i| i.is_some())
    }

    /// Priority index of `v`, if it is a site.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.index.get(v).copied().flatten()
    }

    /// `S + v`: the list with `v` appended as the lowest-priority site.
    pub fn with(&self, v: Vertex) -> Result<SiteList> {
        if v >= self.universe() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.universe(),
            });
        }
        if self.contains(v) {
            return Err(Error::AlreadySite(v));
        }
        let mut next = self.clone();
        next.index[v] = Some(next.sites.len());
        next.sites.push(v);
        Ok(next)
    }

    /// Vertices that are not sites, ascending.
    pub fn candidates(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.universe()).filter(move |&v| !self.contains(v))
    }

    pub(crate) fn check_for(&self, g: &Graph) -> Result<()> {
        if self.universe() != g.n() {
            return Err(Error::InvalidArgument(alloc::format!(
                "site list built for {} vertices, graph has {}",
                self.universe(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Exact shortest-path distances from `source`: BFS on unit graphs, Dijkstra
/// otherwise.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<u64>> {
    g.check_vertex(source)?;
    Ok(distances_from(g, &[source]))
}

/// Distances to the nearest of `sources` (a multi-source search).
pub fn distances_from(g: &Graph, sources: &[Vertex]) -> Vec<u64> {
    if g.is_weighted() {
        dijkstra(g, sources)
    } else {
        bfs(g, sources)
    }
}

fn bfs(g: &Graph, sources: &[Vertex]) -> Vec<u64> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    for &s in sources {
        if dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = du;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn dijkstra(g: &Graph, sources: &[Vertex]) -> Vec<u64> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut heap = BinaryHeap::new();
    for &s in sources {
        dist[s] = 0;
        heap.push(Reverse((0u64, s)));
    }
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for (w, len) in g.arcs(u) {
            let nd = d + len;
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((nd, w)));
            }
        }
    }
    dist
}
