//! Umbrella orders by three LexBFS sweeps and the σ ordering of a proper
//! interval graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, Vertex};

const NIL: usize = usize::MAX;

/// Vertex order in which every closed neighborhood is a contiguous range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmbrellaOrder {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl UmbrellaOrder {
    /// Validates `order` against `g`, reporting a violating triple
    /// `(a, b, c)` in order where `a ~ c` but `b` misses one of them.
    pub fn new(g: &Graph, order: Vec<Vertex>) -> Result<Self> {
        let n = g.n();
        if order.len() != n {
            return Err(Error::InvalidArgument(
                "order must list every vertex once".into(),
            ));
        }
        let mut position = vec![NIL; n];
        for (i, &v) in order.iter().enumerate() {
            g.check_vertex(v)?;
            if position[v] != NIL {
                return Err(Error::InvalidArgument(
                    "order must list every vertex once".into(),
                ));
            }
            position[v] = i;
        }
        let mut mark = vec![NIL; n];
        for v in 0..n {
            let pv = position[v];
            let (mut lo, mut hi) = (pv, pv);
            mark[pv] = v;
            for &w in g.neighbors(v) {
                let p = position[w];
                lo = lo.min(p);
                hi = hi.max(p);
                mark[p] = v;
            }
            if hi - lo != g.degree(v) {
                let gap = (lo..=hi).find(|&p| mark[p] != v).unwrap();
                let triple = if gap < pv {
                    (order[lo], order[gap], v)
                } else {
                    (v, order[gap], order[hi])
                };
                return Err(Error::NotProperInterval(triple.0, triple.1, triple.2));
            }
        }
        Ok(UmbrellaOrder { order, position })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    /// The first vertex, an end of some proper realization.
    pub fn x0(&self) -> Vertex {
        self.order[0]
    }
}

/// Lexicographic BFS where ties go to the vertex earliest in `initial`.
fn lex_bfs(g: &Graph, initial: &[Vertex]) -> Vec<Vertex> {
    // Renumbering by rank leaves every neighbor list in rank order, which
    // keeps each class sorted by rank.
    let h = g.relabeled(initial);
    lex_bfs_by_id(&h).into_iter().map(|i| initial[i]).collect()
}

/// Lexicographic BFS with ties going to the smaller id.
fn lex_bfs_by_id(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    struct Class {
        head: usize,
        tail: usize,
        prev: usize,
        next: usize,
        split: usize,
        stamp: usize,
    }
    let mut classes = vec![Class {
        head: 0,
        tail: n - 1,
        prev: NIL,
        next: NIL,
        split: NIL,
        stamp: NIL,
    }];
    let mut first = 0;
    let mut cls = vec![0usize; n];
    let mut vprev = vec![NIL; n];
    let mut vnext = vec![NIL; n];
    for v in 1..n {
        vnext[v - 1] = v;
        vprev[v] = v - 1;
    }

    fn unlink_vertex(
        classes: &mut [Class],
        vprev: &mut [usize],
        vnext: &mut [usize],
        c: usize,
        v: usize,
    ) {
        let (p, q) = (vprev[v], vnext[v]);
        if p == NIL {
            classes[c].head = q
        } else {
            vnext[p] = q
        }
        if q == NIL {
            classes[c].tail = p
        } else {
            vprev[q] = p
        }
        vprev[v] = NIL;
        vnext[v] = NIL;
    }

    fn unlink_class(classes: &mut [Class], first: &mut usize, c: usize) {
        let (p, q) = (classes[c].prev, classes[c].next);
        if p == NIL {
            *first = q
        } else {
            classes[p].next = q
        }
        if q != NIL {
            classes[q].prev = p;
        }
    }

    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for step in 0..n {
        let c = first;
        let v = classes[c].head;
        unlink_vertex(&mut classes, &mut vprev, &mut vnext, c, v);
        if classes[c].head == NIL {
            unlink_class(&mut classes, &mut first, c);
        }
        visited[v] = true;
        out.push(v);
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let c = cls[w];
            let d = if classes[c].stamp == step {
                classes[c].split
            } else {
                let d = classes.len();
                let before = classes[c].prev;
                classes.push(Class {
                    head: NIL,
                    tail: NIL,
                    prev: before,
                    next: c,
                    split: NIL,
                    stamp: NIL,
                });
                if before == NIL {
                    first = d
                } else {
                    classes[before].next = d
                }
                classes[c].prev = d;
                classes[c].stamp = step;
                classes[c].split = d;
                d
            };
            unlink_vertex(&mut classes, &mut vprev, &mut vnext, c, w);
            if classes[c].head == NIL {
                unlink_class(&mut classes, &mut first, c);
            }
            cls[w] = d;
            let t = classes[d].tail;
            vprev[w] = t;
            if t == NIL {
                classes[d].head = w
            } else {
                vnext[t] = w
            }
            classes[d].tail = w;
        }
    }
    out
}

/// Umbrella order of a connected proper interval graph from three LexBFS
/// sweeps, each later sweep breaking ties toward the vertex that came last
/// in the previous one.
pub fn recognize_proper_interval(g: &Graph) -> Result<UmbrellaOrder> {
    UmbrellaOrder::new(g, candidate_order(g)?)
}

/// The order the sweeps produce, not yet validated.
pub(crate) fn candidate_order(g: &Graph) -> Result<Vec<Vertex>> {
    g.require_unweighted()?;
    let mut order = lex_bfs_by_id(g);
    for _ in 0..2 {
        let reversed: Vec<Vertex> = order.iter().rev().copied().collect();
        order = lex_bfs(g, &reversed);
    }
    Ok(order)
}

/// Layers from `x0` and a total order `σ` such that, for `layer[u] <=
/// layer[v]` and `u != v`, `d(u, v)` is `layer[v] - layer[u]` when
/// `layer[u] < layer[v]` and `σ(v) < σ(u)`, and one more otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaOrdering {
    pub x0: Vertex,
    /// `d(v, x0)`.
    pub layer: Vec<u64>,
    /// Rank of each vertex, `0..n`.
    pub sigma: Vec<usize>,
}

impl SigmaOrdering {
    /// Distance read off the layers and σ.
    pub fn distance(&self, u: Vertex, v: Vertex) -> u64 {
        if u == v {
            return 0;
        }
        let (u, v) = if self.layer[u] <= self.layer[v] {
            (u, v)
        } else {
            (v, u)
        };
        let gap = self.layer[v] - self.layer[u];
        if gap > 0 && self.sigma[v] < self.sigma[u] {
            gap
        } else {
            gap + 1
        }
    }
}

/// All pairs up to this size are checked. Larger graphs get a few full BFS
/// sources plus many searches cut off after a fixed number of vertices, so
/// the check stays a small fraction of the solver's running time.
const FULL_CHECK: usize = 300;
const FAR_SOURCES: usize = 2;
const LOCAL_SOURCES: usize = 64;
const LOCAL_BUDGET: usize = 1024;

/// Builds σ by following greedy-reach trajectories.
///
/// With `R(p)` the furthest position adjacent to position `p`, a vertex `u`
/// in layer `a` sits at `R^(t-a)(pos(u))` at time `t >= a`. Vertices are
/// ordered by where they sit at the first time both exist, and a vertex
/// that just appeared goes before one that arrived at the same spot. Groups
/// of vertices sharing a spot move together, so each time step costs the
/// size of one layer. The result is checked against BFS distances.
pub fn sigma_ordering(g: &Graph, order: &UmbrellaOrder) -> Result<SigmaOrdering> {
    let n = g.n();
    let x0 = order.x0();
    let layer = bfs_distances(g, x0)?;
    let seq = order.order();
    let reach: Vec<usize> = seq
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .map(|&w| order.position(w))
                .max()
                .unwrap_or(0)
                .max(order.position(v))
        })
        .collect();
    if seq.windows(2).any(|w| layer[w[0]] > layer[w[1]]) {
        return Err(Error::SigmaValidation(seq[0], seq[1]));
    }

    // (position, head, tail) of each group, ascending by position.
    let mut link = vec![NIL; n];
    let mut groups: Vec<(usize, Vertex, Vertex)> = vec![(0, x0, x0)];
    let mut next_pos = 1;
    let depth = layer.iter().copied().max().unwrap_or(0);
    for t in 1..=depth {
        let mut moved: Vec<(usize, Vertex, Vertex)> = Vec::with_capacity(groups.len());
        for &(p, head, tail) in &groups {
            let np = reach[p];
            match moved.last_mut() {
                Some(last) if last.0 == np => {
                    link[last.2] = head;
                    last.2 = tail;
                }
                _ => moved.push((np, head, tail)),
            }
        }
        let mut merged = Vec::with_capacity(moved.len() + 4);
        let mut it = moved.into_iter().peekable();
        while next_pos < n && layer[seq[next_pos]] == t {
            let w = seq[next_pos];
            while let Some(&grp) = it.peek() {
                if grp.0 < next_pos {
                    merged.push(grp);
                    it.next();
                } else {
                    break;
                }
            }
            match it.peek() {
                Some(&(p, head, tail)) if p == next_pos => {
                    link[w] = head;
                    merged.push((p, w, tail));
                    it.next();
                }
                _ => merged.push((next_pos, w, w)),
            }
            next_pos += 1;
        }
        merged.extend(it);
        groups = merged;
    }
    let mut sigma = vec![NIL; n];
    let mut rank = 0;
    for &(_, head, _) in &groups {
        let mut v = head;
        while v != NIL {
            sigma[v] = rank;
            rank += 1;
            v = link[v];
        }
    }
    if rank != n {
        return Err(Error::SigmaValidation(x0, x0));
    }
    let sig = SigmaOrdering { x0, layer, sigma };
    validate(g, &sig, seq)?;
    Ok(sig)
}

fn validate(g: &Graph, sig: &SigmaOrdering, seq: &[Vertex]) -> Result<()> {
    let n = g.n();
    let full: Vec<Vertex> = if n <= FULL_CHECK {
        (0..n).collect()
    } else {
        (0..FAR_SOURCES)
            .map(|i| seq[(i + 1) * (n - 1) / FAR_SOURCES])
            .collect()
    };
    for u in full {
        let d = bfs_distances(g, u)?;
        if let Some(v) = (0..n).find(|&v| d[v] != sig.distance(u, v)) {
            return Err(Error::SigmaValidation(u, v));
        }
    }
    if n <= FULL_CHECK {
        return Ok(());
    }
    let mut dist = vec![u64::MAX; n];
    let mut queue = Vec::with_capacity(LOCAL_BUDGET);
    for i in 0..LOCAL_SOURCES {
        let u = i * n / LOCAL_SOURCES;
        // Distances are final once a vertex is queued, so the truncated
        // queue holds exact pairs.
        dist[u] = 0;
        queue.push(u);
        let mut head = 0;
        while head < queue.len() && queue.len() < LOCAL_BUDGET {
            let x = queue[head];
            head += 1;
            for &w in g.neighbors(x) {
                if dist[w] == u64::MAX && queue.len() < LOCAL_BUDGET {
                    dist[w] = dist[x] + 1;
                    queue.push(w);
                }
            }
        }
        for &v in &queue {
            if dist[v] != sig.distance(u, v) {
                return Err(Error::SigmaValidation(u, v));
            }
        }
        for &v in &queue {
            dist[v] = u64::MAX;
        }
        queue.clear();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use rand::rngs::SmallRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn paths_and_cliques() {
        let p = gen::path(4);
        let ord = recognize_proper_interval(&p).unwrap();
        let ends = [ord.order()[0], ord.order()[3]];
        assert!(ends.contains(&0) && ends.contains(&3));
        let sig = sigma_ordering(&p, &ord).unwrap();
        // Walking away from x0, σ strictly decreases.
        let walk: Vec<Vertex> = ord.order().to_vec();
        assert!(walk.windows(2).all(|w| sig.sigma[w[1]] < sig.sigma[w[0]]));

        let k = gen::complete(6);
        let sig = sigma_ordering(&k, &recognize_proper_interval(&k).unwrap()).unwrap();
        assert_eq!(sig.layer.iter().filter(|&&l| l == 1).count(), 5);
    }

    #[test]
    fn rejects_claw_and_cycle() {
        let claw = gen::star(4);
        assert!(matches!(
            recognize_proper_interval(&claw),
            Err(Error::NotProperInterval(..))
        ));
        assert!(matches!(
            recognize_proper_interval(&gen::cycle(5)),
            Err(Error::NotProperInterval(..))
        ));
        // A bad order for a path names a triple.
        let p = gen::path(3);
        assert_eq!(
            UmbrellaOrder::new(&p, vec![0, 2, 1]),
            Err(Error::NotProperInterval(0, 2, 1))
        );
    }

    #[test]
    fn random_unit_interval_graphs() {
        let mut rng = SmallRng::seed_from_u64(6);
        for _ in 0..80 {
            let n = rng.gen_range(1..300);
            let len = rng.gen_range(1..6);
            let g = gen::random_proper_interval(n, len, &mut rng);
            let ord = recognize_proper_interval(&g).unwrap();
            // sigma_ordering checks every pair against BFS at this size.
            sigma_ordering(&g, &ord).unwrap();
        }
    }

    #[test]
    fn lex_bfs_visits_neighbors_first() {
        let g = gen::star(5);
        let order = lex_bfs(&g, &[0, 1, 2, 3, 4]);
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
        let order = lex_bfs(&g, &[4, 3, 2, 1, 0]);
        assert_eq!(order, vec![4, 0, 3, 2, 1]);
    }
}
