use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Bags of vertices joined by a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; nothing else is checked until
    /// [`validate`](Self::validate).
    pub fn new(mut bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        for b in bags.iter_mut() {
            b.sort_unstable();
            b.dedup();
        }
        TreeDecomposition { bags, edges }
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Checks that the bags form a tree decomposition of `g` and returns its
    /// width.
    pub fn validate(&self, g: &Graph) -> Result<usize> {
        let n = g.n();
        let nb = self.bags.len();
        if nb == 0 {
            return Err(Error::Decomposition("no bags".into()));
        }
        if self.edges.len() + 1 != nb {
            return Err(Error::Decomposition(format!(
                "bag graph is not a tree: {} bags but {} edges",
                nb,
                self.edges.len()
            )));
        }
        let mut uf: Vec<usize> = (0..nb).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for &(s, t) in &self.edges {
            if s >= nb || t >= nb {
                return Err(Error::Decomposition(format!(
                    "bag edge {s}-{t} names a bag outside 0..{nb}"
                )));
            }
            let (rs, rt) = (find(&mut uf, s), find(&mut uf, t));
            if rs == rt {
                return Err(Error::Decomposition(format!(
                    "bag graph is not a tree: edge {s}-{t} closes a cycle"
                )));
            }
            uf[rs] = rt;
        }
        let mut bags_of = vec![Vec::new(); n];
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::Decomposition(format!(
                        "bag {t} names vertex {v} outside 0..{n}"
                    )));
                }
                bags_of[v].push(t);
            }
        }
        if let Some(v) = (0..n).find(|&v| bags_of[v].is_empty()) {
            return Err(Error::Decomposition(format!("vertex {v} is in no bag")));
        }
        for (u, v, _) in g.edges() {
            if !bags_of[u]
                .iter()
                .any(|&t| self.bags[t].binary_search(&v).is_ok())
            {
                return Err(Error::Decomposition(format!("edge {u}-{v} is in no bag")));
            }
        }
        // The bags holding v induce a forest; it is a tree iff it has one
        // edge fewer than nodes.
        let mut links = vec![0usize; n];
        for &(s, t) in &self.edges {
            let (a, b) = (&self.bags[s], &self.bags[t]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        links[a[i]] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| links[v] + 1 != bags_of[v].len()) {
            return Err(Error::Decomposition(format!(
                "bags containing vertex {v} are not connected"
            )));
        }
        Ok(self.width())
    }
}

/// Decomposition from a min-degree elimination ordering. Each eliminated
/// vertex contributes the bag of itself and its current neighbors, attached
/// to the bag of the first of those neighbors to be eliminated later.
pub fn heuristic_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut heap: BinaryHeap<Reverse<(usize, Vertex)>> =
        (0..n).map(|v| Reverse((adj[v].len(), v))).collect();
    let mut pos = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut bags = Vec::with_capacity(n);
    while let Some(Reverse((d, v))) = heap.pop() {
        if pos[v] != usize::MAX || d != adj[v].len() {
            continue;
        }
        pos[v] = order.len();
        order.push(v);
        let nb: Vec<Vertex> = core::mem::take(&mut adj[v]).into_iter().collect();
        for &u in &nb {
            adj[u].remove(&v);
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &u in &nb {
            heap.push(Reverse((adj[u].len(), u)));
        }
        let mut bag = nb;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (t, &v) in order.iter().enumerate() {
        let next = bags[t].iter().filter(|&&u| u != v).map(|&u| pos[u]).min();
        match next {
            Some(p) => edges.push((t, p)),
            None if t + 1 < n => edges.push((t, n - 1)),
            None => {}
        }
    }
    TreeDecomposition::new(bags, edges)
}
