//! Rooted tree with level-ancestor queries by binary lifting.

use alloc::vec;
use alloc::vec::Vec;

use crate::cost::{Cost, CostVector};
use crate::graph::{Graph, Vertex};

/// A tree rooted at `root` with depths, subtree costs and jump pointers.
#[derive(Debug, Clone)]
pub struct RootedTreeIndex {
    pub root: Vertex,
    pub parent: Vec<Vertex>,
    pub depth: Vec<usize>,
    /// `π(T_v)`, the cost of the subtree below `v` (inclusive).
    pub subtree_cost: Vec<Cost>,
    /// `up[k][v]` is the `2^k`-th ancestor of `v` (the root maps to itself).
    up: Vec<Vec<Vertex>>,
}

impl RootedTreeIndex {
    /// `g` must be a tree.
    pub fn new(g: &Graph, root: Vertex, costs: &CostVector) -> Self {
        let n = g.n();
        let mut parent = vec![root; n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    order.push(w);
                }
            }
        }
        let mut subtree_cost: Vec<Cost> = (0..n).map(|v| costs[v]).collect();
        for &v in order.iter().rev() {
            if v != root {
                let c = subtree_cost[v];
                subtree_cost[parent[v]] += c;
            }
        }
        let levels = usize::BITS as usize - n.leading_zeros() as usize;
        let mut up = vec![parent.clone()];
        for k in 1..levels.max(1) {
            let prev = &up[k - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }
        RootedTreeIndex {
            root,
            parent,
            depth,
            subtree_cost,
            up,
        }
    }

    /// Ancestor of `v` at depth `level` (`level <= depth(v)`).
    pub fn ancestor_at_level(&self, v: Vertex, level: usize) -> Vertex {
        debug_assert!(level <= self.depth[v]);
        let mut hops = self.depth[v] - level;
        let mut cur = v;
        let mut k = 0;
        while hops > 0 {
            if hops & 1 == 1 {
                cur = self.up[k][cur];
            }
            hops >>= 1;
            k += 1;
        }
        cur
    }
}
