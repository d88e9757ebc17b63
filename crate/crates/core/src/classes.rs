//! Structural recognizers for the graph classes with dedicated solvers.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

pub fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.m() == n * (n - 1) / 2
}

pub fn is_tree(g: &Graph) -> bool {
    g.m() + 1 == g.n()
}

/// A path on at least two vertices.
pub fn is_path(g: &Graph) -> bool {
    g.n() >= 2 && is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// A cycle on at least three vertices.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Exact check that every pair of vertices is within two hops, `O(n m)`.
/// Edge weights are ignored.
pub fn has_diameter_at_most_two(g: &Graph) -> bool {
    let n = g.n();
    let mut stamp = vec![usize::MAX; n];
    for u in 0..n {
        if g.degree(u) == n - 1 {
            continue;
        }
        let mut seen = 1;
        stamp[u] = u;
        for &w in g.neighbors(u) {
            if stamp[w] != u {
                stamp[w] = u;
                seen += 1;
            }
            for &x in g.neighbors(w) {
                if stamp[x] != u {
                    stamp[x] = u;
                    seen += 1;
                }
            }
        }
        if seen < n {
            return false;
        }
    }
    true
}

/// Vertices of a path or cycle in walk order.
///
/// Paths start at their smallest-id end; cycles start at `start` and leave
/// through its smaller-id neighbor.
pub(crate) fn walk(g: &Graph, start: Vertex) -> Vec<Vertex> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        order.push(cur);
        if order.len() == n {
            break;
        }
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    order
}

/// Smallest-id degree-one vertex of a path.
pub(crate) fn path_start(g: &Graph) -> Vertex {
    (0..g.n()).find(|&v| g.degree(v) <= 1).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn recognizers() {
        let p = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(is_path(&p) && is_tree(&p) && !is_cycle(&p) && !is_complete(&p));
        assert_eq!(walk(&p, path_start(&p)), vec![1, 3, 0, 2]);
        let c = cycle(5);
        assert!(is_cycle(&c) && !is_tree(&c));
        assert_eq!(walk(&c, 0), vec![0, 1, 2, 3, 4]);
        let k = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_complete(&k) && is_cycle(&k));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_tree(&star) && !is_path(&star));
    }

    #[test]
    fn diameter_two() {
        assert!(has_diameter_at_most_two(&cycle(4)));
        assert!(has_diameter_at_most_two(&cycle(5)));
        assert!(!has_diameter_at_most_two(&cycle(6)));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(has_diameter_at_most_two(&star));
    }
}
