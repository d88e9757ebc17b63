//! Static k-dimensional range tree answering weighted box-sum queries.
//!
//! Each level sorts its points by one coordinate and keeps a segment tree
//! whose nodes hold a range tree over the remaining coordinates; the last
//! coordinate is a sorted array with prefix sums. Queries cost
//! `O(log^k n)`; build time and space are `O(n log^(k-1) n)`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Constraint on one coordinate. All bounds are integers, so strict bounds
/// are stored as the adjacent non-strict bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    pub const fn any() -> Self {
        Interval {
            lo: i64::MIN,
            hi: i64::MAX,
        }
    }

    /// `x >= c`.
    pub const fn at_least(c: i64) -> Self {
        Interval {
            lo: c,
            hi: i64::MAX,
        }
    }

    /// `x > c`, i.e. `x >= c + 1`.
    pub fn greater_than(c: i64) -> Self {
        match c.checked_add(1) {
            Some(lo) => Interval { lo, hi: i64::MAX },
            None => Interval::empty(),
        }
    }

    /// `x <= c`.
    pub const fn at_most(c: i64) -> Self {
        Interval {
            lo: i64::MIN,
            hi: c,
        }
    }

    /// `x < c`, i.e. `x <= c - 1`.
    pub fn less_than(c: i64) -> Self {
        match c.checked_sub(1) {
            Some(hi) => Interval { lo: i64::MIN, hi },
            None => Interval::empty(),
        }
    }

    /// `lo <= x <= hi`.
    pub const fn between(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    /// Intersection with `other`.
    pub fn and(self, other: Interval) -> Self {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    fn empty() -> Self {
        Interval { lo: 1, hi: 0 }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Ranges this small are answered by scanning instead of nesting.
const SCAN_LIMIT: usize = 12;

#[derive(Debug, Clone)]
enum DimTree {
    Last {
        keys: Vec<i64>,
        /// `prefix[i]` is the weight of the first `i` points.
        prefix: Vec<u64>,
    },
    /// Raw points over the remaining `dims` coordinates.
    Scan {
        dims: usize,
        coords: Vec<i64>,
        weights: Vec<u64>,
    },
    Inner {
        keys: Vec<i64>,
        /// Heap-indexed segment tree over `keys`. A node covering more than
        /// `SCAN_LIMIT` points holds the tree of the next dimension; smaller
        /// nodes hold a scan over this dimension onwards.
        nodes: Vec<Option<Box<DimTree>>>,
    },
}

struct Points<'a> {
    k: usize,
    coords: &'a [i64],
    weights: &'a [u64],
}

impl Points<'_> {
    fn coord(&self, p: usize, d: usize) -> i64 {
        self.coords[p * self.k + d]
    }
}

impl DimTree {
    /// `ids` must be sorted by coordinate `d`.
    fn build(pts: &Points, ids: &[usize], d: usize) -> DimTree {
        if d + 1 == pts.k {
            let keys = ids.iter().map(|&p| pts.coord(p, d)).collect();
            let mut prefix = Vec::with_capacity(ids.len() + 1);
            prefix.push(0);
            let mut acc = 0u64;
            for &p in ids {
                acc += pts.weights[p];
                prefix.push(acc);
            }
            return DimTree::Last { keys, prefix };
        }
        if ids.len() <= SCAN_LIMIT {
            return Self::scan(pts, ids, d);
        }
        let keys = ids.iter().map(|&p| pts.coord(p, d)).collect();
        let mut nodes = Vec::new();
        nodes.resize_with(4 * ids.len(), || None);
        Self::build_node(pts, ids, d, 1, 0, ids.len(), &mut nodes);
        DimTree::Inner { keys, nodes }
    }

    fn scan(pts: &Points, ids: &[usize], d: usize) -> DimTree {
        let dims = pts.k - d;
        let mut coords = Vec::with_capacity(ids.len() * dims);
        for &p in ids {
            coords.extend_from_slice(&pts.coords[p * pts.k + d..(p + 1) * pts.k]);
        }
        DimTree::Scan {
            dims,
            coords,
            weights: ids.iter().map(|&p| pts.weights[p]).collect(),
        }
    }

    fn build_node(
        pts: &Points,
        ids: &[usize],
        d: usize,
        node: usize,
        l: usize,
        r: usize,
        nodes: &mut Vec<Option<Box<DimTree>>>,
    ) {
        if r - l <= SCAN_LIMIT {
            nodes[node] = Some(Box::new(Self::scan(pts, &ids[l..r], d)));
            return;
        }
        let mut sub: Vec<usize> = ids[l..r].to_vec();
        sub.sort_by_key(|&p| pts.coord(p, d + 1));
        nodes[node] = Some(Box::new(DimTree::build(pts, &sub, d + 1)));
        let mid = (l + r) / 2;
        Self::build_node(pts, ids, d, 2 * node, l, mid, nodes);
        Self::build_node(pts, ids, d, 2 * node + 1, mid, r, nodes);
    }

    fn query(&self, bounds: &[Interval]) -> u64 {
        let b = bounds[0];
        if b.lo > b.hi {
            return 0;
        }
        match self {
            DimTree::Last { keys, prefix } => {
                let from = keys.partition_point(|&x| x < b.lo);
                let to = keys.partition_point(|&x| x <= b.hi);
                if from >= to {
                    0
                } else {
                    prefix[to] - prefix[from]
                }
            }
            DimTree::Scan {
                dims,
                coords,
                weights,
            } => coords
                .chunks_exact(*dims)
                .zip(weights)
                .filter(|(p, _)| p.iter().zip(bounds).all(|(&x, b)| b.contains(x)))
                .map(|(_, &w)| w)
                .sum(),
            DimTree::Inner { keys, nodes } => {
                let from = keys.partition_point(|&x| x < b.lo);
                let to = keys.partition_point(|&x| x <= b.hi);
                if from >= to {
                    return 0;
                }
                Self::query_node(nodes, 1, 0, keys.len(), from, to, bounds)
            }
        }
    }

    fn query_node(
        nodes: &[Option<Box<DimTree>>],
        node: usize,
        l: usize,
        r: usize,
        from: usize,
        to: usize,
        bounds: &[Interval],
    ) -> u64 {
        if to <= l || r <= from {
            return 0;
        }
        let Some(t) = nodes[node].as_ref() else {
            return 0;
        };
        if r - l <= SCAN_LIMIT {
            return t.query(bounds);
        }
        if from <= l && r <= to {
            return t.query(&bounds[1..]);
        }
        let mid = (l + r) / 2;
        Self::query_node(nodes, 2 * node, l, mid, from, to, bounds)
            + Self::query_node(nodes, 2 * node + 1, mid, r, from, to, bounds)
    }
}

/// Weighted static point set in `Z^k` with box-sum queries.
#[derive(Debug, Clone)]
pub struct KRangeTree {
    k: usize,
    total: u64,
    root: DimTree,
}

impl KRangeTree {
    /// Builds over `points` (each of dimension `k >= 1`) with matching
    /// `weights`. Duplicate points are allowed; their weights add up.
    pub fn build<P: AsRef<[i64]>>(k: usize, points: &[P], weights: &[u64]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "range tree dimension must be at least 1".into(),
            ));
        }
        if points.len() != weights.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        let mut coords = Vec::with_capacity(points.len() * k);
        for p in points {
            let p = p.as_ref();
            if p.len() != k {
                return Err(Error::MixedDimensions {
                    expected: k,
                    got: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        let total = weights
            .iter()
            .try_fold(0u64, |a, &w| a.checked_add(w))
            .ok_or(Error::CostOverflow)?;
        let pts = Points {
            k,
            coords: &coords,
            weights,
        };
        let mut ids: Vec<usize> = (0..points.len()).collect();
        ids.sort_by_key(|&p| pts.coord(p, 0));
        let root = DimTree::build(&pts, &ids, 0);
        Ok(KRangeTree { k, total, root })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Sum of the weights of the points inside the box. Panics if the box
    /// dimension differs from the tree's.
    pub fn query(&self, bounds: &[Interval]) -> u64 {
        assert_eq!(bounds.len(), self.k, "box dimension mismatch");
        self.root.query(bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn naive(points: &[Vec<i64>], weights: &[u64], bounds: &[Interval]) -> u64 {
        points
            .iter()
            .zip(weights)
            .filter(|(p, _)| p.iter().zip(bounds).all(|(&x, b)| b.contains(x)))
            .map(|(_, &w)| w)
            .sum()
    }

    #[test]
    fn small_examples() {
        let pts = vec![vec![1, 2], vec![3, 4]];
        let t = KRangeTree::build(2, &pts, &[5, 7]).unwrap();
        assert_eq!(
            t.query(&[Interval::between(1, 3), Interval::between(2, 4)]),
            12
        );
        assert_eq!(
            t.query(&[Interval::greater_than(1), Interval::at_least(4)]),
            7
        );
        assert_eq!(t.query(&[Interval::greater_than(3), Interval::any()]), 0);
        assert_eq!(t.query(&[Interval::any(), Interval::any()]), t.total());
        let empty: Vec<Vec<i64>> = Vec::new();
        let e = KRangeTree::build(3, &empty, &[]).unwrap();
        assert_eq!(e.query(&[Interval::any(); 3]), 0);
        assert_eq!(
            KRangeTree::build(2, &[vec![1, 2], vec![1]], &[1, 1]).unwrap_err(),
            Error::MixedDimensions {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn strict_bounds_at_extremes() {
        assert!(!Interval::greater_than(i64::MAX).contains(i64::MAX));
        assert!(!Interval::less_than(i64::MIN).contains(i64::MIN));
        assert!(Interval::at_least(3)
            .and(Interval::less_than(5))
            .contains(4));
    }

    fn interval() -> impl Strategy<Value = Interval> {
        prop_oneof![
            Just(Interval::any()),
            (-6i64..6).prop_map(Interval::at_least),
            (-6i64..6).prop_map(Interval::greater_than),
            (-6i64..6).prop_map(Interval::at_most),
            (-6i64..6, 0i64..6).prop_map(|(a, w)| Interval::between(a, a + w)),
        ]
    }

    proptest! {
        #[test]
        fn matches_naive_scan(
            k in 1usize..4,
            raw in proptest::collection::vec((proptest::collection::vec(-5i64..5, 3), 0u64..20), 0..120),
            boxes in proptest::collection::vec(proptest::collection::vec(interval(), 3), 1..10),
        ) {
            let points: Vec<Vec<i64>> = raw.iter().map(|(p, _)| p[..k].to_vec()).collect();
            let weights: Vec<u64> = raw.iter().map(|&(_, w)| w).collect();
            let t = KRangeTree::build(k, &points, &weights).unwrap();
            for b in &boxes {
                prop_assert_eq!(t.query(&b[..k]), naive(&points, &weights, &b[..k]));
            }
        }

        #[test]
        fn split_boxes_add_up(
            raw in proptest::collection::vec((-5i64..5, -5i64..5, 0u64..20), 0..40),
            cx in -5i64..5,
            cy in -5i64..5,
        ) {
            let points: Vec<Vec<i64>> = raw.iter().map(|&(x, y, _)| vec![x, y]).collect();
            let weights: Vec<u64> = raw.iter().map(|&(_, _, w)| w).collect();
            let t = KRangeTree::build(2, &points, &weights).unwrap();
            let parts = [
                [Interval::at_most(cx), Interval::at_most(cy)],
                [Interval::at_most(cx), Interval::greater_than(cy)],
                [Interval::greater_than(cx), Interval::at_most(cy)],
                [Interval::greater_than(cx), Interval::greater_than(cy)],
            ];
            let sum: u64 = parts.iter().map(|b| t.query(b)).sum();
            prop_assert_eq!(sum, t.total());
        }
    }
}
