//! Hitting Set instances, two answer-preserving reductions and the graph
//! family on which Balanced Vertex encodes Hitting Set.
//!
//! A Hitting Set instance is a triple `(A, B, U)` of two lists of subsets of a
//! universe `U`; it is a yes-instance when some set of `A` meets every set of
//! `B`. [`build_hardness_graph`] normalizes an arbitrary instance with
//! [`reduce_halving`] and [`reduce_cardinality`] (`α = 2, β = -1`) and then
//! builds the graph with one site `s` and unit costs, in which a candidate of
//! load at most `n + t + 1` exists exactly when the instance has a hitting
//! set, provided [`HardnessGraph::thresholds_valid`] holds.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::cost::{Cost, CostVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, SiteList, Vertex};

/// Universe element.
pub type Element = u32;

/// `(A, B, U)`; every set is sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSInstance {
    pub universe: Vec<Element>,
    pub a: Vec<Vec<Element>>,
    pub b: Vec<Vec<Element>>,
}

impl HSInstance {
    /// Sorts and deduplicates everything and checks that every set lies in
    /// the universe. The two lists may differ in length.
    pub fn new(
        mut universe: Vec<Element>,
        mut a: Vec<Vec<Element>>,
        mut b: Vec<Vec<Element>>,
    ) -> Result<Self> {
        universe.sort_unstable();
        universe.dedup();
        for (name, list) in [("A", &mut a), ("B", &mut b)] {
            for (i, set) in list.iter_mut().enumerate() {
                set.sort_unstable();
                set.dedup();
                if let Some(e) = set.iter().find(|e| universe.binary_search(e).is_err()) {
                    return Err(Error::HittingSet(format!(
                        "{name}[{i}] contains {e}, which is not in the universe"
                    )));
                }
            }
        }
        Ok(HSInstance { universe, a, b })
    }

    /// Largest element plus one, or 0 for an empty universe.
    fn fresh(&self) -> Element {
        self.universe.last().map_or(0, |&e| e + 1)
    }
}

fn intersects(x: &[Element], y: &[Element]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Index of the first set of `A` meeting every set of `B`, by checking all
/// pairs.
pub fn brute_force_hitting_set(inst: &HSInstance) -> Option<usize> {
    inst.a
        .iter()
        .position(|a| inst.b.iter().all(|b| intersects(a, b)))
}

/// Two disjoint copies of the instance. Copy `i` of each `A`-set is padded
/// with the whole universe of the other copy and copy `i` of each `B`-set is
/// tagged with a fresh element `x_i`, so every `B`-set meets exactly the
/// `B`-sets of its own copy.
///
/// Element `universe[j]` becomes `j` in copy 0 and `k + j` in copy 1, with
/// `x_0 = 2k` and `x_1 = 2k + 1`. Copy 0 comes first in both lists.
pub fn reduce_halving(inst: &HSInstance) -> HSInstance {
    let k = inst.universe.len() as Element;
    let index = |e: &Element| inst.universe.binary_search(e).unwrap() as Element;
    let copy = |set: &[Element], side: Element| -> Vec<Element> {
        set.iter().map(|e| index(e) + side * k).collect()
    };
    let mut a = Vec::with_capacity(2 * inst.a.len());
    let mut b = Vec::with_capacity(2 * inst.b.len());
    for side in 0..2 {
        let other = (1 - side) * k..(2 - side) * k;
        for set in &inst.a {
            let mut s = copy(set, side);
            s.extend(other.clone());
            s.sort_unstable();
            a.push(s);
        }
        for set in &inst.b {
            let mut s = copy(set, side);
            s.push(2 * k + side);
            b.push(s);
        }
    }
    HSInstance {
        universe: (0..2 * k + 2).collect(),
        a,
        b,
    }
}

/// Pads the instance so that every `A`-set has the same size `t` and the
/// universe has size `α·t + β`. `B` is unchanged.
///
/// Sets are first padded to the largest size `Δ` with a shared run of dummy
/// elements. If `α·Δ + β` exceeds the universe, fresh elements fill it and
/// `t = Δ`; if it falls short, every `A`-set also receives `q + 1` fresh
/// elements and `α - 1 - r` unused ones are added, where the shortfall is
/// `q(α - 1) + r`; if it matches, nothing more is added. Fresh elements are
/// numbered after the largest element of the input. An instance without
/// `A`-sets is returned as is.
pub fn reduce_cardinality(inst: &HSInstance, alpha: i64, beta: i64) -> Result<HSInstance> {
    if alpha < 2 {
        return Err(Error::InvalidArgument(format!(
            "alpha must be at least 2, got {alpha}"
        )));
    }
    let (Some(hi), Some(lo)) = (
        inst.a.iter().map(Vec::len).max(),
        inst.a.iter().map(Vec::len).min(),
    ) else {
        return Ok(inst.clone());
    };
    let mut next = inst.fresh();
    let mut take = |count: usize| -> Vec<Element> {
        let run = (next..next + count as Element).collect();
        next += count as Element;
        run
    };
    let dummies = take(hi - lo);
    let mut universe = inst.universe.clone();
    universe.extend(&dummies);
    let mut a: Vec<Vec<Element>> = inst
        .a
        .iter()
        .map(|set| {
            let mut s = set.clone();
            s.extend(&dummies[..hi - set.len()]);
            s
        })
        .collect();

    let target = alpha * hi as i64 + beta;
    let have = universe.len() as i64;
    if target > have {
        universe.extend(take((target - have) as usize));
    } else if target < have {
        let gap = have - target;
        let (q, r) = (gap / (alpha - 1), gap % (alpha - 1));
        let x = take((alpha - 1 - r) as usize);
        let y = take((q + 1) as usize);
        universe.extend(&x);
        universe.extend(&y);
        for s in a.iter_mut() {
            s.extend(&y);
        }
    }
    HSInstance::new(universe, a, inst.b.clone())
}

/// Equivalent instance with two nonempty lists of equal length. A list is
/// lengthened by repeating its sets cyclically, which keeps the answer; an
/// empty list is replaced by a one-element instance with the same answer.
fn balance(inst: &HSInstance) -> (HSInstance, Vec<Option<usize>>) {
    if inst.a.is_empty() || inst.b.is_empty() {
        let yes = inst.b.is_empty() && !inst.a.is_empty();
        let a = if yes { vec![vec![0]] } else { vec![Vec::new()] };
        let trivial = HSInstance {
            universe: vec![0],
            a,
            b: vec![vec![0]],
        };
        let origin = vec![(!inst.a.is_empty()).then_some(0)];
        return (trivial, origin);
    }
    let n = inst.a.len().max(inst.b.len());
    let cyc = |list: &[Vec<Element>]| -> Vec<Vec<Element>> {
        (0..n).map(|i| list[i % list.len()].clone()).collect()
    };
    let origin = (0..n).map(|i| Some(i % inst.a.len())).collect();
    (
        HSInstance {
            universe: inst.universe.clone(),
            a: cyc(&inst.a),
            b: cyc(&inst.b),
        },
        origin,
    )
}

/// Balanced Vertex instance encoding a structured Hitting Set instance.
///
/// Vertices are `s = 0`, `x = 1`, `y = 2`, then the universe in order, then
/// the `A`-sets, then the `B`-sets.
#[derive(Debug, Clone)]
pub struct HardnessGraph {
    pub graph: Graph,
    pub sites: SiteList,
    pub costs: CostVector,
    /// One label per vertex: `s`, `x`, `y`, `u#e`, `a#i`, `b#j`.
    pub labels: Vec<String>,
    /// The instance the graph encodes, after all reductions.
    pub reduced: HSInstance,
    /// `|A| = |B|` of the reduced instance.
    pub n: usize,
    /// Size of every reduced `A`-set, `(|U| + 1) / 2`.
    pub t: usize,
    /// `n + t + 1` in cost units.
    pub threshold: Cost,
    /// `t > 2` and `t < n/2 + 2`; only then is the threshold test exact.
    pub thresholds_valid: bool,
    origin: Vec<Option<usize>>,
}

impl HardnessGraph {
    /// Builds the graph directly from an instance that already has equally
    /// many `A`- and `B`-sets, an odd universe, `A`-sets of size
    /// `(|U| + 1) / 2` and no empty `B`-set.
    pub fn from_structured(inst: &HSInstance) -> Result<Self> {
        let n = inst.a.len();
        Self::build(inst.clone(), (0..n).map(Some).collect())
    }

    fn build(inst: HSInstance, origin: Vec<Option<usize>>) -> Result<Self> {
        let n = inst.a.len();
        let k = inst.universe.len();
        if n == 0 || inst.b.len() != n {
            return Err(Error::HittingSet(format!(
                "need two nonempty lists of equal length, got {} and {}",
                n,
                inst.b.len()
            )));
        }
        if k.is_multiple_of(2) {
            return Err(Error::HittingSet(format!("universe size {k} is even")));
        }
        let t = k.div_ceil(2);
        if let Some(i) = inst.a.iter().position(|s| s.len() != t) {
            return Err(Error::HittingSet(format!(
                "A[{i}] has {} elements, expected {t}",
                inst.a[i].len()
            )));
        }
        if let Some(j) = inst.b.iter().position(Vec::is_empty) {
            return Err(Error::HittingSet(format!("B[{j}] is empty")));
        }
        let checked = HSInstance::new(inst.universe.clone(), inst.a.clone(), inst.b.clone())?;

        let (s, x, y) = (0, 1, 2);
        let u = |e: &Element| -> Vertex { 3 + checked.universe.binary_search(e).unwrap() };
        let a_at = |i: usize| 3 + k + i;
        let b_at = |j: usize| 3 + k + n + j;
        let total = 3 + k + 2 * n;

        let mut edges = vec![(s, x), (s, y), (x, y)];
        for i in 0..k {
            edges.push((x, 3 + i));
            edges.push((y, 3 + i));
            for j in i + 1..k {
                edges.push((3 + i, 3 + j));
            }
        }
        for (i, set) in checked.a.iter().enumerate() {
            edges.push((a_at(i), y));
            edges.extend(set.iter().map(|e| (a_at(i), u(e))));
        }
        for (j, set) in checked.b.iter().enumerate() {
            edges.extend(set.iter().map(|e| (b_at(j), u(e))));
        }
        let graph = Graph::from_edges(total, &edges)?;

        let mut labels: Vec<String> = ["s", "x", "y"].iter().map(|l| l.to_string()).collect();
        labels.extend(checked.universe.iter().map(|e| format!("u#{e}")));
        labels.extend((0..n).map(|i| format!("a#{i}")));
        labels.extend((0..n).map(|j| format!("b#{j}")));

        Ok(HardnessGraph {
            graph,
            sites: SiteList::new(vec![s], total)?,
            costs: CostVector::uniform(total, Cost::from_units(1))?,
            labels,
            reduced: checked,
            n,
            t,
            threshold: Cost::from_units((n + t + 1) as u64),
            thresholds_valid: t > 2 && 2 * t < n + 4,
            origin,
        })
    }

    /// Vertex of the `i`-th reduced `A`-set.
    pub fn a_vertex(&self, i: usize) -> Vertex {
        3 + self.reduced.universe.len() + i
    }

    /// Vertex of the `j`-th reduced `B`-set.
    pub fn b_vertex(&self, j: usize) -> Vertex {
        3 + self.reduced.universe.len() + self.n + j
    }

    /// Index of the reduced `A`-set at vertex `v`, if `v` is one.
    pub fn reduced_set(&self, v: Vertex) -> Option<usize> {
        let first = self.a_vertex(0);
        (first..first + self.n).contains(&v).then(|| v - first)
    }

    /// Index in the original `A` list of the set that produced vertex `v`.
    /// A hitting set in the reduced instance maps to one in the original.
    pub fn source_set(&self, v: Vertex) -> Option<usize> {
        self.reduced_set(v).and_then(|i| self.origin[i])
    }
}

/// Reduces `inst` and builds its hardness graph.
pub fn build_hardness_graph(inst: &HSInstance) -> Result<HardnessGraph> {
    let (balanced, origin) = balance(inst);
    let halved = reduce_halving(&balanced);
    let reduced = reduce_cardinality(&halved, 2, -1)?;
    let m = origin.len();
    let origin = (0..reduced.a.len()).map(|i| origin[i % m]).collect();
    HardnessGraph::build(reduced, origin)
}

/// `n` sets per list over the universe `0..k`, each element present with
/// probability `density`.
pub fn random_instance<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    density: f64,
    rng: &mut R,
) -> HSInstance {
    let set = |rng: &mut R| -> Vec<Element> {
        (0..k as Element)
            .filter(|_| rng.gen_bool(density))
            .collect()
    };
    let a = (0..n).map(|_| set(rng)).collect();
    let b = (0..n).map(|_| set(rng)).collect();
    HSInstance {
        universe: (0..k as Element).collect(),
        a,
        b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voronoi::{brute_force_loads, witness_load};
    use rand::rngs::SmallRng;
    use rand::SeedableRng;

    fn inst(u: &[Element], a: &[&[Element]], b: &[&[Element]]) -> HSInstance {
        HSInstance::new(
            u.to_vec(),
            a.iter().map(|s| s.to_vec()).collect(),
            b.iter().map(|s| s.to_vec()).collect(),
        )
        .unwrap()
    }

    fn yes(i: &HSInstance) -> bool {
        brute_force_hitting_set(i).is_some()
    }

    #[test]
    fn brute_force_examples() {
        let i = inst(&[1, 2], &[&[1, 2]], &[&[1], &[2]]);
        assert_eq!(brute_force_hitting_set(&i), Some(0));
        assert_eq!(i.a[0], vec![1, 2]);
        assert_eq!(
            brute_force_hitting_set(&inst(&[1, 2], &[&[1]], &[&[2]])),
            None
        );
        assert!(HSInstance::new(vec![1], vec![vec![2]], vec![]).is_err());
    }

    #[test]
    fn halving_example() {
        let i = inst(&[1], &[&[1]], &[&[1]]);
        let h = reduce_halving(&i);
        assert_eq!(h.universe.len(), 4);
        assert_eq!((h.a.len(), h.b.len()), (2, 2));
        assert_eq!(h.a, vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(h.b, vec![vec![0, 2], vec![1, 3]]);
        assert!(yes(&i) && yes(&h));
    }

    fn all_sets(k: usize) -> Vec<Vec<Element>> {
        (0..1u32 << k)
            .map(|mask| (0..k as Element).filter(|e| mask >> e & 1 == 1).collect())
            .collect()
    }

    /// Every instance with lists of length at most two over at most three
    /// elements.
    fn exhaustive() -> Vec<HSInstance> {
        let mut out = Vec::new();
        for k in 0..=3 {
            let sets = all_sets(k);
            let lists: Vec<Vec<Vec<Element>>> = core::iter::once(Vec::new())
                .chain(sets.iter().map(|s| vec![s.clone()]))
                .chain(
                    sets.iter()
                        .flat_map(|x| sets.iter().map(move |y| vec![x.clone(), y.clone()])),
                )
                .collect();
            for a in &lists {
                for b in &lists {
                    out.push(
                        HSInstance::new((0..k as Element).collect(), a.clone(), b.clone()).unwrap(),
                    );
                }
            }
        }
        out
    }

    fn random_instances(rounds: usize, seed: u64) -> Vec<HSInstance> {
        let mut rng = SmallRng::seed_from_u64(seed);
        (0..rounds)
            .map(|_| {
                let n = rng.gen_range(1..=8);
                let k = rng.gen_range(1..=5);
                let d = rng.gen_range(0.1..0.7);
                random_instance(n, k, d, &mut rng)
            })
            .collect()
    }

    #[test]
    fn halving_preserves_answers_and_halves() {
        for i in exhaustive().iter().chain(&random_instances(400, 5)) {
            let h = reduce_halving(i);
            assert_eq!(h.a.len(), 2 * i.a.len());
            assert_eq!(h.b.len(), 2 * i.b.len());
            assert_eq!(h.universe.len(), 2 * i.universe.len() + 2);
            assert_eq!(yes(i), yes(&h), "{i:?}");
            for b in &h.b {
                let met = h.b.iter().filter(|c| intersects(b, c)).count();
                assert_eq!(2 * met, h.b.len());
            }
            HSInstance::new(h.universe.clone(), h.a.clone(), h.b.clone()).unwrap();
        }
    }

    #[test]
    fn cardinality_examples() {
        let i = inst(&[1, 2], &[&[1]], &[]);
        let r = reduce_cardinality(&i, 2, -1).unwrap();
        // Δ = 1 and a shortfall of 1: q = 1, r = 0, |X| = 1, |Y| = 2.
        assert_eq!(r.universe.len(), 5);
        assert_eq!(r.a, vec![vec![1, 4, 5]]);
        assert_eq!(r.universe.len(), 2 * 3 - 1);

        let i = inst(&[1, 2, 3], &[&[1], &[1, 2, 3]], &[&[2]]);
        let r = reduce_cardinality(&i, 2, -1).unwrap();
        assert_eq!(r.universe, vec![1, 2, 3, 4, 5]);
        assert_eq!(r.a, vec![vec![1, 4, 5], vec![1, 2, 3]]);
        assert_eq!(r.b, i.b);

        // Universe too small: filled up to αΔ+β.
        let i = inst(&[0, 1], &[&[0, 1]], &[&[1]]);
        let r = reduce_cardinality(&i, 3, 1).unwrap();
        assert_eq!(r.universe.len(), 7);
        assert_eq!(r.a, vec![vec![0, 1]]);

        assert!(reduce_cardinality(&i, 1, 0).is_err());
        let empty = inst(&[0], &[], &[&[0]]);
        assert_eq!(reduce_cardinality(&empty, 2, -1).unwrap(), empty);
    }

    #[test]
    fn cardinality_preserves_answers_and_sizes() {
        let params = [(2, -1), (2, 0), (2, 3), (3, -2), (3, 5), (4, 1), (5, -7)];
        for (n, i) in exhaustive()
            .iter()
            .chain(&random_instances(300, 6))
            .enumerate()
        {
            let (alpha, beta) = params[n % params.len()];
            let r = reduce_cardinality(i, alpha, beta).unwrap();
            assert_eq!(yes(i), yes(&r), "{i:?} {alpha} {beta}");
            if i.a.is_empty() {
                continue;
            }
            let t = r.a[0].len();
            assert!(r.a.iter().all(|s| s.len() == t));
            // A negative target universe cannot be met; the padding still
            // equalizes the sets.
            let hi = i.a.iter().map(Vec::len).max().unwrap() as i64;
            if alpha * hi + beta >= 0 {
                assert_eq!(r.universe.len() as i64, alpha * t as i64 + beta);
            }
        }
    }

    fn structured() -> HSInstance {
        inst(
            &[0, 1, 2, 3, 4],
            &[&[0, 1, 2], &[2, 3, 4]],
            &[&[0, 4], &[1]],
        )
    }

    #[test]
    fn structured_example() {
        let h = HardnessGraph::from_structured(&structured()).unwrap();
        assert_eq!((h.n, h.t), (2, 3));
        assert_eq!(h.graph.n(), 12);
        assert_eq!(h.threshold, Cost::from_units(6));
        assert!(!h.thresholds_valid);
        assert_eq!(&h.labels[..4], &["s", "x", "y", "u#0"]);
        assert_eq!(h.labels[h.a_vertex(1)], "a#1");
        assert_eq!(h.labels[h.b_vertex(0)], "b#0");
        assert_eq!(h.graph.neighbors(0), &[1, 2]);
        assert!(h.graph.has_edge(h.a_vertex(0), 2));
        assert!(!h.graph.has_edge(h.b_vertex(0), 2));
        assert_eq!(h.source_set(h.a_vertex(1)), Some(1));
        assert_eq!(h.source_set(h.b_vertex(1)), None);

        let bad = inst(&[0, 1, 2, 3], &[&[0, 1]], &[&[0]]);
        assert!(HardnessGraph::from_structured(&bad).is_err());
        let bad = inst(&[0, 1, 2], &[&[0]], &[&[0]]);
        assert!(HardnessGraph::from_structured(&bad).is_err());
        let bad = inst(&[0, 1, 2], &[&[0, 1]], &[&[]]);
        assert!(HardnessGraph::from_structured(&bad).is_err());
    }

    fn units(c: Cost) -> u64 {
        c.raw() / crate::cost::SCALE
    }

    /// Checks the load of every candidate against the case analysis.
    fn check_cases(h: &HardnessGraph) {
        let (n, t) = (h.n as u64, h.t as u64);
        let load = |v| units(witness_load(&h.graph, &h.costs, &h.sites, v).unwrap().load);
        assert_eq!(load(1), n + 2 * t);
        assert_eq!(load(2), 2 * (n + t));
        for u in 3..3 + h.reduced.universe.len() {
            assert!(load(u) >= n + 2 * t - 1);
        }
        for j in 0..h.n {
            assert!(2 * load(h.b_vertex(j)) >= 3 * n + 6);
        }
        for (i, a) in h.reduced.a.iter().enumerate() {
            let k = h.reduced.b.iter().filter(|b| intersects(a, b)).count() as u64;
            let w = witness_load(&h.graph, &h.costs, &h.sites, h.a_vertex(i)).unwrap();
            assert_eq!(units(w.new_site_load), k + t + 1);
            assert_eq!(units(w.site_loads[0].load), 2 * n - k + t + 1);
        }
    }

    #[test]
    fn case_loads() {
        check_cases(&HardnessGraph::from_structured(&structured()).unwrap());
        for i in random_instances(40, 7) {
            check_cases(&build_hardness_graph(&i).unwrap());
        }
    }

    #[test]
    fn threshold_decides_hitting_set() {
        let mut rng = SmallRng::seed_from_u64(8);
        let (mut valid, mut seen_yes, mut seen_no) = (0, 0, 0);
        for _ in 0..300 {
            let n = rng.gen_range(4..=9);
            let k = rng.gen_range(1..=4);
            let d = rng.gen_range(0.15..0.6);
            let i = random_instance(n, k, d, &mut rng);
            let h = build_hardness_graph(&i).unwrap();
            assert_eq!(h.graph.n(), 2 * (h.n + h.t + 1));
            assert_eq!(yes(&i), yes(&h.reduced));
            if !h.thresholds_valid || h.n < 8 {
                continue;
            }
            valid += 1;
            let loads = brute_force_loads(&h.graph, &h.costs, &h.sites).unwrap();
            let (best, best_load) = crate::voronoi::argmin_candidate(&loads).unwrap();
            let below = best_load <= h.threshold;
            assert_eq!(below, yes(&i), "{i:?}");
            if below {
                seen_yes += 1;
                let src = h.source_set(best).expect("optimum is an A-set");
                assert!(i.b.iter().all(|b| intersects(&i.a[src], b)));
            } else {
                seen_no += 1;
            }
        }
        assert!(
            valid >= 100 && seen_yes > 10 && seen_no > 10,
            "{valid} {seen_yes} {seen_no}"
        );
    }

    #[test]
    fn empty_lists() {
        let no = inst(&[0, 1], &[], &[&[0]]);
        let h = build_hardness_graph(&no).unwrap();
        assert!(!yes(&h.reduced));
        assert_eq!(h.source_set(h.a_vertex(0)), None);
        let vacuous = inst(&[0, 1], &[&[]], &[]);
        let h = build_hardness_graph(&vacuous).unwrap();
        assert!(yes(&h.reduced));
        assert_eq!(h.source_set(h.a_vertex(0)), Some(0));
    }

    #[test]
    fn sparse_when_universe_is_logarithmic() {
        let mut rng = SmallRng::seed_from_u64(9);
        // |U| ≤ c0·log2(n) gives m ≤ 2(c0 + 2)·|V|·log2|V| once n dwarfs |U|².
        let c0 = 2;
        for n in [64usize, 128, 256, 512, 1024] {
            let k = c0 * n.ilog2() as usize;
            let i = random_instance(n, k, 0.5, &mut rng);
            let h = build_hardness_graph(&i).unwrap();
            let v = h.graph.n();
            let bound = 2 * (c0 + 2) * v * v.ilog2() as usize;
            assert!(h.graph.m() <= bound, "n={n}: {} > {bound}", h.graph.m());
        }
    }
}
