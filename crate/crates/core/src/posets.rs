//! Ranked labeled posets and their order-condition maps.
//!
//! Elements are labeled `1..=n`. The height of an element is the length of
//! the longest chain below it; a poset is ranked when every cover rises by
//! exactly one level. An order map `r` must satisfy `r(u) <= r(v)` for each
//! cover `u ⋖ v`, strictly when `u` has odd height. Checking covers suffices:
//! along a chain the weak and strict conditions compose.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::SetComposition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankedPoset {
    n: usize,
    covers: BTreeSet<(usize, usize)>,
    heights: Vec<usize>,
    lower: Vec<Vec<usize>>,
}

/// JSON shape `{"n": 6, "covers": [[2, 1], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
}

impl RankedPoset {
    /// Validates cover relations, computes heights and checks rankedness.
    pub fn new(n: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let covers: BTreeSet<(usize, usize)> = covers.into_iter().collect();
        for &(u, v) in &covers {
            for label in [u, v] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if u == v {
                return Err(Error::Cycle);
            }
        }
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(u, v) in &covers {
            lower[v - 1].push(u - 1);
            upper[u - 1].push(v - 1);
        }

        // Kahn's algorithm; heights by longest path.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut heights = vec![0usize; n];
        let mut seen = 0;
        while let Some(u) = queue.pop() {
            seen += 1;
            for &v in &upper[u] {
                heights[v] = heights[v].max(heights[u] + 1);
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push(v);
                }
            }
        }
        if seen < n {
            return Err(Error::Cycle);
        }
        for &(u, v) in &covers {
            if heights[v - 1] != heights[u - 1] + 1 {
                return Err(Error::NotRanked(u, v));
            }
        }
        Ok(RankedPoset { n, covers, heights, lower })
    }

    pub fn from_spec(spec: &PosetSpec) -> Result<Self> {
        RankedPoset::new(spec.n, spec.covers.iter().copied())
    }

    pub fn to_spec(&self) -> PosetSpec {
        PosetSpec { n: self.n, covers: self.covers.iter().copied().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &BTreeSet<(usize, usize)> {
        &self.covers
    }

    /// Height of the element labeled `v` (1-based).
    pub fn height(&self, v: usize) -> usize {
        self.heights[v - 1]
    }

    /// Heights indexed by `label - 1`.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn is_odd(&self, v: usize) -> bool {
        self.heights[v - 1] % 2 == 1
    }

    /// Elements of even height.
    pub fn v0(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| !self.is_odd(v)).collect()
    }

    /// Elements of odd height.
    pub fn v1(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_odd(v)).collect()
    }

    /// Lower covers of `v`, as 1-based labels.
    pub fn lower_covers(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.lower[v - 1].iter().map(|&u| u + 1)
    }

    /// `less[u-1][v-1]` is true when `u < v` in the poset.
    pub fn strict_order(&self) -> Vec<Vec<bool>> {
        let mut less = vec![vec![false; self.n]; self.n];
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| self.heights[v]);
        for &v in &order {
            for &u in &self.lower[v] {
                less[u][v] = true;
                for w in 0..self.n {
                    if less[w][u] {
                        less[w][v] = true;
                    }
                }
            }
        }
        less
    }

    /// Whether `r` (indexed by `label - 1`) satisfies the order condition.
    pub fn satisfies_order_condition(&self, r: &[usize]) -> bool {
        self.covers.iter().all(|&(u, v)| {
            let (ru, rv) = (r[u - 1], r[v - 1]);
            if self.is_odd(u) {
                ru < rv
            } else {
                ru <= rv
            }
        })
    }

    /// All order maps with values in `1..=max`.
    pub fn order_maps(&self, max: usize) -> OrderMaps<'_> {
        self.order_maps_bounded(ValueBounds::uniform(max))
    }

    pub fn order_maps_bounded(&self, bounds: ValueBounds) -> OrderMaps<'_> {
        OrderMaps::new(self, bounds)
    }
}

/// Upper bounds on the values of order maps, separately for even- and
/// odd-height elements. Level `m` truncation of the two-alphabet series uses
/// `even_max = m + 1`, `odd_max = m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueBounds {
    pub even_max: usize,
    pub odd_max: usize,
}

impl ValueBounds {
    pub fn uniform(max: usize) -> Self {
        ValueBounds { even_max: max, odd_max: max }
    }

    pub fn level(m: usize) -> Self {
        ValueBounds { even_max: m + 1, odd_max: m }
    }
}

/// Backtracking enumeration of order maps along a topological order
/// (height, then label). Yields `r` indexed by `label - 1`.
pub struct OrderMaps<'a> {
    poset: &'a RankedPoset,
    bounds: ValueBounds,
    topo: Vec<usize>,
    r: Vec<usize>,
    depth: usize,
    started: bool,
    done: bool,
}

impl<'a> OrderMaps<'a> {
    fn new(poset: &'a RankedPoset, bounds: ValueBounds) -> Self {
        let mut topo: Vec<usize> = (0..poset.n).collect();
        topo.sort_by_key(|&v| (poset.heights[v], v));
        OrderMaps {
            poset,
            bounds,
            topo,
            r: vec![0; poset.n],
            depth: 0,
            started: false,
            done: false,
        }
    }

    fn lower_bound(&self, v: usize) -> usize {
        self.poset.lower[v]
            .iter()
            .map(|&u| self.r[u] + usize::from(self.poset.heights[u] % 2 == 1))
            .max()
            .unwrap_or(1)
            .max(1)
    }

    fn upper_bound(&self, v: usize) -> usize {
        if self.poset.heights[v] % 2 == 1 {
            self.bounds.odd_max
        } else {
            self.bounds.even_max
        }
    }

    /// Fills positions `depth..` with their smallest admissible values,
    /// backtracking as needed. Returns false when exhausted.
    fn descend(&mut self) -> bool {
        let n = self.topo.len();
        while self.depth < n {
            let v = self.topo[self.depth];
            let lo = self.lower_bound(v);
            if lo <= self.upper_bound(v) {
                self.r[v] = lo;
                self.depth += 1;
            } else if !self.advance() {
                return false;
            }
        }
        true
    }

    /// Increments the deepest position that can still grow and truncates
    /// below it. Returns false when no position can grow.
    fn advance(&mut self) -> bool {
        while self.depth > 0 {
            let v = self.topo[self.depth - 1];
            if self.r[v] < self.upper_bound(v) {
                self.r[v] += 1;
                return true;
            }
            self.depth -= 1;
        }
        false
    }
}

impl Iterator for OrderMaps<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.descend()
        } else {
            self.advance() && self.descend()
        };
        if ok {
            Some(self.r.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// The Luoto poset of `K = (K_0, ..., K_{l-1})`: covers `K_i x K_{i+1}`,
/// elements of `K_i` at height `i`.
pub fn poset_from_set_composition(k: &SetComposition) -> RankedPoset {
    let blocks = k.blocks();
    let covers = blocks.windows(2).flat_map(|w| {
        let (lo, hi) = (&w[0], &w[1]);
        lo.iter().flat_map(move |&u| hi.iter().map(move |&v| (u, v)))
    });
    RankedPoset::new(k.size(), covers).expect("Luoto posets are ranked")
}

/// Disjoint union, with the labels of `right` shifted past those of `left`.
pub fn disjoint_union_shifted(left: &RankedPoset, right: &RankedPoset) -> RankedPoset {
    let shift = left.n;
    let covers = left
        .covers
        .iter()
        .copied()
        .chain(right.covers.iter().map(|&(u, v)| (u + shift, v + shift)));
    RankedPoset::new(left.n + right.n, covers).expect("union of ranked posets is ranked")
}

pub const MAX_ENUMERATED_SIZE: usize = 6;

/// Every labeled ranked poset on `{1..n}`, `1 <= n <= 6`.
///
/// Built from level functions: each element at level `h > 0` picks a
/// nonempty set of lower covers at level `h - 1`. Every ranked poset arises
/// exactly once this way, since the covers determine the heights.
pub fn enumerate_ranked_posets(n: usize) -> Result<Vec<RankedPoset>> {
    if n == 0 || n > MAX_ENUMERATED_SIZE {
        return Err(Error::OutOfRange { what: "poset size", value: n });
    }
    let mut out = Vec::new();
    let mut levels = vec![0usize; n];
    enumerate_levels(n, 0, &mut levels, &mut out);
    Ok(out)
}

fn enumerate_levels(n: usize, v: usize, levels: &mut Vec<usize>, out: &mut Vec<RankedPoset>) {
    if v == n {
        let top = *levels.iter().max().unwrap_or(&0);
        if (0..=top).all(|h| levels.contains(&h)) {
            enumerate_covers(levels, out);
        }
        return;
    }
    for h in 0..n {
        levels[v] = h;
        enumerate_levels(n, v + 1, levels, out);
    }
}

fn enumerate_covers(levels: &[usize], out: &mut Vec<RankedPoset>) {
    let n = levels.len();
    // For each element above level 0, the candidate lower covers.
    let choices: Vec<(usize, Vec<usize>)> = (0..n)
        .filter(|&v| levels[v] > 0)
        .map(|v| (v, (0..n).filter(|&u| levels[u] + 1 == levels[v]).collect()))
        .collect();
    let mut masks = vec![1usize; choices.len()];
    loop {
        let covers = choices.iter().zip(&masks).flat_map(|((v, cands), &mask)| {
            cands
                .iter()
                .enumerate()
                .filter(move |(j, _)| mask >> j & 1 == 1)
                .map(move |(_, &u)| (u + 1, v + 1))
        });
        out.push(RankedPoset::new(n, covers).expect("level construction is ranked"));
        // odometer over nonempty subsets
        let mut i = 0;
        loop {
            if i == masks.len() {
                return;
            }
            masks[i] += 1;
            if masks[i] < (1 << choices[i].1.len()) {
                break;
            }
            masks[i] = 1;
            i += 1;
        }
    }
}

/// A random labeled ranked poset on `n` elements.
pub fn random_ranked_poset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> RankedPoset {
    assert!(n >= 1, "posets need at least one element");
    let top = rng.gen_range(0..n);
    let mut labels: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        labels.swap(i, rng.gen_range(0..=i));
    }
    let mut levels = vec![0usize; n];
    for (k, &v) in labels.iter().enumerate() {
        levels[v] = if k <= top { k } else { rng.gen_range(0..=top) };
    }
    let mut covers = Vec::new();
    for v in 0..n {
        if levels[v] == 0 {
            continue;
        }
        let cands: Vec<usize> = (0..n).filter(|&u| levels[u] + 1 == levels[v]).collect();
        let mask = rng.gen_range(1..(1usize << cands.len()));
        covers.extend(
            cands
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &u)| (u + 1, v + 1)),
        );
    }
    RankedPoset::new(n, covers).expect("level construction is ranked")
}

/// The labeled poset drawn on the right of the running example: covers
/// `{2,3} -> {1,5} -> {6} -> {4}`.
pub fn example_poset() -> RankedPoset {
    RankedPoset::new(6, [(2, 1), (2, 5), (3, 1), (3, 5), (1, 6), (5, 6), (6, 4)])
        .expect("example poset is ranked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn chain(n: usize) -> RankedPoset {
        RankedPoset::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn example_heights() {
        let p = example_poset();
        assert_eq!(p.heights(), &[1, 0, 0, 3, 1, 2]);
        assert_eq!(p.v0(), vec![2, 3, 6]);
        assert_eq!(p.v1(), vec![1, 4, 5]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(RankedPoset::new(1, []).unwrap().heights(), &[0]);
        assert_eq!(RankedPoset::new(2, [(1, 2), (2, 1)]), Err(Error::Cycle));
        assert_eq!(
            RankedPoset::new(3, [(1, 2), (2, 3), (1, 3)]),
            Err(Error::NotRanked(1, 3))
        );
        assert!(matches!(RankedPoset::new(2, [(1, 3)]), Err(Error::LabelOutOfRange { .. })));
    }

    #[test]
    fn order_maps_small() {
        let single = RankedPoset::new(1, []).unwrap();
        assert_eq!(single.order_maps(3).collect::<Vec<_>>(), vec![vec![1], vec![2], vec![3]]);
        let maps: Vec<_> = chain(2).order_maps(2).collect();
        assert_eq!(maps, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        let maps: Vec<_> = chain(3).order_maps(2).collect();
        assert_eq!(maps, vec![vec![1, 1, 2]]);
        assert_eq!(single.order_maps(0).count(), 0);
    }

    #[test]
    fn luoto_poset_of_example() {
        let k = SetComposition::new(vec![vec![2, 3], vec![1, 5], vec![6], vec![4]]).unwrap();
        assert_eq!(poset_from_set_composition(&k), example_poset());
        let single = SetComposition::new(vec![vec![1]]).unwrap();
        assert_eq!(poset_from_set_composition(&single).size(), 1);
        let two = SetComposition::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(poset_from_set_composition(&two), chain(2));
    }

    #[test]
    fn unions() {
        let single = RankedPoset::new(1, []).unwrap();
        let anti = disjoint_union_shifted(&single, &single);
        assert_eq!(anti.covers().len(), 0);
        assert_eq!(anti.heights(), &[0, 0]);
        let u = disjoint_union_shifted(&example_poset(), &single);
        assert_eq!(u.size(), 7);
        assert_eq!(u.height(7), 0);
        assert_eq!(u.v0(), vec![2, 3, 6, 7]);
    }

    #[test]
    fn enumeration_small_counts() {
        assert_eq!(enumerate_ranked_posets(1).unwrap().len(), 1);
        let two = enumerate_ranked_posets(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(enumerate_ranked_posets(0).is_err());
        assert!(enumerate_ranked_posets(7).is_err());
    }

    #[test]
    fn random_posets_are_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..20 {
                let p = random_ranked_poset(n, &mut rng);
                assert_eq!(p.size(), n);
                assert_eq!(RankedPoset::new(n, p.covers().iter().copied()).unwrap(), p);
            }
        }
    }
}
