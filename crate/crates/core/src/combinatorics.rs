//! Compositions, set compositions, partitions, and the two coordinate
//! systems on non-centered Young diagrams.
//!
//! Diagrams are drawn in the Russian convention. Interlacing coordinates
//! `x_1 > x_2 > ... > x_{2m+1}` are the abscissas of the local extrema of the
//! profile, read right to left: odd positions are valleys (minima of the
//! profile), even positions are peaks. Multirectangular coordinates
//! `p_1..p_{m+1}`, `q_1..q_m` are the side lengths of the staircase of
//! rectangles, with `p_{m+1}` the (possibly negative) abscissa of the
//! leftmost valley.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. `()` is the composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An ordered set partition of `{1, ..., n}`. Blocks are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct SetComposition(Vec<Vec<usize>>);

impl SetComposition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetComposition("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > n {
                    return Err(Error::InvalidSetComposition(format!(
                        "element {v} outside 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidSetComposition(format!("element {v} repeated")));
                }
                seen[v] = true;
            }
        }
        Ok(SetComposition(blocks))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    /// Size of the underlying set.
    pub fn size(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `block_of()[v - 1]` is the index of the block containing `v`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (i, block) in self.0.iter().enumerate() {
            for &v in block {
                out[v - 1] = i;
            }
        }
        out
    }
}

impl<'de> Deserialize<'de> for SetComposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        SetComposition::new(blocks).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, block) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

/// Integer partition, rows weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.iter().any(|&r| r == 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(rows));
        }
        Ok(Partition(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(d)?;
        Partition::new(rows).map_err(serde::de::Error::custom)
    }
}

/// Interlacing coordinates `x_1 >= x_2 >= ... >= x_{2m+1}`. Construction
/// accepts weakly decreasing input; [`InterlacingCoords::reduced`] yields the
/// strictly decreasing canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct InterlacingCoords(Vec<i64>);

impl InterlacingCoords {
    pub fn new(xs: Vec<i64>) -> Result<Self> {
        if xs.len() % 2 == 0 {
            return Err(Error::EvenLength(xs.len()));
        }
        if xs.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(xs));
        }
        Ok(InterlacingCoords(xs))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `m` such that there are `2m + 1` coordinates.
    pub fn m(&self) -> usize {
        self.0.len() / 2
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Deletes adjacent equal pairs until the sequence is strictly
    /// decreasing. The resulting profile is unchanged.
    pub fn reduced(&self) -> InterlacingCoords {
        let mut out: Vec<i64> = Vec::with_capacity(self.0.len());
        for &x in &self.0 {
            if out.last() == Some(&x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        InterlacingCoords(out)
    }

    pub fn shifted(&self, c: i64) -> InterlacingCoords {
        InterlacingCoords(
            self.0
                .iter()
                .map(|&x| x.checked_add(c).expect("coordinate overflow"))
                .collect(),
        )
    }
}

impl<'de> Deserialize<'de> for InterlacingCoords {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let xs = Vec::<i64>::deserialize(d)?;
        InterlacingCoords::new(xs).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultirectCoords {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl MultirectCoords {
    pub fn new(p: Vec<i64>, q: Vec<i64>) -> Result<Self> {
        if p.len() != q.len() + 1 {
            return Err(Error::MultirectShape { p: p.len(), q: q.len() });
        }
        Ok(MultirectCoords { p, q })
    }

    pub fn m(&self) -> usize {
        self.q.len()
    }

    /// True when the coordinates describe a genuine diagram: every entry but
    /// `p_{m+1}` is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.p[..self.q.len()].iter().all(|&v| v >= 0) && self.q.iter().all(|&v| v >= 0)
    }
}

/// Kerov interlacing coordinates of the centered diagram of `lambda`.
pub fn interlacing_from_partition(lambda: &Partition) -> InterlacingCoords {
    // Walk the French boundary from the top of the first column to the end
    // of the first row. A down step followed by a right step is a valley of
    // the Russian profile, a right step followed by a down step is a peak.
    // The Russian abscissa of the French point (a, b) is a - b.
    let rows = lambda.rows();
    let ell = rows.len() as i64;
    let mut steps: Vec<bool> = vec![false]; // false = down, true = right
    for i in (0..rows.len()).rev() {
        let next = if i + 1 < rows.len() { rows[i + 1] } else { 0 };
        steps.extend(std::iter::repeat(true).take(rows[i] - next));
        steps.push(false);
    }
    steps.push(true);

    let (mut a, mut b) = (0i64, ell + 1);
    let mut extrema = Vec::new();
    for w in steps.windows(2) {
        if w[0] {
            a += 1;
        } else {
            b -= 1;
        }
        if w[0] != w[1] {
            extrema.push(a - b);
        }
    }
    extrema.reverse();
    InterlacingCoords(extrema)
}

/// The alternating sum `x_1 - x_2 + x_3 - ...`: the horizontal shift of the
/// diagram relative to its centered position.
pub fn center(xs: &InterlacingCoords) -> i64 {
    xs.values()
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
        .try_fold(0i64, |acc, t| acc.checked_add(t))
        .expect("coordinate overflow")
}

/// Reconstructs the diagram from (possibly non-reduced, non-centered)
/// interlacing coordinates. Returns the partition and the shift `c`.
pub fn partition_from_interlacing(xs: &InterlacingCoords) -> (Partition, i64) {
    let reduced = xs.reduced();
    assert!(reduced.is_strict(), "pair deletion must leave a strict sequence");
    let c = center(&reduced);
    let ys = reduced.shifted(-c);
    let ys = ys.values();
    let m = ys.len() / 2;

    // Draw the profile left to right. Starting from the leftmost valley,
    // right steps along rises and down steps along falls of the French
    // boundary; rows are read off the down steps, top row first.
    let mut rows_top_down: Vec<usize> = Vec::new();
    let mut width = 0usize;
    for k in (1..=m).rev() {
        // rise from y_{2k+1} to y_{2k}, then fall from y_{2k} to y_{2k-1}
        let rise = ys[2 * k - 1] - ys[2 * k];
        let fall = ys[2 * k - 2] - ys[2 * k - 1];
        width += rise as usize;
        rows_top_down.extend(std::iter::repeat(width).take(fall as usize));
    }
    debug_assert_eq!(rows_top_down.len() as i64, -ys[2 * m]);
    rows_top_down.reverse();
    (Partition(rows_top_down), c)
}

pub fn multirect_from_interlacing(xs: &InterlacingCoords) -> MultirectCoords {
    let x = xs.values();
    let m = xs.m();
    let sub = |a: i64, b: i64| a.checked_sub(b).expect("coordinate overflow");
    let p = (1..=m)
        .map(|i| sub(x[2 * i - 2], x[2 * i - 1]))
        .chain(std::iter::once(x[2 * m]))
        .collect();
    let q = (1..=m).map(|i| sub(x[2 * i - 1], x[2 * i])).collect();
    MultirectCoords { p, q }
}

pub fn interlacing_from_multirect(pq: &MultirectCoords) -> InterlacingCoords {
    let m = pq.m();
    let mut x = vec![0i64; 2 * m + 1];
    let add = |a: i64, b: i64| a.checked_add(b).expect("coordinate overflow");
    x[2 * m] = pq.p[m];
    // x_{2i} = q_i + x_{2i+1}, x_{2i-1} = p_i + x_{2i}
    for i in (1..=m).rev() {
        x[2 * i - 1] = add(pq.q[i - 1], x[2 * i]);
        x[2 * i - 2] = add(pq.p[i - 1], x[2 * i - 1]);
    }
    InterlacingCoords(x)
}

/// All compositions of `n`, in reverse-lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All set compositions of `{1, ..., n}` in reverse-lexicographic order of
/// their block sequences. `n = 0` yields the single empty set composition.
pub fn set_compositions_of(n: usize) -> Vec<SetComposition> {
    // Each element picks a block index; keep the surjective assignments.
    fn rec(v: usize, n: usize, k: usize, assign: &mut Vec<usize>, out: &mut Vec<SetComposition>) {
        if v == n {
            let mut blocks = vec![Vec::new(); k];
            for (e, &b) in assign.iter().enumerate() {
                blocks[b].push(e + 1);
            }
            if blocks.iter().all(|b| !b.is_empty()) {
                out.push(SetComposition(blocks));
            }
            return;
        }
        for b in 0..k {
            assign.push(b);
            rec(v + 1, n, k, assign, out);
            assign.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetComposition(Vec::new()));
        return out;
    }
    for k in 1..=n {
        rec(0, n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Ordered Bell (Fubini) number, via `a(n) = sum_k C(n,k) a(n-k)`.
pub fn ordered_bell(n: usize) -> u64 {
    let mut a = vec![1u64; n + 1];
    for m in 1..=n {
        let mut binom = 1u64;
        let mut s = 0u64;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u64 / k as u64;
            s += binom * a[m - k];
        }
        a[m] = s;
    }
    a[n]
}

/// All partitions of `n`, rows weakly decreasing.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for r in (1..=n.min(max)).rev() {
            prefix.push(r);
            rec(n - r, r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(v: &[i64]) -> InterlacingCoords {
        InterlacingCoords::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn figure_one_diagram() {
        assert_eq!(interlacing_from_partition(&part(&[4, 4, 2])), xs(&[4, 2, 0, -1, -3]));
        assert_eq!(partition_from_interlacing(&xs(&[4, 2, 0, -1, -3])), (part(&[4, 4, 2]), 0));
    }

    #[test]
    fn small_diagrams() {
        assert_eq!(interlacing_from_partition(&part(&[])), xs(&[0]));
        assert_eq!(interlacing_from_partition(&part(&[1])), xs(&[1, 0, -1]));
        assert_eq!(partition_from_interlacing(&xs(&[1, 0, -1])), (part(&[1]), 0));
    }

    #[test]
    fn center_values() {
        assert_eq!(center(&xs(&[4, 2, 0, -1, -3])), 0);
        assert_eq!(center(&xs(&[0])), 0);
        assert_eq!(center(&xs(&[8, 6, 4, 3, 1])), 4);
    }

    #[test]
    fn shifted_diagram_recovers_shift() {
        assert_eq!(partition_from_interlacing(&xs(&[8, 6, 4, 3, 1])), (part(&[4, 4, 2]), 4));
    }

    #[test]
    fn equal_pair_collapses() {
        let (lambda, c) = partition_from_interlacing(&xs(&[5, 5, 3]));
        assert_eq!(partition_from_interlacing(&xs(&[3])), (lambda.clone(), c));
        assert_eq!(lambda, part(&[]));
        assert_eq!(c, 3);
    }

    #[test]
    fn even_length_rejected() {
        assert_eq!(InterlacingCoords::new(vec![1, 0]), Err(Error::EvenLength(2)));
        assert!(InterlacingCoords::new(vec![0, 1, -1]).is_err());
    }

    #[test]
    fn multirect_examples() {
        let m = multirect_from_interlacing(&xs(&[4, 2, 0, -1, -3]));
        assert_eq!(m, MultirectCoords::new(vec![2, 1, -3], vec![2, 2]).unwrap());
        let m0 = multirect_from_interlacing(&xs(&[0]));
        assert_eq!(m0, MultirectCoords::new(vec![0], vec![]).unwrap());
        let m1 = multirect_from_interlacing(&xs(&[8, 6, 4, 3, 1]));
        assert_eq!(m1, MultirectCoords::new(vec![2, 1, 1], vec![2, 2]).unwrap());
        for (pq, x) in [(m, &[4, 2, 0, -1, -3][..]), (m0, &[0]), (m1, &[8, 6, 4, 3, 1])] {
            assert_eq!(interlacing_from_multirect(&pq).values(), x);
        }
    }

    #[test]
    fn multirect_shape_checked() {
        assert!(MultirectCoords::new(vec![1], vec![1]).is_err());
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        let two: Vec<Vec<usize>> = compositions_of(2).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(two, vec![vec![2], vec![1, 1]]);
        assert_eq!(compositions_of(4).len(), 8);
    }

    #[test]
    fn set_composition_enumeration() {
        assert_eq!(set_compositions_of(1), vec![SetComposition::new(vec![vec![1]]).unwrap()]);
        let two = set_compositions_of(2);
        assert_eq!(two.len(), 3);
        assert!(two.contains(&SetComposition::new(vec![vec![2], vec![1]]).unwrap()));
        assert_eq!(set_compositions_of(4).len(), 75);
        assert_eq!(ordered_bell(4), 75);
    }

    #[test]
    fn set_composition_validation() {
        assert!(SetComposition::new(vec![vec![1], vec![]]).is_err());
        assert!(SetComposition::new(vec![vec![1], vec![1]]).is_err());
        assert!(SetComposition::new(vec![vec![3], vec![1]]).is_err());
        let k = SetComposition::new(vec![vec![3, 2], vec![1]]).unwrap();
        assert_eq!(k.blocks()[0], vec![2, 3]);
        assert_eq!(k.block_of(), vec![1, 0, 0]);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(partitions_of(4).len(), 5);
    }
}
