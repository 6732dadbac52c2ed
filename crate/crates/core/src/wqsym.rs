//! The noncommutative layer: `bold F_P` in letters `a_i`, `bold N_P` in
//! letters `b_i`/`d_i`, packed-word expansions, leading evaluations, and
//! expansions in the Luoto basis `bold F_{P_K}`.
//!
//! A degree-`n` word quasi-symmetric function is represented by its
//! truncation to `n` letters, which is faithful since a packed word of
//! length `n` uses at most `n` distinct values.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;

use crate::algebra::linalg;
use crate::algebra::{CPoly, Family, NCPoly, VarName, Word};
use crate::combinatorics::{set_compositions_of, SetComposition};
use crate::error::{Error, Result};
use crate::posets::{disjoint_union_shifted, poset_from_set_composition, RankedPoset, ValueBounds};

/// A word over `{1..k}` using every value of `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedWord(Vec<usize>);

impl PackedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if pack(&letters) != letters {
            return Err(Error::Parse(format!("{letters:?} is not a packed word")));
        }
        Ok(PackedWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct values.
    pub fn max_value(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Order-preserving relabeling of the values onto `1..=k`.
pub fn pack(word: &[usize]) -> Vec<usize> {
    let values: BTreeSet<usize> = word.iter().copied().collect();
    let rank: BTreeMap<usize, usize> = values.into_iter().enumerate().map(|(i, v)| (v, i + 1)).collect();
    word.iter().map(|v| rank[v]).collect()
}

/// All packed words of length `n`, sorted.
pub fn packed_words_of(n: usize) -> Vec<PackedWord> {
    // A packed word is the block-index sequence of a set composition.
    let mut out: Vec<PackedWord> = set_compositions_of(n)
        .iter()
        .map(|k| PackedWord(k.block_of().into_iter().map(|b| b + 1).collect()))
        .collect();
    out.sort();
    out
}

/// Element of WQSym in the packed-word monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WQElem {
    coeffs: BTreeMap<PackedWord, i64>,
}

impl WQElem {
    pub fn zero() -> Self {
        WQElem::default()
    }

    pub fn add_term(&mut self, u: PackedWord, c: i64) {
        if c == 0 {
            return;
        }
        let sum = self.coefficient(&u).checked_add(c).expect("coefficient overflow");
        if sum == 0 {
            self.coeffs.remove(&u);
        } else {
            self.coeffs.insert(u, sum);
        }
    }

    pub fn coefficient(&self, u: &PackedWord) -> i64 {
        self.coeffs.get(u).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PackedWord, i64)> {
        self.coeffs.iter().map(|(u, &c)| (u, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Common length of the packed words, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut lens = self.coeffs.keys().map(PackedWord::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }
}

/// Lexicographically compared letter counts `(#b_1, #d_1, #b_2, #d_2, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvaluationVector(pub Vec<usize>);

impl EvaluationVector {
    pub fn of_word(w: &Word) -> Result<Self> {
        let mut counts = Vec::new();
        for v in w.letters() {
            let slot = match v.family {
                Family::B => 2 * (v.index - 1),
                Family::D => 2 * (v.index - 1) + 1,
                _ => return Err(Error::MixedFamilies(format!("letter {v} in a b/d word"))),
            };
            if counts.len() <= slot {
                counts.resize(slot + 1, 0);
            }
            counts[slot] += 1;
        }
        Ok(EvaluationVector(counts))
    }
}

/// `bold F_P` over the letters `a_1..a_k`: the word at an order map `r` is
/// `a_{r(1)} ... a_{r(n)}`, positions following element labels.
pub fn bold_f_p(p: &RankedPoset, k: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for r in p.order_maps(k) {
        out.add_term(Word(r.iter().map(|&v| VarName::a(v)).collect()), 1);
    }
    out
}

/// `bold N_P` at level `m`: position `v` carries `b_{r(v)}` for even and
/// `d_{r(v)}` for odd height, with the same truncation as `N_P`.
pub fn bold_n_p(p: &RankedPoset, m: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for r in p.order_maps_bounded(ValueBounds::level(m)) {
        let word = r
            .iter()
            .enumerate()
            .map(|(k, &val)| if p.is_odd(k + 1) { VarName::d(val) } else { VarName::b(val) })
            .collect();
        out.add_term(Word(word), 1);
    }
    out
}

/// Reads a polynomial in `a_1..a_k` in the packed-word basis, verifying
/// that each word's coefficient depends only on its packing.
pub fn wq_expand(f: &NCPoly, k: usize) -> Result<WQElem> {
    let mut out = WQElem::zero();
    let mut seen: BTreeMap<PackedWord, usize> = BTreeMap::new();
    let mut words: Vec<(Vec<usize>, i64)> = Vec::with_capacity(f.len());
    for (w, c) in f.terms() {
        let mut values = Vec::with_capacity(w.len());
        for v in w.letters() {
            if v.family != Family::A {
                return Err(Error::MixedFamilies(format!("letter {v} where a_i expected")));
            }
            if v.index > k {
                return Err(Error::NotWordQuasiSymmetric(format!("letter {v} beyond a_{k}")));
            }
            values.push(v.index);
        }
        if values.len() > k {
            return Err(Error::NotWordQuasiSymmetric(format!(
                "word of length {} needs more than {k} letters to be faithful",
                values.len()
            )));
        }
        words.push((values, c));
    }
    // Coefficients are read on the packed words themselves.
    for (values, c) in &words {
        if pack(values) == *values {
            out.add_term(PackedWord(values.clone()), *c);
        }
    }
    for (values, c) in &words {
        let u = PackedWord(pack(values));
        let expected = out.coefficient(&u);
        if expected != *c {
            return Err(Error::NotWordQuasiSymmetric(format!(
                "word {values:?} has coefficient {c} but its packing {u} has {expected}"
            )));
        }
        *seen.entry(u).or_insert(0) += 1;
    }
    // Every word with a given packing must be present: C(k, #values) of them.
    for (u, _) in out.terms() {
        let needed = binomial(k, u.max_value());
        let have = seen.get(u).copied().unwrap_or(0) as u64;
        if have != needed {
            return Err(Error::NotWordQuasiSymmetric(format!(
                "packing {u} occurs in {have} words, expected {needed}"
            )));
        }
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Finds the monomial of lexicographically largest evaluation and decodes
/// the set composition it encodes: `K_{2j}` are the positions of
/// `b_{j+1}`, `K_{2j+1}` the positions of `d_{j+1}`.
pub fn leading_evaluation(f: &NCPoly) -> Result<(EvaluationVector, SetComposition)> {
    let mut best: Option<(EvaluationVector, &Word)> = None;
    let mut tied = false;
    for (w, _) in f.terms() {
        let ev = EvaluationVector::of_word(w)?;
        match &best {
            Some((b, _)) if ev < *b => {}
            Some((b, _)) if ev == *b => tied = true,
            _ => {
                best = Some((ev, w));
                tied = false;
            }
        }
    }
    let (ev, word) = best.ok_or(Error::ZeroPolynomial)?;
    if tied {
        return Err(Error::LeadingEvaluation(format!("several monomials share evaluation {:?}", ev.0)));
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); ev.0.len()];
    for (pos, v) in word.letters().iter().enumerate() {
        let slot = match v.family {
            Family::B => 2 * (v.index - 1),
            _ => 2 * (v.index - 1) + 1,
        };
        blocks[slot].push(pos + 1);
    }
    if blocks.iter().any(Vec::is_empty) {
        return Err(Error::LeadingEvaluation(format!("evaluation {:?} skips a letter", ev.0)));
    }
    let k = SetComposition::new(blocks).map_err(|e| Error::LeadingEvaluation(e.to_string()))?;
    Ok((ev, k))
}

/// Each word becomes the product of its letters, with `a -> x`, `b -> p`,
/// `d -> q`, so `bold F_P -> F_P` and `bold N_P -> N_P`.
pub fn commutative_projection(f: &NCPoly) -> CPoly {
    f.abelianize().rename(|v| match v.family {
        Family::A => VarName::x(v.index),
        Family::B => VarName::p(v.index),
        Family::D => VarName::q(v.index),
        _ => v,
    })
}

/// Images of `a_1..a_{2m+1}` as sums of `b` and `d` letters:
/// `a_{2i+1} = d_{i+1} + .. + d_m + b_{i+1} + .. + b_{m+1}` and
/// `a_{2i} = d_i + .. + d_m + b_{i+1} + .. + b_{m+1}`.
pub fn a_to_bd_assignment(m: usize) -> BTreeMap<VarName, NCPoly> {
    let image = |d_from: usize, b_from: usize| {
        NCPoly::sum_of_letters(
            (d_from..=m)
                .map(VarName::d)
                .chain((b_from..=m + 1).map(VarName::b)),
        )
    };
    let mut out = BTreeMap::new();
    for i in 0..=m {
        out.insert(VarName::a(2 * i + 1), image(i + 1, i + 1));
        if i >= 1 {
            out.insert(VarName::a(2 * i), image(i, i + 1));
        }
    }
    out
}

/// Letterwise substitution `a -> (b, d)` at level `m`. Only the change of
/// letters is performed; no evaluation on a signed alphabet is implied.
pub fn substitute_a_to_bd(f: &NCPoly, m: usize) -> Result<NCPoly> {
    f.letter_substitute(&a_to_bd_assignment(m))
}

/// The Luoto basis in degree `n`: `wq_expand(bold F_{P_K})` for every set
/// composition `K` of `{1..n}`, ordered by the leading evaluation of
/// `bold N_{P_K}` (largest first).
#[derive(Debug, Clone)]
pub struct LuotoBasis {
    n: usize,
    index: Vec<SetComposition>,
    rows: Vec<PackedWord>,
    /// `matrix[row][col]`: coefficient of packed word `rows[row]` in the
    /// basis element `index[col]`.
    matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<BigRational>>,
}

impl LuotoBasis {
    pub fn new(n: usize) -> Self {
        let mut keyed: Vec<(EvaluationVector, SetComposition)> = set_compositions_of(n)
            .into_iter()
            .map(|k| {
                let (ev, decoded) = leading_evaluation(&bold_n_p(&poset_from_set_composition(&k), n))
                    .expect("Luoto posets have a unique leading monomial");
                debug_assert_eq!(decoded, k);
                (ev, k)
            })
            .collect();
        keyed.sort_by(|a, b| b.cmp(a));
        let index: Vec<SetComposition> = keyed.into_iter().map(|(_, k)| k).collect();
        let rows = packed_words_of(n);
        let columns: Vec<WQElem> = index
            .iter()
            .map(|k| {
                wq_expand(&bold_f_p(&poset_from_set_composition(k), n), n)
                    .expect("bold F_P is word quasi-symmetric")
            })
            .collect();
        let matrix: Vec<Vec<i64>> = rows
            .iter()
            .map(|u| columns.iter().map(|col| col.coefficient(u)).collect())
            .collect();
        let inverse = linalg::inverse(&matrix).expect("the Luoto matrix is invertible");
        LuotoBasis { n, index, rows, matrix, inverse }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Set compositions in column order.
    pub fn index(&self) -> &[SetComposition] {
        &self.index
    }

    pub fn packed_words(&self) -> &[PackedWord] {
        &self.rows
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    /// Solves `f = sum_K c_K bold F_{P_K}` exactly; coefficients must be
    /// integers. Zero coefficients are omitted.
    pub fn expand(&self, f: &WQElem) -> Result<BTreeMap<SetComposition, i64>> {
        for (u, _) in f.terms() {
            if u.len() != self.n {
                return Err(Error::Parse(format!("packed word {u} is not of degree {}", self.n)));
            }
        }
        let rhs: Vec<BigRational> =
            self.rows.iter().map(|u| BigRational::from_integer(f.coefficient(u).into())).collect();
        let mut out = BTreeMap::new();
        for (k, row) in self.index.iter().zip(&self.inverse) {
            let q: BigRational = row.iter().zip(&rhs).map(|(a, b)| a * b).sum();
            let c = linalg::to_integer(&q)?;
            if c != 0 {
                out.insert(k.clone(), c);
            }
        }
        Ok(out)
    }

    /// Structure constants `bold F_{P_K} . bold F_{P_K'}` for `|K| + |K'|`
    /// equal to this basis' degree.
    pub fn product(&self, k1: &SetComposition, k2: &SetComposition) -> Result<BTreeMap<SetComposition, i64>> {
        let union = disjoint_union_shifted(&poset_from_set_composition(k1), &poset_from_set_composition(k2));
        if union.size() != self.n {
            return Err(Error::OutOfRange { what: "product degree", value: union.size() });
        }
        if self.n == 0 {
            return Ok(BTreeMap::from([(SetComposition::default(), 1)]));
        }
        self.expand(&wq_expand(&bold_f_p(&union, self.n), self.n)?)
    }
}

/// Expansion of a degree-`n` element in the Luoto basis.
///
/// First solves on the columns `K` whose packed words all lie in the
/// support of `f` (where every summand of a positive expansion lives);
/// a consistent solution there is the expansion, by uniqueness. Otherwise
/// falls back to the full `LuotoBasis` system.
pub fn luoto_expand(f: &WQElem, n: usize) -> Result<BTreeMap<SetComposition, i64>> {
    if let Some(c) = restricted_expand(f, n)? {
        return Ok(c);
    }
    LuotoBasis::new(n).expand(f)
}

/// The packed words `u` with `u` an order map of `p`.
fn packed_order_maps(p: &RankedPoset, words: &[PackedWord]) -> Vec<PackedWord> {
    words.iter().filter(|u| p.satisfies_order_condition(u.letters())).cloned().collect()
}

fn restricted_expand(f: &WQElem, n: usize) -> Result<Option<BTreeMap<SetComposition, i64>>> {
    if f.degree().is_some_and(|d| d != n) {
        return Err(Error::Parse(format!("element is not of degree {n}")));
    }
    if f.is_zero() {
        return Ok(Some(BTreeMap::new()));
    }
    let support: BTreeSet<&PackedWord> = f.terms().map(|(u, _)| u).collect();
    let all_words = packed_words_of(n);
    // Permutation words are the cheapest necessary test.
    let permutations: Vec<PackedWord> = all_words.iter().filter(|u| u.max_value() == n).cloned().collect();
    let mut columns: Vec<(SetComposition, Vec<PackedWord>)> = Vec::new();
    for k in set_compositions_of(n) {
        let pk = poset_from_set_composition(&k);
        if !packed_order_maps(&pk, &permutations).iter().all(|u| support.contains(u)) {
            continue;
        }
        let words = packed_order_maps(&pk, &all_words);
        if words.iter().all(|u| support.contains(u)) {
            columns.push((k, words));
        }
    }
    let rows: Vec<&PackedWord> = support.into_iter().collect();
    let a: Vec<Vec<i64>> = rows
        .iter()
        .map(|u| columns.iter().map(|(_, words)| i64::from(words.binary_search(u).is_ok())).collect())
        .collect();
    let b: Vec<i64> = rows.iter().map(|u| f.coefficient(u)).collect();
    let Some(sol) = linalg::solve_overdetermined(&a, &b)? else {
        return Ok(None);
    };
    let mut out = BTreeMap::new();
    for ((k, _), q) in columns.into_iter().zip(&sol) {
        let c = linalg::to_integer(q)?;
        if c != 0 {
            out.insert(k, c);
        }
    }
    Ok(Some(out))
}

/// Expansion of `bold F_P` in the Luoto basis through the linear solve.
pub fn luoto_expand_poset(p: &RankedPoset) -> Result<BTreeMap<SetComposition, i64>> {
    let n = p.size();
    luoto_expand(&wq_expand(&bold_f_p(p, n), n)?, n)
}

/// Relation between two elements in a mixed weak/strict constraint system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Rel {
    None,
    Weak,
    Strict,
}

/// Transitive closure of `r(u) <= r(v)` / `r(u) < r(v)` edges; `None` when
/// a cycle exists (every cycle here contains a strict edge, so it is
/// unsatisfiable).
fn closure(n: usize, edges: &[(usize, usize, Rel)]) -> Option<Vec<Vec<Rel>>> {
    let mut c = vec![vec![Rel::None; n]; n];
    for &(u, v, rel) in edges {
        c[u][v] = c[u][v].max(rel);
    }
    for k in 0..n {
        for i in 0..n {
            if c[i][k] == Rel::None {
                continue;
            }
            for j in 0..n {
                if c[k][j] != Rel::None {
                    let r = c[i][k].max(c[k][j]);
                    c[i][j] = c[i][j].max(r);
                }
            }
        }
    }
    if (0..n).any(|i| c[i][i] != Rel::None) {
        return None;
    }
    Some(c)
}

/// Positive expansion of `bold F_P` by splitting order maps according to
/// which incomparable pairs `(x, y)` in `V_0 x V_1` satisfy `r(x) <= r(y)`
/// (the others satisfy `r(y) < r(x)`). Each satisfiable choice of pairs
/// yields the order-map set of some `P_K`; coefficients count choices.
pub fn splitting_expand(p: &RankedPoset) -> Result<BTreeMap<SetComposition, i64>> {
    let n = p.size();
    let less = p.strict_order();
    let rel_from = |u: usize| if p.is_odd(u + 1) { Rel::Strict } else { Rel::Weak };
    let base: Vec<(usize, usize, Rel)> = p.covers().iter().map(|&(u, v)| (u - 1, v - 1, rel_from(u - 1))).collect();
    let pairs: Vec<(usize, usize)> = p
        .v0()
        .into_iter()
        .flat_map(|x| p.v1().into_iter().map(move |y| (x - 1, y - 1)))
        .filter(|&(x, y)| !less[x][y] && !less[y][x])
        .collect();
    if pairs.len() >= usize::BITS as usize {
        return Err(Error::OutOfRange { what: "incomparable pair count", value: pairs.len() });
    }

    let mut out: BTreeMap<SetComposition, i64> = BTreeMap::new();
    for mask in 0usize..(1 << pairs.len()) {
        let mut edges = base.clone();
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                edges.push((x, y, Rel::Weak));
            } else {
                edges.push((y, x, Rel::Strict));
            }
        }
        let Some(c) = closure(n, &edges) else { continue };

        // Levels by longest chain in the closure.
        let mut level = vec![0usize; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (0..n).filter(|&u| c[u][v] != Rel::None).count());
        for &v in &order {
            level[v] = (0..n).filter(|&u| c[u][v] != Rel::None).map(|u| level[u] + 1).max().unwrap_or(0);
        }
        let top = level.iter().copied().max().unwrap_or(0);
        let blocks: Vec<Vec<usize>> = (0..=top)
            .map(|h| (0..n).filter(|&v| level[v] == h).map(|v| v + 1).collect())
            .collect();
        let k = SetComposition::new(blocks).map_err(|e| Error::SplittingShape(e.to_string()))?;

        let luoto = poset_from_set_composition(&k);
        for v in 1..=n {
            if luoto.is_odd(v) != p.is_odd(v) {
                return Err(Error::SplittingShape(format!("element {v} changes parity in {k}")));
            }
        }
        let luoto_edges: Vec<(usize, usize, Rel)> =
            luoto.covers().iter().map(|&(u, v)| (u - 1, v - 1, rel_from(u - 1))).collect();
        let luoto_closure = closure(n, &luoto_edges).expect("Luoto posets are acyclic");
        if luoto_closure != c {
            return Err(Error::SplittingShape(format!("constraints differ from those of {k}")));
        }
        *out.entry(k).or_insert(0) += 1;
    }
    Ok(out)
}

/// Structure constants: `bold F_{P_K} . bold F_{P_K'}` in the Luoto basis,
/// computed as the expansion of `bold F` of the shifted disjoint union.
pub fn luoto_product(k1: &SetComposition, k2: &SetComposition) -> Result<BTreeMap<SetComposition, i64>> {
    let union = disjoint_union_shifted(&poset_from_set_composition(k1), &poset_from_set_composition(k2));
    if union.size() == 0 {
        return Ok(BTreeMap::from([(SetComposition::default(), 1)]));
    }
    luoto_expand_poset(&union)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::example_poset;

    fn sc(blocks: &[&[usize]]) -> SetComposition {
        SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn aw(letters: &[usize]) -> Word {
        Word(letters.iter().map(|&i| VarName::a(i)).collect())
    }

    fn pw(letters: &[usize]) -> PackedWord {
        PackedWord::new(letters.to_vec()).unwrap()
    }

    fn poly(words: &[&[usize]]) -> NCPoly {
        let mut f = NCPoly::zero();
        for w in words {
            f.add_term(aw(w), 1);
        }
        f
    }

    #[test]
    fn bold_f_examples() {
        let single = RankedPoset::new(1, []).unwrap();
        assert_eq!(bold_f_p(&single, 2), poly(&[&[1], &[2]]));
        let up = RankedPoset::new(2, [(1, 2)]).unwrap();
        assert_eq!(bold_f_p(&up, 2), poly(&[&[1, 1], &[1, 2], &[2, 2]]));
        let down = RankedPoset::new(2, [(2, 1)]).unwrap();
        assert_eq!(bold_f_p(&down, 2), poly(&[&[1, 1], &[2, 1], &[2, 2]]));
    }

    #[test]
    fn bold_n_example_poset() {
        // d_g b_e b_f d_j d_h b_i over e,f <= g,h < i <= j at level 2
        let m = 2;
        let mut expected = NCPoly::zero();
        for e in 1..=m + 1 {
            for f in 1..=m + 1 {
                for g in 1..=m {
                    for h in 1..=m {
                        for i in 1..=m + 1 {
                            for j in 1..=m {
                                if e.max(f) <= g.min(h) && g.max(h) < i && i <= j {
                                    let w = Word(vec![
                                        VarName::d(g),
                                        VarName::b(e),
                                        VarName::b(f),
                                        VarName::d(j),
                                        VarName::d(h),
                                        VarName::b(i),
                                    ]);
                                    expected.add_term(w, 1);
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(bold_n_p(&example_poset(), m), expected);
        let single = RankedPoset::new(1, []).unwrap();
        assert_eq!(bold_n_p(&single, 1), &NCPoly::letter(VarName::b(1)) + &NCPoly::letter(VarName::b(2)));
    }

    #[test]
    fn packing() {
        assert_eq!(pack(&[5, 2, 5, 9]), vec![2, 1, 2, 3]);
        assert!(PackedWord::new(vec![1, 3]).is_err());
        assert_eq!(packed_words_of(2), vec![pw(&[1, 1]), pw(&[1, 2]), pw(&[2, 1])]);
        assert_eq!(packed_words_of(3).len(), 13);
    }

    #[test]
    fn wq_expand_examples() {
        let up = RankedPoset::new(2, [(1, 2)]).unwrap();
        let e = wq_expand(&bold_f_p(&up, 3), 3).unwrap();
        assert_eq!(e.coefficient(&pw(&[1, 1])), 1);
        assert_eq!(e.coefficient(&pw(&[1, 2])), 1);
        assert_eq!(e.coefficient(&pw(&[2, 1])), 0);

        let sym = poly(&[&[1, 2], &[2, 1]]);
        let at2 = wq_expand(&sym, 2).unwrap();
        assert_eq!(at2.coefficient(&pw(&[1, 2])), 1);
        assert_eq!(at2.coefficient(&pw(&[2, 1])), 1);
        assert!(matches!(wq_expand(&sym, 3), Err(Error::NotWordQuasiSymmetric(_))));

        assert!(wq_expand(&NCPoly::zero(), 2).unwrap().is_zero());
    }

    #[test]
    fn leading_evaluation_recovers_example() {
        let k = sc(&[&[2, 3], &[1, 5], &[6], &[4]]);
        for m in 2..=4 {
            let (ev, got) = leading_evaluation(&bold_n_p(&poset_from_set_composition(&k), m)).unwrap();
            assert_eq!(got, k);
            assert_eq!(&ev.0[..4], &[2, 2, 1, 1]);
        }
        let single = sc(&[&[1]]);
        let (ev, got) = leading_evaluation(&bold_n_p(&poset_from_set_composition(&single), 1)).unwrap();
        assert_eq!(got, single);
        assert_eq!(ev.0, vec![1]);
    }

    #[test]
    fn leading_evaluation_errors() {
        assert_eq!(leading_evaluation(&NCPoly::zero()), Err(Error::ZeroPolynomial));
        let mut tie = NCPoly::zero();
        tie.add_term(Word(vec![VarName::b(1), VarName::d(1)]), 1);
        tie.add_term(Word(vec![VarName::d(1), VarName::b(1)]), 1);
        assert!(matches!(leading_evaluation(&tie), Err(Error::LeadingEvaluation(_))));
    }

    #[test]
    fn basis_self_expansion() {
        let basis = LuotoBasis::new(3);
        for k in basis.index().to_vec() {
            let f = wq_expand(&bold_f_p(&poset_from_set_composition(&k), 3), 3).unwrap();
            assert_eq!(basis.expand(&f).unwrap(), BTreeMap::from([(k.clone(), 1)]));
        }
    }

    #[test]
    fn chain_is_its_own_luoto_element() {
        let up = RankedPoset::new(2, [(1, 2)]).unwrap();
        assert_eq!(luoto_expand_poset(&up).unwrap(), BTreeMap::from([(sc(&[&[1], &[2]]), 1)]));
        assert_eq!(splitting_expand(&up).unwrap(), BTreeMap::from([(sc(&[&[1], &[2]]), 1)]));
    }

    #[test]
    fn antichain_splits_trivially() {
        let anti = RankedPoset::new(2, []).unwrap();
        assert_eq!(splitting_expand(&anti).unwrap(), BTreeMap::from([(sc(&[&[1, 2]]), 1)]));
        assert_eq!(luoto_expand_poset(&anti).unwrap(), BTreeMap::from([(sc(&[&[1, 2]]), 1)]));
    }

    #[test]
    fn signed_expansion_falls_back_to_the_full_system() {
        let anti = wq_expand(&bold_f_p(&RankedPoset::new(2, []).unwrap(), 2), 2).unwrap();
        let chain = wq_expand(&bold_f_p(&RankedPoset::new(2, [(1, 2)]).unwrap(), 2), 2).unwrap();
        let mut diff = WQElem::zero();
        for (u, c) in anti.terms() {
            diff.add_term(u.clone(), c);
        }
        for (u, c) in chain.terms() {
            diff.add_term(u.clone(), -c);
        }
        assert_eq!(restricted_expand(&diff, 2).unwrap(), None);
        let expected = BTreeMap::from([(sc(&[&[1, 2]]), 1), (sc(&[&[1], &[2]]), -1)]);
        assert_eq!(luoto_expand(&diff, 2).unwrap(), expected);
        assert!(luoto_expand(&WQElem::zero(), 3).unwrap().is_empty());
    }

    #[test]
    fn product_of_singletons() {
        let one = sc(&[&[1]]);
        let table = luoto_product(&one, &one).unwrap();
        assert_eq!(table, BTreeMap::from([(sc(&[&[1, 2]]), 1)]));
        let unit = SetComposition::default();
        assert_eq!(luoto_product(&one, &unit).unwrap(), BTreeMap::from([(one.clone(), 1)]));
    }

    #[test]
    fn a_to_bd_letters() {
        let f = NCPoly::letter(VarName::a(1));
        let expected = NCPoly::sum_of_letters([VarName::d(1), VarName::b(1), VarName::b(2)]);
        assert_eq!(substitute_a_to_bd(&f, 1).unwrap(), expected);
        let g = NCPoly::letter(VarName::a(2));
        let expected = NCPoly::sum_of_letters([VarName::d(1), VarName::b(2)]);
        assert_eq!(substitute_a_to_bd(&g, 1).unwrap(), expected);
        let h = NCPoly::letter(VarName::a(3));
        assert_eq!(substitute_a_to_bd(&h, 1).unwrap(), NCPoly::letter(VarName::b(2)));
        assert_eq!(a_to_bd_assignment(2).len(), 5);
    }

    #[test]
    fn projections() {
        let p = example_poset();
        assert_eq!(commutative_projection(&bold_f_p(&p, 3)), crate::qsym::f_p(&p, 3));
        assert_eq!(commutative_projection(&bold_n_p(&p, 2)), crate::superqsym::n_p(&p, 2).value);
        assert!(commutative_projection(&(&poly(&[&[1, 2]]) - &poly(&[&[2, 1]]))).is_zero());
    }
}
