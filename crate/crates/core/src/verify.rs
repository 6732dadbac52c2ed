//! Batch verification over poset corpora and parameter grids.
//!
//! Each check returns a [`Section`] recording how many cases were examined
//! and a description of every failing case (capped). [`verify_all`] runs
//! the full desk-scale battery.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{linalg, CPoly, Monomial, NCPoly, SymSeries, VarName, Word};
use crate::combinatorics::{
    compositions_of, interlacing_from_multirect, interlacing_from_partition, multirect_from_interlacing,
    ordered_bell, partition_from_interlacing, partitions_of, set_compositions_of, Composition, InterlacingCoords,
    MultirectCoords,
};
use crate::error::Result;
use crate::posets::{enumerate_ranked_posets, poset_from_set_composition, random_ranked_poset, RankedPoset, ValueBounds};
use crate::qsym::{
    f_p, f_p_bounded, kill_odd_variables, monomial_m, monomial_m_virtual, qsym_expand,
    MainTheoremChecker, VirtualAlphabet,
};
use crate::superqsym::{check_spq_membership, collapse_to_x, is_avoiding, merge_values, n_p, verify_isomorphism_roundtrip};
use crate::wqsym::{
    bold_f_p, bold_n_p, commutative_projection, leading_evaluation, luoto_expand_poset, splitting_expand, wq_expand,
    LuotoBasis,
};

const MAX_REPORTED_FAILURES: usize = 20;

/// Outcome of one group of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    pub failure_count: usize,
    pub failures: Vec<String>,
}

impl Section {
    fn new(name: &str) -> Self {
        Section { name: name.to_string(), checked: 0, pass: true, failure_count: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.pass = false;
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn record_result(&mut self, res: Result<bool>, describe: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }
}

/// Result of a batch command. Elapsed time is kept out of the serialized
/// form so that JSON output is reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub pass: bool,
    pub sections: Vec<Section>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: &str, inputs: BTreeMap<String, serde_json::Value>) -> Self {
        RunReport { command: command.to_string(), inputs, pass: true, sections: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn push(&mut self, s: Section) {
        self.pass &= s.pass;
        self.sections.push(s);
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, if self.pass { "PASS" } else { "FAIL" });
        for s in &self.sections {
            out += &format!(
                "  [{}] {} ({} checked, {} failed)\n",
                if s.pass { "pass" } else { "FAIL" },
                s.name,
                s.checked,
                s.failure_count
            );
            for f in &s.failures {
                out += &format!("      {f}\n");
            }
        }
        out
    }
}

fn poset_label(p: &RankedPoset) -> String {
    serde_json::to_string(&p.to_spec()).expect("poset specs serialize")
}

fn corpus(n_max: usize) -> Result<Vec<RankedPoset>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_ranked_posets(n)?);
    }
    Ok(out)
}

fn x(i: usize) -> CPoly {
    CPoly::var(VarName::x(i))
}

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

/// Main identity on every ranked poset with at most `n_max` elements.
pub fn main_theorem_exhaustive(n_max: usize, m_max: usize) -> Result<Section> {
    let mut s = Section::new("main identity, exhaustive corpus");
    let mut checker = MainTheoremChecker::default();
    for p in corpus(n_max)? {
        for m in 0..=m_max {
            s.record_result(checker.check(&p, m), || format!("poset {} at m={m}", poset_label(&p)));
        }
    }
    Ok(s)
}

/// Main identity on `count` random posets with sizes drawn from `sizes`.
pub fn main_theorem_random(count: usize, sizes: &[usize], m_max: usize, seed: u64) -> Section {
    let mut s = Section::new("main identity, random posets");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checker = MainTheoremChecker::default();
    for _ in 0..count {
        let n = sizes[rng.gen_range(0..sizes.len())];
        let p = random_ranked_poset(n, &mut rng);
        for m in 0..=m_max {
            s.record_result(checker.check(&p, m), || format!("poset {} at m={m}", poset_label(&p)));
        }
    }
    s
}

/// `M_(k)(X_m) = sum_j (-1)^j x_j^k`.
pub fn closed_form_one_part(k: usize, m: usize) -> CPoly {
    let mut out = CPoly::zero();
    for j in 1..=2 * m + 1 {
        let t = x(j).pow(k as u32);
        out = if j % 2 == 1 { out - t } else { out + t };
    }
    out
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `M_(k,l)(X_m) = sum_{j odd} x_j^{k+l} + sum_{i<j} (-1)^{i+j} x_i^k x_j^l`.
pub fn closed_form_two_parts(k: usize, l: usize, m: usize) -> CPoly {
    let top = 2 * m + 1;
    let mut out = CPoly::zero();
    for j in (1..=top).step_by(2) {
        out += &x(j).pow((k + l) as u32);
    }
    for i in 1..=top {
        for j in i + 1..=top {
            out += &(x(i).pow(k as u32) * x(j).pow(l as u32)).scale(sign(i + j));
        }
    }
    out
}

/// `M_(k,l,n)(X_m) = -sum_{j odd} x_j^{k+l+n}
///   + sum_{i<j, j odd} (-1)^i x_i^k x_j^{l+n}
///   + sum_{i<j, i odd} (-1)^j x_i^{k+l} x_j^n
///   + sum_{h<i<j} (-1)^{h+i+j} x_h^k x_i^l x_j^n`.
pub fn closed_form_three_parts(k: usize, l: usize, n: usize, m: usize) -> CPoly {
    let top = 2 * m + 1;
    let pw = |i: usize, e: usize| x(i).pow(e as u32);
    let mut out = CPoly::zero();
    for j in (1..=top).step_by(2) {
        out -= &pw(j, k + l + n);
    }
    for i in 1..=top {
        for j in i + 1..=top {
            if j % 2 == 1 {
                out += &(pw(i, k) * pw(j, l + n)).scale(sign(i));
            }
            if i % 2 == 1 {
                out += &(pw(i, k + l) * pw(j, n)).scale(sign(j));
            }
        }
    }
    for h in 1..=top {
        for i in h + 1..=top {
            for j in i + 1..=top {
                out += &(pw(h, k) * pw(i, l) * pw(j, n)).scale(sign(h + i + j));
            }
        }
    }
    out
}

/// Closed forms for one-, two- and three-part compositions against the
/// generating-series definition.
pub fn closed_forms(k_max: usize, m_max_single: usize, kl_max: usize, m_max_multi: usize) -> Section {
    let mut s = Section::new("virtual monomials, closed forms");
    for m in 0..=m_max_single {
        for k in 1..=k_max {
            let got = monomial_m_virtual(&comp(&[k]), m).value;
            s.record(got == closed_form_one_part(k, m), || format!("M_({k}) at m={m}"));
        }
    }
    for m in 0..=m_max_multi {
        let alphabet = VirtualAlphabet::new(m, 3 * kl_max);
        for k in 1..=kl_max {
            for l in 1..=kl_max {
                let got = alphabet.monomial(&comp(&[k, l]));
                s.record(got == closed_form_two_parts(k, l, m), || format!("M_({k},{l}) at m={m}"));
                for n in 1..=kl_max {
                    let got = alphabet.monomial(&comp(&[k, l, n]));
                    s.record(got == closed_form_three_parts(k, l, n, m), || format!("M_({k},{l},{n}) at m={m}"));
                }
            }
        }
    }
    s
}

/// The two-alphabet series satisfies the second functional equation, and
/// every monomial containing `q_1` also contains `p_1`.
pub fn spq_for_posets(n_max: usize, m_max: usize) -> Result<Section> {
    let mut s = Section::new("two-alphabet series satisfy the second functional equation");
    for p in corpus(n_max)? {
        let family: Vec<CPoly> = (0..=m_max).map(|m| n_p(&p, m).value).collect();
        let report = check_spq_membership(&family, m_max);
        for cell in &report.cells {
            s.record(cell.pass, || format!("poset {} cell {cell:?}", poset_label(&p)));
        }
        for (m, h) in family.iter().enumerate() {
            let ok = h.terms().all(|(mono, _)| mono.exponent(VarName::q(1)) == 0 || mono.exponent(VarName::p(1)) > 0);
            s.record(ok, || format!("poset {} at m={m}: a q_1 monomial lacks p_1", poset_label(&p)));
        }
    }
    Ok(s)
}

/// Every family `m -> M_I(X_m)` with `|I| <= weight_max` passes the first
/// functional equation, and its image passes the second with an exact
/// inverse.
pub fn sx_for_monomials(weight_max: usize, m_max: usize) -> Section {
    let mut s = Section::new("virtual monomials satisfy the first functional equation");
    let alphabets: Vec<VirtualAlphabet> = (0..=m_max).map(|m| VirtualAlphabet::new(m, weight_max)).collect();
    for w in 0..=weight_max {
        for i in compositions_of(w) {
            let family: Vec<CPoly> = alphabets.iter().map(|a| a.monomial(&i)).collect();
            for cell in verify_isomorphism_roundtrip(&family, m_max).cells {
                s.record(cell.pass, || format!("I={:?} cell {cell:?}", i.parts()));
            }
        }
    }
    s
}

fn coefficient_rows(polys: &[CPoly]) -> Vec<Vec<i64>> {
    let support: BTreeSet<Monomial> = polys.iter().flat_map(|f| f.terms().map(|(mono, _)| mono.clone())).collect();
    polys.iter().map(|f| support.iter().map(|mono| f.coefficient(mono)).collect()).collect()
}

/// `{M_I(X_n) : |I| = n}` has rank `2^{n-1}`.
pub fn virtual_rank(n_max: usize) -> Section {
    let mut s = Section::new("virtual monomials are linearly independent");
    for n in 1..=n_max {
        let alphabet = VirtualAlphabet::new(n, n);
        let polys: Vec<CPoly> = compositions_of(n).iter().map(|i| alphabet.monomial(i)).collect();
        let r = linalg::rank(&coefficient_rows(&polys));
        s.record(r == 1 << (n - 1), || format!("n={n}: rank {r}, expected {}", 1 << (n - 1)));
    }
    s
}

/// Setting the odd letters to zero turns `M_I(X_m)` into `M_I` in the even
/// letters.
pub fn kill_odd_consistency(weight_max: usize, m_max: usize) -> Section {
    let mut s = Section::new("odd letters set to zero give ordinary monomials");
    for m in 0..=m_max {
        for w in 0..=weight_max {
            for i in compositions_of(w) {
                let got = kill_odd_variables(&monomial_m_virtual(&i, m));
                let expected = monomial_m(&i, m).rename(|v| VarName::x(2 * v.index));
                s.record(got == expected, || format!("I={:?} at m={m}", i.parts()));
            }
        }
    }
    s
}

/// Partition, interlacing and multirectangular coordinates convert back and
/// forth: every partition of size `<= size_max`, and every coordinate vector
/// with at most `2 * m_max + 1` entries in `[-bound, bound]`.
pub fn coordinates(size_max: usize, m_max: usize, bound: i64) -> Section {
    let mut s = Section::new("diagram coordinates round trip");
    let fig = crate::combinatorics::Partition::new(vec![4, 4, 2]).expect("valid partition");
    let xs = interlacing_from_partition(&fig);
    s.record(xs.values() == [4, 2, 0, -1, -3], || format!("(4,4,2) gave {:?}", xs.values()));
    let pq = multirect_from_interlacing(&xs);
    s.record(pq.p == [2, 1, -3] && pq.q == [2, 2], || format!("(4,4,2) gave {pq:?}"));

    for size in 0..=size_max {
        for lambda in partitions_of(size) {
            let xs = interlacing_from_partition(&lambda);
            let ok = xs.is_strict()
                && crate::combinatorics::center(&xs) == 0
                && partition_from_interlacing(&xs) == (lambda.clone(), 0)
                && interlacing_from_multirect(&multirect_from_interlacing(&xs)) == xs;
            s.record(ok, || format!("partition {:?}", lambda.rows()));
        }
    }

    let values: Vec<i64> = (-bound..=bound).collect();
    for m in 0..=m_max {
        let len = 2 * m + 1;
        let mut idx = vec![0usize; len];
        loop {
            let v: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            if let Ok(xs) = InterlacingCoords::new(v.clone()) {
                let pq = multirect_from_interlacing(&xs);
                let mut ok = pq.is_nonnegative() && interlacing_from_multirect(&pq) == xs;
                let (lambda, c) = partition_from_interlacing(&xs);
                ok &= interlacing_from_partition(&lambda).shifted(c) == xs.reduced();
                s.record(ok, || format!("interlacing {v:?}"));
            }
            // pq round trip over the same grid, p_{m+1} unconstrained
            let pq = MultirectCoords::new(v[..=m].to_vec(), v[m + 1..].to_vec()).expect("lengths match");
            let back = multirect_from_interlacing(&interlacing_from_multirect(&pq));
            s.record(back == pq, || format!("multirectangular {pq:?}"));
            let mut k = 0;
            while k < len && idx[k] + 1 == values.len() {
                idx[k] = 0;
                k += 1;
            }
            if k == len {
                break;
            }
            idx[k] += 1;
        }
    }
    s
}

/// Rank of the Luoto matrix, recovery of `K` from the leading monomial of
/// `bold N_{P_K}`, and basis self-expansion.
pub fn luoto_basis(n_max: usize) -> Result<Section> {
    let mut s = Section::new("Luoto posets give a basis");
    for n in 1..=n_max {
        let comps = set_compositions_of(n);
        let bell = ordered_bell(n) as usize;
        s.record(comps.len() == bell, || format!("n={n}: {} set compositions, ordered Bell {bell}", comps.len()));
        let basis = LuotoBasis::new(n);
        let rank = basis.rank();
        s.record(rank == bell, || format!("n={n}: rank {rank}, expected {bell}"));

        for k in &comps {
            let decoded = leading_evaluation(&bold_n_p(&poset_from_set_composition(k), n));
            let ok = match decoded {
                Ok((_, got)) => got == *k,
                Err(_) => false,
            };
            s.record(ok, || format!("K={:?}: leading evaluation does not recover K", k.blocks()));
            let f = wq_expand(&bold_f_p(&poset_from_set_composition(k), n), n)?;
            let expanded = basis.expand(&f)?;
            s.record(expanded == BTreeMap::from([(k.clone(), 1)]), || format!("K={:?}: self-expansion {expanded:?}", k.blocks()));
        }
    }
    Ok(s)
}

/// The Luoto expansion of every `bold F_P` is a nonnegative integer vector
/// equal to the splitting count, both through the full system and through
/// the support-restricted one.
pub fn positivity(n_max: usize) -> Result<Section> {
    let mut s = Section::new("Luoto expansions are nonnegative and match the splitting count");
    let bases: Vec<LuotoBasis> = (0..=n_max).map(LuotoBasis::new).collect();
    for p in corpus(n_max)? {
        let n = p.size();
        let solved = wq_expand(&bold_f_p(&p, n), n).and_then(|f| bases[n].expand(&f));
        let split = splitting_expand(&p);
        let restricted = luoto_expand_poset(&p);
        let ok = match (&solved, &split, &restricted) {
            (Ok(a), Ok(b), Ok(c)) => a == b && a == c && a.values().all(|&c| c > 0),
            _ => false,
        };
        s.record(ok, || format!("poset {}: solve {solved:?}, splitting {split:?}", poset_label(&p)));
    }
    Ok(s)
}

/// Multiplication table of the Luoto basis for `|K| + |K'| <= total_max`,
/// with product compatibility of the truncated series.
pub fn product_tables(total_max: usize) -> Section {
    let mut s = Section::new("Luoto multiplication table is nonnegative");
    let bases: Vec<LuotoBasis> = (0..=total_max).map(LuotoBasis::new).collect();
    for n1 in 0..=total_max {
        for n2 in 0..=total_max - n1 {
            for k1 in set_compositions_of(n1) {
                for k2 in set_compositions_of(n2) {
                    let table = bases[n1 + n2].product(&k1, &k2);
                    let ok = matches!(&table, Ok(t) if t.values().all(|&c| c > 0));
                    s.record(ok, || format!("{:?} * {:?} gave {table:?}", k1.blocks(), k2.blocks()));

                    let (p1, p2) = (poset_from_set_composition(&k1), poset_from_set_composition(&k2));
                    let union = crate::posets::disjoint_union_shifted(&p1, &p2);
                    let letters = n1 + n2;
                    let product = &bold_f_p(&p1, letters) * &bold_f_p(&p2, letters);
                    s.record(product == bold_f_p(&union, letters), || {
                        format!("{:?} * {:?}: product of series differs from the union", k1.blocks(), k2.blocks())
                    });
                }
            }
        }
    }
    s
}

/// Abelianizing the noncommutative series gives the commutative ones, and
/// collapsing the two alphabets gives the one-alphabet series with the
/// same value bounds.
pub fn collapse(n_max: usize, m_max: usize) -> Result<Section> {
    let mut s = Section::new("commutative images and collapse");
    for p in corpus(n_max)? {
        let n = p.size();
        for k in [n, n + 1] {
            s.record(commutative_projection(&bold_f_p(&p, k)) == f_p(&p, k), || {
                format!("poset {}: bold F at {k} letters", poset_label(&p))
            });
        }
        let wq = wq_expand(&bold_f_p(&p, n + 1), n + 1);
        s.record(wq.is_ok(), || format!("poset {}: not word quasi-symmetric at {} letters", poset_label(&p), n + 1));
        let qs = qsym_expand(&f_p(&p, n + 1), n + 1);
        s.record(qs.is_ok(), || format!("poset {}: not quasi-symmetric at {} variables", poset_label(&p), n + 1));
        for m in 0..=m_max {
            let h = n_p(&p, m);
            s.record(commutative_projection(&bold_n_p(&p, m)) == h.value, || {
                format!("poset {}: bold N at m={m}", poset_label(&p))
            });
            s.record(collapse_to_x(&h) == f_p_bounded(&p, ValueBounds::level(m)), || {
                format!("poset {}: collapse at m={m}", poset_label(&p))
            });
        }
    }
    Ok(s)
}

fn pq_weight(p: &RankedPoset, r: &[usize]) -> CPoly {
    let mono = Monomial::from_pairs(r.iter().enumerate().map(|(k, &val)| {
        (if p.is_odd(k + 1) { VarName::q(val) } else { VarName::p(val) }, 1)
    }));
    CPoly::term(1, mono)
}

/// The merge map sends `i`-avoiding order maps at level `m` onto order maps
/// at level `m - 1`, each fiber consisting of the maps obtained by
/// splitting `i` into `{i, i+1}` on even-height elements, with weights
/// adding up to the relabeled weight of the image.
pub fn avoiding_bijection(n_max: usize, m_max: usize) -> Result<Section> {
    let mut s = Section::new("merge map on avoiding order maps");
    for p in corpus(n_max)? {
        for m in 1..=m_max {
            let upper: Vec<Vec<usize>> = p.order_maps_bounded(ValueBounds::level(m)).collect();
            let lower: BTreeSet<Vec<usize>> = p.order_maps_bounded(ValueBounds::level(m - 1)).collect();
            for i in 1..=m {
                let mut fibers: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
                let mut into = true;
                for r in upper.iter().filter(|r| is_avoiding(&p, r, i)) {
                    let image = merge_values(r, i);
                    into &= lower.contains(&image);
                    fibers.entry(image).or_default().push(r.clone());
                }
                let onto = fibers.len() == lower.len();
                s.record(into && onto, || format!("poset {} m={m} i={i}: merge map not onto", poset_label(&p)));

                let mut fibers_ok = true;
                let mut weights_ok = true;
                for (image, fiber) in &fibers {
                    let splittable: Vec<usize> =
                        (0..p.size()).filter(|&k| image[k] == i && !p.is_odd(k + 1)).collect();
                    let mut expected: BTreeSet<Vec<usize>> = BTreeSet::new();
                    for mask in 0..1usize << splittable.len() {
                        let mut r: Vec<usize> = image.iter().map(|&v| if v > i { v + 1 } else { v }).collect();
                        for (b, &k) in splittable.iter().enumerate() {
                            if mask >> b & 1 == 1 {
                                r[k] = i + 1;
                            }
                        }
                        for k in 0..p.size() {
                            if image[k] == i && p.is_odd(k + 1) {
                                r[k] = i + 1;
                            }
                        }
                        expected.insert(r);
                    }
                    let got: BTreeSet<Vec<usize>> = fiber.iter().cloned().collect();
                    fibers_ok &= got == expected;

                    let lhs = fiber.iter().fold(CPoly::zero(), |acc, r| acc + pq_weight(&p, r));
                    let rhs = primed_weight(&p, image, i);
                    weights_ok &= lhs == rhs;
                }
                s.record(fibers_ok, || format!("poset {} m={m} i={i}: unexpected fiber", poset_label(&p)));
                s.record(weights_ok, || format!("poset {} m={m} i={i}: weights disagree", poset_label(&p)));
            }
        }
    }
    Ok(s)
}

/// `prod p'_{r'(v_0)} prod q'_{r'(v_1)}` with `p'_i = p_i + p_{i+1}`,
/// `p'_j = p_{j+1}` and `q'_j = q_{j+1}` for `j > i` (`j >= i` for `q`).
fn primed_weight(p: &RankedPoset, r: &[usize], i: usize) -> CPoly {
    let mut out = CPoly::one();
    for (k, &v) in r.iter().enumerate() {
        let factor = if p.is_odd(k + 1) {
            CPoly::var(VarName::q(if v < i { v } else { v + 1 }))
        } else if v < i {
            CPoly::var(VarName::p(v))
        } else if v == i {
            CPoly::var(VarName::p(i)) + CPoly::var(VarName::p(i + 1))
        } else {
            CPoly::var(VarName::p(v + 1))
        };
        out = out * factor;
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng) -> CPoly {
    let mut f = CPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        let mono = Monomial::from_pairs((1..=3).map(|i| (VarName::x(i), rng.gen_range(0..3))));
        f.add_term(mono, rng.gen_range(-4..=4));
    }
    f
}

fn random_series(rng: &mut ChaCha8Rng, cap: usize) -> SymSeries {
    let mut a = SymSeries::one(cap);
    for w in 1..=cap {
        for i in compositions_of(w) {
            if rng.gen_bool(0.5) {
                a.add_term(i, &random_poly(rng));
            }
        }
    }
    a
}

fn random_ncpoly(rng: &mut ChaCha8Rng) -> NCPoly {
    let mut f = NCPoly::zero();
    for _ in 0..rng.gen_range(0..4) {
        let len = rng.gen_range(0..4);
        let w = Word((0..len).map(|_| VarName::a(rng.gen_range(1..=3))).collect());
        f.add_term(w, rng.gen_range(-3..=3));
    }
    f
}

/// Seeded random checks of the ring axioms, series inversion, and the
/// substitution morphism laws.
pub fn algebra_properties(cases: usize, seed: u64) -> Result<Section> {
    let mut s = Section::new("algebraic laws on random inputs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let ring = &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &(&a + &b) - &b == a
            && &a * &CPoly::one() == a;
        s.record(ring, || format!("case {case}: ring axioms fail for {a}, {b}, {c}"));

        let assign: BTreeMap<VarName, CPoly> = (1..=3).map(|i| (VarName::x(i), random_poly(&mut rng))).collect();
        let morph = (&a * &b).substitute(&assign) == &a.substitute(&assign) * &b.substitute(&assign)
            && (&a + &b).substitute(&assign) == &a.substitute(&assign) + &b.substitute(&assign);
        s.record(morph, || format!("case {case}: substitution is not a morphism"));

        let series = random_series(&mut rng, 5);
        let inverse = series.invert()?;
        s.record(series.multiply(&inverse)? == SymSeries::one(5) && inverse.multiply(&series)? == SymSeries::one(5), || {
            format!("case {case}: series inverse fails")
        });

        let (f, g) = (random_ncpoly(&mut rng), random_ncpoly(&mut rng));
        let images: BTreeMap<VarName, NCPoly> = (1..=3)
            .map(|i| {
                let letters = (1..=3).filter(|_| rng.gen_bool(0.5)).map(VarName::b);
                (VarName::a(i), NCPoly::sum_of_letters(letters))
            })
            .collect();
        let lhs = (&f * &g).letter_substitute(&images)?;
        let rhs = &f.letter_substitute(&images)? * &g.letter_substitute(&images)?;
        s.record(lhs == rhs, || format!("case {case}: letter substitution is not multiplicative"));
    }
    Ok(s)
}

/// Parameters of [`verify_all`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyAllParams {
    pub n_max: usize,
    pub m_max: usize,
    pub seed: u64,
    pub random_posets: usize,
}

impl Default for VerifyAllParams {
    fn default() -> Self {
        VerifyAllParams { n_max: 4, m_max: 2, seed: 0, random_posets: 200 }
    }
}

/// `verify-main`: the main identity on the exhaustive corpus plus random
/// posets of sizes 5 and 6.
pub fn verify_main(n_max: usize, m_max: usize, random_posets: usize, seed: u64) -> Result<RunReport> {
    let start = Instant::now();
    let inputs = BTreeMap::from([
        ("n_max".to_string(), n_max.into()),
        ("m_max".to_string(), m_max.into()),
        ("random_posets".to_string(), random_posets.into()),
        ("seed".to_string(), seed.into()),
    ]);
    let mut report = RunReport::new("verify-main", inputs);
    report.push(main_theorem_exhaustive(n_max, m_max)?);
    if random_posets > 0 {
        report.push(main_theorem_random(random_posets, &[5, 6], m_max, seed));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Every check at desk scale. `n_max` bounds poset and set-composition
/// sizes, `m_max` the level of the main identity; the functional-equation
/// checks run one level further.
pub fn verify_all(params: VerifyAllParams) -> Result<RunReport> {
    let start = Instant::now();
    let VerifyAllParams { n_max, m_max, seed, random_posets } = params;
    let inputs = BTreeMap::from([
        ("n_max".to_string(), n_max.into()),
        ("m_max".to_string(), m_max.into()),
        ("random_posets".to_string(), random_posets.into()),
        ("seed".to_string(), seed.into()),
    ]);
    let mut report = RunReport::new("verify-all", inputs);
    report.push(main_theorem_exhaustive(n_max, m_max)?);
    report.push(main_theorem_random(random_posets, &[5, 6], m_max, seed));
    report.push(closed_forms(4, m_max + 1, 3, m_max));
    report.push(spq_for_posets(n_max, m_max + 1)?);
    report.push(sx_for_monomials(n_max, m_max + 1));
    report.push(virtual_rank(n_max));
    report.push(kill_odd_consistency(n_max, m_max + 1));
    report.push(coordinates(20, 2, 6));
    report.push(luoto_basis(n_max)?);
    report.push(positivity(n_max)?);
    report.push(product_tables(n_max));
    report.push(collapse(n_max, m_max)?);
    report.push(avoiding_bijection(n_max, m_max + 1)?);
    report.push(algebra_properties(200, seed)?);
    report.elapsed = start.elapsed();
    Ok(report)
}
