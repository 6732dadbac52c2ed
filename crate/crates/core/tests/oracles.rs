//! Brute-force oracles for the enumerators, and the worked examples.

use std::collections::{BTreeMap, BTreeSet};

use ppart_core::algebra::{CPoly, Monomial, VarName};
use ppart_core::combinatorics::{Composition, SetComposition};
use ppart_core::posets::{enumerate_ranked_posets, example_poset, RankedPoset};
use ppart_core::qsym::{f_p, monomial_m, qsym_expand, verify_main_theorem, QSymElem};
use ppart_core::superqsym::n_p;
use ppart_core::wqsym::{bold_f_p, luoto_expand_poset, splitting_expand};
use ppart_core::Error;

/// All cover sets on `{1..n}` that form a ranked poset, by filtering every
/// subset of ordered pairs.
fn brute_force_posets(n: usize) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (1..=n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let covers: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect();
        if let Ok(p) = RankedPoset::new(n, covers) {
            out.insert(p.covers().clone());
        }
    }
    out
}

#[test]
fn poset_enumeration_matches_subset_filter() {
    for n in 1..=4 {
        let built: Vec<BTreeSet<(usize, usize)>> =
            enumerate_ranked_posets(n).unwrap().iter().map(|p| p.covers().clone()).collect();
        let unique: BTreeSet<_> = built.iter().cloned().collect();
        assert_eq!(unique.len(), built.len(), "duplicates at n={n}");
        assert_eq!(unique, brute_force_posets(n), "n={n}");
    }
    assert_eq!(enumerate_ranked_posets(2).unwrap().len(), 3);
    assert!(matches!(enumerate_ranked_posets(7), Err(Error::OutOfRange { .. })));
}

fn brute_force_order_maps(p: &RankedPoset, max: usize) -> BTreeSet<Vec<usize>> {
    let n = p.size();
    let less = p.strict_order();
    let mut out = BTreeSet::new();
    let mut r = vec![1usize; n];
    loop {
        // Full order condition on comparable pairs, not just covers.
        let ok = (0..n).all(|u| {
            (0..n).all(|v| !less[u][v] || (r[u] <= r[v] && (!p.is_odd(u + 1) || r[u] < r[v])))
        });
        if ok {
            out.insert(r.clone());
        }
        let mut k = 0;
        while k < n && r[k] == max {
            r[k] = 1;
            k += 1;
        }
        if k == n {
            return out;
        }
        r[k] += 1;
    }
}

#[test]
fn order_maps_match_candidate_filter() {
    for n in 1..=5 {
        for p in enumerate_ranked_posets(n).unwrap() {
            let mut previous = 0;
            for max in 0..=4 {
                let got: Vec<Vec<usize>> = p.order_maps(max).collect();
                let set: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
                assert_eq!(set.len(), got.len());
                let expected = if max == 0 { BTreeSet::new() } else { brute_force_order_maps(&p, max) };
                assert_eq!(set, expected, "{:?} at N={max}", p.covers());
                assert!(got.len() >= previous);
                previous = got.len();
            }
        }
    }
}

#[test]
fn order_map_examples() {
    let single = RankedPoset::new(1, []).unwrap();
    assert_eq!(single.order_maps(3).count(), 3);
    let chain3 = RankedPoset::new(3, [(1, 2), (2, 3)]).unwrap();
    assert_eq!(chain3.order_maps(2).collect::<Vec<_>>(), vec![vec![1, 1, 2]]);
    assert!(matches!(RankedPoset::new(2, [(1, 2), (2, 1)]), Err(Error::Cycle)));
}

#[test]
fn f_p_is_label_invariant() {
    // relabeling the elements permutes nothing in the commutative series
    let p = RankedPoset::new(3, [(1, 3), (2, 3)]).unwrap();
    let q = RankedPoset::new(3, [(2, 1), (3, 1)]).unwrap();
    assert_eq!(f_p(&p, 4), f_p(&q, 4));
}

#[test]
fn f_p_is_stable_and_quasi_symmetric() {
    for n in 1..=4 {
        for p in enumerate_ranked_posets(n).unwrap() {
            let wide = f_p(&p, n + 1);
            let cut = wide.substitute(&BTreeMap::from([(VarName::x(n + 1), CPoly::zero())]));
            assert_eq!(cut, f_p(&p, n));
            let e = qsym_expand(&f_p(&p, n + 2), n + 2).unwrap();
            assert_eq!(e.to_poly(n + 2), f_p(&p, n + 2));
        }
    }
    let i = Composition::new(vec![2, 1]).unwrap();
    let cut = monomial_m(&i, 4).substitute(&BTreeMap::from([(VarName::x(4), CPoly::zero())]));
    assert_eq!(cut, monomial_m(&i, 3));
}

#[test]
fn chain_expansion_example() {
    let chain = RankedPoset::new(2, [(1, 2)]).unwrap();
    let mut expected = QSymElem::zero();
    expected.add_term(Composition::new(vec![2]).unwrap(), 1);
    expected.add_term(Composition::new(vec![1, 1]).unwrap(), 1);
    assert_eq!(qsym_expand(&f_p(&chain, 3), 3).unwrap(), expected);
}

#[test]
fn main_identity_on_the_example_poset() {
    for m in 0..=2 {
        assert!(verify_main_theorem(&example_poset(), m).unwrap(), "m={m}");
    }
}

#[test]
fn example_poset_two_alphabet_terms() {
    // every monomial has three p's and three q's
    let h = n_p(&example_poset(), 2).value;
    for (mono, c) in h.terms() {
        assert!(c > 0);
        let count = |f: fn(usize) -> VarName| (1..=3).map(|i| mono.exponent(f(i))).sum::<u32>();
        assert_eq!((count(VarName::p), count(VarName::q)), (3, 3), "{mono:?}");
    }
    assert!(h.coefficient(&Monomial::from_pairs([(VarName::p(1), 2), (VarName::p(2), 1), (VarName::q(1), 2), (VarName::q(2), 1)])) > 0);
}

#[test]
fn example_poset_luoto_expansion_agrees_with_splitting() {
    let p = example_poset();
    let solved = luoto_expand_poset(&p).unwrap();
    assert_eq!(solved, splitting_expand(&p).unwrap());
    assert!(solved.values().all(|&c| c > 0));
    // the poset is itself P_K for K = ({2,3},{1,5},{6},{4})
    let k = SetComposition::new(vec![vec![2, 3], vec![1, 5], vec![6], vec![4]]).unwrap();
    assert_eq!(solved, BTreeMap::from([(k, 1)]));
}

#[test]
fn splitting_the_vee() {
    // 1 and 2 at height 0, 3 above 1 only: the pair (2, 3) is incomparable
    let p = RankedPoset::new(3, [(1, 3)]).unwrap();
    let split = splitting_expand(&p).unwrap();
    assert_eq!(split, luoto_expand_poset(&p).unwrap());
    assert_eq!(split.values().sum::<i64>(), 2);
    let total_words = bold_f_p(&p, 3).len();
    assert!(total_words > 0);
}
