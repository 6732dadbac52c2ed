//! The two-alphabet side: `N_P` truncated at level `m` (values in
//! `1..=m+1`, with `q_{m+1} = 0`), the collapse `p = q = x`, and the second
//! functional equation.

use std::collections::BTreeMap;

use crate::algebra::{CPoly, Family, Monomial, VarName};
use crate::posets::{RankedPoset, ValueBounds};
use crate::qsym::{check_sx_membership, pq_to_x_assignment, x_to_pq_assignment};
use crate::report::CheckReport;

/// A polynomial in `p_1..p_{m+1}, q_1..q_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    pub m: usize,
    pub value: CPoly,
}

/// `N_P` at level `m`: even-height elements contribute `p_{r(v)}`,
/// odd-height ones `q_{r(v)}`, over order maps with `r <= m + 1` on even
/// and `r <= m` on odd heights.
pub fn n_p(p: &RankedPoset, m: usize) -> BiPoly {
    let mut value = CPoly::zero();
    for r in p.order_maps_bounded(ValueBounds::level(m)) {
        let mono = Monomial::from_pairs(r.iter().enumerate().map(|(k, &val)| {
            let v = if p.is_odd(k + 1) { VarName::q(val) } else { VarName::p(val) };
            (v, 1)
        }));
        value.add_term(mono, 1);
    }
    BiPoly { m, value }
}

/// Sets `p_i = q_i = x_i`.
///
/// `collapse_to_x(n_p(P, m))` equals `f_p_bounded(P, ValueBounds::level(m))`,
/// the one-alphabet series with the same value bounds; it is not the plain
/// truncation `F_P(x_1..x_{m+1})` when odd-height elements could take the
/// top value.
pub fn collapse_to_x(h: &BiPoly) -> CPoly {
    h.value.rename(|v| match v.family {
        Family::P | Family::Q => VarName::x(v.index),
        _ => v,
    })
}

/// Checks the second functional equation on a family `h[m]`, for
/// `1 <= m <= m_max` and `1 <= i <= m`:
///
/// * `13a`: `h_m |_{q_i = 0}` equals `h_{m-1}` evaluated at
///   `p_1..p_{i-1}, p_i + p_{i+1}, p_{i+2}..p_{m+1}` and
///   `q_1..q_{i-1}, q_{i+1}..q_m`;
/// * `13b`: `h_m |_{p_i = 0}` equals `h_{m-1}` evaluated at
///   `p_1..p_{i-1}, p_{i+1}..p_{m+1}` and
///   `q_1..q_{i-2}, q_{i-1} + q_i, q_{i+1}..q_m` (for `i = 1` the column
///   holding `q_0` is dropped, so `q_1` simply disappears).
///
/// Also checks stability: `h_m(p_1..p_m, 0; q_1..q_{m-1}, 0) = h_{m-1}`.
pub fn check_spq_membership(family: &[CPoly], m_max: usize) -> CheckReport {
    assert!(family.len() > m_max, "family must be defined for 0..=m_max");
    let p = |i| CPoly::var(VarName::p(i));
    let q = |i| CPoly::var(VarName::q(i));
    let mut report = CheckReport::default();
    for m in 1..=m_max {
        let h = &family[m];
        let prev = &family[m - 1];
        for i in 1..=m {
            // 13a
            let lhs = h.substitute(&BTreeMap::from([(VarName::q(i), CPoly::zero())]));
            let mut assign = BTreeMap::new();
            for j in 1..=m {
                let img = if j < i {
                    p(j)
                } else if j == i {
                    p(i) + p(i + 1)
                } else {
                    p(j + 1)
                };
                assign.insert(VarName::p(j), img);
            }
            for j in 1..m {
                assign.insert(VarName::q(j), if j < i { q(j) } else { q(j + 1) });
            }
            report.push(m, Some(i), "13a", lhs == prev.substitute(&assign));

            // 13b
            let lhs = h.substitute(&BTreeMap::from([(VarName::p(i), CPoly::zero())]));
            let mut assign = BTreeMap::new();
            for j in 1..=m {
                assign.insert(VarName::p(j), if j < i { p(j) } else { p(j + 1) });
            }
            for j in 1..m {
                let img = if j + 1 < i {
                    q(j)
                } else if j + 1 == i {
                    q(j) + q(j + 1)
                } else {
                    q(j + 1)
                };
                assign.insert(VarName::q(j), img);
            }
            report.push(m, Some(i), "13b", lhs == prev.substitute(&assign));
        }
        let stab = BTreeMap::from([(VarName::p(m + 1), CPoly::zero()), (VarName::q(m), CPoly::zero())]);
        report.push(m, None, "stability", &h.substitute(&stab) == prev);
    }
    report
}

/// Pushes an `S_x` family through `x -> (p, q)`, checks the image against
/// the second functional equation, and checks that the inverse change of
/// variables recovers the input. The input's own `S_x` cells are included.
pub fn verify_isomorphism_roundtrip(family: &[CPoly], m_max: usize) -> CheckReport {
    assert!(family.len() > m_max, "family must be defined for 0..=m_max");
    let mut report = check_sx_membership(family, m_max);
    let image: Vec<CPoly> = (0..=m_max)
        .map(|m| family[m].substitute(&x_to_pq_assignment(m)))
        .collect();
    report.extend(check_spq_membership(&image, m_max));
    for (m, h) in image.iter().enumerate() {
        let back = h.substitute(&pq_to_x_assignment(m));
        report.push(m, None, "inverse", back == family[m]);
    }
    report
}

/// The merge map used in the proof that `N_P` satisfies `13a`: values `<= i`
/// are kept, values `> i` drop by one. On `i`-avoiding order maps at level
/// `m` (no odd-height element takes the value `i`) it is onto the order maps
/// at level `m - 1`; each image has exactly the preimages obtained by
/// splitting the value `i` into `{i, i+1}` on even-height elements.
pub fn merge_values(r: &[usize], i: usize) -> Vec<usize> {
    r.iter().map(|&v| if v <= i { v } else { v - 1 }).collect()
}

/// Whether no odd-height element takes the value `i`.
pub fn is_avoiding(p: &RankedPoset, r: &[usize], i: usize) -> bool {
    (1..=p.size()).all(|v| !p.is_odd(v) || r[v - 1] != i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::example_poset;
    use crate::qsym::f_p_bounded;

    fn pp(i: usize) -> CPoly {
        CPoly::var(VarName::p(i))
    }
    fn qq(i: usize) -> CPoly {
        CPoly::var(VarName::q(i))
    }

    #[test]
    fn n_p_small_examples() {
        let single = RankedPoset::new(1, []).unwrap();
        assert_eq!(n_p(&single, 1).value, pp(1) + pp(2));
        let chain = RankedPoset::new(2, [(1, 2)]).unwrap();
        assert_eq!(n_p(&chain, 1).value, pp(1) * qq(1));
    }

    #[test]
    fn n_p_example_poset() {
        // p_e p_f p_i q_g q_h q_j over e,f <= g,h < i <= j, level 2
        let m = 2;
        let mut expected = CPoly::zero();
        let r = 1..=m + 1;
        for e in r.clone() {
            for f in r.clone() {
                for g in 1..=m {
                    for h in 1..=m {
                        for i in r.clone() {
                            for j in 1..=m {
                                if e.max(f) <= g.min(h) && g.max(h) < i && i <= j {
                                    let mono = Monomial::from_pairs([
                                        (VarName::p(e), 1),
                                        (VarName::p(f), 1),
                                        (VarName::p(i), 1),
                                        (VarName::q(g), 1),
                                        (VarName::q(h), 1),
                                        (VarName::q(j), 1),
                                    ]);
                                    expected.add_term(mono, 1);
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(n_p(&example_poset(), m).value, expected);
    }

    #[test]
    fn collapse_examples() {
        let single = RankedPoset::new(1, []).unwrap();
        let x = |i| CPoly::var(VarName::x(i));
        assert_eq!(collapse_to_x(&n_p(&single, 1)), x(1) + x(2));
        let chain = RankedPoset::new(2, [(1, 2)]).unwrap();
        assert_eq!(collapse_to_x(&n_p(&chain, 1)), x(1).pow(2));
        assert_eq!(collapse_to_x(&n_p(&chain, 1)), f_p_bounded(&chain, ValueBounds::level(1)));
        assert!(collapse_to_x(&BiPoly { m: 0, value: CPoly::zero() }).is_zero());
    }

    #[test]
    fn spq_checker_on_n_p() {
        let fam: Vec<CPoly> = (0..=3).map(|m| n_p(&example_poset(), m).value).collect();
        let rep = check_spq_membership(&fam, 3);
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn spq_checker_on_p1q1() {
        // h_0 = 0, h_m = p_1 q_1
        let fam = vec![CPoly::zero(), pp(1) * qq(1), pp(1) * qq(1)];
        let rep = check_spq_membership(&fam, 2);
        // m=1: setting q_1 or p_1 to zero gives 0 = h_0
        assert_eq!(rep.cell(1, Some(1), "13a"), Some(true));
        assert_eq!(rep.cell(1, Some(1), "13b"), Some(true));
        // m=2, i=1, 13a: 0 versus h_1(p_1+p_2, p_3; q_2) = (p_1+p_2) q_2
        assert_eq!(rep.cell(2, Some(1), "13a"), Some(false));
        // m=2, i=2, 13a: p_1 q_1 versus h_1(p_1, p_2+p_3; q_1) = p_1 q_1
        assert_eq!(rep.cell(2, Some(2), "13a"), Some(true));
        // m=2, i=1, 13b: 0 versus h_1(p_2, p_3; q_2) = p_2 q_2
        assert_eq!(rep.cell(2, Some(1), "13b"), Some(false));
        // stability at m=1: p_2 = q_1 = 0 kills p_1 q_1, but h_0 = 0
        assert_eq!(rep.cell(1, None, "stability"), Some(true));
    }

    #[test]
    fn spq_checker_rejects_last_q() {
        let fam: Vec<CPoly> = std::iter::once(CPoly::zero()).chain((1..=3).map(qq)).collect();
        let rep = check_spq_membership(&fam, 3);
        for m in 2..=3 {
            assert_eq!(rep.cell(m, Some(m), "13a"), Some(false));
        }
    }

    #[test]
    fn isomorphism_roundtrip_for_power_sum() {
        use crate::combinatorics::Composition;
        use crate::qsym::monomial_m_virtual;
        let one = Composition::new(vec![1]).unwrap();
        let fam: Vec<CPoly> = (0..=3).map(|m| monomial_m_virtual(&one, m).value).collect();
        let rep = verify_isomorphism_roundtrip(&fam, 3);
        assert!(rep.all_pass());
        let image = fam[2].substitute(&x_to_pq_assignment(2));
        assert_eq!(image, -(pp(1) + pp(2) + pp(3)));
        let zeros = vec![CPoly::zero(); 3];
        assert!(verify_isomorphism_roundtrip(&zeros, 2).all_pass());
    }

    #[test]
    fn merge_map_basics() {
        assert_eq!(merge_values(&[1, 2, 3, 4], 2), vec![1, 2, 2, 3]);
        let p = RankedPoset::new(2, [(1, 2)]).unwrap();
        assert!(is_avoiding(&p, &[2, 3], 2));
        assert!(!is_avoiding(&p, &[1, 2], 2));
    }
}
