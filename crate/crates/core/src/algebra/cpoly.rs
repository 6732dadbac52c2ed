//! Sparse commutative polynomials with exact integer coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::var::{Family, VarName};

/// A commutative monomial: variables with positive exponents, sorted by
/// variable. Ordered graded-lexicographically (total degree first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarName, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarName) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarName, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<VarName, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(VarName, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarName) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn variables(&self) -> impl Iterator<Item = VarName> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn add_coef(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

pub(crate) fn mul_coef(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

/// Sparse polynomial: monomial -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn one() -> Self {
        CPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        CPoly::term(c, Monomial::one())
    }

    pub fn var(v: VarName) -> Self {
        CPoly::term(1, Monomial::var(v))
    }

    pub fn term(c: i64, m: Monomial) -> Self {
        let mut p = CPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Sum of the given variables, each with coefficient 1.
    pub fn sum_of_vars<I: IntoIterator<Item = VarName>>(vars: I) -> Self {
        let mut p = CPoly::zero();
        for v in vars {
            p.add_term(Monomial::var(v), 1);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = add_coef(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i64 {
        self.coefficient(&Monomial::one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> BTreeSet<VarName> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn families(&self) -> BTreeSet<Family> {
        self.variables().into_iter().map(|v| v.family).collect()
    }

    pub fn scale(&self, c: i64) -> CPoly {
        let mut out = CPoly::zero();
        for (m, a) in self.terms() {
            out.add_term(m.clone(), mul_coef(a, c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> CPoly {
        let mut acc = CPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Image under the ring morphism sending each assigned variable to its
    /// polynomial; unassigned variables map to themselves.
    pub fn substitute(&self, assignment: &BTreeMap<VarName, CPoly>) -> CPoly {
        let mut powers: BTreeMap<(VarName, u32), CPoly> = BTreeMap::new();
        let mut out = CPoly::zero();
        for (m, c) in self.terms() {
            let mut acc = CPoly::constant(c);
            for &(v, e) in m.factors() {
                let factor = match assignment.get(&v) {
                    None => CPoly::term(1, Monomial(vec![(v, e)])),
                    Some(img) => powers
                        .entry((v, e))
                        .or_insert_with(|| img.pow(e))
                        .clone(),
                };
                acc = &acc * &factor;
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        out
    }

    /// Renames variables; the map must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(VarName) -> VarName) -> CPoly {
        let mut out = CPoly::zero();
        for (m, c) in self.terms() {
            let renamed = Monomial::from_pairs(m.factors().iter().map(|&(v, e)| (f(v), e)));
            out.add_term(renamed, c);
        }
        out
    }

    /// Degree-`d` homogeneous component.
    pub fn homogeneous_part(&self, d: u32) -> CPoly {
        CPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }
}

impl<'a> std::ops::AddAssign<&'a CPoly> for CPoly {
    fn add_assign(&mut self, rhs: &'a CPoly) {
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a> std::ops::SubAssign<&'a CPoly> for CPoly {
    fn sub_assign(&mut self, rhs: &'a CPoly) {
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), c.checked_neg().expect("coefficient overflow"));
        }
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CPoly {
    type Output = CPoly;
    fn add(mut self, rhs: CPoly) -> CPoly {
        self += &rhs;
        self
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CPoly {
    type Output = CPoly;
    fn sub(mut self, rhs: CPoly) -> CPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        self.scale(-1)
    }
}

impl Neg for CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        self.scale(-1)
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.mul(m2), mul_coef(c1, c2));
            }
        }
        out
    }
}

impl Mul for CPoly {
    type Output = CPoly;
    fn mul(self, rhs: CPoly) -> CPoly {
        &self * &rhs
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (a, m.is_one()) {
                (1, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{a}")?,
                _ => write!(f, "{a}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> CPoly {
        CPoly::var(VarName::x(i))
    }

    #[test]
    fn cancellation_leaves_zero() {
        assert!((&x(1) + &(-&x(1))).is_zero());
        assert_eq!(x(1) - x(1), CPoly::zero());
    }

    #[test]
    fn square_of_binomial() {
        let s = &x(1) + &x(2);
        let sq = &s * &s;
        let expected = x(1).pow(2) + x(1).scale(2) * x(2) + x(2).pow(2);
        assert_eq!(sq, expected);
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn mixed_families_distribute() {
        let p = CPoly::var(VarName::p(1)) + CPoly::var(VarName::p(2));
        let q = CPoly::var(VarName::q(1));
        let expected = CPoly::var(VarName::p(1)) * q.clone() + CPoly::var(VarName::p(2)) * q.clone();
        assert_eq!(&p * &q, expected);
    }

    #[test]
    fn substitution_identifies_variables() {
        let f = x(1) * x(2);
        let assign = BTreeMap::from([(VarName::x(2), x(1))]);
        assert_eq!(f.substitute(&assign), x(1).pow(2));
    }

    #[test]
    fn substitution_by_zero_kills() {
        let assign = BTreeMap::from([(VarName::x(3), CPoly::zero())]);
        assert!(x(3).substitute(&assign).is_zero());
    }

    #[test]
    fn linear_substitution_hand_expansion() {
        // x1 = q1+p1+p2, x2 = q1+p2, x3 = p2
        let p = |i| CPoly::var(VarName::p(i));
        let q = |i| CPoly::var(VarName::q(i));
        let f = -x(1) + x(2) - x(3);
        let assign = BTreeMap::from([
            (VarName::x(1), q(1) + p(1) + p(2)),
            (VarName::x(2), q(1) + p(2)),
            (VarName::x(3), p(2)),
        ]);
        assert_eq!(f.substitute(&assign), -p(1) - p(2));
    }

    #[test]
    fn graded_order_puts_low_degree_first() {
        let f = x(1).pow(2) + x(2) + CPoly::one();
        let degs: Vec<u32> = f.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(degs, vec![0, 1, 2]);
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_panics() {
        let big = CPoly::constant(i64::MAX);
        let _ = &big + &CPoly::one();
    }

    #[test]
    fn display_is_readable() {
        let f = x(1).pow(2).scale(3) - x(2) + CPoly::constant(-2);
        assert_eq!(f.to_string(), "-2 - x2 + 3*x1^2");
    }
}
