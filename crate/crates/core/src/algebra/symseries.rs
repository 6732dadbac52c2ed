//! Truncated series in the free associative algebra on `S_1, S_2, ...`
//! with polynomial coefficients. `S^I = S_{i_1} ... S_{i_r}` is indexed by
//! the composition `I`, so multiplication concatenates compositions.

use std::collections::BTreeMap;

use super::cpoly::CPoly;
use crate::combinatorics::Composition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSeries {
    cap: usize,
    coeffs: BTreeMap<Composition, CPoly>,
}

impl SymSeries {
    pub fn zero(cap: usize) -> Self {
        SymSeries { cap, coeffs: BTreeMap::new() }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = SymSeries::zero(cap);
        s.add_term(Composition::empty(), &CPoly::one());
        s
    }

    /// `sigma_t = sum_{n <= cap} t^n S_n`.
    pub fn sigma(t: &CPoly, cap: usize) -> Self {
        let mut s = SymSeries::zero(cap);
        let mut power = CPoly::one();
        for n in 0..=cap {
            let idx = if n == 0 {
                Composition::empty()
            } else {
                Composition::new(vec![n]).expect("positive part")
            };
            s.add_term(idx, &power);
            power = &power * t;
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Adds `c * S^I`; terms above the cap are dropped.
    pub fn add_term(&mut self, index: Composition, c: &CPoly) {
        if index.weight() > self.cap || c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&index) {
            Some(old) => &old + c,
            None => c.clone(),
        };
        if !sum.is_zero() {
            self.coeffs.insert(index, sum);
        }
    }

    pub fn coefficient(&self, index: &Composition) -> CPoly {
        self.coeffs.get(index).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> CPoly {
        self.coefficient(&Composition::empty())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &CPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &SymSeries) -> Result<SymSeries> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch(self.cap, other.cap));
        }
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymSeries) -> Result<SymSeries> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> SymSeries {
        let mut out = SymSeries::zero(self.cap);
        for (i, c) in self.terms() {
            out.add_term(i.clone(), &c.scale(k));
        }
        out
    }

    pub fn multiply(&self, other: &SymSeries) -> Result<SymSeries> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch(self.cap, other.cap));
        }
        let mut out = SymSeries::zero(self.cap);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                if i.weight() + j.weight() <= self.cap {
                    out.add_term(i.concat(j), &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Two-sided inverse by the truncated geometric series
    /// `sum_k (1 - A)^k`; requires constant term 1.
    pub fn invert(&self) -> Result<SymSeries> {
        if self.constant_term() != CPoly::one() {
            return Err(Error::NotInvertible);
        }
        let defect = SymSeries::one(self.cap).sub(self)?;
        let mut power = SymSeries::one(self.cap);
        let mut acc = SymSeries::one(self.cap);
        // (1 - A) has no constant term, so its k-th power vanishes past the cap.
        for _ in 0..self.cap {
            power = power.multiply(&defect)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    /// Raises to the power `+1` or `-1`.
    pub fn signed_power(&self, sign: i32) -> Result<SymSeries> {
        match sign {
            1 => Ok(self.clone()),
            -1 => self.invert(),
            _ => panic!("signed_power expects +1 or -1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarName;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn x(i: usize) -> CPoly {
        CPoly::var(VarName::x(i))
    }

    #[test]
    fn basis_concatenates() {
        let mut s1 = SymSeries::zero(3);
        s1.add_term(comp(&[1]), &CPoly::one());
        let prod = s1.multiply(&s1).unwrap();
        let mut expected = SymSeries::zero(3);
        expected.add_term(comp(&[1, 1]), &CPoly::one());
        assert_eq!(prod, expected);
    }

    #[test]
    fn product_of_linear_factors() {
        let f = |t: CPoly| {
            let mut s = SymSeries::one(2);
            s.add_term(comp(&[1]), &t);
            s
        };
        let prod = f(x(1)).multiply(&f(x(2))).unwrap();
        let mut expected = SymSeries::one(2);
        expected.add_term(comp(&[1]), &(x(1) + x(2)));
        expected.add_term(comp(&[1, 1]), &(x(1) * x(2)));
        assert_eq!(prod, expected);
    }

    #[test]
    fn truncation_drops_heavy_terms() {
        let mut s = SymSeries::zero(2);
        s.add_term(comp(&[3]), &CPoly::one());
        assert!(s.is_zero());
        let sig = SymSeries::sigma(&x(1), 1);
        let sq = sig.multiply(&sig).unwrap();
        assert_eq!(sq.coefficient(&comp(&[1, 1])), CPoly::zero());
    }

    #[test]
    fn sigma_coefficients() {
        assert_eq!(SymSeries::sigma(&x(1), 0), SymSeries::one(0));
        let s = SymSeries::sigma(&x(1), 2);
        assert_eq!(s.constant_term(), CPoly::one());
        assert_eq!(s.coefficient(&comp(&[1])), x(1));
        assert_eq!(s.coefficient(&comp(&[2])), x(1).pow(2));
        let s5 = SymSeries::sigma(&x(3), 5);
        for n in 1..=5 {
            assert_eq!(s5.coefficient(&comp(&[n])), x(3).pow(n as u32));
        }
    }

    #[test]
    fn inverse_of_sigma_at_cap_two() {
        let s = SymSeries::sigma(&x(1), 2);
        let inv = s.invert().unwrap();
        let mut expected = SymSeries::one(2);
        expected.add_term(comp(&[1]), &-x(1));
        expected.add_term(comp(&[1, 1]), &x(1).pow(2));
        expected.add_term(comp(&[2]), &-x(1).pow(2));
        assert_eq!(inv, expected);
        assert_eq!(s.multiply(&inv).unwrap(), SymSeries::one(2));
        assert_eq!(inv.multiply(&s).unwrap(), SymSeries::one(2));
        assert_eq!(inv.invert().unwrap(), s);
    }

    #[test]
    fn inverse_of_one_and_rejection() {
        assert_eq!(SymSeries::one(4).invert().unwrap(), SymSeries::one(4));
        let mut bad = SymSeries::one(2);
        bad.add_term(Composition::empty(), &CPoly::one());
        assert_eq!(bad.invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn cap_mismatch() {
        assert!(SymSeries::one(1).multiply(&SymSeries::one(2)).is_err());
    }
}
