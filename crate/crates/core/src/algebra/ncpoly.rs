//! Noncommutative polynomials: integer combinations of words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cpoly::{add_coef, mul_coef, CPoly, Monomial};
use super::var::VarName;
use crate::error::{Error, Result};

/// A word in noncommuting letters. The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<VarName>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(v: VarName) -> Self {
        Word(vec![v])
    }

    pub fn letters(&self) -> &[VarName] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, i64>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::word(Word::empty(), 1)
    }

    pub fn word(w: Word, c: i64) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn letter(v: VarName) -> Self {
        NCPoly::word(Word::letter(v), 1)
    }

    pub fn sum_of_letters<I: IntoIterator<Item = VarName>>(vars: I) -> Self {
        let mut p = NCPoly::zero();
        for v in vars {
            p.add_term(Word::letter(v), 1);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, a) in self.terms() {
            out.add_term(w.clone(), mul_coef(a, c));
        }
        out
    }

    /// Replaces letters by linear combinations of letters, word by word and
    /// keeping letter order. Unassigned letters stay unchanged.
    pub fn letter_substitute(&self, assignment: &BTreeMap<VarName, NCPoly>) -> Result<NCPoly> {
        for (v, img) in assignment {
            if img.terms().any(|(w, _)| w.len() != 1) {
                return Err(Error::NonlinearSubstitution(v.to_string()));
            }
        }
        let mut out = NCPoly::zero();
        for (w, c) in self.terms() {
            let mut acc = NCPoly::word(Word::empty(), c);
            for &v in w.letters() {
                let img = match assignment.get(&v) {
                    Some(img) => img.clone(),
                    None => NCPoly::letter(v),
                };
                acc = &acc * &img;
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Lets all letters commute.
    pub fn abelianize(&self) -> CPoly {
        let mut out = CPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(Monomial::from_pairs(w.letters().iter().map(|&v| (v, 1))), c);
        }
        out
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(-1)
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_term(w1.concat(w2), mul_coef(c1, c2));
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.unsigned_abs();
            if a == 1 {
                write!(f, "[{w}]")?;
            } else {
                write!(f, "{a}*[{w}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(v: VarName) -> NCPoly {
        NCPoly::letter(v)
    }

    #[test]
    fn letters_do_not_commute() {
        let bd = &l(VarName::b(1)) * &l(VarName::d(1));
        let db = &l(VarName::d(1)) * &l(VarName::b(1));
        assert_ne!(bd, db);
        assert_eq!(bd.abelianize(), db.abelianize());
    }

    #[test]
    fn right_distributes() {
        let s = &l(VarName::b(1)) + &l(VarName::b(2));
        let prod = &s * &l(VarName::b(1));
        let mut expected = NCPoly::zero();
        expected.add_term(Word(vec![VarName::b(1), VarName::b(1)]), 1);
        expected.add_term(Word(vec![VarName::b(2), VarName::b(1)]), 1);
        assert_eq!(prod, expected);
    }

    #[test]
    fn empty_word_is_unit() {
        let f = &l(VarName::a(1)) + &l(VarName::a(2)).scale(3);
        assert_eq!(&NCPoly::one() * &f, f);
        assert_eq!(&f * &NCPoly::one(), f);
    }

    #[test]
    fn substitution_keeps_order() {
        let f = NCPoly::word(Word(vec![VarName::a(1), VarName::a(2)]), 1);
        let assign = BTreeMap::from([
            (VarName::a(1), &l(VarName::b(1)) + &l(VarName::d(1))),
            (VarName::a(2), l(VarName::b(1))),
        ]);
        let got = f.letter_substitute(&assign).unwrap();
        let mut expected = NCPoly::zero();
        expected.add_term(Word(vec![VarName::b(1), VarName::b(1)]), 1);
        expected.add_term(Word(vec![VarName::d(1), VarName::b(1)]), 1);
        assert_eq!(got, expected);
    }

    #[test]
    fn substitution_by_zero_kills_words() {
        let f = &NCPoly::word(Word(vec![VarName::a(1), VarName::a(2)]), 1) + &l(VarName::a(2));
        let assign = BTreeMap::from([(VarName::a(1), NCPoly::zero())]);
        assert_eq!(f.letter_substitute(&assign).unwrap(), l(VarName::a(2)));
    }

    #[test]
    fn nonlinear_image_rejected() {
        let f = l(VarName::a(1));
        let sq = &l(VarName::b(1)) * &l(VarName::b(1));
        let assign = BTreeMap::from([(VarName::a(1), sq)]);
        assert!(matches!(
            f.letter_substitute(&assign),
            Err(Error::NonlinearSubstitution(_))
        ));
    }

    #[test]
    fn antisymmetric_combination_abelianizes_to_zero() {
        let a12 = NCPoly::word(Word(vec![VarName::a(1), VarName::a(2)]), 1);
        let a21 = NCPoly::word(Word(vec![VarName::a(2), VarName::a(1)]), 1);
        assert!((&a12 - &a21).abelianize().is_zero());
    }
}
