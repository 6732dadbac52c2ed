//! JSON encodings.
//!
//! * variable: `["x", 3]`
//! * `CPoly`: `{"terms": [{"coef": 2, "mono": [["x", 1, 2], ["p", 3, 1]]}]}`,
//!   terms in graded-lex order
//! * `NCPoly`: `{"terms": [{"coef": 1, "word": [["b", 1], ["d", 2]]}]}`
//! * `QSymElem`: `{"(2,1)": 3, "(1,1,1)": 1}`
//! * `WQElem`: `{"112": 1, "121": 2}`, packed words as digit strings, so
//!   only words with at most 9 distinct values are representable
//! * Luoto expansions: `[{"K": [[2, 3], [1]], "coef": 1}]`

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{CPoly, Family, Monomial, NCPoly, VarName, Word};
use crate::combinatorics::{Composition, SetComposition};
use crate::qsym::QSymElem;
use crate::wqsym::{PackedWord, WQElem};

impl Serialize for VarName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.family.as_str(), self.index).serialize(s)
    }
}

fn var_from_parts<E: serde::de::Error>(family: &str, index: usize) -> Result<VarName, E> {
    let family: Family = family.parse().map_err(E::custom)?;
    if index == 0 {
        return Err(E::custom("variable indices start at 1"));
    }
    Ok(VarName::new(family, index))
}

impl<'de> Deserialize<'de> for VarName {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (family, index) = <(String, usize)>::deserialize(d)?;
        var_from_parts(&family, index)
    }
}

#[derive(Serialize, Deserialize)]
struct CTerm {
    coef: i64,
    mono: Vec<(String, usize, u32)>,
}

#[derive(Serialize, Deserialize)]
struct CTerms<T> {
    terms: Vec<T>,
}

impl Serialize for CPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(m, c)| CTerm {
                coef: c,
                mono: m.factors().iter().map(|&(v, e)| (v.family.as_str().to_string(), v.index, e)).collect(),
            })
            .collect();
        CTerms { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CTerms::<CTerm>::deserialize(d)?;
        let mut out = CPoly::zero();
        for t in raw.terms {
            let mut factors = Vec::with_capacity(t.mono.len());
            for (family, index, e) in t.mono {
                factors.push((var_from_parts(&family, index)?, e));
            }
            out.add_term(Monomial::from_pairs(factors), t.coef);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct NCTerm {
    coef: i64,
    word: Vec<VarName>,
}

impl Serialize for NCPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.terms().map(|(w, c)| NCTerm { coef: c, word: w.letters().to_vec() }).collect();
        CTerms { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NCPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CTerms::<NCTerm>::deserialize(d)?;
        let mut out = NCPoly::zero();
        for t in raw.terms {
            out.add_term(Word(t.word), t.coef);
        }
        Ok(out)
    }
}

impl Serialize for QSymElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i64> = self.terms().map(|(i, c)| (i.to_string(), c)).collect();
        map.serialize(s)
    }
}

fn parse_composition(key: &str) -> Option<Composition> {
    let inner = key.trim().strip_prefix('(')?.strip_suffix(')')?;
    if inner.trim().is_empty() {
        return Some(Composition::empty());
    }
    let parts: Option<Vec<usize>> = inner.split(',').map(|p| p.trim().parse().ok()).collect();
    Composition::new(parts?).ok()
}

impl<'de> Deserialize<'de> for QSymElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, i64>::deserialize(d)?;
        let mut out = QSymElem::zero();
        for (key, c) in map {
            let i = parse_composition(&key).ok_or_else(|| D::Error::custom(format!("bad composition key {key:?}")))?;
            out.add_term(i, c);
        }
        Ok(out)
    }
}

impl Serialize for WQElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = BTreeMap::new();
        for (u, c) in self.terms() {
            if u.max_value() > 9 {
                return Err(S::Error::custom(format!("packed word {u:?} uses more than 9 values")));
            }
            map.insert(u.to_string(), c);
        }
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WQElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, i64>::deserialize(d)?;
        let mut out = WQElem::zero();
        for (key, c) in map {
            let letters: Option<Vec<usize>> =
                key.chars().map(|ch| ch.to_digit(10).filter(|&v| v > 0).map(|v| v as usize)).collect();
            let letters = letters.ok_or_else(|| D::Error::custom(format!("bad packed word {key:?}")))?;
            out.add_term(PackedWord::new(letters).map_err(D::Error::custom)?, c);
        }
        Ok(out)
    }
}

/// One entry of a Luoto expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LuotoTerm {
    #[serde(rename = "K")]
    pub k: SetComposition,
    pub coef: i64,
}

pub fn luoto_terms(expansion: &BTreeMap<SetComposition, i64>) -> Vec<LuotoTerm> {
    expansion.iter().map(|(k, &c)| LuotoTerm { k: k.clone(), coef: c }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn cpoly_round_trip() {
        let f = CPoly::var(VarName::x(1)).pow(2) * CPoly::var(VarName::p(3)) - CPoly::constant(4);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            json!({"terms": [{"coef": -4, "mono": []}, {"coef": 1, "mono": [["x", 1, 2], ["p", 3, 1]]}]})
        );
        assert_eq!(serde_json::from_value::<CPoly>(v).unwrap(), f);
        assert!(serde_json::from_value::<CPoly>(json!({"terms": [{"coef": 1, "mono": [["y", 1, 1]]}]})).is_err());
        assert!(serde_json::from_value::<CPoly>(json!({"terms": [{"coef": 1, "mono": [["x", 0, 1]]}]})).is_err());
    }

    #[test]
    fn ncpoly_round_trip() {
        let mut f = NCPoly::zero();
        f.add_term(Word(vec![VarName::b(1), VarName::d(2)]), 3);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v, json!({"terms": [{"coef": 3, "word": [["b", 1], ["d", 2]]}]}));
        assert_eq!(serde_json::from_value::<NCPoly>(v).unwrap(), f);
    }

    #[test]
    fn qsym_round_trip() {
        let mut e = QSymElem::zero();
        e.add_term(Composition::new(vec![2, 1]).unwrap(), 3);
        e.add_term(Composition::new(vec![1, 1, 1]).unwrap(), 1);
        e.add_term(Composition::empty(), 2);
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v, json!({"(2,1)": 3, "(1,1,1)": 1, "()": 2}));
        assert_eq!(serde_json::from_value::<QSymElem>(v).unwrap(), e);
        assert!(serde_json::from_value::<QSymElem>(json!({"(0,1)": 1})).is_err());
    }

    #[test]
    fn wqsym_round_trip() {
        let mut e = WQElem::zero();
        e.add_term(PackedWord::new(vec![1, 1, 2]).unwrap(), 1);
        e.add_term(PackedWord::new(vec![1, 2, 1]).unwrap(), 2);
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v, json!({"112": 1, "121": 2}));
        assert_eq!(serde_json::from_value::<WQElem>(v).unwrap(), e);
        assert!(serde_json::from_value::<WQElem>(json!({"13": 1})).is_err());
        let long = PackedWord::new((1..=10).collect()).unwrap();
        let mut big = WQElem::zero();
        big.add_term(long, 1);
        assert!(serde_json::to_value(&big).is_err());
    }

    #[test]
    fn luoto_terms_shape() {
        let k = SetComposition::new(vec![vec![2, 3], vec![1]]).unwrap();
        let v = serde_json::to_value(luoto_terms(&BTreeMap::from([(k, 1)]))).unwrap();
        assert_eq!(v, json!([{"K": [[2, 3], [1]], "coef": 1}]));
    }
}
