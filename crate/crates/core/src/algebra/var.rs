use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Variable families. `X` is the one-alphabet side, `P`/`Q` the biliteral
/// alphabet, `A` the noncommutative single alphabet and `B`/`D` its
/// two-alphabet counterpart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    P,
    Q,
    A,
    B,
    D,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::P => "p",
            Family::Q => "q",
            Family::A => "a",
            Family::B => "b",
            Family::D => "d",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "x" => Family::X,
            "p" => Family::P,
            "q" => Family::Q,
            "a" => Family::A,
            "b" => Family::B,
            "d" => Family::D,
            other => return Err(Error::Parse(format!("unknown variable family {other:?}"))),
        })
    }
}

/// An indexed variable such as `x_3` or `d_1`. Indices start at 1.
///
/// Variables order by family first, then by index. The interleaved order
/// `b_1 < d_1 < b_2 < ...` needed for leading evaluations is handled by
/// [`crate::wqsym::EvaluationVector`], not here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarName {
    pub family: Family,
    pub index: usize,
}

impl VarName {
    pub fn new(family: Family, index: usize) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        VarName { family, index }
    }

    pub fn x(i: usize) -> Self {
        Self::new(Family::X, i)
    }
    pub fn p(i: usize) -> Self {
        Self::new(Family::P, i)
    }
    pub fn q(i: usize) -> Self {
        Self::new(Family::Q, i)
    }
    pub fn a(i: usize) -> Self {
        Self::new(Family::A, i)
    }
    pub fn b(i: usize) -> Self {
        Self::new(Family::B, i)
    }
    pub fn d(i: usize) -> Self {
        Self::new(Family::D, i)
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.as_str(), self.index)
    }
}
