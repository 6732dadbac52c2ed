//! The one-alphabet side: `F_P`, the monomial basis `M_I`, evaluation on
//! the virtual alphabet `X_m`, the change of variables `x -> (p, q)` and the
//! first functional equation.
//!
//! `M_I(X_m)` is defined as the `S^I` coefficient of the ordered product
//! `sigma_{x_1}^{-1} sigma_{x_2} sigma_{x_3}^{-1} ... sigma_{x_{2m+1}}^{-1}`,
//! i.e. the factor for `x_j` carries the exponent `(-1)^j`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{CPoly, Family, Monomial, SymSeries, VarName};
use crate::combinatorics::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::posets::{RankedPoset, ValueBounds};
use crate::report::CheckReport;
use crate::superqsym;

/// An element of QSym in the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QSymElem {
    coeffs: BTreeMap<Composition, i64>,
}

impl QSymElem {
    pub fn zero() -> Self {
        QSymElem::default()
    }

    pub fn monomial(i: Composition) -> Self {
        let mut e = QSymElem::zero();
        e.add_term(i, 1);
        e
    }

    pub fn add_term(&mut self, i: Composition, c: i64) {
        if c == 0 {
            return;
        }
        let sum = self.coefficient(&i).checked_add(c).expect("coefficient overflow");
        if sum == 0 {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, sum);
        }
    }

    pub fn coefficient(&self, i: &Composition) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.coeffs.iter().map(|(i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Truncation to `x_1..x_nvars`.
    pub fn to_poly(&self, nvars: usize) -> CPoly {
        let mut out = CPoly::zero();
        for (i, c) in self.terms() {
            out += &monomial_m(i, nvars).scale(c);
        }
        out
    }
}

/// A polynomial in `x_1..x_{2m+1}` obtained by evaluating on `X_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualEval {
    pub m: usize,
    pub value: CPoly,
}

fn x(i: usize) -> VarName {
    VarName::x(i)
}

/// `M_I` truncated to `x_1..x_nvars`.
pub fn monomial_m(i: &Composition, nvars: usize) -> CPoly {
    fn rec(parts: &[usize], start: usize, nvars: usize, acc: &mut Vec<(VarName, u32)>, out: &mut CPoly) {
        let Some((&first, rest)) = parts.split_first() else {
            out.add_term(Monomial::from_pairs(acc.iter().copied()), 1);
            return;
        };
        // leave room for the remaining parts
        let last = nvars + 1 - parts.len().min(nvars + 1);
        for a in start..=last {
            acc.push((x(a), first as u32));
            rec(rest, a + 1, nvars, acc, out);
            acc.pop();
        }
    }
    let mut out = CPoly::zero();
    if i.len() <= nvars {
        rec(i.parts(), 1, nvars, &mut Vec::new(), &mut out);
    }
    out
}

/// `F_P(x_1, ..., x_nvars)`.
pub fn f_p(p: &RankedPoset, nvars: usize) -> CPoly {
    f_p_bounded(p, ValueBounds::uniform(nvars))
}

/// `F_P` summed over order maps within the given value bounds.
pub fn f_p_bounded(p: &RankedPoset, bounds: ValueBounds) -> CPoly {
    let mut out = CPoly::zero();
    for r in p.order_maps_bounded(bounds) {
        out.add_term(Monomial::from_pairs(r.iter().map(|&v| (x(v), 1))), 1);
    }
    out
}

/// Expands a truncated quasi-symmetric polynomial in the monomial basis.
///
/// Coefficients are read off the packed monomials `x_1^{i_1} ... x_r^{i_r}`;
/// the expansion is then checked against the whole polynomial.
pub fn qsym_expand(f: &CPoly, nvars: usize) -> Result<QSymElem> {
    for v in f.variables() {
        if v.family != Family::X || v.index > nvars {
            return Err(Error::NotQuasiSymmetric(format!("variable {v} outside x_1..x_{nvars}")));
        }
    }
    let max_deg = f.degree().unwrap_or(0) as usize;
    if max_deg > nvars {
        return Err(Error::NotQuasiSymmetric(format!(
            "degree {max_deg} exceeds the {nvars} available variables"
        )));
    }
    let mut out = QSymElem::zero();
    for n in 0..=max_deg {
        for i in compositions_of(n) {
            let packed = Monomial::from_pairs(i.parts().iter().enumerate().map(|(k, &e)| (x(k + 1), e as u32)));
            out.add_term(i, f.coefficient(&packed));
        }
    }
    let rebuilt = out.to_poly(nvars);
    if &rebuilt != f {
        let diff = &rebuilt - f;
        let (m, _) = diff.terms().next().expect("nonzero difference");
        return Err(Error::NotQuasiSymmetric(format!("coefficient of {m} does not match its packing")));
    }
    Ok(out)
}

/// The generating product for `X_m` truncated at degree `cap`; holds every
/// `M_I(X_m)` with `|I| <= cap`.
#[derive(Debug, Clone)]
pub struct VirtualAlphabet {
    m: usize,
    series: SymSeries,
}

impl VirtualAlphabet {
    pub fn new(m: usize, cap: usize) -> Self {
        let mut series = SymSeries::one(cap);
        for j in 1..=2 * m + 1 {
            let sigma = SymSeries::sigma(&CPoly::var(x(j)), cap);
            let sign = if j % 2 == 1 { -1 } else { 1 };
            let factor = sigma.signed_power(sign).expect("sigma has constant term 1");
            series = series.multiply(&factor).expect("caps agree");
        }
        VirtualAlphabet { m, series }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cap(&self) -> usize {
        self.series.cap()
    }

    pub fn monomial(&self, i: &Composition) -> CPoly {
        assert!(i.weight() <= self.cap(), "composition heavier than the series cap");
        self.series.coefficient(i)
    }
}

/// `M_I(X_m)`.
pub fn monomial_m_virtual(i: &Composition, m: usize) -> VirtualEval {
    VirtualEval { m, value: VirtualAlphabet::new(m, i.weight()).monomial(i) }
}

/// `F(X_m)`, extended from the monomial basis by linearity.
pub fn eval_virtual(f: &QSymElem, m: usize) -> VirtualEval {
    let cap = f.terms().map(|(i, _)| i.weight()).max().unwrap_or(0);
    let alphabet = VirtualAlphabet::new(m, cap);
    let mut value = CPoly::zero();
    for (i, c) in f.terms() {
        value += &alphabet.monomial(i).scale(c);
    }
    VirtualEval { m, value }
}

/// Sets `x_1 = x_3 = ... = x_{2m+1} = 0`.
pub fn kill_odd_variables(v: &VirtualEval) -> CPoly {
    let assign = (0..=v.m).map(|i| (x(2 * i + 1), CPoly::zero())).collect();
    v.value.substitute(&assign)
}

/// `x_{2i+1} = q_{i+1}+...+q_m + p_{i+1}+...+p_{m+1}`,
/// `x_{2i} = q_i+...+q_m + p_{i+1}+...+p_{m+1}`.
pub fn x_to_pq_assignment(m: usize) -> BTreeMap<VarName, CPoly> {
    let mut assign = BTreeMap::new();
    for i in 0..=m {
        let tail = CPoly::sum_of_vars(((i + 1)..=m).map(VarName::q).chain(((i + 1)..=(m + 1)).map(VarName::p)));
        assign.insert(x(2 * i + 1), tail);
        if i >= 1 {
            let even = CPoly::sum_of_vars((i..=m).map(VarName::q).chain(((i + 1)..=(m + 1)).map(VarName::p)));
            assign.insert(x(2 * i), even);
        }
    }
    assign
}

/// Inverse change of variables: `p_i = x_{2i-1} - x_{2i}`,
/// `q_i = x_{2i} - x_{2i+1}`, `p_{m+1} = x_{2m+1}`.
pub fn pq_to_x_assignment(m: usize) -> BTreeMap<VarName, CPoly> {
    let mut assign = BTreeMap::new();
    for i in 1..=m {
        assign.insert(VarName::p(i), CPoly::var(x(2 * i - 1)) - CPoly::var(x(2 * i)));
        assign.insert(VarName::q(i), CPoly::var(x(2 * i)) - CPoly::var(x(2 * i + 1)));
    }
    assign.insert(VarName::p(m + 1), CPoly::var(x(2 * m + 1)));
    assign
}

pub fn substitute_x_to_pq(v: &VirtualEval) -> CPoly {
    v.value.substitute(&x_to_pq_assignment(v.m))
}

/// Checks a family `f[m]` (a polynomial in `x_1..x_{2m+1}`) against the
/// first functional equation: for `1 <= m <= m_max` and `1 <= i <= 2m`,
/// `f_m |_{x_{i+1} = x_i}` must equal `f_{m-1}` with its variables
/// renamed to `x_1..x_{i-1}, x_{i+2}..x_{2m+1}`. Also checks stability
/// `f_m(x_1..x_{2m-1}, 0, 0) = f_{m-1}`.
pub fn check_sx_membership(family: &[CPoly], m_max: usize) -> CheckReport {
    assert!(family.len() > m_max, "family must be defined for 0..=m_max");
    let mut report = CheckReport::default();
    for m in 1..=m_max {
        let f = &family[m];
        let prev = &family[m - 1];
        for i in 1..=2 * m {
            let assign = BTreeMap::from([(x(i + 1), CPoly::var(x(i)))]);
            let lhs = f.substitute(&assign);
            let rhs = prev.rename(|v| match v.family {
                Family::X if v.index >= i => x(v.index + 2),
                _ => v,
            });
            report.push(m, Some(i), "Sx", lhs == rhs);
        }
        let zero_tail = BTreeMap::from([(x(2 * m), CPoly::zero()), (x(2 * m + 1), CPoly::zero())]);
        report.push(m, None, "stability", &f.substitute(&zero_tail) == prev);
    }
    report
}

/// Checks the main identity for one poset and level:
/// `N_P` at level `m` equals `(-1)^{|V_0|} F_P(X_m)` after `x -> (p, q)`.
pub fn verify_main_theorem(p: &RankedPoset, m: usize) -> Result<bool> {
    MainTheoremChecker::default().check(p, m)
}

/// Batch form of [`verify_main_theorem`]; caches `M_I(X_m)` in `p, q`.
#[derive(Debug, Default)]
pub struct MainTheoremChecker {
    cache: HashMap<(Composition, usize), CPoly>,
}

impl MainTheoremChecker {
    /// Right-hand side `(-1)^{|V_0|} F_P(X_m)` in the variables `p, q`.
    pub fn rhs(&mut self, p: &RankedPoset, m: usize) -> Result<CPoly> {
        let n = p.size();
        let expansion = qsym_expand(&f_p(p, n), n)?;
        let mut out = CPoly::zero();
        for (i, c) in expansion.terms() {
            let key = (i.clone(), m);
            let term = self.cache.entry(key).or_insert_with(|| substitute_x_to_pq(&monomial_m_virtual(i, m)));
            out += &term.scale(c);
        }
        Ok(if p.v0().len() % 2 == 1 { -out } else { out })
    }

    pub fn check(&mut self, p: &RankedPoset, m: usize) -> Result<bool> {
        let lhs = superqsym::n_p(p, m).value;
        Ok(lhs == self.rhs(p, m)?)
    }
}
