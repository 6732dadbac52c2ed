use serde::Serialize;

/// One pass/fail cell of a functional-equation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckCell {
    pub m: usize,
    /// Substitution index, absent for stability checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub equation: &'static str,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CheckReport {
    pub cells: Vec<CheckCell>,
}

impl CheckReport {
    pub fn push(&mut self, m: usize, i: Option<usize>, equation: &'static str, pass: bool) {
        self.cells.push(CheckCell { m, i, equation, pass });
    }

    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckCell> {
        self.cells.iter().filter(|c| !c.pass)
    }

    /// The outcome of a particular cell, if it was checked.
    pub fn cell(&self, m: usize, i: Option<usize>, equation: &str) -> Option<bool> {
        self.cells
            .iter()
            .find(|c| c.m == m && c.i == i && c.equation == equation)
            .map(|c| c.pass)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.cells.extend(other.cells);
    }
}
