//! Exact polynomial and series arithmetic.

pub mod cpoly;
pub mod linalg;
pub mod ncpoly;
pub mod symseries;
pub mod var;

pub use cpoly::{CPoly, Monomial};
pub use ncpoly::{NCPoly, Word};
pub use symseries::SymSeries;
pub use var::{Family, VarName};
