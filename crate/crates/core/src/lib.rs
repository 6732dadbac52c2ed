//! Exact computations with P-partition generating series.
//!
//! The crate covers the one-alphabet series `F_P` and its evaluation on the
//! signed virtual alphabet `X_m = -(x_1) + (x_2) - ... - (x_{2m+1})`, the
//! two-alphabet series `N_P` in `p`/`q` variables, the change of variables
//! between them, the two functional equations characterizing their images,
//! Young diagram coordinates, and the noncommutative Luoto basis
//! `bold F_{P_K}` of word quasi-symmetric functions.

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod json;
pub mod posets;
pub mod qsym;
pub mod report;
pub mod superqsym;
pub mod verify;
pub mod wqsym;

pub use error::{Error, Result};
