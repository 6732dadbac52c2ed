//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

fn to_rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect()
}

/// Row-reduces in place and returns the pivot columns.
fn row_reduce(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (head, tail) = if i < r { m.split_at_mut(r) } else { m.split_at_mut(i) };
                let (pivot_row, target) = if i < r { (&tail[0], &mut head[i]) } else { (&head[r], &mut tail[0]) };
                for (t, pv) in target.iter_mut().zip(pivot_row.iter()) {
                    if !pv.is_zero() {
                        *t -= &f * pv;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over Q of the integer matrix with the given rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m = to_rational_rows(rows);
    row_reduce(&mut m).len()
}

/// Solves `A y = b` for square nonsingular `A`, exactly.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Result<Vec<BigRational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length must match");
    let mut m = to_rational_rows(a);
    for (row, &v) in m.iter_mut().zip(b) {
        assert_eq!(row.len(), n, "matrix must be square");
        row.push(BigRational::from_integer(BigInt::from(v)));
    }
    let pivots = row_reduce(&mut m);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::Singular);
    }
    Ok(m.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

/// Solves `A y = b` for `A` with independent columns and possibly more
/// rows than columns. `Ok(None)` when the system is inconsistent.
pub fn solve_overdetermined(a: &[Vec<i64>], b: &[i64]) -> Result<Option<Vec<BigRational>>> {
    assert_eq!(b.len(), a.len(), "right-hand side length must match");
    let cols = a.first().map_or(0, Vec::len);
    let mut m = to_rational_rows(a);
    for (row, &v) in m.iter_mut().zip(b) {
        assert_eq!(row.len(), cols, "rows must have equal length");
        row.push(BigRational::from_integer(BigInt::from(v)));
    }
    let pivots = row_reduce(&mut m);
    if pivots.contains(&cols) {
        return Ok(None);
    }
    if pivots.len() < cols {
        return Err(Error::Singular);
    }
    Ok(Some(m.into_iter().take(cols).map(|mut row| row.pop().expect("augmented column")).collect()))
}

/// Inverse of a square nonsingular integer matrix, exactly.
pub fn inverse(a: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m = to_rational_rows(a);
    for (i, row) in m.iter_mut().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        row.extend((0..n).map(|j| BigRational::from_integer(BigInt::from(i64::from(i == j)))));
    }
    let pivots = row_reduce(&mut m);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::Singular);
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Converts an exact rational to `i64`, failing unless it is an integer.
pub fn to_integer(q: &BigRational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::NonIntegral(q.to_string()));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegral(format!("{q} does not fit in i64")))
}
