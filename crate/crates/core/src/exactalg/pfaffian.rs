use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{ExactMatrix, SkewMatrix};
use crate::error::{Error, Result};

/// Dimension up to which the matching expansion is used.
pub const MATCHING_LIMIT: usize = 8;

/// Pfaffian of a skew-symmetric matrix.
///
/// Small matrices use the perfect-matching expansion; in debug builds the
/// elimination result is compared against it. Larger ones use skew elimination.
pub fn pfaffian(m: &SkewMatrix) -> Result<BigRational> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::Dimension(format!("Pfaffian of odd dimension {n}")));
    }
    if n <= MATCHING_LIMIT {
        let v = pfaffian_matchings(m)?;
        if cfg!(debug_assertions) {
            let w = pfaffian_elimination(m)?;
            if v != w {
                return Err(Error::Consistency(format!(
                    "Pfaffian methods disagree: matchings {v}, elimination {w}"
                )));
            }
        }
        Ok(v)
    } else {
        pfaffian_elimination(m)
    }
}

/// Pfaffian from its definition as a signed sum over perfect matchings.
pub fn pfaffian_matchings(m: &SkewMatrix) -> Result<BigRational> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::Dimension(format!("Pfaffian of odd dimension {n}")));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(expand(m.as_matrix(), &idx))
}

fn expand(m: &ExactMatrix, idx: &[usize]) -> BigRational {
    if idx.is_empty() {
        return BigRational::one();
    }
    let first = idx[0];
    let mut total = BigRational::zero();
    let mut rest: Vec<usize> = Vec::with_capacity(idx.len() - 2);
    for p in 1..idx.len() {
        let entry = &m[(first, idx[p])];
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(idx[1..].iter().enumerate().filter(|&(q, _)| q + 1 != p).map(|(_, &x)| x));
        let term = entry * expand(m, &rest);
        if p % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Pfaffian by skew-symmetric elimination, eliminating one index pair at a time.
pub fn pfaffian_elimination(m: &SkewMatrix) -> Result<BigRational> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::Dimension(format!("Pfaffian of odd dimension {n}")));
    }
    let mut c = m.as_matrix().clone();
    let mut pf = BigRational::one();
    let mut k = 0;
    while k < n {
        if c[(k, k + 1)].is_zero() {
            match (k + 2..n).find(|&j| !c[(k, j)].is_zero()) {
                Some(j) => {
                    swap_index(&mut c, k + 1, j);
                    pf = -pf;
                }
                None => return Ok(BigRational::zero()),
            }
        }
        let a = c[(k, k + 1)].clone();
        pf *= &a;
        for i in k + 2..n {
            for j in i + 1..n {
                let delta = (&c[(k + 1, i)] * &c[(k, j)] - &c[(k, i)] * &c[(k + 1, j)]) / &a;
                if delta.is_zero() {
                    continue;
                }
                let v = &c[(i, j)] + delta;
                c[(j, i)] = -v.clone();
                c[(i, j)] = v;
            }
        }
        k += 2;
    }
    Ok(pf)
}

fn swap_index(c: &mut ExactMatrix, p: usize, q: usize) {
    c.swap_rows(p, q);
    for i in 0..c.rows() {
        let t = c[(i, p)].clone();
        c[(i, p)] = c[(i, q)].clone();
        c[(i, q)] = t;
    }
}
