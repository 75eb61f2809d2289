use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Rational input is first scaled row by row to integers; the scale factors
/// are divided out at the end.
pub fn det(m: &ExactMatrix) -> Result<BigRational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut scale = BigInt::one();
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    let d = bareiss(&mut a)?;
    Ok(BigRational::new(d, scale))
}

/// Determinant of a square integer matrix given as rows. The matrix is consumed as workspace.
pub fn bareiss(a: &mut [Vec<BigInt>]) -> Result<BigInt> {
    let n = a.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = &row[j] * pivot - &lead * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Consistency(format!(
                        "inexact Bareiss division at pivot {k}"
                    )));
                }
                row[j] = q;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant of a matrix known to be integral, returned as an integer.
pub fn det_integer(m: &ExactMatrix) -> Result<BigInt> {
    let d = det(m)?;
    if !d.is_integer() {
        return Err(Error::Consistency(format!(
            "determinant {d} of an integer matrix is not an integer"
        )));
    }
    Ok(d.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_cases() {
        let m = ExactMatrix::from_rows_i64(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(det(&m).unwrap(), r(-2));
        let m = ExactMatrix::from_rows_i64(&[vec![1, 6], vec![0, 4]]).unwrap();
        assert_eq!(det(&m).unwrap(), r(4));
        assert_eq!(det(&ExactMatrix::identity(5)).unwrap(), r(1));
        assert_eq!(det(&ExactMatrix::zeros(0, 0)).unwrap(), r(1));
    }

    #[test]
    fn needs_pivot_swap() {
        let m = ExactMatrix::from_rows_i64(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).unwrap();
        // 0*(0+9) - 1*(8-12) + 2*(-3-0) = -2
        assert_eq!(det(&m).unwrap(), r(-2));
    }

    #[test]
    fn rational_entries() {
        let half = BigRational::new(1.into(), 2.into());
        let m = ExactMatrix::from_fn(2, 2, |i, j| if i == j { half.clone() } else { r(0) });
        assert_eq!(det(&m).unwrap(), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn non_square_is_error() {
        assert!(matches!(det(&ExactMatrix::zeros(2, 3)), Err(Error::Dimension(_))));
    }
}
