use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::det::det;
use super::matrix::{ExactMatrix, SkewMatrix};
use super::pfaffian::pfaffian;
use crate::error::{Error, Result};

/// Default cap on the number of row subsets visited by [`sum_of_minors`].
pub const DEFAULT_SUBSET_BUDGET: u64 = 1_000_000;

/// How each maximal minor is weighted in [`sum_of_minors`].
#[derive(Clone, Debug)]
pub enum MinorSelector<'a> {
    /// Every row subset counts with weight 1.
    All,
    /// The subset `K` is weighted by `Pf(A[K, K])`.
    PfaffianWeighted(&'a SkewMatrix),
}

/// Iterator over the `k`-subsets of `0..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let cur = self.current.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

pub fn binomial_u(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Sum over all `n`-row subsets `K` of the `p x n` matrix `t` of `w(K) det(t[K])`.
pub fn sum_of_minors(t: &ExactMatrix, selector: &MinorSelector<'_>, budget: u64) -> Result<BigRational> {
    let (p, n) = (t.rows(), t.cols());
    if n > p {
        return Err(Error::Dimension(format!("need at least {n} rows, got {p}")));
    }
    if let MinorSelector::PfaffianWeighted(a) = selector {
        if a.dim() != p {
            return Err(Error::Dimension(format!(
                "weight matrix is {}x{}, expected {p}x{p}",
                a.dim(),
                a.dim()
            )));
        }
        if n % 2 == 1 {
            return Err(Error::Dimension(format!("odd minor size {n} has no Pfaffian weight")));
        }
    }
    let subsets = binomial_u(p, n);
    if subsets.to_u64().is_none_or(|s| s > budget) {
        return Err(Error::ResourceLimit {
            what: format!("{subsets} row subsets"),
            budget,
        });
    }
    let mut total = BigRational::zero();
    for rows in Combinations::new(p, n) {
        let weight = match selector {
            MinorSelector::All => None,
            MinorSelector::PfaffianWeighted(a) => {
                let w = pfaffian(&a.principal(&rows))?;
                if w.is_zero() {
                    continue;
                }
                Some(w)
            }
        };
        let minor = det(&t.select_rows(&rows))?;
        total += match weight {
            Some(w) => w * minor,
            None => minor,
        };
    }
    Ok(total)
}

/// Right-hand side of the minor summation formula: `Pf(T^t A T)`.
pub fn pfaffian_congruence(t: &ExactMatrix, a: &SkewMatrix) -> Result<BigRational> {
    let m = t.transpose().mul(a.as_matrix())?.mul(t)?;
    pfaffian(&SkewMatrix::new(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn combinations_enumerate() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn identity_single_subset() {
        let t = ExactMatrix::identity(2);
        assert_eq!(sum_of_minors(&t, &MinorSelector::All, 10).unwrap(), r(1));
        let a = SkewMatrix::sign_matrix(2);
        assert_eq!(pfaffian_congruence(&t, &a).unwrap(), r(1));
    }

    #[test]
    fn sign_matrix_case() {
        let t = ExactMatrix::from_rows_i64(&[vec![1, 2], vec![3, -1], vec![0, 4], vec![2, 2]]).unwrap();
        let a = SkewMatrix::sign_matrix(4);
        assert_eq!(
            sum_of_minors(&t, &MinorSelector::All, 100).unwrap(),
            pfaffian_congruence(&t, &a).unwrap()
        );
    }

    #[test]
    fn budget_enforced() {
        let t = ExactMatrix::zeros(10, 4);
        assert!(matches!(
            sum_of_minors(&t, &MinorSelector::All, 100),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
