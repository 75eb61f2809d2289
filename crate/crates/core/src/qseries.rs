//! Shifted factorials, binomials, q-binomials at `q = -1`, MacMahon's box
//! product and terminating hypergeometric sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn shifted_factorial(a: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..n {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

/// Rising factorial with integer base.
pub fn shifted_factorial_int(a: i64, n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= a + i as i64;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    shifted_factorial_int(1, n)
}

/// Binomial coefficient with the polynomial extension to negative tops.
///
/// Zero for `k < 0`, and for `0 <= n < k`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    if n >= 0 {
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        return acc;
    }
    // (-1)^k binom(k - n - 1, k)
    let v = binom(k - n - 1, k);
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `binom(x, k) = x (x-1) ... (x-k+1) / k!` for rational `x`, zero for `k < 0`.
pub fn binom_rational(x: &BigRational, k: i64) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= x - rat(i);
        acc /= rat(i + 1);
    }
    acc
}

/// The Gaussian binomial `[n choose k]_q` evaluated at `q = -1`.
///
/// Zero when `k` lies outside `[0, n]` or when `n` is even and `k` odd;
/// otherwise `binom(floor(n/2), floor(k/2))`.
pub fn qbinom_minus1(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    if n % 2 == 0 && k % 2 == 1 {
        return BigInt::zero();
    }
    binom(n / 2, k / 2)
}

/// MacMahon's count of plane partitions in an `a x b x c` box,
/// `prod_{i=1}^{a} (c+i)_b / (i)_b`.
pub fn macmahon_box(a: u64, b: u64, c: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=a {
        num *= shifted_factorial_int((c + i) as i64, b);
        den *= shifted_factorial_int(i as i64, b);
    }
    num / den
}

/// Parameters of a terminating hypergeometric series `rFs[upper; lower; z]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperParams {
    pub upper: Vec<BigRational>,
    pub lower: Vec<BigRational>,
    pub argument: BigRational,
}

impl HyperParams {
    pub fn new(upper: Vec<BigRational>, lower: Vec<BigRational>, argument: BigRational) -> Result<Self> {
        let p = Self { upper, lower, argument };
        p.terms()?;
        Ok(p)
    }

    /// Index of the last nonzero term: the smallest `n` with `-n` among the upper parameters.
    pub fn terms(&self) -> Result<u64> {
        self.upper
            .iter()
            .filter(|u| u.is_integer() && !u.is_positive())
            .filter_map(|u| (-u.to_integer()).to_u64())
            .min()
            .ok_or_else(|| Error::InvalidInput("series does not terminate".into()))
    }
}

/// Exact sum of a terminating hypergeometric series.
pub fn hyper_terminating(p: &HyperParams) -> Result<BigRational> {
    let last = p.terms()?;
    let mut total = BigRational::zero();
    let mut term = BigRational::one();
    for n in 0..=last {
        total += &term;
        if n == last {
            break;
        }
        let mut num = p.argument.clone();
        for u in &p.upper {
            num *= u + rat(n as i64);
        }
        let mut den = rat(n as i64 + 1);
        for l in &p.lower {
            let f = l + rat(n as i64);
            if f.is_zero() {
                return Err(Error::DivisionByZero {
                    context: "hypergeometric lower parameter".into(),
                    index: n as usize,
                });
            }
            den *= f;
        }
        term = term * num / den;
    }
    Ok(total)
}

/// Closed form `(c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)` of the balanced
/// `3F2[a, b, -n; c, 1+a+b-c-n; 1]`.
pub fn pfaff_saalschutz_rhs(a: &BigRational, b: &BigRational, c: &BigRational, n: u64) -> Result<BigRational> {
    let den1 = shifted_factorial(c, n);
    let den2 = shifted_factorial(&(c - a - b), n);
    if den1.is_zero() || den2.is_zero() {
        return Err(Error::Domain("singular Saalschütz parameters".into()));
    }
    Ok(shifted_factorial(&(c - a), n) * shifted_factorial(&(c - b), n) / (den1 * den2))
}

/// The balanced series whose value [`pfaff_saalschutz_rhs`] predicts.
pub fn saalschutz_params(a: &BigRational, b: &BigRational, c: &BigRational, n: u64) -> HyperParams {
    let n_r = rat(n as i64);
    HyperParams {
        upper: vec![a.clone(), b.clone(), -n_r.clone()],
        lower: vec![c.clone(), BigRational::one() + a + b - c - n_r],
        argument: BigRational::one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn shifted_factorials() {
        assert_eq!(shifted_factorial(&rat(3), 2), rat(12));
        assert_eq!(shifted_factorial(&q(7, 3), 0), rat(1));
        assert_eq!(shifted_factorial(&q(1, 2), 3), q(15, 8));
        assert_eq!(shifted_factorial_int(-2, 3), BigInt::zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6.into());
        assert_eq!(binom(3, -1), 0.into());
        assert_eq!(binom(-1, 2), 1.into());
        assert_eq!(binom(-3, 3), (-10).into());
        assert_eq!(binom(2, 5), 0.into());
        assert_eq!(binom_rational(&q(1, 2), 2), q(-1, 8));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom_minus1(2, 1), 0.into());
        assert_eq!(qbinom_minus1(4, 2), 2.into());
        for n in 0..10 {
            assert_eq!(qbinom_minus1(n, 0), 1.into());
        }
        assert_eq!(qbinom_minus1(3, 4), 0.into());
        assert_eq!(qbinom_minus1(3, -1), 0.into());
    }

    #[test]
    fn macmahon() {
        assert_eq!(macmahon_box(0, 3, 3), 1.into());
        assert_eq!(macmahon_box(1, 1, 1), 2.into());
        assert_eq!(macmahon_box(2, 2, 2), 20.into());
        assert_eq!(macmahon_box(3, 3, 3), 980.into());
    }

    #[test]
    fn hypergeometric() {
        let p = HyperParams::new(vec![rat(1), rat(1), rat(-2)], vec![rat(3), rat(-2)], rat(1)).unwrap();
        assert_eq!(hyper_terminating(&p).unwrap(), q(3, 2));
        let p = HyperParams::new(vec![rat(0), rat(5)], vec![rat(2)], rat(1)).unwrap();
        assert_eq!(hyper_terminating(&p).unwrap(), rat(1));
        assert!(HyperParams::new(vec![rat(1)], vec![rat(2)], rat(1)).is_err());
        let p = HyperParams::new(vec![rat(-3)], vec![rat(-1)], rat(1)).unwrap();
        assert!(matches!(hyper_terminating(&p), Err(Error::DivisionByZero { index: 1, .. })));
    }

    #[test]
    fn saalschutz() {
        assert_eq!(pfaff_saalschutz_rhs(&rat(2), &q(1, 3), &rat(5), 0).unwrap(), rat(1));
        assert_eq!(pfaff_saalschutz_rhs(&rat(1), &rat(1), &rat(3), 2).unwrap(), q(3, 2));
        assert_eq!(pfaff_saalschutz_rhs(&rat(0), &rat(2), &q(7, 2), 4).unwrap(), rat(1));
        let lhs = hyper_terminating(&saalschutz_params(&rat(1), &rat(1), &rat(3), 2)).unwrap();
        assert_eq!(lhs, q(3, 2));
    }
}
