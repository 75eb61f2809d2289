use std::collections::HashSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with exact rational coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The linear polynomial `slope * x + offset`.
    pub fn linear(slope: BigRational, offset: BigRational) -> Self {
        Self::new(vec![offset, slope])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn product<I: IntoIterator<Item = Self>>(factors: I) -> Self {
        factors
            .into_iter()
            .fold(Self::constant(BigRational::one()), |acc, f| acc.mul(&f))
    }

    /// Rising factorial `(p)_n = p (p+1) ... (p+n-1)` of a polynomial `p`.
    pub fn rising(&self, n: usize) -> Self {
        Self::product((0..n).map(|i| self.add(&Self::constant(BigRational::from_integer(i.into())))))
    }

    /// Polynomial long division, returning quotient and remainder.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or_else(|| Error::DivisionByZero {
            context: "polynomial division".into(),
            index: 0,
        })?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The unique polynomial of degree below `points.len()` through the given points.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<ExactPolynomial> {
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(x.clone()) {
            return Err(Error::InvalidInput(format!("duplicate abscissa {x}")));
        }
    }
    // Newton divided differences.
    let n = points.len();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut poly = ExactPolynomial::zero();
    for i in (0..n).rev() {
        let shift = ExactPolynomial::linear(BigRational::one(), -points[i].0.clone());
        poly = poly.mul(&shift).add(&ExactPolynomial::constant(dd[i].clone()));
    }
    Ok(poly)
}

/// Whether `f` divides `g` exactly. The zero polynomial divides only zero.
pub fn divides(f: &ExactPolynomial, g: &ExactPolynomial) -> bool {
    match g.div_rem(f) {
        Ok((_, r)) => r.is_zero(),
        Err(_) => g.is_zero(),
    }
}
