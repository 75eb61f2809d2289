//! Product formulas for the signed counts, and the determinant identities used
//! to derive them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::count::{Method, SignConvention, SignedCount};
use crate::error::{Error, Result};
use crate::exactalg::{det, interpolate, ExactMatrix, ExactPolynomial};
use crate::lgv::{stcpp_even_matrix, stcpp_enum_odd_a, OddCase};
use crate::pp::{BoxDims, SymmetryClass};
use crate::qseries::{binom, binom_rational, factorial, macmahon_box, rat, shifted_factorial};

fn integral(v: BigRational, what: &str) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::Consistency(format!("{what} evaluated to the non-integer {v}")));
    }
    Ok(v.to_integer())
}

fn fact(n: i64) -> Result<BigRational> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of {n}")));
    }
    Ok(BigRational::from_integer(factorial(n as u64)))
}

fn half(n: i64) -> BigRational {
    BigRational::new(n.into(), 2.into())
}

/// The closed-form results, by class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T1Tc,
    T2Stc,
    T3StcOddShape,
    T4Cstc,
    T5Tssc,
    T6Sc,
    T7Cssc,
    ConjScOdd,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T1Tc,
        TheoremId::T2Stc,
        TheoremId::T3StcOddShape,
        TheoremId::T4Cstc,
        TheoremId::T5Tssc,
        TheoremId::T6Sc,
        TheoremId::T7Cssc,
        TheoremId::ConjScOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1Tc => "tc",
            TheoremId::T2Stc => "stc",
            TheoremId::T3StcOddShape => "stc-odd-shape",
            TheoremId::T4Cstc => "cstc",
            TheoremId::T5Tssc => "tssc",
            TheoremId::T6Sc => "sc",
            TheoremId::T7Cssc => "cssc",
            TheoremId::ConjScOdd => "sc-odd",
        }
    }

    /// Box shape in terms of the parameters.
    pub fn signature(self) -> &'static str {
        match self {
            TheoremId::T1Tc => "a x a x 2b",
            TheoremId::T2Stc => "2α x 2α x 2b",
            TheoremId::T3StcOddShape => "(2α+1) x (2α+1) x 2b",
            TheoremId::T4Cstc | TheoremId::T5Tssc | TheoremId::T7Cssc => "2α x 2α x 2α",
            TheoremId::T6Sc => "a x b x c, all even",
            TheoremId::ConjScOdd => "a x b x c, a even, b and c odd",
        }
    }

    pub fn class(self) -> SymmetryClass {
        use SymmetryClass::*;
        match self {
            TheoremId::T1Tc => TransposeComplementary,
            TheoremId::T2Stc | TheoremId::T3StcOddShape => SymmetricTransposeComplementary,
            TheoremId::T4Cstc => CyclicallySymmetricTransposeComplementary,
            TheoremId::T5Tssc => TotallySymmetricSelfComplementary,
            TheoremId::T6Sc | TheoremId::ConjScOdd => SelfComplementary,
            TheoremId::T7Cssc => CyclicallySymmetricSelfComplementary,
        }
    }
}

/// Transpose-complementary, box `a x a x 2b`: 0 for `a` even and `b` odd, else
/// `prod_{j=1}^{ceil(a/2)-1} (floor(b/2)+j) (a-j)_b / (j)_{b+1}`.
pub fn thm1_tcpp(a: u32, b: u32) -> Result<BigInt> {
    if a == 0 {
        return Ok(BigInt::one());
    }
    if a.is_multiple_of(2) && b % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let (a, b) = (a as i64, b as u64);
    let mut acc = BigRational::one();
    for j in 1..=(a + 1) / 2 - 1 {
        acc *= rat(b as i64 / 2 + j) * shifted_factorial(&rat(a - j), b) / shifted_factorial(&rat(j), b + 1);
    }
    integral(acc, "tc product")
}

/// Symmetric transpose-complementary, box `2α x 2α x 2b`.
pub fn thm2_stcpp(alpha: u32, b: u32) -> Result<BigInt> {
    if alpha == 0 {
        return Ok(BigInt::one());
    }
    if b % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let (alpha, b) = (alpha as i64, b as i64);
    let (terms, len) = if alpha % 2 == 0 { (alpha / 2, alpha - 1) } else { ((alpha - 1) / 2, alpha) };
    let mut acc = BigRational::one();
    for k in 1..=terms {
        acc *= shifted_factorial(&rat(b + 2 * k), len as u64) / shifted_factorial(&rat(2 * k), len as u64);
    }
    integral(acc, "stc product")
}

/// The factor that the odd-side Pfaffian is forced to contain, as a polynomial in `b`.
pub fn thm3_forced_product(alpha: u32, case: OddCase) -> ExactPolynomial {
    let alpha = alpha as i64;
    let b = || ExactPolynomial::linear(rat(1), rat(0));
    let scaled = |shift: BigRational| ExactPolynomial::linear(half(1), shift);
    match case {
        OddCase::MTilde => {
            let mut f: Vec<_> = (1..=alpha / 2).map(|k| scaled(rat(k)).rising((alpha / 2 + 1) as usize)).collect();
            f.push(b().add(&ExactPolynomial::constant(rat(2 * alpha + 2))));
            ExactPolynomial::product(f)
        }
        OddCase::M => {
            let mut f: Vec<_> = (1..=alpha / 2)
                .map(|k| scaled(half(-1) + rat(k)).rising((alpha / 2 + 1) as usize))
                .collect();
            f.push(b().sub(&ExactPolynomial::constant(rat(1))));
            ExactPolynomial::product(f)
        }
        OddCase::MPrime => ExactPolynomial::product(
            (1..=(alpha + 1) / 2).map(|i| scaled(half(alpha - 1) - rat(i) + rat(2)).rising((2 * i - 1) as usize)),
        ),
        OddCase::MDoublePrime => ExactPolynomial::product(
            (1..=(alpha + 1) / 2).map(|i| scaled(half(alpha) - rat(i) + rat(1)).rising((2 * i - 1) as usize)),
        ),
    }
}

/// Degree claimed for the polynomial left after dividing out the forced product.
pub fn thm3_claimed_degree(alpha: u32) -> usize {
    let alpha = alpha as usize;
    if alpha.is_multiple_of(2) {
        (alpha / 2) * (alpha / 2)
    } else {
        (alpha * alpha - 1) / 4
    }
}

/// Result of fitting the odd-side Pfaffian with a polynomial in `b` and dividing out the forced product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm3Report {
    pub alpha: u32,
    pub case: OddCase,
    pub samples: Vec<u32>,
    /// The signed count as a polynomial in `b`, valid for `b` of the sampled parity.
    pub polynomial: ExactPolynomial,
    pub forced: ExactPolynomial,
    pub quotient: ExactPolynomial,
    pub remainder: ExactPolynomial,
    pub claimed_degree: usize,
}

impl Thm3Report {
    pub fn divisible(&self) -> bool {
        self.remainder.is_zero()
    }

    /// Degree of the quotient; the zero polynomial is reported as degree 0.
    pub fn quotient_degree(&self) -> usize {
        self.quotient.degree().unwrap_or(0)
    }

    pub fn degree_matches(&self) -> bool {
        self.quotient_degree() == self.claimed_degree
    }
}

/// Number of samples [`thm3_structure_check`] needs: the degree the polynomial
/// would have if the claim held, plus one point to fit and one to confirm the fit.
pub fn thm3_required_samples(alpha: u32, case: OddCase) -> usize {
    thm3_forced_product(alpha, case).degree().unwrap_or(0) + thm3_claimed_degree(alpha) + 2
}

/// The first `count` values of `b` with the given parity.
pub fn thm3_default_samples(alpha: u32, parity: u32, count: usize) -> Vec<u32> {
    let _ = alpha;
    (0..count as u32).map(|t| 2 * t + parity % 2).collect()
}

/// Interpolates the odd-side Pfaffian over `b_samples` (all of one parity) and
/// divides out the forced product.
///
/// The last sample is held back to confirm the fitted polynomial.
pub fn thm3_structure_check(alpha: u32, b_samples: &[u32]) -> Result<Thm3Report> {
    let Some(&first) = b_samples.first() else {
        return Err(Error::InsufficientSamples { needed: 2, got: 0 });
    };
    if b_samples.iter().any(|b| b % 2 != first % 2) {
        return Err(Error::InvalidInput("samples must all have the same parity".into()));
    }
    let case = OddCase::of(alpha, first);
    let needed = thm3_required_samples(alpha, case);
    if b_samples.len() < needed {
        return Err(Error::InsufficientSamples { needed, got: b_samples.len() });
    }
    let mut points = Vec::with_capacity(b_samples.len());
    for &b in b_samples {
        let v = stcpp_enum_odd_a(alpha, b)?.value;
        points.push((rat(b as i64), BigRational::from_integer(v)));
    }
    let (check, fit) = points.split_last().expect("nonempty");
    let polynomial = interpolate(fit)?;
    if polynomial.eval(&check.0) != check.1 {
        return Err(Error::InsufficientSamples { needed: b_samples.len() + 1, got: b_samples.len() });
    }
    let forced = thm3_forced_product(alpha, case);
    let (quotient, remainder) = polynomial.div_rem(&forced)?;
    Ok(Thm3Report {
        alpha,
        case,
        samples: b_samples.to_vec(),
        polynomial,
        forced,
        quotient,
        remainder,
        claimed_degree: thm3_claimed_degree(alpha),
    })
}

fn asm_like_product(alpha: u32) -> Result<BigInt> {
    let alpha = alpha as i64;
    let mut acc = BigRational::one();
    for k in 1..=(alpha - 1) / 2 {
        acc *= fact(6 * k - 2)? / fact(2 * k + alpha - 1)?;
    }
    integral(acc, "cstc/tssc product")
}

/// Cyclically symmetric transpose-complementary, cube of side `2α`.
pub fn thm4_cstcpp(alpha: u32) -> Result<BigInt> {
    if alpha == 0 {
        return Ok(BigInt::one());
    }
    if alpha.is_multiple_of(2) {
        return Ok(BigInt::zero());
    }
    let p = asm_like_product(alpha)?;
    Ok(&p * &p)
}

/// Totally symmetric self-complementary, cube of side `2α`.
pub fn thm5_tsscpp(alpha: u32) -> Result<BigInt> {
    if alpha == 0 {
        return Ok(BigInt::one());
    }
    if alpha.is_multiple_of(2) {
        return Ok(BigInt::zero());
    }
    asm_like_product(alpha)
}

fn check_even(a: u32, b: u32, c: u32) -> Result<()> {
    if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "the even-side product needs all sides even, got {a}x{b}x{c}"
        )));
    }
    Ok(())
}

/// Self-complementary with even sides: `B(a/2, b/2, c/2)`.
pub fn thm6_scpp(a: u32, b: u32, c: u32) -> Result<BigInt> {
    check_even(a, b, c)?;
    Ok(macmahon_box(a as u64 / 2, b as u64 / 2, c as u64 / 2))
}

/// `prod_{k=0}^{α-1} (3k+1)! / (α+k)!`, the number of `α x α` alternating sign matrices.
pub fn thm7_product(alpha: u32) -> Result<BigInt> {
    let alpha = alpha as i64;
    let mut acc = BigRational::one();
    for k in 0..alpha {
        acc *= fact(3 * k + 1)? / fact(alpha + k)?;
    }
    integral(acc, "cssc product")
}

/// Cyclically symmetric self-complementary, cube of side `2α`. Only the absolute
/// value is proven; the sign is tagged as conjectured.
pub fn thm7_csscpp(alpha: u32) -> Result<SignedCount> {
    Ok(SignedCount::new(
        thm7_product(alpha)?,
        Method::Formula,
        SymmetryClass::CyclicallySymmetricSelfComplementary,
        BoxDims::cube(2 * alpha),
    )
    .with_convention(SignConvention::ConjecturedPositive))
}

fn b4(x: i64, y: i64, z: i64) -> Result<BigInt> {
    if x < 0 || y < 0 || z < 0 {
        return Err(Error::Consistency(format!("negative box B({x},{y},{z})")));
    }
    Ok(macmahon_box(x as u64, y as u64, z as u64))
}

/// Conjectured absolute value for `a` even and `b`, `c` odd, by the residues of `a`, `b`, `c` mod 4.
pub fn conj_scpp_odd(a: u32, b: u32, c: u32) -> Result<BigInt> {
    if a % 2 == 1 || b.is_multiple_of(2) || c.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "the conjectured product needs a even and b, c odd, got {a}x{b}x{c}"
        )));
    }
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let sq = |v: BigInt| &v * &v;
    let v = match (a % 4, b % 4, c % 4) {
        (0, 3, 3) => {
            let (x, y, z) = (a / 4, (b + 1) / 4, (c + 1) / 4);
            sq(b4(x, y, z)?) * b4(x, (b - 3) / 4, z)? * b4(x, y, (c - 3) / 4)?
        }
        (0, 1, 1) => {
            let (x, y, z) = (a / 4, (b - 1) / 4, (c - 1) / 4);
            sq(b4(x, y, z)?) * b4(x, (b + 3) / 4, z)? * b4(x, y, (c + 3) / 4)?
        }
        (2, 3, 3) => {
            let (y, z) = ((b + 1) / 4, (c + 1) / 4);
            sq(b4((a - 2) / 4, y, z)?) * b4((a + 2) / 4, (b - 3) / 4, z)? * b4((a + 2) / 4, y, (c - 3) / 4)?
        }
        (2, 1, 1) => {
            let (y, z) = ((b - 1) / 4, (c - 1) / 4);
            sq(b4((a + 2) / 4, y, z)?) * b4((a - 2) / 4, (b + 3) / 4, z)? * b4((a - 2) / 4, y, (c + 3) / 4)?
        }
        (0, 1, 3) => {
            let (x, y, z) = (a / 4, (b - 1) / 4, (c + 1) / 4);
            sq(b4(x, y, z)?) * b4(x, y, z)? * b4(x, (b + 3) / 4, (c - 3) / 4)?
        }
        (0, 3, 1) => {
            let (x, y, z) = (a / 4, (b + 1) / 4, (c - 1) / 4);
            sq(b4(x, y, z)?) * b4(x, y, z)? * b4(x, (b - 3) / 4, (c + 3) / 4)?
        }
        _ => BigInt::zero(),
    };
    Ok(v)
}

/// Closed-form signed count for a class and box, when one is known.
pub fn formula_count(class: SymmetryClass, bx: BoxDims) -> Result<SignedCount> {
    use SymmetryClass::*;
    class.check_box(bx)?;
    let [a, _, c] = bx.dims();
    let done = |v: BigInt| SignedCount::new(v, Method::Formula, class, bx);
    match class {
        TransposeComplementary => Ok(done(thm1_tcpp(a, c / 2)?)),
        SymmetricTransposeComplementary if a % 2 == 0 => Ok(done(thm2_stcpp(a / 2, c / 2)?)),
        SymmetricTransposeComplementary => Err(Error::Unsupported(format!(
            "no closed form for class {class} in the {bx} box with odd side"
        ))),
        CyclicallySymmetricTransposeComplementary => Ok(done(thm4_cstcpp(a / 2)?)),
        TotallySymmetricSelfComplementary => {
            Ok(done(thm5_tsscpp(a / 2)?).with_convention(SignConvention::PathNormalized))
        }
        SelfComplementary => {
            let [a, b, c] = bx.dims();
            if a % 2 == 0 && b % 2 == 0 && c % 2 == 0 {
                Ok(done(thm6_scpp(a, b, c)?))
            } else {
                Ok(done(conj_scpp_odd(a, b, c)?).with_convention(SignConvention::AbsoluteValue))
            }
        }
        CyclicallySymmetricSelfComplementary => thm7_csscpp(a / 2),
        _ => Err(Error::Unsupported(format!("no closed form for class {class}"))),
    }
}

/// Both sides of an exact identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `det (X_j+A_n)...(X_j+A_{i+1}) (X_j+B_i)...(X_j+B_2)` against
/// `prod_{i<j} (X_i-X_j) prod_{2<=i<=j<=n} (B_i-A_j)`.
///
/// `a` and `b` hold `A_2..A_n` and `B_2..B_n`.
pub fn lemma_detl(x: &[BigRational], a: &[BigRational], b: &[BigRational]) -> Result<IdentityCheck> {
    let n = x.len();
    if n == 0 || a.len() + 1 != n || b.len() + 1 != n {
        return Err(Error::Dimension(format!(
            "need n >= 1 values X and n-1 values each of A and B, got {}, {}, {}",
            n,
            a.len(),
            b.len()
        )));
    }
    // A_k is a[k-2], B_k is b[k-2].
    let m = ExactMatrix::from_fn(n, n, |i, j| {
        let (i, xj) = (i + 1, &x[j]);
        let mut e = BigRational::one();
        for k in i + 1..=n {
            e *= xj + &a[k - 2];
        }
        for k in 2..=i {
            e *= xj + &b[k - 2];
        }
        e
    });
    let mut rhs = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            rhs *= &x[i] - &x[j];
        }
    }
    for i in 2..=n {
        for j in i..=n {
            rhs *= &b[i - 2] - &a[j - 2];
        }
    }
    Ok(IdentityCheck { lhs: det(&m)?, rhs })
}

pub fn lemma_detl_check(x: &[BigRational], a: &[BigRational], b: &[BigRational]) -> Result<bool> {
    Ok(lemma_detl(x, a, b)?.holds())
}

/// `det_{1<=i,j<=α} C(β+j, 2j-i-γ)` against its product evaluation.
pub fn lemma_2ji(alpha: u32, beta: i64, gamma: i64) -> Result<IdentityCheck> {
    if gamma != 0 && gamma != 1 {
        return Err(Error::InvalidInput(format!("γ must be 0 or 1, got {gamma}")));
    }
    let n = alpha as i64;
    let m = ExactMatrix::from_int_fn(n as usize, n as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        binom(beta + j, 2 * j - i - gamma)
    });
    let mut rhs = BigRational::one();
    for j in 1..=n {
        rhs *= fact(beta + j)? * fact(j - 1)? * shifted_factorial(&rat(2 * beta + gamma + j + 1), (j - 1) as u64)
            / (fact(2 * j - 1 - gamma)? * fact(beta + gamma + j - 1)?);
    }
    Ok(IdentityCheck { lhs: det(&m)?, rhs })
}

/// `det M` of the even-side matrix against
/// `(prod_k (b+2k)_{α-1} / prod_k (2k)_{α-1})^2` for `b` even, 0 otherwise. Requires `α` even.
pub fn lemma_m1(alpha: u32, b: u32) -> Result<IdentityCheck> {
    if alpha % 2 == 1 {
        return Err(Error::Unsupported(format!("α must be even, got {alpha}")));
    }
    let lhs = det(&stcpp_even_matrix(alpha, b)?.matrix)?;
    let rhs = if b % 2 == 1 {
        BigRational::zero()
    } else {
        let (alpha, b) = (alpha as i64, b as i64);
        let mut q = BigRational::one();
        for k in 1..=alpha / 2 {
            q *= shifted_factorial(&rat(b + 2 * k), (alpha - 1) as u64)
                / shifted_factorial(&rat(2 * k), (alpha - 1) as u64);
        }
        &q * &q
    };
    Ok(IdentityCheck { lhs, rhs })
}

/// `det_{0<=i,j<=n-1} C(μ+i+j, 2i-j)` against
/// `(-1)^[n ≡ 3 mod 4] 2^C(n-1,2) prod_{i=1}^{n-1} (μ+i+1)_{floor((i+1)/2)} (-μ-3n+i+3/2)_{floor(i/2)} / (i)_i`.
pub fn mrr_det(mu: &BigRational, n: u32) -> Result<IdentityCheck> {
    let n64 = n as i64;
    let m = ExactMatrix::from_fn(n as usize, n as usize, |i, j| {
        let (i, j) = (i as i64, j as i64);
        binom_rational(&(mu + rat(i + j)), 2 * i - j)
    });
    let mut rhs = if n % 4 == 3 { -BigRational::one() } else { BigRational::one() };
    if n64 >= 1 {
        let e = ((n64 - 1) * (n64 - 2) / 2) as u64;
        rhs *= BigRational::from_integer(BigInt::from(2).pow(e as u32));
    }
    for i in 1..n64 {
        let p1 = shifted_factorial(&(mu + rat(i + 1)), ((i + 1) / 2) as u64);
        let p2 = shifted_factorial(&(-mu - rat(3 * n64) + rat(i) + half(3)), (i / 2) as u64);
        rhs *= p1 * p2 / shifted_factorial(&rat(i), i as u64);
    }
    Ok(IdentityCheck { lhs: det(&m)?, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::divides;
    use crate::lgv::{cstcpp_reduced_det, tsscpp_reduced_det};
    use crate::oracle::count_asm;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn thm1_examples() {
        assert_eq!(thm1_tcpp(2, 1).unwrap(), 0.into());
        for b in 0..6 {
            assert_eq!(thm1_tcpp(1, b).unwrap(), 1.into());
        }
        assert_eq!(thm1_tcpp(3, 1).unwrap(), 1.into());
        assert_eq!(thm1_tcpp(5, 3).unwrap(), 15.into());
    }

    #[test]
    fn thm2_examples() {
        assert_eq!(thm2_stcpp(2, 2).unwrap(), 2.into());
        for alpha in 1..6 {
            assert_eq!(thm2_stcpp(alpha, 1).unwrap(), 0.into());
        }
        assert_eq!(thm2_stcpp(2, 0).unwrap(), 1.into());
        assert_eq!(thm2_stcpp(3, 2).unwrap(), 5.into());
        assert_eq!(thm2_stcpp(4, 2).unwrap(), 14.into());
    }

    #[test]
    fn thm4_thm5_examples() {
        assert_eq!(thm4_cstcpp(1).unwrap(), 1.into());
        assert_eq!(thm4_cstcpp(2).unwrap(), 0.into());
        assert_eq!(thm4_cstcpp(3).unwrap(), 1.into());
        assert_eq!(thm5_tsscpp(1).unwrap(), 1.into());
        assert_eq!(thm5_tsscpp(2).unwrap(), 0.into());
        assert_eq!(thm5_tsscpp(3).unwrap(), 1.into());
        // 4!/6! * 10!/8! = 3
        assert_eq!(thm5_tsscpp(5).unwrap(), 3.into());
        for alpha in (1..=13).step_by(2) {
            let r = cstcpp_reduced_det(alpha).unwrap();
            assert_eq!(thm4_cstcpp(alpha).unwrap(), &r * &r);
            assert_eq!(thm5_tsscpp(alpha).unwrap(), tsscpp_reduced_det(alpha).unwrap());
        }
    }

    #[test]
    fn thm6_examples() {
        assert_eq!(thm6_scpp(2, 2, 2).unwrap(), 2.into());
        assert_eq!(thm6_scpp(2, 2, 4).unwrap(), 3.into());
        assert_eq!(thm6_scpp(0, 2, 2).unwrap(), 1.into());
        assert!(matches!(thm6_scpp(2, 3, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn thm7_examples() {
        let v: Vec<BigInt> = (1..=3).map(|a| thm7_csscpp(a).unwrap().value).collect();
        assert_eq!(v, vec![1.into(), 2.into(), 7.into()]);
        assert_eq!(thm7_csscpp(2).unwrap().sign_convention, SignConvention::ConjecturedPositive);
        for n in 0..8 {
            assert_eq!(thm7_product(n).unwrap(), count_asm(n));
        }
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conj_scpp_odd(2, 1, 3).unwrap(), 0.into());
        assert_eq!(conj_scpp_odd(6, 5, 3).unwrap(), 0.into());
        assert_eq!(conj_scpp_odd(4, 3, 3).unwrap(), 4.into());
        assert_eq!(conj_scpp_odd(0, 3, 5).unwrap(), 1.into());
        assert!(matches!(conj_scpp_odd(3, 3, 3), Err(Error::Unsupported(_))));
        assert!(matches!(conj_scpp_odd(2, 2, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn thm3_small_cases() {
        for parity in 0..2 {
            let case = OddCase::of(1, parity);
            let s = thm3_default_samples(1, parity, thm3_required_samples(1, case));
            let r = thm3_structure_check(1, &s).unwrap();
            assert!(r.divisible());
            assert_eq!(r.quotient_degree(), 0);
            assert!(r.degree_matches());
        }
        let s = thm3_default_samples(2, 1, thm3_required_samples(2, OddCase::M));
        let r = thm3_structure_check(2, &s).unwrap();
        assert!(divides(&ExactPolynomial::from_i64(&[-1, 1]), &r.polynomial));
        assert!(r.divisible());
    }

    #[test]
    fn thm3_sample_errors() {
        assert!(matches!(thm3_structure_check(2, &[0, 2]), Err(Error::InsufficientSamples { .. })));
        assert!(matches!(thm3_structure_check(2, &[]), Err(Error::InsufficientSamples { .. })));
        assert!(matches!(thm3_structure_check(1, &[0, 1, 2, 4]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn formula_dispatch() {
        use SymmetryClass::*;
        assert_eq!(formula_count(TransposeComplementary, BoxDims::new(3, 3, 2)).unwrap().value, 1.into());
        assert_eq!(formula_count(SelfComplementary, BoxDims::new(2, 2, 2)).unwrap().value, 2.into());
        let odd = formula_count(SelfComplementary, BoxDims::new(4, 3, 3)).unwrap();
        assert_eq!((odd.value, odd.sign_convention), (4.into(), SignConvention::AbsoluteValue));
        assert!(formula_count(SymmetricTransposeComplementary, BoxDims::new(3, 3, 2)).is_err());
        assert!(formula_count(Plain, BoxDims::new(3, 3, 2)).is_err());
        assert!(matches!(formula_count(TransposeComplementary, BoxDims::new(3, 2, 2)), Err(Error::Shape { .. })));
    }

    #[test]
    fn detl_examples() {
        assert!(lemma_detl_check(&[q(5, 3)], &[], &[]).unwrap());
        let r = lemma_detl(&[rat(1), rat(2)], &[rat(0)], &[rat(1)]).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(-1), rat(-1)));
        let x = [q(1, 2), rat(3), q(-2, 7), rat(5)];
        let a = [rat(1), q(4, 3), rat(-2)];
        let b = [q(1, 5), rat(0), rat(7)];
        assert!(lemma_detl_check(&x, &a, &b).unwrap());
        assert!(lemma_detl(&x, &a[..2], &b).is_err());
    }

    #[test]
    fn lemma_2ji_examples() {
        let r = lemma_2ji(1, 2, 0).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(3), rat(3)));
        let r = lemma_2ji(2, 2, 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(4), rat(4)));
        for alpha in 1..=6 {
            for beta in 0..=6 {
                for gamma in 0..=1 {
                    assert!(lemma_2ji(alpha, beta, gamma).unwrap().holds(), "{alpha} {beta} {gamma}");
                }
            }
        }
        assert!(matches!(lemma_2ji(2, 1, 2), Err(Error::InvalidInput(_))));
        assert!(matches!(lemma_2ji(2, -3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn lemma_m1_examples() {
        let r = lemma_m1(2, 0).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(1), rat(1)));
        for b in [1, 3, 5] {
            assert_eq!(lemma_m1(2, b).unwrap().rhs, rat(0));
            assert!(lemma_m1(2, b).unwrap().holds());
        }
        assert_eq!(lemma_m1(2, 2).unwrap().lhs, rat(4));
        for alpha in [2, 4, 6] {
            for b in 0..=6 {
                assert!(lemma_m1(alpha, b).unwrap().holds(), "{alpha} {b}");
            }
        }
        assert!(lemma_m1(3, 2).is_err());
    }

    #[test]
    fn mrr_examples() {
        let r = mrr_det(&rat(1), 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(1), rat(1)));
        let r = mrr_det(&rat(1), 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(3), rat(3)));
        for n in 1..=6 {
            for mu in 0..=4 {
                assert!(mrr_det(&rat(mu), n).unwrap().holds(), "n={n} μ={mu}");
            }
        }
        assert!(mrr_det(&q(1, 3), 4).unwrap().holds());
    }
}
