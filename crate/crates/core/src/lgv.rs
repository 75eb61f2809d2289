//! Nonintersecting lattice path systems for the complementation classes, and the
//! determinant and Pfaffian pipelines built on them.
//!
//! Indices in this module are 1-based, as in the matrix formulas; conversion to
//! `ExactMatrix` positions happens at the point of storage.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::count::{Method, SignConvention, SignedCount};
use crate::error::{Error, Result};
use crate::exactalg::{det, pfaffian, pfaffian_congruence, sum_of_minors, ExactMatrix, MinorSelector, SkewMatrix};
use crate::pp::{BoxDims, SymmetryClass};
use crate::qseries::{binom, binom_rational, qbinom_minus1, rat};

/// A lattice point `(x, y)`.
pub type Point = (i64, i64);

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn big(n: i64) -> BigRational {
    rat(n)
}

fn to_integer(v: BigRational, what: &str) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::Consistency(format!("{what} is not an integer: {v}")));
    }
    Ok(v.to_integer())
}

/// How the area of a path is measured for its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepWeight {
    /// Area between the path and the x-axis.
    Area2,
    /// Area between the path and the horizontal line through its end point.
    Area1,
}

/// Signed number of south/east paths from `start` to `end` with the given area sign.
pub fn path_count(start: Point, end: Point, weight: StepWeight) -> BigInt {
    let dx = end.0 - start.0;
    let dy = start.1 - end.1;
    if dx < 0 || dy < 0 {
        return BigInt::zero();
    }
    let v = qbinom_minus1(dx + dy, dx);
    match weight {
        StepWeight::Area1 => v,
        // Each of the dx east steps sits end.1 units higher than under Area1.
        StepWeight::Area2 => v * sign(dx * end.1),
    }
}

/// Paths weighted by `(-1)^area2`. Unreachable end points give 0.
pub fn path_count_signed(start: Point, end: Point) -> BigInt {
    path_count(start, end, StepWeight::Area2)
}

/// Which endpoints of a [`PathSystem`] are used by a path family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selection {
    /// Path `i` runs from `A_i` to `E_i`.
    Fixed,
    /// All end points are used; the start points are any subset of the right size.
    FreeStarts,
    /// All start points are used; the end points are a subset closed under `j -> n + 1 - j`.
    SymmetricEnds,
}

/// Start and end points with the weight rule for single paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub selection: Selection,
    pub step_weight: StepWeight,
    /// Extra sign for a path starting at `A_i`.
    pub start_signs: Vec<i64>,
    /// Extra sign for a path ending at `E_j`.
    pub end_signs: Vec<i64>,
}

impl PathSystem {
    pub fn new(starts: Vec<Point>, ends: Vec<Point>, selection: Selection, step_weight: StepWeight) -> Self {
        let (s, e) = (starts.len(), ends.len());
        Self {
            starts,
            ends,
            selection,
            step_weight,
            start_signs: vec![1; s],
            end_signs: vec![1; e],
        }
    }

    /// Sets the start signs from a function of the 1-based index.
    pub fn with_start_signs<F: Fn(i64) -> i64>(mut self, f: F) -> Self {
        self.start_signs = (1..=self.starts.len() as i64).map(f).collect();
        self
    }

    pub fn with_end_signs<F: Fn(i64) -> i64>(mut self, f: F) -> Self {
        self.end_signs = (1..=self.ends.len() as i64).map(f).collect();
        self
    }

    /// Weighted count of paths from the `i`-th start to the `j`-th end (0-based).
    pub fn weight(&self, i: usize, j: usize) -> BigInt {
        path_count(self.starts[i], self.ends[j], self.step_weight) * self.start_signs[i] * self.end_signs[j]
    }

    /// The starts-by-ends matrix of path weights.
    pub fn matrix(&self) -> ExactMatrix {
        ExactMatrix::from_int_fn(self.starts.len(), self.ends.len(), |i, j| self.weight(i, j))
    }
}

/// How a [`ClassMatrix`] is turned into a number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Evaluation {
    Determinant,
    Pfaffian,
}

/// A class matrix together with the global sign that turns its determinant
/// or Pfaffian into the signed enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatrix {
    pub matrix: ExactMatrix,
    pub evaluation: Evaluation,
    pub global_sign: i64,
    /// Which construction produced the entries.
    pub provenance: String,
}

impl ClassMatrix {
    /// The determinant or Pfaffian, without the global sign.
    pub fn raw(&self) -> Result<BigInt> {
        let v = match self.evaluation {
            Evaluation::Determinant => det(&self.matrix)?,
            Evaluation::Pfaffian => pfaffian(&SkewMatrix::new(self.matrix.clone())?)?,
        };
        to_integer(v, &self.provenance)
    }

    pub fn value(&self) -> Result<BigInt> {
        Ok(self.raw()? * self.global_sign)
    }
}

/// `M_ij = sum_r sum_l G_li G_rj sgn(r - l)`, written out as the double sum.
pub fn sign_double_sum(g: &ExactMatrix) -> ExactMatrix {
    let (p, n) = (g.rows(), g.cols());
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigRational::zero();
            for r in 0..p {
                for l in 0..p {
                    if r == l || g[(l, i)].is_zero() || g[(r, j)].is_zero() {
                        continue;
                    }
                    let t = &g[(l, i)] * &g[(r, j)];
                    if r > l {
                        acc += t;
                    } else {
                        acc -= t;
                    }
                }
            }
            m[(i, j)] = acc;
        }
    }
    m
}

/// Appends an isolated start/end pair: a new last row and column, 1 in the corner.
fn with_dummy(g: &ExactMatrix) -> ExactMatrix {
    let (p, n) = (g.rows(), g.cols());
    ExactMatrix::from_fn(p + 1, n + 1, |i, j| {
        if i < p && j < n {
            g[(i, j)].clone()
        } else if i == p && j == n {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

fn pfaffian_int(m: &ExactMatrix, what: &str) -> Result<BigInt> {
    to_integer(pfaffian(&SkewMatrix::new(m.clone())?)?, what)
}

/// Sign of a Pfaffian that must be `±1`.
fn unit_sign(m: &ExactMatrix, what: &str) -> Result<i64> {
    let v = pfaffian_int(m, what)?;
    if v.abs() != BigInt::one() {
        return Err(Error::Consistency(format!("{what} at b = 0 is {v}, expected ±1")));
    }
    Ok(if v.is_positive() { 1 } else { -1 })
}

// Transpose-complementary, box a x a x 2b.

pub fn tcpp_system(a: u32, b: u32) -> PathSystem {
    let (a, b) = (a as i64, b as i64);
    PathSystem::new(
        (1..=a).map(|i| (i - 1, b + i - 1)).collect(),
        (1..=a).map(|j| (2 * j - 2, j - 1)).collect(),
        Selection::Fixed,
        StepWeight::Area2,
    )
}

/// The `a x a` path matrix; measuring areas from the x-axis costs the sign `(-1)^(a(a-1)/2)`.
pub fn tcpp_matrix(a: u32, b: u32) -> ClassMatrix {
    let a64 = a as i64;
    ClassMatrix {
        matrix: tcpp_system(a, b).matrix(),
        evaluation: Evaluation::Determinant,
        global_sign: sign(a64 * (a64 - 1) / 2),
        provenance: format!("tcpp paths A_i=(i-1,{b}+i-1), E_j=(2j-2,j-1), area2 weight"),
    }
}

pub fn tcpp_enum(a: u32, b: u32) -> Result<SignedCount> {
    let bx = BoxDims::new(a, a, 2 * b);
    let v = tcpp_matrix(a, b).value()?;
    Ok(SignedCount::new(v, Method::Lgv, SymmetryClass::TransposeComplementary, bx))
}

// Symmetric transpose-complementary, box 2α x 2α x 2b.

/// Starts `(0, i-1)`, `i <= α+b`, ends `(2j-2, j-1)`, `j <= α`; a path from `A_i` carries `(-1)^i`.
pub fn stcpp_even_system(alpha: u32, b: u32) -> PathSystem {
    let (alpha, b) = (alpha as i64, b as i64);
    PathSystem::new(
        (1..=alpha + b).map(|i| (0, i - 1)).collect(),
        (1..=alpha).map(|j| (2 * j - 2, j - 1)).collect(),
        Selection::FreeStarts,
        StepWeight::Area1,
    )
    .with_start_signs(sign)
}

/// The path matrix `G`, with a dummy path appended when `α` is odd.
pub fn stcpp_even_g(alpha: u32, b: u32) -> ExactMatrix {
    let g = stcpp_even_system(alpha, b).matrix();
    if alpha % 2 == 1 {
        with_dummy(&g)
    } else {
        g
    }
}

fn stcpp_even_raw(alpha: u32, b: u32) -> ExactMatrix {
    sign_double_sum(&stcpp_even_g(alpha, b))
}

/// The skew matrix whose Pfaffian is the signed count; the sign is normalized so that `b = 0` gives 1.
pub fn stcpp_even_matrix(alpha: u32, b: u32) -> Result<ClassMatrix> {
    let global_sign = unit_sign(&stcpp_even_raw(alpha, 0), "stcpp Pfaffian")?;
    Ok(ClassMatrix {
        matrix: stcpp_even_raw(alpha, b),
        evaluation: Evaluation::Pfaffian,
        global_sign,
        provenance: format!(
            "stcpp a=2α: sgn double sum of G_ij=(-1)^i [i+j-2, 2j-2]_(-1){}",
            if alpha % 2 == 1 { " with dummy path" } else { "" }
        ),
    })
}

pub fn stcpp_enum_even_a(alpha: u32, b: u32) -> Result<SignedCount> {
    let bx = BoxDims::new(2 * alpha, 2 * alpha, 2 * b);
    let v = stcpp_even_matrix(alpha, b)?.value()?;
    Ok(SignedCount::new(v, Method::Lgv, SymmetryClass::SymmetricTransposeComplementary, bx))
}

/// `sum_{k=1}^{n} C(k+j-2, 2j-2) C(k+i-2, 2i-2)`.
pub fn mtilde_entry(n: i64, i: i64, j: i64) -> BigInt {
    (1..=n).map(|k| binom(k + j - 2, 2 * j - 2) * binom(k + i - 2, 2 * i - 2)).sum()
}

/// The `(α/2) x (α/2)` single-sum matrix, equal to the rows `2i` and columns
/// `2j-1` of the even-`a` matrix. Requires `α` and `b` even.
pub fn stcpp_mtilde(alpha: u32, b: u32) -> Result<ExactMatrix> {
    if alpha % 2 == 1 || b % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "the single-sum matrix needs α and b even, got α={alpha}, b={b}"
        )));
    }
    let n = (alpha as i64 + b as i64) / 2;
    let h = alpha as usize / 2;
    Ok(ExactMatrix::from_int_fn(h, h, |i, j| mtilde_entry(n, i as i64 + 1, j as i64 + 1)))
}

// Symmetric transpose-complementary, box (2α+1) x (2α+1) x 2b.

/// Name of the odd-side matrix by the parities of `α` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OddCase {
    /// α even, b odd.
    M,
    /// α even, b even.
    MTilde,
    /// α odd, b even.
    MPrime,
    /// α odd, b odd.
    MDoublePrime,
}

impl OddCase {
    pub fn of(alpha: u32, b: u32) -> Self {
        match (alpha % 2, b % 2) {
            (0, 1) => OddCase::M,
            (0, _) => OddCase::MTilde,
            (_, 0) => OddCase::MPrime,
            _ => OddCase::MDoublePrime,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OddCase::M => "M",
            OddCase::MTilde => "M~",
            OddCase::MPrime => "M'",
            OddCase::MDoublePrime => "M''",
        }
    }
}

/// Starts `(0, i-1)`, `i <= α+b`, ends `(2j-1, j-1)`, `j <= α`; a path from `A_i` carries `(-1)^i`.
pub fn stcpp_odd_system(alpha: u32, b: u32) -> PathSystem {
    let (alpha, b) = (alpha as i64, b as i64);
    PathSystem::new(
        (1..=alpha + b).map(|i| (0, i - 1)).collect(),
        (1..=alpha).map(|j| (2 * j - 1, j - 1)).collect(),
        Selection::FreeStarts,
        StepWeight::Area1,
    )
    .with_start_signs(sign)
}

pub fn stcpp_odd_g(alpha: u32, b: u32) -> ExactMatrix {
    let g = stcpp_odd_system(alpha, b).matrix();
    if alpha % 2 == 1 {
        with_dummy(&g)
    } else {
        g
    }
}

/// The skew matrix of the odd-side case, without any sign normalization.
pub fn stcpp_odd_raw(alpha: u32, b: u32) -> ExactMatrix {
    sign_double_sum(&stcpp_odd_g(alpha, b))
}

/// The odd-side class matrix. Its sign is normalized so that the empty box `b = 0` counts 1.
pub fn stcpp_odd_a_matrices(alpha: u32, b: u32) -> Result<ClassMatrix> {
    let global_sign = unit_sign(&stcpp_odd_raw(alpha, 0), "odd-side stcpp Pfaffian")?;
    Ok(ClassMatrix {
        matrix: stcpp_odd_raw(alpha, b),
        evaluation: Evaluation::Pfaffian,
        global_sign,
        provenance: format!(
            "stcpp a=2α+1, case {}: sgn double sum of G_ij=(-1)^i [i+j-1, 2j-1]_(-1)",
            OddCase::of(alpha, b).name()
        ),
    })
}

pub fn stcpp_enum_odd_a(alpha: u32, b: u32) -> Result<SignedCount> {
    let side = 2 * alpha + 1;
    let bx = BoxDims::new(side, side, 2 * b);
    let v = stcpp_odd_a_matrices(alpha, b)?.value()?;
    Ok(SignedCount::new(v, Method::Lgv, SymmetryClass::SymmetricTransposeComplementary, bx))
}

/// Closed form of the entry `(2i, 2j)` of the odd-side matrix:
/// `C(n+j, 2j) C(n+i, 2i) (j-i)/(j+i)` with `n = (α+b-1)/2`.
pub fn stcpp_odd_even_entry(alpha: u32, b: &BigRational, i: i64, j: i64) -> BigRational {
    let n = (big(alpha as i64) + b - big(1)) / big(2);
    binom_rational(&(&n + big(j)), 2 * j) * binom_rational(&(&n + big(i)), 2 * i) * big(j - i) / big(j + i)
}

/// Determinant of the odd-side `G` at `b = 1` with the alternating column `(1, -1, ..., 1)` appended.
///
/// It equals `(-1)^α` times the sum of the maximal minors of `G`.
pub fn stcpp_odd_b1_column_det(alpha: u32) -> Result<BigRational> {
    let g = stcpp_odd_system(alpha, 1).matrix();
    let p = g.rows();
    let n = g.cols();
    let ext = ExactMatrix::from_fn(p, n + 1, |i, j| if j < n { g[(i, j)].clone() } else { big(sign(i as i64)) });
    det(&ext)
}

// Cyclically symmetric transpose-complementary, cube of side 2α.

pub fn cstcpp_system(alpha: u32) -> PathSystem {
    let m = alpha as i64 - 1;
    PathSystem::new(
        (1..=m).map(|i| (i, 2 * i)).collect(),
        (1..=m).map(|j| (2 * j, j)).collect(),
        Selection::Fixed,
        StepWeight::Area2,
    )
}

/// The `(α-1) x (α-1)` path matrix with the sign `(-1)^(1^2 + ... + (α-1)^2)`.
pub fn cstcpp_matrix(alpha: u32) -> ClassMatrix {
    let m = alpha as i64 - 1;
    let squares: i64 = (1..=m).map(|k| k * k).sum();
    ClassMatrix {
        matrix: cstcpp_system(alpha).matrix(),
        evaluation: Evaluation::Determinant,
        global_sign: sign(squares),
        provenance: "cstcpp paths A_i=(i,2i), E_j=(2j,j), area2 weight".into(),
    }
}

/// `det C(i+j-1, 2j-i)` over `1 <= i, j <= (α-1)/2`; its square is the count for odd `α`.
pub fn cstcpp_reduced_det(alpha: u32) -> Result<BigInt> {
    let n = (alpha.saturating_sub(1) / 2) as usize;
    let m = ExactMatrix::from_int_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        binom(i + j - 1, 2 * j - i)
    });
    to_integer(det(&m)?, "reduced cstcpp determinant")
}

pub fn cstcpp_enum(alpha: u32) -> Result<SignedCount> {
    let v = cstcpp_matrix(alpha).value()?;
    Ok(SignedCount::new(
        v,
        Method::Lgv,
        SymmetryClass::CyclicallySymmetricTransposeComplementary,
        BoxDims::cube(2 * alpha),
    ))
}

// Totally symmetric self-complementary, cube of side 2α.

/// Starts `(i, i)` and ends `(2j, j)`. For odd `α` the indices start at 1, for
/// even `α` at 0, which adds the extra path needed for an even number of ends.
/// A path from `A_i` carries `(-1)^(i(i+1)/2)`.
pub fn tsscpp_system(alpha: u32) -> PathSystem {
    let alpha = alpha as i64;
    let first = if alpha % 2 == 1 { 1 } else { 0 };
    let mut sys = PathSystem::new(
        (first..=2 * alpha - 2).map(|i| (i, i)).collect(),
        (first..=alpha - 1).map(|j| (2 * j, j)).collect(),
        Selection::FreeStarts,
        StepWeight::Area2,
    );
    sys.start_signs = (first..=2 * alpha - 2).map(|i| sign(i * (i + 1) / 2)).collect();
    sys
}

/// `Pf(T^t sgn T)` with the sign `(-1)^((α-1)/2)` for odd `α`.
///
/// The sign is relative to the partition the path weights normalize to 1, which
/// is not necessarily the reference partition used by the oracle.
pub fn tsscpp_matrix(alpha: u32) -> ClassMatrix {
    let global_sign = if alpha % 2 == 1 { sign((alpha as i64 - 1) / 2) } else { 1 };
    ClassMatrix {
        matrix: sign_double_sum(&tsscpp_system(alpha).matrix()),
        evaluation: Evaluation::Pfaffian,
        global_sign,
        provenance: "tsscpp paths A_i=(i,i), E_j=(2j,j), sgn double sum".into(),
    }
}

/// `det C(i+j-1, 2j-i-1)` over `1 <= i, j <= (α-1)/2`.
pub fn tsscpp_reduced_det(alpha: u32) -> Result<BigInt> {
    let n = (alpha.saturating_sub(1) / 2) as usize;
    let m = ExactMatrix::from_int_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        binom(i + j - 1, 2 * j - i - 1)
    });
    to_integer(det(&m)?, "reduced tsscpp determinant")
}

pub fn tsscpp_enum(alpha: u32) -> Result<SignedCount> {
    let v = tsscpp_matrix(alpha).value()?;
    Ok(SignedCount::new(
        v,
        Method::Lgv,
        SymmetryClass::TotallySymmetricSelfComplementary,
        BoxDims::cube(2 * alpha),
    )
    .with_convention(SignConvention::PathNormalized))
}

// Self-complementary, even sides.

fn check_even_sides(a: u32, b: u32, c: u32) -> Result<()> {
    if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "the path pipeline needs all sides even, got {a}x{b}x{c}; use the conjectured product for odd sides"
        )));
    }
    Ok(())
}

/// Starts `(i-1, b+i-1)`, `i <= a`, and ends `(x+j-1, j-1)`, `j <= a+b`, with
/// `x = (c-b)/2` after ordering `b <= c`. Ends in the first half carry `(-1)^j`.
pub fn scpp_system(a: u32, b: u32, c: u32) -> Result<PathSystem> {
    check_even_sides(a, b, c)?;
    let (b, c) = (b.min(c) as i64, b.max(c) as i64);
    let a = a as i64;
    let x = (c - b) / 2;
    let half = (a + b) / 2;
    Ok(PathSystem::new(
        (1..=a).map(|i| (i - 1, b + i - 1)).collect(),
        (1..=a + b).map(|j| (x + j - 1, j - 1)).collect(),
        Selection::SymmetricEnds,
        StepWeight::Area2,
    )
    .with_end_signs(|j| if j <= half { sign(j) } else { 1 }))
}

/// `S*`: the columns of `S` with the second half reversed.
pub fn scpp_s_star(a: u32, b: u32, c: u32) -> Result<ExactMatrix> {
    let s = scpp_system(a, b, c)?.matrix();
    let two_n = s.cols();
    let n = two_n / 2;
    let order: Vec<usize> = (0..n).chain((n..two_n).rev()).collect();
    Ok(s.select(&(0..s.rows()).collect::<Vec<_>>(), &order))
}

/// `Pf(S* J S*^t)` with `J = [[0, I], [-I, 0]]` and the sign `(-1)^(a(a+2)/8 + xa/2)`.
pub fn scpp_matrix(a: u32, b: u32, c: u32) -> Result<ClassMatrix> {
    let s_star = scpp_s_star(a, b, c)?;
    let j = SkewMatrix::standard_symplectic(s_star.cols() / 2);
    let m = s_star.mul(j.as_matrix())?.mul(&s_star.transpose())?;
    let (a, x) = (a as i64, (b.max(c) as i64 - b.min(c) as i64) / 2);
    Ok(ClassMatrix {
        matrix: m,
        evaluation: Evaluation::Pfaffian,
        global_sign: sign(a * (a + 2) / 8 + x * a / 2),
        provenance: "scpp paths A_i=(i-1,b+i-1), E_j=(x+j-1,j-1), Pf(S* J S*^t)".into(),
    })
}

pub fn scpp_enum(a: u32, b: u32, c: u32) -> Result<SignedCount> {
    let v = scpp_matrix(a, b, c)?.value()?;
    Ok(SignedCount::new(v, Method::Lgv, SymmetryClass::SelfComplementary, BoxDims::new(a, b, c)))
}

/// The path pipeline for a class and box.
pub fn lgv_count(class: SymmetryClass, bx: BoxDims) -> Result<SignedCount> {
    use SymmetryClass::*;
    class.check_box(bx)?;
    let [a, b, c] = bx.dims();
    match class {
        TransposeComplementary => tcpp_enum(a, c / 2),
        SymmetricTransposeComplementary if a % 2 == 0 => stcpp_enum_even_a(a / 2, c / 2),
        SymmetricTransposeComplementary => stcpp_enum_odd_a(a / 2, c / 2),
        CyclicallySymmetricTransposeComplementary => cstcpp_enum(a / 2),
        TotallySymmetricSelfComplementary => tsscpp_enum(a / 2),
        SelfComplementary => scpp_enum(a, b, c),
        _ => Err(Error::Unsupported(format!("no path pipeline for class {class}"))),
    }
}

/// Both sides of the minor summation formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSummation {
    /// `sum_K Pf(A[K, K]) det(T[K])` over the `n`-row subsets `K`.
    pub direct: BigRational,
    /// `Pf(T^t A T)`.
    pub pfaffian: BigRational,
}

impl MinorSummation {
    pub fn agrees(&self) -> bool {
        self.direct == self.pfaffian
    }
}

/// Evaluates the minor summation formula for a `p x n` matrix `t` and a `p x p` skew matrix `a`.
/// `n` must be even; pad with a dummy column otherwise.
pub fn minor_summation(t: &ExactMatrix, a: &SkewMatrix, subset_budget: u64) -> Result<MinorSummation> {
    if t.cols() % 2 == 1 {
        return Err(Error::Dimension(format!(
            "minor summation needs an even number of columns, got {}",
            t.cols()
        )));
    }
    let direct = sum_of_minors(t, &MinorSelector::PfaffianWeighted(a), subset_budget)?;
    let pfaffian = pfaffian_congruence(t, a)?;
    Ok(MinorSummation { direct, pfaffian })
}
