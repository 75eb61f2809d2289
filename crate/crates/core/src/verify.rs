//! Cross-checks of the three counting methods over parameter grids, and a
//! suite of exact identity checks with seeded random instances.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{
    divides, interpolate, pfaffian_congruence, sum_of_minors, ExactMatrix, ExactPolynomial, MinorSelector,
    SkewMatrix, DEFAULT_SUBSET_BUDGET,
};
use crate::formulas::{formula_count, lemma_2ji, lemma_detl, lemma_m1, mrr_det, thm7_product, IdentityCheck};
use crate::lgv::{lgv_count, minor_summation, mtilde_entry};
use crate::oracle::{signed_count, weighted_count, WeightKind, DEFAULT_NODE_BUDGET};
use crate::pp::{BoxDims, SymmetryClass};
use crate::qseries::{binom, factorial, hyper_terminating, pfaff_saalschutz_rhs, rat, saalschutz_params, shifted_factorial};

/// Resource caps shared by the oracle and the minor sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub node_budget: u64,
    pub subset_budget: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Self { node_budget: DEFAULT_NODE_BUDGET, subset_budget: DEFAULT_SUBSET_BUDGET }
    }
}

/// The families swept by [`run_grid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridClass {
    Tc,
    Stc,
    Cstc,
    Tssc,
    Sc,
    /// Self-complementary with `a` even and `b`, `c` odd, checked against the conjectured product.
    ScOdd,
    /// Cyclically symmetric self-complementary, checked through the orbit-weighted cyclic count.
    Cssc,
}

impl GridClass {
    pub const ALL: [GridClass; 7] = [
        GridClass::Tc,
        GridClass::Stc,
        GridClass::Cstc,
        GridClass::Tssc,
        GridClass::Sc,
        GridClass::ScOdd,
        GridClass::Cssc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GridClass::Tc => "tc",
            GridClass::Stc => "stc",
            GridClass::Cstc => "cstc",
            GridClass::Tssc => "tssc",
            GridClass::Sc => "sc",
            GridClass::ScOdd => "sc-odd",
            GridClass::Cssc => "cssc",
        }
    }

    pub fn symmetry_class(self) -> SymmetryClass {
        use SymmetryClass::*;
        match self {
            GridClass::Tc => TransposeComplementary,
            GridClass::Stc => SymmetricTransposeComplementary,
            GridClass::Cstc => CyclicallySymmetricTransposeComplementary,
            GridClass::Tssc => TotallySymmetricSelfComplementary,
            GridClass::Sc | GridClass::ScOdd => SelfComplementary,
            GridClass::Cssc => CyclicallySymmetricSelfComplementary,
        }
    }

    /// Whether a mismatch in this family is a finding about a conjecture rather than a defect.
    pub fn is_conjecture(self) -> bool {
        self == GridClass::ScOdd
    }
}

impl fmt::Display for GridClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase();
        let key = key.replace("pp", "");
        Ok(match key.as_str() {
            "tc" => GridClass::Tc,
            "stc" => GridClass::Stc,
            "cstc" => GridClass::Cstc,
            "tssc" => GridClass::Tssc,
            "sc" => GridClass::Sc,
            "sc-odd" | "scodd" => GridClass::ScOdd,
            "cssc" => GridClass::Cssc,
            _ => return Err(Error::InvalidInput(format!("unknown grid class {s:?}"))),
        })
    }
}

/// Upper bounds of a sweep. Each family reads the bounds that parametrize it:
/// `tc` uses `a x a x 2b`, `stc` uses `2α x 2α x 2b`, the cube families use
/// `α`, `sc` uses even sides up to `max_a`, `max_b`, `max_c`, and `sc-odd`
/// uses even `a <= max_a` with odd `b <= max_b`, `c <= max_c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub max_a: u32,
    pub max_b: u32,
    pub max_c: u32,
    pub max_alpha: u32,
    /// Rows whose box has more cells than this skip the oracle.
    pub oracle_max_cells: u64,
}

impl GridBounds {
    pub fn standard(class: GridClass) -> Self {
        let (max_a, max_b, max_c, max_alpha) = match class {
            GridClass::Tc => (5, 3, 0, 0),
            GridClass::Stc => (0, 6, 0, 4),
            GridClass::Cstc | GridClass::Tssc | GridClass::Cssc => (0, 0, 0, 3),
            GridClass::Sc => (4, 4, 4, 0),
            GridClass::ScOdd => (4, 5, 5, 0),
        };
        Self { max_a, max_b, max_c, max_alpha, oracle_max_cells: 216 }
    }

    /// The smallest grid that still exercises every family.
    pub fn smoke(class: GridClass) -> Self {
        let (max_a, max_b, max_c, max_alpha) = match class {
            GridClass::Tc => (3, 1, 0, 0),
            GridClass::Stc => (0, 1, 0, 1),
            GridClass::Cstc | GridClass::Tssc | GridClass::Cssc => (0, 0, 0, 1),
            GridClass::Sc => (2, 2, 2, 0),
            GridClass::ScOdd => (2, 3, 3, 0),
        };
        Self { max_a, max_b, max_c, max_alpha, oracle_max_cells: 216 }
    }

    pub fn boxes(&self, class: GridClass) -> Vec<(String, BoxDims)> {
        let mut out = Vec::new();
        match class {
            GridClass::Tc => {
                for a in 1..=self.max_a {
                    for b in 0..=self.max_b {
                        out.push((format!("a={a} b={b}"), BoxDims::new(a, a, 2 * b)));
                    }
                }
            }
            GridClass::Stc => {
                for alpha in 1..=self.max_alpha {
                    for b in 0..=self.max_b {
                        out.push((format!("α={alpha} b={b}"), BoxDims::new(2 * alpha, 2 * alpha, 2 * b)));
                    }
                }
            }
            GridClass::Cstc | GridClass::Tssc | GridClass::Cssc => {
                for alpha in 1..=self.max_alpha {
                    out.push((format!("α={alpha}"), BoxDims::cube(2 * alpha)));
                }
            }
            GridClass::Sc => {
                for a in (2..=self.max_a).step_by(2) {
                    for b in (2..=self.max_b).step_by(2) {
                        for c in (2..=self.max_c).step_by(2) {
                            out.push((format!("a={a} b={b} c={c}"), BoxDims::new(a, b, c)));
                        }
                    }
                }
            }
            GridClass::ScOdd => {
                for a in (0..=self.max_a).step_by(2) {
                    for b in (1..=self.max_b).step_by(2) {
                        for c in (1..=self.max_c).step_by(2) {
                            out.push((format!("a={a} b={b} c={c}"), BoxDims::new(a, b, c)));
                        }
                    }
                }
            }
        }
        out
    }
}

/// One method's contribution to a grid row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Value(BigInt),
    /// Not run because a budget would be exceeded.
    Skipped(String),
    /// The method does not apply to this row.
    NotApplicable,
    Failed(String),
}

impl Outcome {
    fn from_result(r: Result<BigInt>) -> Self {
        match r {
            Ok(v) => Outcome::Value(v),
            Err(e @ Error::ResourceLimit { .. }) => Outcome::Skipped(e.to_string()),
            Err(e) => Outcome::Failed(e.to_string()),
        }
    }

    pub fn value(&self) -> Option<&BigInt> {
        match self {
            Outcome::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Outcome::Skipped(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Value(v) => write!(f, "{v}"),
            Outcome::Skipped(_) => f.write_str("SKIPPED"),
            Outcome::NotApplicable => f.write_str("-"),
            Outcome::Failed(e) => write!(f, "ERROR({e})"),
        }
    }
}

/// How the three values of a row are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Exact,
    /// Only absolute values are compared.
    Absolute,
    /// `oracle^2 = |pipeline|` and `|oracle| = formula`, where the pipeline
    /// is the orbit-weighted cyclic count at `q = -1`.
    SquareRoot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridRow {
    pub class: GridClass,
    pub params: String,
    pub bx: BoxDims,
    pub oracle: Outcome,
    pub pipeline: Outcome,
    pub formula: Outcome,
    pub comparison: Comparison,
    pub elapsed: Duration,
}

impl GridRow {
    fn agree(&self, x: &Outcome, y: &Outcome, square_left: bool) -> Option<bool> {
        let (x, y) = (x.value()?, y.value()?);
        Some(match self.comparison {
            Comparison::Exact => x == y,
            Comparison::Absolute => x.abs() == y.abs(),
            Comparison::SquareRoot if square_left => x * x == y.abs(),
            Comparison::SquareRoot => x.abs() == y.abs(),
        })
    }

    pub fn oracle_vs_pipeline(&self) -> Option<bool> {
        self.agree(&self.oracle, &self.pipeline, true)
    }

    pub fn oracle_vs_formula(&self) -> Option<bool> {
        self.agree(&self.oracle, &self.formula, false)
    }

    pub fn pipeline_vs_formula(&self) -> Option<bool> {
        match self.comparison {
            // The pipeline side is the square of the formula side.
            Comparison::SquareRoot => self.agree(&self.formula, &self.pipeline, true),
            _ => self.agree(&self.pipeline, &self.formula, false),
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.oracle.is_skipped() || self.pipeline.is_skipped() || self.formula.is_skipped()
    }

    pub fn has_error(&self) -> bool {
        [&self.oracle, &self.pipeline, &self.formula].iter().any(|o| matches!(o, Outcome::Failed(_)))
    }

    /// No comparison failed and no method errored. Skipped comparisons do not count against a row.
    pub fn matches(&self) -> bool {
        !self.has_error()
            && [self.oracle_vs_pipeline(), self.oracle_vs_formula(), self.pipeline_vs_formula()]
                .iter()
                .all(|c| *c != Some(false))
    }
}

/// Runs one row of a grid.
pub fn grid_row(class: GridClass, params: String, bx: BoxDims, bounds: &GridBounds, budgets: &Budgets) -> GridRow {
    let sym = class.symmetry_class();
    let start = Instant::now();
    let oracle = if bx.cell_count() > bounds.oracle_max_cells {
        Outcome::Skipped(format!("box has more than {} cells", bounds.oracle_max_cells))
    } else {
        Outcome::from_result(signed_count(bx, sym, budgets.node_budget).map(|c| c.value))
    };
    let (pipeline, formula, comparison) = match class {
        GridClass::Cssc => {
            let pipeline = if bx.cell_count() > bounds.oracle_max_cells {
                Outcome::Skipped(format!("box has more than {} cells", bounds.oracle_max_cells))
            } else {
                let q = WeightKind::QOrbits(rat(-1));
                Outcome::from_result(weighted_count(bx, SymmetryClass::Cyclic, &q, budgets.node_budget).and_then(
                    |v| {
                        if v.is_integer() {
                            Ok(v.to_integer())
                        } else {
                            Err(Error::Consistency(format!("orbit-weighted count {v} is not an integer")))
                        }
                    },
                ))
            };
            (pipeline, Outcome::from_result(thm7_product(bx.a / 2)), Comparison::SquareRoot)
        }
        GridClass::ScOdd => (
            Outcome::NotApplicable,
            Outcome::from_result(formula_count(sym, bx).map(|c| c.value)),
            Comparison::Absolute,
        ),
        _ => {
            let comparison = if class == GridClass::Tssc { Comparison::Absolute } else { Comparison::Exact };
            (
                Outcome::from_result(lgv_count(sym, bx).map(|c| c.value)),
                Outcome::from_result(formula_count(sym, bx).map(|c| c.value)),
                comparison,
            )
        }
    };
    GridRow { class, params, bx, oracle, pipeline, formula, comparison, elapsed: start.elapsed() }
}

/// Runs every row of a grid, in parallel, returning them in grid order.
pub fn run_grid(class: GridClass, bounds: &GridBounds, budgets: &Budgets) -> Vec<GridRow> {
    let boxes = bounds.boxes(class);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(boxes.len().max(1));
    let mut rows: Vec<Option<GridRow>> = vec![None; boxes.len()];
    std::thread::scope(|s| {
        let chunks: Vec<_> = rows.chunks_mut(boxes.len().div_ceil(threads).max(1)).collect();
        let mut offset = 0;
        for chunk in chunks {
            let items = &boxes[offset..offset + chunk.len()];
            offset += chunk.len();
            s.spawn(move || {
                for (slot, (params, bx)) in chunk.iter_mut().zip(items) {
                    *slot = Some(grid_row(class, params.clone(), *bx, bounds, budgets));
                }
            });
        }
    });
    rows.into_iter().map(|r| r.expect("every row is filled")).collect()
}

/// The exact identities in the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityName {
    Detl,
    TwoJMinusI,
    M1,
    Mrr,
    PfaffSaalschutz,
    MinorSummation,
    RecurrenceS4,
}

impl IdentityName {
    pub const ALL: [IdentityName; 7] = [
        IdentityName::Detl,
        IdentityName::TwoJMinusI,
        IdentityName::M1,
        IdentityName::Mrr,
        IdentityName::PfaffSaalschutz,
        IdentityName::MinorSummation,
        IdentityName::RecurrenceS4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityName::Detl => "detl",
            IdentityName::TwoJMinusI => "2ji",
            IdentityName::M1 => "m1",
            IdentityName::Mrr => "mrr",
            IdentityName::PfaffSaalschutz => "pfaff-saalschutz",
            IdentityName::MinorSummation => "minor-summation",
            IdentityName::RecurrenceS4 => "recurrence-s4",
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityName::ALL
            .into_iter()
            .find(|n| n.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidInput(format!("unknown identity {s:?}")))
    }
}

/// Outcome of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: IdentityName,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

impl IdentityOutcome {
    fn from_check(name: IdentityName, params: String, c: IdentityCheck) -> Self {
        Self { name, params, passed: c.holds(), lhs: c.lhs.to_string(), rhs: c.rhs.to_string() }
    }
}

fn list(v: &[BigRational]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

pub fn detl_instance(x: &[BigRational], a: &[BigRational], b: &[BigRational]) -> Result<IdentityOutcome> {
    let params = format!("X={} A={} B={}", list(x), list(a), list(b));
    Ok(IdentityOutcome::from_check(IdentityName::Detl, params, lemma_detl(x, a, b)?))
}

/// The instance `X_i = i`, `A_k = k-2`, `B_k = k-1`.
pub fn detl_default(n: u32) -> Result<IdentityOutcome> {
    let n = n as i64;
    let x: Vec<_> = (1..=n).map(rat).collect();
    let a: Vec<_> = (2..=n).map(|k| rat(k - 2)).collect();
    let b: Vec<_> = (2..=n).map(|k| rat(k - 1)).collect();
    detl_instance(&x, &a, &b)
}

pub fn two_ji_instance(alpha: u32, beta: i64, gamma: i64) -> Result<IdentityOutcome> {
    let params = format!("α={alpha} β={beta} γ={gamma}");
    Ok(IdentityOutcome::from_check(IdentityName::TwoJMinusI, params, lemma_2ji(alpha, beta, gamma)?))
}

pub fn m1_instance(alpha: u32, b: u32) -> Result<IdentityOutcome> {
    let params = format!("α={alpha} b={b}");
    Ok(IdentityOutcome::from_check(IdentityName::M1, params, lemma_m1(alpha, b)?))
}

pub fn mrr_instance(mu: &BigRational, n: u32) -> Result<IdentityOutcome> {
    let params = format!("n={n} μ={mu}");
    Ok(IdentityOutcome::from_check(IdentityName::Mrr, params, mrr_det(mu, n)?))
}

/// The balanced `3F2` summed term by term against its closed form.
pub fn saalschutz_instance(a: &BigRational, b: &BigRational, c: &BigRational, n: u64) -> Result<IdentityOutcome> {
    let params = format!("a={a} b={b} c={c} n={n}");
    let lhs = hyper_terminating(&saalschutz_params(a, b, c, n))?;
    let rhs = pfaff_saalschutz_rhs(a, b, c, n)?;
    Ok(IdentityOutcome::from_check(IdentityName::PfaffSaalschutz, params, IdentityCheck { lhs, rhs }))
}

/// With `a = None` the skew matrix is `sgn(l-k)` and the minors are summed unweighted.
pub fn minor_summation_instance(t: &ExactMatrix, a: Option<&SkewMatrix>, subset_budget: u64) -> Result<IdentityOutcome> {
    let params = format!("p={} n={} weights={}", t.rows(), t.cols(), if a.is_some() { "random" } else { "sign" });
    let check = match a {
        Some(a) => {
            let m = minor_summation(t, a, subset_budget)?;
            IdentityCheck { lhs: m.direct, rhs: m.pfaffian }
        }
        None => {
            if t.cols() % 2 == 1 {
                return Err(Error::Dimension(format!("need an even number of columns, got {}", t.cols())));
            }
            let lhs = sum_of_minors(t, &MinorSelector::All, subset_budget)?;
            let rhs = pfaffian_congruence(t, &SkewMatrix::sign_matrix(t.rows()))?;
            IdentityCheck { lhs, rhs }
        }
    };
    Ok(IdentityOutcome::from_check(IdentityName::MinorSummation, params, check))
}

fn step2_coefficient(s: i64) -> BigRational {
    let sign = if s % 2 == 1 { 1 } else { -1 };
    BigRational::new(
        binom(2 * s - 1, s) * sign,
        BigInt::from(2 * s - 1) * BigInt::from(2).pow((4 * s - 1) as u32),
    )
}

/// `M~_{t+1,j} + sum_{s=1}^{t} (-1)^{s-1} C(2s-1,s)/((2s-1) 2^{4s-1}) M~_{t+1-s,j}` at `N`.
pub fn step2_combination(n: i64, t: i64, j: i64) -> BigRational {
    let mut acc = BigRational::from_integer(mtilde_entry(n, t + 1, j));
    for s in 1..=t {
        acc += step2_coefficient(s) * BigRational::from_integer(mtilde_entry(n, t + 1 - s, j));
    }
    acc
}

/// Closed form of [`step2_combination`]:
/// `C(N+j-2, 2j-2) (N-t+1/2)_{2t} (N+j-1) / ((2t)! (2t+2j-1))`.
pub fn step2_closed_form(n: i64, t: i64, j: i64) -> BigRational {
    let shift = rat(n - t) + BigRational::new(1.into(), 2.into());
    BigRational::from_integer(binom(n + j - 2, 2 * j - 2)) * shifted_factorial(&shift, (2 * t) as u64) * rat(n + j - 1)
        / (BigRational::from_integer(factorial((2 * t) as u64)) * rat(2 * t + 2 * j - 1))
}

/// Whether `(N-t+1/2)_{2t}` divides [`step2_combination`] as a polynomial in `N`.
pub fn step2_divisible(t: i64, j: i64) -> Result<bool> {
    // Entry (i, j) has degree 2i + 2j - 3 in N.
    let degree = 2 * (t + 1) + 2 * j - 3;
    let points: Vec<_> = (0..=degree + 1).map(|n| (rat(n), step2_combination(n, t, j))).collect();
    let (check, fit) = points.split_last().expect("nonempty");
    let p = interpolate(fit)?;
    if p.eval(&check.0) != check.1 {
        return Err(Error::Consistency(format!("combination for t={t}, j={j} is not a polynomial of degree {degree}")));
    }
    let shift = BigRational::new(1.into(), 2.into()) - rat(t);
    let f = ExactPolynomial::linear(rat(1), shift).rising((2 * t) as usize);
    Ok(divides(&f, &p))
}

/// The three-term recurrence of the single-sum matrix, the closed form of the
/// elimination step `t`, and its divisibility in `N`, at `N = (α+b)/2`.
pub fn recurrence_instance(alpha: u32, b: u32, t: u32) -> Result<IdentityOutcome> {
    if (alpha + b) % 2 == 1 {
        return Err(Error::InvalidInput(format!("α + b must be even, got α={alpha}, b={b}")));
    }
    if t == 0 {
        return Err(Error::InvalidInput("t must be positive".into()));
    }
    let (n, t, h) = (((alpha + b) / 2) as i64, t as i64, (alpha as i64 + 1) / 2);
    let mut failures = Vec::new();
    for i in 1..=h {
        for j in 1..=h {
            let lhs = BigRational::from_integer(
                BigInt::from(j + i - 1) * mtilde_entry(n, i, j)
                    + BigInt::from(2 * (2 * j + 2 * i - 1)) * mtilde_entry(n, i + 1, j),
            );
            let rhs = rat(alpha as i64 + b as i64)
                * shifted_factorial(&rat(n - i + 1), (2 * i - 1) as u64)
                * shifted_factorial(&rat(n - j + 1), (2 * j - 1) as u64)
                / BigRational::from_integer(factorial((2 * i) as u64) * factorial((2 * j - 2) as u64));
            if lhs != rhs {
                failures.push(format!("recurrence i={i} j={j}: {lhs} != {rhs}"));
            }
        }
    }
    for j in 1..=h {
        let (lhs, rhs) = (step2_combination(n, t, j), step2_closed_form(n, t, j));
        if lhs != rhs {
            failures.push(format!("combination j={j}: {lhs} != {rhs}"));
        }
        if !step2_divisible(t, j)? {
            failures.push(format!("combination j={j} not divisible"));
        }
    }
    let passed = failures.is_empty();
    Ok(IdentityOutcome {
        name: IdentityName::RecurrenceS4,
        params: format!("α={alpha} b={b} t={t}"),
        lhs: if passed { "ok".into() } else { failures.join("; ") },
        rhs: "ok".into(),
        passed,
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=6).into())
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-5i64..=5)))
}

fn random_instance(name: IdentityName, rng: &mut ChaCha8Rng, subset_budget: u64) -> Result<IdentityOutcome> {
    match name {
        IdentityName::Detl => {
            let n = rng.gen_range(1..=5usize);
            let x: Vec<_> = (0..n).map(|_| random_rational(rng)).collect();
            let a: Vec<_> = (1..n).map(|_| random_rational(rng)).collect();
            let b: Vec<_> = (1..n).map(|_| random_rational(rng)).collect();
            detl_instance(&x, &a, &b)
        }
        IdentityName::TwoJMinusI => {
            two_ji_instance(rng.gen_range(1..=6), rng.gen_range(0..=6), rng.gen_range(0..=1))
        }
        IdentityName::M1 => m1_instance(2 * rng.gen_range(1..=3), rng.gen_range(0..=8)),
        IdentityName::Mrr => {
            let mu = BigRational::new(rng.gen_range(-8i64..=8).into(), rng.gen_range(1i64..=3).into());
            mrr_instance(&mu, rng.gen_range(1..=6))
        }
        IdentityName::PfaffSaalschutz => {
            // Resample the rare parameter choices that hit a pole.
            loop {
                let (a, b, c) = (random_rational(rng), random_rational(rng), random_rational(rng));
                let n = rng.gen_range(0..=8u64);
                match saalschutz_instance(&a, &b, &c, n) {
                    Err(Error::DivisionByZero { .. } | Error::Domain(_)) => continue,
                    r => return r,
                }
            }
        }
        IdentityName::MinorSummation => {
            let p = rng.gen_range(2..=8usize);
            let n = 2 * rng.gen_range(1..=p / 2);
            let t = random_matrix(rng, p, n);
            if rng.gen_bool(0.5) {
                let a = SkewMatrix::from_upper(p, |_, _| rat(rng.gen_range(-3i64..=3)));
                minor_summation_instance(&t, Some(&a), subset_budget)
            } else {
                minor_summation_instance(&t, None, subset_budget)
            }
        }
        IdentityName::RecurrenceS4 => {
            let alpha = rng.gen_range(1..=6u32);
            let b = 2 * rng.gen_range(0..=10u32) + alpha % 2;
            recurrence_instance(alpha, b, rng.gen_range(1..=3))
        }
    }
}

/// `count` random instances of an identity, reproducible from `seed`.
pub fn fuzz_identity(name: IdentityName, count: usize, seed: u64, budgets: &Budgets) -> Result<Vec<IdentityOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_instance(name, &mut rng, budgets.subset_budget)).collect()
}

/// The standard instances of an identity: exhaustive sweeps where the
/// parameter space is small, seeded random instances otherwise.
pub fn identity_sweep(name: IdentityName, budgets: &Budgets) -> Result<Vec<IdentityOutcome>> {
    let mut out = Vec::new();
    match name {
        IdentityName::Detl => return fuzz_identity(name, 50, 0, budgets),
        IdentityName::PfaffSaalschutz => return fuzz_identity(name, 100, 0, budgets),
        IdentityName::MinorSummation => return fuzz_identity(name, 100, 0, budgets),
        IdentityName::TwoJMinusI => {
            for alpha in 1..=6 {
                for beta in 0..=6 {
                    for gamma in 0..=1 {
                        out.push(two_ji_instance(alpha, beta, gamma)?);
                    }
                }
            }
        }
        IdentityName::M1 => {
            for alpha in [2, 4, 6] {
                for b in 0..=8 {
                    out.push(m1_instance(alpha, b)?);
                }
            }
        }
        IdentityName::Mrr => {
            for n in 1..=6 {
                for mu in 0..=4 {
                    out.push(mrr_instance(&rat(mu), n)?);
                }
            }
        }
        IdentityName::RecurrenceS4 => {
            for alpha in 1..=6 {
                for b in (alpha % 2..=10).step_by(2) {
                    for t in 1..=3 {
                        out.push(recurrence_instance(alpha, b, t)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_class_names_round_trip() {
        for c in GridClass::ALL {
            assert_eq!(c.name().parse::<GridClass>().unwrap(), c);
        }
        assert_eq!("csscpp".parse::<GridClass>().unwrap(), GridClass::Cssc);
        assert_eq!("TCPP".parse::<GridClass>().unwrap(), GridClass::Tc);
        assert!("xyz".parse::<GridClass>().is_err());
    }

    #[test]
    fn identity_names_round_trip() {
        for n in IdentityName::ALL {
            assert_eq!(n.name().parse::<IdentityName>().unwrap(), n);
        }
        assert!("nope".parse::<IdentityName>().is_err());
    }

    #[test]
    fn smoke_grids_match() {
        let budgets = Budgets::default();
        for class in GridClass::ALL {
            let rows = run_grid(class, &GridBounds::smoke(class), &budgets);
            assert!(!rows.is_empty(), "{class}");
            for r in rows {
                assert!(r.matches(), "{class} {}: {r:?}", r.params);
                assert!(!r.is_skipped());
            }
        }
    }

    #[test]
    fn oracle_skipped_for_large_boxes() {
        let bounds = GridBounds { oracle_max_cells: 0, ..GridBounds::smoke(GridClass::Tc) };
        let rows = run_grid(GridClass::Tc, &bounds, &Budgets::default());
        assert!(rows.iter().all(|r| r.is_skipped() == (r.bx.cell_count() > 0) && r.matches()));
        let tiny = Budgets { node_budget: 1, ..Budgets::default() };
        let row = grid_row(GridClass::Tc, "a=3 b=1".into(), BoxDims::new(3, 3, 2), &GridBounds::smoke(GridClass::Tc), &tiny);
        assert!(row.oracle.is_skipped());
    }

    #[test]
    fn cssc_row_uses_square_root() {
        let row = grid_row(GridClass::Cssc, "α=2".into(), BoxDims::cube(4), &GridBounds::smoke(GridClass::Cssc), &Budgets::default());
        assert_eq!(row.formula, Outcome::Value(2.into()));
        assert_eq!(row.pipeline.value().map(|v| v.abs()), Some(4.into()));
        assert!(row.matches());
    }

    #[test]
    fn mismatches_are_detected() {
        let row = GridRow {
            class: GridClass::Tc,
            params: String::new(),
            bx: BoxDims::new(1, 1, 2),
            oracle: Outcome::Value(1.into()),
            pipeline: Outcome::Value((-1).into()),
            formula: Outcome::Skipped(String::new()),
            comparison: Comparison::Exact,
            elapsed: Duration::ZERO,
        };
        assert_eq!(row.oracle_vs_pipeline(), Some(false));
        assert!(!row.matches());
        let abs = GridRow { comparison: Comparison::Absolute, ..row };
        assert!(abs.matches());
    }

    #[test]
    fn step2_small_case() {
        // t = 1, j = 1: C(N+1, 3) + N/8 = N (N^2 - 1/4) / 6.
        for n in 0..8 {
            let expect = rat(n) * (rat(n * n) - BigRational::new(1.into(), 4.into())) / rat(6);
            assert_eq!(step2_combination(n, 1, 1), expect);
            assert_eq!(step2_closed_form(n, 1, 1), expect);
        }
        assert!(step2_divisible(1, 1).unwrap());
    }

    #[test]
    fn fixed_identity_examples() {
        assert!(detl_default(1).unwrap().passed);
        let r = detl_default(2).unwrap();
        assert_eq!((r.lhs.as_str(), r.passed), ("-1", true));
        assert!(mrr_instance(&rat(2), 4).unwrap().passed);
        assert!(recurrence_instance(4, 2, 1).unwrap().passed);
        assert!(recurrence_instance(4, 1, 1).is_err());
        let id = ExactMatrix::identity(2);
        assert_eq!(minor_summation_instance(&id, None, 10).unwrap().lhs, "1");
    }

    #[test]
    fn fuzz_is_deterministic() {
        let b = Budgets::default();
        let x = fuzz_identity(IdentityName::PfaffSaalschutz, 20, 7, &b).unwrap();
        let y = fuzz_identity(IdentityName::PfaffSaalschutz, 20, 7, &b).unwrap();
        assert_eq!(x, y);
        assert!(x.iter().all(|o| o.passed));
    }

    #[test]
    fn sweeps_pass() {
        let b = Budgets::default();
        for name in IdentityName::ALL {
            let out = identity_sweep(name, &b).unwrap();
            assert!(!out.is_empty());
            for o in &out {
                assert!(o.passed, "{name} {}: {} vs {}", o.params, o.lhs, o.rhs);
            }
        }
    }
}
