//! Brute-force generation of the plane partitions of a class, and exact
//! signed and weighted sums over them.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::count::{Method, SignedCount};
use crate::error::{Error, Result};
use crate::pp::{reference_partition, BoxDims, Cell, CellMap, PlanePartition, SymmetryClass, SymmetryGroup};

/// Default cap on backtracking nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Default largest size accepted by [`count_vsasm`].
pub const DEFAULT_VSASM_LIMIT: u32 = 9;

/// The statistic summed by [`weighted_count`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// The sign relative to the reference partition.
    SignedOrbits,
    /// `q^(number of cubes)`.
    QCubes(BigRational),
    /// `q^(number of symmetry orbits of cubes)`.
    QOrbits(BigRational),
    /// Every partition counts 1.
    Plain,
}

struct Search<'a, F> {
    bx: BoxDims,
    maps: Vec<CellMap>,
    heights: Vec<u32>,
    nodes: u64,
    budget: u64,
    visit: &'a mut F,
}

impl<F: FnMut(&[u32])> Search<'_, F> {
    fn idx(&self, i: u32, j: u32) -> usize {
        ((i - 1) * self.bx.b + (j - 1)) as usize
    }

    fn run(&mut self, p: usize, lo: &[u32], hi: &[u32]) -> Result<()> {
        let (a, b) = (self.bx.a as usize, self.bx.b as usize);
        if p == a * b {
            (self.visit)(&self.heights);
            return Ok(());
        }
        let (i, j) = (p / b, p % b);
        let mut lower = 0;
        for r in i..a {
            for s in j..b {
                lower = lower.max(lo[r * b + s]);
            }
        }
        let mut upper = hi[p];
        if i > 0 {
            upper = upper.min(self.heights[p - b]);
        }
        if j > 0 {
            upper = upper.min(self.heights[p - 1]);
        }
        for v in lower..=upper {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceLimit {
                    what: "backtracking nodes".into(),
                    budget: self.budget,
                });
            }
            self.heights[p] = v;
            let mut lo2 = lo.to_vec();
            let mut hi2 = hi.to_vec();
            if self.propagate(p, (i + 1) as u32, (j + 1) as u32, v, &mut lo2, &mut hi2) {
                self.run(p + 1, &lo2, &hi2)?;
            }
        }
        Ok(())
    }

    /// Imposes the group's membership rule on the images of column `(i, j)` at height `v`.
    fn propagate(&self, p: usize, i: u32, j: u32, v: u32, lo: &mut [u32], hi: &mut [u32]) -> bool {
        for k in 1..=self.bx.c {
            let member = k <= v;
            for g in &self.maps {
                let y = g.apply(self.bx, Cell::new(i, j, k));
                let want = member ^ g.flip;
                let q = self.idx(y.i, y.j);
                if q <= p {
                    if (y.k <= self.heights[q]) != want {
                        return false;
                    }
                } else if want {
                    lo[q] = lo[q].max(y.k);
                    if lo[q] > hi[q] {
                        return false;
                    }
                } else {
                    hi[q] = hi[q].min(y.k - 1);
                    if lo[q] > hi[q] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Calls `visit` on the height matrix (row-major, flattened) of every member of
/// the class, in lexicographic order. Returns the number of search nodes.
pub fn visit_class<F: FnMut(&[u32])>(bx: BoxDims, class: SymmetryClass, budget: u64, mut visit: F) -> Result<u64> {
    let group = class.group(bx)?;
    let maps: Vec<CellMap> = group.elements().iter().copied().filter(|g| *g != CellMap::IDENTITY).collect();
    let n = (bx.a * bx.b) as usize;
    let mut search = Search {
        bx,
        maps,
        heights: vec![0; n],
        nodes: 0,
        budget,
        visit: &mut visit,
    };
    search.run(0, &vec![0; n], &vec![bx.c; n])?;
    Ok(search.nodes)
}

fn unflatten(bx: BoxDims, h: &[u32]) -> PlanePartition {
    let b = bx.b as usize;
    let rows = (0..bx.a as usize).map(|i| h[i * b..(i + 1) * b].to_vec()).collect();
    PlanePartition::from_heights_unchecked(bx, rows)
}

/// Calls `visit` on every member of the class, in lexicographic order of height matrices.
pub fn for_each_in_class<F: FnMut(&PlanePartition)>(
    bx: BoxDims,
    class: SymmetryClass,
    budget: u64,
    mut visit: F,
) -> Result<u64> {
    visit_class(bx, class, budget, |h| visit(&unflatten(bx, h)))
}

/// All members of the class, collected.
pub fn enumerate_class(bx: BoxDims, class: SymmetryClass, budget: u64) -> Result<Vec<PlanePartition>> {
    let mut out = Vec::new();
    for_each_in_class(bx, class, budget, |pp| out.push(pp.clone()))?;
    Ok(out)
}

/// Row-major flat indices and heights identifying one cell per orbit.
struct Probe {
    cells: Vec<(usize, u32)>,
}

impl Probe {
    fn new(bx: BoxDims, reps: &[Cell]) -> Self {
        let b = bx.b;
        Self {
            cells: reps.iter().map(|x| (((x.i - 1) * b + x.j - 1) as usize, x.k)).collect(),
        }
    }

    fn members<'a>(&'a self, h: &'a [u32]) -> impl Iterator<Item = bool> + 'a {
        self.cells.iter().map(move |&(q, k)| k <= h[q])
    }
}

/// One cell from each orbit of the complementation-free subgroup.
pub fn symmetry_orbit_representatives(group: &SymmetryGroup) -> Vec<Cell> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for x in group.box_dims().cells() {
        if seen.insert(x) {
            reps.push(x);
            seen.extend(group.symmetry_orbit(x));
        }
    }
    reps
}

/// Full-group orbit representatives with the reference partition's membership of each.
fn sign_probe(bx: BoxDims, class: SymmetryClass) -> Result<(Probe, Vec<bool>)> {
    if !class.has_complementation() {
        return Err(Error::Unsupported(format!("class {class} has no complementation sign")));
    }
    let group = class.group(bx)?;
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for x in bx.cells() {
        if seen.insert(x) {
            reps.push(x);
            seen.extend(group.elements().iter().map(|g| g.apply(bx, x)));
        }
    }
    let reference = reference_partition(bx, class)?;
    let ref_member = reps.iter().map(|&x| reference.contains(x)).collect();
    Ok((Probe::new(bx, &reps), ref_member))
}

/// The signed enumeration `sum_P (-1)^{n(P)}` over the class.
pub fn signed_count(bx: BoxDims, class: SymmetryClass, budget: u64) -> Result<SignedCount> {
    let (probe, ref_member) = sign_probe(bx, class)?;
    let mut total = 0i64;
    visit_class(bx, class, budget, |h| {
        let d = probe.members(h).zip(&ref_member).filter(|(m, r)| m != *r).count();
        total += if d % 2 == 0 { 1 } else { -1 };
    })?;
    Ok(SignedCount::new(BigInt::from(total), Method::Oracle, class, bx))
}

/// Sum of a weight over all members of the class.
pub fn weighted_count(bx: BoxDims, class: SymmetryClass, w: &WeightKind, budget: u64) -> Result<BigRational> {
    match w {
        WeightKind::SignedOrbits => {
            Ok(BigRational::from_integer(signed_count(bx, class, budget)?.value))
        }
        WeightKind::Plain => {
            let mut n = 0u64;
            visit_class(bx, class, budget, |_| n += 1)?;
            Ok(BigRational::from_integer(n.into()))
        }
        WeightKind::QCubes(q) => {
            let mut hist = vec![0u64; bx.cell_count() as usize + 1];
            visit_class(bx, class, budget, |h| {
                hist[h.iter().map(|&x| x as usize).sum::<usize>()] += 1;
            })?;
            Ok(polynomial_at(&hist, q))
        }
        WeightKind::QOrbits(q) => {
            let group = class.group(bx)?;
            if group.symmetries().count() == 1 {
                return Err(Error::Unsupported(format!(
                    "orbit weight needs a nontrivial symmetry group, class {class} has none"
                )));
            }
            let reps = symmetry_orbit_representatives(&group);
            let probe = Probe::new(bx, &reps);
            let mut hist = vec![0u64; reps.len() + 1];
            visit_class(bx, class, budget, |h| {
                hist[probe.members(h).filter(|&m| m).count()] += 1;
            })?;
            Ok(polynomial_at(&hist, q))
        }
    }
}

fn polynomial_at(coeffs: &[u64], q: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, &c| acc * q + BigRational::from_integer(c.into()))
}

/// Number of `n x n` alternating sign matrices invariant under left-right reflection.
///
/// Counts monotone triangles with bottom row `1..n` whose rows are all
/// symmetric under `s -> n+1-s`. Zero for even `n`.
pub fn count_vsasm(n: u32) -> Result<BigInt> {
    count_vsasm_with_limit(n, DEFAULT_VSASM_LIMIT)
}

pub fn count_vsasm_with_limit(n: u32, limit: u32) -> Result<BigInt> {
    if n.is_multiple_of(2) {
        return Ok(BigInt::zero());
    }
    if n > limit {
        return Err(Error::ResourceLimit {
            what: format!("vertically symmetric ASMs of size {n}"),
            budget: limit as u64,
        });
    }
    Ok(monotone_triangles(n, true))
}

/// Number of `n x n` alternating sign matrices, by monotone triangles.
pub fn count_asm(n: u32) -> BigInt {
    monotone_triangles(n, false)
}

fn monotone_triangles(n: u32, symmetric: bool) -> BigInt {
    fn rows_above(row: &[u32], n: u32, symmetric: bool, acc: &mut BigInt) {
        if row.len() <= 1 {
            *acc += BigInt::one();
            return;
        }
        let mut next = Vec::with_capacity(row.len() - 1);
        choose(row, 0, &mut next, n, symmetric, acc);
    }

    fn choose(row: &[u32], t: usize, next: &mut Vec<u32>, n: u32, symmetric: bool, acc: &mut BigInt) {
        if t == row.len() - 1 {
            if !symmetric || next.iter().zip(next.iter().rev()).all(|(x, y)| x + y == n + 1) {
                let above = next.clone();
                rows_above(&above, n, symmetric, acc);
            }
            return;
        }
        let start = next.last().map_or(row[t], |&p| row[t].max(p + 1));
        for v in start..=row[t + 1] {
            next.push(v);
            choose(row, t + 1, next, n, symmetric, acc);
            next.pop();
        }
    }

    if n == 0 {
        return BigInt::one();
    }
    let bottom: Vec<u32> = (1..=n).collect();
    let mut acc = BigInt::zero();
    rows_above(&bottom, n, symmetric, &mut acc);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::macmahon_box;
    use SymmetryClass::*;

    const B: u64 = DEFAULT_NODE_BUDGET;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_class(BoxDims::cube(1), Plain, B).unwrap().len(), 2);
        assert_eq!(enumerate_class(BoxDims::cube(2), SelfComplementary, B).unwrap().len(), 4);
        let tc = enumerate_class(BoxDims::cube(2), TransposeComplementary, B).unwrap();
        let hs: Vec<_> = tc.iter().map(|p| p.heights().to_vec()).collect();
        assert_eq!(hs, vec![vec![vec![1, 1], vec![1, 1]], vec![vec![2, 1], vec![1, 0]]]);
    }

    #[test]
    fn signed_examples() {
        assert_eq!(signed_count(BoxDims::new(2, 2, 2), TransposeComplementary, B).unwrap().value, 0.into());
        assert_eq!(signed_count(BoxDims::new(3, 3, 2), TransposeComplementary, B).unwrap().value, 1.into());
        assert_eq!(signed_count(BoxDims::new(2, 2, 2), SelfComplementary, B).unwrap().value, 2.into());
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(weighted_count(BoxDims::cube(1), Plain, &WeightKind::QCubes(r(1)), B).unwrap(), r(2));
        assert_eq!(weighted_count(BoxDims::cube(2), Plain, &WeightKind::QCubes(r(1)), B).unwrap(), r(20));
        let cyc = weighted_count(BoxDims::cube(2), Cyclic, &WeightKind::QOrbits(r(-1)), B).unwrap();
        let cssc = signed_count(BoxDims::cube(2), CyclicallySymmetricSelfComplementary, B).unwrap().value;
        assert_eq!(num_traits::Signed::abs(&cyc), r(1));
        assert_eq!(&cssc * &cssc, 1.into());
        assert!(matches!(
            weighted_count(BoxDims::cube(2), Plain, &WeightKind::QOrbits(r(-1)), B),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn plain_count_matches_macmahon() {
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for c in 0..=3u32 {
                    let n = weighted_count(BoxDims::new(a, b, c), Plain, &WeightKind::Plain, B).unwrap();
                    assert_eq!(n, BigRational::from_integer(macmahon_box(a as u64, b as u64, c as u64)));
                }
            }
        }
    }

    #[test]
    fn lexicographic_and_unique() {
        let all = enumerate_class(BoxDims::new(2, 3, 2), Plain, B).unwrap();
        for w in all.windows(2) {
            assert!(w[0].heights() < w[1].heights());
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            signed_count(BoxDims::cube(4), SelfComplementary, 10),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn asm_counts() {
        let asm: Vec<BigInt> = (1..=5).map(count_asm).collect();
        assert_eq!(asm, [1, 2, 7, 42, 429].map(BigInt::from).to_vec());
        assert_eq!(count_vsasm(1).unwrap(), 1.into());
        assert_eq!(count_vsasm(3).unwrap(), 1.into());
        assert_eq!(count_vsasm(2).unwrap(), 0.into());
        assert_eq!(count_vsasm(5).unwrap(), 3.into());
        assert_eq!(count_vsasm(7).unwrap(), 26.into());
        assert!(count_vsasm_with_limit(11, 9).is_err());
    }
}
