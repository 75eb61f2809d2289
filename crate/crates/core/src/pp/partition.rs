use std::fmt;

use crate::error::{Error, Result};

/// Sidelengths of the box containing a plane partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxDims {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl BoxDims {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Self { a, b, c }
    }

    /// The cube with side `n`.
    pub const fn cube(n: u32) -> Self {
        Self::new(n, n, n)
    }

    pub fn dims(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == 0 || self.b == 0 || self.c == 0
    }

    pub fn cell_count(&self) -> u64 {
        self.a as u64 * self.b as u64 * self.c as u64
    }

    /// All cells in lexicographic `(i, j, k)` order.
    pub fn cells(self) -> impl Iterator<Item = Cell> {
        let (a, b, c) = (self.a, self.b, self.c);
        (1..=a).flat_map(move |i| (1..=b).flat_map(move |j| (1..=c).map(move |k| Cell::new(i, j, k))))
    }

    pub fn contains(&self, x: Cell) -> bool {
        (1..=self.a).contains(&x.i) && (1..=self.b).contains(&x.j) && (1..=self.c).contains(&x.k)
    }
}

impl fmt::Display for BoxDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

/// A unit cube `(i, j, k)` of the box, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Cell {
    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Self { i, j, k }
    }

    pub fn coords(&self) -> [u32; 3] {
        [self.i, self.j, self.k]
    }

    pub fn from_coords(x: [u32; 3]) -> Self {
        Self::new(x[0], x[1], x[2])
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// Whether `heights` is an `a x b` array, weakly decreasing along rows and
/// columns, with entries in `[0, c]`.
pub fn is_valid_pp(heights: &[Vec<u32>], bx: BoxDims) -> Result<bool> {
    check_shape(heights, bx)?;
    for (i, row) in heights.iter().enumerate() {
        for (j, &h) in row.iter().enumerate() {
            if h > bx.c {
                return Ok(false);
            }
            if j + 1 < row.len() && row[j + 1] > h {
                return Ok(false);
            }
            if i + 1 < heights.len() && heights[i + 1][j] > h {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_shape(heights: &[Vec<u32>], bx: BoxDims) -> Result<()> {
    // A box with a = 0 or b = 0 has an empty height matrix.
    let rows_ok = heights.len() == bx.a as usize || (bx.b == 0 && heights.is_empty());
    if !rows_ok || heights.iter().any(|r| r.len() != bx.b as usize) {
        return Err(Error::Dimension(format!(
            "height array does not have shape {}x{}",
            bx.a, bx.b
        )));
    }
    Ok(())
}

/// A plane partition stored as its height matrix: `(i, j, k)` belongs to it iff `k <= h[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    bx: BoxDims,
    heights: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(bx: BoxDims, heights: Vec<Vec<u32>>) -> Result<Self> {
        if !is_valid_pp(&heights, bx)? {
            return Err(Error::InvalidInput(format!(
                "{heights:?} is not a plane partition in the {bx} box"
            )));
        }
        Ok(Self { bx, heights })
    }

    /// The empty partition.
    pub fn empty(bx: BoxDims) -> Self {
        Self::constant(bx, 0)
    }

    /// The partition with every column of height `h` (clamped to `c`).
    pub fn constant(bx: BoxDims, h: u32) -> Self {
        Self {
            bx,
            heights: vec![vec![h.min(bx.c); bx.b as usize]; bx.a as usize],
        }
    }

    /// Builds the partition from a membership predicate on cells. The result must be downward closed.
    pub fn from_cells<F: Fn(Cell) -> bool>(bx: BoxDims, member: F) -> Result<Self> {
        let heights = (1..=bx.a)
            .map(|i| {
                (1..=bx.b)
                    .map(|j| (1..=bx.c).take_while(|&k| member(Cell::new(i, j, k))).count() as u32)
                    .collect()
            })
            .collect();
        let pp = Self::new(bx, heights)?;
        if bx.cells().any(|x| member(x) != pp.contains(x)) {
            return Err(Error::InvalidInput("cell set is not downward closed".into()));
        }
        Ok(pp)
    }

    pub(crate) fn from_heights_unchecked(bx: BoxDims, heights: Vec<Vec<u32>>) -> Self {
        Self { bx, heights }
    }

    pub fn box_dims(&self) -> BoxDims {
        self.bx
    }

    pub fn heights(&self) -> &[Vec<u32>] {
        &self.heights
    }

    pub fn height(&self, i: u32, j: u32) -> u32 {
        self.heights[(i - 1) as usize][(j - 1) as usize]
    }

    pub fn contains(&self, x: Cell) -> bool {
        self.bx.contains(x) && x.k <= self.height(x.i, x.j)
    }

    pub fn cube_count(&self) -> u64 {
        self.heights.iter().flatten().map(|&h| h as u64).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.bx.cells().filter(move |&x| self.contains(x))
    }

    /// JSON array of row arrays.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.heights).expect("height matrix serializes")
    }

    pub fn from_json(bx: BoxDims, s: &str) -> Result<Self> {
        let heights: Vec<Vec<u32>> =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Self::new(bx, heights)
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B222: BoxDims = BoxDims::new(2, 2, 2);

    #[test]
    fn validity_examples() {
        assert!(is_valid_pp(&[vec![2, 1], vec![1, 0]], B222).unwrap());
        assert!(!is_valid_pp(&[vec![0, 1], vec![0, 0]], B222).unwrap());
        assert!(!is_valid_pp(&[vec![3, 0], vec![0, 0]], B222).unwrap());
        assert!(!is_valid_pp(&[vec![1, 1], vec![2, 0]], B222).unwrap());
    }

    #[test]
    fn shape_mismatch() {
        assert!(matches!(is_valid_pp(&[vec![2, 1]], B222), Err(Error::Dimension(_))));
        assert!(matches!(is_valid_pp(&[vec![2], vec![1]], B222), Err(Error::Dimension(_))));
    }

    #[test]
    fn degenerate_boxes() {
        assert!(is_valid_pp(&[], BoxDims::new(0, 3, 3)).unwrap());
        assert!(is_valid_pp(&[vec![], vec![]], BoxDims::new(2, 0, 3)).unwrap());
        assert!(is_valid_pp(&[vec![0, 0]], BoxDims::new(1, 2, 0)).unwrap());
    }

    #[test]
    fn cells_round_trip() {
        let pp = PlanePartition::new(B222, vec![vec![2, 1], vec![1, 0]]).unwrap();
        assert_eq!(pp.cube_count(), 4);
        let again = PlanePartition::from_cells(B222, |x| pp.contains(x)).unwrap();
        assert_eq!(again, pp);
        assert!(PlanePartition::from_cells(B222, |x| x.k == 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let pp = PlanePartition::new(B222, vec![vec![2, 1], vec![1, 0]]).unwrap();
        assert_eq!(pp.to_json(), "[[2,1],[1,0]]");
        assert_eq!(PlanePartition::from_json(B222, "[[2,1],[1,0]]").unwrap(), pp);
        assert!(PlanePartition::from_json(B222, "[[0,1],[0,0]]").is_err());
    }
}
