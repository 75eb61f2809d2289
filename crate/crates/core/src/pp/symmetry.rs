use std::fmt;
use std::str::FromStr;

use super::partition::{BoxDims, Cell, PlanePartition};
use crate::error::{Error, Result};

/// The ten symmetry classes of plane partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryClass {
    Plain,
    Symmetric,
    Cyclic,
    TotallySymmetric,
    SelfComplementary,
    TransposeComplementary,
    SymmetricTransposeComplementary,
    CyclicallySymmetricTransposeComplementary,
    CyclicallySymmetricSelfComplementary,
    TotallySymmetricSelfComplementary,
}

use SymmetryClass::*;

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 10] = [
        Plain,
        Symmetric,
        Cyclic,
        TotallySymmetric,
        SelfComplementary,
        TransposeComplementary,
        SymmetricTransposeComplementary,
        CyclicallySymmetricTransposeComplementary,
        CyclicallySymmetricSelfComplementary,
        TotallySymmetricSelfComplementary,
    ];

    /// The six classes that involve complementation.
    pub const COMPLEMENTARY: [SymmetryClass; 6] = [
        SelfComplementary,
        TransposeComplementary,
        SymmetricTransposeComplementary,
        CyclicallySymmetricTransposeComplementary,
        CyclicallySymmetricSelfComplementary,
        TotallySymmetricSelfComplementary,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Plain => "pp",
            Symmetric => "spp",
            Cyclic => "cspp",
            TotallySymmetric => "tspp",
            SelfComplementary => "scpp",
            TransposeComplementary => "tcpp",
            SymmetricTransposeComplementary => "stcpp",
            CyclicallySymmetricTransposeComplementary => "cstcpp",
            CyclicallySymmetricSelfComplementary => "csscpp",
            TotallySymmetricSelfComplementary => "tsscpp",
        }
    }

    pub fn has_complementation(self) -> bool {
        Self::COMPLEMENTARY.contains(&self)
    }

    fn generators(self) -> Vec<CellMap> {
        let (s, r, ksc, ktc) = (CellMap::TRANSPOSE, CellMap::ROTATE, CellMap::COMPLEMENT, CellMap::TRANSPOSE_COMPLEMENT);
        match self {
            Plain => vec![],
            Symmetric => vec![s],
            Cyclic => vec![r],
            TotallySymmetric => vec![s, r],
            SelfComplementary => vec![ksc],
            TransposeComplementary => vec![ktc],
            SymmetricTransposeComplementary => vec![s, ktc],
            CyclicallySymmetricTransposeComplementary => vec![r, ktc],
            CyclicallySymmetricSelfComplementary => vec![r, ksc],
            TotallySymmetricSelfComplementary => vec![s, r, ksc],
        }
    }

    /// Checks the class's box-shape constraint.
    pub fn check_box(self, bx: BoxDims) -> Result<()> {
        let err = |reason: &str| {
            Err(Error::Shape {
                class: self.short_name().into(),
                dims: bx.dims(),
                reason: reason.into(),
            })
        };
        let [a, b, c] = bx.dims();
        match self {
            Plain | SelfComplementary => {}
            Symmetric | TransposeComplementary | SymmetricTransposeComplementary => {
                if a != b {
                    return err("requires a = b");
                }
            }
            _ => {
                if a != b || b != c {
                    return err("requires a cube");
                }
            }
        }
        match self {
            TransposeComplementary | SymmetricTransposeComplementary if c % 2 == 1 => {
                err("requires c even")
            }
            CyclicallySymmetricTransposeComplementary
            | CyclicallySymmetricSelfComplementary
            | TotallySymmetricSelfComplementary
                if a % 2 == 1 =>
            {
                err("requires even side length")
            }
            SelfComplementary if a % 2 == 1 && b % 2 == 1 && c % 2 == 1 => {
                err("the central cube is its own complement when all sides are odd")
            }
            _ => Ok(()),
        }
    }

    /// The full group of cell maps for this class in the given box.
    pub fn group(self, bx: BoxDims) -> Result<SymmetryGroup> {
        self.check_box(bx)?;
        Ok(SymmetryGroup::generate(bx, &self.generators()))
    }

    /// Whether `pp` belongs to this class.
    pub fn satisfies(self, pp: &PlanePartition) -> Result<bool> {
        let bx = pp.box_dims();
        self.check_box(bx)?;
        let gens = self.generators();
        Ok(bx
            .cells()
            .all(|x| gens.iter().all(|g| pp.contains(g.apply(bx, x)) == (pp.contains(x) ^ g.flip))))
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for SymmetryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase();
        let key = key.strip_suffix("pp").unwrap_or(&key);
        Ok(match key {
            "" | "plain" => Plain,
            "s" | "symmetric" => Symmetric,
            "cs" | "cyclic" => Cyclic,
            "ts" => TotallySymmetric,
            "sc" => SelfComplementary,
            "tc" => TransposeComplementary,
            "stc" => SymmetricTransposeComplementary,
            "cstc" => CyclicallySymmetricTransposeComplementary,
            "cssc" => CyclicallySymmetricSelfComplementary,
            "tssc" => TotallySymmetricSelfComplementary,
            _ => return Err(Error::InvalidInput(format!("unknown symmetry class {s:?}"))),
        })
    }
}

/// A map on box cells: a coordinate permutation, optionally followed by
/// reflecting every coordinate `x -> dim + 1 - x`.
///
/// Coordinate `t` of the image is coordinate `perm[t]` of the argument.
/// Maps with `flip` set exchange a partition with its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellMap {
    pub perm: [usize; 3],
    pub flip: bool,
}

impl CellMap {
    pub const IDENTITY: CellMap = CellMap { perm: [0, 1, 2], flip: false };
    /// `(i, j, k) -> (j, i, k)`
    pub const TRANSPOSE: CellMap = CellMap { perm: [1, 0, 2], flip: false };
    /// `(i, j, k) -> (j, k, i)`
    pub const ROTATE: CellMap = CellMap { perm: [1, 2, 0], flip: false };
    /// `(i, j, k) -> (a+1-i, b+1-j, c+1-k)`
    pub const COMPLEMENT: CellMap = CellMap { perm: [0, 1, 2], flip: true };
    /// `(i, j, k) -> (a+1-j, a+1-i, c+1-k)`
    pub const TRANSPOSE_COMPLEMENT: CellMap = CellMap { perm: [1, 0, 2], flip: true };

    pub fn apply(&self, bx: BoxDims, x: Cell) -> Cell {
        let src = x.coords();
        let dims = bx.dims();
        let mut out = [0; 3];
        for t in 0..3 {
            let v = src[self.perm[t]];
            out[t] = if self.flip { dims[t] + 1 - v } else { v };
        }
        Cell::from_coords(out)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &CellMap) -> CellMap {
        CellMap {
            perm: [other.perm[self.perm[0]], other.perm[self.perm[1]], other.perm[self.perm[2]]],
            flip: self.flip ^ other.flip,
        }
    }
}

/// A finite group of cell maps, closed under composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    bx: BoxDims,
    elements: Vec<CellMap>,
}

impl SymmetryGroup {
    fn generate(bx: BoxDims, gens: &[CellMap]) -> Self {
        let mut elements = vec![CellMap::IDENTITY];
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let h = g.compose(&elements[i]);
                if !elements.contains(&h) {
                    elements.push(h);
                }
            }
            i += 1;
        }
        elements.sort();
        Self { bx, elements }
    }

    pub fn box_dims(&self) -> BoxDims {
        self.bx
    }

    pub fn elements(&self) -> &[CellMap] {
        &self.elements
    }

    /// Elements that do not involve complementation.
    pub fn symmetries(&self) -> impl Iterator<Item = &CellMap> {
        self.elements.iter().filter(|g| !g.flip)
    }

    pub fn has_complementation(&self) -> bool {
        self.elements.iter().any(|g| g.flip)
    }

    /// Orbit of `x` under the complementation-free subgroup, sorted.
    pub fn symmetry_orbit(&self, x: Cell) -> Vec<Cell> {
        let mut out: Vec<Cell> = self.symmetries().map(|g| g.apply(self.bx, x)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Some complementing element, if any.
    pub fn complementation(&self) -> Option<CellMap> {
        self.elements.iter().copied().find(|g| g.flip)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let cube = BoxDims::cube(4);
        let order = |c: SymmetryClass| c.group(cube).unwrap().elements().len();
        assert_eq!(order(Plain), 1);
        assert_eq!(order(Symmetric), 2);
        assert_eq!(order(Cyclic), 3);
        assert_eq!(order(TotallySymmetric), 6);
        assert_eq!(order(SelfComplementary), 2);
        assert_eq!(order(TransposeComplementary), 2);
        assert_eq!(order(SymmetricTransposeComplementary), 4);
        assert_eq!(order(CyclicallySymmetricTransposeComplementary), 6);
        assert_eq!(order(CyclicallySymmetricSelfComplementary), 6);
        assert_eq!(order(TotallySymmetricSelfComplementary), 12);
    }

    #[test]
    fn maps_act_as_documented() {
        let bx = BoxDims::new(3, 3, 4);
        let x = Cell::new(1, 2, 3);
        assert_eq!(CellMap::TRANSPOSE.apply(bx, x), Cell::new(2, 1, 3));
        assert_eq!(CellMap::ROTATE.apply(BoxDims::cube(3), x), Cell::new(2, 3, 1));
        assert_eq!(CellMap::COMPLEMENT.apply(bx, x), Cell::new(3, 2, 2));
        assert_eq!(CellMap::TRANSPOSE_COMPLEMENT.apply(bx, x), Cell::new(2, 3, 2));
    }

    #[test]
    fn composition_matches_application() {
        let bx = BoxDims::cube(4);
        let maps = SymmetryClass::TotallySymmetricSelfComplementary.group(bx).unwrap();
        for g in maps.elements() {
            for h in maps.elements() {
                for x in bx.cells() {
                    assert_eq!(g.compose(h).apply(bx, x), g.apply(bx, h.apply(bx, x)));
                }
            }
        }
    }

    #[test]
    fn class_examples() {
        let b222 = BoxDims::new(2, 2, 2);
        let pp = |h: Vec<Vec<u32>>| PlanePartition::new(b222, h).unwrap();
        assert!(TransposeComplementary.satisfies(&pp(vec![vec![1, 1], vec![1, 1]])).unwrap());
        assert!(SelfComplementary.satisfies(&pp(vec![vec![2, 1], vec![1, 0]])).unwrap());
        assert!(!Cyclic.satisfies(&pp(vec![vec![2, 2], vec![0, 0]])).unwrap());
        assert!(CyclicallySymmetricSelfComplementary.satisfies(&pp(vec![vec![2, 1], vec![1, 0]])).unwrap());
    }

    #[test]
    fn shape_errors() {
        let bad = |c: SymmetryClass, bx| matches!(c.check_box(bx), Err(Error::Shape { .. }));
        assert!(bad(TransposeComplementary, BoxDims::new(2, 3, 2)));
        assert!(bad(TransposeComplementary, BoxDims::new(2, 2, 3)));
        assert!(bad(CyclicallySymmetricSelfComplementary, BoxDims::cube(3)));
        assert!(bad(SelfComplementary, BoxDims::new(1, 3, 5)));
        assert!(!bad(SelfComplementary, BoxDims::new(4, 3, 5)));
        assert!(!bad(TransposeComplementary, BoxDims::new(0, 0, 4)));
    }

    #[test]
    fn parse_aliases() {
        assert_eq!("tc".parse::<SymmetryClass>().unwrap(), TransposeComplementary);
        assert_eq!("TCPP".parse::<SymmetryClass>().unwrap(), TransposeComplementary);
        assert_eq!("csscpp".parse::<SymmetryClass>().unwrap(), CyclicallySymmetricSelfComplementary);
        assert_eq!("cyclic".parse::<SymmetryClass>().unwrap(), Cyclic);
        for c in SymmetryClass::ALL {
            assert_eq!(c.short_name().parse::<SymmetryClass>().unwrap(), c);
        }
        assert!("xyz".parse::<SymmetryClass>().is_err());
    }
}
