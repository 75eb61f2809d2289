use std::collections::HashSet;

use super::partition::{BoxDims, Cell, PlanePartition};
use super::symmetry::SymmetryClass;
use crate::error::{Error, Result};

/// One orbit of the full group, split into the two halves exchanged by complementation.
///
/// `halves[0]` is the symmetry orbit of the representative (the smallest cell of the orbit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub halves: [Vec<Cell>; 2],
}

impl Orbit {
    pub fn representative(&self) -> Cell {
        self.halves[0][0]
    }

    pub fn len(&self) -> usize {
        self.halves[0].len() + self.halves[1].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The half contained in `pp` (0 or 1), judged by the representative.
    pub fn chosen_half(&self, pp: &PlanePartition) -> usize {
        usize::from(!pp.contains(self.representative()))
    }
}

/// Orbits of a complementation class acting on the cells of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub bx: BoxDims,
    pub class: SymmetryClass,
    pub orbits: Vec<Orbit>,
}

pub fn orbit_decomposition(bx: BoxDims, class: SymmetryClass) -> Result<OrbitDecomposition> {
    if !class.has_complementation() {
        return Err(Error::Unsupported(format!(
            "class {class} has no complementation, so orbits have no halves"
        )));
    }
    let group = class.group(bx)?;
    let kappa = group.complementation().expect("complementation class");
    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    for x in bx.cells() {
        if seen.contains(&x) {
            continue;
        }
        let h0 = group.symmetry_orbit(x);
        let h1 = group.symmetry_orbit(kappa.apply(bx, x));
        if h0.iter().any(|y| h1.contains(y)) {
            return Err(Error::Consistency(format!(
                "cell {x} lies in the same half as its complement"
            )));
        }
        seen.extend(h0.iter().copied());
        seen.extend(h1.iter().copied());
        orbits.push(Orbit { halves: [h0, h1] });
    }
    Ok(OrbitDecomposition { bx, class, orbits })
}

/// The partition assigned sign +1 for a complementation class.
///
/// TC, STC and SC use the half-full partition `{k <= c/2}`; for SC boxes with
/// odd `c` the box is halved along an even side instead. The cyclic classes use
/// the majority partition: cells with at least two coordinates `<= a/2`.
pub fn reference_partition(bx: BoxDims, class: SymmetryClass) -> Result<PlanePartition> {
    use SymmetryClass::*;
    class.check_box(bx)?;
    let [a, b, c] = bx.dims();
    let pp = match class {
        TransposeComplementary | SymmetricTransposeComplementary => {
            PlanePartition::constant(bx, c / 2)
        }
        SelfComplementary => {
            if c % 2 == 0 {
                PlanePartition::constant(bx, c / 2)
            } else if a % 2 == 0 {
                PlanePartition::from_cells(bx, |x| x.i <= a / 2)?
            } else {
                PlanePartition::from_cells(bx, |x| x.j <= b / 2)?
            }
        }
        CyclicallySymmetricTransposeComplementary
        | CyclicallySymmetricSelfComplementary
        | TotallySymmetricSelfComplementary => {
            let alpha = a / 2;
            PlanePartition::from_cells(bx, |x| x.coords().iter().filter(|&&v| v <= alpha).count() >= 2)?
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "class {class} has no reference partition"
            )))
        }
    };
    Ok(pp)
}

/// Number of orbits on which `pp` and the reference choose different halves.
pub fn orbit_difference(pp: &PlanePartition, class: SymmetryClass) -> Result<usize> {
    if !class.satisfies(pp)? {
        return Err(Error::InvalidInput(format!("{pp} is not in class {class}")));
    }
    let bx = pp.box_dims();
    let reference = reference_partition(bx, class)?;
    let dec = orbit_decomposition(bx, class)?;
    Ok(dec
        .orbits
        .iter()
        .filter(|o| o.chosen_half(pp) != o.chosen_half(&reference))
        .count())
}

/// `(-1)^d` where `d` is [`orbit_difference`].
pub fn sign_weight(pp: &PlanePartition, class: SymmetryClass) -> Result<i32> {
    Ok(if orbit_difference(pp, class)? % 2 == 0 { 1 } else { -1 })
}

/// An octant of the cube `2α x 2α x 2α`: each flag selects the lower half of its coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Octant {
    pub i_low: bool,
    pub j_low: bool,
    pub k_low: bool,
}

impl Octant {
    /// `{i <= α, j > α, k > α}`
    pub const CSTC_DEFAULT: Octant = Octant { i_low: true, j_low: false, k_low: false };

    pub fn contains(&self, alpha: u32, x: Cell) -> bool {
        (x.i <= alpha) == self.i_low && (x.j <= alpha) == self.j_low && (x.k <= alpha) == self.k_low
    }

    /// The six octants that are not on the main diagonal.
    pub fn off_diagonal() -> Vec<Octant> {
        let mut out = Vec::new();
        for bits in 1..7u8 {
            out.push(Octant {
                i_low: bits & 1 != 0,
                j_low: bits & 2 != 0,
                k_low: bits & 4 != 0,
            });
        }
        out
    }
}

/// Cubes of `pp` in the region whose parity gives the sign for TC, STC and CSTC.
///
/// TC counts cubes in the upper half `k > c/2`, STC additionally restricts to
/// `i <= j`, CSTC counts the [`Octant::CSTC_DEFAULT`] octant.
pub fn region_count(pp: &PlanePartition, class: SymmetryClass) -> Result<u64> {
    use SymmetryClass::*;
    let bx = pp.box_dims();
    class.check_box(bx)?;
    let half = bx.c / 2;
    let count = |f: &dyn Fn(Cell) -> bool| pp.cells().filter(|&x| f(x)).count() as u64;
    match class {
        TransposeComplementary => Ok(count(&|x| x.k > half)),
        SymmetricTransposeComplementary => Ok(count(&|x| x.k > half && x.i <= x.j)),
        CyclicallySymmetricTransposeComplementary => region_count_octant(pp, Octant::CSTC_DEFAULT),
        _ => Err(Error::Unsupported(format!("no region statistic for class {class}"))),
    }
}

/// Cubes of `pp` inside an octant of a cube box.
pub fn region_count_octant(pp: &PlanePartition, octant: Octant) -> Result<u64> {
    let bx = pp.box_dims();
    if bx.a != bx.b || bx.b != bx.c || bx.a % 2 == 1 {
        return Err(Error::Shape {
            class: "octant".into(),
            dims: bx.dims(),
            reason: "requires an even cube".into(),
        });
    }
    let alpha = bx.a / 2;
    Ok(pp.cells().filter(|&x| octant.contains(alpha, x)).count() as u64)
}
