//! Signed ((-1)-) enumeration of plane partitions in complementation symmetry
//! classes, computed by brute force, by lattice-path determinants and
//! Pfaffians, and by product formulas.

mod count;
pub mod error;
pub mod exactalg;
pub mod formulas;
pub mod lgv;
pub mod pp;
pub mod oracle;
pub mod qseries;
pub mod verify;

pub use count::{Method, SignConvention, SignedCount};
pub use error::{Error, Result};
pub use exactalg::{ExactMatrix, ExactPolynomial, SkewMatrix};
pub use pp::{BoxDims, Cell, PlanePartition, SymmetryClass};
