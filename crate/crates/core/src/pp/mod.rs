//! Plane partitions in a box, their symmetry classes, orbits and signs.

mod orbits;
mod partition;
mod symmetry;

pub use orbits::{
    orbit_decomposition, orbit_difference, reference_partition, region_count, region_count_octant,
    sign_weight, Octant, Orbit, OrbitDecomposition,
};
pub use partition::{is_valid_pp, BoxDims, Cell, PlanePartition};
pub use symmetry::{CellMap, SymmetryClass, SymmetryGroup};
