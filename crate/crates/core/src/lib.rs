//! Exact construction and verification of the composihedra `CK(n)`, the
//! polytopes whose faces are domain classes of painted trees, together with
//! the associahedra `K(n)` and multiplihedra `J(n)` they are built from.
//!
//! * [`trees`]: painted trees, contraction, domain equivalence, grafting.
//! * [`counting`]: vertex and facet counts.
//! * [`realization`]: exact vertex coordinates and facet inequalities.
//! * [`hull`]: vertex enumeration, face lattices, poset isomorphism.
//! * [`complex`]: face posets built from trees.
//! * [`verify`]: checks comparing the geometric and combinatorial sides.
//! * [`export`], [`report`]: polymake and JSON output.
//!
//! ```
//! use composihedra::realization::{composihedron_vrep, WeightVector};
//!
//! let v = composihedron_vrep(4, &WeightVector::units(4)).unwrap();
//! assert_eq!(v.vertices.len(), 15);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod combinatorics;
pub mod complex;
pub mod counting;
pub mod error;
pub mod export;
pub mod hull;
pub mod realization;
pub mod report;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
