//! Exact computational machinery for the representations attached to
//! gradings of the simple Lie algebras E6, F4 and G2 (theta-groups):
//! orbit classification via support subalgebras, degeneration order,
//! Borel-Weil-Bott cohomology, and Hilbert series / syzygy data for
//! orbit closures.  All arithmetic is exact (integers and rationals).

pub mod linalg;
pub mod rootsys;
pub mod grading;
pub mod schur;
pub mod bott;
pub mod vinberg;
pub mod cases;
pub mod fixtures;
pub mod closure;
pub mod geomtech;
pub mod verify;

pub use cases::CaseId;
pub use rootsys::{RootSystem, SimpleType};
