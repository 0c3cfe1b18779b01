//! Discrete symmetries of real and complex Clifford algebras.
//!
//! Spinor representations are built from primitive idempotents; the matrices
//! W, E, C of the grade involution, reversion and Clifford conjugation are
//! then classified into one of the eight double covers C^{a,b,c} of the
//! reflection group {1, P, T, PT}.
//!
//! ```
//! use cliffsym::{classify_algebra, AlgebraSig, IdempotentSpec};
//!
//! let spec = IdempotentSpec::parse("e1,e34", "+,+").unwrap();
//! let reports = classify_algebra(AlgebraSig::real(3, 1), Some(&spec)).unwrap();
//! assert_eq!(reports[0].abc.to_string(), "(-,-,-)");
//! ```

pub mod autoclass;
pub mod blade_core;
pub mod bw;
pub mod coverings;
pub mod error;
pub mod kmatrix;
pub mod repgen;
pub mod report;
pub mod scalar;
pub mod structure;

pub use autoclass::{Abc, Cover, GroupClass, Order4Group, RepClassification};
pub use blade_core::{AlgebraSig, BladeMask, Multivector};
pub use bw::{BwClass, ClockKind, GradedAlgebra};
pub use coverings::{OppositeComparison, PinDescriptor};
pub use error::{CliffError, Result};
pub use kmatrix::{KElem, KMatrix, KRing, MatrixOps, MonoMatrix};
pub use repgen::{IdempotentSpec, SpinorRep};
pub use report::{classify_algebra, sweep, ClassificationReport, RepSummary, SweepReport};
pub use scalar::Scalar;
pub use structure::{RingTag, StructureInfo};
