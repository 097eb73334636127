//! Gentle algebras given by quivers with relations: path bases, string and
//! band modules, projective resolutions, and the classification of
//! Gorenstein-projective modules with the matching singularity-category data.
//!
//! Modules are left modules, given as representations: a vector space per
//! vertex and a matrix per arrow. Paths are stored in traversal order; the
//! relation `Relation { second: b, first: a }` is the path "first `a`, then
//! `b`", written `b*a`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod families;
pub mod gentle;
pub mod gp;
pub mod homology;
pub mod linalg;
pub mod quiver;
pub mod representation;
pub mod string;
pub mod surface;

pub use gentle::{validate_gentle, CriticalCycle, GentleAlgebra, GentleViolation};
pub use gp::{classify_gp, gp_oracle, singularity_descriptor, GpClassification, Verdict};
pub use homology::ModuleCategory;
pub use linalg::{Field, Fp, Matrix, Rational, F2147483647};
pub use quiver::{Path, QuiverPresentation};
pub use representation::{ModuleMap, Representation};
pub use string::{BandWord, Letter, StringWord};
