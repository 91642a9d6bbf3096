//! Exact arithmetic for finite-dimensional weak bialgebras and weak Hopf
//! algebras over `Q` and `GF(p)`.
//!
//! Structures are given by structure constants in a fixed basis. Every
//! constructor verifies its laws and reports all violations with witnesses.
//! See the `examples/` directory for one program per capability.

pub mod cli;
pub mod comodule;
pub mod decompose;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod scalar;
pub mod structure;
pub mod tannaka;
pub mod weak;

pub use comodule::{Comodule, ComoduleMap, Side, TensorComodule};
pub use decompose::{decompose, direct_sum, Certificate, DecompositionReport, Splitting};
pub use document::{emit_bialgebra, parse_document, WbaDocument};
pub use error::{Error, Result, Violation};
pub use linalg::{Matrix, Subspace, Vector};
pub use scalar::{FieldSpec, Scalar};
pub use structure::{FiniteAlgebra, FiniteCoalgebra, Verdict};
pub use tannaka::{FunctorData, Reconstruction, WeakBialgebraMap};
pub use weak::{build_weak_bialgebra, CounitalMap, WeakBialgebra};
