//! Exact-arithmetic toolkit for graded Lie algebras with a conformal structure
//! on the degree −1 part: prolongation, derivation algebras and structural
//! analysis.

#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod composition;
pub mod error;
pub mod families;
pub mod gla;
pub mod io;
pub mod linalg;
pub mod prolongation;
pub mod rational;
pub mod roots;
pub mod verify;

pub use analysis::{analyze, AnalysisReport};
pub use composition::{AlgebraTag, CAElement, CompositionAlgebra};
pub use error::{GlaError, Result};
pub use gla::{check_fundamental, check_gla, GradedAlgebra, SymBilinearForm};
pub use linalg::{Inertia, RationalMatrix};
pub use prolongation::{
    conformal_g0, full_prolongation, grading_split, DerivationBasis, ProlongationResult,
};
pub use rational::Rational;
pub use roots::{ModuleClass, TableExpectation};
pub use verify::{verify_table, VerifyTableRow};
