//! Exact computations with Leibniz algebras and their crossed modules:
//! biderivations, the actor crossed module, actions between crossed
//! modules, semidirect products, centers and inner/outer biderivations.
//!
//! Everything is generic over an exact [`Field`]: [`Rational`] for the
//! default computations and small prime fields ([`F2`], [`F3`]) for
//! exhaustive cross-checks.

pub mod action;
pub mod algebra;
pub mod bider;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod io;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod tensor;
pub mod xaction;
pub mod xmod;

pub use action::{ActionData, Semidirect};
pub use algebra::{LeibnizAlgebra, Quotient, DIM_CAP};
pub use bider::{
    actor, Actor, BiderAlgebra, BiderKind, BiderPair, BiderQuad, Lift, ShortExactSequence,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{AlgebraReport, Violation};
pub use scalar::{Field, FieldTag, Fp, Rational, F2, F3};
pub use subspace::Subspace;
pub use tensor::Bilinear;
pub use xaction::{SemidirectXMod, XModActionData};
pub use xmod::{
    Center, ConditionFlags, CrossedModule, QuotientXMod, SubCrossedModule, XModMorphism,
};
