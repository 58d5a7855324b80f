//! Exact root-system and Weyl-group computations.
//!
//! Everything is integer arithmetic over simple-root coordinates. The main
//! entry points are [`RootSystem`], the Weyl-group operations in [`weyl`],
//! the conjugation and braid identities in [`words`], and the
//! highest-root factorizations of the longest element in [`decompose`].

pub mod decompose;
pub mod error;
pub mod matrix;
pub mod rootsys;
pub mod weyl;
pub mod words;

pub use decompose::{
    Decomposition, DecompositionFactor, FactorKind, ParabolicTower, SearchBound, VerificationReport,
};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use rootsys::{dominance_leq, Family, IndexSet, Root, RootSystem, RootSystemType};
pub use weyl::{LongestClassification, LongestKind, WeylElement, Word};
pub use words::{ConjugationCase, ConjugationRule, Sign};
