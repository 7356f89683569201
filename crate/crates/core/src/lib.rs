//! Exact computations on topes of simple oriented matroids.
//!
//! The crate covers sign-vector basics ([`signs`]), validated tope sets and
//! tope graphs ([`tope_set`]), tope posets ([`poset`]), symmetric cycles
//! ([`cycle`]), decompositions of topes over symmetric cycles
//! ([`decomposition`]), tope committees ([`committee`]) and realizable
//! instances from rational hyperplane arrangements ([`realization`]).

pub mod cli;
pub mod committee;
pub mod cycle;
pub mod decomposition;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod poset;
pub mod realization;
pub mod signs;
pub mod tope_set;

pub use committee::{CommitteeCandidate, CriticalEnumeration};
pub use cycle::{CycleEnumeration, LSequence, SymmetricCycle};
pub use decomposition::{Decomposer, Decomposition, DoubledInverse, SignMatrix};
pub use error::{Error, Result};
pub use poset::BasedPoset;
pub use realization::Arrangement;
pub use signs::{ElementSet, GroundSize, IntegerVector, Tope};
pub use tope_set::{TopeGraph, TopeSet};
