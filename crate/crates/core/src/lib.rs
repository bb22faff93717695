//! Finite semigroups given by Cayley tables: product sets of sequences,
//! weakly and strongly idempotent-free sequences, the Erdős–Burgess and
//! Davenport constants, archimedean structure of commutative semigroups,
//! and an exhaustive small-order verification driver.

pub mod constants;
pub mod construct;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod semigroup;
pub mod seqprod;
pub mod structure;
pub mod verify;

pub use constants::{ConstantKind, ConstantReport};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use semigroup::{CyclicData, ElementId, FiniteSemigroup, MAX_ORDER};
pub use seqprod::{ProductSets, Seq};
pub use structure::{ArchDecomposition, ExtremalCertificate, Verdict};
