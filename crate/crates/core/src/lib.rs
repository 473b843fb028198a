//! Exact computations with monomial Burnside rings.
//!
//! Coefficients live in a finite cyclic group `C = Z/n`, written additively.
//! The crate covers subcharacters and the ring `B_C(G)`, monomial G-posets and
//! their Lefschetz invariants, and generalized tensor induction along monomial
//! bisets.

#![allow(clippy::needless_range_loop)]

pub mod burnside;
pub mod catalog;
pub mod error;
pub mod fibred;
pub mod group;
pub mod io;
pub mod lefschetz;
pub mod monomial;
pub mod poset;
pub mod random;
pub mod subchar;
pub mod tensor;
pub mod verify;

pub use burnside::BurnsideElement;
pub use error::{Error, Result};
pub use fibred::RawFibredSet;
pub use group::{Embedding, FiniteGroup, GSet, Subgroup};
pub use lefschetz::LefschetzReport;
pub use monomial::{MonomialPoset, MonomialPosetMap};
pub use poset::Poset;
pub use subchar::{SubcharTable, Subcharacter};
pub use tensor::{MonomialBiset, TensorInductionResult};
