//! Combinatorics of unipotent characters of finite groups of type B and C.
//!
//! Symbols and blocks, level-2 Fock-space crystals, Murnaghan–Nakayama values,
//! almost characters, Deligne–Lusztig characters and the decomposition matrix of
//! the principal Φ₂ₙ-block of Sp₄ₙ(q) and SO₄ₙ₊₁(q).

pub mod block;
pub mod character;
pub mod closed_forms;
pub mod cuspidal;
pub mod decomp;
pub mod dl;
pub mod error;
pub mod fock;
pub mod partition;
pub mod symbol;
pub mod verify;

pub use block::{BlockContext, Regime, UnipCharLabel};
pub use character::VirtualCharacter;
pub use error::{Error, Result};
pub use partition::{Bipartition, Charge, Component, Partition, YoungBox};
pub use symbol::{ChargedSymbol, Dominance, FamilyKey};
