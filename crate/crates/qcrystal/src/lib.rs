//! Queer supercrystal structures on factorized involution and fpf-involution
//! words: insertion algorithms, crystal operators, Little bumps, dual
//! equivalence, characters, and an exhaustive small-case verifier.

pub mod error;
pub mod bumping;
pub mod crystal;
pub mod permwords;
pub mod symchar;
pub mod insertion;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
