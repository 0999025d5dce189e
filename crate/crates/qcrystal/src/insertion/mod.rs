//! Factorizations and the insertion algorithms: Edelman-Greene, orthogonal
//! and symplectic shifted EG, and Haiman mixed insertion.

mod algorithms;
mod factorization;
mod invert;

pub use algorithms::{
    eg_insert, eg_insert_unchecked, hm_insert, oeg_insert, shifted_eg_insert_unchecked, speg_insert, InsertionResult,
    LetterTrace, Line, ShiftedVariant, Step,
};
pub use factorization::Factorization;
pub use invert::{invert_eg, invert_hm, invert_shifted_eg};

use crate::error::Result;
use crate::permwords::Word;
use crate::tableaux::ShiftedTableau;

/// `P^O_EG` of a word, each letter its own factor.
pub fn p_oeg(w: &Word) -> Result<ShiftedTableau> {
    Ok(oeg_insert(&Factorization::singletons(w))?.p)
}

/// `Q^O_EG` of a word, each letter its own factor.
pub fn q_oeg(w: &Word) -> Result<ShiftedTableau> {
    Ok(oeg_insert(&Factorization::singletons(w))?.q)
}

/// `P^Sp_EG` of a word, each letter its own factor.
pub fn p_speg(w: &Word) -> Result<ShiftedTableau> {
    Ok(speg_insert(&Factorization::singletons(w))?.p)
}

/// `Q^Sp_EG` of a word, each letter its own factor.
pub fn q_speg(w: &Word) -> Result<ShiftedTableau> {
    Ok(speg_insert(&Factorization::singletons(w))?.q)
}
