//! Abstract gl_n / q_n crystals: the carriers (words, factorizations, plain
//! and shifted tableaux), graph exploration, axiom checks, highest weights,
//! morphisms and isomorphism testing.

mod factorization;
mod graph;
mod morphism;
mod plain;
mod reduction;
mod shtab;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use factorization::{
    e_o, e_sp, fact_e, fact_f, f_o, f_sp, pair, FactorizationCrystal, QueerKind,
};
pub use graph::{AxiomReport, CrystalGraph, DEFAULT_VERTEX_CAP};
pub use morphism::{iso_check, morphism_check, quasi_isomorphism_check, MorphismReport};
pub use plain::TableauCrystal;
pub use reduction::{dbl, even_fpf_target, even_inv_target, inv, inv_inverse, perm_factorizations, sigma_set};
pub use shtab::{shtab_e, shtab_e_qbar, shtab_f, shtab_f_qbar, unpaired, ShiftedTableauCrystal};
pub use word::{word_e, word_e_qbar, word_f, word_f_qbar, WordCrystal};

/// A crystal operator index: `1̄` or `i ∈ [n-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrystalIndex {
    QBar,
    Gl(usize),
}

impl fmt::Display for CrystalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalIndex::QBar => write!(f, "1bar"),
            CrystalIndex::Gl(i) => write!(f, "{i}"),
        }
    }
}

impl FromStr for CrystalIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1bar" | "qbar" | "-1" => Ok(CrystalIndex::QBar),
            _ => match s.parse::<usize>() {
                Ok(i) if i > 0 => Ok(CrystalIndex::Gl(i)),
                _ => Err(Error::InvalidInput(format!("bad crystal index {s:?}"))),
            },
        }
    }
}

impl Serialize for CrystalIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CrystalIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A crystal given by its operators. `f` and `e` return `None` for the
/// usual `0`.
pub trait Crystal: Sync {
    type Elem: Clone + Ord + fmt::Display + Serialize + Send + Sync;

    /// The `n` of gl_n / q_n.
    fn rank(&self) -> usize;
    fn is_queer(&self) -> bool;
    fn weight(&self, b: &Self::Elem) -> Vec<u32>;
    fn f(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem>;
    fn e(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem>;

    /// `1̄` first (queer crystals with `n ≥ 2` only), then `1, …, n-1`. A
    /// q_1 crystal has no operators at all.
    fn indices(&self) -> Vec<CrystalIndex> {
        let n = self.rank();
        let mut v = Vec::new();
        if self.is_queer() && n >= 2 {
            v.push(CrystalIndex::QBar);
        }
        v.extend((1..n).map(CrystalIndex::Gl));
        v
    }
}
