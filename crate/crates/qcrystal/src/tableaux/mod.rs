//! Shapes, plain and shifted tableaux with primed entries, reading words,
//! weights, enumeration and dual equivalence.

mod dual;
mod entry;
mod enumerate;
mod plain;
mod shifted;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use dual::{dual_equiv, star_op, tableau_descents, tableau_descents_by_cases};
pub use entry::Entry;
pub use enumerate::{partitions, semistandard, shifted_semistandard, standard_shifted, strict_partitions};
pub use plain::Tableau;
pub use shifted::ShiftedTableau;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Plain,
    Shifted,
}

/// A partition (plain) or strict partition (shifted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    parts: Vec<usize>,
    kind: ShapeKind,
}

impl Shape {
    pub fn partition(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Shape { parts, kind: ShapeKind::Plain })
    }

    pub fn strict(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a strict partition")));
        }
        Ok(Shape { parts, kind: ShapeKind::Shifted })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", p.join(","))
    }
}

/// Serialized form shared by both tableau kinds; rows bottom to top.
#[derive(Serialize, Deserialize)]
pub(crate) struct TableauRepr {
    shape: Vec<usize>,
    kind: String,
    rows: Vec<Vec<Entry>>,
}
