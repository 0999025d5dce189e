//! Unshifted tableaux in French notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::entry::Entry;
use super::TableauRepr;
use crate::error::{Error, Result};
use crate::permwords::Word;

/// A tableau of partition shape with integer entries; rows listed bottom to
/// top, all starting in column 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<i32>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(rows: Vec<Vec<i32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidInput("row lengths are not a partition".into()));
        }
        Ok(Tableau { rows })
    }

    /// Parses rows written bottom to top, e.g. `"2 3 / 3 / 4"`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|t| t.parse::<i32>().map_err(|_| Error::InvalidInput(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<i32>> {
        &mut self.rows
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry in box `(x, y)`, 1-based.
    pub fn get(&self, x: usize, y: usize) -> Option<i32> {
        self.rows.get(x.checked_sub(1)?)?.get(y.checked_sub(1)?).copied()
    }

    fn cells(&self) -> impl Iterator<Item = ((usize, usize), i32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(k, &e)| ((r + 1, k + 1), e)))
    }

    /// Positive entries, rows weakly and columns strictly increasing.
    pub fn is_semistandard(&self) -> bool {
        self.cells().all(|((x, y), e)| {
            e >= 1 && self.get(x, y - 1).is_none_or(|l| l <= e) && (x == 1 || self.get(x - 1, y).is_some_and(|b| b < e))
        })
    }

    /// Rows and columns strictly increasing.
    pub fn is_increasing(&self) -> bool {
        self.cells()
            .all(|((x, y), e)| self.get(x, y - 1).is_none_or(|l| l < e) && (x == 1 || self.get(x - 1, y).is_some_and(|b| b < e)))
    }

    pub fn is_standard(&self) -> bool {
        let mut v: Vec<i32> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        self.is_increasing() && v.iter().copied().eq(1..=self.size() as i32)
    }

    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn col_word(&self) -> Word {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut v = Vec::new();
        for y in 1..=width {
            for x in (1..=self.rows.len()).rev() {
                if let Some(e) = self.get(x, y) {
                    v.push(e);
                }
            }
        }
        Word(v)
    }

    pub fn weight(&self, n: usize) -> Result<Vec<u32>> {
        let mut w = vec![0u32; n];
        for &e in self.rows.iter().flatten() {
            if e < 1 || e as usize > n {
                return Err(Error::InvalidInput(format!("entry {e} outside [1, {n}]")));
            }
            w[e as usize - 1] += 1;
        }
        Ok(w)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|e| e.to_string().len()).max().unwrap_or(1);
        for row in self.rows.iter().rev() {
            let parts: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Self> {
        if r.kind != "plain" {
            return Err(Error::InvalidInput(format!("expected a plain tableau, got kind {:?}", r.kind)));
        }
        if r.rows.iter().flatten().any(|e| e.is_primed()) {
            return Err(Error::InvalidInput("plain tableaux have no primed entries".into()));
        }
        let t = Tableau::new(r.rows.into_iter().map(|row| row.into_iter().map(Entry::value).collect()).collect())?;
        if t.shape() != r.shape {
            return Err(Error::InvalidInput("shape does not match rows".into()));
        }
        Ok(t)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            shape: t.shape(),
            kind: "plain".into(),
            rows: t.rows.into_iter().map(|r| r.into_iter().map(Entry::unprimed).collect()).collect(),
        }
    }
}
