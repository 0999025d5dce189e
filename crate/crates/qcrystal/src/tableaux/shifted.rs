//! Shifted tableaux in French notation: row 1 is the bottom row and row `x`
//! starts in column `x`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::entry::Entry;
use super::TableauRepr;
use crate::error::{Error, Result};
use crate::permwords::Word;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct ShiftedTableau {
    rows: Vec<Vec<Entry>>,
}

impl ShiftedTableau {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Rows listed bottom to top. Row lengths must be strictly decreasing.
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let t = ShiftedTableau { rows };
        if t.rows.iter().any(|r| r.is_empty()) || t.rows.windows(2).any(|w| w[0].len() <= w[1].len()) {
            return Err(Error::InvalidInput(format!("row lengths {:?} are not a strict partition", t.shape())));
        }
        Ok(t)
    }

    /// Parses rows written bottom to top as in `"1 2' 3 / 4"`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split('/')
            .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<Entry>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Entry>>) -> Self {
        ShiftedTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The entry in box `(x, y)`, 1-based, if that box is in the diagram.
    pub fn get(&self, x: usize, y: usize) -> Option<Entry> {
        if x == 0 || y < x {
            return None;
        }
        self.rows.get(x - 1)?.get(y - x).copied()
    }

    /// Overwrites an existing box.
    pub fn set(&mut self, x: usize, y: usize, e: Entry) {
        self.rows[x - 1][y - x] = e;
    }

    /// All boxes with their entries, row by row from the bottom.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), Entry)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(k, &e)| ((r + 1, r + 1 + k), e)))
    }

    /// Number of columns spanned by the diagram.
    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Entries of column `y` from the bottom up.
    pub fn column(&self, y: usize) -> Vec<Entry> {
        (1..=y).map_while(|x| self.get(x, y)).collect()
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Entry>> {
        &mut self.rows
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn max_value(&self) -> i32 {
        self.entries().map(Entry::value).max().unwrap_or(0)
    }

    /// Rows and columns weakly increasing, no unprimed entry repeated in a
    /// column, no primed entry repeated in a row or on the diagonal, entries
    /// positive.
    pub fn is_semistandard(&self) -> bool {
        for ((x, y), e) in self.cells() {
            if e.value() < 1 || (x == y && e.is_primed()) {
                return false;
            }
            if let Some(l) = self.get(x, y.wrapping_sub(1)) {
                if l > e || (l == e && e.is_primed()) {
                    return false;
                }
            }
            if x > 1 {
                match self.get(x - 1, y) {
                    Some(b) if b < e || (b == e && e.is_primed()) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Unprimed, rows and columns strictly increasing.
    pub fn is_increasing(&self) -> bool {
        self.cells().all(|((x, y), e)| {
            !e.is_primed()
                && self.get(x, y.wrapping_sub(1)).is_none_or(|l| l < e)
                && (x == 1 || self.get(x - 1, y).is_some_and(|b| b < e))
        })
    }

    /// Semistandard with each of `1, …, size` appearing exactly once, primed
    /// or not.
    pub fn is_standard(&self) -> bool {
        if !self.is_semistandard() {
            return false;
        }
        let vals: BTreeSet<i32> = self.entries().map(Entry::value).collect();
        vals.len() == self.size() && vals.iter().copied().eq(1..=self.size() as i32)
    }

    /// Values read row by row from the top row down, each row left to right.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().map(|e| e.value()).collect())
    }

    /// Values read column by column from the left, each column top down.
    pub fn col_word(&self) -> Word {
        let mut v = Vec::new();
        for y in 1..=self.width() {
            v.extend(self.column(y).iter().rev().map(|e| e.value()));
        }
        Word(v)
    }

    /// The boxes in the order `C_q R_q ⋯ C_1 R_1` used by the shifted reading
    /// word: primed entries of column `k` bottom up, then unprimed entries of
    /// row `k` left to right.
    pub fn shword_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in (1..=self.width()).rev() {
            for x in 1..=k {
                if let Some(e) = self.get(x, k) {
                    if e.is_primed() {
                        out.push((x, k));
                    }
                }
            }
            if let Some(row) = self.rows.get(k - 1) {
                for (j, e) in row.iter().enumerate() {
                    if !e.is_primed() {
                        out.push((k, k + j));
                    }
                }
            }
        }
        out
    }

    pub fn shword(&self) -> Word {
        Word(self.shword_boxes().into_iter().map(|(x, y)| self.get(x, y).unwrap().value()).collect())
    }

    /// `wt(T)_i` counts entries equal to `i` or `i′`, for `i ∈ [n]`.
    pub fn weight(&self, n: usize) -> Result<Vec<u32>> {
        let mut w = vec![0u32; n];
        for e in self.entries() {
            let k = e.value();
            if k < 1 || k as usize > n {
                return Err(Error::InvalidInput(format!("entry {e} outside [1, {n}]")));
            }
            w[k as usize - 1] += 1;
        }
        Ok(w)
    }

    /// The box holding `k` or `k′`.
    pub fn find_value(&self, k: i32) -> Option<((usize, usize), Entry)> {
        self.cells().find(|&(_, e)| e.value() == k)
    }

    /// Rows as strings, bottom to top.
    pub fn row_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }
}

impl fmt::Display for ShiftedTableau {
    /// French layout, top row first; each row is indented by one cell per
    /// row index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.row_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.iter().enumerate().rev() {
            let mut line = " ".repeat((width + 1) * r);
            let parts: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            line.push_str(&parts.join(" "));
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

impl TryFrom<TableauRepr> for ShiftedTableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Self> {
        if r.kind != "shifted" {
            return Err(Error::InvalidInput(format!("expected a shifted tableau, got kind {:?}", r.kind)));
        }
        let t = ShiftedTableau::new(r.rows)?;
        if t.shape() != r.shape {
            return Err(Error::InvalidInput("shape does not match rows".into()));
        }
        Ok(t)
    }
}

impl From<ShiftedTableau> for TableauRepr {
    fn from(t: ShiftedTableau) -> Self {
        TableauRepr { shape: t.shape(), kind: "shifted".into(), rows: t.rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> ShiftedTableau {
        ShiftedTableau::parse(s).unwrap()
    }

    #[test]
    fn shword_example() {
        let t = st("1 2' 4' 5 9 / 3 6' 8 / 7");
        assert_eq!(t.shword().to_string(), "467238159");
        assert!(t.is_standard());
    }

    #[test]
    fn weight_example() {
        let t = st("2 2 4' / 3 4");
        assert_eq!(t.weight(5).unwrap(), vec![0, 2, 1, 2, 0]);
        assert!(t.weight(3).is_err());
        assert_eq!(ShiftedTableau::empty().weight(2).unwrap(), vec![0, 0]);
    }

    #[test]
    fn predicates() {
        let one = st("1");
        assert!(one.is_semistandard() && one.is_increasing() && one.is_standard());
        assert!(!st("1 2 / 2'").is_semistandard());
        assert!(st("1 2' 2").is_semistandard());
        assert!(!st("1 2' 2'").is_semistandard());
        assert!(!st("1 2 / 2").is_semistandard());
        assert!(st("1 2 3 / 3").is_increasing());
        assert!(st("1 2 2 / 3").is_semistandard());
        assert!(!st("1 2 2 / 3").is_increasing());
    }

    #[test]
    fn reading_words() {
        let t = st("2 3 4 / 4 5");
        assert_eq!(t.row_word().to_string(), "45234");
        assert_eq!(t.col_word().to_string(), "24354");
        assert!(ShiftedTableau::empty().shword().is_empty());
    }

    #[test]
    fn json_roundtrip() {
        let t = st("1 2' 3' / 2 3'");
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"shape":[3,2],"kind":"shifted","rows":[["1","2'","3'"],["2","3'"]]}"#);
        assert_eq!(serde_json::from_str::<ShiftedTableau>(&j).unwrap(), t);
    }
}
